#include "hochkit/operators.hpp"

#include <algorithm>
#include <string>

namespace hochkit {

namespace {

void check_arity(int k, int l) {
  if (k < 0 || l < 0) throw OperatorError("operator arities must be non-negative");
}

}  // namespace

MultilinearOp::MultilinearOp(AlgebraPtr algebra, int k, int l)
    : algebra_(std::move(algebra)), k_(k), l_(l) {
  check_arity(k, l);
  matrix_ = Matrix(tensor_size(algebra_->dim(), l), tensor_size(algebra_->dim(), k));
}

MultilinearOp::MultilinearOp(AlgebraPtr algebra, int k, int l, Matrix matrix)
    : algebra_(std::move(algebra)), k_(k), l_(l), matrix_(std::move(matrix)) {
  check_arity(k, l);
  if (matrix_.rows() != tensor_size(algebra_->dim(), l) || matrix_.cols() != tensor_size(algebra_->dim(), k)) {
    throw OperatorError("operator matrix shape does not match its tensor bases");
  }
  prune_zeros(matrix_);
}

MultilinearOp MultilinearOp::identity(AlgebraPtr algebra, int k) {
  const Index n = tensor_size(algebra->dim(), k);
  return MultilinearOp(std::move(algebra), k, k, identity_matrix(n));
}

MultilinearOp MultilinearOp::scalar(AlgebraPtr algebra, const Rational& c) {
  return MultilinearOp(std::move(algebra), 0, 0, make_matrix(1, 1, {Triplet(0, 0, c)}));
}

MultilinearOp MultilinearOp::from_entries(AlgebraPtr algebra, int k, int l, const std::vector<OpEntry>& entries) {
  check_arity(k, l);
  const TensorShape in(algebra->dim(), k);
  const TensorShape out(algebra->dim(), l);
  std::vector<Triplet> t;
  t.reserve(entries.size());
  for (const auto& e : entries) {
    if (static_cast<int>(e.in.size()) != k || static_cast<int>(e.out.size()) != l) {
      throw OperatorError("operator entry has the wrong multi-index length");
    }
    for (int letter : e.in) {
      if (letter < 0 || letter >= algebra->dim()) throw OperatorError("basis index out of range");
    }
    for (int letter : e.out) {
      if (letter < 0 || letter >= algebra->dim()) throw OperatorError("basis index out of range");
    }
    t.emplace_back(out.flat(e.out), in.flat(e.in), e.value);
  }
  Matrix m = make_matrix(out.size(), in.size(), t);
  return MultilinearOp(std::move(algebra), k, l, std::move(m));
}

Rational MultilinearOp::entry(const Word& in, const Word& out) const {
  const TensorShape ins(algebra_->dim(), k_);
  const TensorShape outs(algebra_->dim(), l_);
  return matrix_.coeff(outs.flat(out), ins.flat(in));
}

std::vector<OpEntry> MultilinearOp::entries() const {
  const TensorShape ins(algebra_->dim(), k_);
  const TensorShape outs(algebra_->dim(), l_);
  std::vector<OpEntry> out;
  for (const auto& t : triplets_of(matrix_)) {
    out.push_back({ins.word(t.col()), outs.word(t.row()), t.value()});
  }
  // Column-major traversal already yields (in, out) lexicographic order.
  return out;
}

void MultilinearOp::check_compatible(const MultilinearOp& other) const {
  if (!same_algebra(*algebra_, *other.algebra_)) throw OperatorError("operators live over different algebras");
  if (k_ != other.k_ || l_ != other.l_) throw OperatorError("operator bi-arities differ");
}

MultilinearOp& MultilinearOp::operator+=(const MultilinearOp& other) {
  check_compatible(other);
  matrix_ += other.matrix_;
  prune_zeros(matrix_);
  return *this;
}

MultilinearOp& MultilinearOp::operator-=(const MultilinearOp& other) {
  check_compatible(other);
  matrix_ -= other.matrix_;
  prune_zeros(matrix_);
  return *this;
}

MultilinearOp& MultilinearOp::operator*=(const Rational& c) {
  matrix_ *= c;
  prune_zeros(matrix_);
  return *this;
}

MultilinearOp operator+(MultilinearOp a, const MultilinearOp& b) { return a += b; }
MultilinearOp operator-(MultilinearOp a, const MultilinearOp& b) { return a -= b; }
MultilinearOp operator-(MultilinearOp a) { return a *= Rational(-1); }
MultilinearOp operator*(const Rational& c, MultilinearOp a) { return a *= c; }

bool operator==(const MultilinearOp& a, const MultilinearOp& b) {
  return same_algebra(a.algebra(), b.algebra()) && a.k() == b.k() && a.l() == b.l() &&
         equal(a.matrix(), b.matrix());
}

bool same_algebra(const Algebra& a, const Algebra& b) { return a.same_as(b); }

MultilinearOp multiplication_op(AlgebraPtr algebra) {
  const int d = algebra->dim();
  std::vector<Triplet> t;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (const auto& p : algebra->product(i, j)) t.emplace_back(p.index, i * d + j, p.coeff);
    }
  }
  Matrix m = make_matrix(d, static_cast<Index>(d) * d, t);
  return MultilinearOp(std::move(algebra), 2, 1, std::move(m));
}

OpSum::OpSum(const MultilinearOp& op) { add(op); }

const MultilinearOp* OpSum::component(int k, int l) const {
  auto it = components_.find({k, l});
  return it == components_.end() ? nullptr : &it->second;
}

void OpSum::add(const MultilinearOp& op) {
  if (!components_.empty() && !same_algebra(components_.begin()->second.algebra(), op.algebra())) {
    throw OperatorError("OpSum components must share one algebra");
  }
  if (op.is_zero()) return;
  auto it = components_.find(op.arity());
  if (it == components_.end()) {
    components_.emplace(op.arity(), op);
    return;
  }
  it->second += op;
  if (it->second.is_zero()) components_.erase(it);
}

OpSum& OpSum::operator+=(const OpSum& other) {
  for (const auto& [key, op] : other.components_) add(op);
  return *this;
}

OpSum& OpSum::operator-=(const OpSum& other) {
  for (const auto& [key, op] : other.components_) add(Rational(-1) * op);
  return *this;
}

OpSum& OpSum::operator*=(const Rational& c) {
  if (c == 0) {
    components_.clear();
    return *this;
  }
  for (auto& [key, op] : components_) op *= c;
  return *this;
}

OpSum operator+(OpSum a, const OpSum& b) { return a += b; }
OpSum operator-(OpSum a, const OpSum& b) { return a -= b; }
OpSum operator*(const Rational& c, OpSum a) { return a *= c; }

bool operator==(const OpSum& a, const OpSum& b) {
  if (a.components().size() != b.components().size()) return false;
  for (const auto& [key, op] : a.components()) {
    const MultilinearOp* other = b.component(key.first, key.second);
    if (other == nullptr || !(op == *other)) return false;
  }
  return true;
}

namespace {

void append_embedded(const MultilinearOp& psi, int lead, int trail, const Rational& scale,
                     std::vector<Triplet>& out) {
  const int d = psi.algebra().dim();
  const Index lead_size = tensor_size(d, lead);
  const Index trail_size = tensor_size(d, trail);
  const Index in_size = tensor_size(d, psi.k());
  const Index out_size = tensor_size(d, psi.l());
  const auto entries = triplets_of(psi.matrix());
  out.reserve(out.size() + entries.size() * static_cast<std::size_t>(lead_size * trail_size));
  for (const auto& e : entries) {
    const Rational v = scale * e.value();
    for (Index p = 0; p < lead_size; ++p) {
      const Index in_head = (p * in_size + e.col()) * trail_size;
      const Index out_head = (p * out_size + e.row()) * trail_size;
      for (Index s = 0; s < trail_size; ++s) out.emplace_back(out_head + s, in_head + s, v);
    }
  }
}

Matrix zero_insertion(const MultilinearOp& psi, int n) {
  const int d = psi.algebra().dim();
  const int out_len = n - psi.k() + psi.l();
  return Matrix(tensor_size(d, std::max(out_len, 0)), tensor_size(d, n));
}

Matrix insertion_unchecked(const MultilinearOp& psi, int n) {
  if (n < psi.k()) return zero_insertion(psi, n);
  const int d = psi.algebra().dim();
  std::vector<Triplet> t;
  for (int lead = 0; lead + psi.k() <= n; ++lead) {
    const int trail = n - psi.k() - lead;
    append_embedded(psi, lead, trail, sign_of(static_cast<long long>(trail) * psi.degree()), t);
  }
  return make_matrix(tensor_size(d, n - psi.k() + psi.l()), tensor_size(d, n), t);
}

}  // namespace

Matrix embed(const MultilinearOp& psi, int lead, int trail) {
  if (lead < 0 || trail < 0) throw OperatorError("embed: negative padding");
  const int d = psi.algebra().dim();
  std::vector<Triplet> t;
  append_embedded(psi, lead, trail, Rational(1), t);
  return make_matrix(tensor_size(d, lead + psi.l() + trail), tensor_size(d, lead + psi.k() + trail), t);
}

Matrix insertion(const MultilinearOp& psi, int n) {
  if (n < psi.k()) {
    throw OperatorError("insertion: N = " + std::to_string(n) + " is smaller than k = " + std::to_string(psi.k()));
  }
  return insertion_unchecked(psi, n);
}

Matrix insertion(const OpSum& sum, const Algebra& algebra, int degree, int n) {
  const int d = algebra.dim();
  Matrix total(tensor_size(d, n - degree), tensor_size(d, n));
  for (const auto& [key, op] : sum.components()) {
    if (op.degree() != degree) throw OperatorError("insertion: OpSum component has the wrong degree");
    if (op.k() > n) continue;
    total += insertion_unchecked(op, n);
  }
  prune_zeros(total);
  return total;
}

MultilinearOp compose_overlap(const MultilinearOp& f, const MultilinearOp& g, int s) {
  if (!same_algebra(f.algebra(), g.algebra())) throw OperatorError("compose_overlap: algebra mismatch");
  const int kf = f.k(), lf = f.l(), kg = g.k(), lg = g.l();
  if (s < 0 || s > std::min(kf, lg)) {
    throw OperatorError("compose_overlap: s = " + std::to_string(s) + " outside 0.." +
                        std::to_string(std::min(kf, lg)));
  }
  const int block_in = kf + kg - s;
  const int block_mid = block_in - kg + lg;
  const int block_out = lf + lg - s;
  const int d = f.algebra().dim();
  Matrix total(tensor_size(d, block_out), tensor_size(d, block_in));

  // u: offset of f's input window relative to g's output window in the
  // intermediate word. Connected configurations have -kf < u < lg.
  for (int u = -kf + 1; u <= lg - 1; ++u) {
    const int overlap = std::min(u + kf, lg) - std::max(u, 0);
    if (overlap != s) continue;
    const int g_lead = std::max(0, -u);
    const int f_lead = std::max(0, u);
    const int g_trail = block_in - g_lead - kg;
    const int f_trail = block_mid - f_lead - kf;
    const Rational sign = sign_of(static_cast<long long>(g_trail) * g.degree() +
                                  static_cast<long long>(f_trail) * f.degree());
    Matrix term = embed(f, f_lead, f_trail) * embed(g, g_lead, g_trail);
    total += sign * term;
  }
  // f with no inputs dropped exactly where g (with no outputs) acted: one
  // term of i(f)i(g) matches two terms of i(g)i(f) and the excess survives.
  if (s == 0 && kf == 0 && lg == 0) {
    Matrix term = f.matrix() * g.matrix();
    total -= term;
  }
  prune_zeros(total);
  return MultilinearOp(f.algebra_ptr(), block_in, block_out, std::move(total));
}

OpSum bracket(const MultilinearOp& f, const MultilinearOp& g) { return bracket(OpSum(f), OpSum(g)); }

OpSum bracket(const OpSum& a, const OpSum& b) {
  if (!a.is_zero() && !b.is_zero() &&
      !same_algebra(a.components().begin()->second.algebra(), b.components().begin()->second.algebra())) {
    throw OperatorError("bracket: algebra mismatch");
  }
  OpSum result;
  for (const auto& [ka, f] : a.components()) {
    for (const auto& [kb, g] : b.components()) {
      const Rational eps = sign_of(static_cast<long long>(f.degree()) * g.degree());
      for (int s = 0; s <= std::min(f.k(), g.l()); ++s) result.add(compose_overlap(f, g, s));
      for (int s = 0; s <= std::min(g.k(), f.l()); ++s) result.add(-eps * compose_overlap(g, f, s));
    }
  }
  return result;
}

Matrix insertion_commutator_oracle(const MultilinearOp& f, const MultilinearOp& g, int n) {
  if (!same_algebra(f.algebra(), g.algebra())) throw OperatorError("oracle: algebra mismatch");
  if (n < f.k() + g.k()) {
    throw OperatorError("insertion_commutator_oracle: N must be at least k(f) + k(g)");
  }
  const Rational eps = sign_of(static_cast<long long>(f.degree()) * g.degree());
  Matrix fg = insertion_unchecked(f, n - g.degree()) * insertion_unchecked(g, n);
  Matrix gf = insertion_unchecked(g, n - f.degree()) * insertion_unchecked(f, n);
  Matrix out = fg - eps * gf;
  prune_zeros(out);
  return out;
}

Matrix linear_map_matrix(const AlgebraPtr& algebra, int k, int l, int target_k, int target_l,
                         const std::function<MultilinearOp(const MultilinearOp&)>& map) {
  const int d = algebra->dim();
  const Index in_k = tensor_size(d, k), out_l = tensor_size(d, l);
  const Index tin = tensor_size(d, target_k), tout = tensor_size(d, target_l);
  std::vector<Triplet> t;
  for (Index in = 0; in < in_k; ++in) {
    for (Index out = 0; out < out_l; ++out) {
      MultilinearOp basis(algebra, k, l, make_matrix(out_l, in_k, {Triplet(out, in, Rational(1))}));
      const MultilinearOp image = map(basis);
      if (image.k() != target_k || image.l() != target_l) {
        throw OperatorError("linear_map_matrix: map produced an unexpected bi-arity");
      }
      const Index col = in * out_l + out;
      for (const auto& e : triplets_of(image.matrix())) t.emplace_back(e.col() * tout + e.row(), col, e.value());
    }
  }
  return make_matrix(tin * tout, in_k * out_l, t);
}

DenseVector vectorize(const MultilinearOp& op) {
  const Index rows = op.matrix().rows();
  DenseVector v = DenseVector::Zero(op.matrix().rows() * op.matrix().cols());
  for (const auto& e : triplets_of(op.matrix())) v(e.col() * rows + e.row()) = e.value();
  return v;
}

}  // namespace hochkit
