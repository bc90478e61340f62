#include "hochkit/bicomplex.hpp"

#include "hochkit/parallel.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hochkit {

namespace {

Word concat(std::initializer_list<std::span<const int>> parts) {
  Word out;
  for (auto p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::span<const int> sub(const Word& w, std::size_t from, std::size_t to) {
  return std::span<const int>(w).subspan(from, to - from);
}

// Image of the elementary operator E_{w,v} (w -> v, coefficient c) under d1.
template <typename Sink>
void d1_image(const Algebra& a, const Word& w, const Word& v, const Rational& c, Sink&& sink) {
  const int k = static_cast<int>(w.size());
  const int l = static_cast<int>(v.size());
  const int d = a.dim();
  const Rational sigma = c * sign_of(l - 1);
  if (l >= 1) {
    for (int x = 0; x < d; ++x) {
      for (const auto& t : a.product(x, v.front())) {
        const int head[] = {x};
        const int merged[] = {t.index};
        sink(concat({head, w}), concat({merged, sub(v, 1, v.size())}), sigma * t.coeff);
      }
    }
  }
  for (int i = 1; i <= k; ++i) {
    const Rational s = sigma * sign_of(i);
    for (const auto& f : a.factorizations(w[static_cast<std::size_t>(i - 1)])) {
      const int pair[] = {f.left, f.right};
      sink(concat({sub(w, 0, i - 1), pair, sub(w, i, w.size())}), v, s * f.coeff);
    }
  }
  if (l >= 1) {
    const Rational s = sigma * sign_of(k + 1);
    for (int y = 0; y < d; ++y) {
      for (const auto& t : a.product(v.back(), y)) {
        const int tail[] = {y};
        const int merged[] = {t.index};
        sink(concat({w, tail}), concat({sub(v, 0, v.size() - 1), merged}), s * t.coeff);
      }
    }
  }
}

template <typename Sink>
void d2_image(const Algebra& a, const Word& w, const Word& v, const Rational& c, Sink&& sink) {
  const int l = static_cast<int>(v.size());
  for (int u = 0; u + 1 < l; ++u) {
    const Rational s = c * sign_of(l + u);
    for (const auto& t : a.product(v[static_cast<std::size_t>(u)], v[static_cast<std::size_t>(u + 1)])) {
      const int merged[] = {t.index};
      sink(w, concat({sub(v, 0, u), merged, sub(v, u + 2, v.size())}), s * t.coeff);
    }
  }
}

template <typename Sink>
void coupling_image(const Algebra& a, const Word& w, const Rational& c, Sink&& sink) {
  const Rational s = c * sign_of(static_cast<long long>(w.size()));
  for (int x = 0; x < a.dim(); ++x) {
    for (int y = 0; y < a.dim(); ++y) {
      for (const auto& t : a.product(x, y)) {
        const int head[] = {x};
        const int tail[] = {y};
        sink(concat({head, w, tail}), Word{t.index}, s * t.coeff);
      }
    }
  }
}

template <typename Kernel>
MultilinearOp apply_kernel(const MultilinearOp& psi, int k, int l, Kernel&& kernel) {
  std::vector<OpEntry> entries;
  auto sink = [&](Word in, Word out, Rational v) { entries.push_back({std::move(in), std::move(out), std::move(v)}); };
  for (const auto& e : psi.entries()) kernel(e, sink);
  return MultilinearOp::from_entries(psi.algebra_ptr(), k, l, entries);
}

}  // namespace

MultilinearOp d1(const MultilinearOp& psi) {
  const Algebra& a = psi.algebra();
  return apply_kernel(psi, psi.k() + 1, psi.l(),
                      [&](const OpEntry& e, auto& sink) { d1_image(a, e.in, e.out, e.value, sink); });
}

MultilinearOp d2(const MultilinearOp& psi) {
  if (psi.l() == 0) throw OperatorError("d2: operators with l = 0 have no vertical differential");
  const Algebra& a = psi.algebra();
  return apply_kernel(psi, psi.k(), psi.l() - 1,
                      [&](const OpEntry& e, auto& sink) { d2_image(a, e.in, e.out, e.value, sink); });
}

MultilinearOp row0_coupling(const MultilinearOp& psi) {
  if (psi.l() != 0) return MultilinearOp(psi.algebra_ptr(), psi.k() + 2, 1);
  const Algebra& a = psi.algebra();
  return apply_kernel(psi, psi.k() + 2, 1,
                      [&](const OpEntry& e, auto& sink) { coupling_image(a, e.in, e.value, sink); });
}

OpSum expected_bracket_with_m(const MultilinearOp& psi) {
  OpSum out;
  out.add(d1(psi));
  if (psi.l() >= 1) {
    out.add(d2(psi));
  } else {
    out.add(row0_coupling(psi));
  }
  return out;
}

OpSum bracket_with_m_decomposition(const AlgebraPtr& algebra, const MultilinearOp& psi) {
  if (!same_algebra(*algebra, psi.algebra())) throw OperatorError("decomposition: algebra mismatch");
  OpSum actual = bracket(multiplication_op(algebra), psi);
  if (!(actual == expected_bracket_with_m(psi))) {
    throw std::logic_error("[m, psi] differs from d1 psi + d2 psi for a (" + std::to_string(psi.k()) + "," +
                           std::to_string(psi.l()) + ") operator");
  }
  return actual;
}

namespace {

using Tensor = std::map<Word, Rational>;

void accumulate(Tensor& t, const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = t.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

// Value in A of the elementary cochain E_{w -> e_out} on a tensor.
Rational elementary_value(const Word& w, const Tensor& input) {
  auto it = input.find(w);
  return it == input.end() ? Rational(0) : it->second;
}

// a_i a_{i+1} merged in place (0-based i) for a basis word.
Tensor merge_at(const Algebra& a, const Word& u, std::size_t i) {
  Tensor out;
  for (const auto& t : a.product(u[i], u[i + 1])) {
    Word merged(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(i));
    merged.push_back(t.index);
    merged.insert(merged.end(), u.begin() + static_cast<std::ptrdiff_t>(i + 2), u.end());
    accumulate(out, merged, t.coeff);
  }
  return out;
}

// Evaluates a (k,1) operator on a basis word, returning a vector in A.
std::vector<Rational> evaluate(const MultilinearOp& f, const Word& u) {
  std::vector<Rational> out(static_cast<std::size_t>(f.algebra().dim()));
  const TensorShape shape(f.algebra().dim(), f.k());
  const Index col = shape.flat(u);
  for (Matrix::InnerIterator it(f.matrix(), col); it; ++it) out[static_cast<std::size_t>(it.row())] += it.value();
  return out;
}

std::vector<Rational> evaluate(const MultilinearOp& f, const Tensor& t) {
  std::vector<Rational> out(static_cast<std::size_t>(f.algebra().dim()));
  for (const auto& [word, c] : t) {
    const auto v = evaluate(f, word);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * v[i];
  }
  return out;
}

}  // namespace

Matrix hochschild_oracle_differential(const AlgebraPtr& algebra, int k) {
  if (k < 0) throw OperatorError("hochschild_oracle_differential: negative arity");
  const Algebra& a = *algebra;
  const int d = a.dim();
  const TensorShape src(d, k);
  const TensorShape dst(d, k + 1);
  std::vector<Triplet> t;
  // Column: cochain E_{w -> e_o}. Row: value of δE on input u, component r.
  for (Index wf = 0; wf < src.size(); ++wf) {
    const Word w = src.word(wf);
    for (int o = 0; o < d; ++o) {
      const Index col = wf * d + o;
      for (Index uf = 0; uf < dst.size(); ++uf) {
        const Word u = dst.word(uf);
        std::vector<Rational> value(static_cast<std::size_t>(d));
        // a_0 · E(a_1 .. a_k)
        if (Word(u.begin() + 1, u.end()) == w) {
          for (const auto& p : a.product(u.front(), o)) value[static_cast<std::size_t>(p.index)] += p.coeff;
        }
        for (int i = 1; i <= k; ++i) {
          const Rational c = elementary_value(w, merge_at(a, u, static_cast<std::size_t>(i - 1)));
          if (c != 0) value[static_cast<std::size_t>(o)] += sign_of(i) * c;
        }
        if (Word(u.begin(), u.end() - 1) == w) {
          for (const auto& p : a.product(o, u.back())) {
            value[static_cast<std::size_t>(p.index)] += sign_of(k + 1) * p.coeff;
          }
        }
        for (int r = 0; r < d; ++r) {
          if (value[static_cast<std::size_t>(r)] != 0) t.emplace_back(uf * d + r, col, value[static_cast<std::size_t>(r)]);
        }
      }
    }
  }
  return make_matrix(dst.size() * d, src.size() * d, t);
}

namespace {

// f∘g in the classical sense, evaluated input by input.
MultilinearOp circle(const MultilinearOp& f, const MultilinearOp& g) {
  const Algebra& a = f.algebra();
  const int d = a.dim();
  const int k1 = f.k(), k2 = g.k();
  const int n = k1 + k2 - 1;
  const TensorShape shape(d, n);
  std::vector<Triplet> t;
  for (Index uf = 0; uf < shape.size(); ++uf) {
    const Word u = shape.word(uf);
    std::vector<Rational> value(static_cast<std::size_t>(d));
    for (int i = 0; i < k1; ++i) {
      const Word inner(u.begin() + i, u.begin() + i + k2);
      const auto gv = evaluate(g, inner);
      Tensor arg;
      for (int x = 0; x < d; ++x) {
        if (gv[static_cast<std::size_t>(x)] == 0) continue;
        Word w(u.begin(), u.begin() + i);
        w.push_back(x);
        w.insert(w.end(), u.begin() + i + k2, u.end());
        accumulate(arg, w, gv[static_cast<std::size_t>(x)]);
      }
      const auto fv = evaluate(f, arg);
      const Rational s = sign_of(static_cast<long long>(i) * (k2 - 1));
      for (int r = 0; r < d; ++r) value[static_cast<std::size_t>(r)] += s * fv[static_cast<std::size_t>(r)];
    }
    for (int r = 0; r < d; ++r) {
      if (value[static_cast<std::size_t>(r)] != 0) t.emplace_back(r, uf, value[static_cast<std::size_t>(r)]);
    }
  }
  return MultilinearOp(f.algebra_ptr(), n, 1, make_matrix(d, shape.size(), t));
}

}  // namespace

MultilinearOp gerstenhaber_oracle(const MultilinearOp& f, const MultilinearOp& g) {
  if (f.l() != 1 || g.l() != 1) throw OperatorError("gerstenhaber_oracle: both operators must have l = 1");
  if (!same_algebra(f.algebra(), g.algebra())) throw OperatorError("gerstenhaber_oracle: algebra mismatch");
  if (f.k() + g.k() == 0) throw OperatorError("gerstenhaber_oracle: needs k1 + k2 >= 1");
  MultilinearOp out(f.algebra_ptr(), f.k() + g.k() - 1, 1);
  if (f.k() >= 1) out += circle(f, g);
  if (g.k() >= 1) out -= sign_of(static_cast<long long>(f.k() - 1) * (g.k() - 1)) * circle(g, f);
  return out;
}

std::vector<Matrix> bar_complex(const AlgebraPtr& algebra, int max_power) {
  const Algebra& a = *algebra;
  const int d = a.dim();
  std::vector<Matrix> out;
  for (int l = 1; l <= max_power; ++l) {
    const TensorShape src(d, l);
    const TensorShape dst(d, l - 1);
    std::vector<Triplet> t;
    for (Index uf = 0; uf < src.size(); ++uf) {
      const Word u = src.word(uf);
      for (int i = 1; i < l; ++i) {
        for (const auto& [w, c] : merge_at(a, u, static_cast<std::size_t>(i - 1))) {
          t.emplace_back(dst.flat(w), uf, sign_of(i - 1) * c);
        }
      }
    }
    out.push_back(make_matrix(dst.size(), src.size(), t));
  }
  return out;
}

std::string describe(const Window& window) {
  std::ostringstream os;
  if (const auto* r = std::get_if<RectWindow>(&window)) {
    os << "K=" << r->K << ",L=" << r->L;
  } else {
    const auto& b = std::get<BidegreeWindow>(window);
    os << "p=" << b.p << ",q=" << b.q;
  }
  return os.str();
}

Slot::Slot(TensorBasis in, TensorBasis out) : in_(std::move(in)), out_(std::move(out)) {}

Index Slot::position(Index in_flat, Index out_flat) const {
  const Index i = in_.position_of_flat(in_flat);
  if (i < 0) return -1;
  const Index o = out_.position_of_flat(out_flat);
  if (o < 0) return -1;
  return i * out_.size() + o;
}

MultilinearOp Slot::element(const AlgebraPtr& algebra, Index position) const {
  const Index i = position / out_.size();
  const Index o = position % out_.size();
  return MultilinearOp::from_entries(algebra, k(), l(), {{in_[i], out_[o], Rational(1)}});
}

DenseVector Slot::coordinates(const MultilinearOp& op) const {
  if (op.k() != k() || op.l() != l()) throw OperatorError("Slot::coordinates: bi-arity mismatch");
  DenseVector v = DenseVector::Zero(size());
  for (const auto& e : triplets_of(op.matrix())) {
    const Index p = position(e.col(), e.row());
    if (p < 0) throw OperatorError("Slot::coordinates: operator has entries outside the slot");
    v(p) = e.value();
  }
  return v;
}

namespace {

template <typename Kernel>
Matrix slot_map(const Algebra& a, const Slot& src, const Slot* dst, Kernel&& kernel) {
  if (dst == nullptr) return Matrix(0, src.size());
  const TensorShape in_shape(a.dim(), dst->k());
  const TensorShape out_shape(a.dim(), dst->l());
  std::vector<Triplet> t;
  for (Index i = 0; i < src.in().size(); ++i) {
    for (Index o = 0; o < src.out().size(); ++o) {
      const Index col = i * src.out().size() + o;
      auto sink = [&](const Word& in, const Word& out, const Rational& c) {
        const Index row = dst->position(in_shape.flat(in), out_shape.flat(out));
        if (row >= 0) t.emplace_back(row, col, c);
      };
      kernel(src.in()[i], src.out()[o], sink);
    }
  }
  return make_matrix(dst->size(), src.size(), t);
}

}  // namespace

Bicomplex Bicomplex::assemble(AlgebraPtr algebra, const Window& window, int parallelism) {
  Bicomplex b;
  const Algebra& a = *algebra;
  std::optional<int> in_degree, out_degree;
  if (const auto* r = std::get_if<RectWindow>(&window)) {
    if (r->K < 0 || r->L < 0) throw WindowError("rectangular window needs K, L >= 0");
    b.max_k_ = r->K;
    b.max_l_ = r->L;
  } else {
    const auto& w = std::get<BidegreeWindow>(window);
    if (w.p < 0 || w.q < 0) throw WindowError("bidegree window needs p, q >= 0");
    if (!a.is_graded()) throw WindowError("bidegree window requires a graded algebra");
    for (int i = 0; i < a.dim(); ++i) {
      if (a.degree(i) < 1) throw WindowError("bidegree window requires all basis degrees >= 1");
    }
    if (a.truncation_degree() && std::max(w.p, w.q) > *a.truncation_degree()) {
      throw WindowError("bidegree (" + std::to_string(w.p) + "," + std::to_string(w.q) +
                        ") exceeds the truncation degree " + std::to_string(*a.truncation_degree()));
    }
    b.max_k_ = w.p;
    b.max_l_ = w.q;
    in_degree = w.p;
    out_degree = w.q;
  }
  b.algebra_ = std::move(algebra);
  b.window_ = window;

  const int cols = b.max_k_ + 1;
  const std::size_t count = static_cast<std::size_t>(cols * (b.max_l_ + 1));
  std::vector<std::optional<TensorBasis>> in_bases(static_cast<std::size_t>(cols));
  std::vector<std::optional<TensorBasis>> out_bases(static_cast<std::size_t>(b.max_l_ + 1));
  for (int k = 0; k <= b.max_k_; ++k) in_bases[static_cast<std::size_t>(k)] = tensor_basis(a, k, in_degree);
  for (int l = 0; l <= b.max_l_; ++l) out_bases[static_cast<std::size_t>(l)] = tensor_basis(a, l, out_degree);
  b.slots_.reserve(count);
  for (int l = 0; l <= b.max_l_; ++l) {
    for (int k = 0; k <= b.max_k_; ++k) {
      b.slots_.emplace_back(*in_bases[static_cast<std::size_t>(k)], *out_bases[static_cast<std::size_t>(l)]);
    }
  }
  b.d1_.resize(count);
  b.d2_.resize(count);
  parallel_for(count, parallelism, [&](std::size_t idx) {
    const int k = static_cast<int>(idx) % cols;
    const int l = static_cast<int>(idx) / cols;
    const Slot& src = b.slots_[idx];
    const Slot* right = k < b.max_k_ ? &b.slots_[b.index(k + 1, l)] : nullptr;
    const Slot* down = l > 0 ? &b.slots_[b.index(k, l - 1)] : nullptr;
    b.d1_[idx] = slot_map(a, src, right, [&](const Word& w, const Word& v, auto& sink) {
      d1_image(a, w, v, Rational(1), sink);
    });
    b.d2_[idx] = slot_map(a, src, down, [&](const Word& w, const Word& v, auto& sink) {
      d2_image(a, w, v, Rational(1), sink);
    });
  });

  auto where = [](const char* what, int k, int l) {
    return std::string(what) + " fails at (k,l) = (" + std::to_string(k) + "," + std::to_string(l) + ")";
  };
  for (int l = 0; l <= b.max_l_; ++l) {
    for (int k = 0; k <= b.max_k_; ++k) {
      if (k + 2 <= b.max_k_) {
        Matrix c = b.d1_map(k + 1, l) * b.d1_map(k, l);
        if (!is_zero(c)) throw NotAComplex(where("d1 d1 = 0", k, l));
      }
      if (l >= 2) {
        Matrix c = b.d2_map(k, l - 1) * b.d2_map(k, l);
        if (!is_zero(c)) throw NotAComplex(where("d2 d2 = 0", k, l));
      }
      if (l >= 1 && k + 1 <= b.max_k_) {
        Matrix c = b.d2_map(k + 1, l) * b.d1_map(k, l);
        Matrix e = b.d1_map(k, l - 1) * b.d2_map(k, l);
        c += e;
        if (!is_zero(c)) throw NotAComplex(where("d1 d2 + d2 d1 = 0", k, l));
      }
    }
  }
  return b;
}

std::size_t Bicomplex::index(int k, int l) const {
  return static_cast<std::size_t>(l * (max_k_ + 1) + k);
}

bool Bicomplex::contains(int k, int l) const { return k >= 0 && l >= 0 && k <= max_k_ && l <= max_l_; }

const Slot& Bicomplex::slot(int k, int l) const {
  if (!contains(k, l)) throw WindowError("slot (" + std::to_string(k) + "," + std::to_string(l) + ") is outside the window");
  return slots_[index(k, l)];
}

Index Bicomplex::dim(int k, int l) const { return contains(k, l) ? slots_[index(k, l)].size() : 0; }

const Matrix& Bicomplex::d1_map(int k, int l) const {
  slot(k, l);
  return d1_[index(k, l)];
}

const Matrix& Bicomplex::d2_map(int k, int l) const {
  slot(k, l);
  return d2_[index(k, l)];
}

std::vector<int> Bicomplex::total_degrees() const {
  std::vector<int> out;
  for (int i = -max_l_; i <= max_k_; ++i) out.push_back(i);
  return out;
}

Index Bicomplex::total_dim(int i) const {
  Index n = 0;
  for (int k = 0; k <= max_k_; ++k) n += dim(k, k - i);
  return n;
}

Matrix Bicomplex::total_differential(int i) const {
  // Block offsets of degree i (source) and degree i+1 (target), by k.
  std::map<int, Index> src_off, dst_off;
  Index src_n = 0, dst_n = 0;
  for (int k = 0; k <= max_k_; ++k) {
    if (contains(k, k - i)) {
      src_off[k] = src_n;
      src_n += dim(k, k - i);
    }
    if (contains(k, k - i - 1)) {
      dst_off[k] = dst_n;
      dst_n += dim(k, k - i - 1);
    }
  }
  std::vector<Triplet> t;
  for (const auto& [k, off] : src_off) {
    const int l = k - i;
    if (auto it = dst_off.find(k + 1); it != dst_off.end()) {
      for (const auto& e : triplets_of(d1_map(k, l))) t.emplace_back(it->second + e.row(), off + e.col(), e.value());
    }
    if (auto it = dst_off.find(k); it != dst_off.end()) {
      for (const auto& e : triplets_of(d2_map(k, l))) t.emplace_back(it->second + e.row(), off + e.col(), e.value());
    }
  }
  return make_matrix(dst_n, src_n, t);
}

namespace {

std::map<int, Index> cohomology_by_degree(const Bicomplex& b, int parallelism) {
  const auto degrees = b.total_degrees();
  // rank of D_i for i in [first - 1, last].
  const int first = degrees.front() - 1;
  std::vector<Index> ranks(degrees.size() + 1);
  parallel_for(ranks.size(), parallelism, [&](std::size_t j) {
    ranks[j] = rank(b.total_differential(first + static_cast<int>(j)));
  });
  std::map<int, Index> out;
  for (std::size_t j = 0; j < degrees.size(); ++j) {
    out[degrees[j]] = b.total_dim(degrees[j]) - ranks[j + 1] - ranks[j];
  }
  return out;
}

}  // namespace

CohomologyTable total_cohomology(const Bicomplex& b, int parallelism) {
  CohomologyTable table{b.window(), cohomology_by_degree(b, parallelism), {}, {}};
  for (int l = 0; l <= b.max_l(); ++l) {
    for (int k = 0; k <= b.max_k(); ++k) table.slot_dims[{k, l}] = b.dim(k, l);
  }
  if (std::holds_alternative<BidegreeWindow>(b.window())) {
    for (const auto& [i, dim] : table.by_total_degree) table.reliable.insert(i);
    return table;
  }
  const auto& r = std::get<RectWindow>(b.window());
  const auto wider = cohomology_by_degree(Bicomplex::assemble(b.algebra_ptr(), RectWindow{r.K + 1, r.L}, parallelism),
                                          parallelism);
  const auto taller = cohomology_by_degree(Bicomplex::assemble(b.algebra_ptr(), RectWindow{r.K, r.L + 1}, parallelism),
                                           parallelism);
  for (const auto& [i, dim] : table.by_total_degree) {
    if (wider.at(i) == dim && taller.at(i) == dim) table.reliable.insert(i);
  }
  return table;
}

}  // namespace hochkit
