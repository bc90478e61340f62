#include "hochkit/exactla.hpp"

#include <algorithm>
#include <charconv>
#include <string>
#include <unordered_map>

namespace hochkit {

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer in rational literal");
    std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("bad integer in rational literal");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw std::invalid_argument("bad integer in rational literal: " + std::string(s));
      }
    }
    std::string digits(s.front() == '+' ? s.substr(1) : s);
    return Integer(digits);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer num = parse_int(trim(text.substr(0, slash)));
  Integer den = parse_int(trim(text.substr(slash + 1)));
  if (den == 0) throw std::invalid_argument("zero denominator in rational literal");
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Matrix make_matrix(Index rows, Index cols, const std::vector<Triplet>& entries) {
  Matrix m(rows, cols);
  m.setFromTriplets(entries.begin(), entries.end());
  prune_zeros(m);
  return m;
}

void prune_zeros(Matrix& m) {
  m.prune([](Index, Index, const Rational& v) { return v != 0; });
  m.makeCompressed();
}

Matrix identity_matrix(Index n) {
  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) t.emplace_back(i, i, Rational(1));
  return make_matrix(n, n, t);
}

bool is_zero(const Matrix& m) {
  for (Index c = 0; c < m.outerSize(); ++c) {
    for (Matrix::InnerIterator it(m, c); it; ++it) {
      if (it.value() != 0) return false;
    }
  }
  return true;
}

bool equal(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  Matrix diff = a - b;
  return is_zero(diff);
}

std::vector<Triplet> triplets_of(const Matrix& m) {
  std::vector<Triplet> out;
  out.reserve(static_cast<std::size_t>(m.nonZeros()));
  for (Index c = 0; c < m.outerSize(); ++c) {
    for (Matrix::InnerIterator it(m, c); it; ++it) {
      if (it.value() != 0) out.emplace_back(it.row(), it.col(), it.value());
    }
  }
  return out;
}

DenseMatrix to_dense(const Matrix& m) {
  DenseMatrix d = DenseMatrix::Zero(m.rows(), m.cols());
  for (Index c = 0; c < m.outerSize(); ++c) {
    for (Matrix::InnerIterator it(m, c); it; ++it) d(it.row(), it.col()) = it.value();
  }
  return d;
}

Matrix to_sparse(const DenseMatrix& m) {
  std::vector<Triplet> t;
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      if (m(r, c) != 0) t.emplace_back(r, c, m(r, c));
    }
  }
  return make_matrix(m.rows(), m.cols(), t);
}

namespace {

using IntegerMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

// Drops empty rows/columns and clears denominators row by row.
IntegerMatrix integerize(const Matrix& m) {
  std::vector<Index> row_map(static_cast<std::size_t>(m.rows()), -1);
  std::vector<Index> col_map(static_cast<std::size_t>(m.cols()), -1);
  Index nr = 0;
  Index nc = 0;
  const auto entries = triplets_of(m);
  for (const auto& t : entries) {
    if (row_map[t.row()] < 0) row_map[t.row()] = nr++;
    if (col_map[t.col()] < 0) col_map[t.col()] = nc++;
  }
  // Keep the original column order so elimination is deterministic.
  {
    Index next = 0;
    for (auto& c : col_map) {
      if (c >= 0) c = next++;
    }
  }
  std::vector<Integer> row_lcm(static_cast<std::size_t>(nr), Integer(1));
  for (const auto& t : entries) {
    auto& l = row_lcm[row_map[t.row()]];
    l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(t.value()));
  }
  IntegerMatrix out = IntegerMatrix::Zero(nr, nc);
  for (const auto& t : entries) {
    const Index r = row_map[t.row()];
    const Rational scaled = t.value() * Rational(row_lcm[r]);
    out(r, col_map[t.col()]) = boost::multiprecision::numerator(scaled);
  }
  return out;
}

}  // namespace

namespace {

using SparseRow = std::vector<std::pair<Index, Rational>>;

// Reduces `row` against pivot rows until its leading column is free.
// Returns false when the row vanishes.
bool reduce_row(SparseRow& row, const std::unordered_map<Index, SparseRow>& pivots) {
  SparseRow scratch;
  while (!row.empty()) {
    auto it = pivots.find(row.front().first);
    if (it == pivots.end()) return true;
    const SparseRow& p = it->second;
    const Rational f = row.front().second / p.front().second;
    scratch.clear();
    scratch.reserve(row.size() + p.size());
    std::size_t a = 1, b = 1;
    while (a < row.size() || b < p.size()) {
      if (b == p.size() || (a < row.size() && row[a].first < p[b].first)) {
        scratch.push_back(std::move(row[a++]));
      } else if (a == row.size() || p[b].first < row[a].first) {
        scratch.emplace_back(p[b].first, -f * p[b].second);
        ++b;
      } else {
        Rational v = row[a].second - f * p[b].second;
        if (v != 0) scratch.emplace_back(row[a].first, std::move(v));
        ++a;
        ++b;
      }
    }
    row.swap(scratch);
  }
  return false;
}

Index sparse_block_rank(std::vector<SparseRow>& rows) {
  std::sort(rows.begin(), rows.end(), [](const SparseRow& x, const SparseRow& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.front().first < y.front().first;
  });
  std::unordered_map<Index, SparseRow> pivots;
  for (auto& row : rows) {
    if (reduce_row(row, pivots)) {
      const Index lead = row.front().first;
      pivots.emplace(lead, std::move(row));
    }
  }
  return static_cast<Index>(pivots.size());
}

Index find_root(std::vector<Index>& parent, Index x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

Index rank(const Matrix& m) {
  if (m.nonZeros() == 0) return 0;
  // Rows and columns linked by a nonzero entry form independent blocks.
  const Index nr = m.rows();
  std::vector<Index> parent(static_cast<std::size_t>(nr + m.cols()));
  for (Index i = 0; i < static_cast<Index>(parent.size()); ++i) parent[i] = i;
  const auto entries = triplets_of(m);
  for (const auto& t : entries) {
    const Index a = find_root(parent, t.row());
    const Index b = find_root(parent, nr + t.col());
    if (a != b) parent[a] = b;
  }
  std::vector<SparseRow> by_row(static_cast<std::size_t>(nr));
  for (const auto& t : entries) by_row[t.row()].emplace_back(t.col(), t.value());
  std::unordered_map<Index, std::vector<SparseRow>> blocks;
  for (Index r = 0; r < nr; ++r) {
    auto& row = by_row[r];
    if (row.empty()) continue;
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    blocks[find_root(parent, r)].push_back(std::move(row));
  }
  Index total = 0;
  for (auto& [root, rows] : blocks) total += sparse_block_rank(rows);
  return total;
}

Index dense_integer_rank(const Matrix& m) {
  if (m.nonZeros() == 0) return 0;
  IntegerMatrix im = integerize(m);
  if (im.rows() > im.cols()) {
    IntegerMatrix t = im.transpose();
    return bareiss_rank(t);
  }
  return bareiss_rank(im);
}

Index rank(const DenseMatrix& m) { return rank(to_sparse(m)); }

Index cohomology_dim(const Matrix& d_in, const Matrix& d_out) {
  if (d_out.cols() != d_in.rows()) {
    throw DimensionMismatch("cohomology_dim: d_out has " + std::to_string(d_out.cols()) +
                            " columns but d_in maps into a space of dimension " +
                            std::to_string(d_in.rows()));
  }
  if (d_in.cols() > 0 && d_out.rows() > 0) {
    Matrix composite = d_out * d_in;
    if (!is_zero(composite)) throw NotAComplex("cohomology_dim: d_out * d_in != 0");
  }
  return d_in.rows() - rank(d_out) - rank(d_in);
}

std::vector<Index> rref(DenseMatrix& m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index c = 0; c < m.cols() && row < m.rows(); ++c) {
    Index p = -1;
    for (Index r = row; r < m.rows(); ++r) {
      if (m(r, c) != 0) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const Rational inv = Rational(1) / m(row, c);
    for (Index j = c; j < m.cols(); ++j) m(row, j) *= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c) == 0) continue;
      const Rational f = m(r, c);
      for (Index j = c; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

DenseMatrix kernel_basis(const DenseMatrix& m) {
  DenseMatrix r = m;
  const auto pivots = rref(r);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index p : pivots) is_pivot[p] = true;
  std::vector<Index> free_cols;
  for (Index c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  DenseMatrix k = DenseMatrix::Zero(m.cols(), static_cast<Index>(free_cols.size()));
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    const Index fc = free_cols[f];
    k(fc, static_cast<Index>(f)) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      k(pivots[i], static_cast<Index>(f)) = -r(static_cast<Index>(i), fc);
    }
  }
  return k;
}

std::optional<DenseMatrix> solve(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve: row count mismatch");
  DenseMatrix aug(a.rows(), a.cols() + b.cols());
  aug << a, b;
  const auto pivots = rref(aug);
  DenseMatrix x = DenseMatrix::Zero(a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= a.cols()) return std::nullopt;
    for (Index j = 0; j < b.cols(); ++j) {
      x(pivots[i], j) = aug(static_cast<Index>(i), a.cols() + j);
    }
  }
  return x;
}

DenseMatrix inverse(const DenseMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse: matrix is not square");
  const Index n = a.rows();
  DenseMatrix aug(n, 2 * n);
  aug << a, DenseMatrix::Identity(n, n);
  const auto pivots = rref(aug);
  if (static_cast<Index>(pivots.size()) < n || (n > 0 && pivots[n - 1] >= n)) {
    throw std::domain_error("inverse: matrix is singular");
  }
  return aug.rightCols(n);
}

}  // namespace hochkit
