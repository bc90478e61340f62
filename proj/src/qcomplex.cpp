#include "hochkit/structures.hpp"

#include <algorithm>
#include <charconv>

namespace hochkit {

Rational LieStructure::coeff(int i, int j, int k) const {
  auto it = c.find({i, j});
  if (it == c.end()) return Rational(0);
  return it->second.at(static_cast<std::size_t>(k));
}

void LieStructure::set(int i, int j, int k, const Rational& value) {
  if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n) throw std::invalid_argument("LieStructure: index out of range");
  auto& v = c[{i, j}];
  v.resize(static_cast<std::size_t>(n));
  v[static_cast<std::size_t>(k)] = value;
}

LieStructure builtin_lie(std::string_view name) {
  if (name == "nonabelian2") {
    LieStructure g{2, {}};
    g.set(0, 1, 1, Rational(1));
    g.set(1, 0, 1, Rational(-1));
    return g;
  }
  if (name.starts_with("abelian")) {
    const auto digits = name.substr(7);
    int n = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || n < 1) {
      throw std::invalid_argument("expected abelian<n> with n >= 1");
    }
    return LieStructure{n, {}};
  }
  throw std::invalid_argument("unknown builtin Lie structure: " + std::string(name));
}

namespace {

// [[e_i, e_j], e_k] as a coefficient vector.
std::vector<Rational> nested(const LieStructure& g, int i, int j, int k) {
  std::vector<Rational> out(static_cast<std::size_t>(g.n));
  for (int a = 0; a < g.n; ++a) {
    const Rational c = g.coeff(i, j, a);
    if (c == 0) continue;
    for (int b = 0; b < g.n; ++b) out[static_cast<std::size_t>(b)] += c * g.coeff(a, k, b);
  }
  return out;
}

void check_antisymmetry(const LieStructure& g) {
  for (int i = 0; i < g.n; ++i) {
    for (int j = 0; j < g.n; ++j) {
      for (int k = 0; k < g.n; ++k) {
        if (g.coeff(i, j, k) != -g.coeff(j, i, k)) {
          throw std::invalid_argument("Lie structure constants are not antisymmetric at (" + std::to_string(i) + "," +
                                      std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
    }
  }
}

std::vector<std::vector<int>> combinations(int n, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Sign sorting `letters` into increasing order, or 0 if a letter repeats.
int sort_sign(std::vector<int>& letters) {
  int sign = 1;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    for (std::size_t j = 0; j + 1 < letters.size() - i; ++j) {
      if (letters[j] == letters[j + 1]) return 0;
      if (letters[j] > letters[j + 1]) {
        std::swap(letters[j], letters[j + 1]);
        sign = -sign;
      }
    }
  }
  for (std::size_t j = 0; j + 1 < letters.size(); ++j) {
    if (letters[j] == letters[j + 1]) return 0;
  }
  return sign;
}

}  // namespace

std::optional<std::array<int, 3>> jacobi_witness(const LieStructure& g) {
  for (int i = 0; i < g.n; ++i) {
    for (int j = 0; j < g.n; ++j) {
      for (int k = 0; k < g.n; ++k) {
        const auto a = nested(g, i, j, k), b = nested(g, j, k, i), c = nested(g, k, i, j);
        for (int r = 0; r < g.n; ++r) {
          const auto u = static_cast<std::size_t>(r);
          if (a[u] + b[u] + c[u] != 0) return std::array<int, 3>{i, j, k};
        }
      }
    }
  }
  return std::nullopt;
}

QComplex zero_q_complex(int n) {
  if (n < 0) throw std::invalid_argument("zero_q_complex: n must be non-negative");
  QComplex q{n, {}};
  for (int i = 0; i < n; ++i) q.maps.emplace_back(binomial(n, i + 1), binomial(n, i));
  return q;
}

QComplex ce_differential(const LieStructure& g) {
  check_antisymmetry(g);
  const int n = g.n;
  QComplex q{n, {}};
  for (int i = 0; i < n; ++i) {
    const auto src = combinations(n, i);
    const auto dst = combinations(n, i + 1);
    std::map<std::vector<int>, Index> src_pos;
    for (std::size_t s = 0; s < src.size(); ++s) src_pos[src[s]] = static_cast<Index>(s);
    std::vector<Triplet> t;
    // (dω)(x_0..x_i) = Σ_{s<t} (-1)^{s+t} ω([x_s, x_t], x_0..^s..^t..x_i)
    for (std::size_t r = 0; r < dst.size(); ++r) {
      const auto& T = dst[r];
      for (int s = 0; s <= i; ++s) {
        for (int u = s + 1; u <= i; ++u) {
          for (int k = 0; k < n; ++k) {
            const Rational c = g.coeff(T[static_cast<std::size_t>(s)], T[static_cast<std::size_t>(u)], k);
            if (c == 0) continue;
            std::vector<int> args{k};
            for (int m = 0; m <= i; ++m) {
              if (m != s && m != u) args.push_back(T[static_cast<std::size_t>(m)]);
            }
            const int sign = sort_sign(args);
            if (sign == 0) continue;
            t.emplace_back(static_cast<Index>(r), src_pos.at(args), Rational(sign) * sign_of(s + u) * c);
          }
        }
      }
    }
    q.maps.push_back(make_matrix(static_cast<Index>(dst.size()), static_cast<Index>(src.size()), t));
  }
  for (int i = 0; i + 1 < n; ++i) {
    Matrix c = q.maps[static_cast<std::size_t>(i + 1)] * q.maps[static_cast<std::size_t>(i)];
    if (!is_zero(c)) {
      const auto w = jacobi_witness(g);
      throw JacobiFailure("Chevalley-Eilenberg maps fail Q^2 = 0 at degree " + std::to_string(i),
                          w.value_or(std::array<int, 3>{-1, -1, -1}));
    }
  }
  return q;
}

namespace {

void check_shapes(const QComplex& q) {
  if (q.n < 0 || static_cast<int>(q.maps.size()) != q.n) {
    throw ShapeMismatch("Q-complex with n = " + std::to_string(q.n) + " needs " + std::to_string(q.n) + " maps");
  }
  for (int i = 0; i < q.n; ++i) {
    const auto& m = q.maps[static_cast<std::size_t>(i)];
    if (m.rows() != binomial(q.n, i + 1) || m.cols() != binomial(q.n, i)) {
      throw ShapeMismatch("Q_" + std::to_string(i) + " must be " + std::to_string(binomial(q.n, i + 1)) + "x" +
                          std::to_string(binomial(q.n, i)));
    }
  }
  for (int i = 0; i + 1 < q.n; ++i) {
    Matrix c = q.maps[static_cast<std::size_t>(i + 1)] * q.maps[static_cast<std::size_t>(i)];
    if (!is_zero(c)) throw QNotAComplex("Q_" + std::to_string(i + 1) + " Q_" + std::to_string(i) + " != 0", i);
  }
}

}  // namespace

std::vector<Index> betti_numbers(const QComplex& q) {
  check_shapes(q);
  std::vector<Index> ranks(static_cast<std::size_t>(q.n));
  for (int i = 0; i < q.n; ++i) ranks[static_cast<std::size_t>(i)] = rank(q.maps[static_cast<std::size_t>(i)]);
  std::vector<Index> b;
  for (int i = 0; i <= q.n; ++i) {
    const Index out = i < q.n ? ranks[static_cast<std::size_t>(i)] : 0;
    const Index in = i > 0 ? ranks[static_cast<std::size_t>(i - 1)] : 0;
    b.push_back(binomial(q.n, i) - out - in);
  }
  return b;
}

Report q_complex_check(const QComplex& q) {
  const auto b = betti_numbers(q);
  Index euler = 0;
  bool bounded = true;
  for (int i = 0; i <= q.n; ++i) {
    euler += (i % 2 == 0 ? 1 : -1) * b[static_cast<std::size_t>(i)];
    bounded = bounded && b[static_cast<std::size_t>(i)] >= 0 && b[static_cast<std::size_t>(i)] <= binomial(q.n, i);
  }
  // Σ(-1)^i b_i = Σ(-1)^i C(n,i) = 0 for n >= 1.
  const Index expected_euler = q.n == 0 ? 1 : 0;
  const bool pass = bounded && euler == expected_euler;
  return Report{{"claim", "q-complex:n=" + std::to_string(q.n)},
                {"betti", b},
                {"euler_characteristic", euler},
                {"expected_euler_characteristic", expected_euler},
                {"bounds_hold", bounded},
                {"status", pass ? "PASS" : "FAIL"}};
}

std::vector<Index> gauge_invariants(const QComplex& q) { return betti_numbers(q); }

DenseMatrix random_invertible(Index size, std::mt19937_64& rng) {
  for (;;) {
    DenseMatrix m(size, size);
    for (Index r = 0; r < size; ++r) {
      for (Index c = 0; c < size; ++c) m(r, c) = Rational(static_cast<long long>(rng() % 5) - 2);
    }
    if (rank(m) == size) return m;
  }
}

QComplex conjugate(const QComplex& q, const std::vector<DenseMatrix>& gauge) {
  check_shapes(q);
  if (static_cast<int>(gauge.size()) != q.n + 1) throw ShapeMismatch("conjugate: need n + 1 gauge matrices");
  QComplex out{q.n, {}};
  for (int i = 0; i < q.n; ++i) {
    const DenseMatrix a_next = gauge[static_cast<std::size_t>(i + 1)];
    const DenseMatrix a_inv = inverse(gauge[static_cast<std::size_t>(i)]);
    const DenseMatrix m = a_next * to_dense(q.maps[static_cast<std::size_t>(i)]) * a_inv;
    out.maps.push_back(to_sparse(m));
  }
  return out;
}

}  // namespace hochkit
