// Exact dense linear algebra over Q: fraction-free Bareiss rank (default),
// plain rational elimination (cross-check), modular ranks with a multi-modular
// fast path, and pivot extraction under a prescribed column order.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "verolef/numeric.hpp"

namespace verolef {
namespace modp {

// Primes below 2^31 so products of residues fit in uint64.
inline constexpr std::array<std::uint64_t, 3> kPrimes = {2147483629ull, 2147483587ull,
                                                         2147483563ull};

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;
}

inline std::uint64_t pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t out = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) out = mul(out, base, p);
    base = mul(base, base, p);
    e >>= 1;
  }
  return out;
}

inline std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("modp::inverse of zero");
  return pow(a, p - 2, p);  // p prime
}

inline std::uint64_t residue(const Integer& v, std::uint64_t p) {
  Integer r = v % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

// In-place row echelon rank of a dense matrix over F_p. Rows may have
// different logical meaning to callers; matrix is row-major.
inline int rank(std::vector<std::vector<std::uint64_t>>& m, std::uint64_t p) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && m[pr][c] % p == 0) ++pr;
    if (pr == rows) continue;
    std::swap(m[pr], m[r]);
    const std::uint64_t inv = inverse(m[r][c], p);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = mul(m[r][j] % p, inv, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint64_t f = m[i][c] % p;
      if (f == 0) continue;
      const std::uint64_t neg = p - f;
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] = (m[i][j] % p + mul(m[r][j], neg, p)) % p;
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace modp

class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols)
      : rows_(check_dim(rows)), cols_(check_dim(cols)),
        a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
           Rational{0}) {}

  static RationalMatrix identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return a_[index(r, c)]; }
  const Rational& at(int r, int c) const { return a_[index(r, c)]; }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  RationalMatrix multiply(const RationalMatrix& o) const {
    if (cols_ != o.rows_)
      throw std::invalid_argument("RationalMatrix::multiply: shape mismatch");
    RationalMatrix out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
      for (int k = 0; k < cols_; ++k) {
        const Rational& v = at(r, k);
        if (v == 0) continue;
        for (int c = 0; c < o.cols_; ++c) out.at(r, c) += v * o.at(k, c);
      }
    return out;
  }

  bool operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  // Exact rank via fraction-free Bareiss elimination on the integerized
  // matrix (each row scaled by the lcm of its denominators).
  int rank() const {
    std::vector<std::vector<Integer>> m = integerized();
    int r = 0;
    Integer prev = 1;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int pr = r;
      while (pr < rows_ && m[pr][c] == 0) ++pr;
      if (pr == rows_) continue;
      std::swap(m[pr], m[r]);
      for (int i = r + 1; i < rows_; ++i) {
        for (int j = c + 1; j < cols_; ++j) {
          Integer num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
          Integer quot, rem;
          mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                      prev.get_mpz_t());
          if (rem != 0)
            throw std::logic_error("Bareiss: exact division failed");
          m[i][j] = quot;
        }
        m[i][c] = 0;
      }
      prev = m[r][c];
      ++r;
    }
    return r;
  }

  // Independent cross-check: textbook Gaussian elimination over Q.
  int rank_rational_gauss() const {
    std::vector<Rational> m = a_;
    const auto e = [&](int r, int c) -> Rational& { return m[index(r, c)]; };
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int pr = r;
      while (pr < rows_ && e(pr, c) == 0) ++pr;
      if (pr == rows_) continue;
      for (int j = 0; j < cols_; ++j) std::swap(e(pr, j), e(r, j));
      for (int i = r + 1; i < rows_; ++i) {
        if (e(i, c) == 0) continue;
        const Rational f = e(i, c) / e(r, c);
        for (int j = c; j < cols_; ++j) e(i, j) -= f * e(r, j);
      }
      ++r;
    }
    return r;
  }

  // Rank over F_p. Throws std::domain_error if some denominator vanishes mod
  // p (an "unlucky" prime for this matrix).
  int rank_mod(std::uint64_t p) const {
    std::vector<std::vector<std::uint64_t>> m(
        static_cast<std::size_t>(rows_),
        std::vector<std::uint64_t>(static_cast<std::size_t>(cols_), 0));
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) {
        const Rational& v = at(r, c);
        const std::uint64_t den = modp::residue(v.get_den(), p);
        if (den == 0) throw std::domain_error("rank_mod: unlucky prime");
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            modp::mul(modp::residue(v.get_num(), p), modp::inverse(den, p), p);
      }
    return modp::rank(m, p);
  }

  // Fast path: max of ranks over a fixed prime set. A modular rank never
  // exceeds the rational rank, so this is a certified lower bound; it is used
  // as the rank only where tests pin agreement with the exact path.
  int rank_multimodular() const {
    int best = 0;
    bool any = false;
    for (std::uint64_t p : modp::kPrimes) {
      try {
        best = std::max(best, rank_mod(p));
        any = true;
      } catch (const std::domain_error&) {
        continue;
      }
    }
    if (!any) throw std::domain_error("rank_multimodular: all primes unlucky");
    return best;
  }

  // Row-reduce visiting columns in the given order (a permutation of
  // 0..cols-1); returns the pivot columns in visit order. The pivot count is
  // the rank regardless of the order.
  std::vector<int> row_reduce_pivots(const std::vector<int>& column_order) const {
    if (static_cast<int>(column_order.size()) != cols_)
      throw std::invalid_argument("row_reduce_pivots: order size mismatch");
    std::vector<bool> seen(static_cast<std::size_t>(cols_), false);
    for (int c : column_order) {
      if (c < 0 || c >= cols_ || seen[static_cast<std::size_t>(c)])
        throw std::invalid_argument("row_reduce_pivots: not a permutation");
      seen[static_cast<std::size_t>(c)] = true;
    }
    std::vector<Rational> m = a_;
    const auto e = [&](int r, int c) -> Rational& { return m[index(r, c)]; };
    std::vector<int> pivots;
    int r = 0;
    for (int c : column_order) {
      if (r >= rows_) break;
      int pr = r;
      while (pr < rows_ && e(pr, c) == 0) ++pr;
      if (pr == rows_) continue;
      for (int j = 0; j < cols_; ++j) std::swap(e(pr, j), e(r, j));
      for (int i = r + 1; i < rows_; ++i) {
        if (e(i, c) == 0) continue;
        const Rational f = e(i, c) / e(r, c);
        for (int j = 0; j < cols_; ++j) e(i, j) -= f * e(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

 private:
  static int check_dim(int d) {
    if (d < 0) throw std::invalid_argument("RationalMatrix: negative dimension");
    return d;
  }
  std::size_t index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("RationalMatrix: index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  std::vector<std::vector<Integer>> integerized() const {
    std::vector<std::vector<Integer>> m(
        static_cast<std::size_t>(rows_),
        std::vector<Integer>(static_cast<std::size_t>(cols_), Integer{0}));
    for (int r = 0; r < rows_; ++r) {
      Integer scale = 1;
      for (int c = 0; c < cols_; ++c)
        scale = lcm(scale, Integer(at(r, c).get_den()));
      for (int c = 0; c < cols_; ++c) {
        const Rational& v = at(r, c);
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            Integer(v.get_num()) * (scale / Integer(v.get_den()));
      }
    }
    return m;
  }

  int rows_, cols_;
  std::vector<Rational> a_;  // row-major
};

}  // namespace verolef
