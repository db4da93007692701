// Univariate polynomials with arbitrary-precision integer coefficients, plus
// the h-vector toolbox: g-polynomial, unimodality, Macaulay growth bounds,
// O-sequence and Kruskal-Katona tests, and complete-intersection Hilbert
// functions K[x_1..x_d]/(x_1^r,...,x_d^r).
#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "verolef/numeric.hpp"

namespace verolef {

class IntPolynomial {
 public:
  IntPolynomial() = default;

  explicit IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
    trim();
  }

  IntPolynomial(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  bool is_zero() const { return c_.empty(); }

  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  // Coefficient of t^i; zero beyond the degree.
  const Integer& operator[](int i) const {
    static const Integer zero{0};
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(i)];
  }

  const std::vector<Integer>& coefficients() const { return c_; }

  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }

  IntPolynomial operator+(const IntPolynomial& o) const {
    std::vector<Integer> out(std::max(c_.size(), o.c_.size()), Integer{0});
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return IntPolynomial(std::move(out));
  }

  IntPolynomial operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<Integer> out(c_.size() + o.c_.size() - 1, Integer{0});
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return IntPolynomial(std::move(out));
  }

  // Human-readable form, e.g. "1 + 5t + 10t^2"; "0" for the zero polynomial.
  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (!first) os << (c_[i] < 0 ? " - " : " + ");
      else if (c_[i] < 0) os << "-";
      first = false;
      Integer a = abs(c_[i]);
      if (i == 0 || a != 1) os << a.get_str();
      if (i == 1) os << "t";
      if (i > 1) os << "t^" << i;
    }
    if (first) return "0";
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Integer> c_;  // c_[i] = coefficient of t^i; no trailing zeros
};

// g_0 = 1, g_i = h_i - h_{i-1} for 1 <= i <= floor(deg h / 2).
// Requires h nonzero with constant term 1.
inline IntPolynomial h_to_g(const IntPolynomial& h) {
  if (h.is_zero() || h[0] != 1)
    throw std::invalid_argument("h_to_g: input must have constant term 1");
  const int s = h.degree();
  std::vector<Integer> g;
  g.emplace_back(1);
  for (int i = 1; i <= s / 2; ++i) g.push_back(h[i] - h[i - 1]);
  return IntPolynomial(std::move(g));
}

struct UnimodalResult {
  bool unimodal = false;
  std::optional<int> peak;  // smallest valid peak index when unimodal
};

// (h_0,...,h_s) is unimodal if h_0 <= ... <= h_p >= ... >= h_s for some
// 1 <= p <= s; constants count as unimodal with peak 0. Coefficients must be
// nonnegative.
inline UnimodalResult is_unimodal(const IntPolynomial& h) {
  for (const Integer& c : h.coefficients())
    if (c < 0) throw std::invalid_argument("is_unimodal: negative coefficient");
  const int s = h.degree();
  if (s <= 0) return {true, 0};
  int rise = 0;
  while (rise < s && h[rise] <= h[rise + 1]) ++rise;
  int fall_start = s;
  while (fall_start > 0 && h[fall_start - 1] >= h[fall_start]) --fall_start;
  const int p = std::max(1, fall_start);
  if (p <= rise) return {true, p};
  return {false, std::nullopt};
}

// a = C(b_i,i) + C(b_{i-1},i-1) + ... + C(b_j,j) with b_i > b_{i-1} > ... >=
// b_j >= j >= 1: the unique i-th Macaulay representation of a >= 1.
// Returned as pairs (b_t, t), t descending.
inline std::vector<std::pair<Integer, int>> macaulay_representation(Integer a, int i) {
  if (a < 1 || i < 1)
    throw std::invalid_argument("macaulay_representation: need a >= 1, i >= 1");
  std::vector<std::pair<Integer, int>> rep;
  for (int t = i; t >= 1 && a > 0; --t) {
    Integer b = t;  // C(t,t) = 1 <= a
    while (binomial(b + 1, t) <= a) ++b;
    rep.emplace_back(b, t);
    a -= binomial(b, t);
  }
  if (a != 0)
    throw std::logic_error("macaulay_representation: decomposition failed");
  return rep;
}

// Macaulay bound a^<i>: maximal h_{i+1} given h_i = a in an O-sequence.
inline Integer macaulay_upper(const Integer& a, int i) {
  if (a < 0 || i < 1)
    throw std::invalid_argument("macaulay_upper: need a >= 0, i >= 1");
  if (a == 0) return 0;
  Integer out = 0;
  for (const auto& [b, t] : macaulay_representation(a, i))
    out += binomial(b + 1, t + 1);
  return out;
}

// Kruskal-Katona bound a^{(i)}: maximal f_{i+1} given f_i = a in the f-vector
// of a simplicial complex (squarefree analogue of the Macaulay bound).
inline Integer kruskal_katona_upper(const Integer& a, int i) {
  if (a < 0 || i < 1)
    throw std::invalid_argument("kruskal_katona_upper: need a >= 0, i >= 1");
  if (a == 0) return 0;
  Integer out = 0;
  for (const auto& [b, t] : macaulay_representation(a, i))
    out += binomial(b, t + 1);
  return out;
}

// True iff (h_0, h_1, ...) is an O-sequence: h_0 = 1, nonnegative, and
// h_{i+1} <= macaulay_upper(h_i, i) for all i >= 1. The zero polynomial is not
// an O-sequence (h_0 must be 1); (1) is.
inline bool is_O_sequence(const IntPolynomial& h) {
  if (h.is_zero() || h[0] != 1) return false;
  for (const Integer& c : h.coefficients())
    if (c < 0) return false;
  for (int i = 1; i <= h.degree(); ++i)
    if (h[i + 1] > macaulay_upper(h[i], i)) return false;
  return true;
}

// True iff (f_0, f_1, ...) with f_0 = 1 satisfies the Kruskal-Katona growth
// condition, i.e. is the f-polynomial of some simplicial complex (coefficient
// of t^i = number of faces of cardinality i).
inline bool kruskal_katona_check(const IntPolynomial& f) {
  if (f.is_zero() || f[0] != 1) return false;
  for (const Integer& c : f.coefficients())
    if (c < 0) return false;
  for (int i = 1; i <= f.degree(); ++i)
    if (f[i + 1] > kruskal_katona_upper(f[i], i)) return false;
  return true;
}

// Hilbert function of K[x_1..x_d]/(x_1^r,...,x_d^r): the polynomial
// (1 + t + ... + t^{r-1})^d. d = 0 gives the constant 1.
inline IntPolynomial ci_hilbert(int d, int r) {
  if (d < 0 || r < 1) throw std::invalid_argument("ci_hilbert: need d >= 0, r >= 1");
  IntPolynomial block(std::vector<Integer>(static_cast<std::size_t>(r), Integer{1}));
  IntPolynomial out({1});
  for (int k = 0; k < d; ++k) out = out * block;
  return out;
}

}  // namespace verolef
