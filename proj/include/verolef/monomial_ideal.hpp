// Monomial ideals with minimal generating sets; stability (in the
// Eliahou-Kervaire sense), Krull dimension, the Cohen-Macaulay criterion for
// stable ideals, h-polynomials, and seeded random stable CM instances.
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "verolef/int_polynomial.hpp"
#include "verolef/monomial.hpp"
#include "verolef/numeric.hpp"

namespace verolef {

class MonomialIdeal {
 public:
  // Minimalizes the generating set (drops duplicates and multiples); sorted
  // descending revlex for determinism. An empty list gives the zero ideal.
  MonomialIdeal(int n, std::vector<Monomial> generators) : n_(n) {
    if (n < 1) throw std::invalid_argument("MonomialIdeal: need n >= 1");
    for (const Monomial& g : generators)
      if (g.vars() != n)
        throw std::invalid_argument("MonomialIdeal: generator in wrong ring");
    for (const Monomial& g : generators) {
      bool redundant = false;
      // A proper divisor has strictly smaller degree; equal-degree distinct
      // monomials never divide each other.
      for (const Monomial& h : generators)
        if (h.degree() < g.degree() && h.divides(g)) { redundant = true; break; }
      if (!redundant && std::find(gens_.begin(), gens_.end(), g) == gens_.end())
        gens_.push_back(g);
    }
    std::sort(gens_.begin(), gens_.end(), RevlexGreater{});
  }

  static MonomialIdeal zero(int n) { return MonomialIdeal(n, {}); }

  int vars() const { return n_; }

  const std::vector<Monomial>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }

  // Proper = does not contain 1 (so S/I is nonzero).
  bool is_proper() const {
    return gens_.empty() || !gens_.front().is_unit();
  }

  bool contains(const Monomial& m) const {
    if (m.vars() != n_)
      throw std::invalid_argument("MonomialIdeal::contains: wrong ring");
    for (const Monomial& g : gens_)
      if (g.divides(m)) return true;
    return false;
  }

  // Ideal sum; generating sets are merged and re-minimalized.
  MonomialIdeal operator+(const MonomialIdeal& o) const {
    if (o.n_ != n_) throw std::invalid_argument("MonomialIdeal: mixed rings");
    std::vector<Monomial> gens(gens_);
    gens.insert(gens.end(), o.gens_.begin(), o.gens_.end());
    return MonomialIdeal(n_, std::move(gens));
  }

  int max_generator_degree() const {
    int d = 0;
    for (const Monomial& g : gens_) d = std::max(d, g.degree());
    return d;
  }

  bool operator==(const MonomialIdeal& o) const {
    return n_ == o.n_ && gens_ == o.gens_;
  }

  std::string str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) os << ", ";
      os << gens_[i].str();
    }
    os << ")";
    return os.str();
  }

 private:
  int n_;
  std::vector<Monomial> gens_;
};

// Stability via the generator criterion: for every minimal generator m and
// every i < max(m), the exchange m*x_i/x_{max(m)} lies in I. (Equivalent to
// the same condition over all monomials of I.) Requires a proper ideal.
inline bool is_stable(const MonomialIdeal& I) {
  if (!I.is_proper()) throw std::invalid_argument("is_stable: ideal must be proper");
  for (const Monomial& m : I.generators())
    for (int i = 1; i < m.max_index(); ++i)
      if (!I.contains(m.exchange_down(i))) return false;
  return true;
}

// Brute-force cross-check: the exchange condition on every monomial of I up
// to the maximal generator degree (beyond which it follows formally).
inline bool is_stable_slow(const MonomialIdeal& I) {
  if (!I.is_proper()) throw std::invalid_argument("is_stable_slow: ideal must be proper");
  for (int k = 1; k <= I.max_generator_degree(); ++k) {
    bool ok = true;
    enumerate_exponents(I.vars(), k, [&](const std::vector<int>& e) {
      if (!ok) return;
      Monomial m{std::vector<int>(e)};
      if (!I.contains(m)) return;
      for (int i = 1; i < m.max_index(); ++i)
        if (!I.contains(m.exchange_down(i))) { ok = false; return; }
    });
    if (!ok) return false;
  }
  return true;
}

// Monomials of degree k not in J, sorted descending revlex: the degree-k
// K-basis of S/J.
inline std::vector<Monomial> graded_basis(const MonomialIdeal& J, int k) {
  if (k < 0) throw std::invalid_argument("graded_basis: need k >= 0");
  std::vector<Monomial> out;
  enumerate_exponents(J.vars(), k, [&](const std::vector<int>& e) {
    Monomial m{std::vector<int>(e)};
    if (!J.contains(m)) out.push_back(std::move(m));
  });
  std::sort(out.begin(), out.end(), RevlexGreater{});
  return out;
}

// Krull dimension of S/I for proper monomial I: n minus the size of a minimum
// vertex cover of the generator supports (exhaustive search; desk scale).
inline int ideal_dimension(const MonomialIdeal& I) {
  if (!I.is_proper())
    throw std::invalid_argument("ideal_dimension: ideal must be proper");
  const int n = I.vars();
  if (n > 30) throw std::invalid_argument("ideal_dimension: too many variables");
  if (I.is_zero()) return n;
  std::vector<std::uint32_t> supports;
  for (const Monomial& g : I.generators()) {
    std::uint32_t s = 0;
    for (int i = 1; i <= n; ++i)
      if (g.exponent(i) > 0) s |= std::uint32_t{1} << (i - 1);
    supports.push_back(s);
  }
  int best = n;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best) continue;
    bool covers = true;
    for (std::uint32_t s : supports)
      if ((s & mask) == 0) { covers = false; break; }
    if (covers) best = size;
  }
  return n - best;
}

// For stable I, S/I is Cohen-Macaulay iff the largest variable index among
// minimal generators equals the height n - dim(S/I). Zero ideal: true.
inline bool is_cm_stable(const MonomialIdeal& I) {
  if (!is_stable(I)) throw std::invalid_argument("is_cm_stable: ideal is not stable");
  if (I.is_zero()) return true;
  int top = 0;
  for (const Monomial& g : I.generators()) top = std::max(top, g.max_index());
  return top == I.vars() - ideal_dimension(I);
}

// Restrict a CM stable ideal to its first n - d variables (where all minimal
// generators live); the quotient there is Artinian.
inline MonomialIdeal artinian_reduction_stable(const MonomialIdeal& I, int d) {
  const int q = I.vars() - d;
  if (q < 1) throw std::invalid_argument("artinian_reduction_stable: no variables left");
  std::vector<Monomial> gens;
  for (const Monomial& g : I.generators()) {
    std::vector<int> e(g.exponents().begin(), g.exponents().begin() + q);
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(q, std::move(gens));
}

// h-polynomial of S/I for CM stable I: the Hilbert function of the Artinian
// reduction K[x_1..x_{n-d}]/I' where d = dim(S/I). For I = (0) this is 1.
inline IntPolynomial h_polynomial_stable(const MonomialIdeal& I) {
  if (!is_cm_stable(I))
    throw std::invalid_argument("h_polynomial_stable: ideal is not CM stable");
  if (I.is_zero()) return IntPolynomial({1});
  const int d = ideal_dimension(I);
  const int q = I.vars() - d;
  const MonomialIdeal Ip = artinian_reduction_stable(I, d);
  // Exponents in the Artinian quotient are bounded by the pure-power
  // generators, so degrees beyond q * (maxdeg - 1) are empty.
  const int cap = q * std::max(0, Ip.max_generator_degree() - 1);
  std::vector<Integer> h;
  for (int k = 0; k <= cap; ++k)
    h.emplace_back(static_cast<long>(graded_basis(Ip, k).size()));
  if (!graded_basis(Ip, cap + 1).empty())
    throw std::logic_error("h_polynomial_stable: quotient not Artinian");
  return IntPolynomial(std::move(h));
}

// Seeded random stable ideal with dim(S/I) = d and CM quotient: random
// monomials of degree 2..max_deg in the first q = n - d variables closed
// under exchanges, plus the full degree-(max_deg + 1) layer in those
// variables (which pins the height to q and makes the result provably CM).
// Generator degrees <= max_deg + 1; no degree-1 generators, so the quotient
// h-polynomial always has h_1 = q.
inline MonomialIdeal random_stable_cm_ideal(int n, int d, int max_deg,
                                            std::uint64_t seed) {
  if (d < 1 || d >= n)
    throw std::invalid_argument("random_stable_cm_ideal: need 1 <= d < n");
  if (max_deg < 2)
    throw std::invalid_argument("random_stable_cm_ideal: need max_deg >= 2");
  const int q = n - d;
  Rng rng(seed);
  const int samples = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * q)));

  std::set<std::vector<int>> closure;
  std::deque<Monomial> queue;
  const auto push = [&](const Monomial& m) {
    if (closure.insert(m.exponents()).second) queue.push_back(m);
  };
  for (int s = 0; s < samples; ++s) {
    const int deg = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg - 1)));
    Monomial m = Monomial::unit(n);
    for (int t = 0; t < deg; ++t) {
      const int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(q)));
      m = m * Monomial::variable(n, i);
    }
    push(m);
  }
  while (!queue.empty()) {  // close under the stability exchanges
    const Monomial m = queue.front();
    queue.pop_front();
    for (int i = 1; i < m.max_index(); ++i) push(m.exchange_down(i));
  }

  std::vector<Monomial> gens;
  for (const auto& e : closure) gens.emplace_back(std::vector<int>(e));
  enumerate_exponents(q, max_deg + 1, [&](const std::vector<int>& e) {
    std::vector<int> full(static_cast<std::size_t>(n), 0);
    std::copy(e.begin(), e.end(), full.begin());
    gens.emplace_back(std::move(full));
  });
  MonomialIdeal I(n, std::move(gens));
  if (!is_cm_stable(I) || ideal_dimension(I) != d)
    throw std::logic_error("random_stable_cm_ideal: postcondition failed");
  return I;
}

}  // namespace verolef
