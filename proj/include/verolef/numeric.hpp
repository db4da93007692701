// Exact arithmetic primitives: arbitrary-precision integers/rationals (GMP),
// binomial coefficients, and a seed-stable random engine.
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace verolef {

using Integer = mpz_class;
using Rational = mpq_class;

// C(n, k) for n >= 0; returns 0 when k < 0 or k > n.
inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

inline Integer binomial(const Integer& n, long k) {
  if (k < 0 || n < 0 || n < k) return 0;
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

inline std::string to_decimal(const Integer& v) { return v.get_str(); }

inline Integer integer_from_decimal(const std::string& s) {
  try {
    return Integer(s, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a decimal integer: '" + s + "'");
  }
}

// Deterministic seeded sampler. mt19937_64's raw output sequence is pinned by
// the C++ standard; std::uniform_int_distribution is not, so bounded draws are
// done here by rejection sampling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % bound;
  }

  // Uniform in [lo, hi] inclusive.
  long between(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("Rng::between: empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(below(span));
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace verolef
