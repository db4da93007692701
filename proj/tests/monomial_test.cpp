// Monomials, reverse-lexicographic order, stable ideals, dimensions.
#include <catch2/catch_amalgamated.hpp>

#include "verolef/monomial.hpp"
#include "verolef/monomial_ideal.hpp"

using namespace verolef;

static Monomial mono(int n, std::vector<int> e) { return Monomial(std::move(e)); }

TEST_CASE("Monomial basics") {
  const Monomial u = Monomial::unit(3);
  REQUIRE(u.is_unit());
  REQUIRE(u.degree() == 0);
  REQUIRE(u.str() == "1");
  REQUIRE_THROWS_AS(u.max_index(), std::logic_error);
  const Monomial m = mono(3, {2, 0, 1});
  REQUIRE(m.degree() == 3);
  REQUIRE(m.str() == "x1^2*x3");
  REQUIRE(m.max_index() == 3);
  REQUIRE(m.min_index() == 1);
  REQUIRE(m.exponent(1) == 2);
  REQUIRE((m * m).str() == "x1^4*x3^2");
  REQUIRE(Monomial::variable(3, 2).divides(m) == false);
  REQUIRE(mono(3, {1, 0, 1}).divides(m));
  REQUIRE(m / mono(3, {1, 0, 1}) == Monomial::variable(3, 1));
  REQUIRE_THROWS_AS(mono(3, {0, 1, 0}) / mono(3, {1, 0, 0}), std::domain_error);
}

TEST_CASE("exchange_down moves the top variable") {
  const Monomial m = mono(4, {0, 1, 0, 2});  // x2*x4^2
  REQUIRE(m.exchange_down(1) == mono(4, {1, 1, 0, 1}));
  REQUIRE(m.exchange_down(2) == mono(4, {0, 2, 0, 1}));
  REQUIRE_THROWS_AS(m.exchange_down(4), std::invalid_argument);  // need i < max
  REQUIRE_THROWS_AS(Monomial::unit(4).exchange_down(1), std::logic_error);
}

TEST_CASE("revlex order on degree 2 in 3 variables") {
  // Pinned: x1^2 > x1x2 > x2^2 > x1x3 > x2x3 > x3^2.
  const std::vector<Monomial> expected = {
      mono(3, {2, 0, 0}), mono(3, {1, 1, 0}), mono(3, {0, 2, 0}),
      mono(3, {1, 0, 1}), mono(3, {0, 1, 1}), mono(3, {0, 0, 2})};
  REQUIRE(monomials_of_degree(3, 2) == expected);
  for (std::size_t i = 0; i < expected.size(); ++i)
    for (std::size_t j = 0; j < expected.size(); ++j) {
      const Ordering o = revlex_compare(expected[i], expected[j]);
      if (i < j) REQUIRE(o == Ordering::greater);
      if (i == j) REQUIRE(o == Ordering::equal);
      if (i > j) REQUIRE(o == Ordering::less);
    }
  // degree dominates
  REQUIRE(revlex_greater(mono(3, {0, 0, 3}), mono(3, {2, 0, 0})));
}

TEST_CASE("enumerate_exponents visits C(n+k-1,k) vectors") {
  int count = 0;
  enumerate_exponents(4, 3, [&](const std::vector<int>& e) {
    ++count;
    REQUIRE(e.size() == 4);
    REQUIRE(std::accumulate(e.begin(), e.end(), 0) == 3);
  });
  REQUIRE(count == 20);
  REQUIRE(monomials_of_degree(2, 0) == std::vector<Monomial>{Monomial::unit(2)});
}

TEST_CASE("MonomialIdeal minimalizes generators") {
  const MonomialIdeal I(2, {mono(2, {1, 0}), mono(2, {2, 0}), mono(2, {1, 1}),
                            mono(2, {1, 0})});
  REQUIRE(I.generators().size() == 1);  // x1 divides the others, dedup too
  REQUIRE(I.generators()[0] == mono(2, {1, 0}));
  REQUIRE(I.contains(mono(2, {3, 2})));
  REQUIRE_FALSE(I.contains(mono(2, {0, 5})));
  REQUIRE_FALSE(I.contains(Monomial::unit(2)));
  REQUIRE(MonomialIdeal::zero(3).generators().empty());
  REQUIRE_FALSE(MonomialIdeal::zero(3).contains(mono(3, {1, 0, 0})));
  REQUIRE(MonomialIdeal(2, {Monomial::unit(2)}).is_proper() == false);
  const MonomialIdeal sum = I + MonomialIdeal(2, {mono(2, {0, 3})});
  REQUIRE(sum.contains(mono(2, {0, 3})));
  REQUIRE(sum.max_generator_degree() == 3);
  REQUIRE(I.str() == "(x1)");
}

TEST_CASE("stability of monomial ideals") {
  // stable: every generator survives all exchanges
  const MonomialIdeal stable(3, {mono(3, {2, 0, 0}), mono(3, {1, 1, 0}),
                                 mono(3, {0, 2, 0})});
  REQUIRE(is_stable(stable));
  REQUIRE(is_stable_slow(stable));
  // (x1^2, x2^2) misses the exchange x1x2 of x2^2
  const MonomialIdeal not_stable(3, {mono(3, {2, 0, 0}), mono(3, {0, 2, 0})});
  REQUIRE_FALSE(is_stable(not_stable));
  REQUIRE_FALSE(is_stable_slow(not_stable));
  REQUIRE(is_stable(MonomialIdeal::zero(2)));
  REQUIRE_THROWS_AS(is_stable(MonomialIdeal(2, {Monomial::unit(2)})),
                    std::invalid_argument);
}

TEST_CASE("ideal dimension via vertex covers") {
  REQUIRE(ideal_dimension(MonomialIdeal::zero(3)) == 3);
  REQUIRE(ideal_dimension(MonomialIdeal(2, {mono(2, {1, 1})})) == 1);
  REQUIRE(ideal_dimension(MonomialIdeal(3, {mono(3, {2, 0, 0})})) == 2);
  REQUIRE(ideal_dimension(MonomialIdeal(
              3, {mono(3, {2, 0, 0}), mono(3, {1, 1, 0}), mono(3, {0, 2, 0})})) == 1);
  REQUIRE(ideal_dimension(MonomialIdeal(
              2, {mono(2, {2, 0}), mono(2, {1, 1}), mono(2, {0, 3})})) == 0);
}

TEST_CASE("CM-stable recognition") {
  // stable with top generator reaching x_n - d: CM
  REQUIRE(is_cm_stable(MonomialIdeal(
      3, {mono(3, {2, 0, 0}), mono(3, {1, 1, 0}), mono(3, {0, 2, 0})})));
  REQUIRE(is_cm_stable(MonomialIdeal::zero(4)));
  // not stable at all: the contract is a precondition violation
  REQUIRE_THROWS_AS(
      is_cm_stable(MonomialIdeal(3, {mono(3, {2, 0, 0}), mono(3, {0, 2, 0})})),
      std::invalid_argument);
  // hypersurface: CM
  REQUIRE(is_cm_stable(MonomialIdeal(3, {mono(3, {2, 0, 0})})));
  // stable with dim 2 but a generator reaching x2 (depth 1): not CM
  REQUIRE_FALSE(
      is_cm_stable(MonomialIdeal(3, {mono(3, {2, 0, 0}), mono(3, {1, 1, 0})})));
}

TEST_CASE("Artinian reduction and h-polynomial of stable quotients") {
  const MonomialIdeal I(4, {mono(4, {2, 0, 0, 0}), mono(4, {1, 1, 0, 0}),
                            mono(4, {0, 3, 0, 0})});
  REQUIRE(ideal_dimension(I) == 2);
  REQUIRE(is_cm_stable(I));
  const MonomialIdeal red = artinian_reduction_stable(I, 2);
  REQUIRE(red.vars() == 2);
  REQUIRE(h_polynomial_stable(I) == IntPolynomial({1, 2, 1}));
  // polynomial ring: h = 1
  REQUIRE(h_polynomial_stable(MonomialIdeal::zero(3)) == IntPolynomial({1}));
  // graded_basis is sorted descending
  const auto basis2 = graded_basis(I, 2);
  for (std::size_t t = 0; t + 1 < basis2.size(); ++t)
    REQUIRE(revlex_greater(basis2[t], basis2[t + 1]));
}

TEST_CASE("random stable CM ideals satisfy their contract") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const int n = 3 + static_cast<int>(seed % 3);
    const int d = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(n - 1));
    const int max_deg = 2 + static_cast<int>(seed % 2);
    const MonomialIdeal I = random_stable_cm_ideal(n, d, max_deg, seed);
    REQUIRE(is_cm_stable(I));
    REQUIRE(is_stable_slow(I));
    REQUIRE(ideal_dimension(I) == d);
    REQUIRE(I.max_generator_degree() <= max_deg + 1);
    const IntPolynomial h = h_polynomial_stable(I);
    REQUIRE(h[0] == 1);
    REQUIRE(h[1] == n - d);  // no degree-1 generators
    REQUIRE(h.degree() <= max_deg);
  }
  // determinism
  REQUIRE(random_stable_cm_ideal(4, 2, 2, 9).str() ==
          random_stable_cm_ideal(4, 2, 2, 9).str());
  REQUIRE_THROWS_AS(random_stable_cm_ideal(3, 3, 2, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(random_stable_cm_ideal(3, 1, 1, 0), std::invalid_argument);
}
