// The h-polynomial transform and the modeled graded quotient.
#include <map>
#include <thread>

#include <catch2/catch_amalgamated.hpp>

#include "verolef/veronese.hpp"

using namespace verolef;

static Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

TEST_CASE("transform of the counterexample h-polynomial is pinned") {
  const IntPolynomial h({1, 5, 10});
  REQUIRE(veronese_h_transform(h, 3, 3) == IntPolynomial({1, 67, 76}));
  REQUIRE(veronese_h_transform(h, 3, 4) == IntPolynomial({1, 122, 133}));
  REQUIRE(veronese_h_transform(h, 3, 5) == IntPolynomial({1, 193, 206}));
  REQUIRE(veronese_h_transform(h, 3, 6) == IntPolynomial({1, 280, 295}));
}

TEST_CASE("transform basics") {
  // r = 1 is the identity
  REQUIRE(veronese_h_transform(IntPolynomial({1, 2, 3}), 4, 1) ==
          IntPolynomial({1, 2, 3}));
  // h = 1: coefficients come from the pure-power quotient series
  const IntPolynomial c23 = ci_hilbert(2, 3);  // 1+2t+3t^2+2t^3+t^4
  const IntPolynomial hr = veronese_h_transform(IntPolynomial({1}), 2, 3);
  for (int i = 0; i <= hr.degree(); ++i) REQUIRE(hr[i] == c23[3 * i]);
  REQUIRE(hr == IntPolynomial({1, 2}));
  // definition cross-check on a longer h
  const IntPolynomial h({1, 3, 2, 1});
  const IntPolynomial t = veronese_h_transform(h, 2, 2);
  const IntPolynomial c = ci_hilbert(2, 2);
  for (int i = 0; i <= t.degree(); ++i) {
    Integer expect = 0;
    for (int k = 0; k <= h.degree(); ++k) expect += h[k] * c[2 * i - k];
    REQUIRE(t[i] == expect);
  }
  REQUIRE_THROWS_AS(veronese_h_transform(IntPolynomial({2}), 1, 1),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(veronese_h_transform(IntPolynomial({1, -1}), 1, 1),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(veronese_h_transform(IntPolynomial({1}), -1, 1),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(veronese_h_transform(IntPolynomial({1}), 1, 0),
                    std::invalid_argument);
}

TEST_CASE("degree of the transform") {
  REQUIRE(veronese_degree(2, 3, 3) == 2);  // floor((3*2+2)/3)
  REQUIRE(veronese_degree(0, 2, 3) == 1);  // floor(4/3)
  REQUIRE(veronese_degree(3, 0, 2) == 1);  // floor(3/2), d = 0 keeps h_{ir}
  REQUIRE(veronese_degree(2, 1, 1) == 2);
}

TEST_CASE("form degree validation") {
  REQUIRE(form_degree({{mono({2, 0}), Integer(1)}, {mono({1, 1}), Integer(-1)}}) == 2);
  REQUIRE_THROWS_AS(form_degree({}), std::invalid_argument);
  REQUIRE_THROWS_AS(
      form_degree({{mono({1, 0}), Integer(1)}, {mono({1, 1}), Integer(1)}}),
      std::invalid_argument);
}

TEST_CASE("quotient model on a width-3 example") {
  const MonomialIdeal I(3, {mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 2, 0})});
  const VeroneseQuotient V(I, 2);
  REQUIRE(V.vars() == 3);
  REQUIRE(V.dimension() == 1);
  REQUIRE(V.veronese_r() == 2);
  REQUIRE(V.base_h() == IntPolynomial({1, 2}));
  REQUIRE(V.transformed_h() == IntPolynomial({1, 2}));
  REQUIRE(V.powered_ideal().contains(mono({0, 0, 2})));
  REQUIRE_FALSE(V.powered_ideal().contains(mono({0, 0, 1})));
  const auto b0 = V.basis(0);
  REQUIRE(b0->size() == 1);
  REQUIRE(b0->front().is_unit());
  const auto b1 = V.basis(1);
  REQUIRE(*b1 == std::vector<Monomial>{mono({1, 0, 1}), mono({0, 1, 1})});
  REQUIRE(V.graded_dim(1) == 2);
  REQUIRE(V.graded_dim(2) == 0);
  REQUIRE(V.basis(1) == b1);  // cached pointer
}

TEST_CASE("quotient construction validates its input") {
  REQUIRE_THROWS_AS(
      VeroneseQuotient(MonomialIdeal(3, {mono({2, 0, 0}), mono({1, 1, 0})}), 2),
      std::invalid_argument);  // stable but not CM
  REQUIRE_THROWS_AS(
      VeroneseQuotient(MonomialIdeal(3, {mono({2, 0, 0}), mono({0, 2, 0})}), 2),
      std::invalid_argument);  // not stable
  REQUIRE_THROWS_AS(VeroneseQuotient(MonomialIdeal::zero(2), 0),
                    std::invalid_argument);
}

TEST_CASE("power of the linear system") {
  const VeroneseQuotient V(MonomialIdeal(3, {mono({2, 0, 0})}), 2);  // d = 2
  const Form w = power_linear_form(V);
  REQUIRE(w.size() == 3);
  REQUIRE(w[0].first == mono({0, 2, 0}));
  REQUIRE(w[0].second == 1);
  REQUIRE(w[1].first == mono({0, 1, 1}));
  REQUIRE(w[1].second == 2);
  REQUIRE(w[2].first == mono({0, 0, 2}));
  REQUIRE(w[2].second == 1);
  REQUIRE(form_degree(w) == 2);
  // d = 0: empty form
  const MonomialIdeal artinian(2, {mono({2, 0}), mono({1, 1}), mono({0, 3})});
  REQUIRE(power_linear_form(VeroneseQuotient(artinian, 3)).empty());
}

static Form form_mul(const Form& a, const Form& b) {
  std::map<std::vector<int>, Integer> acc;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) acc[(ma * mb).exponents()] += ca * cb;
  Form out;
  for (const auto& [e, c] : acc)
    if (c != 0) out.emplace_back(Monomial(std::vector<int>(e)), c);
  return out;
}

TEST_CASE("multiplication matrices compose like ring multiplication") {
  const std::vector<std::pair<MonomialIdeal, int>> cases = {
      {MonomialIdeal::zero(2), 2},
      {MonomialIdeal(3, {mono({2, 0, 0})}), 2},
      {MonomialIdeal(4, {mono({2, 0, 0, 0}), mono({1, 1, 0, 0}),
                         mono({0, 3, 0, 0})}),
       3},
  };
  for (const auto& [I, r] : cases) {
    const VeroneseQuotient V(I, r);
    const Form w = power_linear_form(V);
    const Form w2 = form_mul(w, w);
    REQUIRE(form_degree(w2) == 2 * r);
    for (int i = 0; i <= 1; ++i) {
      const RationalMatrix once = multiplication_matrix(V, w, i);
      const RationalMatrix twice = multiplication_matrix(V, w, i + 1);
      const RationalMatrix direct = multiplication_matrix(V, w2, i);
      REQUIRE(twice.multiply(once) == direct);
    }
  }
}

TEST_CASE("zero form gives the zero map") {
  const VeroneseQuotient V(MonomialIdeal(3, {mono({2, 0, 0})}), 2);
  const RationalMatrix z = multiplication_matrix(V, Form{}, 1);
  REQUIRE(z.rows() == V.graded_dim(2));
  REQUIRE(z.cols() == V.graded_dim(1));
  REQUIRE(z.rank() == 0);
}

TEST_CASE("basis cache is safe under concurrent access") {
  const MonomialIdeal I(4, {mono({2, 0, 0, 0}), mono({1, 1, 0, 0}),
                            mono({0, 2, 0, 0})});
  const VeroneseQuotient V(I, 2);
  std::vector<std::thread> threads;
  std::vector<long> dims(8, -1);
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&V, &dims, t] {
      long acc = 0;
      for (int i = 0; i <= 4; ++i) acc += V.graded_dim(i);
      dims[static_cast<std::size_t>(t)] = acc;
    });
  for (auto& th : threads) th.join();
  for (long v : dims) REQUIRE(v == dims[0]);
  const IntPolynomial& hr = V.transformed_h();
  for (int i = 0; i <= hr.degree(); ++i) REQUIRE(Integer(V.graded_dim(i)) == hr[i]);
}
