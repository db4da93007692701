// Simplicial complexes and the two complexes attached to a quotient.
#include <catch2/catch_amalgamated.hpp>

#include "verolef/simplicial_complex.hpp"

using namespace verolef;

static Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

static std::vector<Monomial> labels(int n, int count) {
  std::vector<Monomial> out;
  for (int i = 1; i <= count; ++i) out.push_back(Monomial::variable(n, i));
  return out;
}

TEST_CASE("complex construction and validation") {
  const SimplicialComplex C(labels(3, 2), {{0}, {1}, {0, 1}});
  REQUIRE(C.faces().size() == 4);  // empty face inserted
  REQUIRE(C.contains({}));
  REQUIRE(C.contains({0, 1}));
  REQUIRE_FALSE(C.contains({2}));
  REQUIRE(C.verify_closed());
  REQUIRE(C.facets() == std::vector<std::vector<int>>{{0, 1}});
  REQUIRE_THROWS_AS(SimplicialComplex(labels(3, 1), {{1}}), std::invalid_argument);
  REQUIRE_THROWS_AS(SimplicialComplex(labels(3, 1), {{-1}}), std::invalid_argument);
  REQUIRE_THROWS_AS(SimplicialComplex(labels(3, 2), {{1, 0}}), std::invalid_argument);
  REQUIRE_THROWS_AS(SimplicialComplex(labels(3, 2), {{0, 0}}), std::invalid_argument);
}

TEST_CASE("closure check and f-polynomial") {
  const SimplicialComplex open(labels(3, 2), {{0, 1}});
  REQUIRE_FALSE(open.verify_closed());
  const SimplicialComplex C(labels(3, 3), {{0}, {1}, {2}, {0, 1}});
  REQUIRE(f_polynomial(C) == IntPolynomial({1, 3, 1}));
  REQUIRE(C.facets() == std::vector<std::vector<int>>{{0, 1}, {2}});
  const SimplicialComplex point(labels(1, 0), {});
  REQUIRE(f_polynomial(point) == IntPolynomial({1}));
  REQUIRE(is_flag(point));
}

TEST_CASE("flag recognition") {
  const std::set<std::vector<int>> hollow = {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}};
  REQUIRE_FALSE(is_flag(SimplicialComplex(labels(3, 3), hollow)));
  std::set<std::vector<int>> filled = hollow;
  filled.insert({0, 1, 2});
  REQUIRE(is_flag(SimplicialComplex(labels(3, 3), filled)));
  const std::set<std::vector<int>> path = {{0}, {1}, {2}, {0, 1}, {1, 2}};
  REQUIRE(is_flag(SimplicialComplex(labels(3, 3), path)));
  // missing singleton
  REQUIRE_FALSE(is_flag(SimplicialComplex(labels(3, 1), {})));
}

TEST_CASE("first complex realizes the transformed h in the flag range") {
  {
    const VeroneseQuotient V(MonomialIdeal::zero(2), 2);
    const SimplicialComplex D = build_delta(V);
    REQUIRE(f_polynomial(D) == V.transformed_h());
    REQUIRE(f_polynomial(D) == IntPolynomial({1, 1}));
    REQUIRE(is_flag(D));
  }
  {
    const VeroneseQuotient V(MonomialIdeal::zero(2), 3);
    REQUIRE(f_polynomial(build_delta(V)) == IntPolynomial({1, 2}));
  }
  {
    const VeroneseQuotient V(MonomialIdeal::zero(3), 3);
    const SimplicialComplex D = build_delta(V);
    REQUIRE(V.transformed_h() == IntPolynomial({1, 7, 1}));
    REQUIRE(f_polynomial(D) == V.transformed_h());
    REQUIRE(is_flag(D));
    // the unique 1-face is the unique standard splitting of x1^2x2^2x3^2
    std::size_t edges = 0;
    for (const auto& f : D.faces())
      if (f.size() == 2) ++edges;
    REQUIRE(edges == 1);
  }
  {
    const VeroneseQuotient V(rank_drop_ideal(), 3);
    const SimplicialComplex D = build_delta(V);
    REQUIRE(f_polynomial(D) == IntPolynomial({1, 67, 76}));
    REQUIRE(is_flag(D));
    REQUIRE(kruskal_katona_check(f_polynomial(D)));
  }
}

TEST_CASE("below the flag bound the chain count still matches") {
  // deg h = 2 and r = 1: multisets like (x1, x1) have no squarefree face
  const VeroneseQuotient V(MonomialIdeal(2, {mono({3, 0})}), 1);
  REQUIRE(V.transformed_h() == IntPolynomial({1, 1, 1}));
  REQUIRE(f_polynomial(build_delta(V)) == IntPolynomial({1, 1}));
  REQUIRE(standard_chain_polynomial(V) == IntPolynomial({1, 1, 1}));
}

TEST_CASE("chain count equals the transformed h for every r") {
  const MonomialIdeal I(3, {mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 2, 0})});
  for (int r = 1; r <= 4; ++r) {
    const VeroneseQuotient V(I, r);
    REQUIRE(standard_chain_polynomial(V) == V.transformed_h());
  }
}

TEST_CASE("second complex realizes g") {
  {  // socle degree 1: no admissible layer, the complex is empty
    const VeroneseQuotient V(MonomialIdeal(3, {mono({2, 0, 0})}), 2);
    const SimplicialComplex G = build_gamma(V);
    REQUIRE(G.vertices().empty());
    REQUIRE(f_polynomial(G) == IntPolynomial({1}));
    REQUIRE(f_polynomial(G) == h_to_g(V.transformed_h()));
  }
  {  // the counterexample: g = (1, 66)
    const VeroneseQuotient V(rank_drop_ideal(), 3);
    const SimplicialComplex G = build_gamma(V);
    REQUIRE(G.vertices().size() == 66);
    REQUIRE(f_polynomial(G) == IntPolynomial({1, 66}));
    REQUIRE(f_polynomial(G) == h_to_g(V.transformed_h()));
  }
  {  // dimension 6: layers k = 1 and k = 2 both contribute
    const VeroneseQuotient V(MonomialIdeal::zero(6), 3);
    REQUIRE(V.transformed_h() == IntPolynomial({1, 50, 141, 50, 1}));
    const SimplicialComplex G = build_gamma(V);
    REQUIRE(f_polynomial(G) == IntPolynomial({1, 49, 91}));
    REQUIRE(f_polynomial(G) == h_to_g(V.transformed_h()));
    REQUIRE(G.verify_closed());
  }
}

TEST_CASE("second complex rejects r below deg h") {
  const VeroneseQuotient V(MonomialIdeal(2, {mono({3, 0})}), 1);
  REQUIRE(V.base_h().degree() == 2);
  REQUIRE_THROWS_AS(build_gamma(V), std::invalid_argument);
}
