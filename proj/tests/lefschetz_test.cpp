// Property decisions by exact rank, the rank-drop certificate, and the case
// table with its gap predictions.
#include <catch2/catch_amalgamated.hpp>

#include "verolef/lefschetz.hpp"

using namespace verolef;

static Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

static VeroneseQuotient wide_quotient(int r) {
  return VeroneseQuotient(
      MonomialIdeal(3, {mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 2, 0})}), r);
}

TEST_CASE("socle degree") {
  REQUIRE(socle_degree(wide_quotient(2)) == 1);
  REQUIRE(socle_degree(VeroneseQuotient(MonomialIdeal::zero(1), 1)) == 0);
  REQUIRE(socle_degree(VeroneseQuotient(rank_drop_ideal(), 3)) == 2);
}

TEST_CASE("names for verdicts and properties") {
  REQUIRE(std::string(verdict_name(StepVerdict::both)) == "both");
  REQUIRE(std::string(verdict_name(StepVerdict::neither)) == "neither");
  REQUIRE(std::string(property_name(LefschetzProperty::almost_weak)) ==
          "almost-weak");
}

TEST_CASE("width-3 example at r = 2: weak fails only at step 0") {
  const VeroneseQuotient V = wide_quotient(2);
  const Form w = power_linear_form(V);  // x3^2, which lies in J
  const LefschetzReport weak = check_weak(V, w);
  REQUIRE_FALSE(weak.holds);
  REQUIRE(weak.per_degree.size() == 2);
  REQUIRE(weak.per_degree[0].verdict == StepVerdict::neither);
  REQUIRE(weak.per_degree[0].rank == 0);
  REQUIRE(weak.per_degree[1].verdict == StepVerdict::surjective);
  const LefschetzReport aw = check_almost_weak(V, w);
  REQUIRE(aw.holds);
  REQUIRE(aw.gap.has_value());
  REQUIRE(*aw.gap == 0);
}

TEST_CASE("weak implies almost weak without a gap") {
  const VeroneseQuotient V(MonomialIdeal::zero(2), 2);
  const Form w = power_linear_form(V);
  const LefschetzReport weak = check_weak(V, w);
  REQUIRE(weak.holds);
  const LefschetzReport aw = check_almost_weak(V, w);
  REQUIRE(aw.holds);
  REQUIRE_FALSE(aw.gap.has_value());
}

TEST_CASE("iterated multiplication matrices") {
  const VeroneseQuotient V(MonomialIdeal::zero(2), 2);
  const Form w = power_linear_form(V);
  REQUIRE(iterated_multiplication_matrix(V, w, 0, 1) ==
          multiplication_matrix(V, w, 0));
  REQUIRE_THROWS_AS(iterated_multiplication_matrix(V, w, 0, 0),
                    std::invalid_argument);
  const Form wrong = {{mono({1, 0}), Integer(1)}};  // degree 1, not r
  REQUIRE_THROWS_AS(iterated_multiplication_matrix(V, wrong, 0, 1),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(check_k_lefschetz(V, w, 0), std::invalid_argument);
}

TEST_CASE("rank-drop quotient at r = 3") {
  const VeroneseQuotient V(rank_drop_ideal(), 3);
  REQUIRE(V.base_h() == IntPolynomial({1, 5, 10}));
  REQUIRE(V.transformed_h() == IntPolynomial({1, 67, 76}));
  const Form w = power_linear_form(V);

  const LefschetzReport aw = check_almost_weak(V, w);
  REQUIRE(aw.holds);
  REQUIRE(aw.gap.has_value());
  REQUIRE(*aw.gap == 1);
  REQUIRE(aw.per_degree[1].dim_from == 67);
  REQUIRE(aw.per_degree[1].dim_to == 76);
  REQUIRE(aw.per_degree[1].rank == 46);
  REQUIRE(aw.per_degree[1].verdict == StepVerdict::neither);
  REQUIRE_FALSE(check_weak(V, w).holds);

  // no degree-r form is injective on piece 1, so random search stays short
  const long best = generic_max_rank(V, 1, 2, 12345, 1000);
  REQUIRE(best > 0);
  REQUIRE(best < V.graded_dim(1));
  REQUIRE_THROWS_AS(generic_max_rank(V, 1, 0, 1, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(generic_max_rank(V, 1, 1, 1, 0), std::invalid_argument);

  const InstanceReport rep = verify_instance(V);
  REQUIRE(rep.pass);
  REQUIRE(rep.checks.size() == 9);
  for (const InstanceCheck& c : rep.checks) {
    if (c.name == "almost_weak") REQUIRE(c.applicable);
    if (c.name == "case_table_gap") {
      REQUIRE(c.applicable);
      REQUIRE(c.pass);
    }
    if (c.name == "weak_even") REQUIRE_FALSE(c.applicable);
    if (c.name == "weak_odd") REQUIRE_FALSE(c.applicable);
  }
}

TEST_CASE("rank-drop certificate") {
  const RankDropCertificate c3 = rank_drop_certificate(3);
  REQUIRE(c3.holds);
  REQUIRE(c3.annihilation);
  REQUIRE(c3.dims_match);
  REQUIRE(c3.strict_drop);
  REQUIRE(c3.dim_v == 6);
  REQUIRE(c3.dim_w == 3);
  const RankDropCertificate c5 = rank_drop_certificate(5);
  REQUIRE(c5.holds);
  REQUIRE(c5.dim_v == 15);
  REQUIRE(c5.dim_w == 10);
  REQUIRE_THROWS_AS(rank_drop_certificate(2), std::invalid_argument);
}

TEST_CASE("case table selection is pinned on three shapes") {
  {
    const GapCaseSelection sel = gap_case_selection(2, 4);
    REQUIRE(sel.cases.size() == 2);
    REQUIRE(sel.cases[0].id == "a.i");
    REQUIRE(sel.cases[1].id == "a.ii");
    REQUIRE(sel.cases[0].r_bound == Rational(2));
    REQUIRE(sel.cases[1].r_bound == Rational(2));
    REQUIRE(sel.min_bound == Rational(2));
    for (const GapCase& c : sel.cases)
      REQUIRE(predicted_gaps(c, 2, 3) == std::set<int>{1});
  }
  {
    const GapCaseSelection sel = gap_case_selection(4, 4);
    REQUIRE(sel.cases.size() == 2);
    REQUIRE(sel.cases[0].id == "a.ii");
    REQUIRE(sel.cases[1].id == "a.iii");
    REQUIRE(sel.min_bound == Rational(4));
    REQUIRE(predicted_gaps(sel.cases[0], 4, 4) == std::set<int>{2});
    REQUIRE(predicted_gaps(sel.cases[1], 4, 4) == std::set<int>{1, 3});
  }
  {
    const GapCaseSelection sel = gap_case_selection(3, 1);
    REQUIRE(sel.cases.size() == 1);
    REQUIRE(sel.cases[0].id == "b.iii");
    REQUIRE(sel.cases[0].rule == GapRule::mid_socle);
    REQUIRE(sel.min_bound == Rational(1));
    REQUIRE(predicted_gaps(sel.cases[0], 3, 3) == std::set<int>{1});
  }
  {
    // the counterexample shape: only b.ii applies, predicting the gap at 1
    const GapCaseSelection sel = gap_case_selection(3, 2);
    REQUIRE(sel.cases.size() == 1);
    REQUIRE(sel.cases[0].id == "b.ii");
    REQUIRE(sel.cases[0].r_bound == detail::make_rational(3, 2));
    REQUIRE(predicted_gaps(sel.cases[0], 3, 3) == std::set<int>{1});
  }
}

TEST_CASE("case table covers every shape and drops negative gaps") {
  for (int d = 0; d <= 8; ++d)
    for (int dh = 0; dh <= 8; ++dh) {
      const GapCaseSelection sel = gap_case_selection(d, dh);
      REQUIRE_FALSE(sel.cases.empty());
      for (const GapCase& c : sel.cases)
        for (int g : predicted_gaps(c, d, 2)) REQUIRE(g >= 0);
    }
  const GapCase shifted{"x", Rational(0), GapRule::half_d_shifted};
  REQUIRE(predicted_gaps(shifted, 0, 1) == std::set<int>{1});
  REQUIRE_THROWS_AS(predicted_gaps(shifted, 0, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(gap_case_selection(-1, 0), std::invalid_argument);
}

TEST_CASE("instance verifier passes on small quotients") {
  for (int r = 1; r <= 3; ++r) {
    const InstanceReport rep = verify_instance(wide_quotient(r));
    REQUIRE(rep.pass);
    REQUIRE(rep.checks.size() == 9);
  }
  const InstanceReport rep = verify_instance(VeroneseQuotient(MonomialIdeal::zero(2), 2));
  REQUIRE(rep.pass);
  for (const InstanceCheck& c : rep.checks)
    if (c.name == "weak_even") REQUIRE(c.applicable);
}

TEST_CASE("power complete intersection sweep") {
  const CiSweepReport rep = ci_rank_sweep(2, 2);
  REQUIRE(rep.pass);
  REQUIRE(rep.top == 2);
  REQUIRE(rep.pairs_checked == 3);
  REQUIRE(rep.modular_certified == 3);
  REQUIRE(rep.exact_fallbacks == 0);
  REQUIRE(rep.failures.empty());
  const CiSweepReport trivial = ci_rank_sweep(3, 1);
  REQUIRE(trivial.pass);
  REQUIRE(trivial.pairs_checked == 0);
  REQUIRE_THROWS_AS(ci_rank_sweep(0, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(ci_rank_sweep(1, 0), std::invalid_argument);
}
