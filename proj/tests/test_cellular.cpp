#include <doctest.h>

#include <random>
#include <vector>

#include "flagmotive/cellular.hpp"
#include "flagmotive/errors.hpp"
#include "flagmotive/root_data.hpp"
#include "flagmotive/weyl.hpp"

using namespace flagmotive;

namespace {

StrictLinearScheme scheme_from(std::vector<std::vector<int>> levels,
                               bool proper = true) {
  StrictLinearScheme s;
  s.proper = proper;
  for (auto& ranks : levels) s.levels.push_back(StratumDescriptor{ranks});
  return s;
}

}  // namespace

TEST_CASE("strictness check") {
  CHECK(check_strictness(scheme_from({{0}, {1}, {2}, {3}})));
  CHECK(check_strictness(scheme_from({{0}, {1, 1}, {2, 2}, {3}})));
  CHECK(check_strictness(scheme_from({})));
  CHECK(check_strictness(scheme_from({{5}})));
  CHECK(check_strictness(scheme_from({{0}, {}, {1}})));
  CHECK_FALSE(check_strictness(scheme_from({{2}, {1}})));
  CHECK_FALSE(check_strictness(scheme_from({{0, 1}, {1}})));
  CHECK_FALSE(check_strictness(scheme_from({{0}, {2}, {1, 3}})));
}

TEST_CASE("assembly of strict filtrations") {
  TateMotive m = assemble_motive(scheme_from({{0}, {1}}), "S");
  CHECK(m == TateMotive::pure(0).direct_sum(TateMotive::pure(1)));
  CHECK_FALSE(m.waiver());

  TateMotive empty = assemble_motive(scheme_from({}), "S");
  CHECK(empty.is_zero());

  // Projective plane pattern: one cell in each codimension.
  TateMotive p2 = assemble_motive(scheme_from({{0}, {1}, {2}}), "S");
  CHECK(p2.rank() == 3);

  // A2 flag pattern by level: twists 0,1,1,2,2,3.
  TateMotive a2 =
      assemble_motive(scheme_from({{0}, {1, 1}, {2, 2}, {3}}), "S");
  CHECK(a2.rank() == 6);
  CHECK(a2.summands().at({0, 0}) == 1);
  CHECK(a2.summands().at({1, 0}) == 2);
  CHECK(a2.summands().at({2, 0}) == 2);
  CHECK(a2.summands().at({3, 0}) == 1);
}

TEST_CASE("assembly failure modes") {
  CHECK_THROWS_AS(assemble_motive(scheme_from({{0}}, false), "S"), NotProper);
  CHECK_THROWS_AS(assemble_motive(scheme_from({{2}, {1}}), "S"),
                  SplittingNotCertified);
  CHECK_THROWS_AS(assemble_motive(scheme_from({{1}, {1}}), "S"),
                  SplittingNotCertified);
  CHECK_THROWS_AS(assemble_motive(scheme_from({{0}, {-1}}), "S"), SyntaxError);
}

TEST_CASE("vanishing waiver admits non-strict filtrations") {
  TateMotive m = assemble_with_vanishing_waiver(scheme_from({{2}, {1}}), "S");
  CHECK(m.waiver());
  CHECK(m.rank() == 2);
  CHECK(m.summands().at({1, 0}) == 1);
  CHECK(m.summands().at({2, 0}) == 1);

  TateMotive wide =
      assemble_with_vanishing_waiver(scheme_from({{0, 5}, {1}}), "S");
  CHECK(wide.rank() == 3);

  CHECK_THROWS_AS(assemble_with_vanishing_waiver(scheme_from({{0}}, false), "S"),
                  NotProper);
}

TEST_CASE("waiver assembly agrees with certified assembly on strict input") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> levels_dist(0, 4);
  std::uniform_int_distribution<int> width_dist(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    // Build a strict scheme: level k contributes cells of twist k only,
    // with random multiplicity (possibly zero levels skipped).
    std::vector<std::vector<int>> levels;
    int depth = levels_dist(rng);
    for (int k = 0; k <= depth; ++k)
      levels.push_back(std::vector<int>(width_dist(rng), k));
    StrictLinearScheme s = scheme_from(levels);
    TateMotive certified = assemble_motive(s, "S");
    TateMotive waived = assemble_with_vanishing_waiver(s, "S");
    CHECK(certified == waived);
    CHECK_FALSE(certified.waiver());
    CHECK(waived.waiver());
  }
}

TEST_CASE("regrouping strata does not change the motive") {
  // Merging adjacent levels preserves the direct sum as long as the result
  // stays strict.
  TateMotive split = assemble_motive(scheme_from({{0}, {1}, {2}}), "S");
  TateMotive merged = assemble_motive(scheme_from({{0, 1}, {2}}), "S");
  TateMotive single = assemble_motive(scheme_from({{0, 1, 2}}), "S");
  CHECK(split == merged);
  CHECK(split == single);

  // Equal twists on consecutive levels need the waiver, but the result
  // still matches the certified single-level grouping.
  TateMotive waived =
      assemble_with_vanishing_waiver(scheme_from({{0}, {1}, {1}}), "S");
  TateMotive grouped = assemble_motive(scheme_from({{0}, {1, 1}}), "S");
  CHECK(waived == grouped);
}

TEST_CASE("flag variety model") {
  RootDatum a1 = parse_spec("A1");
  FlagVarietyModel model = make_flag_model(a1, default_budget());
  CHECK(model.filtration.levels.size() == 2);
  CHECK(check_strictness(model.filtration));
  TateMotive m = flag_motive(a1);
  CHECK(m.base_label() == "BT");
  CHECK(m.rank() == 2);
  CHECK(m.summands().at({0, 0}) == 1);
  CHECK(m.summands().at({1, 0}) == 1);

  TateMotive torus = flag_motive(parse_spec("T1"));
  CHECK(torus.rank() == 1);
  CHECK(torus.summands().at({0, 0}) == 1);

  TateMotive b2 = flag_motive(parse_spec("B2"));
  TwistPolynomial p = b2.twist_polynomial();
  CHECK(p.coefficient(0) == 1);
  CHECK(p.coefficient(1) == 2);
  CHECK(p.coefficient(2) == 2);
  CHECK(p.coefficient(3) == 2);
  CHECK(p.coefficient(4) == 1);
}

TEST_CASE("flag motive matches the Weyl census") {
  for (const char* spec : {"A1", "A2", "A3", "B2", "B3", "G2", "A1xA1", "T2"}) {
    RootDatum datum = parse_spec(spec);
    WeylGroup weyl = generate_weyl_group(datum);
    FlagVarietyModel model = make_flag_model(datum, default_budget());
    CHECK(check_strictness(model.filtration));
    CHECK(model.filtration.proper);

    TateMotive m = flag_motive(datum);
    CHECK(m.rank() == Int(weyl.order()));
    CHECK_FALSE(m.waiver());
    TwistPolynomial p = m.twist_polynomial();
    CHECK(p == weyl.poincare_polynomial());
    CHECK(p.is_palindromic());
  }
}

TEST_CASE("kunneth factorization") {
  auto [w, series] = kunneth_factorization(parse_spec("A1"), 4);
  CHECK(w.coefficient(0) == 1);
  CHECK(w.coefficient(1) == 1);
  REQUIRE(series.precision() == 4);
  // Classifying space of a rank-1 torus: all coefficients 1.
  CHECK(series.coefficients == std::vector<Int>{1, 1, 1, 1, 1});

  // Product over twists: (1 + q) * (1 + q + q^2 + ...) = 1 + 2q + 2q^2 + ...
  std::vector<Int> product(series.precision() + 1, 0);
  for (const auto& [e, c] : w.coefficients())
    for (int k = 0; e + k <= series.precision(); ++k)
      product[e + k] += c * series.coefficients[k];
  CHECK(product == std::vector<Int>{1, 2, 2, 2, 2});

  auto [w2, series2] = kunneth_factorization(parse_spec("A1xA1"), 3);
  CHECK(w2.evaluate_at_one() == 4);
  // Rank-2 torus: binomial(m + 1, 1) = m + 1.
  CHECK(series2.coefficients == std::vector<Int>{1, 2, 3, 4});

  auto [wt, st] = kunneth_factorization(parse_spec("T1"), 2);
  CHECK(wt == TwistPolynomial(Int(1)));
  CHECK(st.coefficients == std::vector<Int>{1, 1, 1});

  CHECK_THROWS_AS(kunneth_factorization(parse_spec("A1"), -1), SyntaxError);
}

TEST_CASE("filtration JSON input") {
  StrictLinearScheme s = filtration_from_json_text(
      R"({"levels": [[0], [1, 1], [2]], "label": "demo"})");
  CHECK(s.levels.size() == 3);
  CHECK(s.proper);
  CHECK(s.label == "demo");
  CHECK(s.levels[1].ranks == std::vector<int>{1, 1});

  StrictLinearScheme improper =
      filtration_from_json_text(R"({"levels": [[0]], "proper": false})");
  CHECK_FALSE(improper.proper);

  CHECK_THROWS_AS(filtration_from_json_text("{}"), SyntaxError);
  CHECK_THROWS_AS(filtration_from_json_text(R"({"levels": 3})"), SyntaxError);
  CHECK_THROWS_AS(filtration_from_json_text(R"({"levels": [[0.5]]})"),
                  SyntaxError);
  CHECK_THROWS_AS(filtration_from_json_text("not json"), SyntaxError);
}
