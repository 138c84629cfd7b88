// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "flagmotive/cellular.hpp"
#include "flagmotive/character_ring.hpp"
#include "flagmotive/errors.hpp"
#include "flagmotive/realization.hpp"
#include "flagmotive/root_data.hpp"
#include "flagmotive/tate.hpp"
#include "flagmotive/weyl.hpp"

using namespace flagmotive;

namespace {

const std::vector<const char*> kRank3Types = {"A1", "A2", "A3", "B2",
                                              "B3", "C3", "G2"};

struct Criterion {
  int number;
  std::string summary;
  double seconds_limit;  // <= 0 means no wall-clock requirement
  std::function<void()> run;  // throws std::runtime_error on failure
};

[[noreturn]] void fail(const std::string& why) { throw std::runtime_error(why); }

void require(bool ok, const std::string& why) {
  if (!ok) fail(why);
}

void criterion_sl2_fixture() {
  TateMotive m = flag_motive(parse_spec("A1"));
  std::map<std::pair<int, int>, Int> expected{{{0, 0}, 1}, {{1, 0}, 1}};
  require(m.summands() == expected, "summands differ from {1<0>, 1<1>}");
  require(m.base_label() == "BT", "flag motive should live over BT");
}

void criterion_completion_fixture() {
  CharacterRingElement tinv = CharacterRingElement::character({-1});
  CompletedElement series = complete(tinv, 8);
  CompletedElement geometric(1, 8);
  for (int k = 0; k <= 8; ++k) geometric.add_term({k}, Int(1));
  require(series == geometric, "complete(t^-1, 8) != 1 + x + ... + x^8");

  CompletedElement one_minus_x(1, 8);
  one_minus_x.add_term({0}, Int(1));
  one_minus_x.add_term({1}, Int(-1));
  require(series * one_minus_x == CompletedElement::one(1, 8),
          "(1 + ... + x^8)(1 - x) != 1 mod x^9");
}

void criterion_flag_twist_polynomials() {
  auto check_one = [](const char* spec, double limit) {
    auto start = std::chrono::steady_clock::now();
    RootDatum datum = parse_spec(spec);
    WeylGroup weyl = generate_weyl_group(datum);

    // Poincare polynomial straight from the length census.
    QPolynomial census;
    std::vector<std::uint64_t> hist = weyl.length_histogram();
    for (std::size_t l = 0; l < hist.size(); ++l)
      census.add_term(static_cast<int>(l), Int(hist[l]));

    TwistPolynomial twist = flag_motive(datum).twist_polynomial();
    require(twist == census, std::string(spec) + ": twist polynomial differs");
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed >= limit)
      fail(std::string(spec) + " took " + std::to_string(elapsed) + "s");
  };
  for (const char* spec : kRank3Types) check_one(spec, 1.0);
  check_one("F4", 10.0);
}

void criterion_oracle_equivalence() {
  for (const char* spec :
       {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"}) {
    RootDatum datum = parse_spec(spec);
    WeylGroup weyl = generate_weyl_group(datum);
    auto oracle = oracle_weyl_group(datum.cartan);
    require(oracle.size() == weyl.order(),
            std::string(spec) + ": group sizes differ");
    for (const auto& m : oracle)
      require(weyl.index_of(m).has_value(),
              std::string(spec) + ": oracle element missing from generator");

    std::map<int, std::uint64_t> oracle_hist;
    for (const auto& m : oracle) oracle_hist[inversion_count(datum.cartan, m)]++;
    std::vector<std::uint64_t> hist = weyl.length_histogram();
    require(oracle_hist.size() == hist.size(),
            std::string(spec) + ": histogram lengths differ");
    for (std::size_t l = 0; l < hist.size(); ++l)
      require(oracle_hist[static_cast<int>(l)] == hist[l],
              std::string(spec) + ": histograms differ at length " +
                  std::to_string(l));
  }
}

void criterion_invariant_suite() {
  for (const char* spec : kRank3Types) {
    RootDatum datum = parse_spec(spec);
    WeylGroup weyl = generate_weyl_group(datum);
    QPolynomial p = weyl.poincare_polynomial();
    require(p.is_palindromic(), std::string(spec) + ": not palindromic");
    require(p.evaluate_at_one() == Int(weyl.order()),
            std::string(spec) + ": coefficients do not sum to |W|");
    for (std::uint32_t i = 0; i < weyl.order(); ++i)
      require(inversion_count(datum.cartan, weyl.matrix(i)) == weyl.length(i),
              std::string(spec) + ": length != inversion count");
  }
  for (int n = 1; n <= 4; ++n) {
    WeylGroup weyl = generate_weyl_group(parse_spec("A" + std::to_string(n)));
    require(Int(weyl.order()) == factorial(n + 1),
            "|W(A" + std::to_string(n) + ")| != " + std::to_string(n + 1) + "!");
  }
}

void criterion_strictness_gate() {
  StrictLinearScheme scheme;
  scheme.levels.push_back({{2}});
  scheme.levels.push_back({{1}});

  bool threw = false;
  try {
    assemble_motive(scheme, "S");
  } catch (const SplittingNotCertified&) {
    threw = true;
  }
  require(threw, "non-strict filtration was assembled without the waiver");

  TateMotive m = assemble_with_vanishing_waiver(scheme, "S");
  std::map<std::pair<int, int>, Int> expected{{{1, 0}, 1}, {{2, 0}, 1}};
  require(m.summands() == expected, "waiver result is not {1<2>, 1<1>}");
  require(m.waiver(), "waiver flag not recorded");
}

void criterion_kunneth_shadow() {
  for (const char* spec : kRank3Types) {
    RootDatum datum = parse_spec(spec);
    auto [w, classifying] = kunneth_factorization(datum, 6);
    auto [w2, quotient] = chow_poincare(datum, 6, default_budget());
    require(w == w2, std::string(spec) + ": twist polynomials differ");

    std::vector<Int> product(7, Int(0));
    for (const auto& [e, c] : w.coefficients())
      for (int m = e; m <= 6; ++m)
        product[m] += c * classifying.coefficients[m - e];
    require(product == quotient.coefficients,
            std::string(spec) + ": W(q)/(1-q)^r != W(q) * expansion");
  }
}

void criterion_k_theory_shadow() {
  for (const char* spec : kRank3Types) {
    RootDatum datum = parse_spec(spec);
    WeylGroup weyl = generate_weyl_group(datum);
    for (int i : {0, 1, 2}) {
      ModulePresentation p = equivariant_k_groups(datum, i);
      require(p.rank() == weyl.order(),
              std::string(spec) + ": K_" + std::to_string(i) +
                  " rank != |W|");
      require(p.relations.empty(),
              std::string(spec) + ": K-groups must be relation-free");
    }
    for (int precision = 0; precision <= 6; ++precision) {
      IdentityReport r = completed_k0_identity(datum, precision, default_budget());
      require(r.ranks_equal, std::string(spec) + ": completed ranks differ at precision " +
                                 std::to_string(precision));
      require(r.tor_vanishes, std::string(spec) + ": Tor obstruction at precision " +
                                  std::to_string(precision));
      require(r.lhs.rank() == weyl.order(),
              std::string(spec) + ": completed rank != |W|");
    }
  }
}

void criterion_completion_homomorphism() {
  std::mt19937 rng(987654321u);
  std::uniform_int_distribution<int> rank_dist(1, 3);
  std::uniform_int_distribution<int> prec_dist(0, 8);
  std::uniform_int_distribution<int> terms_dist(0, 4);
  std::uniform_int_distribution<int> exp_dist(-3, 3);
  std::uniform_int_distribution<int> coef_dist(-4, 4);

  auto random_element = [&](int rank) {
    CharacterRingElement a(rank);
    int terms = terms_dist(rng);
    for (int t = 0; t < terms; ++t) {
      std::vector<int> exp(rank);
      for (int& e : exp) e = exp_dist(rng);
      a.add_term(std::move(exp), Int(coef_dist(rng)));
    }
    return a;
  };

  for (int trial = 0; trial < 100; ++trial) {
    int rank = rank_dist(rng);
    int precision = prec_dist(rng);
    CharacterRingElement a = random_element(rank);
    CharacterRingElement b = random_element(rank);
    require(complete(a * b, precision) ==
                complete(a, precision) * complete(b, precision),
            "complete(ab) != complete(a) * complete(b) on trial " +
                std::to_string(trial));
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "A1 flag motive is exactly {1<0>, 1<1>}", 1.0, criterion_sl2_fixture},
      {2, "completing t^-1 at precision 8 gives the geometric series", 1.0,
       criterion_completion_fixture},
      {3, "flag twist polynomials match length censuses (rank <= 3 and F4)",
       -1.0, criterion_flag_twist_polynomials},
      {4, "word generation matches brute-force enumeration (A1-A4, B2, B3, "
          "C3, D4, G2)",
       30.0, criterion_oracle_equivalence},
      {5, "palindromes, inversion counts, |W(An)| = (n+1)!, coefficient sums",
       -1.0, criterion_invariant_suite},
      {6, "non-strict filtration rejected without waiver, assembled with it",
       -1.0, criterion_strictness_gate},
      {7, "W(q)/(1-q)^r equals the twist polynomial times 1/(1-q)^r",
       1.0, criterion_kunneth_shadow},
      {8, "K-group ranks equal |W|; completed identity has equal ranks, no Tor",
       -1.0, criterion_k_theory_shadow},
      {9, "completion is multiplicative on 100 random Laurent pairs", 5.0,
       criterion_completion_homomorphism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (error.empty() && c.seconds_limit > 0 && elapsed >= c.seconds_limit) {
      std::ostringstream why;
      why << "exceeded " << c.seconds_limit << "s wall clock";
      error = why.str();
    }
    if (error.empty()) {
      std::printf("PASS criterion %d: %s (%.2fs)\n", c.number,
                  c.summary.c_str(), elapsed);
    } else {
      std::printf("FAIL criterion %d: %s: %s (%.2fs)\n", c.number,
                  c.summary.c_str(), error.c_str(), elapsed);
      ++failures;
    }
  }
  if (failures > 0) {
    std::printf("acceptance: %d of %zu criteria failed\n", failures,
                criteria.size());
    return 1;
  }
  std::printf("acceptance: all %zu criteria passed\n", criteria.size());
  return 0;
}
