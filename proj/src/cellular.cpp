#include "flagmotive/cellular.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <string>

#include "flagmotive/errors.hpp"

namespace flagmotive {

bool check_strictness(const StrictLinearScheme& scheme) {
  bool have_prev = false;
  int prev_max = 0;
  for (const auto& level : scheme.levels) {
    if (level.ranks.empty()) continue;
    int lo = level.ranks.front();
    int hi = level.ranks.front();
    for (int r : level.ranks) {
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    if (have_prev && prev_max >= lo) return false;
    prev_max = hi;
    have_prev = true;
  }
  return true;
}

namespace {

// Shared fold: one pure twist <i> per stratum. Connecting maps run from a
// new level into the union of the earlier ones, so certification compares
// each new twist only against twists from completed levels.
TateMotive fold_levels(const StrictLinearScheme& scheme, const std::string& base,
                       bool certify) {
  TateMotive motive(base);
  std::set<int> prior;
  for (const auto& level : scheme.levels) {
    for (int i : level.ranks) {
      if (i < 0) throw SyntaxError("stratum ranks must be nonnegative");
      if (certify) {
        for (int k : prior)
          if (!vanishing_guard(i - k, -1))
            throw SplittingNotCertified(
                "connecting map into twist " + std::to_string(k) +
                " from twist " + std::to_string(i) + " is not certified zero");
      }
    }
    for (int i : level.ranks) motive.add_summand(i, 0, 1);
    for (int i : level.ranks) prior.insert(i);
  }
  return motive;
}

void require_proper(const StrictLinearScheme& scheme) {
  if (!scheme.proper)
    throw NotProper("splitting requires a proper scheme; compactly-supported and "
                    "plain motives differ otherwise");
  for (const auto& level : scheme.levels)
    for (int i : level.ranks)
      if (i < 0) throw SyntaxError("stratum ranks must be nonnegative");
}

}  // namespace

TateMotive assemble_motive(const StrictLinearScheme& scheme,
                           const std::string& base_label) {
  require_proper(scheme);
  if (!check_strictness(scheme))
    throw SplittingNotCertified(
        "filtration is not strict; use the vanishing waiver if the ambient "
        "theory has Hom(1<n>[-1], 1) = 0 for all n");
  return fold_levels(scheme, base_label, /*certify=*/true);
}

TateMotive assemble_with_vanishing_waiver(const StrictLinearScheme& scheme,
                                          const std::string& base_label) {
  require_proper(scheme);
  TateMotive motive = fold_levels(scheme, base_label, /*certify=*/false);
  motive.set_waiver(true);
  return motive;
}

FlagVarietyModel make_flag_model(const RootDatum& datum, std::uint64_t budget) {
  FlagVarietyModel model{datum, WeylGroup::generate(datum.cartan, budget), {}};
  auto hist = model.weyl.length_histogram();
  model.filtration.proper = true;
  model.filtration.label = "G/B(" + datum.label + ")";
  model.filtration.levels.reserve(hist.size());
  for (std::size_t n = 0; n < hist.size(); ++n) {
    StratumDescriptor level;
    level.ranks.assign(hist[n], static_cast<int>(n));
    model.filtration.levels.push_back(std::move(level));
  }
  return model;
}

TateMotive flag_motive(const RootDatum& datum, std::uint64_t budget) {
  FlagVarietyModel model = make_flag_model(datum, budget);
  return assemble_motive(model.filtration, "BT");
}

TateMotive flag_motive(const RootDatum& datum) {
  return flag_motive(datum, default_budget());
}

std::pair<TwistPolynomial, PoincareSeries> kunneth_factorization(
    const RootDatum& datum, int precision, std::uint64_t budget) {
  if (precision < 0) throw SyntaxError("precision must be nonnegative");
  WeylGroup weyl = WeylGroup::generate(datum.cartan, budget);
  TwistPolynomial flag_part = weyl.poincare_polynomial();

  const int r = datum.torus_rank;
  PoincareSeries classifying;
  classifying.coefficients.reserve(precision + 1);
  for (int m = 0; m <= precision; ++m)
    classifying.coefficients.push_back(r == 0 ? Int(m == 0 ? 1 : 0)
                                              : binomial(m + r - 1, r - 1));
  if (r == 0)
    classifying.closed_form = "1";
  else if (r == 1)
    classifying.closed_form = "1/(1-q)";
  else
    classifying.closed_form = "1/(1-q)^" + std::to_string(r);
  return {std::move(flag_part), std::move(classifying)};
}

StrictLinearScheme filtration_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("levels"))
    throw SyntaxError("filtration JSON must be an object with \"levels\"");

  StrictLinearScheme scheme;
  if (j.contains("proper")) {
    if (!j["proper"].is_boolean()) throw SyntaxError("\"proper\" must be a boolean");
    scheme.proper = j["proper"].get<bool>();
  }
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw SyntaxError("\"label\" must be a string");
    scheme.label = j["label"].get<std::string>();
  }
  if (!j["levels"].is_array()) throw SyntaxError("\"levels\" must be an array");
  for (const auto& level : j["levels"]) {
    if (!level.is_array()) throw SyntaxError("each level must be an array of ranks");
    StratumDescriptor descriptor;
    for (const auto& rank : level) {
      if (!rank.is_number_integer()) throw SyntaxError("ranks must be integers");
      int r = rank.get<int>();
      if (r < 0) throw SyntaxError("stratum ranks must be nonnegative");
      descriptor.ranks.push_back(r);
    }
    scheme.levels.push_back(std::move(descriptor));
  }
  return scheme;
}

}  // namespace flagmotive
