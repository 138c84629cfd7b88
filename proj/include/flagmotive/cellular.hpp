#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "flagmotive/qpoly.hpp"
#include "flagmotive/root_data.hpp"
#include "flagmotive/tate.hpp"
#include "flagmotive/weyl.hpp"

namespace flagmotive {

// Vector-bundle ranks occurring in one filtration level, with multiplicity.
struct StratumDescriptor {
  std::vector<int> ranks;
};

// A scheme recorded purely through its stratification rank data: level n
// lists the bundle ranks of the strata of U_n = X_n \ X_{n-1}.
struct StrictLinearScheme {
  std::vector<StratumDescriptor> levels;
  bool proper = true;
  std::string label;
};

// True iff every consecutive pair of nonempty levels satisfies
// max(ranks at the earlier level) < min(ranks at the later level).
bool check_strictness(const StrictLinearScheme& scheme);

// Fold over levels, adding one pure twist <i> per stratum of rank i. Before
// each addition the connecting-map certificate vanishing_guard(i_n - i_k, -1)
// is checked against every previously added twist i_k. Requires properness
// and strictness; refuses to emit an uncertified decomposition.
TateMotive assemble_motive(const StrictLinearScheme& scheme,
                           const std::string& base_label);

// Same sum under the caller's assertion that Hom(1<n>[-1], 1) = 0 for all n,
// which removes the strictness requirement. The output is flagged as
// waiver-assembled.
TateMotive assemble_with_vanishing_waiver(const StrictLinearScheme& scheme,
                                          const std::string& base_label);

// Flag variety of a root datum: one stratum of rank l(w) per Weyl element,
// level n collecting the elements of length n.
struct FlagVarietyModel {
  RootDatum datum;
  WeylGroup weyl;
  StrictLinearScheme filtration;
};

FlagVarietyModel make_flag_model(const RootDatum& datum, std::uint64_t budget);

// The motive of the torus-quotiented flag variety over the classifying base:
// one summand 1<l(w)> per Weyl element.
TateMotive flag_motive(const RootDatum& datum, std::uint64_t budget);
TateMotive flag_motive(const RootDatum& datum);

// Factor the equivariant motive as (finite flag part, classifying-space
// part): the twist polynomial of M(G/B) and the series 1/(1-q)^torus_rank
// truncated at the given precision.
std::pair<TwistPolynomial, PoincareSeries> kunneth_factorization(
    const RootDatum& datum, int precision,
    std::uint64_t budget = default_budget());

// Accepts {"proper": bool, "levels": [[ranks...], ...], "label": "..."};
// proper defaults to true, label to "".
StrictLinearScheme filtration_from_json_text(const std::string& text);

}  // namespace flagmotive
