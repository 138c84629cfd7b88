#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "flagmotive/presentation.hpp"
#include "flagmotive/qpoly.hpp"
#include "flagmotive/root_data.hpp"
#include "flagmotive/tate.hpp"
#include "flagmotive/weyl.hpp"

namespace flagmotive {

// Rank-level record of the completed-K0 base change: a completed free
// module of rank |W| against K_0(G/B)_Q tensored with the completed
// coefficient ring, plus the degenerate Tor statement that freeness yields.
struct IdentityReport {
  std::string group;
  ModulePresentation lhs;
  ModulePresentation rhs;
  std::string completed_ring;
  int precision = 0;
  bool ranks_equal = false;
  bool tor_vanishes = false;
};

// Homotopy-invariant K-theory of a shift-free motive: one generator per
// summand over KH(BT); the twist grading is recorded but collapsed by Bott
// periodicity. Generators are auto-labeled b1..bn in twist order unless a
// basis is supplied.
ModulePresentation kh_decomposition(const TateMotive& motive);
ModulePresentation kh_decomposition(const TateMotive& motive,
                                    std::vector<BasisGenerator> basis);

// K_i^T(G/B) as a free module of rank |W| over K_i^T(S), with Schubert-cell
// basis labels [C_w]. Defined for i >= 0 only.
ModulePresentation equivariant_k_groups(const RootDatum& datum, int i,
                                        std::uint64_t budget = default_budget());

// Rational variant over a field: K_i(k)_Q (kept symbolic) tensored with a
// free R(T)_Q-module of rank |W|. The symbolic factor is trivial for i = 0.
ModulePresentation rational_ki_presentation(const RootDatum& datum, int i,
                                            std::uint64_t budget = default_budget());

// Rank comparison of both sides of the completed-K0 base change at the
// stated truncation precision, with the Tor vanishing that freeness forces.
IdentityReport completed_k0_identity(const RootDatum& datum, int precision,
                                     std::uint64_t budget = default_budget());

// (Poincare polynomial W(q) of the flag variety, series W(q)/(1-q)^r with
// r = torus_rank, expanded to `precision`). The series is computed twice,
// by linear recurrence and by convolution with the geometric series, and
// the routes must agree.
std::pair<PoincarePolynomial, PoincareSeries> chow_poincare(
    const RootDatum& datum, int precision, std::uint64_t budget = default_budget());

// Schubert basis of a Weyl group: labels [C_w] with degree l(w), listed in
// canonical order (length, then lexicographic canonical word).
std::vector<BasisGenerator> schubert_basis(const WeylGroup& weyl);

}  // namespace flagmotive
