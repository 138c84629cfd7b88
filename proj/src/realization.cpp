#include "flagmotive/realization.hpp"

#include <algorithm>
#include <sstream>

#include "flagmotive/character_ring.hpp"
#include "flagmotive/errors.hpp"

namespace flagmotive {

std::vector<BasisGenerator> schubert_basis(const WeylGroup& weyl) {
  std::vector<BasisGenerator> basis;
  basis.reserve(weyl.order());
  for (std::uint32_t idx : weyl.canonical_order()) {
    std::vector<int> word = weyl.canonical_word(idx);
    basis.push_back({"[C_" + word_label(word) + "]", static_cast<int>(word.size())});
  }
  return basis;
}

ModulePresentation kh_decomposition(const TateMotive& motive,
                                    std::vector<BasisGenerator> basis) {
  if (motive.has_shift())
    throw ShiftPresent("KH decomposition needs a shift-free motive");
  const std::string ring = "KH(" + motive.base_label() + ")";
  Int rank = motive.rank();
  if (rank > 1'000'000'000)
    throw BudgetExceeded("presentation rank too large to materialize");
  ModulePresentation p = free_module_presentation(
      static_cast<std::size_t>(rank.convert_to<std::uint64_t>()), 0,
      std::move(basis), ring);
  // Twists survive as degrees on the generators but no longer grade the
  // theory.
  p.grading_collapsed = true;
  return p;
}

ModulePresentation kh_decomposition(const TateMotive& motive) {
  if (motive.has_shift())
    throw ShiftPresent("KH decomposition needs a shift-free motive");
  std::vector<BasisGenerator> basis;
  int k = 0;
  for (const auto& [key, mult] : motive.summands())
    for (Int j = 0; j < mult; ++j)
      basis.push_back({"b" + std::to_string(++k), key.first});
  return kh_decomposition(motive, std::move(basis));
}

ModulePresentation equivariant_k_groups(const RootDatum& datum, int i,
                                        std::uint64_t budget) {
  if (i < 0)
    throw NegativeDegree("K_" + std::to_string(i) +
                         " lies outside the connective range i >= 0");
  WeylGroup weyl = WeylGroup::generate(datum.cartan, budget);
  const std::string ring = i == 0 ? "R(T)" : "K_" + std::to_string(i) + "^T(S)";
  return free_module_presentation(weyl.order(), datum.torus_rank,
                                  schubert_basis(weyl), ring);
}

ModulePresentation rational_ki_presentation(const RootDatum& datum, int i,
                                            std::uint64_t budget) {
  WeylGroup weyl = WeylGroup::generate(datum.cartan, budget);
  ModulePresentation p = free_module_presentation(
      weyl.order(), datum.torus_rank, schubert_basis(weyl), "R(T)_Q");
  if (i != 0) {
    p.symbolic_factor = "K_" + std::to_string(i) + "(k)_Q";
    p.description = p.symbolic_factor + " (x)_Q " + p.description;
  }
  return p;
}

namespace {

std::string completed_ring_descriptor(int torus_rank, int precision) {
  if (torus_rank == 0) return "Q";
  std::ostringstream out;
  out << "Q[[";
  for (int i = 1; i <= torus_rank; ++i) {
    if (i > 1) out << ",";
    if (torus_rank == 1)
      out << "x";
    else
      out << "x" << i;
  }
  out << "]]/deg>" << precision;
  return out.str();
}

}  // namespace

IdentityReport completed_k0_identity(const RootDatum& datum, int precision,
                                     std::uint64_t budget) {
  if (precision < 0) throw SyntaxError("precision must be nonnegative");
  WeylGroup weyl = WeylGroup::generate(datum.cartan, budget);
  std::vector<BasisGenerator> basis = schubert_basis(weyl);

  IdentityReport report;
  report.group = datum.label;
  report.precision = precision;
  report.completed_ring = completed_ring_descriptor(datum.torus_rank, precision);

  report.lhs = free_module_presentation(weyl.order(), datum.torus_rank, basis,
                                        report.completed_ring);
  report.lhs.description = "completed K_0^T(G/B)_Q: " + report.lhs.description;

  report.rhs = free_module_presentation(weyl.order(), datum.torus_rank,
                                        std::move(basis), report.completed_ring);
  report.rhs.description =
      "K_0(G/B)_Q (x)_Q " + report.completed_ring + ": " + report.rhs.description;

  report.ranks_equal = report.lhs.rank() == report.rhs.rank();
  // Freeness of the K_0(G/B)_Q factor kills Tor_p for p >= 1.
  report.tor_vanishes =
      report.lhs.relations.empty() && report.rhs.relations.empty();
  return report;
}

std::pair<PoincarePolynomial, PoincareSeries> chow_poincare(
    const RootDatum& datum, int precision, std::uint64_t budget) {
  if (precision < 0) throw SyntaxError("precision must be nonnegative");
  WeylGroup weyl = WeylGroup::generate(datum.cartan, budget);
  PoincarePolynomial w = weyl.poincare_polynomial();
  const int r = datum.torus_rank;

  // Route 1: linear recurrence from (1-q)^r * S(q) = W(q).
  std::vector<Int> rec(static_cast<std::size_t>(precision) + 1, Int(0));
  for (int m = 0; m <= precision; ++m) {
    Int s = w.coefficient(m);
    for (int j = 1; j <= std::min(m, r); ++j) {
      Int term = binomial(r, j) * rec[m - j];
      s += (j % 2 == 1) ? term : -term;
    }
    rec[m] = s;
  }

  // Route 2: convolution of W(q) with the geometric expansion of 1/(1-q)^r.
  std::vector<Int> conv(static_cast<std::size_t>(precision) + 1, Int(0));
  for (const auto& [k, c] : w.coefficients()) {
    for (int m = k; m <= precision; ++m) {
      Int geom = r == 0 ? Int(m == k ? 1 : 0) : binomial(m - k + r - 1, r - 1);
      conv[m] += c * geom;
    }
  }

  if (rec != conv)
    throw Error("VerificationFailed",
                "recurrence and convolution series for " + datum.label +
                    " disagree");

  PoincareSeries series;
  series.coefficients = std::move(rec);
  if (r == 0)
    series.closed_form = "W(q)";
  else if (r == 1)
    series.closed_form = "W(q)/(1-q)";
  else
    series.closed_form = "W(q)/(1-q)^" + std::to_string(r);
  return {std::move(w), std::move(series)};
}

}  // namespace flagmotive
