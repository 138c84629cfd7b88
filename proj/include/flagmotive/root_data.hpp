#pragma once

#include <string>
#include <vector>

#include "flagmotive/intmatrix.hpp"
#include "flagmotive/numeric.hpp"

namespace flagmotive {

// One named simple factor, e.g. {family='B', rank=3}.
struct FactorSpec {
  char family;
  int rank;
};

// A split reductive group over the base, recorded as the Cartan matrix of its
// semisimple part plus the total rank of a maximal torus.
struct RootDatum {
  IntMatrix cartan;                 // block diagonal over the simple factors
  int torus_rank = 0;               // >= cartan.size()
  std::string label;                // canonical label, e.g. "A2xB2xT1"
  std::vector<FactorSpec> factors;  // named factors; empty for raw matrices

  int semisimple_rank() const { return cartan.size(); }
  int extra_torus_rank() const { return torus_rank - cartan.size(); }
};

// Positive roots and simple-reflection matrices in the simple-root basis.
struct RootSystem {
  IntMatrix cartan;
  std::vector<std::vector<int>> positive_roots;
  std::vector<IntMatrix> simple_reflections;
};

// Cartan matrix of the named family, 0-indexed rows/columns.
// Accepted ranks: A n>=1, B n>=2, C n>=3, D n>=4, E 6..8, F 4, G 2.
IntMatrix named_cartan(char family, int rank);

// Structural checks: diagonal 2, off-diagonal <= 0, a_ij = 0 iff a_ji = 0.
void validate_cartan(const IntMatrix& cartan);

// A generalized Cartan matrix is of finite type exactly when all leading
// principal minors are positive. Minors are computed exactly via fraction-free
// (Bareiss) elimination over arbitrary-precision integers.
bool is_finite_type(const IntMatrix& cartan);

// Parse a spec string: TYPE ("x" TYPE)* ("xT" INT)?, case-insensitive,
// where TYPE is a family letter followed by a rank, or "T" INT for torus
// factors (allowed anywhere, summed). Examples: "A2", "b3xt2", "A1xA1", "T5".
RootDatum parse_spec(const std::string& spec);

// Build a datum from an explicit Cartan matrix. Validates structure and
// finite type; torus_rank below the matrix size is a SyntaxError.
RootDatum datum_from_cartan(const IntMatrix& cartan, int torus_rank,
                            const std::string& label = "");

// Accepts {"cartan": [[...]], "torus_rank": k, "label": "..."} with
// torus_rank and label optional, or a bare [[...]] array.
RootDatum datum_from_json_text(const std::string& text);

// Single entry point: dispatches to the named-type grammar or, when the
// input starts with '{' or '[', to the JSON form.
RootDatum parse_root_datum(const std::string& spec);

// Close the simple roots under the simple reflections, keeping the vectors
// with all coordinates >= 0.
RootSystem generate_root_system(const RootDatum& datum);

// Closed-form order of the Weyl group of one named factor.
Int expected_weyl_order(char family, int rank);

// Number of positive roots of one named factor.
int positive_root_count(char family, int rank);

// Product of expected_weyl_order over the named factors.
// Requires the datum to carry factor metadata.
Int expected_weyl_order(const RootDatum& datum);

// Sum of positive_root_count over the named factors.
int positive_root_count(const RootDatum& datum);

}  // namespace flagmotive
