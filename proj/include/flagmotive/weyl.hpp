#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "flagmotive/intmatrix.hpp"
#include "flagmotive/qpoly.hpp"
#include "flagmotive/root_data.hpp"

namespace flagmotive {

// Materialized view of one group element: canonical reduced word + matrix.
struct WeylElement {
  std::vector<int> word;  // lexicographically least reduced word, 0-indexed
  IntMatrix matrix;
  int length() const { return static_cast<int>(word.size()); }
};

// Element budget for group generation: FLAGMOTIVE_BUDGET if set, else 1e7.
std::uint64_t default_budget();

// Matrix of the simple reflection s_i acting on the root lattice in the
// simple-root basis: row i of the identity replaced by delta_ij - a_ij.
IntMatrix reflection_matrix(const IntMatrix& cartan, int i);

// All positive roots, as coordinate vectors in the simple-root basis,
// generated by reflecting the simple roots until closure.
std::vector<std::vector<int>> positive_roots(const IntMatrix& cartan);

// Number of positive roots sent to negative roots by w.
int inversion_count(const IntMatrix& cartan, const IntMatrix& w);

// Lexicographically least reduced word (i1,..,ik), 0-indexed generators,
// with w = s_{i1} * ... * s_{ik}. Greedy: repeatedly take the smallest i
// whose column in the current matrix is negative, peeling w from the left.
std::vector<int> canonical_word(const IntMatrix& cartan, const IntMatrix& w);

// Bruhat order test via the lifting property: scan the canonical word of w
// right to left, dividing u on the right whenever the letter is one of its
// right descents; u <= w iff u ends at the identity.
bool bruhat_leq(const IntMatrix& cartan, const IntMatrix& u, const IntMatrix& w);

// Render a word as "e" or "s1*s2*s1" (1-based generator numbers).
std::string word_label(const std::vector<int>& word);

// The Weyl group of a Cartan matrix, generated by breadth-first closure
// under right multiplication by simple reflections. Elements are stored in
// an int8 arena (coordinates of roots are bounded by 6 in finite type) and
// addressed by dense indices in BFS discovery order.
class WeylGroup {
public:
  static WeylGroup generate(const IntMatrix& cartan, std::uint64_t budget);

  int rank() const { return n_; }
  std::uint64_t order() const { return count_; }
  const IntMatrix& cartan() const { return cartan_; }

  IntMatrix matrix(std::uint32_t idx) const;
  int length(std::uint32_t idx) const { return lengths_[idx]; }
  std::uint32_t identity_index() const { return 0; }

  // Unique element of maximal length.
  std::uint32_t longest_index() const;

  std::optional<std::uint32_t> index_of(const IntMatrix& m) const;

  // Right multiplication by a simple reflection, resolved inside the group.
  std::uint32_t multiply_generator(std::uint32_t idx, int gen) const;

  std::vector<int> canonical_word(std::uint32_t idx) const;
  WeylElement element(std::uint32_t idx) const;
  bool bruhat_leq(std::uint32_t u, std::uint32_t w) const;

  // histogram[l] = #{w : length(w) = l}.
  std::vector<std::uint64_t> length_histogram() const;

  // Sum of q^{length(w)} over the group.
  PoincarePolynomial poincare_polynomial() const;

  // Indices sorted by (length, lexicographic canonical word). This is the
  // order used for basis listings.
  std::vector<std::uint32_t> canonical_order() const;

private:
  WeylGroup() = default;

  const std::int8_t* raw(std::uint32_t idx) const {
    return arena_.data() + static_cast<std::size_t>(idx) * n_ * n_;
  }

  int n_ = 0;
  std::uint64_t count_ = 0;
  IntMatrix cartan_;
  std::vector<std::int8_t> arena_;
  std::vector<std::int32_t> lengths_;
  std::unordered_multimap<std::uint64_t, std::uint32_t> index_;

  std::optional<std::uint32_t> find_raw(const std::int8_t* entry) const;
};

WeylGroup generate_weyl_group(const RootSystem& roots,
                              std::uint64_t budget = default_budget());
WeylGroup generate_weyl_group(const RootDatum& datum,
                              std::uint64_t budget = default_budget());

// Independent reference construction: closure of the reflection matrices
// under pairwise products using ordered-set bookkeeping, with no length or
// word tracking. Guarded to small ranks; used to cross-check the generator.
std::set<IntMatrix> oracle_weyl_group(const IntMatrix& cartan, int max_rank = 4);
std::set<IntMatrix> oracle_weyl_group(const RootSystem& roots, int max_rank = 4);

}  // namespace flagmotive
