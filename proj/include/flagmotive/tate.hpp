#pragma once

#include <map>
#include <string>
#include <utility>

#include "flagmotive/numeric.hpp"
#include "flagmotive/qpoly.hpp"

namespace flagmotive {

// True iff Hom(1<n>[m], 1) is certified zero: exactly n >= 0, any m.
// The certificate is never extrapolated to n < 0.
inline bool vanishing_guard(int n, int /*m*/) { return n >= 0; }

// Finite direct sum of twisted shifted units 1<n>[m] over a named base.
// Keys are (twist, shift); values are multiplicities > 0. A pure twist <n>
// is (n, 0). The waiver flag marks motives assembled without the strictness
// certificate; it is metadata and does not enter equality.
class TateMotive {
public:
  TateMotive() = default;
  explicit TateMotive(std::string base_label) : base_(std::move(base_label)) {}

  static TateMotive pure(int twist, const std::string& base_label = "S",
                         const Int& multiplicity = 1, int shift = 0) {
    TateMotive m(base_label);
    m.add_summand(twist, shift, multiplicity);
    return m;
  }

  const std::map<std::pair<int, int>, Int>& summands() const { return summands_; }
  const std::string& base_label() const { return base_; }

  bool waiver() const { return waiver_; }
  void set_waiver(bool w) { waiver_ = w; }

  Int rank() const {
    Int total = 0;
    for (const auto& [key, mult] : summands_) total += mult;
    return total;
  }

  bool is_zero() const { return summands_.empty(); }
  bool has_shift() const {
    for (const auto& [key, mult] : summands_)
      if (key.second != 0) return true;
    return false;
  }

  void add_summand(int twist, int shift, const Int& multiplicity) {
    if (multiplicity == 0) return;
    Int& slot = summands_[{twist, shift}];
    slot += multiplicity;
    if (slot == 0) summands_.erase({twist, shift});
  }

  // Multiset union of summands. Bases must agree.
  TateMotive direct_sum(const TateMotive& other) const;

  // Pairwise sums of (twist, shift) with multiplicities multiplied.
  TateMotive tensor(const TateMotive& other) const;

  // Generating function sum of mult * q^twist. Defined for shift-free
  // motives only; throws ShiftPresent otherwise.
  TwistPolynomial twist_polynomial() const;

  std::string to_string() const;

  // Equality compares base and summands; the waiver flag is excluded.
  friend bool operator==(const TateMotive& a, const TateMotive& b) {
    return a.base_ == b.base_ && a.summands_ == b.summands_;
  }
  friend bool operator!=(const TateMotive& a, const TateMotive& b) { return !(a == b); }

private:
  std::map<std::pair<int, int>, Int> summands_;
  std::string base_ = "S";
  bool waiver_ = false;
};

}  // namespace flagmotive
