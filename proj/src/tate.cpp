#include "flagmotive/tate.hpp"

#include <sstream>

#include "flagmotive/errors.hpp"

namespace flagmotive {

TateMotive TateMotive::direct_sum(const TateMotive& other) const {
  if (base_ != other.base_)
    throw BaseMismatch("cannot sum motives over '" + base_ + "' and '" +
                       other.base_ + "'");
  TateMotive out = *this;
  for (const auto& [key, mult] : other.summands_)
    out.add_summand(key.first, key.second, mult);
  out.waiver_ = waiver_ || other.waiver_;
  return out;
}

TateMotive TateMotive::tensor(const TateMotive& other) const {
  if (base_ != other.base_)
    throw BaseMismatch("cannot tensor motives over '" + base_ + "' and '" +
                       other.base_ + "'");
  TateMotive out(base_);
  for (const auto& [k1, m1] : summands_)
    for (const auto& [k2, m2] : other.summands_)
      out.add_summand(k1.first + k2.first, k1.second + k2.second, m1 * m2);
  out.waiver_ = waiver_ || other.waiver_;
  return out;
}

TwistPolynomial TateMotive::twist_polynomial() const {
  TwistPolynomial p;
  for (const auto& [key, mult] : summands_) {
    if (key.second != 0)
      throw ShiftPresent("twist polynomial is defined for shift-free motives only");
    p.add_term(key.first, mult);
  }
  return p;
}

std::string TateMotive::to_string() const {
  if (summands_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, mult] : summands_) {
    if (!first) out << " + ";
    first = false;
    out << "1<" << key.first << ">";
    if (key.second != 0) out << "[" << key.second << "]";
    if (mult != 1) out << "^" << mult.str();
  }
  return out.str();
}

}  // namespace flagmotive
