#include "flagmotive/qpoly.hpp"

#include <sstream>

namespace flagmotive {

bool QPolynomial::is_palindromic() const {
  if (coeffs_.empty()) return true;
  const int lo = coeffs_.begin()->first;
  const int hi = coeffs_.rbegin()->first;
  for (const auto& [e, c] : coeffs_)
    if (c != coefficient(lo + hi - e)) return false;
  return true;
}

std::string QPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    Int abs_c = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const bool unit = (abs_c == 1);
    if (e == 0) {
      out << abs_c.str();
    } else {
      if (!unit) out << abs_c.str();
      out << "q";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

}  // namespace flagmotive
