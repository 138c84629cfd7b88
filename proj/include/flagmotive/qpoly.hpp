#pragma once

#include <map>
#include <string>
#include <vector>

#include "flagmotive/numeric.hpp"

namespace flagmotive {

// Polynomial in one variable q with arbitrary-precision integer coefficients.
// Sparse map keyed by exponent; zero coefficients are never stored.
class QPolynomial {
public:
  QPolynomial() = default;
  explicit QPolynomial(const Int& constant) {
    if (constant != 0) coeffs_[0] = constant;
  }

  static QPolynomial monomial(int exp, const Int& coef) {
    QPolynomial p;
    if (coef != 0) p.coeffs_[exp] = coef;
    return p;
  }

  const std::map<int, Int>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

  Int coefficient(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Int(0) : it->second;
  }

  void add_term(int exp, const Int& coef) {
    if (coef == 0) return;
    Int& slot = coeffs_[exp];
    slot += coef;
    if (slot == 0) coeffs_.erase(exp);
  }

  QPolynomial operator+(const QPolynomial& other) const {
    QPolynomial out = *this;
    for (const auto& [e, c] : other.coeffs_) out.add_term(e, c);
    return out;
  }

  QPolynomial operator*(const QPolynomial& other) const {
    QPolynomial out;
    for (const auto& [e1, c1] : coeffs_)
      for (const auto& [e2, c2] : other.coeffs_) out.add_term(e1 + e2, c1 * c2);
    return out;
  }

  friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const QPolynomial& a, const QPolynomial& b) { return !(a == b); }

  Int evaluate_at_one() const {
    Int sum = 0;
    for (const auto& [e, c] : coeffs_) sum += c;
    return sum;
  }

  // Coefficients are palindromic: coef(k) == coef(degree - k) for all k.
  bool is_palindromic() const;

  std::string to_string() const;

private:
  std::map<int, Int> coeffs_;
};

using PoincarePolynomial = QPolynomial;
using TwistPolynomial = QPolynomial;

// Power series in q, materialized as coefficients 0..precision together with
// a closed-form description string.
struct QSeries {
  std::vector<Int> coefficients;  // index = exponent, size = precision + 1
  std::string closed_form;

  int precision() const { return static_cast<int>(coefficients.size()) - 1; }

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.coefficients == b.coefficients;
  }
};

using PoincareSeries = QSeries;

}  // namespace flagmotive
