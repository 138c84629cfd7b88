#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flagmotive/errors.hpp"
#include "flagmotive/numeric.hpp"
#include "flagmotive/presentation.hpp"

namespace flagmotive {

// Element of R(T) = Z[t_1^{+-1}, .., t_r^{+-1}]: finitely many characters
// t^lambda with nonzero coefficients. Exponent vectors have length = rank.
template <typename Coeff>
class LaurentPolynomial {
public:
  explicit LaurentPolynomial(int rank = 0) : rank_(rank) {}

  static LaurentPolynomial constant(int rank, const Coeff& c) {
    LaurentPolynomial p(rank);
    p.add_term(std::vector<int>(rank, 0), c);
    return p;
  }

  static LaurentPolynomial character(std::vector<int> exponent) {
    LaurentPolynomial p(static_cast<int>(exponent.size()));
    p.add_term(std::move(exponent), Coeff(1));
    return p;
  }

  int rank() const { return rank_; }
  const std::map<std::vector<int>, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(std::vector<int> exponent, const Coeff& c) {
    if (static_cast<int>(exponent.size()) != rank_)
      throw RankMismatch("exponent vector length does not match torus rank");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(exponent), Coeff(0));
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  LaurentPolynomial operator+(const LaurentPolynomial& other) const {
    require_same_rank(other);
    LaurentPolynomial out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, c);
    return out;
  }

  LaurentPolynomial operator-(const LaurentPolynomial& other) const {
    require_same_rank(other);
    LaurentPolynomial out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, Coeff(0) - c);
    return out;
  }

  LaurentPolynomial operator*(const LaurentPolynomial& other) const {
    require_same_rank(other);
    LaurentPolynomial out(rank_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : other.terms_) {
        std::vector<int> e(rank_);
        for (int i = 0; i < rank_; ++i) e[i] = e1[i] + e2[i];
        out.add_term(std::move(e), c1 * c2);
      }
    return out;
  }

  // Virtual rank: evaluation at t_i = 1. The augmentation ideal I_T is the
  // kernel of this map.
  Coeff augmentation() const {
    Coeff sum(0);
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
  }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return !(a == b);
  }

private:
  void require_same_rank(const LaurentPolynomial& other) const {
    if (rank_ != other.rank_)
      throw RankMismatch("torus ranks differ: " + std::to_string(rank_) + " vs " +
                         std::to_string(other.rank_));
  }

  int rank_;
  std::map<std::vector<int>, Coeff> terms_;
};

// Truncation of Z[[x_1, .., x_r]] at a total degree bound, the model of the
// I_T-adic completion in the coordinates x_i = 1 - t_i. Exponent vectors are
// nonnegative with total degree <= precision; higher terms are dropped.
template <typename Coeff>
class TruncatedSeries {
public:
  TruncatedSeries(int rank, int precision) : rank_(rank), precision_(precision) {
    if (precision < 0) throw SyntaxError("precision must be nonnegative");
  }

  static TruncatedSeries one(int rank, int precision) {
    TruncatedSeries s(rank, precision);
    s.add_term(std::vector<int>(rank, 0), Coeff(1));
    return s;
  }

  int rank() const { return rank_; }
  int precision() const { return precision_; }
  const std::map<std::vector<int>, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff constant_term() const {
    auto it = terms_.find(std::vector<int>(rank_, 0));
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(std::vector<int> exponent, const Coeff& c) {
    if (static_cast<int>(exponent.size()) != rank_)
      throw RankMismatch("exponent vector length does not match torus rank");
    int total = 0;
    for (int e : exponent) {
      assert(e >= 0);
      total += e;
    }
    if (total > precision_ || c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(exponent), Coeff(0));
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  // Drop terms of total degree above the new bound. Requires the new bound
  // not to exceed the current one.
  TruncatedSeries truncated(int new_precision) const {
    if (new_precision > precision_)
      throw SyntaxError("cannot raise precision of a truncated series");
    TruncatedSeries out(rank_, new_precision);
    for (const auto& [e, c] : terms_) out.add_term(e, c);
    return out;
  }

  TruncatedSeries operator+(const TruncatedSeries& other) const {
    require_same_rank(other);
    TruncatedSeries out(rank_, std::min(precision_, other.precision_));
    for (const auto& [e, c] : terms_) out.add_term(e, c);
    for (const auto& [e, c] : other.terms_) out.add_term(e, c);
    return out;
  }

  TruncatedSeries operator*(const TruncatedSeries& other) const {
    require_same_rank(other);
    TruncatedSeries out(rank_, std::min(precision_, other.precision_));
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : other.terms_) {
        std::vector<int> e(rank_);
        int total = 0;
        for (int i = 0; i < rank_; ++i) {
          e[i] = e1[i] + e2[i];
          total += e[i];
        }
        if (total > out.precision_) continue;
        out.add_term(std::move(e), c1 * c2);
      }
    return out;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.rank_ == b.rank_ && a.precision_ == b.precision_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
    return !(a == b);
  }

private:
  void require_same_rank(const TruncatedSeries& other) const {
    if (rank_ != other.rank_)
      throw RankMismatch("torus ranks differ: " + std::to_string(rank_) + " vs " +
                         std::to_string(other.rank_));
  }

  int rank_;
  int precision_;
  std::map<std::vector<int>, Coeff> terms_;
};

// I_T-adic completion: substitute t_i = 1 - x_i and expand exactly.
// Nonnegative powers expand binomially; a negative power (1 - x)^{-f} is the
// geometric-type series sum of C(f - 1 + k, k) x^k, truncated at total
// degree `precision`.
template <typename Coeff>
TruncatedSeries<Coeff> complete(const LaurentPolynomial<Coeff>& a, int precision) {
  const int r = a.rank();
  TruncatedSeries<Coeff> result(r, precision);
  for (const auto& [lambda, c] : a.terms()) {
    std::map<std::vector<int>, Coeff> running;
    running[std::vector<int>(r, 0)] = c;
    for (int i = 0; i < r; ++i) {
      const int e = lambda[i];
      std::vector<Int> u(static_cast<std::size_t>(precision) + 1, Int(0));
      if (e >= 0) {
        for (int k = 0; k <= precision && k <= e; ++k)
          u[k] = (k % 2 == 0 ? binomial(e, k) : -binomial(e, k));
      } else {
        const int f = -e;
        for (int k = 0; k <= precision; ++k) u[k] = binomial(f - 1 + k, k);
      }
      std::map<std::vector<int>, Coeff> next;
      for (const auto& [exp, cc] : running) {
        int total = 0;
        for (int v : exp) total += v;
        for (int k = 0; k + total <= precision; ++k) {
          if (u[k] == 0) continue;
          std::vector<int> exp2 = exp;
          exp2[i] += k;
          Coeff& slot = next[std::move(exp2)];
          slot += cc * Coeff(u[k]);
        }
      }
      running = std::move(next);
    }
    for (auto& [exp, cc] : running) result.add_term(exp, cc);
  }
  return result;
}

using CharacterRingElement = LaurentPolynomial<Int>;
using CompletedElement = TruncatedSeries<Int>;
using RationalCharacterRingElement = LaurentPolynomial<Rational>;
using RationalCompletedElement = TruncatedSeries<Rational>;

// Parse "2*t1^3 - t2^-1 + 5" style input. '*' is optional between factors;
// 't' alone is accepted for rank 1; exponents take an optional sign or
// parentheses: t^-1, t^(-1).
CharacterRingElement parse_laurent(const std::string& text, int rank);

std::string to_string(const CharacterRingElement& a);
std::string to_string(const CompletedElement& s);

// Free R(T)-module of the given rank. Basis labels come from the caller;
// when omitted, generators are named b1..bn with degree 0. A nonempty basis
// must match rank_count.
ModulePresentation free_module_presentation(std::size_t rank_count, int torus_rank,
                                            std::vector<BasisGenerator> basis = {},
                                            std::string coefficient_ring = "R(T)");

}  // namespace flagmotive
