#include "flagmotive/character_ring.hpp"

#include <cctype>
#include <sstream>

namespace flagmotive {

namespace {

class LaurentParser {
public:
  LaurentParser(const std::string& text, int rank) : s_(text), rank_(rank) {
    if (rank < 0) throw SyntaxError("torus rank must be nonnegative");
  }

  CharacterRingElement parse() {
    CharacterRingElement result(rank_);
    skip_ws();
    if (eof()) throw SyntaxError("empty Laurent polynomial");
    bool negative = consume_sign(false);
    while (true) {
      auto [coef, exp] = parse_term();
      result.add_term(std::move(exp), negative ? Int(-coef) : coef);
      skip_ws();
      if (eof()) break;
      negative = consume_sign(true);
    }
    return result;
  }

private:
  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  // With `required`, a '+' or '-' must be present (between terms).
  bool consume_sign(bool required) {
    skip_ws();
    if (!eof() && (peek() == '+' || peek() == '-')) {
      bool neg = peek() == '-';
      ++pos_;
      return neg;
    }
    if (required) fail("expected '+' or '-' between terms");
    return false;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw SyntaxError(why + " at position " + std::to_string(pos_) + " in '" + s_ +
                      "'");
  }

  std::string parse_digits() {
    std::string digits;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(peek());
      ++pos_;
    }
    if (digits.empty()) fail("expected digits");
    return digits;
  }

  int parse_exponent() {
    skip_ws();
    bool parens = false;
    if (!eof() && peek() == '(') {
      parens = true;
      ++pos_;
      skip_ws();
    }
    bool neg = false;
    if (!eof() && (peek() == '+' || peek() == '-')) {
      neg = peek() == '-';
      ++pos_;
    }
    std::string digits = parse_digits();
    if (digits.size() > 6) fail("exponent too large");
    int value = std::stoi(digits);
    if (parens) {
      skip_ws();
      if (eof() || peek() != ')') fail("expected ')'");
      ++pos_;
    }
    return neg ? -value : value;
  }

  // factor := INT | 't' [index] ['^' exponent]
  bool parse_factor(Int& coef, std::vector<int>& exp) {
    skip_ws();
    if (eof()) return false;
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coef *= Int(parse_digits());
      return true;
    }
    if (c == 't' || c == 'T') {
      ++pos_;
      int index = 1;
      if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
        std::string digits = parse_digits();
        if (digits.size() > 6) fail("variable index too large");
        index = std::stoi(digits);
      }
      if (index < 1 || index > rank_)
        fail("variable t" + std::to_string(index) + " outside torus rank " +
             std::to_string(rank_));
      int e = 1;
      if (!eof() && peek() == '^') {
        ++pos_;
        e = parse_exponent();
      }
      exp[index - 1] += e;
      return true;
    }
    return false;
  }

  std::pair<Int, std::vector<int>> parse_term() {
    Int coef(1);
    std::vector<int> exp(rank_, 0);
    if (!parse_factor(coef, exp)) fail("expected a coefficient or variable");
    while (true) {
      skip_ws();
      if (!eof() && peek() == '*') {
        ++pos_;
        if (!parse_factor(coef, exp)) fail("expected a factor after '*'");
        continue;
      }
      std::size_t before = pos_;
      if (!parse_factor(coef, exp)) {
        pos_ = before;
        break;
      }
    }
    return {std::move(coef), std::move(exp)};
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int rank_;
};

std::string variable_name(const char* base, int rank, int i) {
  if (rank == 1) return base;
  return std::string(base) + std::to_string(i + 1);
}

template <typename Terms>
std::string render_terms(const Terms& terms, int rank, const char* var) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [exp, coef] : terms) {
    Int abs_c = coef < 0 ? Int(-coef) : coef;
    if (first) {
      if (coef < 0) out << "-";
      first = false;
    } else {
      out << (coef < 0 ? " - " : " + ");
    }
    bool any_var = false;
    for (int e : exp)
      if (e != 0) any_var = true;
    if (!any_var) {
      out << abs_c.str();
      continue;
    }
    bool wrote = false;
    if (abs_c != 1) {
      out << abs_c.str();
      wrote = true;
    }
    for (int i = 0; i < rank; ++i) {
      if (exp[i] == 0) continue;
      if (wrote) out << "*";
      out << variable_name(var, rank, i);
      if (exp[i] != 1) out << "^" << exp[i];
      wrote = true;
    }
  }
  return out.str();
}

}  // namespace

CharacterRingElement parse_laurent(const std::string& text, int rank) {
  return LaurentParser(text, rank).parse();
}

std::string to_string(const CharacterRingElement& a) {
  if (a.is_zero()) return "0";
  return render_terms(a.terms(), a.rank(), "t");
}

std::string to_string(const CompletedElement& s) {
  std::string body = s.is_zero() ? "0" : render_terms(s.terms(), s.rank(), "x");
  return body + " + O(deg " + std::to_string(s.precision() + 1) + ")";
}

ModulePresentation free_module_presentation(std::size_t rank_count, int torus_rank,
                                            std::vector<BasisGenerator> basis,
                                            std::string coefficient_ring) {
  if (!basis.empty() && basis.size() != rank_count)
    throw RankMismatch("basis size does not match the module rank");
  if (basis.empty())
    for (std::size_t k = 1; k <= rank_count; ++k)
      basis.push_back({"b" + std::to_string(k), 0});

  ModulePresentation p;
  p.coefficient_ring = std::move(coefficient_ring);
  p.basis = std::move(basis);
  p.torus_rank = torus_rank;
  p.description = rank_count == 0
                      ? "zero module over " + p.coefficient_ring
                      : "free " + p.coefficient_ring + "-module of rank " +
                            std::to_string(rank_count);
  return p;
}

}  // namespace flagmotive
