#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace flagmotive {

// One labeled free generator, e.g. {"[C_s1*s2]", 2}. The degree is the
// Tate twist (equivalently the Schubert cell dimension).
struct BasisGenerator {
  std::string label;
  int degree = 0;

  friend bool operator==(const BasisGenerator& a, const BasisGenerator& b) {
    return a.label == b.label && a.degree == b.degree;
  }
};

// A free module over a named coefficient ring. Relations stay empty in
// everything this library produces; freeness is the computed content.
struct ModulePresentation {
  std::string coefficient_ring;        // e.g. "R(T)", "KH(BT)", "K_i^T(S)"
  std::string symbolic_factor;         // e.g. "K_3(k)_Q"; empty when absent
  std::vector<BasisGenerator> basis;
  std::vector<std::string> relations;  // always empty here
  bool grading_collapsed = false;      // degrees identified by Bott periodicity
  int torus_rank = 0;
  std::string description;

  std::size_t rank() const { return basis.size(); }
};

std::string to_string(const ModulePresentation& p);

}  // namespace flagmotive
