#include "flagmotive/presentation.hpp"

#include <sstream>

namespace flagmotive {

std::string to_string(const ModulePresentation& p) {
  std::ostringstream out;
  out << p.description << "\n";
  out << "  coefficient ring: " << p.coefficient_ring << "\n";
  if (!p.symbolic_factor.empty())
    out << "  symbolic factor:  " << p.symbolic_factor << "\n";
  if (p.grading_collapsed)
    out << "  grading collapsed by Bott periodicity\n";
  if (!p.basis.empty()) {
    out << "  basis:\n";
    for (const auto& g : p.basis)
      out << "    " << g.label << "  degree " << g.degree << "\n";
  }
  out << "  relations: " << (p.relations.empty() ? "none" : "") << "\n";
  return out.str();
}

}  // namespace flagmotive
