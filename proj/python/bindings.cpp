#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <utility>
#include <vector>

#include "flagmotive/cellular.hpp"
#include "flagmotive/character_ring.hpp"
#include "flagmotive/errors.hpp"
#include "flagmotive/realization.hpp"
#include "flagmotive/root_data.hpp"
#include "flagmotive/tate.hpp"
#include "flagmotive/weyl.hpp"

namespace py = pybind11;
using namespace flagmotive;

namespace {

py::int_ py_int(const Int& v) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::dict polynomial_dict(const QPolynomial& p) {
  py::dict out;
  for (const auto& [e, c] : p.coefficients()) out[py::int_(e)] = py_int(c);
  return out;
}

py::dict series_dict(const QSeries& s) {
  py::list coeffs;
  for (const Int& c : s.coefficients) coeffs.append(py_int(c));
  py::dict out;
  out["precision"] = s.precision();
  out["closed_form"] = s.closed_form;
  out["coefficients"] = std::move(coeffs);
  return out;
}

py::list matrix_rows(const IntMatrix& m) {
  py::list rows;
  for (int i = 0; i < m.size(); ++i) {
    py::list row;
    for (int j = 0; j < m.size(); ++j) row.append(m(i, j));
    rows.append(std::move(row));
  }
  return rows;
}

std::uint64_t pick_budget(std::optional<std::uint64_t> budget) {
  return budget.value_or(default_budget());
}

StrictLinearScheme scheme_from_levels(
    const std::vector<std::vector<int>>& levels, bool proper) {
  StrictLinearScheme s;
  s.proper = proper;
  for (const auto& ranks : levels) s.levels.push_back(StratumDescriptor{ranks});
  return s;
}

py::dict completed_dict(const CompletedElement& c) {
  py::dict terms;
  for (const auto& [exp, coef] : c.terms())
    terms[py::tuple(py::cast(exp))] = py_int(coef);
  py::dict out;
  out["rank"] = c.rank();
  out["precision"] = c.precision();
  out["terms"] = std::move(terms);
  out["string"] = to_string(c);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Tate-twist decompositions of flag varieties: Weyl combinatorics, "
      "filtration assembly, and equivariant K-theory / Chow realizations";

  auto base = py::register_exception<Error>(m, "FlagmotiveError");
  py::register_exception<SyntaxError>(m, "SpecSyntaxError", base.ptr());
  py::register_exception<InvalidMatrix>(m, "InvalidMatrix", base.ptr());
  py::register_exception<NotFiniteType>(m, "NotFiniteType", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<BaseMismatch>(m, "BaseMismatch", base.ptr());
  py::register_exception<RankMismatch>(m, "RankMismatch", base.ptr());
  py::register_exception<NotProper>(m, "NotProper", base.ptr());
  py::register_exception<SplittingNotCertified>(m, "SplittingNotCertified",
                                                base.ptr());
  py::register_exception<ShiftPresent>(m, "ShiftPresent", base.ptr());
  py::register_exception<NegativeDegree>(m, "NegativeDegree", base.ptr());

  py::class_<RootDatum>(m, "RootDatum")
      .def_readonly("label", &RootDatum::label)
      .def_readonly("torus_rank", &RootDatum::torus_rank)
      .def_property_readonly("semisimple_rank", &RootDatum::semisimple_rank)
      .def_property_readonly(
          "cartan", [](const RootDatum& d) { return matrix_rows(d.cartan); })
      .def("__repr__",
           [](const RootDatum& d) { return "RootDatum(" + d.label + ")"; });

  m.def("parse_root_datum", &parse_root_datum, py::arg("spec"),
        "Parse a group spec like 'A2', 'B3xT1', or a JSON Cartan matrix");

  py::class_<WeylGroup>(m, "WeylGroup")
      .def_property_readonly("order", &WeylGroup::order)
      .def_property_readonly("rank", &WeylGroup::rank)
      .def("length", &WeylGroup::length, py::arg("index"))
      .def("canonical_word", &WeylGroup::canonical_word, py::arg("index"))
      .def("word_label",
           [](const WeylGroup& w, std::uint32_t index) {
             return word_label(w.canonical_word(index));
           },
           py::arg("index"))
      .def("matrix",
           [](const WeylGroup& w, std::uint32_t index) {
             return matrix_rows(w.matrix(index));
           },
           py::arg("index"))
      .def("bruhat_leq", &WeylGroup::bruhat_leq, py::arg("u"), py::arg("w"))
      .def("multiply_generator", &WeylGroup::multiply_generator,
           py::arg("index"), py::arg("generator"))
      .def_property_readonly("longest_index", &WeylGroup::longest_index)
      .def_property_readonly("length_histogram", &WeylGroup::length_histogram)
      .def_property_readonly("canonical_order", &WeylGroup::canonical_order)
      .def_property_readonly("poincare_polynomial",
                             [](const WeylGroup& w) {
                               return polynomial_dict(w.poincare_polynomial());
                             })
      .def("__len__", &WeylGroup::order)
      .def("__repr__", [](const WeylGroup& w) {
        return "WeylGroup(order=" + std::to_string(w.order()) + ")";
      });

  m.def(
      "weyl_group",
      [](const RootDatum& datum, std::optional<std::uint64_t> budget) {
        return generate_weyl_group(datum, pick_budget(budget));
      },
      py::arg("datum"), py::arg("budget") = py::none(),
      "Generate the Weyl group of a root datum by reflection closure");

  m.def(
      "oracle_weyl_group",
      [](const RootDatum& datum, int max_rank) {
        py::list out;
        for (const auto& mat : oracle_weyl_group(datum.cartan, max_rank))
          out.append(matrix_rows(mat));
        return out;
      },
      py::arg("datum"), py::arg("max_rank") = 4,
      "Brute-force product closure of the simple reflections (rank-capped)");

  py::class_<TateMotive>(m, "TateMotive")
      .def_property_readonly("base", &TateMotive::base_label)
      .def_property_readonly("waiver", &TateMotive::waiver)
      .def_property_readonly("rank",
                             [](const TateMotive& t) { return py_int(t.rank()); })
      .def_property_readonly("summands",
                             [](const TateMotive& t) {
                               py::list out;
                               for (const auto& [key, mult] : t.summands())
                                 out.append(py::make_tuple(key.first, key.second,
                                                           py_int(mult)));
                               return out;
                             })
      .def("twist_polynomial",
           [](const TateMotive& t) { return polynomial_dict(t.twist_polynomial()); })
      .def("direct_sum", &TateMotive::direct_sum, py::arg("other"))
      .def("tensor", &TateMotive::tensor, py::arg("other"))
      .def("__eq__",
           [](const TateMotive& a, const TateMotive& b) { return a == b; })
      .def("__repr__",
           [](const TateMotive& t) { return "TateMotive(" + t.to_string() + ")"; })
      .def("__str__", &TateMotive::to_string);

  m.def(
      "flag_motive",
      [](const RootDatum& datum, std::optional<std::uint64_t> budget) {
        return flag_motive(datum, pick_budget(budget));
      },
      py::arg("datum"), py::arg("budget") = py::none(),
      "Tate-twist decomposition of G/B over the classifying base");

  m.def("vanishing_guard", &vanishing_guard, py::arg("n"), py::arg("m"),
        "True iff Hom(1<n>[m], 1) is certified zero, i.e. n >= 0");

  m.def("check_strictness",
        [](const std::vector<std::vector<int>>& levels) {
          return check_strictness(scheme_from_levels(levels, true));
        },
        py::arg("levels"));

  m.def(
      "assemble_motive",
      [](const std::vector<std::vector<int>>& levels, const std::string& base,
         bool proper, bool waiver) {
        StrictLinearScheme s = scheme_from_levels(levels, proper);
        return waiver ? assemble_with_vanishing_waiver(s, base)
                      : assemble_motive(s, base);
      },
      py::arg("levels"), py::arg("base") = "S", py::arg("proper") = true,
      py::arg("waiver") = false,
      "Split a filtration by stratum ranks into a direct sum of Tate twists");

  py::class_<ModulePresentation>(m, "ModulePresentation")
      .def_property_readonly("rank", &ModulePresentation::rank)
      .def_readonly("coefficient_ring", &ModulePresentation::coefficient_ring)
      .def_readonly("symbolic_factor", &ModulePresentation::symbolic_factor)
      .def_readonly("description", &ModulePresentation::description)
      .def_readonly("grading_collapsed", &ModulePresentation::grading_collapsed)
      .def_readonly("torus_rank", &ModulePresentation::torus_rank)
      .def_property_readonly("relations",
                             [](const ModulePresentation& p) { return p.relations; })
      .def_property_readonly("basis",
                             [](const ModulePresentation& p) {
                               py::list out;
                               for (const auto& g : p.basis)
                                 out.append(py::make_tuple(g.label, g.degree));
                               return out;
                             })
      .def("__repr__", [](const ModulePresentation& p) {
        return "ModulePresentation(" + p.description + ")";
      });

  py::class_<IdentityReport>(m, "IdentityReport")
      .def_readonly("group", &IdentityReport::group)
      .def_readonly("completed_ring", &IdentityReport::completed_ring)
      .def_readonly("precision", &IdentityReport::precision)
      .def_readonly("ranks_equal", &IdentityReport::ranks_equal)
      .def_readonly("tor_vanishes", &IdentityReport::tor_vanishes)
      .def_readonly("lhs", &IdentityReport::lhs)
      .def_readonly("rhs", &IdentityReport::rhs)
      .def("__repr__", [](const IdentityReport& r) {
        return "IdentityReport(" + r.group +
               ", ranks_equal=" + (r.ranks_equal ? "True" : "False") + ")";
      });

  m.def(
      "equivariant_k_groups",
      [](const RootDatum& datum, int i, std::optional<std::uint64_t> budget) {
        return equivariant_k_groups(datum, i, pick_budget(budget));
      },
      py::arg("datum"), py::arg("i") = 0, py::arg("budget") = py::none(),
      "K_i^T(G/B) as a free R(T)-module on Schubert classes");

  m.def(
      "rational_ki_presentation",
      [](const RootDatum& datum, int i, std::optional<std::uint64_t> budget) {
        return rational_ki_presentation(datum, i, pick_budget(budget));
      },
      py::arg("datum"), py::arg("i") = 0, py::arg("budget") = py::none());

  m.def(
      "kh_decomposition",
      [](const TateMotive& motive) { return kh_decomposition(motive); },
      py::arg("motive"));

  m.def(
      "completed_k0_identity",
      [](const RootDatum& datum, int precision,
         std::optional<std::uint64_t> budget) {
        return completed_k0_identity(datum, precision, pick_budget(budget));
      },
      py::arg("datum"), py::arg("precision") = 10,
      py::arg("budget") = py::none(),
      "Compare completed K_0^T(G/B) with K_0(G/B) tensor the completed ring");

  m.def(
      "chow_poincare",
      [](const RootDatum& datum, int precision,
         std::optional<std::uint64_t> budget) {
        auto [w, s] = chow_poincare(datum, precision, pick_budget(budget));
        return py::make_tuple(polynomial_dict(w), series_dict(s));
      },
      py::arg("datum"), py::arg("precision") = 10,
      py::arg("budget") = py::none(),
      "Equivariant Chow Poincare polynomial and its W(q)/(1-q)^r series");

  m.def(
      "kunneth_factorization",
      [](const RootDatum& datum, int precision,
         std::optional<std::uint64_t> budget) {
        auto [w, s] = kunneth_factorization(datum, precision, pick_budget(budget));
        return py::make_tuple(polynomial_dict(w), series_dict(s));
      },
      py::arg("datum"), py::arg("precision") = 10,
      py::arg("budget") = py::none());

  m.def(
      "schubert_basis",
      [](const WeylGroup& weyl) {
        py::list out;
        for (const auto& g : schubert_basis(weyl))
          out.append(py::make_tuple(g.label, g.degree));
        return out;
      },
      py::arg("weyl"));

  m.def(
      "complete",
      [](const std::string& element, int rank, int precision) {
        return completed_dict(complete(parse_laurent(element, rank), precision));
      },
      py::arg("element"), py::arg("rank"), py::arg("precision") = 10,
      "Complete a Laurent polynomial along the augmentation ideal");

  m.def(
      "augmentation",
      [](const std::string& element, int rank) {
        return py_int(parse_laurent(element, rank).augmentation());
      },
      py::arg("element"), py::arg("rank"),
      "Evaluate every character variable at 1");
}
