#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "flagmotive/cellular.hpp"
#include "flagmotive/character_ring.hpp"
#include "flagmotive/errors.hpp"
#include "flagmotive/presentation.hpp"
#include "flagmotive/realization.hpp"
#include "flagmotive/root_data.hpp"
#include "flagmotive/tate.hpp"
#include "flagmotive/weyl.hpp"

namespace {

using flagmotive::Int;
using json = nlohmann::ordered_json;

json int_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

json polynomial_json(const flagmotive::QPolynomial& p) {
  json coeffs = json::object();
  for (const auto& [e, c] : p.coefficients()) coeffs[std::to_string(e)] = c.str();
  return json{{"coefficients", coeffs}, {"string", p.to_string()}};
}

json series_json(const flagmotive::QSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients) coeffs.push_back(c.str());
  return json{{"precision", s.precision()},
              {"closed_form", s.closed_form},
              {"coefficients", coeffs}};
}

json motive_json(const flagmotive::TateMotive& m) {
  json summands = json::array();
  for (const auto& [key, mult] : m.summands()) {
    json entry{{"twist", key.first}, {"mult", int_json(mult)}};
    if (key.second != 0) entry["shift"] = key.second;
    summands.push_back(std::move(entry));
  }
  json out{{"base", m.base_label()}, {"summands", std::move(summands)}};
  if (m.waiver()) out["waiver"] = true;
  return out;
}

json basis_json(const flagmotive::ModulePresentation& p) {
  json basis = json::array();
  for (const auto& g : p.basis)
    basis.push_back(json{{"label", g.label}, {"degree", g.degree}});
  return basis;
}

json presentation_report_json(const std::string& group, const std::string& theory,
                              const flagmotive::ModulePresentation& p) {
  json out{{"group", group},
           {"theory", theory},
           {"rank", p.rank()},
           {"basis", basis_json(p)},
           {"coefficient_ring", p.coefficient_ring}};
  if (!p.symbolic_factor.empty()) out["symbolic_factor"] = p.symbolic_factor;
  if (p.grading_collapsed) out["grading_collapsed"] = true;
  return out;
}

json laurent_json(const flagmotive::CharacterRingElement& a) {
  json terms = json::array();
  for (const auto& [exp, coef] : a.terms())
    terms.push_back(json{{"exp", exp}, {"coef", coef.str()}});
  return json{{"terms", std::move(terms)}};
}

json completed_json(const flagmotive::CompletedElement& s) {
  json terms = json::array();
  for (const auto& [exp, coef] : s.terms())
    terms.push_back(json{{"exp", exp}, {"coef", coef.str()}});
  return json{{"precision", s.precision()}, {"terms", std::move(terms)}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void print_motive_human(const flagmotive::TateMotive& m, const std::string& heading) {
  std::cout << heading << "\n";
  std::cout << "base: " << m.base_label() << "\n";
  std::cout << "rank: " << m.rank().str() << "\n";
  if (m.waiver()) std::cout << "assembled with vanishing waiver\n";
  std::cout << "summands:\n";
  for (const auto& [key, mult] : m.summands()) {
    std::cout << "  1<" << key.first << ">";
    if (key.second != 0) std::cout << "[" << key.second << "]";
    if (mult != 1) std::cout << "  x" << mult.str();
    std::cout << "\n";
  }
  if (!m.has_shift())
    std::cout << "twist polynomial: " << m.twist_polynomial().to_string() << "\n";
}

int run_weyl(const std::string& spec, bool as_json) {
  auto datum = flagmotive::parse_root_datum(spec);
  auto weyl = flagmotive::generate_weyl_group(datum);
  auto hist = weyl.length_histogram();
  auto poly = weyl.poincare_polynomial();
  auto longest = weyl.canonical_word(weyl.longest_index());
  if (as_json) {
    emit(json{{"group", datum.label},
              {"order", weyl.order()},
              {"torus_rank", datum.torus_rank},
              {"length_histogram", hist},
              {"poincare", polynomial_json(poly)},
              {"longest_word", flagmotive::word_label(longest)},
              {"longest_length", longest.size()}});
    return 0;
  }
  std::cout << "group: " << datum.label << "\n";
  std::cout << "order: " << weyl.order() << "\n";
  std::cout << "torus rank: " << datum.torus_rank << "\n";
  std::cout << "length census:";
  for (std::size_t d = 0; d < hist.size(); ++d)
    std::cout << " " << d << ":" << hist[d];
  std::cout << "\n";
  std::cout << "poincare polynomial: " << poly.to_string() << "\n";
  std::cout << "longest element: " << flagmotive::word_label(longest) << " (length "
            << longest.size() << ")\n";
  return 0;
}

int run_motive(const std::string& spec, bool as_json) {
  auto datum = flagmotive::parse_root_datum(spec);
  auto motive = flagmotive::flag_motive(datum);
  if (as_json) {
    emit(motive_json(motive));
    return 0;
  }
  print_motive_human(motive, "motive of G/B(" + datum.label + ") over BT");
  return 0;
}

int run_assemble(const std::string& path, const std::string& base, bool waiver,
                 bool as_json) {
  std::ifstream in(path);
  if (!in) throw flagmotive::SyntaxError("cannot open filtration file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto scheme = flagmotive::filtration_from_json_text(buffer.str());
  auto motive = waiver
                    ? flagmotive::assemble_with_vanishing_waiver(scheme, base)
                    : flagmotive::assemble_motive(scheme, base);
  if (as_json) {
    emit(motive_json(motive));
    return 0;
  }
  std::string heading = scheme.label.empty()
                            ? "assembled motive"
                            : "assembled motive of " + scheme.label;
  print_motive_human(motive, heading);
  return 0;
}

int run_ktheory(const std::string& spec, int i, bool completed, bool rational,
                bool kh, int precision, bool as_json) {
  auto datum = flagmotive::parse_root_datum(spec);
  if (completed) {
    auto report = flagmotive::completed_k0_identity(datum, precision);
    if (as_json) {
      json out{{"group", report.group},
               {"theory", "K0-completed"},
               {"rank", report.lhs.rank()},
               {"basis", basis_json(report.lhs)},
               {"coefficient_ring", report.completed_ring},
               {"precision", report.precision},
               {"ranks_equal", report.ranks_equal},
               {"tor_vanishes", report.tor_vanishes},
               {"lhs", report.lhs.description},
               {"rhs", report.rhs.description}};
      emit(out);
      return 0;
    }
    std::cout << "group: " << report.group << "\n";
    std::cout << "completed ring: " << report.completed_ring << "\n";
    std::cout << "lhs: " << report.lhs.description << "\n";
    std::cout << "rhs: " << report.rhs.description << "\n";
    std::cout << "ranks equal: " << (report.ranks_equal ? "yes" : "no") << "\n";
    std::cout << "higher Tor vanishes: " << (report.tor_vanishes ? "yes" : "no")
              << "\n";
    return 0;
  }
  if (kh) {
    auto weyl = flagmotive::generate_weyl_group(datum);
    auto motive = flagmotive::flag_motive(datum);
    auto p = flagmotive::kh_decomposition(motive, flagmotive::schubert_basis(weyl));
    p.torus_rank = datum.torus_rank;
    if (as_json) {
      emit(presentation_report_json(datum.label, "KH", p));
      return 0;
    }
    std::cout << "group: " << datum.label << "\n" << flagmotive::to_string(p);
    return 0;
  }
  auto p = rational ? flagmotive::rational_ki_presentation(datum, i)
                    : flagmotive::equivariant_k_groups(datum, i);
  if (as_json) {
    json out = presentation_report_json(datum.label, "Ki", p);
    out["i"] = i;
    emit(out);
    return 0;
  }
  std::cout << "group: " << datum.label << "\n";
  std::cout << "degree i = " << i << "\n" << flagmotive::to_string(p);
  return 0;
}

int run_chow(const std::string& spec, int precision, bool as_json) {
  auto datum = flagmotive::parse_root_datum(spec);
  auto [poly, series] = flagmotive::chow_poincare(datum, precision);
  if (as_json) {
    emit(json{{"group", datum.label},
              {"theory", "Chow"},
              {"rank", int_json(poly.evaluate_at_one())},
              {"coefficient_ring", "A*_T(pt)_Q"},
              {"poincare_polynomial", polynomial_json(poly)},
              {"series", series_json(series)}});
    return 0;
  }
  std::cout << "group: " << datum.label << "\n";
  std::cout << "poincare polynomial: " << poly.to_string() << "\n";
  std::cout << "equivariant series (" << series.closed_form << ", precision "
            << series.precision() << "):";
  for (const auto& c : series.coefficients) std::cout << " " << c.str();
  std::cout << "\n";
  return 0;
}

int run_complete(const std::string& spec, const std::string& element, int precision,
                 bool as_json) {
  auto datum = flagmotive::parse_root_datum(spec);
  auto parsed = flagmotive::parse_laurent(element, datum.torus_rank);
  auto completed = flagmotive::complete(parsed, precision);
  if (as_json) {
    json out{{"group", datum.label},
             {"element", flagmotive::to_string(parsed)},
             {"input", laurent_json(parsed)},
             {"augmentation", parsed.augmentation().str()},
             {"completed", completed_json(completed)},
             {"string", flagmotive::to_string(completed)}};
    emit(out);
    return 0;
  }
  std::cout << "group: " << datum.label << " (torus rank " << datum.torus_rank
            << ")\n";
  std::cout << "element: " << flagmotive::to_string(parsed) << "\n";
  std::cout << "augmentation: " << parsed.augmentation().str() << "\n";
  std::cout << "completed: " << flagmotive::to_string(completed) << "\n";
  return 0;
}

struct VerifyCheck {
  std::string name;
  bool ok;
  std::string note;
};

int run_verify(const std::string& spec, int max_rank, bool as_json) {
  auto datum = flagmotive::parse_root_datum(spec);
  auto weyl = flagmotive::generate_weyl_group(datum);
  std::vector<VerifyCheck> checks;

  // Oracle cross-check: matrix sets must coincide.
  if (datum.semisimple_rank() <= max_rank) {
    auto oracle = flagmotive::oracle_weyl_group(datum.cartan, max_rank);
    bool ok = oracle.size() == weyl.order();
    if (ok)
      for (const auto& m : oracle)
        if (!weyl.index_of(m)) {
          ok = false;
          break;
        }
    checks.push_back({"oracle matrix set equals generated set", ok,
                      "oracle size " + std::to_string(oracle.size())});
  } else {
    checks.push_back({"oracle cross-check", true,
                      "skipped: rank " + std::to_string(datum.semisimple_rank()) +
                          " above cap " + std::to_string(max_rank)});
  }

  auto poly = weyl.poincare_polynomial();
  auto hist = weyl.length_histogram();
  checks.push_back({"poincare polynomial is palindromic", poly.is_palindromic(), ""});
  checks.push_back({"coefficients sum to |W|",
                    poly.evaluate_at_one() == Int(weyl.order()), ""});
  checks.push_back({"extreme coefficients are 1",
                    !hist.empty() && hist.front() == 1 && hist.back() == 1, ""});

  if (!datum.factors.empty()) {
    checks.push_back({"|W| matches the order formula",
                      Int(weyl.order()) == flagmotive::expected_weyl_order(datum),
                      flagmotive::expected_weyl_order(datum).str()});
  }

  auto roots = flagmotive::positive_roots(datum.cartan);
  checks.push_back(
      {"l(longest) = number of positive roots",
       weyl.length(weyl.longest_index()) == static_cast<int>(roots.size()),
       std::to_string(roots.size()) + " positive roots"});

  // Length equals inversion count, exhaustively on small groups, on a
  // deterministic stride sample otherwise.
  {
    bool ok = true;
    std::uint64_t step = weyl.order() <= 1200 ? 1 : weyl.order() / 500;
    for (std::uint64_t idx = 0; idx < weyl.order(); idx += step) {
      auto m = weyl.matrix(static_cast<std::uint32_t>(idx));
      if (flagmotive::inversion_count(datum.cartan, m) !=
          weyl.length(static_cast<std::uint32_t>(idx))) {
        ok = false;
        break;
      }
    }
    checks.push_back({"l(w) equals inversion count", ok,
                      step == 1 ? "exhaustive" : "sampled"});
  }

  // Right multiplication by a generator moves length by exactly one.
  {
    bool ok = true;
    std::uint64_t step = weyl.order() <= 1200 ? 1 : weyl.order() / 500;
    for (std::uint64_t idx = 0; idx < weyl.order() && ok; idx += step)
      for (int g = 0; g < datum.semisimple_rank(); ++g) {
        auto next = weyl.multiply_generator(static_cast<std::uint32_t>(idx), g);
        int diff = weyl.length(next) - weyl.length(static_cast<std::uint32_t>(idx));
        if (diff != 1 && diff != -1) {
          ok = false;
          break;
        }
      }
    checks.push_back({"l(w*s) = l(w) +- 1", ok, ""});
  }

  // The flag motive's twists reproduce the length census.
  {
    auto motive = flagmotive::flag_motive(datum);
    checks.push_back({"flag motive twist polynomial equals poincare polynomial",
                      motive.twist_polynomial() == poly, ""});
  }

  bool all_ok = true;
  for (const auto& c : checks) all_ok = all_ok && c.ok;

  if (as_json) {
    json rows = json::array();
    for (const auto& c : checks) {
      json row{{"name", c.name}, {"ok", c.ok}};
      if (!c.note.empty()) row["note"] = c.note;
      rows.push_back(std::move(row));
    }
    emit(json{{"group", datum.label},
              {"order", weyl.order()},
              {"checks", std::move(rows)},
              {"ok", all_ok}});
  } else {
    std::cout << "group: " << datum.label << " (order " << weyl.order() << ")\n";
    for (const auto& c : checks) {
      std::cout << (c.ok ? "     ok: " : "MISMATCH: ") << c.name;
      if (!c.note.empty()) std::cout << " [" << c.note << "]";
      std::cout << "\n";
    }
    std::cout << (all_ok ? "all checks passed" : "verification failed") << "\n";
  }
  return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flag variety motive toolkit: Weyl groups, Tate-twist "
               "decompositions, K-theory and Chow realizations"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON");

  std::string spec;
  std::string file;
  std::string base = "S";
  std::string element;
  bool waiver = false;
  bool completed = false;
  bool rational = false;
  bool kh = false;
  int degree_i = 0;
  int precision = 10;
  int max_rank = 4;

  auto* weyl_cmd = app.add_subcommand("weyl", "Weyl group order, census, polynomial");
  weyl_cmd->add_option("spec", spec, "group spec, e.g. A2, B3xT1, or JSON Cartan")
      ->required();

  auto* motive_cmd =
      app.add_subcommand("motive", "Tate-twist decomposition of the flag variety");
  motive_cmd->add_option("spec", spec, "group spec")->required();

  auto* assemble_cmd =
      app.add_subcommand("assemble", "run the splitting fold on a filtration file");
  assemble_cmd->add_option("file", file, "filtration JSON file")->required();
  assemble_cmd->add_option("--base", base, "base label (default S)");
  assemble_cmd->add_flag("--waiver", waiver,
                         "assert Hom(1<n>[-1],1) = 0 for all n instead of "
                         "requiring strictness");

  auto* ktheory_cmd = app.add_subcommand("ktheory", "equivariant K-theory views");
  ktheory_cmd->add_option("spec", spec, "group spec")->required();
  ktheory_cmd->add_option("--i", degree_i, "K-theory degree (default 0)");
  auto* opt_completed = ktheory_cmd->add_flag(
      "--completed", completed, "completed K0 base-change report");
  auto* opt_rational =
      ktheory_cmd->add_flag("--rational", rational, "rational presentation");
  auto* opt_kh =
      ktheory_cmd->add_flag("--kh", kh, "homotopy-invariant K-theory view");
  opt_completed->excludes(opt_rational)->excludes(opt_kh);
  opt_rational->excludes(opt_kh);
  ktheory_cmd->add_option("--precision", precision,
                          "truncation degree for --completed (default 10)");

  auto* chow_cmd = app.add_subcommand("chow", "Chow Poincare polynomial and series");
  chow_cmd->add_option("spec", spec, "group spec")->required();
  chow_cmd->add_option("--precision", precision, "series precision (default 10)");

  auto* complete_cmd =
      app.add_subcommand("complete", "I_T-adic completion of a character");
  complete_cmd->add_option("spec", spec, "group spec fixing the torus rank")
      ->required();
  complete_cmd->add_option("--element", element, "Laurent polynomial in t1..tr")
      ->required();
  complete_cmd->add_option("--precision", precision,
                           "truncation degree (default 10)");

  auto* verify_cmd =
      app.add_subcommand("verify", "oracle cross-check and invariant suite");
  verify_cmd->add_option("spec", spec, "group spec")->required();
  verify_cmd->add_option("--max-rank", max_rank,
                         "rank cap for the matrix oracle (default 4)");

  // Let --json appear after the subcommand as well as before it.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(weyl_cmd)) return run_weyl(spec, as_json);
    if (app.got_subcommand(motive_cmd)) return run_motive(spec, as_json);
    if (app.got_subcommand(assemble_cmd))
      return run_assemble(file, base, waiver, as_json);
    if (app.got_subcommand(ktheory_cmd))
      return run_ktheory(spec, degree_i, completed, rational, kh, precision,
                         as_json);
    if (app.got_subcommand(chow_cmd)) return run_chow(spec, precision, as_json);
    if (app.got_subcommand(complete_cmd))
      return run_complete(spec, element, precision, as_json);
    if (app.got_subcommand(verify_cmd)) return run_verify(spec, max_rank, as_json);
    return 1;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const flagmotive::Error& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
    return e.name() == "VerificationFailed" ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
