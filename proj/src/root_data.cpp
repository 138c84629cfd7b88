#include "flagmotive/root_data.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>

#include "flagmotive/errors.hpp"
#include "flagmotive/weyl.hpp"

namespace flagmotive {

namespace {

// Tridiagonal -1 chain of the given size.
IntMatrix chain_cartan(int n) {
  IntMatrix m = IntMatrix::identity(n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = 2;
    if (i + 1 < n) {
      m(i, i + 1) = -1;
      m(i + 1, i) = -1;
    }
  }
  return m;
}

IntMatrix e_series_cartan(int n) {
  // Bourbaki numbering shifted to 0-indexed: branch node 1 attaches to the
  // chain 0-2-3-..-(n-1) at node 3.
  IntMatrix m = IntMatrix::identity(n);
  for (int i = 0; i < n; ++i) m(i, i) = 2;
  auto edge = [&m](int a, int b) {
    m(a, b) = -1;
    m(b, a) = -1;
  };
  edge(0, 2);
  for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
  edge(1, 3);
  return m;
}

}  // namespace

IntMatrix named_cartan(char family, int rank) {
  auto reject = [family, rank]() -> IntMatrix {
    std::ostringstream msg;
    msg << "unknown or out-of-range type '" << family << rank << "'";
    throw SyntaxError(msg.str());
  };
  switch (family) {
    case 'A':
      if (rank < 1) return reject();
      return chain_cartan(rank);
    case 'B': {
      if (rank < 2) return reject();
      IntMatrix m = chain_cartan(rank);
      m(rank - 1, rank - 2) = -2;
      return m;
    }
    case 'C': {
      if (rank < 3) return reject();
      IntMatrix m = chain_cartan(rank);
      m(rank - 2, rank - 1) = -2;
      return m;
    }
    case 'D': {
      if (rank < 4) return reject();
      IntMatrix m = chain_cartan(rank - 1);
      IntMatrix out = IntMatrix::identity(rank);
      for (int i = 0; i < rank - 1; ++i)
        for (int j = 0; j < rank - 1; ++j) out(i, j) = m(i, j);
      out(rank - 1, rank - 1) = 2;
      out(rank - 3, rank - 1) = -1;
      out(rank - 1, rank - 3) = -1;
      return out;
    }
    case 'E':
      if (rank < 6 || rank > 8) return reject();
      return e_series_cartan(rank);
    case 'F': {
      if (rank != 4) return reject();
      IntMatrix m = chain_cartan(4);
      m(2, 1) = -2;
      return m;
    }
    case 'G': {
      if (rank != 2) return reject();
      IntMatrix m = IntMatrix::identity(2);
      m(0, 0) = 2;
      m(1, 1) = 2;
      m(0, 1) = -1;
      m(1, 0) = -3;
      return m;
    }
    default:
      return reject();
  }
}

void validate_cartan(const IntMatrix& cartan) {
  const int n = cartan.size();
  for (int i = 0; i < n; ++i) {
    if (cartan(i, i) != 2) throw InvalidMatrix("diagonal entries must equal 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan(i, j) > 0) throw InvalidMatrix("off-diagonal entries must be <= 0");
      if ((cartan(i, j) == 0) != (cartan(j, i) == 0))
        throw InvalidMatrix("zero pattern must be symmetric");
    }
  }
}

bool is_finite_type(const IntMatrix& cartan) {
  // Leading principal minors via fraction-free Gaussian elimination.
  const int n = cartan.size();
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = cartan(i, j);
  Int prev = 1;
  for (int k = 0; k < n; ++k) {
    // After step k, a[k][k] is the (k+1)-st leading principal minor.
    if (a[k][k] <= 0) return false;
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    prev = a[k][k];
  }
  return true;
}

namespace {

std::string canonical_label(const std::vector<FactorSpec>& factors, int extra_torus) {
  std::ostringstream out;
  bool first = true;
  for (const auto& f : factors) {
    if (!first) out << "x";
    out << f.family << f.rank;
    first = false;
  }
  if (extra_torus > 0 || factors.empty()) {
    if (!first) out << "x";
    out << "T" << extra_torus;
  }
  return out.str();
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += b.size();
  IntMatrix out(n);
  int offset = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.size(); ++i)
      for (int j = 0; j < b.size(); ++j) out(offset + i, offset + j) = b(i, j);
    offset += b.size();
  }
  return out;
}

}  // namespace

RootDatum parse_spec(const std::string& spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw SyntaxError("empty group spec");

  std::vector<std::string> tokens;
  std::string current;
  for (char c : s) {
    if (c == 'x' || c == 'X') {
      if (current.empty()) throw SyntaxError("empty factor in spec '" + spec + "'");
      tokens.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (current.empty()) throw SyntaxError("trailing 'x' in spec '" + spec + "'");
  tokens.push_back(current);

  std::vector<FactorSpec> factors;
  std::vector<IntMatrix> blocks;
  int extra_torus = 0;
  for (const auto& tok : tokens) {
    char family = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    std::string digits = tok.substr(1);
    if (digits.empty() || digits.size() > 6)
      throw SyntaxError("malformed factor '" + tok + "'");
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw SyntaxError("malformed factor '" + tok + "'");
    int rank = std::stoi(digits);
    if (family == 'T') {
      extra_torus += rank;
    } else {
      if (rank > 512) throw SyntaxError("factor rank too large: '" + tok + "'");
      blocks.push_back(named_cartan(family, rank));
      factors.push_back({family, rank});
    }
  }

  RootDatum datum;
  datum.cartan = block_diagonal(blocks);
  datum.factors = std::move(factors);
  datum.torus_rank = datum.cartan.size() + extra_torus;
  datum.label = canonical_label(datum.factors, extra_torus);
  return datum;
}

RootDatum datum_from_cartan(const IntMatrix& cartan, int torus_rank,
                            const std::string& label) {
  validate_cartan(cartan);
  if (!is_finite_type(cartan))
    throw NotFiniteType("Cartan matrix has a nonpositive leading principal minor");
  if (torus_rank < cartan.size())
    throw SyntaxError("torus_rank must be at least the Cartan matrix size");
  RootDatum datum;
  datum.cartan = cartan;
  datum.torus_rank = torus_rank;
  datum.label = label.empty()
                    ? "custom(" + std::to_string(cartan.size()) + ")"
                    : label;
  return datum;
}

RootDatum datum_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(std::string("bad JSON: ") + e.what());
  }

  nlohmann::json matrix;
  int torus_rank = -1;
  std::string label;
  if (j.is_array()) {
    matrix = j;
  } else if (j.is_object()) {
    if (!j.contains("cartan")) throw SyntaxError("JSON object must contain \"cartan\"");
    matrix = j["cartan"];
    if (j.contains("torus_rank")) {
      if (!j["torus_rank"].is_number_integer())
        throw SyntaxError("\"torus_rank\" must be an integer");
      torus_rank = j["torus_rank"].get<int>();
    }
    if (j.contains("label")) {
      if (!j["label"].is_string()) throw SyntaxError("\"label\" must be a string");
      label = j["label"].get<std::string>();
    }
  } else {
    throw SyntaxError("expected a JSON array or object");
  }

  if (!matrix.is_array()) throw SyntaxError("\"cartan\" must be an array of rows");
  const int n = static_cast<int>(matrix.size());
  IntMatrix cartan(n);
  for (int i = 0; i < n; ++i) {
    if (!matrix[i].is_array() || static_cast<int>(matrix[i].size()) != n)
      throw SyntaxError("Cartan matrix must be square");
    for (int j2 = 0; j2 < n; ++j2) {
      if (!matrix[i][j2].is_number_integer())
        throw SyntaxError("Cartan entries must be integers");
      cartan(i, j2) = matrix[i][j2].get<int>();
    }
  }
  if (torus_rank < 0) torus_rank = n;
  return datum_from_cartan(cartan, torus_rank, label);
}

RootDatum parse_root_datum(const std::string& spec) {
  for (char c : spec) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{' || c == '[') return datum_from_json_text(spec);
    break;
  }
  return parse_spec(spec);
}

RootSystem generate_root_system(const RootDatum& datum) {
  RootSystem roots;
  roots.cartan = datum.cartan;
  const int n = datum.cartan.size();
  roots.simple_reflections.reserve(n);
  for (int i = 0; i < n; ++i)
    roots.simple_reflections.push_back(reflection_matrix(datum.cartan, i));
  roots.positive_roots = positive_roots(datum.cartan);
  return roots;
}

Int expected_weyl_order(char family, int rank) {
  switch (family) {
    case 'A':
      return factorial(rank + 1);
    case 'B':
    case 'C':
      return (Int(1) << rank) * factorial(rank);
    case 'D':
      return (Int(1) << (rank - 1)) * factorial(rank);
    case 'E':
      if (rank == 6) return 51840;
      if (rank == 7) return 2903040;
      if (rank == 8) return 696729600;
      break;
    case 'F':
      if (rank == 4) return 1152;
      break;
    case 'G':
      if (rank == 2) return 12;
      break;
    default:
      break;
  }
  throw SyntaxError("no order formula for that type");
}

int positive_root_count(char family, int rank) {
  switch (family) {
    case 'A':
      return rank * (rank + 1) / 2;
    case 'B':
    case 'C':
      return rank * rank;
    case 'D':
      return rank * (rank - 1);
    case 'E':
      if (rank == 6) return 36;
      if (rank == 7) return 63;
      if (rank == 8) return 120;
      break;
    case 'F':
      if (rank == 4) return 24;
      break;
    case 'G':
      if (rank == 2) return 6;
      break;
    default:
      break;
  }
  throw SyntaxError("no positive-root count for that type");
}

Int expected_weyl_order(const RootDatum& datum) {
  if (datum.factors.empty() && datum.semisimple_rank() > 0)
    throw SyntaxError("order formula needs named factor metadata");
  Int order = 1;
  for (const auto& f : datum.factors) order *= expected_weyl_order(f.family, f.rank);
  return order;
}

int positive_root_count(const RootDatum& datum) {
  if (datum.factors.empty() && datum.semisimple_rank() > 0)
    throw SyntaxError("positive-root count needs named factor metadata");
  int count = 0;
  for (const auto& f : datum.factors) count += positive_root_count(f.family, f.rank);
  return count;
}

}  // namespace flagmotive
