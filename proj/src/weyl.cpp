#include "flagmotive/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <deque>
#include <set>
#include <sstream>

#include "flagmotive/errors.hpp"

namespace flagmotive {

std::uint64_t default_budget() {
  if (const char* env = std::getenv("FLAGMOTIVE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 10'000'000ULL;
}

IntMatrix reflection_matrix(const IntMatrix& cartan, int i) {
  const int n = cartan.size();
  IntMatrix m = IntMatrix::identity(n);
  for (int j = 0; j < n; ++j) m(i, j) = (i == j ? 1 : 0) - cartan(i, j);
  return m;
}

namespace {

std::vector<int> apply_matrix(const IntMatrix& m, const std::vector<int>& v) {
  const int n = m.size();
  std::vector<int> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += m(i, j) * v[j];
  return out;
}

bool all_nonpositive(const std::vector<int>& v) {
  for (int x : v)
    if (x > 0) return false;
  return true;
}

bool all_nonnegative(const std::vector<int>& v) {
  for (int x : v)
    if (x < 0) return false;
  return true;
}

// Column j of m holds the image of the j-th simple root; the image is a
// root, so it is negative exactly when no coordinate is positive.
bool column_negative(const IntMatrix& m, int j) {
  const int n = m.size();
  for (int i = 0; i < n; ++i)
    if (m(i, j) > 0) return false;
  return true;
}

int first_descent(const IntMatrix& m) {
  const int n = m.size();
  for (int j = 0; j < n; ++j)
    if (column_negative(m, j)) return j;
  return -1;
}

}  // namespace

std::vector<std::vector<int>> positive_roots(const IntMatrix& cartan) {
  const int n = cartan.size();
  std::vector<IntMatrix> refs;
  refs.reserve(n);
  for (int i = 0; i < n; ++i) refs.push_back(reflection_matrix(cartan, i));

  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(std::move(e));
  }
  while (!queue.empty()) {
    std::vector<int> root = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      std::vector<int> image = apply_matrix(refs[i], root);
      if (!all_nonnegative(image)) continue;
      if (seen.insert(image).second) queue.push_back(std::move(image));
    }
  }
  return std::vector<std::vector<int>>(seen.begin(), seen.end());
}

int inversion_count(const IntMatrix& cartan, const IntMatrix& w) {
  int count = 0;
  for (const auto& root : positive_roots(cartan))
    if (all_nonpositive(apply_matrix(w, root))) ++count;
  return count;
}

namespace {

// M(w^{-1}) without inverting: walk w to the identity along right descents
// a1, a2, ..; then w = s_{ak} .. s_{a1} and w^{-1} = s_{a1} .. s_{ak}.
IntMatrix inverse_matrix(const std::vector<IntMatrix>& refs, const IntMatrix& w) {
  IntMatrix cur = w;
  IntMatrix inv = IntMatrix::identity(w.size());
  const IntMatrix id = IntMatrix::identity(w.size());
  while (cur != id) {
    int a = first_descent(cur);
    if (a < 0) throw InvalidMatrix("matrix is not a Weyl group element");
    cur = cur * refs[a];
    inv = inv * refs[a];
  }
  return inv;
}

}  // namespace

std::vector<int> canonical_word(const IntMatrix& cartan, const IntMatrix& w) {
  const int n = cartan.size();
  std::vector<IntMatrix> refs;
  refs.reserve(n);
  for (int i = 0; i < n; ++i) refs.push_back(reflection_matrix(cartan, i));

  // The first letter of the lex-least word is the least left descent of w,
  // i.e. the least right descent of u = w^{-1}; peeling it repeats on u s_i.
  IntMatrix u = inverse_matrix(refs, w);
  const IntMatrix id = IntMatrix::identity(n);
  std::vector<int> word;
  while (u != id) {
    int i = first_descent(u);
    if (i < 0) throw InvalidMatrix("matrix is not a Weyl group element");
    word.push_back(i);
    u = u * refs[i];
  }
  return word;
}

bool bruhat_leq(const IntMatrix& cartan, const IntMatrix& u, const IntMatrix& w) {
  const int n = cartan.size();
  if (u.size() != n || w.size() != n)
    throw RankMismatch("elements come from groups of different rank");
  std::vector<IntMatrix> refs;
  refs.reserve(n);
  for (int i = 0; i < n; ++i) refs.push_back(reflection_matrix(cartan, i));

  // Lifting property, scanning a reduced word of w right to left: divide u
  // whenever the letter is one of its right descents.
  std::vector<int> word = canonical_word(cartan, w);
  IntMatrix cur = u;
  const IntMatrix id = IntMatrix::identity(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    if (column_negative(cur, *it)) cur = cur * refs[*it];
  return cur == id;
}

std::string word_label(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::ostringstream out;
  bool first = true;
  for (int i : word) {
    if (!first) out << "*";
    out << "s" << (i + 1);
    first = false;
  }
  return out.str();
}

namespace {

std::uint64_t fnv1a(const std::int8_t* p, std::size_t len) {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= static_cast<std::uint8_t>(p[i]);
    h *= 1099511628211ULL;
  }
  return h;
}

bool bytes_equal(const std::int8_t* a, const std::int8_t* b, std::size_t len) {
  return len == 0 || std::memcmp(a, b, len) == 0;
}

}  // namespace

std::optional<std::uint32_t> WeylGroup::find_raw(const std::int8_t* entry) const {
  const std::size_t len = static_cast<std::size_t>(n_) * n_;
  auto [lo, hi] = index_.equal_range(fnv1a(entry, len));
  for (auto it = lo; it != hi; ++it)
    if (bytes_equal(raw(it->second), entry, len)) return it->second;
  return std::nullopt;
}

WeylGroup WeylGroup::generate(const IntMatrix& cartan, std::uint64_t budget) {
  const int n = cartan.size();
  const std::size_t cell = static_cast<std::size_t>(n) * n;
  WeylGroup g;
  g.n_ = n;
  g.cartan_ = cartan;

  // Identity seeds the search.
  g.arena_.resize(cell);
  for (int i = 0; i < n; ++i) g.arena_[static_cast<std::size_t>(i) * n + i] = 1;
  g.lengths_.push_back(0);
  g.count_ = 1;
  g.index_.emplace(fnv1a(g.arena_.data(), cell), 0);

  std::vector<std::uint32_t> frontier{0};
  std::vector<std::int8_t> scratch(cell);
  std::vector<std::uint32_t> next;
  while (!frontier.empty()) {
    next.clear();
    for (std::uint32_t idx : frontier) {
      for (int gen = 0; gen < n; ++gen) {
        // scratch = element * s_gen, column-wise: col_j -= a(gen,j) col_gen
        // for j != gen, col_gen negated.
        const std::int8_t* src = g.arena_.data() + static_cast<std::size_t>(idx) * cell;
        for (int i = 0; i < n; ++i) {
          const std::int8_t* row = src + static_cast<std::size_t>(i) * n;
          std::int8_t* out = scratch.data() + static_cast<std::size_t>(i) * n;
          const int pivot = row[gen];
          for (int j = 0; j < n; ++j) {
            int v = (j == gen) ? -pivot : row[j] - cartan(gen, j) * pivot;
            if (v < -127 || v > 127)
              throw InvalidMatrix("matrix entries exceed the finite-type bound");
            out[j] = static_cast<std::int8_t>(v);
          }
        }
        if (g.find_raw(scratch.data())) continue;
        if (g.count_ >= budget)
          throw BudgetExceeded("Weyl group larger than the element budget of " +
                               std::to_string(budget));
        const auto new_idx = static_cast<std::uint32_t>(g.count_);
        g.arena_.insert(g.arena_.end(), scratch.begin(), scratch.end());
        g.lengths_.push_back(g.lengths_[idx] + 1);
        g.index_.emplace(fnv1a(scratch.data(), cell), new_idx);
        g.count_ += 1;
        next.push_back(new_idx);
      }
    }
    frontier.swap(next);
  }
  return g;
}

IntMatrix WeylGroup::matrix(std::uint32_t idx) const {
  IntMatrix m(n_);
  const std::int8_t* src = raw(idx);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = src[static_cast<std::size_t>(i) * n_ + j];
  return m;
}

std::uint32_t WeylGroup::longest_index() const {
  std::uint32_t best = 0;
  for (std::uint32_t i = 1; i < count_; ++i)
    if (lengths_[i] > lengths_[best]) best = i;
  return best;
}

std::optional<std::uint32_t> WeylGroup::index_of(const IntMatrix& m) const {
  if (m.size() != n_) return std::nullopt;
  if (n_ == 0) return 0;
  std::vector<std::int8_t> entry(static_cast<std::size_t>(n_) * n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      int v = m(i, j);
      if (v < -127 || v > 127) return std::nullopt;
      entry[static_cast<std::size_t>(i) * n_ + j] = static_cast<std::int8_t>(v);
    }
  return find_raw(entry.data());
}

std::uint32_t WeylGroup::multiply_generator(std::uint32_t idx, int gen) const {
  IntMatrix product = matrix(idx) * reflection_matrix(cartan_, gen);
  auto found = index_of(product);
  if (!found) throw InvalidMatrix("product left the generated group");
  return *found;
}

std::vector<int> WeylGroup::canonical_word(std::uint32_t idx) const {
  return flagmotive::canonical_word(cartan_, matrix(idx));
}

WeylElement WeylGroup::element(std::uint32_t idx) const {
  return WeylElement{canonical_word(idx), matrix(idx)};
}

bool WeylGroup::bruhat_leq(std::uint32_t u, std::uint32_t w) const {
  return flagmotive::bruhat_leq(cartan_, matrix(u), matrix(w));
}

std::vector<std::uint64_t> WeylGroup::length_histogram() const {
  std::vector<std::uint64_t> hist;
  for (std::int32_t l : lengths_) {
    if (static_cast<std::size_t>(l) >= hist.size()) hist.resize(l + 1, 0);
    hist[l] += 1;
  }
  return hist;
}

PoincarePolynomial WeylGroup::poincare_polynomial() const {
  PoincarePolynomial p;
  auto hist = length_histogram();
  for (std::size_t d = 0; d < hist.size(); ++d)
    p.add_term(static_cast<int>(d), Int(hist[d]));
  return p;
}

std::vector<std::uint32_t> WeylGroup::canonical_order() const {
  std::vector<std::pair<std::vector<int>, std::uint32_t>> keyed;
  keyed.reserve(count_);
  for (std::uint32_t i = 0; i < count_; ++i) keyed.emplace_back(canonical_word(i), i);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<std::uint32_t> order;
  order.reserve(count_);
  for (const auto& [word, idx] : keyed) order.push_back(idx);
  return order;
}

WeylGroup generate_weyl_group(const RootSystem& roots, std::uint64_t budget) {
  return WeylGroup::generate(roots.cartan, budget);
}

WeylGroup generate_weyl_group(const RootDatum& datum, std::uint64_t budget) {
  return WeylGroup::generate(datum.cartan, budget);
}

std::set<IntMatrix> oracle_weyl_group(const IntMatrix& cartan, int max_rank) {
  if (cartan.size() > max_rank)
    throw BudgetExceeded("oracle enumeration is guarded to rank <= " +
                         std::to_string(max_rank));
  const int n = cartan.size();
  std::set<IntMatrix> group;
  group.insert(IntMatrix::identity(n));
  for (int i = 0; i < n; ++i) group.insert(reflection_matrix(cartan, i));

  // Pairwise-product closure; no word or length bookkeeping at all.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<IntMatrix> elems(group.begin(), group.end());
    for (const auto& a : elems)
      for (const auto& b : elems)
        if (group.insert(a * b).second) grew = true;
  }
  return group;
}

std::set<IntMatrix> oracle_weyl_group(const RootSystem& roots, int max_rank) {
  if (roots.cartan.size() > max_rank)
    throw BudgetExceeded("oracle enumeration is guarded to rank <= " +
                         std::to_string(max_rank));
  const int n = roots.cartan.size();
  std::set<IntMatrix> group;
  group.insert(IntMatrix::identity(n));
  for (const auto& s : roots.simple_reflections) group.insert(s);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<IntMatrix> elems(group.begin(), group.end());
    for (const auto& a : elems)
      for (const auto& b : elems)
        if (group.insert(a * b).second) grew = true;
  }
  return group;
}

}  // namespace flagmotive
