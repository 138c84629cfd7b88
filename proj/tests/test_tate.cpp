#include <doctest.h>

#include <random>
#include <vector>

#include "flagmotive/errors.hpp"
#include "flagmotive/qpoly.hpp"
#include "flagmotive/tate.hpp"

using namespace flagmotive;

namespace {

// Deterministic random motives: shift-free, small twists, small multiplicities.
TateMotive random_motive(std::mt19937& rng) {
  std::uniform_int_distribution<int> count_dist(0, 4);
  std::uniform_int_distribution<int> twist_dist(0, 5);
  std::uniform_int_distribution<int> mult_dist(1, 3);
  TateMotive m("S");
  int count = count_dist(rng);
  for (int i = 0; i < count; ++i)
    m.add_summand(twist_dist(rng), 0, mult_dist(rng));
  return m;
}

}  // namespace

TEST_CASE("vanishing guard") {
  CHECK(vanishing_guard(0, 0));
  CHECK(vanishing_guard(1, -1));
  CHECK(vanishing_guard(0, 5));
  CHECK(vanishing_guard(3, -7));
  CHECK_FALSE(vanishing_guard(-1, 0));
  CHECK_FALSE(vanishing_guard(-1, -1));
  CHECK_FALSE(vanishing_guard(-4, 2));
}

TEST_CASE("pure twists and sums") {
  TateMotive zero("S");
  CHECK(zero.is_zero());
  CHECK(zero.rank() == 0);
  CHECK(zero.to_string() == "0");

  TateMotive unit = TateMotive::pure(0);
  CHECK(unit.rank() == 1);
  CHECK(unit.to_string() == "1<0>");

  TateMotive m = unit.direct_sum(TateMotive::pure(1));
  CHECK(m.rank() == 2);
  CHECK(m.summands().size() == 2);

  TateMotive doubled = TateMotive::pure(1).direct_sum(TateMotive::pure(1));
  CHECK(doubled.rank() == 2);
  CHECK(doubled.summands().size() == 1);
  CHECK(doubled.summands().at({1, 0}) == 2);
  CHECK(doubled == TateMotive::pure(1, "S", 2));
}

TEST_CASE("base labels must match under direct sum") {
  TateMotive over_s = TateMotive::pure(0, "S");
  TateMotive over_bt = TateMotive::pure(1, "BT");
  CHECK_THROWS_AS(over_s.direct_sum(over_bt), BaseMismatch);
  CHECK_NOTHROW(over_bt.direct_sum(TateMotive::pure(0, "BT")));
}

TEST_CASE("tensor products") {
  TateMotive unit = TateMotive::pure(0);
  TateMotive m = TateMotive::pure(1).direct_sum(TateMotive::pure(3, "S", 2));
  CHECK(m.tensor(unit) == m);
  CHECK(unit.tensor(m) == m);

  // (1<0> + 1<1>) (x) (1<0> + 1<1>) = 1<0> + 1<1>^2 + 1<2>
  TateMotive line = TateMotive::pure(0).direct_sum(TateMotive::pure(1));
  TateMotive square = line.tensor(line);
  CHECK(square.rank() == 4);
  CHECK(square.summands().at({0, 0}) == 1);
  CHECK(square.summands().at({1, 0}) == 2);
  CHECK(square.summands().at({2, 0}) == 1);

  // Shifts add under tensor.
  TateMotive shifted = TateMotive::pure(2, "S", 1, 3);
  TateMotive prod = shifted.tensor(TateMotive::pure(1, "S", 1, -1));
  CHECK(prod.summands().size() == 1);
  CHECK(prod.summands().at({3, 2}) == 1);
}

TEST_CASE("twist polynomial") {
  TateMotive line = TateMotive::pure(0).direct_sum(TateMotive::pure(1));
  TwistPolynomial p = line.twist_polynomial();
  CHECK(p.coefficient(0) == 1);
  CHECK(p.coefficient(1) == 1);
  CHECK(p.degree() == 1);

  TateMotive shifted = TateMotive::pure(0, "S", 1, 2);
  CHECK(shifted.has_shift());
  CHECK_THROWS_AS(shifted.twist_polynomial(), ShiftPresent);
}

TEST_CASE("rank and twist polynomial are additive and multiplicative") {
  std::mt19937 rng(20240317);
  for (int trial = 0; trial < 200; ++trial) {
    TateMotive a = random_motive(rng);
    TateMotive b = random_motive(rng);
    TateMotive sum = a.direct_sum(b);
    TateMotive prod = a.tensor(b);

    CHECK(sum.rank() == a.rank() + b.rank());
    CHECK(prod.rank() == a.rank() * b.rank());
    CHECK(sum.twist_polynomial() ==
          a.twist_polynomial() + b.twist_polynomial());
    CHECK(prod.twist_polynomial() ==
          a.twist_polynomial() * b.twist_polynomial());

    // Tensor distributes over direct sum.
    TateMotive c = random_motive(rng);
    CHECK(a.tensor(b.direct_sum(c)) ==
          a.tensor(b).direct_sum(a.tensor(c)));

    // Both operations are commutative on these diagonal objects.
    CHECK(sum == b.direct_sum(a));
    CHECK(prod == b.tensor(a));
  }
}

TEST_CASE("waiver flag propagates but does not affect equality") {
  TateMotive a = TateMotive::pure(1);
  TateMotive b = TateMotive::pure(1);
  b.set_waiver(true);
  CHECK(a == b);
  CHECK_FALSE(a.waiver());
  CHECK(b.waiver());
  CHECK(a.direct_sum(b).waiver());
  CHECK(b.tensor(a).waiver());
  CHECK_FALSE(a.direct_sum(a).waiver());
}
