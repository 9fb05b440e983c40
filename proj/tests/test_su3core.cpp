#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "su3cg/irrep.hpp"

using namespace su3;

TEST_CASE("dimension") {
  CHECK(dimension(IrrepLabel(0, 0)) == 1);
  CHECK(dimension(IrrepLabel(1, 0)) == 3);
  CHECK(dimension(IrrepLabel(0, 1)) == 3);
  CHECK(dimension(IrrepLabel(1, 1)) == 8);
  CHECK(dimension(IrrepLabel(2, 2)) == 27);
  CHECK(dimension(IrrepLabel(3, 0)) == 10);
}

TEST_CASE("casimir eigenvalues") {
  CHECK(casimir_f(IrrepLabel(0, 0)) == Rational(0));
  CHECK(casimir_g(IrrepLabel(0, 0)) == Rational(0));
  CHECK(casimir_f(IrrepLabel(1, 1)) == Rational(3));
  CHECK(casimir_f(IrrepLabel(1, 0)) == Rational(4, 3));
  CHECK(casimir_g(IrrepLabel(1, 0)) == Rational(20, 9));
  for (int p = 0; p <= 5; ++p) {
    CHECK(casimir_g(IrrepLabel(p, p)) == Rational(0));
    for (int q = 0; q <= 5; ++q) {
      CHECK(casimir_g(IrrepLabel(p, q)) == -casimir_g(IrrepLabel(q, p)));
      CHECK(casimir_f(IrrepLabel(p, q)) == casimir_f(IrrepLabel(q, p)));
    }
  }
}

TEST_CASE("highest weight") {
  auto hw = highest_weight(IrrepLabel(1, 0));
  CHECK(hw.i == Rational(1, 2));
  CHECK(hw.i3 == Rational(1, 2));
  CHECK(hw.y == Rational(1, 3));
  auto singlet = highest_weight(IrrepLabel(0, 0));
  CHECK(singlet.i == Rational(0));
  CHECK(singlet.y == Rational(0));
  auto octet = highest_weight(IrrepLabel(1, 1));
  CHECK(octet.i == Rational(1));
  CHECK(octet.i3 == Rational(1));
  CHECK(octet.y == Rational(0));
}

TEST_CASE("isospin range") {
  auto r = isospin_range(IrrepLabel(1, 1), Rational(0));
  CHECK(r.i_min == Rational(0));
  CHECK(r.i_max == Rational(1));

  auto top = isospin_range(IrrepLabel(1, 1), Rational(1));
  CHECK(top.i_min == Rational(1, 2));
  CHECK(top.i_max == Rational(1, 2));

  for (int P = 1; P <= 4; ++P) {
    auto line = isospin_range(IrrepLabel(P, 0), Rational(P, 3));
    CHECK(line.i_min == Rational(P, 2));
    CHECK(line.i_max == Rational(P, 2));
  }

  CHECK_THROWS_AS(isospin_range(IrrepLabel(1, 1), Rational(3)), YOutOfRange);
  CHECK_THROWS_AS(isospin_range(IrrepLabel(1, 1), Rational(1, 2)), YOutOfRange);
}

TEST_CASE("diagram corners are attained") {
  // Corner points: A(Q/2, -(2P+Q)/3), B((P+Q)/2, (P-Q)/3),
  // C(P/2, (P+2Q)/3), D(0 or fold, 2(Q-P)/3).
  for (int P = 0; P <= 4; ++P)
    for (int Q = 0; Q <= 4; ++Q) {
      IrrepLabel s(P, Q);
      auto atA = isospin_range(s, Rational(-(2 * P + Q), 3));
      CHECK(atA.i_min == Rational(Q, 2));
      CHECK(atA.i_max == Rational(Q, 2));
      auto atB = isospin_range(s, Rational(P - Q, 3));
      CHECK(atB.i_max == Rational(P + Q, 2));
      auto atC = isospin_range(s, Rational(P + 2 * Q, 3));
      CHECK(atC.i_min == Rational(P, 2));
      CHECK(atC.i_max == Rational(P, 2));
      auto atD = isospin_range(s, Rational(2 * (Q - P), 3));
      CHECK(atD.i_min == Rational(0));
    }
}

TEST_CASE("enumerate basis") {
  auto triplet = enumerate_basis(IrrepLabel(1, 0));
  REQUIRE(triplet.states.size() == 3);
  CHECK(triplet.states[0] ==
        CanonicalState{IrrepLabel(1, 0), Rational(1, 2), Rational(1, 2),
                       Rational(1, 3)});
  CHECK(triplet.states[1] ==
        CanonicalState{IrrepLabel(1, 0), Rational(1, 2), Rational(-1, 2),
                       Rational(1, 3)});
  CHECK(triplet.states[2] ==
        CanonicalState{IrrepLabel(1, 0), Rational(0), Rational(0),
                       Rational(-2, 3)});

  auto singlet = enumerate_basis(IrrepLabel(0, 0));
  REQUIRE(singlet.states.size() == 1);
  CHECK(singlet.states[0].i == Rational(0));

  auto octet = enumerate_basis(IrrepLabel(1, 1));
  CHECK(octet.states.size() == 8);
  CHECK(octet.isospins_at({Rational(0), Rational(0)}) ==
        std::vector<Rational>{Rational(1), Rational(0)});

  // Deterministic ordering: two enumerations serialize identically.
  auto again = enumerate_basis(IrrepLabel(1, 1));
  std::ostringstream a, b;
  for (const auto& st : octet.states) a << st.str() << '\n';
  for (const auto& st : again.states) b << st.str() << '\n';
  CHECK(a.str() == b.str());
}

TEST_CASE("weight multiplicity") {
  CHECK(weight_multiplicity(IrrepLabel(1, 1), {Rational(0), Rational(0)}) == 2);
  CHECK(weight_multiplicity(IrrepLabel(1, 0), {Rational(0), Rational(0)}) == 0);
  for (int P = 0; P <= 3; ++P)
    for (int Q = 0; Q <= 3; ++Q) {
      auto hw = highest_weight(IrrepLabel(P, Q));
      CHECK(weight_multiplicity(IrrepLabel(P, Q), {hw.i3, hw.y}) == 1);
    }
}

TEST_CASE("multiplicity sum equals dimension, exhaustive to 8") {
  for (int P = 0; P <= 8; ++P)
    for (int Q = 0; Q <= 8; ++Q) {
      IrrepLabel s(P, Q);
      long total = 0;
      auto [ylo, yhi] = hypercharge_range(s);
      for (Rational y = ylo; y <= yhi; y += Rational(1)) {
        auto r = isospin_range(s, y);
        for (Rational i3 = -r.i_max; i3 <= r.i_max; i3 += Rational(1, 2))
          total += weight_multiplicity(s, {i3, y});
      }
      CHECK(total == dimension(s));
    }
}

TEST_CASE("conjugate and triality") {
  CHECK(conjugate(IrrepLabel(1, 0)) == IrrepLabel(0, 1));
  CHECK(triality(IrrepLabel(1, 0)) == 1);
  CHECK(conjugate(IrrepLabel(1, 1)) == IrrepLabel(1, 1));
  CHECK(triality(IrrepLabel(1, 1)) == 0);
  CHECK(conjugate(IrrepLabel(3, 0)) == IrrepLabel(0, 3));
  CHECK(triality(IrrepLabel(3, 0)) == 0);
  CHECK(triality(IrrepLabel(0, 1)) == -1);
  CHECK(triality(IrrepLabel(2, 0)) == -1);
}

TEST_CASE("state validation") {
  CHECK_NOTHROW(validate_state(
      {IrrepLabel(1, 1), Rational(1), Rational(0), Rational(0)}));
  CHECK_THROWS_AS(validate_state({IrrepLabel(1, 1), Rational(1), Rational(1, 2),
                                  Rational(0)}),
                  BadState);
  CHECK_THROWS_AS(validate_state({IrrepLabel(1, 0), Rational(3, 2),
                                  Rational(1, 2), Rational(1, 3)}),
                  BadState);
}
