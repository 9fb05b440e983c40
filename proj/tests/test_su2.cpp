#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <thread>
#include <vector>

#include "su3cg/su2.hpp"
#include "su3cg/errors.hpp"

using namespace su3;

namespace {
Rational h(long n) { return Rational(n, 2); }  // half-integer shorthand
}

TEST_CASE("stretched and simple values") {
  CHECK(su2_cgc(h(1), h(1), h(1), h(1), Rational(1), Rational(1)) ==
        SurdValue::one());
  CHECK(su2_cgc(h(1), h(1), h(1), h(-1), Rational(0), Rational(0)).squared() ==
        Rational(1, 2));
  CHECK(su2_cgc(h(1), h(1), h(1), h(-1), Rational(0), Rational(0)).sign() == 1);
  CHECK(su2_cgc(h(1), h(-1), h(1), h(1), Rational(0), Rational(0)).sign() == -1);
  // M-conservation and triangle failures give zero.
  CHECK(su2_cgc(Rational(1), Rational(1), Rational(1), Rational(1), Rational(1),
                Rational(1))
            .is_zero());
  CHECK(su2_cgc(Rational(1), Rational(0), Rational(1), Rational(0), Rational(3),
                Rational(0))
            .is_zero());
}

TEST_CASE("coupling to the singlet: (-1)^(j-m)/sqrt(2j+1)") {
  for (long twoj = 0; twoj <= 6; ++twoj) {
    Rational j(twoj, 2);
    for (Rational m = -j; m <= j; m += Rational(1)) {
      SurdValue c = su2_cgc(j, m, j, -m, Rational(0), Rational(0));
      CHECK(c.squared() == Rational(1) / (Rational(2) * j + Rational(1)));
      CHECK(c.sign() == parity_sign(j - m));
    }
  }
  // delta_jk: different spins cannot couple to the singlet.
  CHECK(su2_cgc(Rational(1), Rational(0), Rational(2), Rational(0), Rational(0),
                Rational(0))
            .is_zero());
}

TEST_CASE("malformed keys") {
  CHECK_THROWS_AS(su2_cgc(Rational(1, 3), Rational(0), Rational(1), Rational(0),
                          Rational(1), Rational(0)),
                  MalformedKey);
  CHECK_THROWS_AS(su2_cgc(Rational(1), Rational(2), Rational(1), Rational(0),
                          Rational(1), Rational(0)),
                  MalformedKey);
}

TEST_CASE("su2_couplings batches") {
  auto stretched = su2_couplings(h(1), h(1), Rational(1), Rational(1));
  REQUIRE(stretched.size() == 1);
  CHECK(std::get<2>(stretched[0]) == SurdValue::one());

  auto singlet = su2_couplings(h(1), h(1), Rational(0), Rational(0));
  REQUIRE(singlet.size() == 2);
  CHECK(std::get<0>(singlet[0]) == h(1));
  CHECK(std::get<2>(singlet[0]).squared() == Rational(1, 2));
  CHECK(std::get<2>(singlet[0]).sign() == 1);
  CHECK(std::get<2>(singlet[1]).sign() == -1);

  auto top = su2_couplings(Rational(1), h(1), h(3), h(3));
  REQUIRE(top.size() == 1);
  CHECK(std::get<2>(top[0]) == SurdValue::one());

  CHECK_THROWS_AS(su2_couplings(Rational(1), Rational(1), Rational(3),
                                Rational(0)),
                  TriangleViolation);
}

TEST_CASE("normalization of couplings") {
  for (long twoj1 = 0; twoj1 <= 5; ++twoj1)
    for (long twoj2 = 0; twoj2 <= 5; ++twoj2) {
      Rational j1(twoj1, 2), j2(twoj2, 2);
      for (Rational J = (j1 - j2).abs(); J <= j1 + j2; J += Rational(1))
        for (Rational M = -J; M <= J; M += Rational(1)) {
          Rational norm(0);
          for (auto& [m1, m2, c] : su2_couplings(j1, j2, J, M))
            norm += c.squared();
          CHECK(norm == Rational(1));
        }
    }
}

TEST_CASE("exact orthogonality, all j up to 6") {
  for (long twoj1 = 0; twoj1 <= 12; ++twoj1)
    for (long twoj2 = 0; twoj2 <= 12; ++twoj2) {
      Rational j1(twoj1, 2), j2(twoj2, 2);
      for (Rational J = (j1 - j2).abs(); J <= j1 + j2; J += Rational(1))
        for (Rational Jp = J; Jp <= j1 + j2; Jp += Rational(1))
          for (Rational M = -min(J, Jp); M <= min(J, Jp); M += Rational(1)) {
            SurdSum dot;
            for (Rational m1 = max(-j1, M - j2); m1 <= min(j1, M + j2);
                 m1 += Rational(1)) {
              dot.add_product(su2_cgc(j1, m1, j2, M - m1, J, M),
                              su2_cgc(j1, m1, j2, M - m1, Jp, M));
            }
            if (J == Jp) {
              auto v = dot.as_surd();
              REQUIRE(v.has_value());
              CHECK(*v == SurdValue::one());
            } else {
              CHECK(dot.is_zero());
            }
          }
    }
}

TEST_CASE("Condon-Shortley sign") {
  for (long twoj1 = 0; twoj1 <= 8; ++twoj1)
    for (long twoj2 = 0; twoj2 <= 8; ++twoj2) {
      Rational j1(twoj1, 2), j2(twoj2, 2);
      for (Rational J = (j1 - j2).abs(); J <= j1 + j2; J += Rational(1)) {
        if (J - j1 < -j2) continue;
        SurdValue c = su2_cgc(j1, j1, j2, J - j1, J, J);
        CHECK(c.sign() == 1);
      }
    }
}

TEST_CASE("index-reflection symmetry used by conjugation") {
  // C^{jki}_{n-i3, -n, -i3} = C^{kji}_{n, i3-n, i3}, all j,k,i <= 3.
  for (long twoj = 0; twoj <= 6; ++twoj)
    for (long twok = 0; twok <= 6; ++twok) {
      Rational j(twoj, 2), k(twok, 2);
      for (Rational I = (j - k).abs(); I <= j + k; I += Rational(1))
        for (Rational i3 = -I; i3 <= I; i3 += Rational(1))
          for (Rational n = max(-k, i3 - j) - Rational(1);
               n <= min(k, i3 + j) + Rational(1); n += Rational(1)) {
            if ((n - i3 + j).is_negative() || n - i3 > j) continue;
            if (n.abs() > k) continue;
            CHECK(su2_cgc(j, n - i3, k, -n, I, -i3) ==
                  su2_cgc(k, n, j, i3 - n, I, i3));
          }
    }
}

TEST_CASE("memo table safe under concurrent mixed readers and writers") {
  auto worker = [](int seed) {
    for (int t = 0; t < 200; ++t) {
      long a = (seed + t) % 7, b = (seed * 3 + t) % 5;
      Rational j1(a, 2), j2(b, 2);
      for (Rational J = (j1 - j2).abs(); J <= j1 + j2; J += Rational(1))
        (void)su2_cgc(j1, j1, j2, J - j1, J, J);
    }
  };
  std::vector<std::thread> pool;
  for (int k = 0; k < 8; ++k) pool.emplace_back(worker, k);
  for (auto& th : pool) th.join();
  CHECK(su2_cgc(h(1), h(1), h(1), h(1), Rational(1), Rational(1)) ==
        SurdValue::one());
}
