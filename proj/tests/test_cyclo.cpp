#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gausscubic/cyclo.hpp"

using namespace gausscubic;

namespace {
std::mt19937_64 rng(0xc0ffee);

CycloInt random_cyclo(int m, long long p) {
  const int mm = m == 1 ? 1 : m;
  std::vector<BigInt> grid(static_cast<std::size_t>(mm) * static_cast<std::size_t>(p));
  for (auto& v : grid) v = static_cast<long long>(rng() % 21) - 10;
  return CycloInt::from_exponent_grid(m, p, grid);
}

Eisenstein random_eis() {
  return Eisenstein(static_cast<long long>(rng() % 41) - 20, static_cast<long long>(rng() % 41) - 20);
}
}  // namespace

TEST_CASE("root of unity relations") {
  // zeta_3 * zeta_3^2 = 1
  CHECK(CycloInt::monomial(3, 7, 1, 0) * CycloInt::monomial(3, 7, 2, 0) ==
        CycloInt::integer(3, 7, 1));
  // zeta_p^(p-1) * zeta_p = 1
  CHECK(CycloInt::monomial(3, 7, 0, 6) * CycloInt::monomial(3, 7, 0, 1) ==
        CycloInt::integer(3, 7, 1));
  // (1 - zeta_3)(1 - zeta_3^2) = 3
  CycloInt one = CycloInt::integer(3, 7, 1);
  CycloInt z = CycloInt::monomial(3, 7, 1, 0);
  CycloInt z2 = CycloInt::monomial(3, 7, 2, 0);
  CHECK((one - z) * (one - z2) == CycloInt::integer(3, 7, 3));
}

TEST_CASE("full period sum vanishes") {
  CycloInt sum = CycloInt(3, 11);
  for (long long b = 0; b < 11; ++b) sum = sum + CycloInt::monomial(3, 11, 0, b);
  CHECK(sum.is_zero());
  CHECK(sum.as_rational() == BigInt(0));
}

TEST_CASE("conjugation") {
  // conj(zeta_3) = zeta_3^2 = -1 - zeta_3
  CycloInt z = CycloInt::monomial(3, 7, 1, 0);
  CHECK(z.conj() == CycloInt::monomial(3, 7, 2, 0));
  CHECK(z.conj().coeff(0, 0) == -1);
  CHECK(z.conj().coeff(1, 0) == -1);
  CHECK(CycloInt::integer(3, 5, 42).conj() == CycloInt::integer(3, 5, 42));
  for (int i = 0; i < 30; ++i) {
    CycloInt x = random_cyclo(3, 13);
    CHECK(x.conj().conj() == x);
    CycloInt y = random_cyclo(3, 13);
    CHECK((x * y).conj() == x.conj() * y.conj());
  }
}

TEST_CASE("rationality detection") {
  CHECK(CycloInt::monomial(3, 7, 1, 0).as_rational() == std::nullopt);
  CHECK(CycloInt::integer(3, 7, -5).as_rational() == BigInt(-5));
  CHECK(CycloInt::monomial(3, 7, 0, 2).as_rational() == std::nullopt);
}

TEST_CASE("ring axioms and canonical uniqueness on random elements") {
  for (auto [m, p] : {std::pair<int, long long>{3, 7}, {3, 13}, {1, 11}, {7, 13}, {2, 7}}) {
    for (int i = 0; i < 25; ++i) {
      CycloInt x = random_cyclo(m, p), y = random_cyclo(m, p), z = random_cyclo(m, p);
      CHECK((x + y) * z == x * z + y * z);
      CHECK(x * y == y * x);
      CHECK((x * y) * z == x * (y * z));
      // rebuilding from the canonical coefficients reproduces the value
      const int mm = m == 1 ? 1 : m;
      std::vector<BigInt> grid(static_cast<std::size_t>(mm) * static_cast<std::size_t>(p));
      for (int a = 0; a < x.rows(); ++a) {
        for (long long b = 0; b < x.cols(); ++b) {
          grid[static_cast<std::size_t>(a) * static_cast<std::size_t>(p) +
               static_cast<std::size_t>(b)] = x.coeff(a, b);
        }
      }
      CHECK(CycloInt::from_exponent_grid(m, p, grid) == x);
      // complex embedding respects the exact product (sanity only)
      auto zc = (x * y).to_complex();
      auto zx = x.to_complex() * y.to_complex();
      CHECK(std::abs(zc - zx) < 1e-9 * (1.0 + std::abs(zc)));
    }
  }
  CHECK_THROWS_AS(random_cyclo(3, 7) + random_cyclo(3, 11), Error);
}

TEST_CASE("eisenstein arithmetic") {
  CHECK(Eisenstein(2, -1).norm() == 7);
  // (1 - zeta_3)^2 = -3 zeta_3
  CHECK(Eisenstein(1, -1).pow(2) == Eisenstein(0, -3));
  CHECK(Eisenstein(1, -1).pow(2).norm() == 9);

  auto units = Eisenstein::units();
  for (const auto& u : units) CHECK(u.norm() == 1);

  // associates of 1 are the six units, each listed twice
  auto assoc = Eisenstein(1, 0).associates();
  REQUIRE(assoc.size() == 12);
  for (std::size_t i = 0; i < 6; ++i) CHECK(assoc[i] == assoc[i + 6]);

  for (int i = 0; i < 50; ++i) {
    Eisenstein x = random_eis(), y = random_eis();
    CHECK((x * y).norm() == x.norm() * y.norm());
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK(x.norm() >= 0);
    if (x.norm() == 0) CHECK(x.is_zero());
  }
}

TEST_CASE("eisenstein embeds as a ring map") {
  CHECK(embed_eis(Eisenstein(0, 1), 7) * embed_eis(Eisenstein(0, 1).conj(), 7) ==
        CycloInt::integer(3, 7, 1));
  for (int i = 0; i < 30; ++i) {
    Eisenstein x = random_eis(), y = random_eis();
    CHECK(embed_eis(x, 11) * embed_eis(y, 11) == embed_eis(x * y, 11));
    CHECK(embed_eis(x, 11) + embed_eis(y, 11) == embed_eis(x + y, 11));
    CHECK(eis_from_cyclo(embed_eis(x, 11)) == x);
  }
  CHECK(eis_from_cyclo(CycloInt::monomial(3, 7, 0, 3)) == std::nullopt);
}

TEST_CASE("json round trips") {
  for (int i = 0; i < 10; ++i) {
    CycloInt x = random_cyclo(3, 13);
    CHECK(CycloInt::from_json(x.to_json()) == x);
    Eisenstein e = random_eis();
    CHECK(Eisenstein::from_json(e.to_json()) == e);
  }
  // big coefficients survive the decimal-string encoding
  CycloInt big = BigInt("123456789012345678901234567890") * CycloInt::monomial(3, 7, 1, 3);
  CHECK(CycloInt::from_json(big.to_json()) == big);
}

TEST_CASE("complex embedding of zero") {
  CHECK(std::abs(CycloInt(3, 7).to_complex()) == 0.0);
}
