#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "gausscubic/closedform.hpp"
#include "gausscubic/gsum.hpp"
#include "gausscubic/intmath.hpp"

using namespace gausscubic;

TEST_CASE("quadratic form representations") {
  CHECK(rep_x2_3y2(7).x == 2);
  CHECK(rep_x2_3y2(7).y == 1);
  CHECK(rep_x2_3y2(13).x == 1);
  CHECK(rep_x2_3y2(13).y == 2);
  CHECK(rep_x2_3y2(31).x == 2);
  CHECK(rep_x2_3y2(31).y == 3);

  CHECK(rep_4p(7).u == 1);
  CHECK(rep_4p(7).v_abs == 1);
  CHECK(rep_4p(13).u == -5);
  CHECK(rep_4p(13).v_abs == 1);
  CHECK(rep_4p(19).u == 7);
  CHECK(rep_4p(19).v_abs == 1);

  CHECK_THROWS_AS(rep_4p(11), Error);
  try {
    rep_x2_3y2(11);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_one_mod_six);
  }

  for (long long p : primes_upto(199)) {
    if (p % 6 != 1) continue;
    auto [x, y] = rep_x2_3y2(p);
    CHECK(x * x + 3 * y * y == p);
    Rep4p r = rep_4p(p);
    CHECK(r.u * r.u + 27 * r.v_abs * r.v_abs == 4 * p);
    CHECK(((r.u % 3) + 3) % 3 == 1);
    auto [u1, v1] = rep_eisenstein(p);
    CHECK(u1 * u1 + u1 * v1 + v1 * v1 == p);
  }
}

TEST_CASE("period polynomial coefficients") {
  CHECK(period_polynomial(7).coeffs() == std::array<long long, 4>{-1, -2, 1, 1});
  CHECK(period_polynomial(13).coeffs() == std::array<long long, 4>{1, -4, 1, 1});
  CHECK(period_polynomial(19).coeffs() == std::array<long long, 4>{-7, -6, 1, 1});

  // oracle: elementary symmetric functions of the brute-force periods
  for (long long p : {13, 19, 31}) {
    auto G = gauss_periods(Character::make(make_field(p), 3));
    PeriodPoly q = period_polynomial(p);
    CHECK((G[0] + G[1] + G[2]).as_rational() == BigInt(q.s1));
    CHECK((G[0] * G[1] + G[1] * G[2] + G[2] * G[0]).as_rational() == BigInt(q.s2));
    CHECK((G[0] * G[1] * G[2]).as_rational() == BigInt(q.s3));
  }
}

TEST_CASE("closed-form integrality and discriminant over the table range") {
  for (long long p : primes_upto(199)) {
    if (p % 6 != 1) continue;
    Rep4p r = rep_4p(p);
    CHECK(((3 + r.u) * p - 1) % 27 == 0);
    CHECK((p + 1 + r.u) % 9 == 0);
    PeriodPoly q = period_polynomial(p);
    CHECK(q.discriminant() == BigInt(r.v_abs) * r.v_abs * p * p);
    // no integer root, so the cubic is irreducible over the rationals
    auto c = q.coeffs();
    bool has_root = false;
    for (long long d = 1; d * d <= std::abs(c[0]); ++d) {
      if (c[0] % d != 0) continue;
      for (long long root : {d, -d, c[0] / d, -c[0] / d}) {
        if (((root + c[2]) * root + c[1]) * root + c[0] == 0) has_root = true;
      }
    }
    CHECK_FALSE(has_root);
  }
}

TEST_CASE("structure constants") {
  StructureConstants s7 = structure_constants(7, 1);
  CHECK(s7.a == 1);
  CHECK(s7.b == 0);
  CHECK(s7.c == 1);
  StructureConstants s13 = structure_constants(13, 1);
  CHECK(s13.a == 2);
  CHECK(s13.b == 1);
  CHECK(s13.c == 1);

  for (long long p : primes_upto(199)) {
    if (p % 6 != 1) continue;
    Rep4p r = rep_4p(p);
    StructureConstants plus = structure_constants(p, r.v_abs);
    StructureConstants minus = structure_constants(p, -r.v_abs);
    CHECK(plus.a + plus.b + plus.c == (p - 1) / 3);
    // swapping the v sign swaps a and b
    CHECK(plus.a == minus.b);
    CHECK(plus.b == minus.a);
    CHECK(plus.c == minus.c);
    // closure identity 3 s3 = ((p-1)/3 - c) s2 + c (1 - 2 s2)
    PeriodPoly q = period_polynomial(p);
    CHECK(3 * q.s3 == ((p - 1) / 3 - plus.c) * q.s2 + plus.c * (1 - 2 * q.s2));
  }
  CHECK_THROWS_AS(structure_constants(7, 2), Error);
}

TEST_CASE("r1 and r2") {
  for (long long p : {7, 13, 19, 31, 37}) {
    PeriodPoly q = period_polynomial(p);
    Rep4p r = rep_4p(p);
    HalfPair hp = r1_r2(p, r.v_abs);
    BigInt sum = BigInt(q.s1) * q.s2 - 3 * BigInt(q.s3);
    CHECK(hp.r1_num + hp.r2_num == 2 * sum);
    BigInt pu = BigInt(p) * r.u;
    BigInt prod_num = 1 + pu + pu * pu - 3 * BigInt(p) * p * p;
    CHECK(prod_num % 81 == 0);
    CHECK(hp.r1_num * hp.r2_num == 4 * (prod_num / 81));
    // swapping the v sign swaps r1 and r2
    HalfPair hm = r1_r2(p, -r.v_abs);
    CHECK(hp.r1_num == hm.r2_num);
    CHECK(hp.r2_num == hm.r1_num);
  }
  // p = 7, v = +1: r1 = 3, r2 = -4
  HalfPair hp7 = r1_r2(7, 1);
  CHECK(hp7.r1_num == 6);
  CHECK(hp7.r2_num == -8);
}

TEST_CASE("eta polynomials") {
  // p = 7, u = v = 1: G_1 = eta^2 - 2 and G_2 = 1 - eta - eta^2
  EtaPolys e = periods_from_eta(7, 1, 1);
  CHECK(e.den == 18);
  CHECK(e.g1 == std::array<BigInt, 3>{-36, 0, 18});
  CHECK(e.g2 == std::array<BigInt, 3>{18, -18, -18});

  // the three periods always sum to -1: the numerators of G_1 + G_2 must be
  // den * (-1 - eta)
  for (long long p : {7, 13, 19, 31}) {
    Rep4p r = rep_4p(p);
    for (long long v : {r.v_abs, -r.v_abs}) {
      EtaPolys ep = periods_from_eta(p, r.u, v);
      CHECK(ep.g1[2] + ep.g2[2] == 0);
      CHECK(ep.g1[1] + ep.g2[1] == -ep.den);
      CHECK(ep.g1[0] + ep.g2[0] == -ep.den);
    }
  }
  CHECK_THROWS_AS(periods_from_eta(7, 1, 0), Error);
}

TEST_CASE("predicted B-factor multisets") {
  BFactorPrediction b72 = predict_b_factor(7, 2);
  CHECK(b72.multiset == std::array<BigInt, 3>{1, 2, 4});
  CHECK(b72.X * b72.X + b72.X * b72.Y + b72.Y * b72.Y == 3 * 7);

  for (auto [p, r] : std::initializer_list<std::pair<long long, int>>{
           {7, 2}, {7, 3}, {13, 2}, {13, 3}, {19, 2}, {31, 2}, {13, 4}}) {
    BFactorPrediction b = predict_b_factor(p, r);
    BigInt q = 1;
    for (int i = 1; i < r; ++i) q *= p;
    CHECK(b.multiset[0] + b.multiset[1] + b.multiset[2] == q);
    const BigInt &B0 = b.multiset[0], &B1 = b.multiset[1], &B2 = b.multiset[2];
    CHECK(B0 * B0 + B1 * B1 + B2 * B2 - B0 * B1 - B1 * B2 - B2 * B0 == q);
    CHECK(b.X * b.X + b.X * b.Y + b.Y * b.Y == 3 * q);
  }
  CHECK_THROWS_AS(predict_b_factor(11, 2), Error);
  CHECK_THROWS_AS(predict_b_factor(7, 1), Error);
}

TEST_CASE("predicted multiset matches the exhaustive factor for r = 2") {
  for (long long p : {7, 13, 19, 31}) {
    FieldPtr base = make_field(p);
    FFElt beta = find_irreducible_binomial(base, 2, {.must_be_quadratic_nonresidue = true});
    FieldPtr top = extend_field(base, BinomialStep{2, beta.idx});
    Character chr = Character::make(top, 3);
    ClassSum b = b_sum(chr, top->step_root(), 2, 0);
    std::array<BigInt, 3> oracle{b.counts[0], b.counts[1], b.counts[2]};
    std::sort(oracle.begin(), oracle.end());
    CHECK(oracle == predict_b_factor(p, 2).multiset);
  }
}
