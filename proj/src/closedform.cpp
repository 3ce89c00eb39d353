#include "gausscubic/closedform.hpp"

#include <algorithm>
#include <cmath>

#include "gausscubic/intmath.hpp"

namespace gausscubic {

namespace {
void require_one_mod_six(long long p) {
  if (p % 6 != 1 || !is_prime(static_cast<std::uint64_t>(p))) {
    fail(Errc::not_one_mod_six, "p must be a prime congruent to 1 mod 6, got " + std::to_string(p));
  }
}

long long isqrt_ll(long long n) {
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}
}  // namespace

XYRep rep_x2_3y2(long long p) {
  require_one_mod_six(p);
  XYRep found{0, 0};
  int hits = 0;
  for (long long x = 1; x * x <= p; ++x) {
    long long rest = p - x * x;
    if (rest % 3 != 0) continue;
    long long y = isqrt_ll(rest / 3);
    if (y > 0 && 3 * y * y == rest) {
      found = {x, y};
      ++hits;
    }
  }
  if (hits != 1) fail(Errc::invalid_params, "x^2 + 3y^2 representation not unique for " + std::to_string(p));
  return found;
}

Rep4p rep_4p(long long p) {
  require_one_mod_six(p);
  Rep4p found{0, 0};
  int hits = 0;
  for (long long v = 1; 27 * v * v <= 4 * p; ++v) {
    long long rest = 4 * p - 27 * v * v;
    long long u = isqrt_ll(rest);
    if (u > 0 && u * u == rest) {
      found = {u, v};
      ++hits;
    }
  }
  if (hits != 1) fail(Errc::invalid_params, "4p = u^2 + 27v^2 representation not unique for " + std::to_string(p));
  if (found.u % 3 != 1) found.u = -found.u;  // sign fixed by u = 1 (mod 3)
  return found;
}

PeriodPoly period_polynomial(long long p) {
  require_one_mod_six(p);
  PeriodPoly q;
  q.p = p;
  q.rep = rep_4p(p);
  q.s1 = -1;
  q.s2 = -(p - 1) / 3;
  long long s3_num = (3 + q.rep.u) * p - 1;
  if (s3_num % 27 != 0) {
    fail(Errc::invalid_params, "(3+u)p - 1 not divisible by 27 for p = " + std::to_string(p));
  }
  q.s3 = s3_num / 27;
  return q;
}

BigInt PeriodPoly::discriminant() const {
  // disc(z^3 + b z^2 + c z + d) = 18 b c d - 4 b^3 d + b^2 c^2 - 4 c^3 - 27 d^2
  BigInt b = -s1, c = s2, d = -s3;
  return 18 * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * c * c * c - 27 * d * d;
}

StructureConstants structure_constants(long long p, long long v_signed) {
  require_one_mod_six(p);
  Rep4p rep = rep_4p(p);
  if (v_signed != rep.v_abs && v_signed != -rep.v_abs) {
    fail(Errc::invalid_params, "v_signed must be +-" + std::to_string(rep.v_abs));
  }
  long long u = rep.u, v = v_signed;
  long long an = 2 * p - u + 9 * v - 4;
  long long bn = 2 * p - u - 9 * v - 4;
  long long cn = p + 1 + u;
  if (an % 18 != 0 || bn % 18 != 0 || cn % 9 != 0) {
    fail(Errc::invalid_params, "structure constants not integral for p = " + std::to_string(p));
  }
  return StructureConstants{an / 18, bn / 18, cn / 9};
}

HalfPair r1_r2(long long p, long long v_signed) {
  PeriodPoly q = period_polynomial(p);
  if (v_signed != q.rep.v_abs && v_signed != -q.rep.v_abs) {
    fail(Errc::invalid_params, "v_signed must be +-" + std::to_string(q.rep.v_abs));
  }
  BigInt sum = BigInt(q.s1) * q.s2 - 3 * BigInt(q.s3);  // r1 + r2
  BigInt pv = BigInt(p) * v_signed;
  return HalfPair{sum + pv, sum - pv};
}

EtaPolys periods_from_eta(long long p, long long u, long long v_signed) {
  if (v_signed == 0) fail(Errc::invalid_params, "v must be nonzero");
  EtaPolys e;
  e.p = p;
  e.u = u;
  e.v = v_signed;
  e.den = BigInt(18) * v_signed;
  long long v = v_signed;
  e.g1 = {BigInt(2 - u - 9 * v - 4 * p), BigInt(3) * (4 - u - 3 * v), BigInt(18)};
  e.g2 = {BigInt(-(9 * v - u - 4 * p + 2)), BigInt(-3) * (3 * v - u + 4), BigInt(-18)};
  return e;
}

std::pair<long long, long long> rep_eisenstein(long long p) {
  require_one_mod_six(p);
  for (long long a = 1; a * a <= p; ++a) {
    for (long long b = 1; a * a + a * b + b * b <= p; ++b) {
      if (a * a + a * b + b * b == p) return {a, b};
    }
  }
  fail(Errc::invalid_params, "no u^2 + uv + v^2 = p representation found");
}

BFactorPrediction predict_b_factor(long long p, int r) {
  require_one_mod_six(p);
  if (r < 2) fail(Errc::invalid_params, "r must be >= 2");
  auto [u1, v1] = rep_eisenstein(p);

  BigInt q = 1;  // p^(r-1)
  for (int i = 1; i < r; ++i) q *= p;

  // X - zeta_3 Y = (1 - zeta_3)(u' - v' zeta_3)^(r-1), up to associates
  Eisenstein base = Eisenstein(1, -1) * Eisenstein(u1, -v1).pow(static_cast<unsigned>(r - 1));

  BFactorPrediction out;
  out.p = p;
  out.r = r;
  out.u1 = u1;
  out.v1 = v1;
  bool have = false;
  for (const Eisenstein& cand : base.associates()) {
    BigInt X = cand.a;
    BigInt Y = -cand.b;  // cand = X - zeta_3 Y
    BigInt b0n = X + q, b1n = Y + q;
    if (b0n % 3 != 0 || b1n % 3 != 0) continue;
    BigInt B0 = b0n / 3, B1 = b1n / 3, B2 = q - B0 - B1;
    if (B0 < 0 || B1 < 0 || B2 < 0) continue;
    if (X * X + X * Y + Y * Y != 3 * q) {
      fail(Errc::no_valid_associate, "associate violates X^2 + XY + Y^2 = 3 p^(r-1)");
    }
    std::array<BigInt, 3> ms{B0, B1, B2};
    std::sort(ms.begin(), ms.end());
    if (!have) {
      out.xy = cand;
      out.X = X;
      out.Y = Y;
      out.multiset = ms;
      have = true;
    } else if (ms != out.multiset) {
      // all surviving associates must describe the same multiset
      fail(Errc::no_valid_associate, "surviving associates disagree for p = " + std::to_string(p));
    }
  }
  if (!have) fail(Errc::no_valid_associate, "no associate yields non-negative integral B_i");
  return out;
}

}  // namespace gausscubic
