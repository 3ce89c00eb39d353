#ifndef GAUSSCUBIC_CLOSEDFORM_HPP_
#define GAUSSCUBIC_CLOSEDFORM_HPP_

#include <array>
#include <utility>

#include "gausscubic/bigint.hpp"
#include "gausscubic/cyclo.hpp"

namespace gausscubic {

// Closed-form data attached to a prime p = 6k + 1: quadratic-form
// representations of p and 4p, the period polynomial, the multiplication
// table of the period algebra, and the predicted B-factor multiset.

/// x^2 + 3 y^2 = p with x, y > 0 (unique up to signs).
struct XYRep {
  long long x;
  long long y;
};
XYRep rep_x2_3y2(long long p);

/// 4p = u^2 + 27 v^2 with u = 1 (mod 3); (|u|, v) is unique.
struct Rep4p {
  long long u;
  long long v_abs;
};
Rep4p rep_4p(long long p);

/// q(z) = z^3 - s1 z^2 + s2 z - s3 with the three Gauss periods as roots:
/// s1 = -1, s2 = -(p-1)/3, s3 = ((3+u)p - 1)/27.
struct PeriodPoly {
  long long p;
  Rep4p rep;
  long long s1;
  long long s2;
  long long s3;

  /// Coefficients constant-first: q(z) = c0 + c1 z + c2 z^2 + c3 z^3.
  std::array<long long, 4> coeffs() const { return {-s3, s2, -s1, 1}; }
  /// Discriminant of q, computed exactly (equals v^2 p^2).
  BigInt discriminant() const;
};
PeriodPoly period_polynomial(long long p);

/// Coefficients of G_i G_j = a G_i + b G_j + c G_k in the period algebra:
/// a = (2p - u + 9v - 4)/18, b = (2p - u - 9v - 4)/18, c = (p + 1 + u)/9.
/// Swapping the sign of v swaps a and b.
struct StructureConstants {
  long long a;
  long long b;
  long long c;
};
StructureConstants structure_constants(long long p, long long v_signed);

/// r1 = (s1 s2 - 3 s3 + p v)/2 and r2 = (s1 s2 - 3 s3 - p v)/2, stored as
/// exact halves; they satisfy r1 + r2 = s1 s2 - 3 s3 and
/// r1 r2 = (1 + p u + p^2 u^2 - 3 p^3)/81.
struct HalfPair {
  BigInt r1_num;  // value = r1_num / 2
  BigInt r2_num;
};
HalfPair r1_r2(long long p, long long v_signed);

/// The other two periods as quadratic polynomials in G_0, over the common
/// denominator 18 v:  G_1 = (18 G_0^2 + 3(4-u-3v) G_0 + (2-u-9v-4p)) / (18v)
/// and G_2 the companion with v negated in the linear and constant parts.
struct EtaPolys {
  long long p;
  long long u;
  long long v;                  // signed
  BigInt den;                   // 18 v
  std::array<BigInt, 3> g1;     // numerator coefficients of G_1: [c0, c1, c2]
  std::array<BigInt, 3> g2;     // numerator coefficients of G_2
};
EtaPolys periods_from_eta(long long p, long long u, long long v_signed);

/// Some (u', v') with u'^2 + u'v' + v'^2 = p, by bounded search.
std::pair<long long, long long> rep_eisenstein(long long p);

/// The multiset {B_0, B_1, B_2} of the factor B_{r,1} = B_0 + B_1 zeta_3 +
/// B_2 zeta_3^2, predicted from X - zeta_3 Y = (1 - zeta_3)(u' - v' zeta_3)^(r-1)
/// by scanning the twelve associates for the representatives with
/// non-negative integral B_i.
struct BFactorPrediction {
  long long p;
  int r;
  long long u1;
  long long v1;
  Eisenstein xy;                   // the surviving X - zeta_3 Y representative
  BigInt X;
  BigInt Y;
  std::array<BigInt, 3> multiset;  // sorted ascending
};
BFactorPrediction predict_b_factor(long long p, int r);

}  // namespace gausscubic

#endif  // GAUSSCUBIC_CLOSEDFORM_HPP_
