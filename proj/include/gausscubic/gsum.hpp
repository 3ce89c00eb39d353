#ifndef GAUSSCUBIC_GSUM_HPP_
#define GAUSSCUBIC_GSUM_HPP_

#include <optional>
#include <vector>

#include "json.hpp"

#include "gausscubic/chars.hpp"
#include "gausscubic/cyclo.hpp"
#include "gausscubic/ffield.hpp"
#include "gausscubic/sum_kernels.hpp"

namespace gausscubic {

/// Exact Gauss sum G_r(beta, chi) = sum over the field of
/// chi(y) * zeta_p^Tr(beta y), with its parameters recorded for
/// reproducibility.  `rational` is set whenever the value is a rational
/// integer (always, for a trivial character).
struct GaussSumResult {
  CycloInt value;
  std::optional<BigInt> rational;
  nlohmann::json params;
};

GaussSumResult gauss_sum(const Character& chr, std::optional<FFElt> beta = {});

/// Gauss periods G_j = sum over chi(x) = zeta_m^j of zeta_p^x, for a
/// nontrivial character on the prime field.  Each period has (p-1)/m terms;
/// sum of all periods is -1 and sum of zeta_m^j G_j is the Gauss sum.
std::vector<CycloInt> gauss_periods(const Character& chr);

/// A per-class tally of character values: the exact value of the sum is
/// sum_j counts[j] * zeta_m^j, with `zeros` terms contributing nothing.
struct ClassSum {
  long long m = 1;
  long long p = 0;
  std::vector<long long> counts;
  long long zeros = 0;

  CycloInt value() const;
  Eisenstein as_eisenstein() const;  // m == 3 only
};

/// A_s(alpha) = sum_{y in F_{p^s}} chi(y + alpha), the subfield at
/// `subfield_level` playing the role of F_{p^s}.
ClassSum a_sum(const Character& chr, const FFElt& alpha, int subfield_level);

/// B_{r,s}(alpha) = sum over (r-1)-tuples z_i from the subfield of
/// chi(1 + sum_i z_i alpha^i).
ClassSum b_sum(const Character& chr, const FFElt& alpha, int r, int subfield_level);

/// A = sum_{x in F_p} chi(x(x-1)) for a cubic character on a prime field.
Eisenstein jacobi_a(const Character& chr);

/// Per-class tally of chi(z^2 - d) over z in F_p.
ClassSum square_shift_classes(const Character& chr, const FFElt& d);

/// F(d, i) = sum over nonzero cubes y of the Legendre symbol of g^i y + d.
long long f_count(const FieldPtr& prime_field, std::uint32_t g_idx, std::uint32_t d_idx, int i);

}  // namespace gausscubic

#endif  // GAUSSCUBIC_GSUM_HPP_
