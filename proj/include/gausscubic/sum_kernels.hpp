#ifndef GAUSSCUBIC_SUM_KERNELS_HPP_
#define GAUSSCUBIC_SUM_KERNELS_HPP_

#include <cstdint>
#include <vector>

#include "gausscubic/chars.hpp"
#include "gausscubic/ffield.hpp"

namespace gausscubic {

// The exhaustive character sums reduce to integer bucket counting: every term
// is zeta_m^class * zeta_p^trace, so the hot loops only touch machine
// integers and the single conversion to ring elements happens afterwards.
// Each kernel comes in an OpenMP flavour and a plain serial reference used by
// the tests and the benchmark; the counts are order-independent, so both
// produce identical results.

/// counts[class * p + trace] over all nonzero y: class = chi(beta * y),
/// trace = Tr(beta * y) down to the prime field.
struct ClassTraceCounts {
  long long m = 1;
  long long p = 0;
  std::vector<long long> counts;  // m rows x p cols, row-major
};

ClassTraceCounts count_class_trace(const FieldHandle& f, const Character& chr,
                                   std::uint32_t beta_idx);
ClassTraceCounts count_class_trace_serial(const FieldHandle& f, const Character& chr,
                                          std::uint32_t beta_idx);

/// Per-class counts of chi(1 + sum_i z_i alpha^i) over all (r-1)-tuples
/// (z_1, ..., z_{r-1}) from the subfield at `subfield_level`.
struct ClassCounts {
  long long m = 1;
  std::vector<long long> counts;  // size m
  long long zeros = 0;            // terms where the argument hit 0
};

ClassCounts count_tuple_classes(const FieldHandle& f, const Character& chr,
                                std::uint32_t alpha_idx, int r, int subfield_level);
ClassCounts count_tuple_classes_serial(const FieldHandle& f, const Character& chr,
                                       std::uint32_t alpha_idx, int r, int subfield_level);

/// Per-class counts of chi(y + alpha) over y in the subfield at
/// `subfield_level` (small loop, serial only).
ClassCounts count_shifted_classes(const FieldHandle& f, const Character& chr,
                                  std::uint32_t alpha_idx, int subfield_level);

}  // namespace gausscubic

#endif  // GAUSSCUBIC_SUM_KERNELS_HPP_
