#include "gausscubic/sum_kernels.hpp"

#include <omp.h>

namespace gausscubic {

namespace {
// below this many loop iterations the OpenMP fork costs more than it saves
constexpr std::uint64_t kParallelCutoff = 1 << 15;
}  // namespace

ClassTraceCounts count_class_trace_serial(const FieldHandle& f, const Character& chr,
                                          std::uint32_t beta_idx) {
  const std::uint64_t q = f.element_count();
  const long long p = f.characteristic();
  const long long m = chr.order();
  ClassTraceCounts out;
  out.m = m;
  out.p = p;
  out.counts.assign(static_cast<std::size_t>(m * p), 0);
  if (beta_idx == 0) {
    // Tr(0 * y) = 0 for all y; each class piles up at trace 0
    for (std::uint64_t i = 1; i < q; ++i) {
      int cls = chr.raw_class(static_cast<std::uint32_t>(i));
      if (cls >= 0) ++out.counts[static_cast<std::size_t>(cls) * static_cast<std::size_t>(p)];
    }
    return out;
  }
  const std::uint64_t lb = f.dlog(beta_idx);
  const std::uint64_t q1 = q - 1;
  for (std::uint64_t k = 0; k < q1; ++k) {
    std::uint32_t y = f.exp_of(k);
    int cls = chr.raw_class(y);
    std::uint64_t kk = k + lb;
    if (kk >= q1) kk -= q1;
    std::uint32_t t = f.trace_to_prime(f.exp_of(kk));
    ++out.counts[static_cast<std::size_t>(cls) * static_cast<std::size_t>(p) + t];
  }
  return out;
}

ClassTraceCounts count_class_trace(const FieldHandle& f, const Character& chr,
                                   std::uint32_t beta_idx) {
  const std::uint64_t q = f.element_count();
  if (q < kParallelCutoff || beta_idx == 0) return count_class_trace_serial(f, chr, beta_idx);

  const long long p = f.characteristic();
  const long long m = chr.order();
  ClassTraceCounts out;
  out.m = m;
  out.p = p;
  const std::size_t cells = static_cast<std::size_t>(m * p);
  out.counts.assign(cells, 0);
  const std::uint64_t lb = f.dlog(beta_idx);
  const std::uint64_t q1 = q - 1;

#pragma omp parallel
  {
    std::vector<long long> local(cells, 0);
#pragma omp for schedule(static) nowait
    for (long long k = 0; k < static_cast<long long>(q1); ++k) {
      std::uint32_t y = f.exp_of(static_cast<std::uint64_t>(k));
      int cls = chr.raw_class(y);
      std::uint64_t kk = static_cast<std::uint64_t>(k) + lb;
      if (kk >= q1) kk -= q1;
      std::uint32_t t = f.trace_to_prime(f.exp_of(kk));
      ++local[static_cast<std::size_t>(cls) * static_cast<std::size_t>(p) + t];
    }
#pragma omp critical
    for (std::size_t i = 0; i < cells; ++i) out.counts[i] += local[i];
  }
  return out;
}

namespace {

// powers alpha^0 .. alpha^(r-1) and the tuple-space size qs^(r-1)
struct TupleSpace {
  std::vector<std::uint32_t> apow;
  std::uint64_t qs = 1;
  std::uint64_t total = 1;
};

TupleSpace tuple_space(const FieldHandle& f, std::uint32_t alpha_idx, int r, int subfield_level) {
  TupleSpace ts;
  ts.qs = f.level_field(subfield_level)->element_count();
  ts.apow.assign(static_cast<std::size_t>(r), 1);
  for (int i = 1; i < r; ++i) {
    ts.apow[static_cast<std::size_t>(i)] = f.mul(ts.apow[static_cast<std::size_t>(i - 1)], alpha_idx);
    ts.total *= ts.qs;
  }
  return ts;
}

// 1 + sum_i z_i alpha^i for the tuple encoded in t (base qs digits)
inline std::uint32_t tuple_argument(const FieldHandle& f, const TupleSpace& ts, std::uint64_t t,
                                    int r) {
  std::uint32_t acc = 1;
  for (int i = 1; i < r; ++i) {
    std::uint32_t z = static_cast<std::uint32_t>(t % ts.qs);
    t /= ts.qs;
    if (z) acc = f.add(acc, f.mul(z, ts.apow[static_cast<std::size_t>(i)]));
  }
  return acc;
}

}  // namespace

ClassCounts count_tuple_classes_serial(const FieldHandle& f, const Character& chr,
                                       std::uint32_t alpha_idx, int r, int subfield_level) {
  const long long m = chr.order();
  ClassCounts out;
  out.m = m;
  out.counts.assign(static_cast<std::size_t>(m), 0);
  TupleSpace ts = tuple_space(f, alpha_idx, r, subfield_level);
  for (std::uint64_t t = 0; t < ts.total; ++t) {
    int cls = chr.raw_class(tuple_argument(f, ts, t, r));
    if (cls < 0) ++out.zeros;
    else ++out.counts[static_cast<std::size_t>(cls)];
  }
  return out;
}

ClassCounts count_tuple_classes(const FieldHandle& f, const Character& chr,
                                std::uint32_t alpha_idx, int r, int subfield_level) {
  TupleSpace ts = tuple_space(f, alpha_idx, r, subfield_level);
  if (ts.total < kParallelCutoff) return count_tuple_classes_serial(f, chr, alpha_idx, r, subfield_level);

  const long long m = chr.order();
  ClassCounts out;
  out.m = m;
  out.counts.assign(static_cast<std::size_t>(m), 0);
#pragma omp parallel
  {
    std::vector<long long> local(static_cast<std::size_t>(m), 0);
    long long local_zeros = 0;
#pragma omp for schedule(static) nowait
    for (long long t = 0; t < static_cast<long long>(ts.total); ++t) {
      int cls = chr.raw_class(tuple_argument(f, ts, static_cast<std::uint64_t>(t), r));
      if (cls < 0) ++local_zeros;
      else ++local[static_cast<std::size_t>(cls)];
    }
#pragma omp critical
    {
      for (std::size_t i = 0; i < local.size(); ++i) out.counts[i] += local[i];
      out.zeros += local_zeros;
    }
  }
  return out;
}

ClassCounts count_shifted_classes(const FieldHandle& f, const Character& chr,
                                  std::uint32_t alpha_idx, int subfield_level) {
  const long long m = chr.order();
  ClassCounts out;
  out.m = m;
  out.counts.assign(static_cast<std::size_t>(m), 0);
  const std::uint64_t qs = f.level_field(subfield_level)->element_count();
  for (std::uint64_t y = 0; y < qs; ++y) {
    std::uint32_t x = f.add(static_cast<std::uint32_t>(y), alpha_idx);
    int cls = chr.raw_class(x);
    if (cls < 0) ++out.zeros;
    else ++out.counts[static_cast<std::size_t>(cls)];
  }
  return out;
}

}  // namespace gausscubic
