#include "gausscubic/gsum.hpp"

#include <numeric>

#include "gausscubic/intmath.hpp"

namespace gausscubic {

GaussSumResult gauss_sum(const Character& chr, std::optional<FFElt> beta) {
  const FieldPtr& field = chr.field();
  const FieldHandle& f = *field;
  std::uint32_t beta_idx = 1;
  if (beta) {
    if (beta->field != field.get()) fail(Errc::invalid_params, "beta lives in a different field");
    beta_idx = beta->idx;
  }

  ClassTraceCounts counts = count_class_trace(f, chr, beta_idx);
  std::vector<BigInt> grid(counts.counts.begin(), counts.counts.end());
  CycloInt value = CycloInt::from_exponent_grid(static_cast<int>(counts.m), counts.p, grid);

  GaussSumResult out;
  out.rational = value.as_rational();
  out.value = std::move(value);
  out.params = {{"field", f.describe()},
                {"m", chr.order()},
                {"g", chr.generator() ? nlohmann::json(chr.generator()->idx) : nlohmann::json()},
                {"beta", beta_idx}};
  return out;
}

std::vector<CycloInt> gauss_periods(const Character& chr) {
  const FieldPtr& field = chr.field();
  if (field->level() != 0) fail(Errc::invalid_params, "periods are defined over the prime field");
  const long long m = chr.order();
  if (m < 2 || chr.is_trivial()) fail(Errc::invalid_params, "periods need a nontrivial character");
  const long long p = field->characteristic();

  std::vector<std::vector<BigInt>> grids(
      static_cast<std::size_t>(m),
      std::vector<BigInt>(static_cast<std::size_t>(m) * static_cast<std::size_t>(p), BigInt(0)));
  for (long long x = 1; x < p; ++x) {
    int cls = chr.raw_class(static_cast<std::uint32_t>(x));
    grids[static_cast<std::size_t>(cls)][static_cast<std::size_t>(x)] = 1;  // row a = 0
  }
  std::vector<CycloInt> periods;
  periods.reserve(static_cast<std::size_t>(m));
  for (auto& g : grids) {
    periods.push_back(CycloInt::from_exponent_grid(static_cast<int>(m), p, g));
  }
  return periods;
}

CycloInt ClassSum::value() const {
  std::vector<BigInt> grid(static_cast<std::size_t>(m) * static_cast<std::size_t>(p), BigInt(0));
  for (long long j = 0; j < m; ++j) {
    grid[static_cast<std::size_t>(j) * static_cast<std::size_t>(p)] = counts[static_cast<std::size_t>(j)];
  }
  return CycloInt::from_exponent_grid(static_cast<int>(m), p, grid);
}

Eisenstein ClassSum::as_eisenstein() const {
  if (m != 3) fail(Errc::invalid_params, "Eisenstein form needs a cubic class sum");
  return Eisenstein(BigInt(counts[0] - counts[2]), BigInt(counts[1] - counts[2]));
}

ClassSum a_sum(const Character& chr, const FFElt& alpha, int subfield_level) {
  const FieldHandle& f = *chr.field();
  if (alpha.field != &f) fail(Errc::invalid_params, "alpha lives in a different field");
  ClassCounts cc = count_shifted_classes(f, chr, alpha.idx, subfield_level);
  return ClassSum{cc.m, f.characteristic(), std::move(cc.counts), cc.zeros};
}

ClassSum b_sum(const Character& chr, const FFElt& alpha, int r, int subfield_level) {
  const FieldHandle& f = *chr.field();
  if (alpha.field != &f) fail(Errc::invalid_params, "alpha lives in a different field");
  if (r < 1) fail(Errc::invalid_params, "r must be >= 1");
  ClassCounts cc = count_tuple_classes(f, chr, alpha.idx, r, subfield_level);
  return ClassSum{cc.m, f.characteristic(), std::move(cc.counts), cc.zeros};
}

Eisenstein jacobi_a(const Character& chr) {
  const FieldHandle& f = *chr.field();
  if (f.level() != 0) fail(Errc::invalid_params, "A is a prime-field sum");
  if (chr.order() != 3) fail(Errc::invalid_params, "A needs a cubic character");
  const long long p = f.characteristic();
  long long counts[3] = {0, 0, 0};
  for (long long x = 0; x < p; ++x) {
    std::uint32_t arg = f.mul(static_cast<std::uint32_t>(x),
                              f.sub(static_cast<std::uint32_t>(x), 1));
    int cls = chr.raw_class(arg);
    if (cls >= 0) ++counts[cls];
  }
  return Eisenstein(BigInt(counts[0] - counts[2]), BigInt(counts[1] - counts[2]));
}

ClassSum square_shift_classes(const Character& chr, const FFElt& d) {
  const FieldHandle& f = *chr.field();
  if (d.field != &f) fail(Errc::invalid_params, "d lives in a different field");
  const long long m = chr.order();
  ClassSum out;
  out.m = m;
  out.p = f.characteristic();
  out.counts.assign(static_cast<std::size_t>(m), 0);
  for (std::uint64_t z = 0; z < f.element_count(); ++z) {
    std::uint32_t zz = static_cast<std::uint32_t>(z);
    std::uint32_t arg = f.sub(f.mul(zz, zz), d.idx);
    int cls = chr.raw_class(arg);
    if (cls < 0) ++out.zeros;
    else ++out.counts[static_cast<std::size_t>(cls)];
  }
  return out;
}

long long f_count(const FieldPtr& prime_field, std::uint32_t g_idx, std::uint32_t d_idx, int i) {
  const FieldHandle& f = *prime_field;
  if (f.level() != 0) fail(Errc::invalid_params, "F(d, i) is a prime-field sum");
  if (g_idx == 0 || f.order(g_idx) != f.element_count() - 1) {
    fail(Errc::invalid_params, "g must be a primitive element");
  }
  const std::uint64_t q1 = f.element_count() - 1;
  const std::uint64_t cube_gcd = std::gcd<std::uint64_t>(3, q1);
  std::uint32_t gi = f.pow(g_idx, static_cast<std::uint64_t>(i));
  long long total = 0;
  for (std::uint64_t k = 0; k < q1; ++k) {
    std::uint32_t y = f.exp_of(k);
    if (f.dlog(y) % cube_gcd != 0) continue;  // restrict to cubes
    std::uint32_t val = f.add(f.mul(gi, y), d_idx);
    if (val == 0) continue;
    total += (f.dlog(val) % 2 == 0) ? 1 : -1;  // Legendre symbol via dlog parity
  }
  return total;
}

}  // namespace gausscubic
