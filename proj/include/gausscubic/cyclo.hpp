#ifndef GAUSSCUBIC_CYCLO_HPP_
#define GAUSSCUBIC_CYCLO_HPP_

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gausscubic/bigint.hpp"
#include "gausscubic/errors.hpp"

namespace gausscubic {

/// Exact element of Z[zeta_m, zeta_p] for distinct primes m != p (m = 1 gives
/// plain Z[zeta_p]).  Coefficients are stored on the integral power basis
/// {zeta_m^a zeta_p^b : a < m-1, b < p-1}, which is unique per ring element,
/// so equality is coefficient comparison.  All coefficients are arbitrary
/// precision.
class CycloInt {
 public:
  CycloInt() : CycloInt(1, 2) {}
  CycloInt(int m, long long p);

  static CycloInt integer(int m, long long p, const BigInt& n);
  static CycloInt monomial(int m, long long p, int a, long long b, const BigInt& coeff = 1);
  /// Sum of grid[a*p + b] * zeta_m^a * zeta_p^b over the full exponent grid
  /// (a in [0, m), b in [0, p)), reduced to the canonical basis.
  static CycloInt from_exponent_grid(int m, long long p, const std::vector<BigInt>& grid);

  int root_order_m() const { return m_; }
  long long root_order_p() const { return p_; }
  int rows() const { return m_ == 1 ? 1 : m_ - 1; }
  long long cols() const { return p_ - 1; }
  const BigInt& coeff(int a, long long b) const { return c_[static_cast<std::size_t>(a) * static_cast<std::size_t>(cols()) + static_cast<std::size_t>(b)]; }

  bool is_zero() const;

  CycloInt conj() const;  // zeta_m -> zeta_m^-1, zeta_p -> zeta_p^-1
  std::optional<BigInt> as_rational() const;
  std::complex<double> to_complex() const;  // display/sanity only, never equality
  CycloInt pow(unsigned e) const;

  friend CycloInt operator+(const CycloInt& x, const CycloInt& y);
  friend CycloInt operator-(const CycloInt& x, const CycloInt& y);
  friend CycloInt operator-(const CycloInt& x);
  friend CycloInt operator*(const CycloInt& x, const CycloInt& y);
  friend CycloInt operator*(const BigInt& s, const CycloInt& x);
  friend bool operator==(const CycloInt& x, const CycloInt& y);
  friend bool operator!=(const CycloInt& x, const CycloInt& y) { return !(x == y); }

  nlohmann::json to_json() const;
  static CycloInt from_json(const nlohmann::json& j);
  std::string to_string() const;

 private:
  BigInt& at(int a, long long b) { return c_[static_cast<std::size_t>(a) * static_cast<std::size_t>(cols()) + static_cast<std::size_t>(b)]; }
  static void check_same_ring(const CycloInt& x, const CycloInt& y);

  int m_;
  long long p_;
  std::vector<BigInt> c_;  // rows() x cols(), row-major
};

/// Exact Eisenstein integer a + b*zeta_3.
struct Eisenstein {
  BigInt a;
  BigInt b;

  Eisenstein() : a(0), b(0) {}
  Eisenstein(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {}

  bool is_zero() const { return a == 0 && b == 0; }
  BigInt norm() const { return a * a - a * b + b * b; }
  Eisenstein conj() const { return Eisenstein(a - b, -b); }
  Eisenstein pow(unsigned e) const;

  friend Eisenstein operator+(const Eisenstein& x, const Eisenstein& y) {
    return Eisenstein(x.a + y.a, x.b + y.b);
  }
  friend Eisenstein operator-(const Eisenstein& x, const Eisenstein& y) {
    return Eisenstein(x.a - y.a, x.b - y.b);
  }
  friend Eisenstein operator-(const Eisenstein& x) { return Eisenstein(-x.a, -x.b); }
  friend Eisenstein operator*(const Eisenstein& x, const Eisenstein& y) {
    // zeta_3^2 = -1 - zeta_3
    return Eisenstein(x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b);
  }
  friend bool operator==(const Eisenstein& x, const Eisenstein& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const Eisenstein& x, const Eisenstein& y) { return !(x == y); }

  /// The six units +-1, +-zeta_3, +-(1 + zeta_3).
  static std::array<Eisenstein, 6> units();
  /// Twelve elements: the unit multiples of *this and of conj(*this).
  std::vector<Eisenstein> associates() const;

  nlohmann::json to_json() const;
  static Eisenstein from_json(const nlohmann::json& j);
  std::string to_string() const;
};

/// Ring embedding of Z[zeta_3] into Z[zeta_3, zeta_p].
CycloInt embed_eis(const Eisenstein& x, long long p);

/// If the value lies in the zeta_3 subring (m = 3, p-part absent), extract it.
std::optional<Eisenstein> eis_from_cyclo(const CycloInt& x);

}  // namespace gausscubic

#endif  // GAUSSCUBIC_CYCLO_HPP_
