#include "gausscubic/cyclo.hpp"

#include <cmath>
#include <sstream>

#include "gausscubic/intmath.hpp"

namespace gausscubic {

namespace {
void check_ring_params(int m, long long p) {
  if (!(m == 1 || is_prime(static_cast<std::uint64_t>(m)))) {
    fail(Errc::invalid_params, "root order m must be 1 or prime");
  }
  if (!is_prime(static_cast<std::uint64_t>(p))) {
    fail(Errc::invalid_params, "root order p must be prime");
  }
  if (m == static_cast<int>(p)) {
    fail(Errc::invalid_params, "root orders m and p must be distinct");
  }
}
}  // namespace

CycloInt::CycloInt(int m, long long p) : m_(m), p_(p) {
  check_ring_params(m, p);
  c_.assign(static_cast<std::size_t>(rows()) * static_cast<std::size_t>(cols()), BigInt(0));
}

void CycloInt::check_same_ring(const CycloInt& x, const CycloInt& y) {
  if (x.m_ != y.m_ || x.p_ != y.p_) {
    fail(Errc::mixed_rings, "operands live in different cyclotomic rings");
  }
}

CycloInt CycloInt::integer(int m, long long p, const BigInt& n) {
  CycloInt x(m, p);
  x.at(0, 0) = n;
  return x;
}

CycloInt CycloInt::monomial(int m, long long p, int a, long long b, const BigInt& coeff) {
  const int mm = m == 1 ? 1 : m;
  a %= mm;
  if (a < 0) a += mm;
  b %= p;
  if (b < 0) b += p;
  std::vector<BigInt> grid(static_cast<std::size_t>(mm) * static_cast<std::size_t>(p), BigInt(0));
  grid[static_cast<std::size_t>(a) * static_cast<std::size_t>(p) + static_cast<std::size_t>(b)] =
      coeff;
  return from_exponent_grid(m, p, grid);
}

CycloInt CycloInt::from_exponent_grid(int m, long long p, const std::vector<BigInt>& grid) {
  CycloInt x(m, p);
  const int mm = m == 1 ? 1 : m;
  if (grid.size() != static_cast<std::size_t>(mm) * static_cast<std::size_t>(p)) {
    fail(Errc::invalid_params, "exponent grid has wrong shape");
  }
  auto g = [&](int a, long long b) -> const BigInt& {
    return grid[static_cast<std::size_t>(a) * static_cast<std::size_t>(p) +
                static_cast<std::size_t>(b)];
  };
  // zeta_m^(m-1) = -(1 + zeta_m + ... + zeta_m^(m-2)), same for zeta_p:
  // canonical coefficient picks up the two full-row corrections and the
  // corner term they share.
  if (m == 1) {
    for (long long b = 0; b + 1 < p; ++b) x.at(0, b) = g(0, b) - g(0, p - 1);
    return x;
  }
  for (int a = 0; a + 1 < m; ++a) {
    for (long long b = 0; b + 1 < p; ++b) {
      x.at(a, b) = g(a, b) - g(m - 1, b) - g(a, p - 1) + g(m - 1, p - 1);
    }
  }
  return x;
}

bool CycloInt::is_zero() const {
  for (const auto& v : c_) {
    if (v != 0) return false;
  }
  return true;
}

CycloInt CycloInt::conj() const {
  const int mm = m_ == 1 ? 1 : m_;
  std::vector<BigInt> grid(static_cast<std::size_t>(mm) * static_cast<std::size_t>(p_), BigInt(0));
  for (int a = 0; a < rows(); ++a) {
    for (long long b = 0; b < cols(); ++b) {
      const BigInt& v = coeff(a, b);
      if (v == 0) continue;
      int na = (mm - a) % mm;
      long long nb = (p_ - b) % p_;
      grid[static_cast<std::size_t>(na) * static_cast<std::size_t>(p_) +
           static_cast<std::size_t>(nb)] += v;
    }
  }
  return from_exponent_grid(m_, p_, grid);
}

std::optional<BigInt> CycloInt::as_rational() const {
  for (int a = 0; a < rows(); ++a) {
    for (long long b = 0; b < cols(); ++b) {
      if (a == 0 && b == 0) continue;
      if (coeff(a, b) != 0) return std::nullopt;
    }
  }
  return coeff(0, 0);
}

std::complex<double> CycloInt::to_complex() const {
  constexpr double tau = 6.283185307179586476925286766559;
  std::complex<double> out(0.0, 0.0);
  for (int a = 0; a < rows(); ++a) {
    for (long long b = 0; b < cols(); ++b) {
      const BigInt& v = coeff(a, b);
      if (v == 0) continue;
      double ang = tau * (static_cast<double>(a) / m_ + static_cast<double>(b) / p_);
      out += static_cast<double>(v) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
  }
  return out;
}

CycloInt CycloInt::pow(unsigned e) const {
  CycloInt result = integer(m_, p_, 1);
  CycloInt base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

CycloInt operator+(const CycloInt& x, const CycloInt& y) {
  CycloInt::check_same_ring(x, y);
  CycloInt out = x;
  for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += y.c_[i];
  return out;
}

CycloInt operator-(const CycloInt& x, const CycloInt& y) {
  CycloInt::check_same_ring(x, y);
  CycloInt out = x;
  for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] -= y.c_[i];
  return out;
}

CycloInt operator-(const CycloInt& x) {
  CycloInt out = x;
  for (auto& v : out.c_) v = -v;
  return out;
}

CycloInt operator*(const CycloInt& x, const CycloInt& y) {
  CycloInt::check_same_ring(x, y);
  const int mm = x.m_ == 1 ? 1 : x.m_;
  const long long p = x.p_;
  std::vector<BigInt> grid(static_cast<std::size_t>(mm) * static_cast<std::size_t>(p), BigInt(0));
  for (int a1 = 0; a1 < x.rows(); ++a1) {
    for (long long b1 = 0; b1 < x.cols(); ++b1) {
      const BigInt& v1 = x.coeff(a1, b1);
      if (v1 == 0) continue;
      for (int a2 = 0; a2 < y.rows(); ++a2) {
        for (long long b2 = 0; b2 < y.cols(); ++b2) {
          const BigInt& v2 = y.coeff(a2, b2);
          if (v2 == 0) continue;
          int a = a1 + a2;
          if (a >= mm) a -= mm;
          long long b = b1 + b2;
          if (b >= p) b -= p;
          grid[static_cast<std::size_t>(a) * static_cast<std::size_t>(p) +
               static_cast<std::size_t>(b)] += v1 * v2;
        }
      }
    }
  }
  return CycloInt::from_exponent_grid(x.m_, p, grid);
}

CycloInt operator*(const BigInt& s, const CycloInt& x) {
  CycloInt out = x;
  for (auto& v : out.c_) v *= s;
  return out;
}

bool operator==(const CycloInt& x, const CycloInt& y) {
  CycloInt::check_same_ring(x, y);
  return x.c_ == y.c_;
}

nlohmann::json CycloInt::to_json() const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (int a = 0; a < rows(); ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (long long b = 0; b < cols(); ++b) row.push_back(to_decimal(coeff(a, b)));
    rows_json.push_back(std::move(row));
  }
  return {{"m", m_}, {"p", p_}, {"coeffs", rows_json}};
}

CycloInt CycloInt::from_json(const nlohmann::json& j) {
  CycloInt x(j.at("m").get<int>(), j.at("p").get<long long>());
  const auto& rows_json = j.at("coeffs");
  if (rows_json.size() != static_cast<std::size_t>(x.rows())) {
    fail(Errc::invalid_params, "coeff matrix has wrong row count");
  }
  for (int a = 0; a < x.rows(); ++a) {
    const auto& row = rows_json.at(static_cast<std::size_t>(a));
    if (row.size() != static_cast<std::size_t>(x.cols())) {
      fail(Errc::invalid_params, "coeff matrix has wrong column count");
    }
    for (long long b = 0; b < x.cols(); ++b) {
      x.at(a, b) = bigint_from_decimal(row.at(static_cast<std::size_t>(b)).get<std::string>());
    }
  }
  return x;
}

std::string CycloInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int a = 0; a < rows(); ++a) {
    for (long long b = 0; b < cols(); ++b) {
      const BigInt& v = coeff(a, b);
      if (v == 0) continue;
      if (!first) os << (v > 0 ? " + " : " - ");
      else if (v < 0) os << "-";
      first = false;
      BigInt av = abs(v);
      bool unit_term = (a == 0 && b == 0);
      if (av != 1 || unit_term) os << av.str();
      if (a > 0) {
        os << "z" << m_;
        if (a > 1) os << "^" << a;
      }
      if (b > 0) {
        os << "z" << p_;
        if (b > 1) os << "^" << b;
      }
    }
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------------------
// Eisenstein
// ---------------------------------------------------------------------------

Eisenstein Eisenstein::pow(unsigned e) const {
  Eisenstein result(1, 0);
  Eisenstein base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::array<Eisenstein, 6> Eisenstein::units() {
  return {Eisenstein(1, 0),  Eisenstein(-1, 0), Eisenstein(0, 1),
          Eisenstein(0, -1), Eisenstein(1, 1),  Eisenstein(-1, -1)};
}

std::vector<Eisenstein> Eisenstein::associates() const {
  std::vector<Eisenstein> out;
  out.reserve(12);
  Eisenstein cj = conj();
  for (const auto& u : units()) out.push_back(u * (*this));
  for (const auto& u : units()) out.push_back(u * cj);
  return out;
}

nlohmann::json Eisenstein::to_json() const {
  return {{"a", to_decimal(a)}, {"b", to_decimal(b)}};
}

Eisenstein Eisenstein::from_json(const nlohmann::json& j) {
  return Eisenstein(bigint_from_decimal(j.at("a").get<std::string>()),
                    bigint_from_decimal(j.at("b").get<std::string>()));
}

std::string Eisenstein::to_string() const {
  std::ostringstream os;
  os << a.str();
  if (b >= 0) os << " + " << b.str() << "w";
  else os << " - " << BigInt(-b).str() << "w";
  return os.str();
}

CycloInt embed_eis(const Eisenstein& x, long long p) {
  CycloInt out = CycloInt::integer(3, p, x.a);
  return out + CycloInt::monomial(3, p, 1, 0, x.b);
}

std::optional<Eisenstein> eis_from_cyclo(const CycloInt& x) {
  if (x.root_order_m() != 3) return std::nullopt;
  for (int a = 0; a < x.rows(); ++a) {
    for (long long b = 1; b < x.cols(); ++b) {
      if (x.coeff(a, b) != 0) return std::nullopt;
    }
  }
  return Eisenstein(x.coeff(0, 0), x.coeff(1, 0));
}

}  // namespace gausscubic
