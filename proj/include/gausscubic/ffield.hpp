#ifndef GAUSSCUBIC_FFIELD_HPP_
#define GAUSSCUBIC_FFIELD_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "gausscubic/errors.hpp"

namespace gausscubic {

inline constexpr std::uint64_t kDefaultSizeCap = 1'000'000;

class FieldHandle;
using FieldPtr = std::shared_ptr<const FieldHandle>;

/// Extension of the field below by X^degree - beta (beta given as an element
/// index of the field below).
struct BinomialStep {
  int degree;
  std::uint32_t beta;
};

/// Extension of the field below by an explicit monic modulus, coefficients
/// constant-first (modulus.back() must be 1).  Only allowed as the first step.
struct ModulusStep {
  int degree;
  std::vector<std::uint32_t> modulus;
};

using StepSpec = std::variant<BinomialStep, ModulusStep>;

/// An element of a constructed field, held as its index in the fixed
/// lexicographic enumeration of coefficient vectors.  Index arithmetic lives
/// on FieldHandle; FFElt adds operator sugar for the common case.
struct FFElt {
  const FieldHandle* field = nullptr;
  std::uint32_t idx = 0;

  bool is_zero() const { return idx == 0; }
  friend bool operator==(const FFElt& a, const FFElt& b) {
    return a.field == b.field && a.idx == b.idx;
  }
};

FFElt operator+(const FFElt& a, const FFElt& b);
FFElt operator-(const FFElt& a, const FFElt& b);
FFElt operator-(const FFElt& a);
FFElt operator*(const FFElt& a, const FFElt& b);
FFElt operator/(const FFElt& a, const FFElt& b);

/// A finite field F_{p^n}: either the prime field F_p or an extension step on
/// top of another handle (a tower of at most two steps over the prime field).
/// Immutable after construction; the exp/log tables make multiplicative
/// queries O(1), so exhaustive sums touch only machine integers.
///
/// Elements are indexed by their coefficient vector read little-endian: an
/// element sum c_i * alpha^i over the subfield has index sum c_i * q_sub^i.
/// The subfield therefore occupies indices [0, q_sub) of every field above it.
class FieldHandle : public std::enable_shared_from_this<FieldHandle> {
 public:
  long long characteristic() const { return p_; }
  std::uint64_t element_count() const { return q_; }
  int total_degree() const { return n_; }          // degree over the prime field
  int level() const { return level_; }             // 0 for the prime field
  const FieldPtr& subfield() const { return sub_; }
  FieldPtr level_field(int level) const;           // handle of a lower (or this) level
  int step_degree() const { return step_degree_; }  // degree over the immediate subfield
  bool step_is_binomial() const { return step_is_binomial_; }
  std::uint32_t step_beta() const { return step_beta_; }
  /// Root of the defining polynomial of this step (alpha), as a top element.
  FFElt step_root() const;

  FFElt element(std::uint64_t idx) const { return FFElt{this, static_cast<std::uint32_t>(idx)}; }
  FFElt zero() const { return element(0); }
  FFElt one() const { return element(1); }
  FFElt from_integer(long long v) const;  // v mod p, embedded
  FFElt generator() const { return element(gen_); }

  // Index arithmetic.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t frobenius(std::uint32_t a, int times) const;  // a^(p^times)
  std::uint64_t dlog(std::uint32_t a) const;                  // a != 0
  std::uint32_t exp_of(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }
  std::uint64_t order(std::uint32_t a) const;
  std::uint32_t trace_to_prime(std::uint32_t a) const { return trace0_[a]; }
  bool is_mth_power(std::uint32_t a, long long m) const;  // a != 0

  FFElt trace(const FFElt& x, int down_to_level) const;
  FFElt norm(const FFElt& x, int down_to_level) const;
  /// dlog class mod m: index in [0, m), or nullopt for x = 0.
  std::optional<int> power_class(const FFElt& x, long long m) const;

  /// Embed an element of a lower level of this tower (index-preserving).
  FFElt embed(const FFElt& x) const;

  std::vector<std::uint32_t> digits(std::uint32_t a) const;        // over the immediate subfield
  std::vector<std::uint32_t> prime_digits(std::uint32_t a) const;  // over F_p
  std::string to_string(const FFElt& x) const;
  nlohmann::json describe() const;  // {p, steps: [...]}

  // Construction-time (table-free) arithmetic; also used by the
  // irreducibility tests, which run before this handle's own tables exist.
  std::uint32_t mul_generic(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow_generic(std::uint32_t a, std::uint64_t e) const;

  friend FieldPtr make_prime_field(long long p, std::uint64_t size_cap);
  friend FieldPtr extend_field(const FieldPtr& sub, const StepSpec& step, std::uint64_t size_cap);

 private:
  FieldHandle() = default;
  void build_tables();

  long long p_ = 0;
  std::uint64_t q_ = 0;
  int n_ = 1;
  int level_ = 0;
  FieldPtr sub_;
  int step_degree_ = 1;
  bool step_is_binomial_ = true;
  std::uint32_t step_beta_ = 0;
  std::vector<std::uint32_t> step_modulus_;  // constant-first, c_degree = 1
  std::uint32_t gen_ = 0;
  std::vector<std::uint32_t> exp_;     // g^k, k in [0, q-1)
  std::vector<std::uint32_t> log_;     // inverse of exp_ (log_[0] unused)
  std::vector<std::uint32_t> trace0_;  // absolute trace, values in [0, p)
  std::vector<std::pair<std::uint64_t, int>> group_factors_;  // factorization of q-1
};

FieldPtr make_prime_field(long long p, std::uint64_t size_cap = kDefaultSizeCap);
FieldPtr extend_field(const FieldPtr& sub, const StepSpec& step,
                      std::uint64_t size_cap = kDefaultSizeCap);

/// Builds F_p and applies the given extension steps in order.
FieldPtr make_field(long long p, const std::vector<StepSpec>& steps = {},
                    std::uint64_t size_cap = kDefaultSizeCap);

struct BinomialConstraints {
  bool must_be_cube = false;
  bool must_be_quadratic_nonresidue = false;
  bool must_be_noncube = false;
};

/// Smallest beta (in enumeration order) with X^r - beta irreducible over the
/// field and beta satisfying the constraints.  Throws NoSuchBinomial if the
/// search space is exhausted.
FFElt find_irreducible_binomial(const FieldPtr& field, int r,
                                const BinomialConstraints& constraints = {});

/// Smallest monic irreducible polynomial of degree r over the field, searched
/// in lexicographic order of the coefficient vector (constant first).
std::vector<std::uint32_t> find_irreducible_poly(const FieldPtr& field, int r);

/// Deterministic irreducibility test for a monic polynomial over the field
/// (gcd-with-Frobenius).  Coefficients constant-first, leading coefficient 1.
bool poly_is_irreducible(const FieldPtr& field, const std::vector<std::uint32_t>& poly);

/// The classical criterion for X^r - beta: every prime divisor of r divides
/// ord(beta) and not (q-1)/ord(beta); if 4 | r then 4 | q-1.
bool binomial_is_irreducible(const FieldPtr& field, int r, std::uint32_t beta);

}  // namespace gausscubic

#endif  // GAUSSCUBIC_FFIELD_HPP_
