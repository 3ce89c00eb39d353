#ifndef GAUSSCUBIC_CHARS_HPP_
#define GAUSSCUBIC_CHARS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "gausscubic/cyclo.hpp"
#include "gausscubic/ffield.hpp"

namespace gausscubic {

/// Value of a multiplicative character: Zero (at 0) or the class k with
/// chi(x) = zeta_m^k.
struct ChiValue {
  int k = -1;  // -1 encodes Zero

  bool is_zero() const { return k < 0; }
  int cls() const { return k; }
  static ChiValue zero() { return ChiValue{-1}; }
  static ChiValue root(int k) { return ChiValue{k}; }
  friend bool operator==(const ChiValue& a, const ChiValue& b) { return a.k == b.k; }
};

/// Table-driven multiplicative character of prime order m on a field (m = 1
/// is the principal character).  Built from a generator g via
/// chi(g^(h+mj)) = zeta_m^h; evaluation is a single table lookup.
class Character {
 public:
  /// g defaults to the field's deterministic generator; m = 1 needs none.
  static Character make(const FieldPtr& field, long long m, std::optional<FFElt> g = {});

  const FieldPtr& field() const { return field_; }
  long long order() const { return m_; }
  std::optional<FFElt> generator() const { return gen_; }

  ChiValue operator()(const FFElt& x) const;
  ChiValue eval_index(std::uint32_t idx) const {
    int k = table_[idx];
    return k < 0 ? ChiValue::zero() : ChiValue::root(k);
  }
  int raw_class(std::uint32_t idx) const { return table_[idx]; }  // -1 at zero

  bool is_principal() const { return m_ == 1; }
  /// True when every nonzero value has class 0 (includes principal).
  bool is_trivial() const;

  /// The character x -> chi(x) on a lower level of the field's tower.
  Character restrict_to(int level) const;
  Character conjugate() const;

  /// chi(x) as an Eisenstein integer (requires m = 3): 0, 1, zeta_3 or zeta_3^2.
  Eisenstein as_eisenstein(const FFElt& x) const;
  /// chi(x) as a monomial in Z[zeta_m, zeta_p].
  CycloInt as_cyclo(const FFElt& x) const;

 private:
  Character() = default;
  friend Character lift_by_norm(const Character& chr, const FieldPtr& target);

  FieldPtr field_;
  long long m_ = 1;
  std::optional<FFElt> gen_;
  std::vector<int> table_;  // class per element index, -1 at index 0
};

/// chi'(x) = chi(N(x)) on the target field, where N is the norm down to the
/// level of chi's field within the target's tower.
Character lift_by_norm(const Character& chr, const FieldPtr& target);

}  // namespace gausscubic

#endif  // GAUSSCUBIC_CHARS_HPP_
