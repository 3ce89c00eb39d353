#include "gausscubic/chars.hpp"

#include <cassert>

#include "gausscubic/intmath.hpp"

namespace gausscubic {

Character Character::make(const FieldPtr& field, long long m, std::optional<FFElt> g) {
  if (!field) fail(Errc::invalid_params, "null field");
  Character chr;
  chr.field_ = field;
  chr.m_ = m;
  const std::uint64_t q = field->element_count();
  chr.table_.assign(q, 0);
  chr.table_[0] = -1;
  if (m == 1) return chr;

  if (m < 2 || !is_prime(static_cast<std::uint64_t>(m))) {
    fail(Errc::invalid_params, "character order must be 1 or a prime");
  }
  if ((q - 1) % static_cast<std::uint64_t>(m) != 0) {
    fail(Errc::order_not_dividing,
         "order " + std::to_string(m) + " does not divide " + std::to_string(q - 1));
  }
  FFElt gen = g.value_or(field->generator());
  if (gen.field != field.get() || gen.is_zero() || field->order(gen.idx) != q - 1) {
    fail(Errc::invalid_params, "supplied g is not a generator of the multiplicative group");
  }
  chr.gen_ = gen;

  // chi(g^k) = zeta_m^(k mod m); walk the powers of g once.
  const std::uint64_t e = field->dlog(gen.idx);
  std::uint64_t acc = 0;
  for (std::uint64_t k = 0; k + 1 < q; ++k) {
    chr.table_[field->exp_of(acc)] = static_cast<int>(k % static_cast<std::uint64_t>(m));
    acc += e;
    if (acc >= q - 1) acc -= q - 1;
  }
  return chr;
}

ChiValue Character::operator()(const FFElt& x) const {
  if (x.field != field_.get()) fail(Errc::invalid_params, "element of a different field");
  return eval_index(x.idx);
}

bool Character::is_trivial() const {
  for (std::size_t i = 1; i < table_.size(); ++i) {
    if (table_[i] != 0) return false;
  }
  return true;
}

Character Character::restrict_to(int level) const {
  FieldPtr sub = field_->level_field(level);
  Character chr;
  chr.field_ = sub;
  chr.m_ = m_;
  chr.table_.assign(table_.begin(),
                    table_.begin() + static_cast<std::ptrdiff_t>(sub->element_count()));
  return chr;  // subfield indices embed identically, so the prefix is the restriction
}

Character Character::conjugate() const {
  Character chr = *this;
  if (m_ == 1) return chr;
  for (auto& k : chr.table_) {
    if (k > 0) k = static_cast<int>(m_) - k;
  }
  return chr;
}

Eisenstein Character::as_eisenstein(const FFElt& x) const {
  if (m_ != 3) fail(Errc::invalid_params, "Eisenstein values need a cubic character");
  switch ((*this)(x).k) {
    case 0: return Eisenstein(1, 0);
    case 1: return Eisenstein(0, 1);
    case 2: return Eisenstein(-1, -1);
    default: return Eisenstein(0, 0);
  }
}

CycloInt Character::as_cyclo(const FFElt& x) const {
  const long long p = field_->characteristic();
  ChiValue v = (*this)(x);
  if (v.is_zero()) return CycloInt(static_cast<int>(m_), p);
  return CycloInt::monomial(static_cast<int>(m_), p, v.cls(), 0);
}

Character lift_by_norm(const Character& chr, const FieldPtr& target) {
  if (!target) fail(Errc::invalid_params, "null target field");
  const FieldPtr& base = chr.field();
  int level = -1;
  for (int l = 0; l <= target->level(); ++l) {
    if (target->level_field(l).get() == base.get()) {
      level = l;
      break;
    }
  }
  if (level < 0) fail(Errc::invalid_params, "lift_by_norm: chi's field is not in the target tower");

  Character lifted;
  lifted.field_ = target;
  lifted.m_ = chr.order();
  lifted.table_.assign(target->element_count(), -1);
  for (std::uint64_t i = 1; i < target->element_count(); ++i) {
    FFElt n = target->norm(target->element(i), level);
    lifted.table_[i] = chr.raw_class(n.idx);
  }
  return lifted;
}

}  // namespace gausscubic
