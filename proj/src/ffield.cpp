#include "gausscubic/ffield.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "gausscubic/intmath.hpp"

namespace gausscubic {

namespace {

// ---------------------------------------------------------------------------
// Polynomial arithmetic over a finished FieldHandle.  Polynomials are vectors
// of element indices, constant coefficient first.  Used only by the
// irreducibility tests, so clarity beats speed here.
// ---------------------------------------------------------------------------

using Poly = std::vector<std::uint32_t>;

Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mod(const FieldHandle& f, Poly a, const Poly& mod) {
  // mod is monic
  const int r = static_cast<int>(mod.size()) - 1;
  for (int d = static_cast<int>(a.size()) - 1; d >= r; --d) {
    std::uint32_t c = a[d];
    if (c == 0) continue;
    a[d] = 0;
    for (int i = 0; i < r; ++i) {
      a[d - r + i] = f.sub(a[d - r + i], f.mul(c, mod[i]));
    }
  }
  a.resize(r);
  return a;
}

Poly poly_mulmod(const FieldHandle& f, const Poly& a, const Poly& b, const Poly& mod) {
  Poly prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
    }
  }
  return poly_mod(f, std::move(prod), mod);
}

Poly poly_powmod(const FieldHandle& f, Poly base, std::uint64_t e, const Poly& mod) {
  Poly result(mod.size() - 1, 0);
  result[0] = 1;
  while (e) {
    if (e & 1) result = poly_mulmod(f, result, base, mod);
    base = poly_mulmod(f, base, base, mod);
    e >>= 1;
  }
  return result;
}

Poly poly_monic(const FieldHandle& f, Poly a) {
  a = poly_trim(std::move(a));
  if (a.empty()) return a;
  std::uint32_t lead = a.back();
  if (lead != 1) {
    std::uint32_t li = f.inv(lead);
    for (auto& c : a) c = f.mul(c, li);
  }
  return a;
}

Poly poly_gcd(const FieldHandle& f, Poly a, Poly b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    Poly m = poly_monic(f, b);
    Poly r = poly_trim(poly_mod(f, std::move(a), m));
    a = std::move(m);
    b = std::move(r);
  }
  return a;
}

std::uint64_t checked_pow_u64(std::uint64_t base, int e) {
  unsigned __int128 q = 1;
  for (int i = 0; i < e; ++i) {
    q *= base;
    if (q > (static_cast<unsigned __int128>(1) << 62)) {
      fail(Errc::field_too_large, "requested field order exceeds 2^62");
    }
  }
  return static_cast<std::uint64_t>(q);
}

}  // namespace

bool poly_is_irreducible(const FieldPtr& field, const std::vector<std::uint32_t>& poly) {
  const FieldHandle& f = *field;
  Poly mod = poly;
  if (mod.empty() || mod.back() != 1) {
    fail(Errc::invalid_params, "poly_is_irreducible: modulus must be monic");
  }
  const int r = static_cast<int>(mod.size()) - 1;
  if (r < 1) return false;
  if (r == 1) return true;
  const std::uint64_t q = f.element_count();

  // t_j = X^(q^j) mod poly; the poly is irreducible iff t_r = X and
  // gcd(t_{r/l} - X, poly) = 1 for every prime l | r.
  std::vector<std::uint64_t> prime_divs;
  for (auto [pr, e] : factorize(static_cast<std::uint64_t>(r))) prime_divs.push_back(pr);

  Poly x(r, 0);
  if (r == 1) x.resize(1);
  x[1 % r] = 1;  // r >= 2 here
  Poly t = x;
  for (int j = 1; j <= r; ++j) {
    t = poly_powmod(f, t, q, mod);
    for (std::uint64_t l : prime_divs) {
      if (static_cast<std::uint64_t>(r) / l == static_cast<std::uint64_t>(j)) {
        Poly diff = t;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = f.sub(diff[1], 1);
        Poly g = poly_gcd(f, diff, mod);
        if (!(g.size() == 1)) return false;  // gcd must be a unit
      }
    }
  }
  Poly diff = t;
  diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
  diff[1] = f.sub(diff[1], 1);
  return poly_trim(std::move(diff)).empty();
}

bool binomial_is_irreducible(const FieldPtr& field, int r, std::uint32_t beta) {
  const FieldHandle& f = *field;
  if (r < 2 || beta == 0) return false;
  const std::uint64_t q1 = f.element_count() - 1;
  const std::uint64_t e = f.order(beta);
  for (auto [l, mult] : factorize(static_cast<std::uint64_t>(r))) {
    if (e % l != 0) return false;
    if ((q1 / e) % l == 0) return false;
  }
  if (r % 4 == 0 && q1 % 4 != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// FieldHandle
// ---------------------------------------------------------------------------

FieldPtr FieldHandle::level_field(int level) const {
  if (level < 0 || level > level_) fail(Errc::invalid_params, "level out of range");
  if (level == level_) return shared_from_this();
  FieldPtr f = sub_;
  while (f->level_ != level) f = f->sub_;
  return f;
}

FFElt FieldHandle::step_root() const {
  if (level_ == 0) fail(Errc::invalid_params, "prime field has no step root");
  return element(sub_->q_);  // digits (0, 1) over the immediate subfield
}

FFElt FieldHandle::from_integer(long long v) const {
  long long m = v % p_;
  if (m < 0) m += p_;
  return element(static_cast<std::uint64_t>(m));
}

std::uint32_t FieldHandle::add(std::uint32_t a, std::uint32_t b) const {
  if (level_ == 0) {
    std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    if (s >= static_cast<std::uint64_t>(p_)) s -= p_;
    return static_cast<std::uint32_t>(s);
  }
  // addition is coefficientwise mod p on the base-p digits of the index
  std::uint64_t x = a, y = b, out = 0, w = 1;
  for (int k = 0; k < n_; ++k) {
    std::uint64_t d = x % p_ + y % p_;
    if (d >= static_cast<std::uint64_t>(p_)) d -= p_;
    out += w * d;
    x /= p_;
    y /= p_;
    w *= p_;
  }
  return static_cast<std::uint32_t>(out);
}

std::uint32_t FieldHandle::neg(std::uint32_t a) const {
  if (level_ == 0) return a == 0 ? 0 : static_cast<std::uint32_t>(p_ - a);
  std::uint64_t x = a, out = 0, w = 1;
  for (int k = 0; k < n_; ++k) {
    std::uint64_t d = x % p_;
    out += w * (d == 0 ? 0 : p_ - d);
    x /= p_;
    w *= p_;
  }
  return static_cast<std::uint32_t>(out);
}

std::uint32_t FieldHandle::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  std::uint64_t k = log_[a] + static_cast<std::uint64_t>(log_[b]);
  if (k >= q_ - 1) k -= q_ - 1;
  return exp_[k];
}

std::uint32_t FieldHandle::inv(std::uint32_t a) const {
  if (a == 0) fail(Errc::invalid_params, "division by zero");
  std::uint64_t k = log_[a];
  return exp_[k == 0 ? 0 : q_ - 1 - k];
}

std::uint32_t FieldHandle::pow(std::uint32_t a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  std::uint64_t k = (log_[a] * (e % (q_ - 1))) % (q_ - 1);
  return exp_[k];
}

std::uint32_t FieldHandle::frobenius(std::uint32_t a, int times) const {
  if (a == 0) return 0;
  times %= n_;
  if (times < 0) times += n_;
  std::uint64_t pe = 1;
  for (int i = 0; i < times; ++i) pe *= static_cast<std::uint64_t>(p_);
  return exp_[(log_[a] * (pe % (q_ - 1))) % (q_ - 1)];
}

std::uint64_t FieldHandle::dlog(std::uint32_t a) const {
  if (a == 0) fail(Errc::invalid_params, "dlog of zero");
  return log_[a];
}

std::uint64_t FieldHandle::order(std::uint32_t a) const {
  if (a == 0) fail(Errc::invalid_params, "order of zero");
  std::uint64_t o = q_ - 1;
  for (auto [l, mult] : group_factors_) {
    while (o % l == 0 && pow(a, o / l) == 1) o /= l;
  }
  return o;
}

bool FieldHandle::is_mth_power(std::uint32_t a, long long m) const {
  std::uint64_t d = std::gcd(static_cast<std::uint64_t>(m), q_ - 1);
  return dlog(a) % d == 0;
}

FFElt FieldHandle::trace(const FFElt& x, int down_to_level) const {
  if (x.field != this) fail(Errc::invalid_params, "trace: element of a different field");
  FieldPtr target = level_field(down_to_level);
  const int d = target->total_degree();
  const int reps = n_ / d;
  std::uint32_t acc = 0;
  for (int j = 0; j < reps; ++j) acc = add(acc, frobenius(x.idx, d * j));
  assert(acc < target->element_count());
  return FFElt{target.get(), acc};
}

FFElt FieldHandle::norm(const FFElt& x, int down_to_level) const {
  if (x.field != this) fail(Errc::invalid_params, "norm: element of a different field");
  FieldPtr target = level_field(down_to_level);
  if (x.idx == 0) return FFElt{target.get(), 0};
  const int d = target->total_degree();
  const int reps = n_ / d;
  std::uint32_t acc = 1;
  for (int j = 0; j < reps; ++j) acc = mul(acc, frobenius(x.idx, d * j));
  assert(acc < target->element_count());
  return FFElt{target.get(), acc};
}

std::optional<int> FieldHandle::power_class(const FFElt& x, long long m) const {
  if (x.field != this) fail(Errc::invalid_params, "power_class: element of a different field");
  if (x.idx == 0) return std::nullopt;
  return static_cast<int>(dlog(x.idx) % static_cast<std::uint64_t>(m));
}

FFElt FieldHandle::embed(const FFElt& x) const {
  const FieldHandle* f = x.field;
  if (f == this) return FFElt{this, x.idx};
  for (FieldPtr s = sub_; s; s = s->subfield()) {
    if (s.get() == f) return FFElt{this, x.idx};  // subfields are index prefixes
  }
  fail(Errc::invalid_params, "embed: element does not belong to this tower");
}

std::vector<std::uint32_t> FieldHandle::digits(std::uint32_t a) const {
  if (level_ == 0) return {a};
  std::vector<std::uint32_t> out(static_cast<std::size_t>(step_degree_));
  std::uint64_t x = a;
  const std::uint64_t qs = sub_->q_;
  for (int i = 0; i < step_degree_; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(x % qs);
    x /= qs;
  }
  return out;
}

std::vector<std::uint32_t> FieldHandle::prime_digits(std::uint32_t a) const {
  std::vector<std::uint32_t> out(static_cast<std::size_t>(n_));
  std::uint64_t x = a;
  for (int i = 0; i < n_; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(x % p_);
    x /= p_;
  }
  return out;
}

std::string FieldHandle::to_string(const FFElt& x) const {
  if (level_ == 0) return std::to_string(x.idx);
  std::ostringstream os;
  os << '[';
  auto ds = digits(x.idx);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i) os << ',';
    os << sub_->to_string(FFElt{sub_.get(), ds[i]});
  }
  os << ']';
  return os.str();
}

nlohmann::json FieldHandle::describe() const {
  nlohmann::json steps = nlohmann::json::array();
  std::vector<const FieldHandle*> chain;
  for (const FieldHandle* f = this; f->level_ > 0; f = f->sub_.get()) chain.push_back(f);
  std::reverse(chain.begin(), chain.end());
  for (const FieldHandle* f : chain) {
    if (f->step_is_binomial_) {
      steps.push_back({{"degree", f->step_degree_}, {"beta", f->step_beta_}});
    } else {
      steps.push_back({{"degree", f->step_degree_}, {"modulus", f->step_modulus_}});
    }
  }
  return {{"p", p_}, {"steps", steps}};
}

std::uint32_t FieldHandle::mul_generic(std::uint32_t a, std::uint32_t b) const {
  if (level_ == 0) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b %
                                      static_cast<std::uint64_t>(p_));
  }
  const int r = step_degree_;
  auto da = digits(a);
  auto db = digits(b);
  std::vector<std::uint32_t> prod(static_cast<std::size_t>(2 * r - 1), 0);
  for (int i = 0; i < r; ++i) {
    if (da[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < r; ++j) {
      if (db[static_cast<std::size_t>(j)] == 0) continue;
      auto& slot = prod[static_cast<std::size_t>(i + j)];
      slot = sub_->add(slot, sub_->mul(da[static_cast<std::size_t>(i)],
                                       db[static_cast<std::size_t>(j)]));
    }
  }
  if (step_is_binomial_) {
    // X^r = beta
    for (int d = 2 * r - 2; d >= r; --d) {
      if (prod[static_cast<std::size_t>(d)] == 0) continue;
      auto& slot = prod[static_cast<std::size_t>(d - r)];
      slot = sub_->add(slot, sub_->mul(prod[static_cast<std::size_t>(d)], step_beta_));
    }
  } else {
    for (int d = 2 * r - 2; d >= r; --d) {
      std::uint32_t c = prod[static_cast<std::size_t>(d)];
      if (c == 0) continue;
      for (int i = 0; i < r; ++i) {
        auto& slot = prod[static_cast<std::size_t>(d - r + i)];
        slot = sub_->sub(slot, sub_->mul(c, step_modulus_[static_cast<std::size_t>(i)]));
      }
    }
  }
  std::uint64_t out = 0, w = 1;
  const std::uint64_t qs = sub_->q_;
  for (int i = 0; i < r; ++i) {
    out += w * prod[static_cast<std::size_t>(i)];
    w *= qs;
  }
  return static_cast<std::uint32_t>(out);
}

std::uint32_t FieldHandle::pow_generic(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1;
  std::uint32_t base = a;
  while (e) {
    if (e & 1) result = mul_generic(result, base);
    base = mul_generic(base, base);
    e >>= 1;
  }
  return result;
}

void FieldHandle::build_tables() {
  group_factors_ = factorize(q_ - 1);

  // deterministic generator: first element (in enumeration order) of full order
  gen_ = 0;
  for (std::uint64_t cand = 2; cand < q_; ++cand) {
    bool ok = true;
    for (auto [l, mult] : group_factors_) {
      if (pow_generic(static_cast<std::uint32_t>(cand), (q_ - 1) / l) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen_ = static_cast<std::uint32_t>(cand);
      break;
    }
  }
  assert(gen_ != 0);

  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  std::uint32_t x = 1;
  for (std::uint64_t k = 0; k + 1 < q_; ++k) {
    exp_[k] = x;
    log_[x] = static_cast<std::uint32_t>(k);
    x = mul_generic(x, gen_);
  }
  assert(x == 1);  // g has order q-1

  trace0_.resize(q_);
  if (level_ == 0) {
    for (std::uint64_t i = 0; i < q_; ++i) trace0_[i] = static_cast<std::uint32_t>(i);
    return;
  }
  // trace is F_p-linear: precompute it on the base-p digit basis
  std::vector<std::uint32_t> basis_trace(static_cast<std::size_t>(n_));
  std::uint64_t w = 1;
  for (int k = 0; k < n_; ++k) {
    std::uint32_t e = static_cast<std::uint32_t>(w);
    std::uint32_t acc = 0;
    for (int j = 0; j < n_; ++j) acc = add(acc, frobenius(e, j));
    assert(acc < static_cast<std::uint64_t>(p_));
    basis_trace[static_cast<std::size_t>(k)] = acc;
    w *= static_cast<std::uint64_t>(p_);
  }
  for (std::uint64_t i = 0; i < q_; ++i) {
    std::uint64_t x2 = i, t = 0;
    for (int k = 0; k < n_; ++k) {
      t += (x2 % p_) * basis_trace[static_cast<std::size_t>(k)];
      x2 /= p_;
    }
    trace0_[i] = static_cast<std::uint32_t>(t % p_);
  }
}

// ---------------------------------------------------------------------------
// construction
// ---------------------------------------------------------------------------

FieldPtr make_prime_field(long long p, std::uint64_t size_cap) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) {
    fail(Errc::not_prime, "characteristic must be an odd prime, got " + std::to_string(p));
  }
  if (static_cast<std::uint64_t>(p) > size_cap) {
    fail(Errc::field_too_large, "prime field order " + std::to_string(p) + " exceeds cap");
  }
  auto f = std::shared_ptr<FieldHandle>(new FieldHandle());
  f->p_ = p;
  f->q_ = static_cast<std::uint64_t>(p);
  f->n_ = 1;
  f->level_ = 0;
  f->build_tables();
  return f;
}

FieldPtr extend_field(const FieldPtr& sub, const StepSpec& step, std::uint64_t size_cap) {
  if (!sub) fail(Errc::invalid_params, "extend_field: null subfield");
  if (sub->level() >= 2) {
    fail(Errc::invalid_params, "towers are limited to two extension steps");
  }
  auto f = std::shared_ptr<FieldHandle>(new FieldHandle());
  f->p_ = sub->characteristic();
  f->sub_ = sub;
  f->level_ = sub->level() + 1;

  if (std::holds_alternative<BinomialStep>(step)) {
    const auto& bs = std::get<BinomialStep>(step);
    if (bs.degree < 2) fail(Errc::invalid_params, "extension degree must be >= 2");
    if (bs.beta == 0 || bs.beta >= sub->element_count()) {
      fail(Errc::invalid_params, "beta out of range");
    }
    f->step_degree_ = bs.degree;
    f->step_is_binomial_ = true;
    f->step_beta_ = bs.beta;
  } else {
    const auto& ms = std::get<ModulusStep>(step);
    if (sub->level() != 0) {
      fail(Errc::invalid_params, "general modulus extensions are only supported at the first step");
    }
    if (ms.degree < 2 || ms.modulus.size() != static_cast<std::size_t>(ms.degree) + 1 ||
        ms.modulus.back() != 1) {
      fail(Errc::invalid_params, "modulus must be monic of the stated degree");
    }
    for (auto c : ms.modulus) {
      if (c >= sub->element_count()) fail(Errc::invalid_params, "modulus coefficient out of range");
    }
    f->step_degree_ = ms.degree;
    f->step_is_binomial_ = false;
    f->step_modulus_ = ms.modulus;
    f->step_modulus_.resize(static_cast<std::size_t>(ms.degree));  // drop the leading 1
  }

  f->q_ = checked_pow_u64(sub->element_count(), f->step_degree_);
  f->n_ = sub->total_degree() * f->step_degree_;
  if (f->q_ > size_cap) {
    fail(Errc::field_too_large, "field order " + std::to_string(f->q_) + " exceeds cap " +
                                    std::to_string(size_cap));
  }

  if (f->step_is_binomial_) {
    bool crit = binomial_is_irreducible(sub, f->step_degree_, f->step_beta_);
    Poly poly(static_cast<std::size_t>(f->step_degree_) + 1, 0);
    poly[0] = sub->neg(f->step_beta_);
    poly.back() = 1;
    bool direct = poly_is_irreducible(sub, poly);
    if (crit != direct) {
      fail(Errc::invalid_params, "binomial criterion disagrees with the generic test");
    }
    if (!direct) {
      fail(Errc::reducible_binomial, "X^" + std::to_string(f->step_degree_) + " - beta is reducible");
    }
  } else {
    Poly poly = f->step_modulus_;
    poly.push_back(1);
    if (!poly_is_irreducible(sub, poly)) {
      fail(Errc::reducible_binomial, "modulus polynomial is reducible");
    }
  }

  f->build_tables();
  return f;
}

FieldPtr make_field(long long p, const std::vector<StepSpec>& steps, std::uint64_t size_cap) {
  FieldPtr f = make_prime_field(p, size_cap);
  for (const auto& s : steps) f = extend_field(f, s, size_cap);
  return f;
}

FFElt find_irreducible_binomial(const FieldPtr& field, int r, const BinomialConstraints& c) {
  if (r < 2) fail(Errc::invalid_params, "binomial degree must be >= 2");
  const FieldHandle& f = *field;
  for (std::uint64_t idx = 1; idx < f.element_count(); ++idx) {
    std::uint32_t beta = static_cast<std::uint32_t>(idx);
    if (c.must_be_cube && !f.is_mth_power(beta, 3)) continue;
    if (c.must_be_noncube && f.is_mth_power(beta, 3)) continue;
    if (c.must_be_quadratic_nonresidue && f.is_mth_power(beta, 2)) continue;
    if (!binomial_is_irreducible(field, r, beta)) continue;
    Poly poly(static_cast<std::size_t>(r) + 1, 0);
    poly[0] = f.neg(beta);
    poly.back() = 1;
    assert(poly_is_irreducible(field, poly));
    return FFElt{&f, beta};
  }
  fail(Errc::no_such_binomial,
       "no irreducible X^" + std::to_string(r) + " - beta with the requested constraints");
}

std::vector<std::uint32_t> find_irreducible_poly(const FieldPtr& field, int r) {
  if (r < 2) fail(Errc::invalid_params, "degree must be >= 2");
  const std::uint64_t q = field->element_count();
  std::uint64_t total = 1;
  for (int i = 0; i < r; ++i) total *= q;
  for (std::uint64_t t = 0; t < total; ++t) {
    Poly poly(static_cast<std::size_t>(r) + 1, 0);
    std::uint64_t x = t;
    for (int i = 0; i < r; ++i) {
      poly[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(x % q);
      x /= q;
    }
    poly.back() = 1;
    if (poly[0] == 0) continue;  // divisible by X
    if (poly_is_irreducible(field, poly)) return poly;
  }
  fail(Errc::no_such_binomial, "no monic irreducible of degree " + std::to_string(r));
}

// ---------------------------------------------------------------------------
// FFElt operators
// ---------------------------------------------------------------------------

namespace {
const FieldHandle& common_field(const FFElt& a, const FFElt& b) {
  if (a.field == nullptr || a.field != b.field) {
    fail(Errc::invalid_params, "elements of different fields");
  }
  return *a.field;
}
}  // namespace

FFElt operator+(const FFElt& a, const FFElt& b) {
  const auto& f = common_field(a, b);
  return FFElt{&f, f.add(a.idx, b.idx)};
}
FFElt operator-(const FFElt& a, const FFElt& b) {
  const auto& f = common_field(a, b);
  return FFElt{&f, f.sub(a.idx, b.idx)};
}
FFElt operator-(const FFElt& a) { return FFElt{a.field, a.field->neg(a.idx)}; }
FFElt operator*(const FFElt& a, const FFElt& b) {
  const auto& f = common_field(a, b);
  return FFElt{&f, f.mul(a.idx, b.idx)};
}
FFElt operator/(const FFElt& a, const FFElt& b) {
  const auto& f = common_field(a, b);
  return FFElt{&f, f.mul(a.idx, f.inv(b.idx))};
}

}  // namespace gausscubic
