#ifndef GAUSSCUBIC_VERIFY_HPP_
#define GAUSSCUBIC_VERIFY_HPP_

#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "gausscubic/ffield.hpp"

namespace gausscubic {

/// One named check per verified identity.  Every check computes both sides
/// exactly and passes only on exact equality; complex approximations never
/// enter the pass/fail decision.
enum class CheckKind {
  trivial,           // trivial character: G = -1
  p5odd,             // p = 5 (mod 6), s odd: G_2s = p^s, with A_s(1/(2a)) = -1
  p5even,            // p = 5 (mod 6), s even: G_2s = (-p)^(s/2) G_s = -p^s
  coprime_doubling,  // gcd(p^s - 1, m) = 1: G_2s = p^s
  realness,          // p = -1 (mod m): conj fixes G_s
  deg_split,         // G_rs = conj-chi(r) G_s B_{r,s}(alpha)
  quad_split,        // G_2s = chi(alpha) G_s A_s(1/(2 alpha))
  chain2k,           // repeated quadratic splitting up to degree 2^k s
  periodpoly,        // periods are exactly the roots of the closed-form cubic
  algtable,          // period products match the (a, b, c) table, v resolved
  eta,               // G_1, G_2 as quadratic polynomials in G_0; G rebuilt
  normform,          // (G0-G2)^2 - (G0-G2)(G1-G2) + (G1-G2)^2 = p
  bmultiset,         // B_{r,1} multiset equals the composition prediction
  g2split,           // G_2 = G_1 A_1(1/(2 alpha)) with beta a cube and QNR
  cube_identity,     // G^3 = p sum chi(x(x-1))
  asign,             // A = -conj(A_1(1/(2 alpha))), plus the F(d,i) counts
  dh2,               // G_2(1, chi') = -conj(G_1 on F_p)^2 for the norm lift
  p7unit,            // pinned p = 7 factorization with the explicit unit
};

std::string kind_slug(CheckKind kind);
std::optional<CheckKind> kind_from_slug(const std::string& slug);
std::vector<CheckKind> all_check_kinds();

/// Parameters of a single check instance.  Which fields matter depends on the
/// kind; unused ones are ignored.
struct CheckParams {
  long long p = 0;
  int s = 1;
  int r = 2;
  int k = 1;
  long long m = 3;
  std::optional<std::uint32_t> beta;   // explicit first-step beta
  std::optional<std::uint32_t> beta2;  // explicit second-step beta
  std::optional<std::uint32_t> g;      // explicit generator

  nlohmann::json to_json() const;
};

struct CheckReport {
  CheckKind kind;
  nlohmann::json params;     // includes resolved choices (beta, g, v sign)
  bool pass = false;
  nlohmann::json witnesses;  // exact serialized sides of the asserted equality
  double elapsed_s = 0.0;

  nlohmann::json to_json() const;
};

struct SuiteConfig {
  long long p_max = 61;
  std::uint64_t size_cap = kDefaultSizeCap;
  std::optional<std::set<CheckKind>> kinds;  // nullopt = all
  int jobs = 1;
};

struct SuiteReport {
  std::vector<CheckReport> checks;
  int pass_count = 0;
  int fail_count = 0;

  bool all_pass() const { return fail_count == 0; }
  nlohmann::json to_json() const;
  void print_table(std::ostream& os) const;
};

/// Executes both sides of the named identity exactly; deterministic given the
/// parameters.  Throws on parameters that do not describe a valid instance.
CheckReport run_check(CheckKind kind, const CheckParams& params,
                      std::uint64_t size_cap = kDefaultSizeCap);

/// Every applicable instance within the configured caps.  Empty for
/// p_max < 5 (the suite keys its instance lists off the p >= 5 families).
std::vector<std::pair<CheckKind, CheckParams>> default_instances(const SuiteConfig& config);

/// Runs the instance list, optionally fanned out over `jobs` workers; reports
/// are ordered deterministically by (kind, params).
SuiteReport run_suite(const SuiteConfig& config);

}  // namespace gausscubic

#endif  // GAUSSCUBIC_VERIFY_HPP_
