// Command-line front end: compute exact Gauss sums, emit the closed-form
// tables, and run the verification suite.
//
// Exit codes: 0 success (all checks pass), 1 verification failure,
// 2 usage/parameter error, 3 field size cap exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gausscubic/chars.hpp"
#include "gausscubic/closedform.hpp"
#include "gausscubic/cyclo.hpp"
#include "gausscubic/ffield.hpp"
#include "gausscubic/gsum.hpp"
#include "gausscubic/intmath.hpp"
#include "gausscubic/verify.hpp"

using namespace gausscubic;

namespace {

std::uint64_t size_cap_from_env() {
  if (const char* env = std::getenv("GAUSS_SIZE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v >= 3) return v;
    throw Error(Errc::invalid_params, "GAUSS_SIZE_CAP is not a valid size");
  }
  return kDefaultSizeCap;
}

// "r:beta" with beta an element index, or "r:auto[:cube][:qnr][:noncube]"
// (tags may also be comma-separated).
struct ExtSpec {
  int degree = 0;
  std::optional<std::uint32_t> beta;
  BinomialConstraints constraints;
};

ExtSpec parse_ext(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ':' || ch == ',') {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  if (parts.size() < 2) throw Error(Errc::invalid_params, "bad --ext entry: " + text);

  ExtSpec spec;
  spec.degree = std::stoi(parts[0]);
  if (parts[1] == "auto") {
    for (std::size_t i = 2; i < parts.size(); ++i) {
      if (parts[i] == "cube") spec.constraints.must_be_cube = true;
      else if (parts[i] == "qnr") spec.constraints.must_be_quadratic_nonresidue = true;
      else if (parts[i] == "noncube") spec.constraints.must_be_noncube = true;
      else throw Error(Errc::invalid_params, "unknown --ext tag: " + parts[i]);
    }
  } else {
    spec.beta = static_cast<std::uint32_t>(std::stoul(parts[1]));
    if (parts.size() > 2) throw Error(Errc::invalid_params, "bad --ext entry: " + text);
  }
  return spec;
}

FieldPtr build_field(long long p, const std::vector<std::string>& ext, std::uint64_t cap,
                     std::ostream& log, bool log_choices) {
  FieldPtr f = make_prime_field(p, cap);
  for (const std::string& e : ext) {
    ExtSpec spec = parse_ext(e);
    std::uint32_t beta;
    if (spec.beta) {
      beta = *spec.beta;
    } else {
      beta = find_irreducible_binomial(f, spec.degree, spec.constraints).idx;
      if (log_choices) {
        log << "# auto-selected beta " << beta << " for step of degree " << spec.degree << "\n";
      }
    }
    f = extend_field(f, BinomialStep{spec.degree, beta}, cap);
  }
  return f;
}

std::string half_string(const BigInt& num) {
  if (num % 2 == 0) return to_decimal(num / 2);
  return to_decimal(num) + "/2";
}

int cmd_gauss(long long p, const std::vector<std::string>& ext, long long m,
              std::optional<std::uint32_t> gen, std::uint32_t beta_arg, const std::string& format,
              std::uint64_t cap) {
  FieldPtr f = build_field(p, ext, cap, std::cerr, format != "json");
  std::optional<FFElt> g;
  if (gen) g = f->element(*gen);
  Character chr = Character::make(f, m, g);
  if (beta_arg >= f->element_count()) throw Error(Errc::invalid_params, "beta-arg out of range");
  GaussSumResult res = gauss_sum(chr, f->element(beta_arg));

  CycloInt abs2 = res.value * res.value.conj();
  auto abs2_rat = abs2.as_rational();
  std::complex<double> z = res.value.to_complex();

  nlohmann::json rec = res.params;
  rec["value"] = res.value.to_json();
  rec["rational"] = res.rational ? nlohmann::json(to_decimal(*res.rational)) : nlohmann::json();
  rec["abs2"] = abs2_rat ? nlohmann::json(to_decimal(*abs2_rat)) : nlohmann::json();
  rec["complex"] = {{"re", z.real()}, {"im", z.imag()}};

  if (format == "json") {
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << "field: " << f->describe().dump() << "\n"
              << "m: " << m << "  g: " << (chr.generator() ? std::to_string(chr.generator()->idx) : "-")
              << "  beta: " << beta_arg << "\n"
              << "G = " << res.value.to_string() << "\n";
    if (res.rational) std::cout << "rational: " << to_decimal(*res.rational) << "\n";
    std::cout << "|G|^2 = " << (abs2_rat ? to_decimal(*abs2_rat) : abs2.to_string()) << "\n"
              << "complex ~ " << z.real() << (z.imag() < 0 ? " - " : " + ")
              << std::abs(z.imag()) << "i\n";
  }
  return 0;
}

int cmd_periodpoly(long long p, const std::string& format, std::uint64_t cap) {
  (void)cap;
  PeriodPoly q = period_polynomial(p);
  auto c = q.coeffs();
  StructureConstants plus = structure_constants(p, q.rep.v_abs);
  StructureConstants minus = structure_constants(p, -q.rep.v_abs);
  HalfPair hp_plus = r1_r2(p, q.rep.v_abs);
  HalfPair hp_minus = r1_r2(p, -q.rep.v_abs);

  nlohmann::json rec = {
      {"p", p},
      {"u", q.rep.u},
      {"v_abs", q.rep.v_abs},
      {"q_coeffs", {c[0], c[1], c[2], c[3]}},
      {"v_plus", {{"a", plus.a}, {"b", plus.b}, {"c", plus.c},
                  {"r1", half_string(hp_plus.r1_num)}, {"r2", half_string(hp_plus.r2_num)}}},
      {"v_minus", {{"a", minus.a}, {"b", minus.b}, {"c", minus.c},
                   {"r1", half_string(hp_minus.r1_num)}, {"r2", half_string(hp_minus.r2_num)}}},
      {"note", "the v sign matching a fixed generator is resolved by the algtable check"}};

  if (format == "json") {
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << "p = " << p << ": q(z) = z^3 " << (c[2] >= 0 ? "+ " : "- ") << std::abs(c[2])
              << "z^2 " << (c[1] >= 0 ? "+ " : "- ") << std::abs(c[1]) << "z "
              << (c[0] >= 0 ? "+ " : "- ") << std::abs(c[0]) << "\n"
              << "4p = " << q.rep.u << "^2 + 27*" << q.rep.v_abs << "^2\n"
              << "v=+" << q.rep.v_abs << ": (a,b,c) = (" << plus.a << "," << plus.b << ","
              << plus.c << "), r1 = " << half_string(hp_plus.r1_num)
              << ", r2 = " << half_string(hp_plus.r2_num) << "\n"
              << "v=-" << q.rep.v_abs << ": (a,b,c) = (" << minus.a << "," << minus.b << ","
              << minus.c << "), r1 = " << half_string(hp_minus.r1_num)
              << ", r2 = " << half_string(hp_minus.r2_num) << "\n";
  }
  return 0;
}

int cmd_repr(long long p, const std::string& format) {
  XYRep xy = rep_x2_3y2(p);
  Rep4p uv = rep_4p(p);
  auto [u1, v1] = rep_eisenstein(p);
  nlohmann::json rec = {{"p", p},
                        {"x2_plus_3y2", {xy.x, xy.y}},
                        {"u2_plus_27v2", {uv.u, uv.v_abs}},
                        {"eisenstein", {u1, v1}}};
  if (format == "json") {
    std::cout << rec.dump() << "\n";
  } else {
    std::cout << p << " = " << xy.x << "^2 + 3*" << xy.y << "^2\n"
              << 4 * p << " = " << uv.u << "^2 + 27*" << uv.v_abs << "^2\n"
              << p << " = " << u1 << "^2 + " << u1 << "*" << v1 << " + " << v1 << "^2\n";
  }
  return 0;
}

int cmd_verify(long long pmax, const std::string& kinds_csv, int jobs, const std::string& format,
               const std::string& out_path, std::uint64_t cap) {
  SuiteConfig config;
  config.p_max = pmax;
  config.size_cap = cap;
  config.jobs = jobs;
  if (!kinds_csv.empty()) {
    std::set<CheckKind> kinds;
    std::string cur;
    auto flush = [&]() {
      if (cur.empty()) return;
      auto k = kind_from_slug(cur);
      if (!k) throw Error(Errc::invalid_params, "unknown check kind: " + cur);
      kinds.insert(*k);
      cur.clear();
    };
    for (char ch : kinds_csv) {
      if (ch == ',') flush();
      else cur.push_back(ch);
    }
    flush();
    config.kinds = std::move(kinds);
  }

  SuiteReport report = run_suite(config);

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw Error(Errc::invalid_params, "cannot open output file " + out_path);
    os = &file;
  }
  if (format == "json") *os << report.to_json().dump(2) << "\n";
  else report.print_table(*os);
  return report.all_pass() ? 0 : 1;
}

int cmd_table(long long pmax, const std::string& out_format) {
  if (pmax < 0) throw Error(Errc::invalid_params, "pmax must be non-negative");
  nlohmann::json rows = nlohmann::json::array();
  bool csv = out_format == "csv";
  if (csv) std::cout << "p,u,v,c0,c1,c2,c3,a,b,c\n";
  for (long long p : primes_upto(pmax)) {
    if (p % 6 != 1) continue;
    PeriodPoly q = period_polynomial(p);
    auto c = q.coeffs();
    StructureConstants sc = structure_constants(p, q.rep.v_abs);  // the +|v| convention
    if (csv) {
      std::cout << p << ',' << q.rep.u << ',' << q.rep.v_abs << ',' << c[0] << ',' << c[1] << ','
                << c[2] << ',' << c[3] << ',' << sc.a << ',' << sc.b << ',' << sc.c << "\n";
    } else {
      rows.push_back({{"p", p}, {"u", q.rep.u}, {"v", q.rep.v_abs},
                      {"q_coeffs", {c[0], c[1], c[2], c[3]}},
                      {"a", sc.a}, {"b", sc.b}, {"c", sc.c}});
    }
  }
  if (!csv) std::cout << rows.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Gauss sums of cubic (and prime-order) characters over F_{p^r}"};
  app.require_subcommand(1);

  long long p = 0;
  std::vector<std::string> ext;
  long long m = 3;
  std::optional<std::uint32_t> gen;
  std::uint32_t beta_arg = 1;
  std::string format = "pretty";

  auto* gauss = app.add_subcommand("gauss", "compute one Gauss sum exactly");
  gauss->add_option("--p", p, "odd prime characteristic")->required();
  gauss->add_option("--ext", ext, "extension steps, r:beta or r:auto[:cube][:qnr][:noncube]");
  gauss->add_option("--m", m, "character order (1 or a prime)");
  gauss->add_option("--gen", gen, "generator element index");
  gauss->add_option("--beta-arg", beta_arg, "argument beta of G(beta, chi), element index");
  gauss->add_option("--format", format, "json|pretty");

  long long pp_p = 0;
  std::string pp_format = "pretty";
  auto* periodpoly = app.add_subcommand("periodpoly", "period polynomial and structure constants");
  periodpoly->add_option("--p", pp_p, "prime = 1 (mod 6)")->required();
  periodpoly->add_option("--format", pp_format, "json|pretty");

  long long repr_p = 0;
  std::string repr_format = "pretty";
  auto* repr = app.add_subcommand("repr", "quadratic form representations of p and 4p");
  repr->add_option("--p", repr_p, "prime = 1 (mod 6)")->required();
  repr->add_option("--format", repr_format, "json|pretty");

  long long v_pmax = 61;
  std::string v_kinds;
  int v_jobs = 1;
  std::string v_format = "table";
  std::string v_out;
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--pmax", v_pmax, "largest prime to exercise");
  verify->add_option("--kinds", v_kinds, "comma-separated check kinds (default all)");
  verify->add_option("--jobs", v_jobs, "parallel workers (0 = all cores)");
  verify->add_option("--format", v_format, "json|table");
  verify->add_option("--out", v_out, "write the report to a file instead of stdout");

  long long t_pmax = 0;
  std::string t_out = "csv";
  auto* table = app.add_subcommand("table", "closed-form table for all p = 1 (mod 6) <= pmax");
  table->add_option("--pmax", t_pmax, "upper bound")->required();
  table->add_option("--out", t_out, "csv|json");

  try {
    app.parse(argc, argv);
    std::uint64_t cap = size_cap_from_env();
    if (gauss->parsed()) return cmd_gauss(p, ext, m, gen, beta_arg, format, cap);
    if (periodpoly->parsed()) return cmd_periodpoly(pp_p, pp_format, cap);
    if (repr->parsed()) return cmd_repr(repr_p, repr_format);
    if (verify->parsed()) return cmd_verify(v_pmax, v_kinds, v_jobs, v_format, v_out, cap);
    if (table->parsed()) return cmd_table(t_pmax, t_out);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::field_too_large ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
