// Times the serial reference kernels against their OpenMP counterparts and
// cross-checks that both produce identical counts.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "gausscubic/chars.hpp"
#include "gausscubic/ffield.hpp"
#include "gausscubic/sum_kernels.hpp"

using namespace gausscubic;

namespace {

double time_best_of(int reps, const std::function<void()>& fn) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt < best) best = dt;
  }
  return best;
}

std::vector<long long> parse_list(const std::string& list) {
  std::vector<long long> out;
  std::size_t pos = 0;
  while (pos < list.size()) {
    std::size_t comma = list.find(',', pos);
    if (comma == std::string::npos) comma = list.size();
    out.push_back(std::stoll(list.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  int reps = 3;
  std::vector<long long> quad_primes = {211, 499, 997};
  std::vector<long long> cubic_primes = {97, 127, 211};
  const std::uint64_t cap = 16'000'000;  // benchmark fields outgrow the desk-scale default

  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--reps" && i + 1 < argc) reps = std::atoi(argv[++i]);
    else if (arg == "--quad-primes" && i + 1 < argc) quad_primes = parse_list(argv[++i]);
    else if (arg == "--cubic-primes" && i + 1 < argc) cubic_primes = parse_list(argv[++i]);
    else {
      std::fprintf(stderr, "usage: %s [--reps N] [--quad-primes p,..] [--cubic-primes p,..]\n",
                   argv[0]);
      return 2;
    }
  }

  std::printf("threads: %d, best of %d runs\n\n", omp_get_max_threads(), reps);
  std::printf("class-trace kernel over F_{p^2}\n");
  std::printf("%8s %10s %12s %12s %9s %7s\n", "p", "elements", "serial_ms", "parallel_ms",
              "speedup", "match");
  for (long long p : quad_primes) {
    FieldPtr base = make_prime_field(p, cap);
    FFElt beta = find_irreducible_binomial(base, 2, {.must_be_quadratic_nonresidue = true});
    FieldPtr f = extend_field(base, BinomialStep{2, beta.idx}, cap);
    long long m = (f->element_count() - 1) % 3 == 0 ? 3 : 1;
    Character chr = Character::make(f, m);

    ClassTraceCounts serial, parallel;
    double ts = time_best_of(reps, [&] { serial = count_class_trace_serial(*f, chr, 1); });
    double tp = time_best_of(reps, [&] { parallel = count_class_trace(*f, chr, 1); });
    bool match = serial.counts == parallel.counts;

    std::printf("%8lld %10llu %12.3f %12.3f %8.2fx %7s\n", p,
                static_cast<unsigned long long>(f->element_count()), ts * 1e3, tp * 1e3, ts / tp,
                match ? "yes" : "NO");
    if (!match) return 1;
  }

  std::printf("\ntuple kernel over F_{p^3} (p^2 tuples per sum)\n");
  std::printf("%8s %10s %12s %12s %9s %7s\n", "p", "tuples", "serial_ms", "parallel_ms",
              "speedup", "match");
  for (long long p : cubic_primes) {
    if ((p - 1) % 3 != 0) continue;  // need a cubic binomial
    FieldPtr base = make_prime_field(p, cap);
    FFElt beta = find_irreducible_binomial(base, 3, {.must_be_noncube = true});
    FieldPtr f = extend_field(base, BinomialStep{3, beta.idx}, cap);
    Character chr = Character::make(f, 3);
    FFElt alpha = f->step_root();

    ClassCounts serial, parallel;
    double ts =
        time_best_of(reps, [&] { serial = count_tuple_classes_serial(*f, chr, alpha.idx, 3, 0); });
    double tp = time_best_of(reps, [&] { parallel = count_tuple_classes(*f, chr, alpha.idx, 3, 0); });
    bool match = serial.counts == parallel.counts && serial.zeros == parallel.zeros;

    std::printf("%8lld %10lld %12.3f %12.3f %8.2fx %7s\n", p, p * p, ts * 1e3, tp * 1e3, ts / tp,
                match ? "yes" : "NO");
    if (!match) return 1;
  }
  return 0;
}
