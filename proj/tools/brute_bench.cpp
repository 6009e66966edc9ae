// Benchmark of the brute-force weighted-sum kernels: the direct serial
// reference against the multiset-grouped OpenMP kernel, with the
// recurrence time alongside for scale.  Results are cross-checked for
// exact equality before timings are reported.
#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hooklen/engine.hpp"

using namespace hooklen;

namespace {

double seconds(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"brute-force kernel benchmark: serial reference vs OpenMP"};
  std::string identity = "han";
  int n_min = 1;
  int n_max = 10;
  app.add_option("--identity", identity, "postnikov|lascoux|han|half|ternary|forest");
  app.add_option("--n-min", n_min, "first size");
  app.add_option("--n-max", n_max, "last size");
  CLI11_PARSE(app, argc, argv);

  auto id = identity_from_name(identity);
  if (!id) {
    std::fprintf(stderr, "error: unknown identity '%s'\n", identity.c_str());
    return 2;
  }
  Family family = identity_family(*id);
  HookWeight w(*id);
  Engine engine;

#ifdef _OPENMP
  std::printf("# identity=%s family=%s threads=%d\n", identity.c_str(), family_name(family),
              omp_get_max_threads());
#else
  std::printf("# identity=%s family=%s threads=1 (no OpenMP)\n", identity.c_str(),
              family_name(family));
#endif
  std::printf("%4s %12s %12s %12s %8s %6s\n", "n", "shapes", "serial[s]", "parallel[s]",
              "speedup", "check");

  for (int n = n_min; n <= n_max; ++n) {
    RatFunc serial, parallel, rec;
    double ts = seconds([&] { serial = brute_sum_serial(family, n, w); });
    double tp = seconds([&] { parallel = brute_sum_parallel(family, n, w); });
    rec = engine.sum_rec(family, n, w);
    bool ok = serial == parallel && serial == rec;
    std::printf("%4d %12s %12.4f %12.4f %8.2f %6s\n", n,
                family_count(family, static_cast<unsigned long>(n)).get_str().c_str(), ts, tp,
                tp > 0 ? ts / tp : 0.0, ok ? "ok" : "MISMATCH");
    if (!ok) return 1;
  }
  return 0;
}
