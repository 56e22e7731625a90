// Times the law suites on the 256-cell pair nerve with the serial reference
// path (threads=1) against the OpenMP path, and reports the speedup. Not a
// test: numbers vary by machine, correctness of the parallel merge is
// covered by the determinism tests.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cubix/equivalence.hpp"
#include "cubix/laws.hpp"
#include "cubix/models.hpp"
#include "cubix/normalizer.hpp"

using namespace cubix;

namespace {

double time_of(const std::function<void()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void row(const std::string& label, const std::function<void(int)>& body,
         int threads) {
  double serial = time_of([&] { body(1); });
  double parallel = time_of([&] { body(threads); });
  std::printf("%-28s %9.3fs %9.3fs %8.2fx\n", label.c_str(), serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
  int threads = 4;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  const auto pair3 = cube_nerve(BaseKind::pair_groupoid, 2, 3, true);
  const auto graded = fc(pair3, threads);
  std::printf("pair nerve n=3, %zu cells; %d worker threads\n", pair3.size(),
              threads);
  std::printf("%-28s %10s %10s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  row("category axioms", [&](int t) { check_category_axioms(pair3, t); },
      threads);
  row("cubical axioms", [&](int t) { check_cubical_axioms(pair3, t); },
      threads);
  row("connection axioms", [&](int t) { check_connection_axioms(pair3, t); },
      threads);
  row("derived lemmas", [&](int t) { check_derived_lemmas(pair3, t); },
      threads);
  row("round trip (mu)", [&](int t) { check_mu(pair3, t); }, threads);
  row("round trip (eta)", [&](int t) { check_eta(graded, t); }, threads);
  row("grading (fc)", [&](int t) { fc(pair3, t); }, threads);
  row("bounded confluence",
      [&](int t) { check_confluence(default_rules(), 4, 3, t); }, threads);
  return 0;
}
