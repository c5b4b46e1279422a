// Compares the OpenMP kernels against their serial reference implementations
// on generated instances: arrangement construction, the Pi_k sweep, and the
// central-point depth sweep.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>

#include "ccert/generators.hpp"
#include "ccert/theorems.hpp"

using namespace ccert;

namespace {

template <typename F>
double time_ms(F&& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel kernel benchmark"};
  int n = 6;
  int repeat = 3;
  std::uint64_t seed = 1;
  std::string kind = "lines";
  app.add_option("-n,--n", n, "bodies per instance");
  app.add_option("--repeat", repeat, "repetitions per measurement");
  app.add_option("--seed", seed, "instance seed");
  app.add_option("--kind", kind, "lines | concurrent | simplex-facets");
  CLI11_PARSE(app, argc, argv);

  Family family;
  if (kind == "lines")
    family = gen_lines_general_position(n, seed);
  else if (kind == "concurrent")
    family = gen_concurrent_lines(n, {Rat(0), Rat(0)});
  else if (kind == "simplex-facets")
    family = gen_simplex_facet_bodies(2, make_rat(1, 10), seed);
  else {
    std::fprintf(stderr, "unknown kind\n");
    return 2;
  }

  std::printf("threads available: %d\n", hardware_threads());
  std::printf("%-28s %12s %12s %8s\n", "kernel", "serial ms", "parallel ms", "speedup");

  auto row = [&](const char* name, double serial, double parallel) {
    std::printf("%-28s %12.1f %12.1f %7.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
  };

  {
    double serial = 0, parallel = 0;
    CellComplex a, b;
    for (int i = 0; i < repeat; ++i) {
      serial += time_ms([&] { a = build_arrangement_serial(family); });
      parallel += time_ms([&] { b = build_arrangement(family, {14, Exec::parallel}); });
      if (a.cells.size() != b.cells.size()) {
        std::fprintf(stderr, "arrangement mismatch!\n");
        return 1;
      }
    }
    row("build_arrangement", serial / repeat, parallel / repeat);
  }
  {
    CellComplex complex = build_arrangement(family);
    double serial = 0, parallel = 0;
    CentralPointReport ra, rb;
    for (int i = 0; i < repeat; ++i) {
      serial += time_ms([&] { ra = central_point(family, complex, {}, {Exec::serial}); });
      parallel += time_ms([&] { rb = central_point(family, complex, {}, {Exec::parallel}); });
      if (ra.best.depth != rb.best.depth) {
        std::fprintf(stderr, "central point mismatch!\n");
        return 1;
      }
    }
    row("central_point sweep", serial / repeat, parallel / repeat);
  }
  {
    double serial = 0, parallel = 0;
    for (int i = 0; i < repeat; ++i) {
      PikReport ra, rb;
      serial += time_ms([&] { ra = check_pik(family, 2, {Exec::serial}); });
      parallel += time_ms([&] { rb = check_pik(family, 2, {Exec::parallel}); });
      if (ra.holds != rb.holds) {
        std::fprintf(stderr, "pik mismatch!\n");
        return 1;
      }
    }
    row("check_pik sweep", serial / repeat, parallel / repeat);
  }
  return 0;
}
