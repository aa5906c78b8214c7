#include <chrono>
#include <cstdio>
#include <thread>

#include "colouring/graph3.hpp"
#include "colouring/group.hpp"
#include "colouring/search.hpp"
#include "colouring/tables.hpp"

using namespace colouring;

namespace {

template <typename F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  std::printf("hardware threads: %d\n\n", jobs);

  // Kernel 1: exhaustive properness check over |G|^3 vertices.
  {
    FiniteGroup g = build_from_spec("H3");
    Perm sigma = tables::h3_sigma();
    ChromaticCertificate serial, parallel;
    double ts = time_ms([&] { serial = verify_proper_serial(g, sigma); });
    double tp = time_ms([&] { parallel = verify_proper(g, sigma, jobs); });
    bool same = serial.proper == parallel.proper && serial.chi == parallel.chi &&
                serial.colours_used == parallel.colours_used;
    std::printf("properness check (H3, 19683 vertices, 156 moves each)\n");
    std::printf("  serial    %8.1f ms  proper=%d chi=%d\n", ts, serial.proper,
                serial.chi);
    std::printf("  jobs=%-2d   %8.1f ms  proper=%d chi=%d\n", jobs, tp,
                parallel.proper, parallel.chi);
    std::printf("  outputs identical: %s\n\n", same ? "yes" : "NO");
    if (!same) return 1;
  }

  // Kernel 2: exhaustive colouring-bijection count.
  {
    FiniteGroup g = build_from_spec("C3xC3");
    SearchConfig cfg;
    cfg.mode = SearchMode::Count;
    SearchResult serial, parallel;
    cfg.jobs = 1;
    double ts = time_ms([&] { serial = search(g, cfg); });
    cfg.jobs = jobs;
    double tp = time_ms([&] { parallel = search(g, cfg); });
    bool same = serial.count == parallel.count;
    std::printf("colouring-bijection count (C3xC3, exhaustive)\n");
    std::printf("  serial    %8.1f ms  count=%llu nodes=%llu\n", ts,
                (unsigned long long)serial.count,
                (unsigned long long)serial.nodes_explored);
    std::printf("  jobs=%-2d   %8.1f ms  count=%llu nodes=%llu\n", jobs, tp,
                (unsigned long long)parallel.count,
                (unsigned long long)parallel.nodes_explored);
    std::printf("  counts identical: %s\n\n", same ? "yes" : "NO");
    if (!same) return 1;
  }

  // Kernel 3: M16 strong-complete-mapping census, identity-fixing slice.
  {
    FiniteGroup g = build_from_spec("M16");
    CensusResult serial, parallel;
    double ts = time_ms([&] { serial = scm_census(g, {}, true, 1); });
    double tp = time_ms([&] { parallel = scm_census(g, {}, true, jobs); });
    bool same = serial.scm_count == parallel.scm_count &&
                serial.cb_count == parallel.cb_count;
    std::printf("census (M16, identity-fixing slice)\n");
    std::printf("  serial    %8.1f ms  scm=%llu cb=%llu\n", ts,
                (unsigned long long)serial.scm_count,
                (unsigned long long)serial.cb_count);
    std::printf("  jobs=%-2d   %8.1f ms  scm=%llu cb=%llu\n", jobs, tp,
                (unsigned long long)parallel.scm_count,
                (unsigned long long)parallel.cb_count);
    std::printf("  counts identical: %s\n", same ? "yes" : "NO");
    if (!same) return 1;
  }
  return 0;
}
