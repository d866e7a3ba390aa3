// Compares the serial reference kernels against the OpenMP ones on a larger
// T2(conic) geometry and checks that both produce identical reports.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <functional>

#include "tgq/gq.hpp"

using namespace tgq;

namespace {

double time_ms(const std::function<void()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void row(const char* name, double serial_ms, double parallel_ms, bool match) {
  std::printf("%-28s %10.1f ms %10.1f ms %8.2fx   %s\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms, match ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP timings for the verification kernels"};
  std::uint64_t q = 11;
  app.add_option("--q", q, "field order for the T2(conic) instance (default 11)");
  CLI11_PARSE(app, argc, argv);

  OvalSpec spec;
  spec.field = field_for_order(q);
  KantorFamily fam = build_t2_oval(spec);
  std::printf("T2(conic), q = %llu: group size %llu, %zu members, %d thread(s)\n",
              static_cast<unsigned long long>(q), static_cast<unsigned long long>(fam.group_size()),
              fam.members.size(), thread_count(Exec::Parallel));
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

  {
    KFReport a, b;
    const double ts = time_ms([&] { a = verify_kf(fam, Exec::Serial); });
    const double tp = time_ms([&] { b = verify_kf(fam, Exec::Parallel); });
    row("verify_kf", ts, tp, a.all_pass() == b.all_pass() && a.s == b.s && a.t == b.t);
  }

  CosetGeometry gs, gp;
  {
    const double ts = time_ms([&] { gs = expand(fam, Exec::Serial, true); });
    const double tp = time_ms([&] { gp = expand(fam, Exec::Parallel, true); });
    row("expand", ts, tp, gs.inc == gp.inc);
  }

  {
    GQReport a, b;
    const double ts = time_ms([&] { a = verify_gq(gs.inc, Exec::Serial); });
    const double tp = time_ms([&] { b = verify_gq(gs.inc, Exec::Parallel); });
    row("verify_gq", ts, tp,
        a.axiom_i() == b.axiom_i() && a.axiom_ii() == b.axiom_ii() && a.order == b.order);
  }

  {
    TranslationActionReport a, b;
    const double ts = time_ms([&] { a = verify_translation_action(gs, Exec::Serial); });
    const double tp = time_ms([&] { b = verify_translation_action(gs, Exec::Parallel); });
    row("verify_translation_action", ts, tp, a.pass() == b.pass());
  }

  {
    RegularPointResult a, b;
    const std::uint32_t inf = gs.infinity_point;
    const double ts = time_ms([&] { a = is_regular_point(gs.inc, inf, Exec::Serial); });
    const double tp = time_ms([&] { b = is_regular_point(gs.inc, inf, Exec::Parallel); });
    row("is_regular_point(inf)", ts, tp, a.regular == b.regular && a.witness == b.witness);
  }
  return 0;
}
