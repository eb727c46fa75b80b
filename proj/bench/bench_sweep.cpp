#include <chrono>
#include <iomanip>
#include <iostream>

#include "ramiforge/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ramiforge;

namespace {

template <typename F>
double time_ms(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void row(const std::string& name, double serial_ms, double parallel_ms) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed
            << std::setprecision(1) << std::setw(10) << serial_ms << " ms" << std::setw(10)
            << parallel_ms << " ms" << std::setw(9) << std::setprecision(2)
            << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "x\n";
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "OpenMP not available; parallel variants fall back to serial\n";
#endif
  std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(13) << "serial"
            << std::setw(13) << "parallel" << std::setw(10) << "speedup" << "\n";

  CoverData tri5 = make_trinomial_cover(5, 2, 2, 1);
  CoverData tri3 = make_trinomial_cover(3, 1, 2, 1);

  {
    const long bound = 3000;
    std::vector<PrimeVerdict> a, b;
    double s = time_ms([&] { a = classify_window_serial(tri5, bound); });
    double p = time_ms([&] { b = classify_window(tri5, bound); });
    row("classify, quintic trinomial", s, p);
    if (a.size() != b.size()) {
      std::cerr << "kernel outputs differ in size\n";
      return 1;
    }
  }

  {
    std::vector<Rat> pts = agreement_points(40);
    AgreementReport a, b;
    double s = time_ms([&] { a = agreement_window_serial(tri3, 300, pts); });
    double p = time_ms([&] { b = agreement_window(tri3, 300, pts); });
    row("splitting agreement, cubic", s, p);
    if (a.pairs_checked != b.pairs_checked || !a.mismatches.empty() || !b.mismatches.empty()) {
      std::cerr << "kernel outputs disagree\n";
      return 1;
    }
    std::cout << "agreement pairs checked: " << a.pairs_checked << ", undecided skipped: "
              << a.undecided << "\n";
  }
  return 0;
}
