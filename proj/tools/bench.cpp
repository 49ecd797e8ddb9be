// Benchmark comparing the OpenMP kernels against their serial references:
// tensor-product convolution of weight supports and the Freudenthal
// multiplicity recursion.  Results must agree exactly; timings are wall clock.
#include <chrono>
#include <cstdio>

#include "lie/parallel.hpp"
#include "lie/repchar.hpp"

using namespace lie;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return seconds(t0, std::chrono::steady_clock::now());
}

void bench_tensor(const char* name, const RootDatum& d, const IVec& hw) {
  FormalCharacter chi = irrep_character(d, hw);
  FormalCharacter a, b;
  double ts = timed([&] { a = tensor_serial(chi, chi); });
  double tp = timed([&] { b = tensor(chi, chi); });
  bool same = a.mults == b.mults;
  std::printf("tensor    %-22s support %5zu  serial %7.3fs  parallel %7.3fs  x%.2f  %s\n",
              name, chi.mults.size(), ts, tp, ts / tp, same ? "match" : "MISMATCH");
}

void bench_freudenthal(const char* name, const RootDatum& d, const IVec& hw) {
  std::map<IVec, i64> a, b;
  double ts = timed([&] { a = dominant_weight_multiplicities_serial(d, hw); });
  double tp = timed([&] { b = dominant_weight_multiplicities(d, hw); });
  bool same = a == b;
  std::printf("freudenthal %-20s dom wts %5zu  serial %7.3fs  parallel %7.3fs  x%.2f  %s\n",
              name, a.size(), ts, tp, ts / tp, same ? "match" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", max_threads());

  RootDatum a2 = RootDatum::parse("A2sc");
  bench_tensor("A2 V(24,24)^2", a2, {24, 24});

  RootDatum b5 = RootDatum::parse("B5sc");
  bench_tensor("B5 V(0,1,0,0,1)^2", b5, {0, 1, 0, 0, 1});

  RootDatum e7 = RootDatum::parse("E7sc");
  bench_tensor("E7 56^2", e7, {0, 0, 0, 0, 0, 0, 1});

  RootDatum c4 = RootDatum::parse("C4sc");
  bench_freudenthal("C4 V(3,2,1,1)", c4, {3, 2, 1, 1});
  bench_freudenthal("B5 V(1,1,1,0,0)", b5, {1, 1, 1, 0, 0});
  return 0;
}
