// Compares the serial reference elimination with the OpenMP kernel on random
// matrices and on a realistic interpolation system.
#include <chrono>
#include <cstdio>
#include <random>

#include "mr2/matrix.hpp"
#include "mr2/schemes.hpp"

using namespace mr2;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

void bench_random(int rows, int cols, const PrimeField& f, std::mt19937_64& rng) {
  Matrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rng() % f.p;
  Matrix m2 = m;
  auto t0 = std::chrono::steady_clock::now();
  int r1 = rank_serial(m);
  auto t1 = std::chrono::steady_clock::now();
  int r2 = rank(m2);
  auto t2 = std::chrono::steady_clock::now();
  double ts = seconds(t0, t1), tp = seconds(t1, t2);
  std::printf("random %4dx%-4d  rank %4d/%-4d  serial %.3fs  parallel %.3fs  speedup %.2fx\n",
              rows, cols, r1, r2, ts, tp, ts / tp);
  if (r1 != r2) std::printf("  MISMATCH between serial and parallel rank!\n");
}

void bench_system(int copies, int d, const PrimeField& f) {
  std::vector<Component> comps(copies, SingularityComponent::tacnode(3));
  RankReport rep = assemble_and_rank(comps, d, f, 42);
  std::printf("system  %d x A5, d=%d: rank %lld of expected %lld\n", copies, d, rep.rank,
              rep.expected);
}

}  // namespace

int main() {
  PrimeField f(kDefaultPrime);
  std::mt19937_64 rng(7);
  bench_random(300, 300, f, rng);
  bench_random(800, 800, f, rng);
  bench_random(1500, 1200, f, rng);
  auto t0 = std::chrono::steady_clock::now();
  bench_system(11, 13, f);
  auto t1 = std::chrono::steady_clock::now();
  std::printf("system assembly+rank: %.3fs\n", seconds(t0, t1));
  return 0;
}
