#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include <omp.h>

#include "wavebound/parallel.hpp"
#include "wavebound/schemes1d.hpp"
#include "wavebound/schemes2d.hpp"
#include "wavebound/serial.hpp"
#include "wavebound/vonneumann.hpp"

using namespace wavebound;

namespace {

std::vector<double> random_vector(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> q(n);
  for (double &v : q)
    v = u(rng);
  return q;
}

Field2D random_field(std::size_t nx, std::size_t ny, unsigned seed) {
  Field2D f(nx, ny);
  f.data() = random_vector(nx * ny, seed);
  return f;
}

class ThreadGuard {
public:
  explicit ThreadGuard(int n) : saved_(omp_get_max_threads()) { omp_set_num_threads(n); }
  ~ThreadGuard() { omp_set_num_threads(saved_); }

private:
  int saved_;
};

} // namespace

TEST(SerialParity, Step1D) {
  for (std::size_t n : {1u, 2u, 3u, 100u, 10000u, 100003u}) {
    const auto q = random_vector(n, 401);
    const auto w = coefficients(1.3, 0.6);
    EXPECT_EQ(step(q, w), serial::step(q, w)) << "n=" << n;
  }
}

TEST(SerialParity, Step2D) {
  for (auto [nx, ny] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 3}, {17, 9}, {256, 200}}) {
    const Field2D q = random_field(nx, ny, 403);
    const auto w = coefficients_2d(BetaSpec::constant(1.2), BetaSpec::constant(0.9), 0.3, 0.35);
    EXPECT_EQ(step_2d(q, w).data(), serial::step_2d(q, w).data()) << nx << "x" << ny;
  }
}

TEST(SerialParity, StabilityMap) {
  SweepConfig cfg;
  cfg.grid_n = 64;
  cfg.angle_n = 64;
  for (double beta : {0.5, 1.0, 1.25}) {
    const BetaSpec s = BetaSpec::constant(beta);
    EXPECT_EQ(stability_map_2d(s, s, cfg).stable, serial::stability_map_2d(s, s, cfg).stable)
        << "beta=" << beta;
  }
  const BetaSpec fa = BetaSpec::force_alpha(2.0);
  EXPECT_EQ(stability_map_2d(fa, fa, cfg).stable, serial::stability_map_2d(fa, fa, cfg).stable);
}

TEST(SerialParity, ThreadCountInvariance) {
  const auto q = random_vector(50000, 405);
  const Field2D f = random_field(300, 128, 407);
  const auto w1 = coefficients(1.1, 0.8);
  const auto w2 = coefficients_2d(BetaSpec::constant(1.1), BetaSpec::constant(1.1), 0.4, 0.4);
  SweepConfig cfg;
  cfg.grid_n = 64;
  cfg.angle_n = 64;

  std::vector<double> a1;
  Field2D a2;
  StabilityMap am;
  {
    ThreadGuard g(1);
    a1 = step(q, w1);
    a2 = step_2d(f, w2);
    am = stability_map_2d(1.25, cfg);
  }
  for (int threads : {2, 3, 4}) {
    ThreadGuard g(threads);
    EXPECT_EQ(step(q, w1), a1);
    EXPECT_EQ(step_2d(f, w2).data(), a2.data());
    EXPECT_EQ(stability_map_2d(1.25, cfg).stable, am.stable);
  }
}

TEST(ThreadCount, RespectsEnvironmentCap) {
  ThreadGuard g(4);
  ::setenv("WAVEBOUND_THREADS", "2", 1);
  EXPECT_EQ(thread_count(), 2);
  ::setenv("WAVEBOUND_THREADS", "64", 1);
  EXPECT_EQ(thread_count(), 4);
  ::setenv("WAVEBOUND_THREADS", "junk", 1);
  EXPECT_EQ(thread_count(), 4);
  ::unsetenv("WAVEBOUND_THREADS");
  EXPECT_EQ(thread_count(), 4);
}
