#include "hrcv/replay/distance.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

namespace hrcv::replay {

double aabb_min_distance(const Box& a, const Box& b) {
  double sq = 0;
  for (int i = 0; i < 3; ++i) {
    double gap = std::max({0.0, a.min[i] - b.max[i], b.min[i] - a.max[i]});
    sq += gap * gap;
  }
  return std::sqrt(sq);
}

double aabb_max_distance(const Box& a, const Box& b) {
  double sq = 0;
  for (int i = 0; i < 3; ++i) {
    double span = std::max(std::abs(a.max[i] - b.min[i]), std::abs(b.max[i] - a.min[i]));
    sq += span * span;
  }
  return std::sqrt(sq);
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform in [0, 1) from the 53 high bits.
double unit(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

std::uint64_t hits(const Box& a, const Box& b, double theta2, std::uint64_t key, std::uint64_t lo,
                   std::uint64_t hi) {
  const Vec3 ea = a.extent(), eb = b.extent();
  std::uint64_t count = 0;
  for (std::uint64_t i = lo; i < hi; ++i) {
    std::uint64_t state = splitmix64(key ^ splitmix64(i));
    double sq = 0;
    for (int axis = 0; axis < 3; ++axis) {
      state = splitmix64(state);
      double x = a.min[axis] + unit(state) * ea[axis];
      state = splitmix64(state);
      double y = b.min[axis] + unit(state) * eb[axis];
      sq += (x - y) * (x - y);
    }
    count += sq <= theta2;
  }
  return count;
}

}  // namespace

double contact_probability(const Box& a, const Box& b, double theta, std::uint64_t n, std::uint64_t seed,
                           unsigned workers) {
  if (n < 1) throw std::invalid_argument("contact_probability needs at least one sample");
  if (theta < 0) throw std::invalid_argument("contact threshold must be non-negative");
  if (aabb_min_distance(a, b) > theta) return 0.0;
  if (aabb_max_distance(a, b) <= theta) return 1.0;

  const std::uint64_t key = splitmix64(seed);
  const double theta2 = theta * theta;
  if (workers == 0)
    workers = static_cast<unsigned>(
        std::clamp<std::uint64_t>(n / 65536, 1, std::max(1u, std::thread::hardware_concurrency())));
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, n));
  std::vector<std::uint64_t> counts(workers, 0);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t lo = n * w / workers, hi = n * (w + 1) / workers;
    pool.emplace_back([&, w, lo, hi] { counts[w] = hits(a, b, theta2, key, lo, hi); });
  }
  for (auto& t : pool) t.join();
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return static_cast<double>(total) / static_cast<double>(n);
}

}  // namespace hrcv::replay
