#pragma once

#include <cstdint>

#include "hrcv/geometry.hpp"

namespace hrcv::replay {

/// Distance between the closest points of two boxes; 0 when they touch.
double aabb_min_distance(const Box& a, const Box& b);

/// Largest distance between a point of `a` and a point of `b`.
double aabb_max_distance(const Box& a, const Box& b);

/// Monte Carlo estimate of P(|X - Y| <= theta) with X, Y uniform in a, b.
///
/// Sample i draws its six coordinates from a counter-based generator keyed
/// on (seed, i), and worker threads only sum integer hit counts, so the
/// result depends on seed and n alone. Exact bounds short-circuit to 0 or 1.
/// `workers` = 0 picks the hardware concurrency.
double contact_probability(const Box& a, const Box& b, double theta, std::uint64_t n, std::uint64_t seed,
                           unsigned workers = 0);

}  // namespace hrcv::replay
