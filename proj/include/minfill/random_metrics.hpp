#pragma once

#include "minfill/metric.hpp"

#include <cstdint>
#include <random>

namespace minfill {

/// Random rational pseudo-metric: path distances of a random weighted
/// topology, plus a flat shift of 4 and noise drawn from {0, 1/4, ..., 4}.
/// The shift dominates the noise spread, so the triangle inequality holds by
/// construction. Only engine calls are used (no distribution objects), so the
/// stream is identical on every platform.
MetricSpace random_pseudometric(int n, std::mt19937_64& rng);

}  // namespace minfill
