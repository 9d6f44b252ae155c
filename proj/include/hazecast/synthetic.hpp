#pragma once

#include <cstdint>

#include "hazecast/series.hpp"

namespace hazecast {

/// Hourly synthetic PV dataset: a clear-sky half-sine day profile attenuated
/// on randomly drawn hazy days (factor in [0.2, 0.6]) with noisier output,
/// plus irradiance, ambient temperature and a haze indicator as features.
/// Bit-identical for a fixed seed.
Dataset generate_synthetic(int n_days, uint64_t seed, double haze_fraction);

}  // namespace hazecast
