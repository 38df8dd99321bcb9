#include "metricerr/rng.hpp"

#include <cmath>
#include <numbers>

namespace metricerr::rng {

double standard_normal(std::uint64_t seed, std::uint64_t obs, std::uint64_t draw) noexcept {
    const std::uint64_t key = stream_key(seed, obs, draw);
    const double u1 = to_unit_open_left(stream_word(key, 0));
    const double u2 = to_unit_open_right(stream_word(key, 1));
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace metricerr::rng
