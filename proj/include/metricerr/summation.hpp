#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace metricerr {

// Neumaier-compensated accumulator. All reductions over observations go
// through this so that metric differences (corrected minus classical) stay
// meaningful even when the individual terms dwarf them.
class CompensatedSum {
public:
    void add(double v) noexcept {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double compensated_total(std::span<const double> values) noexcept {
    CompensatedSum acc;
    for (double v : values) acc.add(v);
    return acc.value();
}

}  // namespace metricerr
