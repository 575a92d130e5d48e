#pragma once

#include <cmath>
#include <cstdint>
#include <functional>

namespace ssmc {

// Hamming-ramp coupling strength chosen so the s=1 single-bit ground state
// has cos(theta/2) = 1 - 1/(4n).
inline double b_constant(int n)
{
    return 2.0 / std::tan(2.0 * std::acos(1.0 - 1.0 / (4.0 * n)));
}

// Piecewise coefficients of the spiked-ramp anneal: the ramp reaches full
// strength at s = 1/2, then the spike at the all-zeros vertex switches on.
inline double ramp_b(double s, double b_const)
{
    return s <= 0.5 ? 2.0 * s * b_const : b_const;
}

inline double ramp_c(double s, double c_const)
{
    return s <= 0.5 ? 0.0 : (2.0 * s - 1.0) * c_const;
}

// Time-dependent hop/event coefficients a(s), b(s). s runs over t/T for
// t = 1..T, so the final step sees s = 1 exactly.
struct Schedule {
    std::function<double(double)> a;
    std::function<double(double)> b;
    std::uint32_t steps = 1;

    static Schedule linear(std::uint32_t T)
    {
        return {[](double s) { return 1.0 - s; }, [](double s) { return s; }, T};
    }

    static Schedule constant_ab(double a, double b, std::uint32_t T)
    {
        return {[a](double) { return a; }, [b](double) { return b; }, T};
    }
};

} // namespace ssmc
