#ifndef DELTAFOCK_DEFORMATION_HPP
#define DELTAFOCK_DEFORMATION_HPP

#include "deltafock/numerics.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace deltafock {

/// The single deformation knob: delta^2 = 1 / s_max.
class DeformationParam {
public:
    explicit DeformationParam(int s_max) : s_max_(s_max)
    {
        if (s_max < 1)
            throw std::invalid_argument("s_max must be a positive integer, got " + std::to_string(s_max));
        delta_sq_ = Rational(1, s_max);
    }

    int s_max() const { return s_max_; }
    const Rational& delta_sq() const { return delta_sq_; }
    double delta() const { return 1.0 / std::sqrt(static_cast<double>(s_max_)); }
    long double delta_long() const { return 1.0L / std::sqrt(static_cast<long double>(s_max_)); }

    /// delta itself when s_max is a perfect square.
    std::optional<Rational> rational_delta() const { return exact_sqrt(delta_sq_); }

    friend bool operator==(const DeformationParam& a, const DeformationParam& b) { return a.s_max_ == b.s_max_; }

private:
    int s_max_;
    Rational delta_sq_;
};

} // namespace deltafock

#endif // DELTAFOCK_DEFORMATION_HPP
