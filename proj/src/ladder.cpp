#include "deltafock/ladder.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace deltafock {

LadderCoefficients ladder_coefficients(const DeformationParam& params, int s)
{
    if (s < 0 || s > params.s_max())
        throw std::out_of_range("ladder_coefficients: s = " + std::to_string(s) + " outside [0, s_max]");
    const Rational half = params.delta_sq() / 2;
    Rational alpha_sq = Rational(s) - half * s * (s - 1);
    Rational beta_sq = Rational(s + 1) - half * s * (s + 1);
    return {SqrtRational(std::move(alpha_sq)), SqrtRational(std::move(beta_sq))};
}

Rational ladder_product(const DeformationParam& params, int s)
{
    return Rational(s) - params.delta_sq() / 2 * s * (s - 1);
}

namespace {

// P'(1 + delta^2 t^2) - lambda t P
Poly transport(const Rational& delta_sq, const Rational& lambda, const Poly& p)
{
    const Poly secant{Rational(1), Rational(0), delta_sq};
    return secant * derivative(p) - p.shifted(1) * lambda;
}

Rational unit_rescale(int from, int to)
{
    if ((from - to) % 2 != 0)
        throw std::domain_error("cannot combine operators with unit powers " + std::to_string(from) + " and " +
                                std::to_string(to));
    Rational factor = 1;
    for (int u = from; u > to; u -= 2)
        factor *= Rational(-1, 2);
    for (int u = from; u < to; u += 2)
        factor *= -2;
    return factor;
}

} // namespace

Poly lowering_map(const DeformationParam& params, int s, const Poly& p)
{
    return transport(params.delta_sq(), params.delta_sq() * s, p);
}

Poly raising_map(const DeformationParam& params, int s, const Poly& p)
{
    return transport(params.delta_sq(), Rational(2) - params.delta_sq() * s, p);
}

PolyOperator PolyOperator::identity()
{
    return PolyOperator(0, [](const Poly& p) { return p; });
}

PolyOperator PolyOperator::multiplication(Poly factor)
{
    return PolyOperator(0, [factor = std::move(factor)](const Poly& p) { return factor * p; });
}

PolyOperator PolyOperator::annihilation(const DeformationParam& params, int s)
{
    return PolyOperator(1, [params, s](const Poly& p) { return lowering_map(params, s, p); });
}

PolyOperator PolyOperator::creation(const DeformationParam& params, int s)
{
    return PolyOperator(1, [params, s](const Poly& p) { return raising_map(params, s, p); });
}

PolyOperator PolyOperator::scaled_position(const DeformationParam& params)
{
    return PolyOperator(1, [delta_sq = params.delta_sq()](const Poly& p) { return transport(delta_sq, Rational(1), p); });
}

PolyOperator PolyOperator::inverse_average_power(const DeformationParam& params, unsigned k)
{
    return multiplication(secant_power(params.delta_sq(), k));
}

PolyOperator PolyOperator::b_operator(const DeformationParam& params, int s, unsigned k)
{
    return (annihilation(params, s) - creation(params, s)) * inverse_average_power(params, k);
}

PolyOperator PolyOperator::at_unit(int target) const
{
    const Rational factor = unit_rescale(unit_power_, target);
    if (factor == 1)
        return *this;
    return PolyOperator(target, [factor, map = map_](const Poly& p) { return map(p) * factor; });
}

PolyOperator operator*(const PolyOperator& a, const PolyOperator& b)
{
    return PolyOperator(a.unit_power_ + b.unit_power_,
                        [f = a.map_, g = b.map_](const Poly& p) { return f(g(p)); });
}

PolyOperator operator+(const PolyOperator& a, const PolyOperator& b)
{
    const int unit = std::min(a.unit_power_, b.unit_power_);
    PolyOperator lhs = a.at_unit(unit);
    PolyOperator rhs = b.at_unit(unit);
    return PolyOperator(unit, [f = lhs.map_, g = rhs.map_](const Poly& p) { return f(p) + g(p); });
}

PolyOperator operator-(const PolyOperator& a, const PolyOperator& b) { return a + Rational(-1) * b; }

PolyOperator operator*(const Rational& factor, const PolyOperator& a)
{
    return PolyOperator(a.unit_power_, [factor, f = a.map_](const Poly& p) { return f(p) * factor; });
}

PolyOperator commutator(const PolyOperator& a, const PolyOperator& b) { return a * b - b * a; }

} // namespace deltafock
