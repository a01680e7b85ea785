#ifndef DELTAFOCK_LADDER_HPP
#define DELTAFOCK_LADDER_HPP

#include "deltafock/deformation.hpp"
#include "deltafock/polynomial.hpp"

#include <functional>

namespace deltafock {

struct LadderCoefficients {
    SqrtRational alpha;
    SqrtRational beta;
};

/// alpha(s)^2 = s - (delta^2/2) s (s-1), beta(s)^2 = s + 1 - (delta^2/2) s (s+1).
LadderCoefficients ladder_coefficients(const DeformationParam& params, int s);

/// s - (delta^2/2) s (s-1); equals alpha(s)^2 = beta(s-1)^2 and hence alpha(s) beta(s-1).
Rational ladder_product(const DeformationParam& params, int s);

/// Operator on the weighted family P(t) (cos delta phi)^{s_max}, t = tan(delta phi)/delta.
///
/// The action is (i/sqrt2)^unit_power times a rational polynomial map. A(s) and
/// A^dagger(s) carry one unit each, multiplication operators none; products
/// add units and sums bring both terms to the lower unit via
/// (i/sqrt2)^2 = -1/2, which fails for terms of different parity.
class PolyOperator {
public:
    using Map = std::function<Poly(const Poly&)>;

    PolyOperator(int unit_power, Map map) : unit_power_(unit_power), map_(std::move(map)) {}

    static PolyOperator identity();
    static PolyOperator multiplication(Poly factor);
    /// A(s): P -> P'(1 + delta^2 t^2) - delta^2 s t P
    static PolyOperator annihilation(const DeformationParam& params, int s);
    /// A^dagger(s): P -> P'(1 + delta^2 t^2) - (2 - delta^2 s) t P
    static PolyOperator creation(const DeformationParam& params, int s);
    /// x / sqrt2 with x = i d/dphi: P -> P'(1 + delta^2 t^2) - t P
    static PolyOperator scaled_position(const DeformationParam& params);
    /// I^{-2k}: multiplication by (1 + delta^2 t^2)^k
    static PolyOperator inverse_average_power(const DeformationParam& params, unsigned k);
    /// B_k(s) = [A(s) - A^dagger(s)] I^{-2k}
    static PolyOperator b_operator(const DeformationParam& params, int s, unsigned k);

    int unit_power() const { return unit_power_; }
    Poly operator()(const Poly& p) const { return map_(p); }

    /// Same operator expressed with unit_power moved to target (same parity).
    PolyOperator at_unit(int target) const;

    friend PolyOperator operator*(const PolyOperator& a, const PolyOperator& b);
    friend PolyOperator operator+(const PolyOperator& a, const PolyOperator& b);
    friend PolyOperator operator-(const PolyOperator& a, const PolyOperator& b);
    friend PolyOperator operator*(const Rational& factor, const PolyOperator& a);

private:
    int unit_power_;
    Map map_;
};

PolyOperator commutator(const PolyOperator& a, const PolyOperator& b);

/// Raw polynomial parts of the ladder actions (without the i/sqrt2 factor).
Poly lowering_map(const DeformationParam& params, int s, const Poly& p);
Poly raising_map(const DeformationParam& params, int s, const Poly& p);

} // namespace deltafock

#endif // DELTAFOCK_LADDER_HPP
