#ifndef DELTAFOCK_HERMITE_HPP
#define DELTAFOCK_HERMITE_HPP

#include "deltafock/deformation.hpp"
#include "deltafock/polynomial.hpp"

#include <span>
#include <vector>

namespace deltafock {

/// H_{n+1} = (2 - delta^2 n) x H_n - (1 + delta^2 x^2) H_n', H_0 = 1.
///
/// Ring is the coefficient ring: Rational for a fixed deformation, or
/// Polynomial<Rational> to keep delta^2 symbolic.
template <typename Ring>
Polynomial<Ring> deformed_hermite_recurrence(const Ring& delta_sq, int s)
{
    Polynomial<Ring> h{Ring(1)};
    const Polynomial<Ring> secant{Ring(1), Ring{}, delta_sq};
    for (int n = 0; n < s; ++n) {
        const Ring factor = Ring(2) - delta_sq * Ring(n);
        h = h.shifted(1) * factor - secant * derivative(h);
    }
    return h;
}

/// Explicit sum over x^{s-2j}, j = 0..floor(s/2):
/// (-1)^j s!/(j!(s-2j)!) 2^{s-2j} prod_{k=0}^{s-j-1} (1 - delta^2 k).
template <typename Ring>
Polynomial<Ring> deformed_hermite_closed(const Ring& delta_sq, int s)
{
    std::vector<Ring> c(static_cast<std::size_t>(s) + 1, Ring{});
    const Integer s_fact = factorial(static_cast<unsigned>(s));
    for (int j = 0; 2 * j <= s; ++j) {
        Integer weight = s_fact / (factorial(static_cast<unsigned>(j)) * factorial(static_cast<unsigned>(s - 2 * j)));
        weight <<= static_cast<unsigned>(s - 2 * j);
        if (j % 2 == 1)
            weight = -weight;
        Ring term = Ring(Rational(weight));
        for (int k = 0; k <= s - j - 1; ++k)
            term = term * (Ring(1) - delta_sq * Ring(k));
        c[static_cast<std::size_t>(s - 2 * j)] = term;
    }
    return Polynomial<Ring>(std::move(c));
}

/// Recurrence route; accepts 0 <= s <= s_max + 1 so the truncation at
/// s_max + 1 can be inspected.
Poly hermite_delta_rec(const DeformationParam& params, int s);

/// Closed-form route; 0 <= s <= s_max.
Poly hermite_delta_closed(const DeformationParam& params, int s);

/// Physicists' Hermite polynomial (the delta = 0 closed form).
Poly hermite_classical(int s);

/// max over nonzero classical coefficients of |c_deformed - c_0| / |c_0|.
Rational max_relative_coefficient_error(const Poly& deformed, const Poly& classical);

struct HermiteLimitRow {
    int s_max;
    double error;
};

/// Requires s <= min(s_max_list); an empty list gives an empty table.
std::vector<HermiteLimitRow> hermite_limit_table(int s, std::span<const int> s_max_list);

} // namespace deltafock

#endif // DELTAFOCK_HERMITE_HPP
