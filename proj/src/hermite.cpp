#include "deltafock/hermite.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace deltafock {

namespace {

void check_range(int s, int upper, const char* route)
{
    if (s < 0 || s > upper)
        throw std::out_of_range(std::string(route) + ": s = " + std::to_string(s) + " outside [0, " +
                                std::to_string(upper) + "]");
}

} // namespace

Poly hermite_delta_rec(const DeformationParam& params, int s)
{
    check_range(s, params.s_max() + 1, "hermite_delta_rec");
    return deformed_hermite_recurrence(params.delta_sq(), s);
}

Poly hermite_delta_closed(const DeformationParam& params, int s)
{
    check_range(s, params.s_max(), "hermite_delta_closed");
    return deformed_hermite_closed(params.delta_sq(), s);
}

Poly hermite_classical(int s)
{
    if (s < 0)
        throw std::out_of_range("hermite_classical: negative degree");
    return deformed_hermite_closed(Rational(0), s);
}

Rational max_relative_coefficient_error(const Poly& deformed, const Poly& classical)
{
    Rational worst = 0;
    for (std::size_t k = 0; k < classical.coefficients().size(); ++k) {
        const Rational& c0 = classical.coefficients()[k];
        if (c0 == 0)
            continue;
        Rational err = abs(Rational(deformed.coefficient(k) - c0)) / abs(c0);
        worst = std::max(worst, err);
    }
    return worst;
}

std::vector<HermiteLimitRow> hermite_limit_table(int s, std::span<const int> s_max_list)
{
    std::vector<HermiteLimitRow> rows;
    if (s_max_list.empty())
        return rows;
    if (s < 0 || s > *std::min_element(s_max_list.begin(), s_max_list.end()))
        throw std::invalid_argument("hermite_limit_table: s must lie in [0, min(s_max_list)]");
    const Poly classical = hermite_classical(s);
    rows.reserve(s_max_list.size());
    for (int s_max : s_max_list) {
        const Poly deformed = hermite_delta_closed(DeformationParam(s_max), s);
        rows.push_back({s_max, to_double(max_relative_coefficient_error(deformed, classical))});
    }
    return rows;
}

} // namespace deltafock
