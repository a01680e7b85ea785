#ifndef DELTAFOCK_POLYNOMIAL_HPP
#define DELTAFOCK_POLYNOMIAL_HPP

#include "deltafock/numerics.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace deltafock {

/// Dense univariate polynomial; coefficients()[k] multiplies x^k.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and equality is coefficient-wise. Scalar only needs ring
/// operations, a value-initialised zero and construction from int, which lets
/// Polynomial<Polynomial<Rational>> carry coefficients that are themselves
/// polynomials in a parameter.
template <typename Scalar>
class Polynomial {
public:
    using scalar_type = Scalar;

    Polynomial() = default;
    explicit Polynomial(std::vector<Scalar> coefficients) : coefficients_(std::move(coefficients)) { trim(); }
    Polynomial(std::initializer_list<Scalar> coefficients) : coefficients_(coefficients) { trim(); }
    explicit Polynomial(const Scalar& constant) : coefficients_{constant} { trim(); }

    static Polynomial monomial(std::size_t power, const Scalar& coefficient = Scalar(1))
    {
        std::vector<Scalar> c(power + 1, Scalar{});
        c[power] = coefficient;
        return Polynomial(std::move(c));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    bool is_zero() const { return coefficients_.empty(); }
    const std::vector<Scalar>& coefficients() const { return coefficients_; }

    Scalar coefficient(std::size_t power) const
    {
        return power < coefficients_.size() ? coefficients_[power] : Scalar{};
    }

    Polynomial& operator+=(const Polynomial& other)
    {
        if (other.coefficients_.size() > coefficients_.size())
            coefficients_.resize(other.coefficients_.size(), Scalar{});
        for (std::size_t k = 0; k < other.coefficients_.size(); ++k)
            coefficients_[k] += other.coefficients_[k];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& other)
    {
        if (other.coefficients_.size() > coefficients_.size())
            coefficients_.resize(other.coefficients_.size(), Scalar{});
        for (std::size_t k = 0; k < other.coefficients_.size(); ++k)
            coefficients_[k] -= other.coefficients_[k];
        trim();
        return *this;
    }

    Polynomial& operator*=(const Scalar& factor)
    {
        for (auto& c : coefficients_)
            c *= factor;
        trim();
        return *this;
    }

    Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

    Polynomial operator-() const
    {
        Polynomial result = *this;
        for (auto& c : result.coefficients_)
            c = -c;
        return result;
    }

    /// Multiplication by x^k.
    Polynomial shifted(std::size_t k) const
    {
        if (is_zero())
            return {};
        std::vector<Scalar> c(k, Scalar{});
        c.insert(c.end(), coefficients_.begin(), coefficients_.end());
        return Polynomial(std::move(c));
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Scalar& factor) { return a *= factor; }
    friend Polynomial operator*(const Scalar& factor, Polynomial a) { return a *= factor; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Scalar> c(a.coefficients_.size() + b.coefficients_.size() - 1, Scalar{});
        for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
            if (a.coefficients_[i] == Scalar{})
                continue;
            for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
                c[i + j] += a.coefficients_[i] * b.coefficients_[j];
        }
        return Polynomial(std::move(c));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coefficients_ == b.coefficients_; }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p)
    {
        if (p.is_zero())
            return os << "0";
        bool first = true;
        for (std::size_t k = p.coefficients_.size(); k-- > 0;) {
            if (p.coefficients_[k] == Scalar{})
                continue;
            if (!first)
                os << " + ";
            os << "(" << p.coefficients_[k] << ")";
            if (k > 0)
                os << "x^" << k;
            first = false;
        }
        return os;
    }

private:
    void trim()
    {
        while (!coefficients_.empty() && coefficients_.back() == Scalar{})
            coefficients_.pop_back();
    }

    std::vector<Scalar> coefficients_;
};

using Poly = Polynomial<Rational>;

template <typename Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& p)
{
    const auto& c = p.coefficients();
    if (c.size() <= 1)
        return {};
    std::vector<Scalar> d(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k)
        d[k - 1] = c[k] * Scalar(static_cast<int>(k));
    return Polynomial<Scalar>(std::move(d));
}

/// Horner evaluation in the coefficient field.
template <typename Scalar>
Scalar evaluate(const Polynomial<Scalar>& p, const Scalar& x)
{
    Scalar acc{};
    const auto& c = p.coefficients();
    for (std::size_t k = c.size(); k-- > 0;)
        acc = acc * x + c[k];
    return acc;
}

/// Horner evaluation after converting coefficients to T (double, long double,
/// std::complex<...>).
template <typename T>
T evaluate_as(const Poly& p, const T& x)
{
    T acc{};
    const auto& c = p.coefficients();
    for (std::size_t k = c.size(); k-- > 0;)
        acc = acc * x + T(to_long_double(c[k]));
    return acc;
}

/// (1 + delta_sq * x^2)^k
inline Poly secant_power(const Rational& delta_sq, unsigned k)
{
    const Poly base{Rational(1), Rational(0), delta_sq};
    Poly result{Rational(1)};
    for (unsigned i = 0; i < k; ++i)
        result = result * base;
    return result;
}

} // namespace deltafock

#endif // DELTAFOCK_POLYNOMIAL_HPP
