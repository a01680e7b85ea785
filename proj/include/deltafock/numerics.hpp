#ifndef DELTAFOCK_NUMERICS_HPP
#define DELTAFOCK_NUMERICS_HPP

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <utility>

namespace deltafock {

using Integer = boost::multiprecision::mpz_int;

/// Exact rational with arbitrary-precision numerator and denominator.
///
/// GMP keeps every value canonical: gcd(|num|, den) = 1 and den > 0.
using Rational = boost::multiprecision::mpq_rational;

double to_double(const Rational& value);
long double to_long_double(const Rational& value);
std::string to_string(const Rational& value);

/// Returns q with q*q == value when value is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& value);

Integer factorial(unsigned n);

/// Full-period mean of sin^{2a} cos^{2b}:
/// (2a)! (2b)! / (4^{a+b} a! b! (a+b)!).
Rational wallis_moment(unsigned a, unsigned b);

/// Non-negative square root of a non-negative rational, kept as its radicand.
class SqrtRational {
public:
    SqrtRational() = default;
    explicit SqrtRational(Rational radicand);

    static SqrtRational of_square(const Rational& value) { return SqrtRational(value * value); }

    const Rational& radicand() const { return radicand_; }
    bool is_zero() const { return radicand_ == 0; }
    double to_double() const;
    long double to_long_double() const;

    friend SqrtRational operator*(const SqrtRational& a, const SqrtRational& b)
    {
        return SqrtRational(a.radicand_ * b.radicand_);
    }
    friend SqrtRational operator/(const SqrtRational& a, const SqrtRational& b);
    friend bool operator==(const SqrtRational& a, const SqrtRational& b) = default;

private:
    Rational radicand_{0};
};

/// Signed quadratic surd q*sqrt(r) with q, r rational.
///
/// Stored canonically as (sign, value^2), so equality is exact and unique.
/// Addition is closed only for commensurable operands (ratio of squares is a
/// rational square); anything else throws std::domain_error.
class Surd {
public:
    Surd() = default;
    Surd(const Rational& value); // NOLINT: rationals embed
    Surd(const Rational& coefficient, const SqrtRational& root);

    int sign() const { return sign_; }
    const Rational& square() const { return square_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_rational() const { return exact_sqrt(square_).has_value(); }

    /// The value as a rational; throws std::domain_error when irrational.
    Rational rational_value() const;

    /// Presentation split value = coefficient * sqrt(radicand), with square
    /// factors pulled out of the radicand by trial division.
    std::pair<Rational, Rational> split() const;

    double to_double() const;
    long double to_long_double() const;
    std::string to_string() const;

    Surd operator-() const;
    friend Surd operator+(const Surd& a, const Surd& b);
    friend Surd operator-(const Surd& a, const Surd& b) { return a + (-b); }
    friend Surd operator*(const Surd& a, const Surd& b);
    friend Surd operator*(const Surd& a, const SqrtRational& b);
    friend Surd operator/(const Surd& a, const SqrtRational& b);
    friend bool operator==(const Surd& a, const Surd& b) = default;

private:
    int sign_ = 0;
    Rational square_{0};
};

/// coefficient * sqrt(s_max / pi): the closed form every inner product of
/// deformed Fock states takes.
class ScaledRational {
public:
    ScaledRational() = default;
    ScaledRational(Surd coefficient, int s_max) : coefficient_(std::move(coefficient)), s_max_(s_max) {}

    const Surd& coefficient() const { return coefficient_; }
    int s_max() const { return s_max_; }
    bool is_zero() const { return coefficient_.is_zero(); }
    double to_double() const;

    friend bool operator==(const ScaledRational& a, const ScaledRational& b) = default;

private:
    Surd coefficient_;
    int s_max_ = 1;
};

} // namespace deltafock

#endif // DELTAFOCK_NUMERICS_HPP
