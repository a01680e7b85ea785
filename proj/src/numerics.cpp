#include "deltafock/numerics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace deltafock {

namespace mp = boost::multiprecision;

double to_double(const Rational& value) { return value.convert_to<double>(); }

long double to_long_double(const Rational& value) { return value.convert_to<long double>(); }

std::string to_string(const Rational& value) { return value.str(); }

namespace {

std::optional<Integer> exact_isqrt(const Integer& n)
{
    if (n < 0)
        return std::nullopt;
    Integer root = mp::sqrt(n);
    if (root * root != n)
        return std::nullopt;
    return root;
}

int sign_of(const Rational& value) { return value > 0 ? 1 : (value < 0 ? -1 : 0); }

// n = factor^2 * rest; trial division only, so rest may keep large repeated primes.
std::pair<Integer, Integer> extract_square_part(Integer n)
{
    if (auto root = exact_isqrt(n))
        return {*root, Integer(1)};
    Integer factor = 1;
    for (unsigned p = 2; p < 1000; p += (p == 2 ? 1 : 2)) {
        const Integer pp = Integer(p) * p;
        if (pp > n)
            break;
        while (n % pp == 0) {
            n /= pp;
            factor *= p;
        }
    }
    if (auto root = exact_isqrt(n))
        return {factor * *root, Integer(1)};
    return {factor, n};
}

} // namespace

std::optional<Rational> exact_sqrt(const Rational& value)
{
    auto num = exact_isqrt(mp::numerator(value));
    if (!num)
        return std::nullopt;
    auto den = exact_isqrt(mp::denominator(value));
    if (!den)
        return std::nullopt;
    return Rational(*num, *den);
}

Integer factorial(unsigned n)
{
    Integer result = 1;
    for (unsigned k = 2; k <= n; ++k)
        result *= k;
    return result;
}

Rational wallis_moment(unsigned a, unsigned b)
{
    Integer num = factorial(2 * a) * factorial(2 * b);
    Integer den = factorial(a) * factorial(b) * factorial(a + b);
    den <<= 2 * (a + b);
    return Rational(num, den);
}

// --- SqrtRational ----------------------------------------------------------

SqrtRational::SqrtRational(Rational radicand) : radicand_(std::move(radicand))
{
    if (radicand_ < 0)
        throw std::domain_error("SqrtRational: negative radicand " + radicand_.str());
}

double SqrtRational::to_double() const { return std::sqrt(deltafock::to_double(radicand_)); }

long double SqrtRational::to_long_double() const
{
    return std::sqrt(deltafock::to_long_double(radicand_));
}

SqrtRational operator/(const SqrtRational& a, const SqrtRational& b)
{
    if (b.is_zero())
        throw std::domain_error("SqrtRational: division by zero");
    return SqrtRational(a.radicand_ / b.radicand_);
}

// --- Surd ------------------------------------------------------------------

Surd::Surd(const Rational& value) : sign_(sign_of(value)), square_(value * value) {}

Surd::Surd(const Rational& coefficient, const SqrtRational& root)
{
    if (coefficient == 0 || root.is_zero())
        return;
    sign_ = sign_of(coefficient);
    square_ = coefficient * coefficient * root.radicand();
}

Rational Surd::rational_value() const
{
    auto root = exact_sqrt(square_);
    if (!root)
        throw std::domain_error("Surd: value " + to_string() + " is irrational");
    return sign_ < 0 ? Rational(-*root) : *root;
}

std::pair<Rational, Rational> Surd::split() const
{
    if (sign_ == 0)
        return {Rational(0), Rational(1)};
    const Integer den = mp::denominator(square_);
    auto [factor, rest] = extract_square_part(mp::numerator(square_) * den);
    Rational coefficient(factor, den);
    if (sign_ < 0)
        coefficient = -coefficient;
    return {coefficient, Rational(rest)};
}

double Surd::to_double() const { return sign_ * std::sqrt(deltafock::to_double(square_)); }

long double Surd::to_long_double() const
{
    return sign_ * std::sqrt(deltafock::to_long_double(square_));
}

std::string Surd::to_string() const
{
    auto [coefficient, radicand] = split();
    if (radicand == 1)
        return coefficient.str();
    return coefficient.str() + "*sqrt(" + radicand.str() + ")";
}

Surd Surd::operator-() const
{
    Surd result = *this;
    result.sign_ = -sign_;
    return result;
}

Surd operator+(const Surd& a, const Surd& b)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    auto ratio = exact_sqrt(b.square_ / a.square_);
    if (!ratio)
        throw std::domain_error("Surd: incommensurable sum " + a.to_string() + " + " + b.to_string());
    const Rational scale = Rational(a.sign_) + Rational(b.sign_) * *ratio;
    Surd result;
    result.sign_ = sign_of(scale);
    if (result.sign_ != 0)
        result.square_ = scale * scale * a.square_;
    return result;
}

Surd operator*(const Surd& a, const Surd& b)
{
    Surd result;
    result.sign_ = a.sign_ * b.sign_;
    if (result.sign_ != 0)
        result.square_ = a.square_ * b.square_;
    return result;
}

Surd operator*(const Surd& a, const SqrtRational& b)
{
    if (b.is_zero())
        return Surd();
    Surd result = a;
    result.square_ *= b.radicand();
    return result;
}

Surd operator/(const Surd& a, const SqrtRational& b)
{
    if (b.is_zero())
        throw std::domain_error("Surd: division by zero");
    Surd result = a;
    result.square_ /= b.radicand();
    return result;
}

// --- ScaledRational --------------------------------------------------------

double ScaledRational::to_double() const
{
    return coefficient_.to_double() * std::sqrt(static_cast<double>(s_max_) / std::numbers::pi);
}

} // namespace deltafock
