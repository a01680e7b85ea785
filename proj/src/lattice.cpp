#include "deltafock/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace deltafock {

namespace {

constexpr double pi = std::numbers::pi;

RationalMatrix zeros(int n) { return RationalMatrix::Constant(n, n, Rational(0)); }

// Skips zero entries; lattice operators are banded.
RationalMatrix sparse_product(const RationalMatrix& a, const RationalMatrix& b)
{
    RationalMatrix c = RationalMatrix::Constant(a.rows(), b.cols(), Rational(0));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0)
                continue;
            for (Eigen::Index j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0)
                    c(i, j) += aik * b(k, j);
        }
    return c;
}

bool all_zero(const RationalMatrix& m)
{
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0)
                return false;
    return true;
}

// even + delta * odd == 0, entrywise.
bool split_is_zero(const RationalMatrix& even, const RationalMatrix& odd, const std::optional<Rational>& delta)
{
    if (!delta)
        return all_zero(even) && all_zero(odd);
    for (Eigen::Index i = 0; i < even.rows(); ++i)
        for (Eigen::Index j = 0; j < even.cols(); ++j)
            if (even(i, j) + *delta * odd(i, j) != 0)
                return false;
    return true;
}

void require_same_window(const LatticeOperator& a, const LatticeOperator& b)
{
    if (!(a.window() == b.window()))
        throw std::invalid_argument("lattice operators live on different windows");
}

} // namespace

// --- LatticeWindow ---------------------------------------------------------

LatticeWindow::LatticeWindow(int j_min, int j_max, DeformationParam params)
    : j_min_(j_min), j_max_(j_max), params_(std::move(params))
{
    if (j_min >= j_max)
        throw std::invalid_argument("lattice window needs j_min < j_max");
    if (size() < 5)
        throw std::invalid_argument("lattice window needs at least 5 sites, got " + std::to_string(size()));
}

LatticeWindow LatticeWindow::centred(int size, DeformationParam params)
{
    const int j_min = -(size / 2);
    return LatticeWindow(j_min, j_min + size - 1, std::move(params));
}

LatticeWindow LatticeWindow::on_branch(const Rational& j0, int j_min, int j_max, DeformationParam params)
{
    if (j0 != 0)
        throw std::invalid_argument("only the integer lattice branch (j0 = 0) is supported, got j0 = " + j0.str());
    return LatticeWindow(j_min, j_max, std::move(params));
}

// --- LatticeOperator -------------------------------------------------------

LatticeOperator::LatticeOperator(LatticeWindow window, RationalMatrix even, RationalMatrix odd, int margin)
    : window_(std::move(window)), even_(std::move(even)), odd_(std::move(odd)), margin_(margin)
{
    const int n = window_.size();
    if (even_.rows() != n || even_.cols() != n || odd_.rows() != n || odd_.cols() != n)
        throw std::invalid_argument("lattice operator dimension does not match its window");
    if (margin_ < 0)
        throw std::invalid_argument("negative margin");
}

LatticeOperator LatticeOperator::zero(const LatticeWindow& window, int margin)
{
    return LatticeOperator(window, zeros(window.size()), zeros(window.size()), margin);
}

LatticeOperator LatticeOperator::identity(const LatticeWindow& window)
{
    RationalMatrix e = zeros(window.size());
    for (int i = 0; i < window.size(); ++i)
        e(i, i) = 1;
    return LatticeOperator(window, std::move(e), zeros(window.size()), 0);
}

double LatticeOperator::entry(int j_row, int j_col) const
{
    const int r = window_.index_of(j_row);
    const int c = window_.index_of(j_col);
    return to_double(even_(r, c)) + window_.params().delta() * to_double(odd_(r, c));
}

Eigen::MatrixXd LatticeOperator::to_matrix() const
{
    const int n = size();
    const double delta = window_.params().delta();
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = to_double(even_(i, j)) + delta * to_double(odd_(i, j));
    return m;
}

LatticeOperator LatticeOperator::adjoint() const
{
    return LatticeOperator(window_, even_.transpose(), odd_.transpose(), margin_);
}

LatticeOperator LatticeOperator::times_delta() const
{
    RationalMatrix even = odd_ * window_.params().delta_sq();
    return LatticeOperator(window_, std::move(even), even_, margin_);
}

bool LatticeOperator::is_zero() const { return split_is_zero(even_, odd_, window_.params().rational_delta()); }

LatticeOperator operator+(const LatticeOperator& a, const LatticeOperator& b)
{
    require_same_window(a, b);
    return LatticeOperator(a.window_, a.even_ + b.even_, a.odd_ + b.odd_, std::max(a.margin_, b.margin_));
}

LatticeOperator operator-(const LatticeOperator& a, const LatticeOperator& b)
{
    require_same_window(a, b);
    return LatticeOperator(a.window_, a.even_ - b.even_, a.odd_ - b.odd_, std::max(a.margin_, b.margin_));
}

LatticeOperator operator*(const LatticeOperator& a, const LatticeOperator& b)
{
    require_same_window(a, b);
    const Rational& delta_sq = a.window_.params().delta_sq();
    RationalMatrix even = sparse_product(a.even_, b.even_) + sparse_product(a.odd_, b.odd_) * delta_sq;
    RationalMatrix odd = sparse_product(a.even_, b.odd_) + sparse_product(a.odd_, b.even_);
    return LatticeOperator(a.window_, std::move(even), std::move(odd), a.margin_ + b.margin_);
}

LatticeOperator operator*(const Rational& factor, const LatticeOperator& a)
{
    return LatticeOperator(a.window_, a.even_ * factor, a.odd_ * factor, a.margin_);
}

LatticeOperator commutator(const LatticeOperator& a, const LatticeOperator& b) { return a * b - b * a; }

// --- lattice functions -----------------------------------------------------

ExactLatticeFunction ExactLatticeFunction::from_polynomial(const LatticeWindow& window, const Poly& p)
{
    const int n = window.size();
    const Rational& delta_sq = window.params().delta_sq();
    RationalVector even = RationalVector::Constant(n, Rational(0));
    RationalVector odd = RationalVector::Constant(n, Rational(0));
    for (int i = 0; i < n; ++i) {
        const Rational j = window.j_at(i);
        Rational j_power = 1;
        Rational delta_even_power = 1; // delta^(2 floor(k/2))
        for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
            const Rational term = p.coefficients()[k] * j_power * delta_even_power;
            if (k % 2 == 0) {
                even(i) += term;
            } else {
                odd(i) += term;
                delta_even_power *= delta_sq;
            }
            j_power *= j;
        }
    }
    return {window, std::move(even), std::move(odd)};
}

double ExactLatticeFunction::value_at(int j) const
{
    const int i = window.index_of(j);
    return to_double(even(i)) + window.params().delta() * to_double(odd(i));
}

ExactLatticeFunction apply(const LatticeOperator& op, const ExactLatticeFunction& f)
{
    if (!(op.window() == f.window))
        throw std::invalid_argument("operator and function live on different windows");
    const Rational& delta_sq = f.window.params().delta_sq();
    RationalVector even = op.even() * f.even + (op.odd() * f.odd) * delta_sq;
    RationalVector odd = op.even() * f.odd + op.odd() * f.even;
    return {f.window, std::move(even), std::move(odd)};
}

bool agree_on(const ExactLatticeFunction& f, const ExactLatticeFunction& g, int margin)
{
    if (!(f.window == g.window))
        throw std::invalid_argument("functions live on different windows");
    const int n = f.window.size();
    const int len = n - 2 * margin;
    if (len < 1)
        throw std::invalid_argument("window too small for margin");
    RationalMatrix even = (f.even - g.even).segment(margin, len);
    RationalMatrix odd = (f.odd - g.odd).segment(margin, len);
    return split_is_zero(even, odd, f.window.params().rational_delta());
}

// --- interior blocks -------------------------------------------------------

bool InteriorBlock::is_zero() const { return split_is_zero(even, odd, rational_delta); }

double InteriorBlock::max_abs() const
{
    if (is_zero())
        return 0.0;
    double worst = 0.0;
    for (Eigen::Index i = 0; i < even.rows(); ++i)
        for (Eigen::Index j = 0; j < even.cols(); ++j)
            worst = std::max(worst, std::abs(to_double(even(i, j)) + delta * to_double(odd(i, j))));
    return worst;
}

InteriorBlock interior(const LatticeOperator& op, int margin)
{
    const int n = op.size();
    const int len = n - 2 * margin;
    if (len < 1)
        throw std::invalid_argument("window of size " + std::to_string(n) + " too small for combined margin " +
                                    std::to_string(margin));
    const auto& w = op.window();
    return InteriorBlock{w.j_min() + margin,
                         w.j_max() - margin,
                         margin,
                         op.even().block(margin, margin, len, len),
                         op.odd().block(margin, margin, len, len),
                         w.params().rational_delta(),
                         w.params().delta()};
}

// --- builders --------------------------------------------------------------

LatticeOperator build_position(const LatticeWindow& w)
{
    RationalMatrix odd = zeros(w.size());
    for (int i = 0; i < w.size(); ++i)
        odd(i, i) = w.j_at(i);
    return LatticeOperator(w, zeros(w.size()), std::move(odd), 0);
}

LatticeOperator build_central_difference(const LatticeWindow& w)
{
    // 1/(2 delta) = (s_max / 2) delta
    const Rational half_inverse = Rational(w.params().s_max(), 2);
    RationalMatrix odd = zeros(w.size());
    for (int i = 0; i < w.size(); ++i) {
        if (i + 1 < w.size())
            odd(i, i + 1) = half_inverse;
        if (i > 0)
            odd(i, i - 1) = -half_inverse;
    }
    return LatticeOperator(w, zeros(w.size()), std::move(odd), 1);
}

LatticeOperator build_average(const LatticeWindow& w)
{
    RationalMatrix even = zeros(w.size());
    for (int i = 0; i < w.size(); ++i) {
        if (i + 1 < w.size())
            even(i, i + 1) = Rational(1, 2);
        if (i > 0)
            even(i, i - 1) = Rational(1, 2);
    }
    return LatticeOperator(w, std::move(even), zeros(w.size()), 1);
}

LatticeOperator build_shift(const LatticeWindow& w)
{
    RationalMatrix even = zeros(w.size());
    for (int i = 0; i + 1 < w.size(); ++i)
        even(i + 1, i) = 1;
    return LatticeOperator(w, std::move(even), zeros(w.size()), 1);
}

LatticeOperator build_parity(const LatticeWindow& w)
{
    if (!w.is_symmetric())
        throw std::invalid_argument("parity needs a window symmetric about j = 0");
    RationalMatrix even = zeros(w.size());
    for (int i = 0; i < w.size(); ++i)
        even(w.index_of(-w.j_at(i)), i) = 1;
    return LatticeOperator(w, std::move(even), zeros(w.size()), 0);
}

// --- identity residuals ----------------------------------------------------

InteriorBlock interior_commutator_residual(const LatticeOperator& a, const LatticeOperator& b,
                                           const LatticeOperator& expected)
{
    require_same_window(a, b);
    require_same_window(a, expected);
    const int margin = std::max(a.margin() + b.margin(), expected.margin());
    return interior(commutator(a, b) - expected, margin);
}

InteriorBlock casimir_residual_lattice(const LatticeWindow& w)
{
    if (w.size() < 7)
        throw std::invalid_argument("Casimir check needs a window of at least 7 sites");
    const LatticeOperator avg = build_average(w);
    const LatticeOperator diff = build_central_difference(w);
    const LatticeOperator residual = avg * avg - w.params().delta_sq() * (diff * diff) - LatticeOperator::identity(w);
    return interior(residual, residual.margin());
}

std::pair<InteriorBlock, InteriorBlock> parity_conjugation_check(const LatticeWindow& w)
{
    const LatticeOperator parity = build_parity(w); // P^-1 = P
    const LatticeOperator x = build_position(w);
    const LatticeOperator shift = build_shift(w);
    const LatticeOperator x_residual = parity * x * parity + x;
    const LatticeOperator u_residual = parity * shift * parity - shift.adjoint();
    return {interior(x_residual, x_residual.margin()), interior(u_residual, u_residual.margin())};
}

// --- phi representation ----------------------------------------------------

PhiSample lattice_to_phi(const LatticeFunction& f, double phi)
{
    const double delta = f.window.params().delta();
    const double half_period = pi / delta;
    PhiSample sample;
    if (phi < -half_period || phi > half_period) {
        const double period = 2.0 * half_period;
        phi -= period * std::floor((phi + half_period) / period);
        sample.folded = true;
    }
    std::complex<double> acc = 0.0;
    for (int i = 0; i < f.window.size(); ++i) {
        const double angle = -f.window.j_at(i) * delta * phi;
        acc += f.values(i) * std::polar(delta, angle);
    }
    sample.value = acc;
    return sample;
}

std::vector<double> phi_nodes(const DeformationParam& params, int node_count)
{
    if (node_count < 1)
        throw std::invalid_argument("need at least one quadrature node");
    const double delta = params.delta();
    std::vector<double> nodes(static_cast<std::size_t>(node_count));
    for (int m = 0; m < node_count; ++m)
        nodes[static_cast<std::size_t>(m)] = (-pi + 2.0 * pi * m / node_count) / delta;
    return nodes;
}

Eigen::VectorXcd phi_to_lattice(const std::function<std::complex<double>(double)>& f_phi,
                                const LatticeWindow& window, int node_count)
{
    const double delta = window.params().delta();
    const std::vector<double> nodes = phi_nodes(window.params(), node_count);
    std::vector<std::complex<double>> samples;
    samples.reserve(nodes.size());
    for (double phi : nodes)
        samples.push_back(f_phi(phi));
    Eigen::VectorXcd out(window.size());
    for (int i = 0; i < window.size(); ++i) {
        const int j = window.j_at(i);
        std::complex<double> acc = 0.0;
        for (int m = 0; m < node_count; ++m) {
            // j delta phi_m = -j pi + 2 pi j m / M, reduced mod 2 pi before evaluation
            const long long turns = static_cast<long long>(j) * m % node_count;
            const double angle = -j * pi + 2.0 * pi * static_cast<double>(turns) / node_count;
            acc += std::polar(1.0, angle) * samples[static_cast<std::size_t>(m)];
        }
        out(i) = acc / (delta * node_count);
    }
    return out;
}

double lattice_norm_sq(const LatticeFunction& f)
{
    return f.window.params().delta() * f.values.squaredNorm();
}

double phi_norm_sq(const LatticeFunction& f, int node_count)
{
    double acc = 0.0;
    for (double phi : phi_nodes(f.window.params(), node_count))
        acc += std::norm(lattice_to_phi(f, phi).value);
    return acc / (f.window.params().delta() * node_count);
}

SqrtRational overlap_kernel(int j, int j_prime, const DeformationParam& params)
{
    if (j != j_prime)
        return SqrtRational(Rational(0));
    return SqrtRational(Rational(params.s_max()));
}

std::vector<KernelRow> continuum_limit_study(std::span<const std::pair<double, double>> positions,
                                             std::span<const int> s_max_list)
{
    std::vector<KernelRow> rows;
    for (int s_max : s_max_list) {
        const DeformationParam params(s_max);
        const double root = std::sqrt(static_cast<double>(s_max));
        for (auto [x, x_prime] : positions) {
            const double separation = (x - x_prime) * root;
            double value;
            if (separation == 0.0) {
                value = root;
            } else if (const double nearest = std::round(separation); std::abs(separation - nearest) < 1e-9) {
                value = 0.0; // sin(pi n) at integer lattice separation
            } else {
                value = std::sin(pi * separation) / (pi * separation * params.delta());
            }
            rows.push_back({s_max, x, x_prime, separation, value});
        }
    }
    return rows;
}

} // namespace deltafock
