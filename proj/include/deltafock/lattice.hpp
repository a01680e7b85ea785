#ifndef DELTAFOCK_LATTICE_HPP
#define DELTAFOCK_LATTICE_HPP

#include "deltafock/deformation.hpp"
#include "deltafock/polynomial.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace deltafock {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

/// Finite window j_min..j_max of the integer lattice x = j*delta.
class LatticeWindow {
public:
    LatticeWindow(int j_min, int j_max, DeformationParam params);

    /// Window of the given size, centred on j = 0 (left-biased when even).
    static LatticeWindow centred(int size, DeformationParam params);

    /// Lattice generated from the vacuum label j0; only the integer branch
    /// j0 = 0 is supported, j0 = 1/2 is rejected.
    static LatticeWindow on_branch(const Rational& j0, int j_min, int j_max, DeformationParam params);

    int j_min() const { return j_min_; }
    int j_max() const { return j_max_; }
    int size() const { return j_max_ - j_min_ + 1; }
    int j_at(int index) const { return j_min_ + index; }
    int index_of(int j) const { return j - j_min_; }
    bool contains(int j) const { return j >= j_min_ && j <= j_max_; }
    bool is_symmetric() const { return j_min_ == -j_max_; }
    const DeformationParam& params() const { return params_; }

    friend bool operator==(const LatticeWindow&, const LatticeWindow&) = default;

private:
    int j_min_;
    int j_max_;
    DeformationParam params_;
};

/// Dense operator on a lattice window with entries even + delta * odd, both
/// rational, so delta never leaves exact arithmetic (delta^2 = 1/s_max).
///
/// margin counts the boundary rows on each side whose entries feel the
/// truncation; identity checks only look at the interior.
class LatticeOperator {
public:
    LatticeOperator(LatticeWindow window, RationalMatrix even, RationalMatrix odd, int margin);

    static LatticeOperator zero(const LatticeWindow& window, int margin = 0);
    static LatticeOperator identity(const LatticeWindow& window);

    const LatticeWindow& window() const { return window_; }
    const RationalMatrix& even() const { return even_; }
    const RationalMatrix& odd() const { return odd_; }
    int margin() const { return margin_; }
    int size() const { return window_.size(); }

    /// Floating entries at j-positions (row, col).
    double entry(int j_row, int j_col) const;
    Eigen::MatrixXd to_matrix() const;

    LatticeOperator adjoint() const;
    LatticeOperator times_delta() const;
    bool is_zero() const;

    friend LatticeOperator operator+(const LatticeOperator& a, const LatticeOperator& b);
    friend LatticeOperator operator-(const LatticeOperator& a, const LatticeOperator& b);
    friend LatticeOperator operator*(const LatticeOperator& a, const LatticeOperator& b);
    friend LatticeOperator operator*(const Rational& factor, const LatticeOperator& a);

private:
    LatticeWindow window_;
    RationalMatrix even_;
    RationalMatrix odd_;
    int margin_;
};

LatticeOperator commutator(const LatticeOperator& a, const LatticeOperator& b);

/// Lattice function with exact values even + delta * odd at each site.
struct ExactLatticeFunction {
    LatticeWindow window;
    RationalVector even;
    RationalVector odd;

    /// Samples p(j*delta) exactly.
    static ExactLatticeFunction from_polynomial(const LatticeWindow& window, const Poly& p);
    double value_at(int j) const;
};

ExactLatticeFunction apply(const LatticeOperator& op, const ExactLatticeFunction& f);

/// Rows/columns of a residual at distance >= margin from the window edge.
struct InteriorBlock {
    int first_j;
    int last_j;
    int margin;
    RationalMatrix even;
    RationalMatrix odd;
    std::optional<Rational> rational_delta;
    double delta;

    bool is_zero() const;
    /// Largest |entry| in floating point; 0 exactly when is_zero().
    double max_abs() const;
};

InteriorBlock interior(const LatticeOperator& op, int margin);

/// True when rows j_first..j_last of f and g coincide exactly.
bool agree_on(const ExactLatticeFunction& f, const ExactLatticeFunction& g, int margin);

LatticeOperator build_position(const LatticeWindow& w);
LatticeOperator build_central_difference(const LatticeWindow& w);
LatticeOperator build_average(const LatticeWindow& w);
/// U with U e_j = e_{j+1}; its adjoint lowers.
LatticeOperator build_shift(const LatticeWindow& w);
/// P e_j = e_{-j}; symmetric windows only.
LatticeOperator build_parity(const LatticeWindow& w);

/// (AB - BA - expected) on the block at distance >= margin(A) + margin(B)
/// (and >= margin(expected)) from the boundary.
InteriorBlock interior_commutator_residual(const LatticeOperator& a, const LatticeOperator& b,
                                           const LatticeOperator& expected);

/// I^2 - delta^2 Delta^2 - 1 on the interior; needs a window of size >= 7.
InteriorBlock casimir_residual_lattice(const LatticeWindow& w);

/// (P x P^-1 + x, P U P^-1 - U^dagger) on the interior of a symmetric window.
std::pair<InteriorBlock, InteriorBlock> parity_conjugation_check(const LatticeWindow& w);

// --- phi representation ----------------------------------------------------

struct LatticeFunction {
    LatticeWindow window;
    Eigen::VectorXcd values;
};

struct PhiSample {
    std::complex<double> value;
    bool folded = false;
};

/// f(phi) = sum_j delta e^{-i j delta phi} f(j delta). Arguments outside
/// [-pi/delta, pi/delta] are folded back by periodicity and flagged.
PhiSample lattice_to_phi(const LatticeFunction& f, double phi);

/// Equispaced phi nodes -pi/delta + m (2 pi / (delta M)), m = 0..M-1.
std::vector<double> phi_nodes(const DeformationParam& params, int node_count);

/// Trapezoidal inversion f(j delta) = (1/2pi) int e^{i j delta phi} f(phi).
Eigen::VectorXcd phi_to_lattice(const std::function<std::complex<double>(double)>& f_phi,
                                const LatticeWindow& window, int node_count);

/// sum_j delta |f(j delta)|^2
double lattice_norm_sq(const LatticeFunction& f);
/// (1/2pi) int |f(phi)|^2 dphi by the trapezoidal rule.
double phi_norm_sq(const LatticeFunction& f, int node_count);

/// <j delta | j' delta> = delta_{jj'} / delta.
SqrtRational overlap_kernel(int j, int j_prime, const DeformationParam& params);

struct KernelRow {
    int s_max;
    double x;
    double x_prime;
    double index_separation; // (x - x') sqrt(s_max)
    double value;
};

/// sin(pi (j - j')) / (pi (j - j') delta) at fixed physical positions x = j delta.
std::vector<KernelRow> continuum_limit_study(std::span<const std::pair<double, double>> positions,
                                             std::span<const int> s_max_list);

} // namespace deltafock

#endif // DELTAFOCK_LATTICE_HPP
