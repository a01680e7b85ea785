#ifndef DELTAFOCK_FOCK_HPP
#define DELTAFOCK_FOCK_HPP

#include "deltafock/deformation.hpp"
#include "deltafock/ladder.hpp"
#include "deltafock/numerics.hpp"
#include "deltafock/polynomial.hpp"

#include <complex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace deltafock {

/// f(phi) = pi^{-1/4} (-i)^phase_power sqrt(coefficient) P(t) (cos delta phi)^{weight_exponent},
/// t = tan(delta phi) / delta.
class FockState {
public:
    FockState(int index, Poly poly, int weight_exponent, int phase_power, SqrtRational coefficient);

    int index() const { return index_; }
    const Poly& poly() const { return poly_; }
    int weight_exponent() const { return weight_exponent_; }
    /// In 0..3.
    int phase_power() const { return phase_power_; }
    const SqrtRational& coefficient() const { return coefficient_; }
    bool is_zero() const { return poly_.is_zero() || coefficient_.is_zero(); }

    /// Wavefunction value; deg(poly) <= weight_exponent keeps it finite everywhere.
    std::complex<double> evaluate(double phi, const DeformationParam& params) const;
    /// Same value with the (-i)^phase_power factor dropped.
    double evaluate_real(double phi, const DeformationParam& params) const;

    FockState scaled(const Rational& factor) const;
    FockState scaled(const SqrtRational& factor) const;
    FockState reindexed(int index) const;

private:
    int index_;
    Poly poly_;
    int weight_exponent_;
    int phase_power_;
    SqrtRational coefficient_;
};

/// a - b when it is a single weighted polynomial term; std::nullopt when the
/// two terms are linearly independent over the rationals (so a != b).
std::optional<FockState> subtract(const FockState& a, const FockState& b);

/// a == b as wavefunctions.
bool same_state(const FockState& a, const FockState& b);

FockState vacuum_state(const DeformationParam& params);
FockState apply(const PolyOperator& op, const FockState& state);
FockState apply_annihilation(const DeformationParam& params, int s, const FockState& state);
FockState apply_creation(const DeformationParam& params, int s, const FockState& state);

/// |0>, ..., |s_max>, each |s+1> = A^dagger(s)|s> / beta(s).
std::vector<FockState> build_states(const DeformationParam& params);

/// A^dagger(s_max)|s_max> / beta(s_max), the state one past the top.
FockState state_past_top(const DeformationParam& params, const FockState& top);

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// (1/2pi) int f_a^* f_b dphi over [-pi/delta, pi/delta], exactly.
ScaledRational inner_product(const FockState& a, const FockState& b, const DeformationParam& params);

enum class GramMethod { exact_integration, recurrence };

class GramMatrix {
public:
    GramMatrix(int s_max, GramMethod method);

    int s_max() const { return s_max_; }
    int dimension() const { return s_max_ + 1; }
    GramMethod method() const { return method_; }
    const ScaledRational& operator()(int s, int s_prime) const { return entries_[index(s, s_prime)]; }
    void set(int s, int s_prime, ScaledRational value) { entries_[index(s, s_prime)] = std::move(value); }
    bool is_set(int s, int s_prime) const { return filled_[index(s, s_prime)]; }

    friend bool operator==(const GramMatrix& a, const GramMatrix& b) { return a.entries_ == b.entries_; }

private:
    std::size_t index(int s, int s_prime) const;

    int s_max_;
    GramMethod method_;
    std::vector<ScaledRational> entries_;
    std::vector<char> filled_;
};

class GramInconsistency : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

GramMatrix gram_exact(const DeformationParam& params);

/// Diagonal from the norm recurrence, off-diagonals propagated along the
/// lower triangle by the reindexing relation; every relation is re-checked on
/// the finished matrix and a conflict throws GramInconsistency.
GramMatrix gram_recurrence(const DeformationParam& params, const ScaledRational& vacuum_norm);

/// sqrt(s_max/pi) (2 s_max - 1)!! / (2 s_max)!!
ScaledRational vacuum_norm_closed(const DeformationParam& params);

/// max over an equispaced grid on |phi| <= 2 of |(cos delta phi)^{s_max} - exp(-phi^2/2)|.
double vacuum_gaussian_deviation(const DeformationParam& params, int grid_points = 401);

/// Three-term diagonal relation of the norms at index s (1 <= s <= s_max - 1),
/// as the exact coefficient of sqrt(s_max/pi).
Surd diagonal_recursion_residual(const DeformationParam& params, const GramMatrix& gram, int s);

/// Residual of the reindexing relation for <s|s'> (0 < s <= s_max, 0 <= s' < s_max).
Surd reindex_gram_residual(const DeformationParam& params, const GramMatrix& gram, int s, int s_prime);

struct StateResidual {
    std::optional<FockState> state; // nullopt: difference not a single term, hence nonzero

    bool is_zero() const { return state && state->is_zero(); }
    std::string describe() const;
};

/// [A(s+1) A^dagger(s) - A^dagger(s-1) A(s) - (1 - delta^2 s)] |s>, 1 <= s <= s_max - 1.
StateResidual casimir_fock_residual(const DeformationParam& params, int s);

/// A(s') through the affine combination of A(s) and A^dagger(s) (s < s_max).
FockState reindex_ladder(const DeformationParam& params, int s, int s_prime, const FockState& state);

/// Coefficients (c_A, c_Adag) with A(s') = c_A A(s) + c_Adag A^dagger(s).
std::pair<Rational, Rational> reindex_coefficients(const DeformationParam& params, int s, int s_prime);

struct NamedResidual {
    std::string label;
    std::string reference;
    bool asserted = true; // false: reported only
    bool zero = true;
    std::string detail;
};

/// Every operator relation applied to the monomials t^k, k <= test_degree.
std::vector<NamedResidual> commutator_suite(const DeformationParam& params, int test_degree);

struct TruncationReport {
    bool top_operators_coincide;        // A(s_max) and A^dagger(s_max) induce one map
    bool top_operator_is_position;      // ... equal to x / sqrt2
    StateResidual state_residual;       // |s_max+1> - |s_max-1>
    Poly hermite_past_top;              // H_{s_max+1} from the recurrence
    bool degree_collapsed;              // deg H_{s_max+1} == s_max - 1
    bool proportional_to_second_below;  // H_{s_max+1} = c H_{s_max-1}
};

TruncationReport truncation_check(const DeformationParam& params);

struct FactorizationResult {
    double max_residual;
    bool product_identity_exact; // mu(s) nu(s-1) = -delta^2 s (s-1) + 2 s
};

/// First-order ladder relations evaluated in floating point at the sample
/// points (|cos delta phi| >= 0.1 required), derivative by complex step.
FactorizationResult factorization_residual(const DeformationParam& params, int s, std::span<const double> sample_points);

} // namespace deltafock

#endif // DELTAFOCK_FOCK_HPP
