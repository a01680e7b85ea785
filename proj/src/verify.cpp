#include "deltafock/verify.hpp"

#include "deltafock/fock.hpp"
#include "deltafock/hermite.hpp"
#include "deltafock/lattice.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace deltafock {

bool RunReport::passed() const
{
    for (const Check& c : checks)
        if (c.status == CheckStatus::fail)
            return false;
    return true;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"algebra", "fock", "limits", "all"};
    return names;
}

std::string status_word(const Check& check)
{
    switch (check.status) {
    case CheckStatus::pass:
        return check.exact ? "exact-pass" : "pass";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::reported:
        return "reported";
    }
    return "fail";
}

std::string format_line(const Check& check)
{
    std::string line = check.reference + ": " + check.label + " " + status_word(check);
    if (!check.detail.empty())
        line += " -- " + check.detail;
    return line;
}

namespace {

Check exact_check(std::string label, std::string reference, bool ok, std::string detail = {})
{
    return Check{std::move(label), std::move(reference), ok ? CheckStatus::pass : CheckStatus::fail, true,
                 std::move(detail)};
}

Check float_check(std::string label, std::string reference, bool ok, std::string detail)
{
    return Check{std::move(label), std::move(reference), ok ? CheckStatus::pass : CheckStatus::fail, false,
                 std::move(detail)};
}

std::string sci(double v)
{
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

// Accumulates one identity over many cases; keeps the first failure.
struct Tally {
    bool ok = true;
    std::string first_failure;

    void record(bool case_ok, const std::function<std::string()>& where)
    {
        if (!case_ok && ok) {
            ok = false;
            first_failure = where();
        }
    }
};

template <typename F>
RunReport timed(const std::string& name, const DeformationParam& params, F&& body)
{
    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    report.suite = name;
    report.s_max = params.s_max();
    body(report.checks);
    report.milliseconds =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

constexpr int min_window = 7;
constexpr int max_window = 41;

std::string window_tag(const LatticeWindow& w)
{
    return "window [" + std::to_string(w.j_min()) + ", " + std::to_string(w.j_max()) + "]";
}

} // namespace

// --- algebra ---------------------------------------------------------------

RunReport algebra_suite(const DeformationParam& params)
{
    return timed("algebra", params, [&](std::vector<Check>& out) {
        Tally diff_x, avg_x, avg_diff, casimir, e2_plus, e2_minus, from_shift, unitary, parity_x, parity_u;
        const Rational& d2 = params.delta_sq();
        for (int size = min_window; size <= max_window; ++size) {
            const LatticeWindow w = LatticeWindow::centred(size, params);
            const auto where = [&] { return window_tag(w); };
            const LatticeOperator x = build_position(w);
            const LatticeOperator diff = build_central_difference(w);
            const LatticeOperator avg = build_average(w);
            const LatticeOperator u = build_shift(w);
            const LatticeOperator zero = LatticeOperator::zero(w);

            diff_x.record(interior_commutator_residual(diff, x, avg).is_zero(), where);
            avg_x.record(interior_commutator_residual(avg, x, d2 * diff).is_zero(), where);
            avg_diff.record(interior_commutator_residual(avg, diff, zero).is_zero(), where);
            casimir.record(casimir_residual_lattice(w).is_zero(), where);
            e2_plus.record(interior_commutator_residual(x, u, u.times_delta()).is_zero(), where);
            e2_minus.record(interior_commutator_residual(x, u, Rational(-1) * u.times_delta()).is_zero(), where);

            const LatticeOperator avg_from_u = Rational(1, 2) * (u + u.adjoint());
            const LatticeOperator diff_from_u = Rational(-params.s_max(), 2) * (u - u.adjoint()).times_delta();
            from_shift.record(interior(avg_from_u - avg, 1).is_zero() && interior(diff_from_u - diff, 1).is_zero(),
                              where);
            unitary.record(interior(u.adjoint() * u - LatticeOperator::identity(w), 1).is_zero(), where);

            if (w.is_symmetric()) {
                const auto [px, pu] = parity_conjugation_check(w);
                parity_x.record(px.is_zero(), where);
                parity_u.record(pu.is_zero(), where);
            }
        }
        const std::string range = "windows of size " + std::to_string(min_window) + ".." + std::to_string(max_window);
        auto emit = [&](const char* label, const char* ref, const Tally& t) {
            out.push_back(exact_check(label, ref, t.ok, t.ok ? range : t.first_failure));
        };
        emit("[Delta,x] = I", "Eq. (2.4)", diff_x);
        emit("[I,x] = delta^2 Delta", "Eq. (2.4)", avg_x);
        emit("[I,Delta] = 0", "Eq. (2.4)", avg_diff);
        emit("I^2 - delta^2 Delta^2 = 1", "Eq. (2.7)", casimir);
        emit("[x,U] = delta U", "Eq. (2.8)", e2_plus);
        out.push_back(Check{"[x,U] = -delta U", "Eq. (2.8)", CheckStatus::reported, true,
                            e2_minus.ok ? "zero on " + range
                                        : "nonzero (residual 2 delta U); U raises j, so the sign is +delta"});
        emit("I = (U + U^dagger)/2, Delta = -(U - U^dagger)/(2 delta)", "Eq. (2.9)", from_shift);
        emit("U^dagger U = 1", "Eq. (2.11)", unitary);
        emit("P x P^-1 = -x", "Eq. (A.7)", parity_x);
        emit("P U P^-1 = U^dagger", "Eq. (A.8)", parity_u);

        bool kernel_ok = overlap_kernel(3, 3, params) == SqrtRational(Rational(params.s_max()));
        for (int j = -3; j <= 3; ++j)
            for (int jp = -3; jp <= 3; ++jp)
                if (j != jp)
                    kernel_ok = kernel_ok && overlap_kernel(j, jp, params).is_zero();
        out.push_back(exact_check("<j delta|j' delta> = delta_{jj'} / delta", "Eq. (2.23)", kernel_ok));
    });
}

// --- fock ------------------------------------------------------------------

namespace {

std::vector<double> factorization_points(const DeformationParam& params)
{
    // |delta phi| <= 0.45 pi keeps |cos delta phi| >= 0.15
    std::vector<double> points;
    const double reach = 0.45 * std::numbers::pi / params.delta();
    for (int m = 0; m < 10; ++m)
        points.push_back(reach * (-1.0 + 2.0 * m / 9.0));
    return points;
}

std::string ket(int s) { return "|" + std::to_string(s) + "⟩"; }

} // namespace

RunReport fock_suite(const DeformationParam& params)
{
    return timed("fock", params, [&](std::vector<Check>& out) {
        const int n = params.s_max();
        const auto states = build_states(params);
        auto state = [&](int s) -> const FockState& { return states[static_cast<std::size_t>(s)]; };

        Tally lower, raise;
        for (int s = 0; s <= n; ++s) {
            const auto coeff = ladder_coefficients(params, s);
            const FockState down = apply_annihilation(params, s, state(s));
            lower.record(s == 0 ? down.is_zero() : same_state(down, state(s - 1).scaled(coeff.alpha)),
                         [&] { return "s=" + std::to_string(s); });
            if (s < n)
                raise.record(same_state(apply_creation(params, s, state(s)), state(s + 1).scaled(coeff.beta)),
                             [&] { return "s=" + std::to_string(s); });
        }
        out.push_back(exact_check("A(s)|s⟩ = alpha(s)|s-1⟩", "Eq. (3.7)", lower.ok, lower.first_failure));
        out.push_back(exact_check("A^dagger(s)|s⟩ = beta(s)|s+1⟩", "Eq. (3.7)", raise.ok, raise.first_failure));

        Tally casimir;
        for (int s = 1; s <= n - 1; ++s)
            casimir.record(casimir_fock_residual(params, s).is_zero(), [&] { return "s=" + std::to_string(s); });
        out.push_back(exact_check("[A(s+1)A^dagger(s) - A^dagger(s-1)A(s)]|s⟩ = (1 - delta^2 s)|s⟩", "Eq. (3.3)",
                                  casimir.ok, n < 2 ? "no interior index at s_max = 1" : casimir.first_failure));

        const TruncationReport trunc = truncation_check(params);
        out.push_back(exact_check("A(s_max) = A^dagger(s_max) = x/sqrt2", "Eq. (3.10)",
                                  trunc.top_operators_coincide && trunc.top_operator_is_position));
        out.push_back(exact_check(ket(n + 1) + " = " + ket(n - 1), "Eq. (3.11)", trunc.state_residual.is_zero(),
                                  trunc.state_residual.is_zero() ? "" : trunc.state_residual.describe()));
        out.push_back(exact_check("deg H_{s_max+1} = s_max - 1 and H_{s_max+1} = c H_{s_max-1}", "Eq. (4.19)",
                                  trunc.degree_collapsed && trunc.proportional_to_second_below));

        Tally reindex;
        for (int s = 0; s < n; ++s)
            for (int sp = 0; sp <= n; ++sp)
                for (int b = 0; b <= n; ++b)
                    reindex.record(same_state(reindex_ladder(params, s, sp, state(b)),
                                              apply_annihilation(params, sp, state(b))),
                                   [&] { return "s=" + std::to_string(s) + ", s'=" + std::to_string(sp); });
        out.push_back(exact_check("A(s') from A(s), A^dagger(s) on every |b⟩", "Eq. (3.12a)", reindex.ok,
                                  reindex.first_failure));

        for (const NamedResidual& r : commutator_suite(params, n)) {
            Check c{r.label, r.reference, CheckStatus::pass, true, r.detail};
            if (!r.asserted)
                c.status = CheckStatus::reported;
            else if (!r.zero)
                c.status = CheckStatus::fail;
            out.push_back(std::move(c));
        }

        // <a|A^dagger(s) b> = <A(s) a|b>; a = b = s_max with s < s_max has a divergent integrand
        Tally adjoint;
        for (int s = 0; s <= n; ++s)
            for (int a = 0; a <= n; ++a)
                for (int b = 0; b <= n; ++b) {
                    if (a == n && b == n && s < n)
                        continue;
                    const auto where = [&] {
                        return "s=" + std::to_string(s) + ", a=" + std::to_string(a) + ", b=" + std::to_string(b);
                    };
                    try {
                        const ScaledRational lhs =
                            inner_product(state(a), apply(PolyOperator::creation(params, s), state(b)), params);
                        const ScaledRational rhs =
                            inner_product(apply(PolyOperator::annihilation(params, s), state(a)), state(b), params);
                        adjoint.record(lhs == rhs, where);
                    } catch (const DomainError&) {
                        adjoint.record(false, where);
                    }
                }
        out.push_back(exact_check("<a|A^dagger(s) b> = <A(s) a|b>", "Eq. (3.1)", adjoint.ok,
                                  adjoint.ok ? "all s, a, b except a = b = s_max with s < s_max (divergent)"
                                             : adjoint.first_failure));

        Tally hermite;
        for (int s = 0; s <= n; ++s)
            hermite.record(state(s).poly() == hermite_delta_rec(params, s) && state(s).phase_power() == s % 4,
                           [&] { return "s=" + std::to_string(s); });
        out.push_back(exact_check("f_s = (-i)^s c_s H_s(tan(delta phi)/delta) cos^{s_max}", "Eq. (4.18)", hermite.ok,
                                  hermite.first_failure));

        const GramMatrix exact = gram_exact(params);
        const ScaledRational closed = vacuum_norm_closed(params);
        out.push_back(exact_check("<0|0> = sqrt(s_max/pi) (2 s_max - 1)!!/(2 s_max)!!", "Eq. (4.23)",
                                  exact(0, 0) == closed, "<0|0> = " + exact(0, 0).coefficient().to_string() +
                                                             " sqrt(s_max/pi)"));
        try {
            const GramMatrix rec = gram_recurrence(params, closed);
            out.push_back(exact_check("Gram recurrence = exact integration", "Eqs. (4.5)-(4.6)", rec == exact));
        } catch (const GramInconsistency& e) {
            out.push_back(exact_check("Gram recurrence = exact integration", "Eqs. (4.5)-(4.6)", false, e.what()));
        }
        Tally adjacent, parity;
        for (int s = 0; s <= n; ++s)
            for (int sp = 0; sp <= n; ++sp) {
                const auto where = [&] { return "(" + std::to_string(s) + ", " + std::to_string(sp) + ")"; };
                if (std::abs(s - sp) == 1)
                    adjacent.record(exact(s, sp).is_zero(), where);
                if ((s + sp) % 2 == 1)
                    parity.record(exact(s, sp).is_zero(), where);
            }
        out.push_back(exact_check("<s|s+1> = 0", "Eq. (4.7)", adjacent.ok, adjacent.first_failure));
        out.push_back(exact_check("<s|s'> = 0 for s + s' odd", "Eq. (4.8)", parity.ok, parity.first_failure));
        Tally diagonal;
        for (int s = 1; s <= n - 1; ++s)
            diagonal.record(diagonal_recursion_residual(params, exact, s).is_zero(),
                            [&] { return "s=" + std::to_string(s); });
        out.push_back(exact_check("diagonal three-term relation of <s|s>", "Eq. (4.4)", diagonal.ok,
                                  n < 2 ? "no interior index at s_max = 1" : diagonal.first_failure));

        const auto points = factorization_points(params);
        double worst = 0.0;
        bool product = true;
        for (int s = 0; s <= n; ++s) {
            const FactorizationResult f = factorization_residual(params, s, points);
            worst = std::max(worst, f.max_residual);
            product = product && f.product_identity_exact;
        }
        out.push_back(float_check("first-order ladder relations at 10 points", "Eq. (4.9)", worst <= 1e-12,
                                  "max residual " + sci(worst) + " (tol 1e-12)"));
        out.push_back(exact_check("alpha(s) beta(s-1) = s - (delta^2/2) s (s-1)", "Eqs. (3.5), (4.13)", product));
    });
}

// --- limits ----------------------------------------------------------------

namespace {

bool ratios_within(const std::vector<double>& values, double lo, double hi, std::string& detail)
{
    bool ok = true;
    std::ostringstream os;
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        const double r = values[i] / values[i + 1];
        ok = ok && values[i + 1] < values[i] && r >= lo && r <= hi;
        os << (i ? ", " : "ratios ") << r;
    }
    detail = os.str();
    return ok;
}

} // namespace

RunReport limits_suite(const DeformationParam& params)
{
    return timed("limits", params, [&](std::vector<Check>& out) {
        {
            std::vector<double> dev;
            for (int s_max : {4, 16, 64, 256})
                dev.push_back(vacuum_gaussian_deviation(DeformationParam(s_max)));
            std::string detail;
            const bool ok = ratios_within(dev, 3.0, 5.0, detail);
            out.push_back(float_check("(cos delta phi)^{s_max} -> exp(-phi^2/2) on |phi| <= 2, s_max = 4, 16, 64, 256",
                                      "Eq. (4.15)", ok, detail));
        }
        {
            const std::vector<int> list{100, 400};
            std::vector<double> err;
            for (const auto& row : hermite_limit_table(4, list))
                err.push_back(row.error);
            std::string detail;
            const bool ok = ratios_within(err, 3.0, 5.0, detail);
            out.push_back(float_check("H_4 coefficient error, s_max = 100, 400", "Eq. (4.21)", ok, detail));
        }
        {
            bool ok = true;
            std::string worst;
            for (int s_max = 8; s_max <= 128; ++s_max) {
                const DeformationParam p(s_max);
                const double value = vacuum_norm_closed(p).to_double() * std::numbers::pi;
                if (!(std::abs(value - 1.0) < 1.0 / s_max) && ok) {
                    ok = false;
                    worst = "s_max=" + std::to_string(s_max) + ": pi <0|0> = " + sci(value);
                }
            }
            out.push_back(float_check("|pi <0|0> - 1| < 1/s_max, s_max = 8..128", "Eq. (4.23)", ok, worst));
        }
        {
            const std::vector<std::pair<double, double>> positions{{0.0, 0.0}, {0.0, 1.0}, {0.5, 1.5}};
            const std::vector<int> list{1, 4, 16, 64};
            bool ok = true;
            for (const KernelRow& row : continuum_limit_study(positions, list)) {
                if (row.x == row.x_prime)
                    ok = ok && row.value == std::sqrt(static_cast<double>(row.s_max));
                else
                    ok = ok && row.value == 0.0;
            }
            out.push_back(float_check("kernel sqrt(s_max) at x = x', 0 at integer index separation", "Eq. (2.22)", ok,
                                      "s_max = 1, 4, 16, 64"));
        }
        {
            std::mt19937_64 rng(20061105u + static_cast<unsigned>(params.s_max()));
            std::uniform_real_distribution<double> value(-1.0, 1.0);
            std::uniform_int_distribution<int> width(0, 8);
            const LatticeWindow w = LatticeWindow::centred(17, params);
            const int nodes = 2 * w.size();
            double round_trip = 0.0;
            double parseval = 0.0;
            for (int trial = 0; trial < 50; ++trial) {
                LatticeFunction f{w, Eigen::VectorXcd::Zero(w.size())};
                const int half = width(rng);
                for (int i = 0; i < w.size(); ++i)
                    if (std::abs(w.j_at(i)) <= half)
                        f.values(i) = {value(rng), value(rng)};
                const Eigen::VectorXcd back =
                    phi_to_lattice([&](double phi) { return lattice_to_phi(f, phi).value; }, w, nodes);
                round_trip = std::max(round_trip, (back - f.values).cwiseAbs().maxCoeff());
                parseval = std::max(parseval, std::abs(lattice_norm_sq(f) - phi_norm_sq(f, nodes)));
            }
            out.push_back(float_check("lattice -> phi -> lattice, 50 random functions", "Eqs. (2.13), (2.21)",
                                      round_trip <= 1e-12, "max error " + sci(round_trip) + " (tol 1e-12)"));
            out.push_back(float_check("sum delta |f|^2 = (1/2pi) int |f(phi)|^2", "Eqs. (2.14), (2.19)",
                                      parseval <= 1e-12, "max error " + sci(parseval) + " (tol 1e-12)"));
        }
    });
}

RunReport run_suite(const std::string& suite, const DeformationParam& params)
{
    if (suite == "algebra")
        return algebra_suite(params);
    if (suite == "fock")
        return fock_suite(params);
    if (suite == "limits")
        return limits_suite(params);
    if (suite == "all") {
        const auto start = std::chrono::steady_clock::now();
        RunReport all;
        all.suite = "all";
        all.s_max = params.s_max();
        for (const RunReport& part : {algebra_suite(params), fock_suite(params), limits_suite(params)})
            all.checks.insert(all.checks.end(), part.checks.begin(), part.checks.end());
        all.milliseconds = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return all;
    }
    throw std::invalid_argument("unknown suite '" + suite + "' (expected algebra, fock, limits or all)");
}

} // namespace deltafock
