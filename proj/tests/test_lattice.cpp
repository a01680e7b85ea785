#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deltafock/lattice.hpp"

#include <numbers>
#include <random>

using namespace deltafock;

namespace {

ExactLatticeFunction sample(const LatticeWindow& w, const Poly& p) { return ExactLatticeFunction::from_polynomial(w, p); }

} // namespace

TEST_CASE("windows")
{
    const DeformationParam p(4);
    CHECK_THROWS_AS(LatticeWindow(2, 2, p), std::invalid_argument);
    CHECK_THROWS_AS(LatticeWindow(0, 3, p), std::invalid_argument);
    const LatticeWindow w = LatticeWindow::centred(9, p);
    CHECK(w.j_min() == -4);
    CHECK(w.j_max() == 4);
    CHECK(w.is_symmetric());
    CHECK_FALSE(LatticeWindow::centred(8, p).is_symmetric());
    CHECK_THROWS_AS(LatticeWindow::on_branch(Rational(1, 2), -3, 3, p), std::invalid_argument);
    CHECK(LatticeWindow::on_branch(Rational(0), -3, 3, p) == LatticeWindow(-3, 3, p));
}

TEST_CASE("position operator")
{
    const DeformationParam p(4); // delta = 1/2
    const LatticeWindow w(-2, 2, p);
    const LatticeOperator x = build_position(w);
    CHECK(x.entry(0, 0) == 0.0);
    CHECK(x.entry(2, 2) == doctest::Approx(1.0));
    CHECK(x.entry(1, 2) == 0.0);
    CHECK(x.margin() == 0);
}

TEST_CASE("central difference on polynomials")
{
    for (int s_max : {1, 2, 3, 9}) {
        const LatticeWindow w = LatticeWindow::centred(11, DeformationParam(s_max));
        const LatticeOperator diff = build_central_difference(w);
        CHECK(diff.margin() == 1);
        CHECK(agree_on(apply(diff, sample(w, Poly{1})), sample(w, Poly{}), 1));
        CHECK(agree_on(apply(diff, sample(w, Poly{0, 1})), sample(w, Poly{1}), 1));
        CHECK(agree_on(apply(diff, sample(w, Poly{0, 0, 1})), sample(w, Poly{0, 2}), 1));
        // the boundary rows feel the truncation
        CHECK_FALSE(agree_on(apply(diff, sample(w, Poly{1})), sample(w, Poly{}), 0));
    }
}

TEST_CASE("average on polynomials")
{
    for (int s_max : {1, 2, 5}) {
        const DeformationParam p(s_max);
        const LatticeWindow w = LatticeWindow::centred(11, p);
        const LatticeOperator avg = build_average(w);
        CHECK(agree_on(apply(avg, sample(w, Poly{1})), sample(w, Poly{1}), 1));
        CHECK(agree_on(apply(avg, sample(w, Poly{0, 1})), sample(w, Poly{0, 1}), 1));
        CHECK(agree_on(apply(avg, sample(w, Poly{0, 0, 1})), sample(w, Poly{p.delta_sq(), 0, 1}), 1));
    }
}

TEST_CASE("deformed Heisenberg relations on every window")
{
    for (int s_max : {1, 2, 4, 9}) {
        const DeformationParam p(s_max);
        for (int size = 7; size <= 41; size += 3) {
            const LatticeWindow w = LatticeWindow::centred(size, p);
            const LatticeOperator x = build_position(w);
            const LatticeOperator diff = build_central_difference(w);
            const LatticeOperator avg = build_average(w);
            CHECK(interior_commutator_residual(diff, x, avg).is_zero());
            CHECK(interior_commutator_residual(avg, x, p.delta_sq() * diff).is_zero());
            CHECK(interior_commutator_residual(avg, diff, LatticeOperator::zero(w)).is_zero());
            CHECK(casimir_residual_lattice(w).is_zero());
            // a wrong right-hand side is detected
            CHECK_FALSE(interior_commutator_residual(diff, x, LatticeOperator::zero(w)).is_zero());
            CHECK(interior_commutator_residual(diff, x, LatticeOperator::zero(w)).max_abs() == doctest::Approx(0.5));
        }
    }
}

TEST_CASE("casimir needs room")
{
    const DeformationParam p(2);
    CHECK_THROWS_AS(casimir_residual_lattice(LatticeWindow::centred(6, p)), std::invalid_argument);
    const LatticeWindow w = LatticeWindow::centred(11, p);
    const LatticeOperator c = build_average(w) * build_average(w) -
                              p.delta_sq() * (build_central_difference(w) * build_central_difference(w));
    CHECK(agree_on(apply(c, sample(w, Poly{0, 1})), sample(w, Poly{0, 1}), 2));
}

TEST_CASE("shift operator")
{
    const DeformationParam p(3);
    const LatticeWindow w = LatticeWindow::centred(13, p);
    const LatticeOperator u = build_shift(w);
    CHECK(u.entry(1, 0) == 1.0);
    CHECK(u.entry(0, 1) == 0.0);
    CHECK(interior(u.adjoint() * u - LatticeOperator::identity(w), 1).is_zero());
    CHECK(interior(Rational(1, 2) * (u + u.adjoint()) - build_average(w), 1).is_zero());
    const LatticeOperator diff_from_u = Rational(-p.s_max(), 2) * (u - u.adjoint()).times_delta();
    CHECK(interior(diff_from_u - build_central_difference(w), 1).is_zero());
}

TEST_CASE("e(2) relation sign")
{
    for (int s_max : {1, 2, 4, 9}) {
        const LatticeWindow w = LatticeWindow::centred(15, DeformationParam(s_max));
        const LatticeOperator x = build_position(w);
        const LatticeOperator u = build_shift(w);
        CHECK(interior_commutator_residual(x, u, u.times_delta()).is_zero());
        CHECK(interior_commutator_residual(x, u.adjoint(), Rational(-1) * u.adjoint().times_delta()).is_zero());
        CHECK_FALSE(interior_commutator_residual(x, u, Rational(-1) * u.times_delta()).is_zero());
    }
}

TEST_CASE("parity conjugation")
{
    const DeformationParam p(2);
    const LatticeWindow w(-4, 4, p);
    const auto [px, pu] = parity_conjugation_check(w);
    CHECK(px.is_zero());
    CHECK(pu.is_zero());
    const LatticeOperator parity = build_parity(w);
    CHECK((parity * parity - LatticeOperator::identity(w)).is_zero());
    CHECK_THROWS_AS(build_parity(LatticeWindow(-3, 4, p)), std::invalid_argument);

    // spectrum of x is symmetric about 0
    const Eigen::MatrixXd x = build_position(w).to_matrix();
    for (int i = 0; i < w.size(); ++i)
        CHECK(x(i, i) == doctest::Approx(-x(w.size() - 1 - i, w.size() - 1 - i)));
}

TEST_CASE("exact zero test with rational delta")
{
    // s_max = 4: delta = 1/2 is rational, so even and odd parts can cancel
    const DeformationParam p(4);
    const LatticeWindow w = LatticeWindow::centred(7, p);
    const LatticeOperator half = Rational(1, 2) * LatticeOperator::identity(w);
    const LatticeOperator delta_one = LatticeOperator::identity(w).times_delta();
    CHECK((half - delta_one).is_zero());
    const LatticeOperator irrational = LatticeOperator::identity(LatticeWindow::centred(7, DeformationParam(2)));
    CHECK_FALSE((Rational(1, 2) * irrational - irrational.times_delta()).is_zero());
}

TEST_CASE("interior needs room")
{
    const LatticeWindow w = LatticeWindow::centred(5, DeformationParam(1));
    CHECK_THROWS_AS(interior(LatticeOperator::identity(w), 3), std::invalid_argument);
    CHECK_NOTHROW(interior(LatticeOperator::identity(w), 2));
}

TEST_CASE("transform of single sites")
{
    const DeformationParam p(4);
    const double delta = p.delta();
    const LatticeWindow w = LatticeWindow::centred(9, p);
    LatticeFunction f{w, Eigen::VectorXcd::Zero(w.size())};
    f.values(w.index_of(0)) = 1.0 / delta;
    for (double phi : {-5.0, 0.0, 1.7, 6.2})
        CHECK(std::abs(lattice_to_phi(f, phi).value - 1.0) < 1e-14);

    LatticeFunction g{w, Eigen::VectorXcd::Zero(w.size())};
    g.values(w.index_of(1)) = 1.0;
    for (double phi : {-3.0, 0.4, 2.5}) {
        const PhiSample s = lattice_to_phi(g, phi);
        CHECK_FALSE(s.folded);
        CHECK(std::abs(s.value - delta * std::polar(1.0, -delta * phi)) < 1e-14);
    }
    const double outside = std::numbers::pi / delta + 0.5;
    const PhiSample folded = lattice_to_phi(g, outside);
    CHECK(folded.folded);
    CHECK(std::abs(folded.value - delta * std::polar(1.0, -delta * outside)) < 1e-12);
}

TEST_CASE("round trip and Parseval")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int s_max : {1, 3, 16}) {
        const LatticeWindow w = LatticeWindow::centred(15, DeformationParam(s_max));
        for (int trial = 0; trial < 20; ++trial) {
            LatticeFunction f{w, Eigen::VectorXcd::Zero(w.size())};
            for (int i = 3; i < w.size() - 3; ++i)
                f.values(i) = {u(rng), u(rng)};
            const int nodes = 2 * w.size();
            const Eigen::VectorXcd back =
                phi_to_lattice([&](double phi) { return lattice_to_phi(f, phi).value; }, w, nodes);
            CHECK((back - f.values).cwiseAbs().maxCoeff() < 1e-12);
            CHECK(std::abs(lattice_norm_sq(f) - phi_norm_sq(f, nodes)) < 1e-12);
        }
    }
    CHECK_THROWS_AS(phi_nodes(DeformationParam(1), 0), std::invalid_argument);
}

TEST_CASE("overlap kernel")
{
    CHECK(overlap_kernel(3, 3, DeformationParam(7)) == SqrtRational(Rational(7)));
    CHECK(overlap_kernel(3, 5, DeformationParam(7)).is_zero());
    CHECK(overlap_kernel(0, 0, DeformationParam(4)).to_double() == 2.0);
}

TEST_CASE("continuum limit study")
{
    const std::vector<std::pair<double, double>> positions{{0.0, 0.0}, {0.0, 1.0}, {0.0, 0.3}};
    const std::vector<int> list{1, 4, 16};
    const auto rows = continuum_limit_study(positions, list);
    REQUIRE(rows.size() == 9);
    for (const KernelRow& row : rows) {
        if (row.x == row.x_prime)
            CHECK(row.value * row.value == doctest::Approx(row.s_max));
        else if (row.x_prime == 1.0)
            CHECK(row.value == 0.0);
    }
    // s_max = 1, separation 0.3: sin(0.3 pi) / (0.3 pi)
    CHECK(rows[2].value == doctest::Approx(std::sin(0.3 * std::numbers::pi) / (0.3 * std::numbers::pi)));
}
