#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deltafock/fock.hpp"
#include "deltafock/hermite.hpp"
#include "oracles.hpp"

using namespace deltafock;

namespace {

const double inv_root_pi = 1.0 / std::sqrt(std::numbers::pi);

std::vector<double> safe_points(const DeformationParam& p)
{
    std::vector<double> pts;
    for (int m = 0; m < 10; ++m)
        pts.push_back(0.45 * std::numbers::pi / p.delta() * (-1.0 + 2.0 * m / 9.0));
    return pts;
}

} // namespace

TEST_CASE("ladder coefficients")
{
    for (int s_max : {1, 2, 5}) {
        const DeformationParam p(s_max);
        CHECK(ladder_coefficients(p, 0).alpha.is_zero());
        CHECK(ladder_coefficients(p, 0).beta.radicand() == 1);
        CHECK(ladder_coefficients(p, 1).alpha.radicand() == 1);
    }
    const auto c = ladder_coefficients(DeformationParam(2), 2);
    CHECK(c.alpha.radicand() == Rational(3, 2));
    CHECK(c.beta.radicand() == Rational(3, 2));
    CHECK_THROWS_AS(ladder_coefficients(DeformationParam(2), 3), std::out_of_range);
    CHECK_THROWS_AS(ladder_coefficients(DeformationParam(2), -1), std::out_of_range);

    for (int s_max = 1; s_max <= 20; ++s_max) {
        const DeformationParam p(s_max);
        for (int s = 1; s <= s_max; ++s) {
            const SqrtRational prod = ladder_coefficients(p, s).alpha * ladder_coefficients(p, s - 1).beta;
            const Rational expected = Rational(s) - p.delta_sq() / 2 * s * (s - 1);
            CHECK(prod.radicand() == expected * expected);
        }
    }
}

TEST_CASE("vacuum")
{
    const DeformationParam p(1);
    const FockState vac = vacuum_state(p);
    CHECK(vac.poly() == Poly{1});
    CHECK(vac.phase_power() == 0);
    CHECK(vac.poly().degree() == 0);
    for (double phi : {0.0, 0.7, -2.0})
        CHECK(vac.evaluate_real(phi, p) == doctest::Approx(std::pow(std::numbers::pi, -0.25) * std::cos(phi)));
    CHECK(apply_annihilation(p, 0, vac).is_zero());
}

TEST_CASE("ladder action on generated states")
{
    const DeformationParam p1(1);
    const auto s1 = build_states(p1);
    CHECK(same_state(apply_annihilation(p1, 1, s1[1]), s1[0]));
    CHECK(s1[1].poly() == Poly{0, 2});
    CHECK(s1[1].coefficient().radicand() == Rational(1, 2));
    CHECK(same_state(apply_creation(p1, 0, s1[0]), s1[1]));

    const DeformationParam p2(2);
    const auto s2 = build_states(p2);
    const SqrtRational a2 = ladder_coefficients(p2, 2).alpha;
    CHECK(same_state(apply_annihilation(p2, 2, s2[2]), s2[1].scaled(a2)));
    CHECK_FALSE(same_state(apply_annihilation(p2, 2, s2[2]), s2[1]));

    // A(s+1) A^dagger(s) |s> = beta(s) alpha(s+1) |s>
    for (int s_max = 2; s_max <= 6; ++s_max) {
        const DeformationParam p(s_max);
        const auto st = build_states(p);
        for (int s = 0; s < s_max; ++s) {
            const auto here = ladder_coefficients(p, s);
            const auto next = ladder_coefficients(p, s + 1);
            CHECK(same_state(apply_annihilation(p, s + 1, apply_creation(p, s, st[s])),
                             st[s].scaled(here.beta * next.alpha)));
            if (s >= 1)
                CHECK(same_state(apply_creation(p, s - 1, apply_annihilation(p, s, st[s])),
                                 st[s].scaled(here.alpha * ladder_coefficients(p, s - 1).beta)));
        }
    }
}

TEST_CASE("weight mismatch is rejected")
{
    const FockState foreign = vacuum_state(DeformationParam(3));
    CHECK_THROWS_AS(apply_annihilation(DeformationParam(2), 1, foreign), std::invalid_argument);
    CHECK_THROWS_AS(apply_creation(DeformationParam(2), 3, vacuum_state(DeformationParam(2))), std::out_of_range);
    CHECK_THROWS_AS(inner_product(foreign, vacuum_state(DeformationParam(2)), DeformationParam(2)),
                    std::invalid_argument);
}

TEST_CASE("generated states are deformed Hermite wavefunctions")
{
    for (int s_max = 1; s_max <= 10; ++s_max) {
        const DeformationParam p(s_max);
        const auto st = build_states(p);
        REQUIRE(st.size() == static_cast<std::size_t>(s_max + 1));
        Rational radicand = 1;
        for (int s = 0; s <= s_max; ++s) {
            CHECK(st[s].poly() == hermite_delta_rec(p, s));
            CHECK(st[s].phase_power() == s % 4);
            CHECK(st[s].weight_exponent() == s_max);
            CHECK(st[s].coefficient().radicand() == radicand);
            if (s < s_max)
                radicand /= 2 * ladder_coefficients(p, s).beta.radicand();
        }
    }
}

TEST_CASE("inner product values")
{
    const DeformationParam p1(1);
    const auto st = build_states(p1);
    CHECK(inner_product(st[0], st[0], p1) == ScaledRational(Surd(Rational(1, 2)), 1));
    CHECK(inner_product(st[1], st[1], p1) == ScaledRational(Surd(Rational(1)), 1));
    CHECK(inner_product(st[0], st[1], p1).is_zero());
    CHECK(inner_product(st[0], st[0], p1).to_double() == doctest::Approx(0.5 * inv_root_pi));

    // <0|2> at s_max = 2 is irrational
    const DeformationParam p2(2);
    const auto st2 = build_states(p2);
    const ScaledRational g02 = inner_product(st2[0], st2[2], p2);
    CHECK(g02.coefficient() == Surd(Rational(1, 8), SqrtRational(Rational(2, 3))));
    CHECK_FALSE(g02.coefficient().is_rational());
}

TEST_CASE("inner products against quadrature of the wavefunctions")
{
    for (int s_max : {1, 2, 3, 5, 8}) {
        const DeformationParam p(s_max);
        const auto st = build_states(p);
        for (int a = 0; a <= s_max; ++a)
            for (int b = 0; b <= s_max; ++b) {
                const std::complex<double> numeric = oracle::overlap(st[a], st[b], p);
                CHECK(std::abs(numeric.imag()) < 1e-12);
                CHECK(std::abs(numeric.real() - inner_product(st[a], st[b], p).to_double()) < 1e-12);
            }
    }
}

TEST_CASE("integrand outside the closed family")
{
    const DeformationParam p(2);
    const FockState big(0, Poly::monomial(6), 2, 0, SqrtRational(Rational(1)));
    CHECK_THROWS_AS(inner_product(big, vacuum_state(p), p), DomainError);
    const FockState odd_phase(0, Poly{0, 1}, 2, 1, SqrtRational(Rational(1)));
    CHECK_THROWS_AS(inner_product(vacuum_state(p), FockState(0, Poly{1, 1}, 2, 1, SqrtRational(Rational(1))), p),
                    DomainError);
    CHECK(inner_product(vacuum_state(p), odd_phase, p).is_zero());
}

TEST_CASE("Gram matrix by integration")
{
    const GramMatrix g = gram_exact(DeformationParam(1));
    CHECK(g(0, 0).coefficient() == Surd(Rational(1, 2)));
    CHECK(g(1, 1).coefficient() == Surd(Rational(1)));
    CHECK(g(0, 1).is_zero());
    CHECK(g(1, 0).is_zero());
    CHECK_THROWS_AS(g(2, 0), std::out_of_range);

    for (int s_max = 1; s_max <= 12; ++s_max) {
        const DeformationParam p(s_max);
        const GramMatrix ge = gram_exact(p);
        CHECK(ge(0, 0) == vacuum_norm_closed(p));
        for (int s = 0; s <= s_max; ++s) {
            CHECK(ge(s, s).coefficient().sign() > 0);
            for (int sp = 0; sp <= s_max; ++sp) {
                CHECK(ge(s, sp) == ge(sp, s));
                if ((s + sp) % 2 == 1)
                    CHECK(ge(s, sp).is_zero());
            }
        }
        for (int s = 1; s <= s_max - 1; ++s)
            CHECK(diagonal_recursion_residual(p, ge, s).is_zero());
        for (int s = 1; s <= s_max; ++s)
            for (int sp = 0; sp < s_max; ++sp)
                CHECK(reindex_gram_residual(p, ge, s, sp).is_zero());
    }
}

TEST_CASE("Gram matrix by recurrence")
{
    const DeformationParam p2(2);
    const GramMatrix r2 = gram_recurrence(p2, vacuum_norm_closed(p2));
    CHECK(r2(1, 1).coefficient() == Surd(Rational(4, 3)) * r2(0, 0).coefficient());
    for (int s_max = 1; s_max <= 12; ++s_max) {
        const DeformationParam p(s_max);
        const GramMatrix r = gram_recurrence(p, vacuum_norm_closed(p));
        CHECK(r.method() == GramMethod::recurrence);
        CHECK(r == gram_exact(p));
        CHECK(r(1, 1).coefficient() == Surd(Rational(2) / (Rational(2) - p.delta_sq())) * r(0, 0).coefficient());
    }
    CHECK_THROWS_AS(gram_recurrence(p2, ScaledRational(Surd(), 2)), std::invalid_argument);
    CHECK_THROWS_AS(gram_recurrence(p2, ScaledRational(Surd(Rational(-1)), 2)), std::invalid_argument);
}

TEST_CASE("a corrupted Gram entry is caught")
{
    const DeformationParam p(4);
    GramMatrix g = gram_exact(p);
    g.set(2, 2, ScaledRational(g(2, 2).coefficient() + Surd(Rational(1, 1000)), 4));
    CHECK_FALSE(diagonal_recursion_residual(p, g, 2).is_zero());
}

TEST_CASE("vacuum norm closed form")
{
    CHECK(vacuum_norm_closed(DeformationParam(1)).coefficient() == Surd(Rational(1, 2)));
    CHECK(vacuum_norm_closed(DeformationParam(2)).coefficient() == Surd(Rational(3, 8)));
    for (int s_max = 8; s_max <= 128; s_max *= 2) {
        const double v = std::numbers::pi * vacuum_norm_closed(DeformationParam(s_max)).to_double();
        CHECK(std::abs(v - 1.0) < 1.0 / s_max);
    }
    // against quadrature of f_0^2
    for (int s_max : {1, 3, 7}) {
        const DeformationParam p(s_max);
        const FockState v = vacuum_state(p);
        CHECK(oracle::overlap(v, v, p).real() == doctest::Approx(vacuum_norm_closed(p).to_double()).epsilon(1e-12));
    }
}

TEST_CASE("Casimir on states")
{
    CHECK(casimir_fock_residual(DeformationParam(2), 1).is_zero());
    for (int s_max = 2; s_max <= 8; ++s_max)
        for (int s = 1; s <= s_max - 1; ++s)
            CHECK(casimir_fock_residual(DeformationParam(s_max), s).is_zero());
    CHECK_THROWS_AS(casimir_fock_residual(DeformationParam(3), 0), std::out_of_range);
    CHECK_THROWS_AS(casimir_fock_residual(DeformationParam(3), 3), std::out_of_range);
}

TEST_CASE("operator suite")
{
    const DeformationParam p(2);
    const Rational d = p.delta_sq();
    const Poly t2 = Poly::monomial(2);
    const PolyOperator comm = commutator(PolyOperator::annihilation(p, 1), PolyOperator::creation(p, 2));
    // unit power 2 means a factor (i/sqrt2)^2 = -1/2
    CHECK(comm.at_unit(0)(t2) == Poly{1, 0, d} * t2 * (Rational(1) - d * 3 / 2));
    const PolyOperator a00 = commutator(PolyOperator::annihilation(p, 0), PolyOperator::creation(p, 0));
    CHECK(a00.at_unit(0)(Poly{1}) == Poly{1, 0, d});
    const PolyOperator aa = commutator(PolyOperator::annihilation(p, 0), PolyOperator::annihilation(p, 2));
    CHECK(aa.at_unit(0)(Poly{1}) == Poly{1, 0, d} * d);

    for (int s_max = 1; s_max <= 6; ++s_max)
        for (const NamedResidual& r : commutator_suite(DeformationParam(s_max), s_max)) {
            CAPTURE(r.reference);
            CAPTURE(r.label);
            CAPTURE(r.detail);
            if (r.asserted)
                CHECK(r.zero);
        }
    CHECK_THROWS_AS(commutator_suite(p, 3), std::invalid_argument);
}

TEST_CASE("printed Casimir form versus squared factor")
{
    const DeformationParam p(3);
    for (const NamedResidual& r : commutator_suite(p, 3))
        if (r.label.find("[A(s)-A^dagger(s)]^2") != std::string::npos) {
            if (r.asserted)
                CHECK(r.zero);
            else
                CHECK_FALSE(r.zero);
        }
}

TEST_CASE("mixed unit powers do not combine")
{
    const DeformationParam p(2);
    CHECK_THROWS_AS(PolyOperator::annihilation(p, 0) + PolyOperator::identity(), std::domain_error);
}

TEST_CASE("reindexing")
{
    const DeformationParam p(2);
    const auto [keep, mix] = reindex_coefficients(p, 0, 2);
    CHECK(keep == Rational(1, 2));
    CHECK(mix == Rational(1, 2));
    const auto same = reindex_coefficients(p, 1, 1);
    CHECK(same.first == 1);
    CHECK(same.second == 0);
    CHECK_THROWS_AS(reindex_ladder(p, 2, 0, vacuum_state(p)), std::invalid_argument);

    for (int s_max = 1; s_max <= 6; ++s_max) {
        const DeformationParam q(s_max);
        const auto st = build_states(q);
        for (int s = 0; s < s_max; ++s)
            for (int sp = 0; sp <= s_max; ++sp)
                for (const FockState& f : st)
                    CHECK(same_state(reindex_ladder(q, s, sp, f), apply_annihilation(q, sp, f)));
    }
}

TEST_CASE("truncation")
{
    for (int s_max = 1; s_max <= 8; ++s_max) {
        const TruncationReport r = truncation_check(DeformationParam(s_max));
        CHECK(r.top_operators_coincide);
        CHECK(r.top_operator_is_position);
        CHECK(r.state_residual.is_zero());
        CHECK(r.degree_collapsed);
        CHECK(r.proportional_to_second_below);
    }
    const DeformationParam p1(1);
    const auto st = build_states(p1);
    CHECK(same_state(apply_creation(p1, 1, st[1]), st[0].scaled(ladder_coefficients(p1, 1).beta)));
    CHECK(ladder_coefficients(p1, 1).beta.radicand() == 1);
    CHECK(truncation_check(DeformationParam(2)).hermite_past_top.degree() == 1);
}

TEST_CASE("adjointness")
{
    for (int s_max = 1; s_max <= 5; ++s_max) {
        const DeformationParam p(s_max);
        const auto st = build_states(p);
        for (int s = 0; s <= s_max; ++s)
            for (int a = 0; a <= s_max; ++a)
                for (int b = 0; b <= s_max; ++b) {
                    if (a == s_max && b == s_max && s < s_max) {
                        CHECK_THROWS_AS(inner_product(st[a], apply(PolyOperator::creation(p, s), st[b]), p),
                                        DomainError);
                        continue;
                    }
                    CHECK(inner_product(st[a], apply(PolyOperator::creation(p, s), st[b]), p) ==
                          inner_product(apply(PolyOperator::annihilation(p, s), st[a]), st[b], p));
                }
    }
}

TEST_CASE("factorization system")
{
    for (int s_max = 1; s_max <= 6; ++s_max) {
        const DeformationParam p(s_max);
        for (int s = 0; s <= s_max; ++s) {
            const FactorizationResult r = factorization_residual(p, s, safe_points(p));
            CHECK(r.max_residual < 1e-12);
            CHECK(r.product_identity_exact);
        }
    }
    const DeformationParam p(2);
    const double near_pole = std::numbers::pi / 2 / p.delta() - 0.01;
    CHECK_THROWS_AS(factorization_residual(p, 1, std::vector<double>{near_pole}), std::invalid_argument);
    CHECK_THROWS_AS(factorization_residual(p, 3, safe_points(p)), std::out_of_range);
    CHECK(factorization_residual(p, 0, std::vector<double>{0.0}).max_residual < 1e-15);
}

TEST_CASE("Gaussian contraction of the vacuum")
{
    double previous = vacuum_gaussian_deviation(DeformationParam(4));
    for (int s_max : {16, 64, 256}) {
        const double next = vacuum_gaussian_deviation(DeformationParam(s_max));
        CHECK(next < previous);
        CHECK(previous / next >= 3.0);
        CHECK(previous / next <= 5.0);
        previous = next;
    }
}
