#include "doctest.h"
#include "jetpoisson/jet_algebra.hpp"
#include "jetpoisson/sampling.hpp"

using namespace jetpoisson;

TEST_CASE("total derivatives are derivations and commute") {
    Signature sig({"x", "y"}, {"u", "v"});
    Sampler rng(11);
    SampleOptions opt;
    for (int c = 0; c < 50; ++c) {
        DiffFunction f = rng.function(sig, opt);
        DiffFunction g = rng.function(sig, opt);
        for (unsigned mu = 0; mu < sig.m(); ++mu) {
            DiffFunction lhs = total_derivative_slot(f * g, mu);
            DiffFunction rhs = total_derivative_slot(f, mu) * g + f * total_derivative_slot(g, mu);
            CHECK((lhs - rhs).is_zero());
        }
        DiffFunction xy = total_derivative_slot(total_derivative_slot(f, 0), 1);
        DiffFunction yx = total_derivative_slot(total_derivative_slot(f, 1), 0);
        CHECK((xy - yx).is_zero());
    }
}

TEST_CASE("worked total derivative in one variable") {
    DiffFunction u = DiffFunction::jet(0u);
    DiffFunction ux = DiffFunction::jet(0u, MultiIndex::unit(0));
    DiffFunction uxx = DiffFunction::jet(0u, MultiIndex::from_dense({2}));

    // D_x(u*u_x) = u_x^2 + u*u_xx
    DiffFunction lhs = total_derivative_slot(u * ux, 0);
    CHECK((lhs - (ux * ux + u * uxx)).is_zero());

    // D_x acting on an explicit x dependence
    DiffFunction x = DiffFunction::indep(0);
    CHECK((total_derivative_slot(x * u, 0) - (u + x * ux)).is_zero());

    // iterated form agrees with the multi-index entry point
    CHECK((total_derivative(u, MultiIndex::from_dense({2})) - uxx).is_zero());

    // signed derivative flips by parity
    DiffFunction f = u * ux;
    MultiIndex i3 = MultiIndex::from_dense({3});
    CHECK((signed_total_derivative(f, i3) + total_derivative(f, i3)).is_zero());
    MultiIndex i2 = MultiIndex::from_dense({2});
    CHECK((signed_total_derivative(f, i2) - total_derivative(f, i2)).is_zero());
}

TEST_CASE("partial jet derivatives satisfy the lowering relation") {
    // [D_mu, d/du_a] f = -d/du_{a-mu} f for every jet variable a
    Signature sig({"x", "y"}, {"u"});
    Sampler rng(13);
    SampleOptions opt;
    opt.max_order = 3;
    for (int c = 0; c < 40; ++c) {
        DiffFunction f = rng.function(sig, opt);
        JetVar a = rng.jet_var(sig, 3);
        for (unsigned mu = 0; mu < sig.m(); ++mu) {
            DiffFunction lhs = total_derivative_slot(partial_jet(f, a), mu)
                             - partial_jet(total_derivative_slot(f, mu), a);
            DiffFunction rhs;
            if (auto down = a.index.minus(mu)) rhs = rhs - partial_jet(f, JetVar{a.dep, *down});
            CHECK((lhs - rhs).is_zero());
        }
    }
}

TEST_CASE("evolutionary derivations act as derivations and commute with totals") {
    Signature sig({"x"}, {"u", "v"});
    Sampler rng(17);
    SampleOptions opt;
    for (int c = 0; c < 40; ++c) {
        auto phi = rng.tuple(sig, sig.main_deps(), opt);
        DiffFunction f = rng.function(sig, opt);
        DiffFunction g = rng.function(sig, opt);

        DiffFunction lhs = ev_apply(phi, f * g);
        DiffFunction rhs = ev_apply(phi, f) * g + f * ev_apply(phi, g);
        CHECK((lhs - rhs).is_zero());

        DiffFunction c1 = ev_apply(phi, total_derivative_slot(f, 0));
        DiffFunction c2 = total_derivative_slot(ev_apply(phi, f), 0);
        CHECK((c1 - c2).is_zero());
    }
}

TEST_CASE("characteristic bracket matches the commutator of derivations") {
    Signature sig({"x"}, {"u"});
    Sampler rng(19);
    SampleOptions opt;
    opt.max_terms = 2;
    for (int c = 0; c < 15; ++c) {
        auto p = rng.tuple(sig, sig.main_deps(), opt);
        auto q = rng.tuple(sig, sig.main_deps(), opt);
        auto pq = characteristic_bracket(p, q);
        auto qp = characteristic_bracket(q, p);
        REQUIRE(pq.size() == sig.main_deps());
        for (unsigned a = 0; a < pq.size(); ++a)
            CHECK((pq[a] + qp[a]).is_zero());

        // ev_{[p,q]} = [ev_p, ev_q] on a random element
        DiffFunction f = rng.function(sig, opt);
        DiffFunction lhs = ev_apply(pq, f);
        DiffFunction rhs = ev_apply(p, ev_apply(q, f)) - ev_apply(q, ev_apply(p, f));
        CHECK((lhs - rhs).is_zero());
    }
}

TEST_CASE("divergence and pairing plumbing") {
    Signature sig({"x", "y"}, {"u"});
    DiffFunction u = DiffFunction::jet(0u);
    DiffFunction ux = DiffFunction::jet(0u, MultiIndex::unit(0));
    DiffFunction uy = DiffFunction::jet(0u, MultiIndex::unit(1));

    // Div (u, u) = u_x + u_y
    DiffFunction div = divergence(sig, {u, u});
    CHECK((div - (ux + uy)).is_zero());

    DiffFunction p = pairing({u, ux}, {ux, u});
    CHECK((p - (u * ux).scaled(Rational(2))).is_zero());
}
