#include "doctest.h"
#include "jetpoisson/parser.hpp"
#include "jetpoisson/sampling.hpp"
#include "jetpoisson/variational.hpp"

using namespace jetpoisson;

TEST_CASE("worked Euler-Lagrange derivatives") {
    Signature sig({"x"}, {"u"});

    // delta(1/2 u_x^2) = -u_xx
    auto e1 = euler(sig, parse_expression(sig, "1/2*u_x^2"));
    REQUIRE(e1.size() == 1);
    CHECK((e1[0] + parse_expression(sig, "u[2]")).is_zero());

    // u*u_x = D(u^2/2) is a total derivative
    auto e2 = euler(sig, parse_expression(sig, "u*u_x"));
    CHECK(e2[0].is_zero());
    CHECK(is_divergence(sig, parse_expression(sig, "u*u_x")));
    CHECK(!is_divergence(sig, parse_expression(sig, "u*u[2]")));

    // delta(u_x^3) = -6 u_x u_xx = -3 D(u_x^2)
    auto e3 = euler(sig, parse_expression(sig, "u_x^3"));
    CHECK((e3[0] + parse_expression(sig, "6*u_x*u[2]")).is_zero());

    Signature sig2({"x", "y"}, {"u"});
    // delta(1/2 u_x^2 + 1/2 u_y^2) = -(u_xx + u_yy): the Laplacian
    auto e4 = euler(sig2, parse_expression(sig2, "1/2*u[1,0]^2 + 1/2*u[0,1]^2"));
    CHECK((e4[0] + parse_expression(sig2, "u[2,0] + u[0,2]")).is_zero());
}

TEST_CASE("euler annihilates divergences and certifies them") {
    Signature sig({"x", "y"}, {"u", "v"});
    Sampler rng(53);
    SampleOptions opt;
    for (int c = 0; c < 30; ++c) {
        auto current = rng.tuple(sig, sig.m(), opt);
        DiffFunction div = divergence(sig, current);
        for (const DiffFunction& comp : euler(sig, div)) CHECK(comp.is_zero());
        CHECK(is_divergence(sig, div));
    }
    // and the converse direction on a non-divergence
    CHECK(!is_divergence(sig, parse_expression(sig, "u*v")));
}

TEST_CASE("euler agrees with the adjoint-frechet construction") {
    Signature sig({"x"}, {"u", "v"});
    Sampler rng(59);
    SampleOptions opt;
    for (int c = 0; c < 30; ++c) {
        DiffFunction lag = rng.function(sig, opt);
        auto direct = euler(sig, lag);
        auto via_adjoint = adjoint(frechet(sig, lag)).apply({DiffFunction::constant(1)});
        REQUIRE(via_adjoint.size() == sig.main_deps());
        for (unsigned a = 0; a < sig.main_deps(); ++a)
            CHECK((direct[a] - via_adjoint[a]).is_zero());
    }
}

TEST_CASE("first variation splits into an Euler term plus a divergence") {
    Signature sig({"x", "y"}, {"u"});
    Sampler rng(61);
    SampleOptions opt;
    for (int c = 0; c < 25; ++c) {
        DiffFunction lag = rng.function(sig, opt);
        auto phi = rng.tuple(sig, sig.main_deps(), opt);
        DiffFunction variation = ev_apply(phi, lag);
        DiffFunction boundary = variation - pairing(euler(sig, lag), phi);
        CHECK(is_divergence(sig, boundary));
    }
}

TEST_CASE("functional equality ignores boundary terms") {
    Signature sig({"x"}, {"u"});
    DiffFunction l1 = parse_expression(sig, "1/2*u_x^2");
    DiffFunction l2 = parse_expression(sig, "1/2*u_x^2 + u*u_x");
    DiffFunction l3 = parse_expression(sig, "u_x^2");
    CHECK(functional_equal(sig, l1, l2));
    CHECK(!functional_equal(sig, l1, l3));
}

TEST_CASE("prolongation and the covariant pair") {
    Signature sig({"x"}, {"u"});
    Sampler rng(67);
    SampleOptions opt;
    opt.max_terms = 2;
    for (int c = 0; c < 15; ++c) {
        auto phi = rng.tuple(sig, 1, opt);

        // nabla vanishes exactly on prolongations, within the materialized window
        JetTuple jphi = j_prolong(sig, phi, 3);
        MixedJetTuple eta = nabla(sig, jphi);
        for (const auto& [key, comp] : eta) {
            if (key.second.index.order() + 1 <= 3) CHECK(comp.is_zero());
        }

        // Green identity for the nabla pair, exact including the current
        JetTuple f = rng.jet_tuple(sig, 3, 2, opt);
        MixedJetTuple chi = rng.mixed_tuple(sig, 3, 2, opt);
        DiffFunction lhs = mixed_pairing(chi, nabla(sig, f)) - jet_pairing(nabla_star(sig, chi), f);
        DiffFunction div = divergence(sig, nabla_green_current(sig, chi, f));
        CHECK((lhs - div).is_zero());

        // j_star annihilates the image of nabla_star
        auto collapsed = j_star(sig, nabla_star(sig, chi));
        for (const DiffFunction& comp : collapsed) CHECK(comp.is_zero());
    }
}

TEST_CASE("worked covector splitting") {
    Signature sig({"x"}, {"u"});
    DiffFunction u = DiffFunction::jet(0u);

    // f has the single component f^{(1)}_u = u
    JetTuple f;
    f[JetVar{0, MultiIndex::unit(0)}] = u;

    CovectorSplit split = split_covector(sig, f);

    // g = j*(f) = -u_x at index zero
    JetVar base{0, MultiIndex{}};
    REQUIRE(split.euler_part.count(base) == 1);
    CHECK((split.euler_part.at(base) + parse_expression(sig, "u_x")).is_zero());

    // chi^{x,(0)}_u = -u
    auto it = split.chi.find({0u, base});
    REQUIRE(it != split.chi.end());
    CHECK((it->second + u).is_zero());
}

TEST_CASE("covector splitting is exact on random covectors") {
    Signature sig1({"x"}, {"u"});
    Signature sig2({"x", "y"}, {"u", "v"});
    Sampler rng(71);
    SampleOptions opt;
    opt.max_terms = 2;
    for (int c = 0; c < 15; ++c) {
        for (const Signature& sig : {sig1, sig2}) {
            JetTuple f = rng.jet_tuple(sig, 3, 2, opt);
            CovectorSplit split = split_covector(sig, f);

            // the euler part sits at multi-index zero and equals j*(f)
            auto collapsed = j_star(sig, f);
            for (const auto& [v, comp] : split.euler_part) {
                CHECK(v.index.is_zero());
                CHECK((comp - collapsed[v.dep]).is_zero());
            }

            // f = g + nabla_star(chi), exactly
            JetTuple rebuilt = nabla_star(sig, split.chi);
            for (const auto& [v, comp] : split.euler_part) rebuilt[v] = rebuilt[v] + comp;
            JetTuple residual = rebuilt;
            for (const auto& [v, comp] : f) residual[v] = residual[v] - comp;
            for (const auto& [v, comp] : residual) CHECK(comp.is_zero());
        }
    }
}
