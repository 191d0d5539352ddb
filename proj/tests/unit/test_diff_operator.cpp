#include "doctest.h"
#include "jetpoisson/parser.hpp"
#include "jetpoisson/printer.hpp"
#include "jetpoisson/sampling.hpp"

using namespace jetpoisson;

TEST_CASE("normal form basics") {
    Signature sig({"x"}, {"u"});
    DiffOperator d = DiffOperator::d_slot(0);
    DiffOperator kdv = parse_operator(sig, "D^3 + 2/3*u*D + 1/3*u_x");

    CHECK(kdv.max_order() == 3);
    CHECK((adjoint(d) + d).is_zero());
    CHECK(is_skew_adjoint(kdv));
    CHECK(!is_skew_adjoint(parse_operator(sig, "D^2")));
    CHECK(is_skew_adjoint(parse_operator(sig, "[[0,D],[D,0]]")));

    DiffOperator id2 = DiffOperator::identity(2);
    DiffOperator p = parse_operator(sig, "[[D,u],[0,D^2]]");
    CHECK(compose(id2, p) == p);
    CHECK(compose(p, id2) == p);
}

TEST_CASE("composition agrees with sequential application") {
    Signature sig({"x", "y"}, {"u", "v"});
    Sampler rng(31);
    SampleOptions opt;
    opt.max_terms = 2;
    for (int c = 0; c < 25; ++c) {
        DiffOperator p = rng.op(sig, 2, 2, 2, opt);
        DiffOperator q = rng.op(sig, 2, 2, 2, opt);
        auto g = rng.tuple(sig, 2, opt);
        auto lhs = compose(p, q).apply(g);
        auto rhs = p.apply(q.apply(g));
        REQUIRE(lhs.size() == 2);
        for (unsigned r = 0; r < 2; ++r) CHECK((lhs[r] - rhs[r]).is_zero());
    }
}

TEST_CASE("adjoint is an involutive antihomomorphism") {
    Signature sig({"x", "y"}, {"u", "v"});
    Sampler rng(37);
    SampleOptions opt;
    opt.max_terms = 2;
    for (int c = 0; c < 20; ++c) {
        DiffOperator p = rng.op(sig, 2, 2, 2, opt);
        DiffOperator q = rng.op(sig, 2, 2, 2, opt);
        CHECK(adjoint(adjoint(p)) == p);
        CHECK(adjoint(compose(p, q)) == compose(adjoint(q), adjoint(p)));
        CHECK(adjoint(p + q) == adjoint(p) + adjoint(q));
        CHECK(is_skew_adjoint(rng.skew_op(sig, 2, 2, opt)));
    }
}

TEST_CASE("green current certifies integration by parts") {
    Signature sig({"x"}, {"u", "v"});
    DiffFunction u = DiffFunction::jet(0u);
    DiffFunction v = DiffFunction::jet(1u);
    DiffFunction ux = DiffFunction::jet(0u, MultiIndex::unit(0));
    DiffFunction vx = DiffFunction::jet(1u, MultiIndex::unit(0));

    // <u, D^2 v> - <D^2 u, v> = D(u*v_x - u_x*v)
    DiffOperator d2 = parse_operator(sig, "D^2");
    auto psi = green_current(sig, d2, {u}, {v});
    REQUIRE(psi.size() == 1);
    CHECK((psi[0] - (u * vx - ux * v)).is_zero());

    Signature sig2({"x", "y"}, {"u", "v"});
    Sampler rng(41);
    SampleOptions opt;
    opt.max_terms = 2;
    for (int c = 0; c < 25; ++c) {
        DiffOperator p = rng.op(sig2, 2, 2, 2, opt);
        auto f = rng.tuple(sig2, 2, opt);
        auto g = rng.tuple(sig2, 2, opt);
        DiffFunction lhs = pairing(f, p.apply(g)) - pairing(adjoint(p).apply(f), g);
        DiffFunction div = divergence(sig2, green_current(sig2, p, f, g));
        CHECK((lhs - div).is_zero());
    }
}

TEST_CASE("frechet derivative linearizes along characteristics") {
    Signature sig({"x"}, {"u", "v"});
    Sampler rng(43);
    SampleOptions opt;
    for (int c = 0; c < 30; ++c) {
        DiffFunction lag = rng.function(sig, opt);
        auto phi = rng.tuple(sig, sig.main_deps(), opt);
        DiffOperator fr = frechet(sig, lag);
        REQUIRE(fr.rows() == 1);
        REQUIRE(fr.cols() == sig.main_deps());
        DiffFunction lhs = fr.apply(phi)[0];
        CHECK((lhs - ev_apply(phi, lag)).is_zero());
    }
}

TEST_CASE("evolutionary action on operators is the commutator") {
    Signature sig({"x"}, {"u"});
    Sampler rng(47);
    SampleOptions opt;
    opt.max_terms = 2;
    for (int c = 0; c < 25; ++c) {
        DiffOperator p = rng.op(sig, 1, 1, 3, opt);
        auto phi = rng.tuple(sig, 1, opt);
        auto g = rng.tuple(sig, 1, opt);

        // ev_phi(P g) = P(ev_phi g) + (ev_phi P) g
        DiffFunction lhs = ev_apply(phi, p.apply(g)[0]);
        std::vector<DiffFunction> evg = {ev_apply(phi, g[0])};
        DiffFunction rhs = p.apply(evg)[0] + ev_on_operator(phi, p).apply(g)[0];
        CHECK((lhs - rhs).is_zero());

        // the action commutes with taking adjoints
        CHECK(adjoint(ev_on_operator(phi, p)) == ev_on_operator(phi, adjoint(p)));
    }
}
