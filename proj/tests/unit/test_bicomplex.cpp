#include "doctest.h"
#include "jetpoisson/bicomplex.hpp"
#include "jetpoisson/parser.hpp"
#include "jetpoisson/sampling.hpp"

using namespace jetpoisson;

TEST_CASE("wedge monomials anticommute and square to zero") {
    JetVar u{0, MultiIndex{}};
    JetVar ux{0, MultiIndex::unit(0)};
    MixedForm du = MixedForm::delta(u);
    MixedForm dux = MixedForm::delta(ux);
    MixedForm dx = MixedForm::dx(0);

    CHECK(wedge(du, du).is_zero());
    CHECK(wedge(dx, dx).is_zero());
    CHECK((wedge(du, dux) + wedge(dux, du)).is_zero());
    CHECK((wedge(du, dx) + wedge(dx, du)).is_zero());
    CHECK(wedge(du, dux).homogeneous(2, 0));
    CHECK(wedge(du, dx).homogeneous(1, 1));
}

TEST_CASE("wedge is graded-commutative and associative on random forms") {
    Signature sig({"x", "y"}, {"u"});
    Sampler rng(73);
    SampleOptions opt;
    opt.max_terms = 2;
    for (int c = 0; c < 20; ++c) {
        unsigned p1 = rng.integer(0, 2), q1 = rng.integer(0, 1);
        unsigned p2 = rng.integer(0, 2), q2 = rng.integer(0, 1);
        MixedForm a = rng.form(sig, p1, q1, 2, opt);
        MixedForm b = rng.form(sig, p2, q2, 2, opt);
        MixedForm c3 = rng.form(sig, 1, 1, 2, opt);

        int sign = ((p1 + q1) * (p2 + q2)) % 2 == 0 ? 1 : -1;
        MixedForm commuted = sign == 1 ? wedge(b, a) : -wedge(b, a);
        CHECK(wedge(a, b) == commuted);
        CHECK(wedge(wedge(a, b), c3) == wedge(a, wedge(b, c3)));
    }
}

TEST_CASE("the differentials square to zero and anticommute") {
    Signature sig({"x", "y"}, {"u", "v"});
    Sampler rng(79);
    SampleOptions opt;
    opt.max_terms = 2;
    for (int c = 0; c < 20; ++c) {
        unsigned p = rng.integer(0, 2), q = rng.integer(0, 1);
        MixedForm w = rng.form(sig, p, q, 2, opt);
        CHECK(d_v(sig, d_v(sig, w)).is_zero());
        CHECK(d_h(sig, d_h(sig, w)).is_zero());
        CHECK((d_h(sig, d_v(sig, w)) + d_v(sig, d_h(sig, w))).is_zero());
    }
}

TEST_CASE("evaluation weights match the Cartan conventions") {
    Signature sig({"x"}, {"u"});
    JetVar u{0, MultiIndex{}};
    JetVar ux{0, MultiIndex::unit(0)};

    // omega = u_x du; X = d/du, Y = d/du_x
    MixedForm omega = wedge(MixedForm::from_function(DiffFunction::jet(ux)), MixedForm::delta(u));
    Derivation X{{{u, DiffFunction::constant(1)}}, {}};
    Derivation Y{{{ux, DiffFunction::constant(1)}}, {}};

    // d_v omega = du_x ^ du, so (d_v omega)(X, Y) = -1/2
    MixedForm dw = d_v(sig, omega);
    CHECK((eval_form(sig, dw, {X, Y}) + DiffFunction::constant(make_rational(1, 2))).is_zero());
    CHECK((eval_form(sig, omega, {X}) - DiffFunction::jet(ux)).is_zero());
    CHECK(eval_form(sig, omega, {Y}).is_zero());
}

TEST_CASE("Cartan formula for the vertical differential of a 1-form") {
    // 2 dw(X,Y) = X(w(Y)) - Y(w(X)) - w([X,Y]) for vertical derivations,
    // with the 1/r! evaluation weights
    Signature sig({"x"}, {"u"});
    Sampler rng(83);
    SampleOptions opt;
    opt.max_terms = 2;
    for (int c = 0; c < 15; ++c) {
        MixedForm w = rng.form(sig, 1, 0, 2, opt);
        Derivation X = rng.derivation(sig, 2, false, 2, opt);
        Derivation Y = rng.derivation(sig, 2, false, 2, opt);

        DiffFunction lhs = eval_form(sig, d_v(sig, w), {X, Y}).scaled(Rational(2));
        DiffFunction rhs = apply_derivation(sig, X, eval_form(sig, w, {Y}))
                         - apply_derivation(sig, Y, eval_form(sig, w, {X}))
                         - eval_form(sig, w, {commutator(sig, X, Y)});
        CHECK((lhs - rhs).is_zero());
    }
}

TEST_CASE("derivation commutator is itself a derivation") {
    Signature sig({"x", "y"}, {"u"});
    Sampler rng(89);
    SampleOptions opt;
    opt.max_terms = 2;
    for (int c = 0; c < 12; ++c) {
        Derivation X = rng.derivation(sig, 2, true, 2, opt);
        Derivation Y = rng.derivation(sig, 2, true, 2, opt);
        Derivation XY = commutator(sig, X, Y);
        DiffFunction f = rng.function(sig, opt);
        DiffFunction g = rng.function(sig, opt);

        DiffFunction direct = apply_derivation(sig, X, apply_derivation(sig, Y, f))
                            - apply_derivation(sig, Y, apply_derivation(sig, X, f));
        CHECK((apply_derivation(sig, XY, f) - direct).is_zero());

        DiffFunction leibniz = apply_derivation(sig, XY, f * g)
                             - apply_derivation(sig, XY, f) * g - f * apply_derivation(sig, XY, g);
        CHECK(leibniz.is_zero());
    }
}

TEST_CASE("corner maps intertwine the differentials with the calculus") {
    Signature sig({"x", "y"}, {"u", "v"});
    Sampler rng(97);
    SampleOptions opt;
    opt.max_terms = 2;
    for (int c = 0; c < 15; ++c) {
        // d_h(current form) = (Div psi) theta
        auto psi = rng.tuple(sig, sig.m(), opt);
        CHECK(d_h(sig, from_current(sig, psi)) ==
              from_lagrangian(sig, divergence(sig, psi)));

        // d_h(mixed covector form) = form of nabla_star(chi)
        MixedJetTuple chi = rng.mixed_tuple(sig, 3, 2, opt);
        CHECK(d_h(sig, from_mixed_covector(sig, chi)) ==
              from_jet_covector(sig, nabla_star(sig, chi)));

        // d_v(L theta) = form of the jet gradient of L
        DiffFunction lag = rng.function(sig, opt);
        CHECK(d_v(sig, from_lagrangian(sig, lag)) ==
              from_jet_covector(sig, partial_gradient(sig, lag)));
    }
}

TEST_CASE("volume forms and contractions") {
    Signature sig({"x", "y"}, {"u"});
    MixedForm theta = volume_form(sig);
    CHECK(theta.homogeneous(0, 2));
    for (unsigned mu = 0; mu < sig.m(); ++mu)
        CHECK(wedge(MixedForm::dx(mu), contracted_volume(sig, mu)) == theta);
}
