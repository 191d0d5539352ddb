#include "doctest.h"

#include <algorithm>

#include "jetpoisson/diff_function.hpp"
#include "jetpoisson/sampling.hpp"

using namespace jetpoisson;

TEST_CASE("ring axioms hold on random elements") {
    Signature sig({"x", "y"}, {"u", "v"});
    Sampler rng(7);
    SampleOptions opt;
    for (int c = 0; c < 60; ++c) {
        DiffFunction f = rng.function(sig, opt);
        DiffFunction g = rng.function(sig, opt);
        DiffFunction h = rng.function(sig, opt);
        CHECK((f + g - (g + f)).is_zero());
        CHECK((f * g - g * f).is_zero());
        CHECK(((f + g) + h - (f + (g + h))).is_zero());
        CHECK(((f * g) * h - (f * (g * h))).is_zero());
        CHECK((f * (g + h) - (f * g + f * h)).is_zero());
        CHECK((f - f).is_zero());
        CHECK((f * DiffFunction::constant(1) - f).is_zero());
        CHECK((f * DiffFunction::constant(0)).is_zero());
    }
}

TEST_CASE("like terms collapse and zero coefficients vanish") {
    DiffFunction u = DiffFunction::jet(0u);
    DiffFunction ux = DiffFunction::jet(0u, MultiIndex::unit(0));

    DiffFunction s = u * ux + ux * u;  // same monomial twice
    REQUIRE(s.terms().size() == 1);
    CHECK(s.terms()[0].coeff == Rational(2));

    DiffFunction z = u * ux - ux * u;
    CHECK(z.is_zero());
    CHECK(z.terms().empty());

    DiffFunction half = u.scaled(make_rational(1, 2)) + u.scaled(make_rational(1, 2));
    CHECK((half - u).is_zero());
}

TEST_CASE("pow, degree and jet support") {
    DiffFunction x = DiffFunction::indep(0);
    DiffFunction u = DiffFunction::jet(0u);
    DiffFunction uxx = DiffFunction::jet(0u, MultiIndex::from_dense({2}));

    DiffFunction f = x * u.pow(3) + uxx.scaled(Rational(5));
    CHECK(f.total_degree() == 4);
    CHECK(f.max_jet_order() == 2);
    CHECK(f.has_jets());
    CHECK(!f.is_constant());

    auto support = f.jet_support();
    REQUIRE(support.size() == 2);
    CHECK(support[0] == JetVar{0, MultiIndex{}});
    CHECK(support[1] == (JetVar{0, MultiIndex::from_dense({2})}));

    CHECK(u.pow(0).is_constant());
    CHECK((u.pow(1) - u).is_zero());
    CHECK((u.pow(2) - u * u).is_zero());

    DiffFunction c = DiffFunction::constant(make_rational(-3, 4));
    Rational value;
    CHECK(c.is_constant(&value));
    CHECK(value == make_rational(-3, 4));
    CHECK(!c.has_jets());
    CHECK(c.max_jet_order() == 0);
}

TEST_CASE("binomial expansion as a multiplication cross-check") {
    DiffFunction u = DiffFunction::jet(0u);
    DiffFunction one = DiffFunction::constant(1);
    // (u+1)^4 = u^4 + 4u^3 + 6u^2 + 4u + 1
    DiffFunction lhs = (u + one).pow(4);
    DiffFunction rhs = u.pow(4) + u.pow(3).scaled(Rational(4)) + u.pow(2).scaled(Rational(6)) + u.scaled(Rational(4)) + one;
    CHECK((lhs - rhs).is_zero());
}
