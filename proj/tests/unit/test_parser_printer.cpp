#include "doctest.h"

#include <string>
#include <vector>

#include "jetpoisson/parser.hpp"
#include "jetpoisson/printer.hpp"
#include "jetpoisson/sampling.hpp"

using namespace jetpoisson;

TEST_CASE("canonical spellings of functions") {
    Signature sig({"x"}, {"u"});
    DiffFunction x = DiffFunction::indep(0);
    DiffFunction u = DiffFunction::jet(0u);
    DiffFunction ux = DiffFunction::jet(0u, MultiIndex::unit(0));

    CHECK(to_string(sig, DiffFunction{}) == "0");
    CHECK(to_string(sig, DiffFunction::constant(make_rational(-2, 3))) == "-2/3");
    CHECK(to_string(sig, ux.pow(2).scaled(make_rational(1, 2))) == "1/2*u[1]^2");
    CHECK(to_string(sig, x * u + DiffFunction::constant(3)) == "x*u + 3");
    CHECK(to_string(sig, u - x) == "-x + u");
    CHECK(to_string(sig, u * ux - x) == "u*u[1] - x");

    Signature sig2({"x", "y"}, {"u", "v"});
    DiffFunction uxy = DiffFunction::jet(0u, MultiIndex::from_dense({1, 1}));
    DiffFunction v = DiffFunction::jet(1u);
    CHECK(to_string(sig2, uxy * v) == "u[1,1]*v");
}

TEST_CASE("canonical spellings of operators") {
    Signature sig({"x"}, {"u"});
    CHECK(to_string(sig, parse_operator(sig, "D^2")) == "D^2");
    CHECK(to_string(sig, parse_operator(sig, "D^3 + 2/3*u*D + 1/3*u_x")) ==
          "D^3 + 2/3*u*D + 1/3*u[1]");
    CHECK(to_string(sig, parse_operator(sig, "[[0,D],[D,0]]")) == "[[0, D],[D, 0]]");
    CHECK(to_string(sig, parse_operator(sig, "(u+1)*D")) == "(u + 1)*D");

    Signature sig2({"x", "y"}, {"u"});
    CHECK(to_string(sig2, parse_operator(sig2, "D1*D2^2")) == "D1*D2^2");
}

TEST_CASE("input sugar normalizes to one value") {
    Signature sig({"x"}, {"u"});
    CHECK(parse_expression(sig, "u_xx") == parse_expression(sig, "u[2]"));
    CHECK(parse_expression(sig, "2/4*u") == parse_expression(sig, "1/2*u"));
    CHECK(parse_expression(sig, "-u + u") == DiffFunction{});
    CHECK(parse_expression(sig, "(u + 1)^2") == parse_expression(sig, "u^2 + 2*u + 1"));

    Signature sig2({"x", "y"}, {"u"});
    CHECK(parse_expression(sig2, "u_xy") == parse_expression(sig2, "u[1,1]"));
    CHECK(parse_expression(sig2, "u_yx") == parse_expression(sig2, "u[1,1]"));

    // composition is not plain multiplication: D*u = u*D + u_x
    CHECK(parse_operator(sig, "u*D + D*u") == parse_operator(sig, "2*u*D + u[1]"));
    CHECK(parse_operator(sig, "D^0") == parse_operator(sig, "1"));
}

TEST_CASE("print/parse round-trips on random functions") {
    Signature sig1({"x"}, {"u"});
    Signature sig2({"x", "y"}, {"u", "v"});
    Sampler rng(23);
    SampleOptions opt;
    opt.max_terms = 4;
    for (int c = 0; c < 100; ++c) {
        for (const Signature& sig : {sig1, sig2}) {
            DiffFunction f = rng.function(sig, opt);
            std::string s = to_string(sig, f);
            DiffFunction back = parse_expression(sig, s);
            CHECK(back == f);
            // printing is a function of the value, so a second trip is stable
            CHECK(to_string(sig, back) == s);
        }
    }
}

TEST_CASE("print/parse round-trips on random operators") {
    Signature sig1({"x"}, {"u"});
    Signature sig2({"x", "y"}, {"u", "v"});
    Sampler rng(29);
    SampleOptions opt;
    opt.max_terms = 2;
    for (int c = 0; c < 40; ++c) {
        DiffOperator p = rng.op(sig1, 1, 1, 3, opt);
        CHECK(parse_operator(sig1, to_string(sig1, p)) == p);

        DiffOperator q = rng.op(sig2, 2, 2, 2, opt);
        CHECK(parse_operator(sig2, to_string(sig2, q)) == q);
    }
}

namespace {

struct BadInput {
    const char* text;
    size_t position;
};

}  // namespace

TEST_CASE("malformed expressions report 1-based positions") {
    Signature sig({"x"}, {"u"});
    const std::vector<BadInput> cases = {
        {"u_x^2/2", 6},       // no division operator; rationals are atoms
        {"1/0", 2},           // zero denominator
        {"2/", 3},            // missing denominator
        {"u + ", 5},          // dangling operator
        {"(u", 3},            // unclosed parenthesis
        {"u)", 2},            // stray closing parenthesis
        {"w", 1},             // unknown identifier
        {"u_t", 1},           // unknown subscript letter
        {"u[1,2]", 1},        // wrong jet index arity
        {"u[]", 3},           // empty jet index
        {"u[", 3},            // unterminated jet index
        {"u[2", 4},           // missing closing bracket
        {"u^", 3},            // missing exponent
        {"u^9999999999", 3},  // oversized exponent
        {"D", 1},             // derivative symbol outside operator context
        {"u @", 3},           // stray character
        {"x_x", 1},           // subscript on an independent variable
        {"x[1]", 2},          // jet index on an independent variable
        {"*u", 1},            // operator with no left operand
        {"", 1},              // empty input
    };
    for (const auto& bad : cases) {
        CAPTURE(bad.text);
        try {
            parse_expression(sig, bad.text);
            FAIL_CHECK("expected a parse error for \"" << bad.text << "\"");
        } catch (const ParseError& e) {
            CHECK(e.position() == bad.position);
            CHECK(std::string(e.what()).rfind("parse error at position ", 0) == 0);
        }
    }
}

TEST_CASE("malformed operators report 1-based positions") {
    Signature sig({"x"}, {"u"});
    const std::vector<BadInput> cases = {
        {"D2", 1},           // out-of-range derivative index
        {"D_x", 1},          // derivative symbols take no subscript
        {"[[D],[D,D]]", 1},  // ragged matrix
        {"[D]", 2},          // matrix needs nested rows
        {"[[D]", 5},         // unclosed matrix
    };
    for (const auto& bad : cases) {
        CAPTURE(bad.text);
        try {
            parse_operator(sig, bad.text);
            FAIL_CHECK("expected a parse error for \"" << bad.text << "\"");
        } catch (const ParseError& e) {
            CHECK(e.position() == bad.position);
        }
    }

    Signature sig2({"x", "y"}, {"u"});
    CHECK_THROWS_AS(parse_operator(sig2, "D"), ParseError);   // ambiguous with two slots
    CHECK_THROWS_AS(parse_operator(sig2, "D3"), ParseError);  // only D1, D2 exist
}
