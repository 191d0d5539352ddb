#pragma once

#include <map>
#include <vector>

#include "jetpoisson/multiindex.hpp"
#include "jetpoisson/rational.hpp"

namespace jetpoisson {

using DepId = unsigned;

// One jet coordinate u^alpha_i: dependent-variable id plus derivative multi-index.
struct JetVar {
    DepId dep = 0;
    MultiIndex index;

    std::strong_ordering operator<=>(const JetVar& o) const {
        if (dep != o.dep) return dep <=> o.dep;
        return index <=> o.index;
    }
    bool operator==(const JetVar& o) const { return dep == o.dep && index == o.index; }
};

/**
 * A power product  x^k * prod (u^alpha_i)^e.  Jet factors are sorted by
 * JetVar and carry positive exponents, so the representation is unique.
 */
struct Monomial {
    MultiIndex xexp;
    std::vector<std::pair<JetVar, unsigned>> jets;

    unsigned total_degree() const {
        unsigned d = xexp.order();
        for (const auto& [v, e] : jets) d += e;
        return d;
    }

    unsigned jet_exponent(const JetVar& v) const {
        for (const auto& [w, e] : jets)
            if (w == v) return e;
        return 0;
    }

    Monomial operator*(const Monomial& o) const;

    // graded order: total degree, then x-exponents, then the jet factor list
    std::strong_ordering operator<=>(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return xexp == o.xexp && jets == o.jets; }
};

struct Term {
    Monomial mono;
    Rational coeff;
};

/**
 * Sparse differential polynomial: canonical form is a coefficient-sorted
 * term list (strictly increasing monomials, no zero coefficients), so
 * structural equality is semantic equality.  Values are immutable: every
 * operation returns a fresh function.
 */
class DiffFunction {
public:
    DiffFunction() = default;

    static DiffFunction constant(Rational c);
    static DiffFunction constant(long n) { return constant(make_rational(n)); }
    static DiffFunction indep(unsigned slot, unsigned exp = 1);
    static DiffFunction jet(JetVar v);
    static DiffFunction jet(DepId dep, MultiIndex index = {}) { return jet(JetVar{dep, std::move(index)}); }
    static DiffFunction monomial(Rational c, Monomial m);
    static DiffFunction from_accumulator(std::map<Monomial, Rational>&& acc);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    bool operator==(const DiffFunction& o) const;

    DiffFunction operator+(const DiffFunction& o) const;
    DiffFunction operator-(const DiffFunction& o) const;
    DiffFunction operator-() const;
    DiffFunction operator*(const DiffFunction& o) const;
    DiffFunction scaled(const Rational& c) const;
    DiffFunction pow(unsigned k) const;

    // sorted distinct jet coordinates appearing anywhere in the function
    std::vector<JetVar> jet_support() const;
    bool has_jets() const;
    unsigned max_jet_order() const;
    unsigned total_degree() const;
    // the coefficient of the empty monomial if the function is constant
    bool is_constant(Rational* value = nullptr) const;

private:
    std::vector<Term> terms_;
};

inline DiffFunction operator*(const Rational& c, const DiffFunction& f) { return f.scaled(c); }

}  // namespace jetpoisson
