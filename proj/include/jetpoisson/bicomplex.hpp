#pragma once

#include <map>
#include <vector>

#include "jetpoisson/jet_algebra.hpp"
#include "jetpoisson/variational.hpp"

namespace jetpoisson {

/**
 * One monomial of a mixed (p,q)-form: coeff * du_{v1}^..^du_{vp} ^ dx^{h1}^..^dx^{hq}
 * with the vertical factors first.  Factor lists are strictly increasing, so
 * the representation of each wedge monomial is unique up to sign and a term
 * list sorted by factor key is canonical.
 */
struct FormTerm {
    DiffFunction coeff;
    std::vector<JetVar> vertical;
    std::vector<unsigned> horizontal;
};

class MixedForm {
public:
    MixedForm() = default;

    static MixedForm from_function(const DiffFunction& f);
    // du^alpha_i, the vertical coordinate differential
    static MixedForm delta(const JetVar& v);
    static MixedForm dx(unsigned slot);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<FormTerm>& terms() const { return terms_; }

    // true when every term has vertical degree p and horizontal degree q
    bool homogeneous(unsigned p, unsigned q) const;

    MixedForm operator+(const MixedForm& o) const;
    MixedForm operator-(const MixedForm& o) const;
    MixedForm operator-() const;
    MixedForm scaled(const Rational& c) const;
    bool operator==(const MixedForm& o) const;

    // internal: append a term whose factor lists are already strictly
    // increasing, in ascending key order relative to the existing terms
    void add_raw(const DiffFunction& coeff, const std::vector<JetVar>& vertical,
                 const std::vector<unsigned>& horizontal);

private:
    std::vector<FormTerm> terms_;
};

MixedForm wedge(const MixedForm& a, const MixedForm& b);

// vertical differential: d_v f = sum_a (df/du_a) du_a, d_v(du_a) = d_v(dx) = 0
MixedForm d_v(const Signature& sig, const MixedForm& w);

// horizontal differential: d_h f = sum_mu (D_mu f) dx^mu and
// d_h(du^alpha_i) = -sum_mu du^alpha_{i+(mu)} ^ dx^mu, d_h(dx) = 0
MixedForm d_h(const Signature& sig, const MixedForm& w);

/**
 * A derivation of the jet algebra: sum_a vert[a] d/du_a + sum_mu horiz[mu] D_mu.
 * horiz is either empty (purely vertical) or has one entry per independent
 * variable.
 */
struct Derivation {
    std::map<JetVar, DiffFunction> vert;
    std::vector<DiffFunction> horiz;
};

DiffFunction apply_derivation(const Signature& sig, const Derivation& x, const DiffFunction& f);

// commutator [x, y] as a derivation of the same shape; uses
// [D_mu, d/du^beta_j] = -d/du^beta_{j-(mu)} to push D factors through
Derivation commutator(const Signature& sig, const Derivation& x, const Derivation& y);

/**
 * Evaluate a form on as many derivations as its degree.  A degree-r wedge
 * monomial F_1^..^F_r evaluates to (1/r!) sum_{sigma} sgn(sigma)
 * prod_t F_t(args[sigma(t)]); terms whose degree differs from args.size()
 * contribute nothing.  Degree-0 forms with no arguments return the
 * coefficient itself.
 */
DiffFunction eval_form(const Signature& sig, const MixedForm& w,
                       const std::vector<Derivation>& args);

// volume form dx^1 ^ ... ^ dx^m
MixedForm volume_form(const Signature& sig);

// (-1)^mu dx^1 ^ ... (slot mu omitted) ... ^ dx^m, so dx^mu ^ theta_mu = theta
MixedForm contracted_volume(const Signature& sig, unsigned mu);

// L theta, the (0,m) corner where lagrangians live
MixedForm from_lagrangian(const Signature& sig, const DiffFunction& lagrangian);

// sum_mu psi^mu theta_mu; d_h of it is (Div psi) theta
MixedForm from_current(const Signature& sig, const std::vector<DiffFunction>& current);

// sum f^i_alpha du^alpha_i ^ theta, the (1,m) corner of covectors
MixedForm from_jet_covector(const Signature& sig, const JetTuple& f);

// sum chi^{mu,i}_alpha du^alpha_i ^ theta_mu; d_h of it is the (1,m) form of nabla_star(chi)
MixedForm from_mixed_covector(const Signature& sig, const MixedJetTuple& chi);

}  // namespace jetpoisson
