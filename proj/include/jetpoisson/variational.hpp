#pragma once

#include <map>

#include "jetpoisson/diff_operator.hpp"

namespace jetpoisson {

// finitely supported element of the full jet tuple space: (alpha,i) -> component,
// missing entries are zero.  Used both for vectors (phi^alpha_i) and covectors
// (f^i_alpha); the pairing contracts matching entries.
using JetTuple = std::map<JetVar, DiffFunction>;

// finitely supported (mu, alpha, i) -> component, for mixed objects such as
// nabla(phi) and the chi argument of nabla_star
using MixedJetTuple = std::map<std::pair<unsigned, JetVar>, DiffFunction>;

// variational derivative: delta_alpha L = sum_i (-D)^i dL/du^alpha_i, one
// component per dependent variable (formal covector families included)
std::vector<DiffFunction> euler(const Signature& sig, const DiffFunction& lagrangian);

// gradient along the jet coordinates: (alpha,i) -> dK/du^alpha_i
JetTuple partial_gradient(const Signature& sig, const DiffFunction& f);

// true when f lies in the image of Div, decided by euler(f) = 0 with respect
// to every dependent family; sound by the integration-by-parts tests, and
// complete on this polynomial algebra (explicit x makes constants divergences)
bool is_divergence(const Signature& sig, const DiffFunction& f);

// equality of the functionals int K and int L
bool functional_equal(const Signature& sig, const DiffFunction& k, const DiffFunction& l);

// prolongation phi^alpha_i = D^i phi^alpha materialized for all |i| <= max_order
JetTuple j_prolong(const Signature& sig, const std::vector<DiffFunction>& phi, unsigned max_order);

// dual collapse: f_alpha = sum_i (-D)^i f^i_alpha
std::vector<DiffFunction> j_star(const Signature& sig, const JetTuple& f);

// eta^alpha_{mu,i} = D_mu phi^alpha_i - phi^alpha_{i+(mu)}
MixedJetTuple nabla(const Signature& sig, const JetTuple& phi);

// Lagrange dual of nabla: (nabla* chi)^i_alpha = -D_mu chi^{mu,i}_alpha - chi^{mu,i-(mu)}_alpha,
// so that <chi, nabla phi> - <nabla* chi, phi> = Div psi with psi^mu = sum chi^{mu,i}_alpha phi^alpha_i
JetTuple nabla_star(const Signature& sig, const MixedJetTuple& chi);

// sum over matching (alpha,i) of f^i_alpha * phi^alpha_i
DiffFunction jet_pairing(const JetTuple& f, const JetTuple& phi);

// sum over matching (mu,alpha,i) of chi^{mu,i}_alpha * eta^alpha_{mu,i}
DiffFunction mixed_pairing(const MixedJetTuple& chi, const MixedJetTuple& eta);

// the Green current psi^mu = sum chi^{mu,i}_alpha phi^alpha_i of the nabla identity
std::vector<DiffFunction> nabla_green_current(const Signature& sig, const MixedJetTuple& chi,
                                              const JetTuple& phi);

/**
 * Direct-sum splitting of a jet covector: f = g + nabla_star(chi) with
 * g = (j_star f) concentrated at multi-index zero.  chi is produced by a
 * deterministic integration-by-parts peel (largest multi-index first,
 * largest slot within it); the identity is exact and verified internally.
 */
struct CovectorSplit {
    JetTuple euler_part;  // g: only zero multi-indices, components j_star(f)
    MixedJetTuple chi;
};

CovectorSplit split_covector(const Signature& sig, const JetTuple& f);

}  // namespace jetpoisson
