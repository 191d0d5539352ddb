#pragma once

#include "jetpoisson/diff_function.hpp"
#include "jetpoisson/signature.hpp"

namespace jetpoisson {

// d/dx^slot with jet coordinates held fixed; throws std::out_of_range on a bad slot
DiffFunction partial_x(const Signature& sig, const DiffFunction& f, unsigned slot);

// d/du^alpha_i
DiffFunction partial_jet(const DiffFunction& f, const JetVar& v);

// total derivative D_slot = d/dx^slot + sum u^alpha_{i+slot} d/du^alpha_i
DiffFunction total_derivative_slot(const DiffFunction& f, unsigned slot);

// D^i (slots applied in increasing order; they commute)
DiffFunction total_derivative(const DiffFunction& f, const MultiIndex& i);

// (-D)^i = (-1)^{|i|} D^i
DiffFunction signed_total_derivative(const DiffFunction& f, const MultiIndex& i);

/**
 * Evolutionary derivation with characteristic phi: ev_phi(f) =
 * sum over jet coordinates u^alpha_i of f with alpha < phi.size() of
 * D^i(phi[alpha]) * d f/du^alpha_i.  Components beyond phi.size() are
 * treated as zero, so a characteristic for the main family leaves any
 * formal covector families untouched.
 */
DiffFunction ev_apply(const std::vector<DiffFunction>& phi, const DiffFunction& f);

// xi^alpha = ev_phi(psi^alpha) - ev_psi(phi^alpha); sizes must agree
std::vector<DiffFunction> characteristic_bracket(const std::vector<DiffFunction>& phi,
                                                 const std::vector<DiffFunction>& psi);

// sum_alpha f[alpha] * g[alpha]; sizes must agree
DiffFunction pairing(const std::vector<DiffFunction>& f, const std::vector<DiffFunction>& g);

// Div psi = sum_mu D_mu psi^mu for a current with exactly m components
DiffFunction divergence(const Signature& sig, const std::vector<DiffFunction>& current);

}  // namespace jetpoisson
