#include "jetpoisson/jet_algebra.hpp"

#include <stdexcept>

namespace jetpoisson {

DiffFunction partial_x(const Signature& sig, const DiffFunction& f, unsigned slot) {
    if (slot >= sig.m()) throw std::out_of_range("independent-variable index out of range");
    std::map<Monomial, Rational> acc;
    for (const auto& t : f.terms()) {
        unsigned e = t.mono.xexp.at(slot);
        if (e == 0) continue;
        Monomial m = t.mono;
        m.xexp = *m.xexp.minus(slot);
        acc[std::move(m)] += t.coeff * e;
    }
    return DiffFunction::from_accumulator(std::move(acc));
}

DiffFunction partial_jet(const DiffFunction& f, const JetVar& v) {
    std::map<Monomial, Rational> acc;
    for (const auto& t : f.terms()) {
        unsigned e = t.mono.jet_exponent(v);
        if (e == 0) continue;
        Monomial m;
        m.xexp = t.mono.xexp;
        for (const auto& [w, we] : t.mono.jets) {
            if (w == v) {
                if (we > 1) m.jets.push_back({w, we - 1});
            } else {
                m.jets.push_back({w, we});
            }
        }
        acc[std::move(m)] += t.coeff * e;
    }
    return DiffFunction::from_accumulator(std::move(acc));
}

DiffFunction total_derivative_slot(const DiffFunction& f, unsigned slot) {
    std::map<Monomial, Rational> acc;
    for (const auto& t : f.terms()) {
        // x-part
        if (unsigned e = t.mono.xexp.at(slot); e > 0) {
            Monomial m = t.mono;
            m.xexp = *m.xexp.minus(slot);
            acc[std::move(m)] += t.coeff * e;
        }
        // one term per jet factor, with its index shifted by the slot
        for (size_t k = 0; k < t.mono.jets.size(); ++k) {
            const auto& [v, e] = t.mono.jets[k];
            Monomial m;
            m.xexp = t.mono.xexp;
            for (size_t j = 0; j < t.mono.jets.size(); ++j) {
                if (j == k) {
                    if (e > 1) m.jets.push_back({v, e - 1});
                } else {
                    m.jets.push_back(t.mono.jets[j]);
                }
            }
            Monomial shifted;
            shifted.jets.push_back({JetVar{v.dep, v.index.plus(slot)}, 1});
            acc[m * shifted] += t.coeff * e;
        }
    }
    return DiffFunction::from_accumulator(std::move(acc));
}

DiffFunction total_derivative(const DiffFunction& f, const MultiIndex& i) {
    DiffFunction r = f;
    for (const auto& [slot, exp] : i.entries())
        for (unsigned k = 0; k < exp; ++k) r = total_derivative_slot(r, slot);
    return r;
}

DiffFunction signed_total_derivative(const DiffFunction& f, const MultiIndex& i) {
    DiffFunction r = total_derivative(f, i);
    return parity_sign(i) == 1 ? r : -r;
}

DiffFunction ev_apply(const std::vector<DiffFunction>& phi, const DiffFunction& f) {
    DiffFunction out;
    for (const auto& v : f.jet_support()) {
        if (v.dep >= phi.size()) continue;
        if (phi[v.dep].is_zero()) continue;
        out = out + total_derivative(phi[v.dep], v.index) * partial_jet(f, v);
    }
    return out;
}

std::vector<DiffFunction> characteristic_bracket(const std::vector<DiffFunction>& phi,
                                                 const std::vector<DiffFunction>& psi) {
    if (phi.size() != psi.size())
        throw std::invalid_argument("characteristic bracket needs characteristics of equal length");
    std::vector<DiffFunction> xi;
    xi.reserve(phi.size());
    for (size_t a = 0; a < phi.size(); ++a) xi.push_back(ev_apply(phi, psi[a]) - ev_apply(psi, phi[a]));
    return xi;
}

DiffFunction pairing(const std::vector<DiffFunction>& f, const std::vector<DiffFunction>& g) {
    if (f.size() != g.size()) throw std::invalid_argument("pairing needs tuples of equal length");
    DiffFunction out;
    for (size_t a = 0; a < f.size(); ++a) out = out + f[a] * g[a];
    return out;
}

DiffFunction divergence(const Signature& sig, const std::vector<DiffFunction>& current) {
    if (current.size() != sig.m())
        throw std::invalid_argument("divergence needs one current component per independent variable");
    DiffFunction out;
    for (unsigned mu = 0; mu < sig.m(); ++mu) out = out + total_derivative_slot(current[mu], mu);
    return out;
}

}  // namespace jetpoisson
