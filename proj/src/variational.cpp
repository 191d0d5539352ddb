#include "jetpoisson/variational.hpp"

#include <stdexcept>

namespace jetpoisson {

std::vector<DiffFunction> euler(const Signature& sig, const DiffFunction& lagrangian) {
    std::vector<DiffFunction> delta(sig.total_deps());
    for (const auto& v : lagrangian.jet_support()) {
        if (v.dep >= delta.size()) throw std::invalid_argument("jet coordinate outside the signature");
        delta[v.dep] = delta[v.dep] + signed_total_derivative(partial_jet(lagrangian, v), v.index);
    }
    return delta;
}

JetTuple partial_gradient(const Signature& sig, const DiffFunction& f) {
    JetTuple out;
    for (const auto& v : f.jet_support()) {
        if (v.dep >= sig.total_deps()) throw std::invalid_argument("jet coordinate outside the signature");
        out[v] = partial_jet(f, v);
    }
    return out;
}

bool is_divergence(const Signature& sig, const DiffFunction& f) {
    for (const auto& component : euler(sig, f))
        if (!component.is_zero()) return false;
    return true;
}

bool functional_equal(const Signature& sig, const DiffFunction& k, const DiffFunction& l) {
    return is_divergence(sig, k - l);
}

JetTuple j_prolong(const Signature& sig, const std::vector<DiffFunction>& phi, unsigned max_order) {
    if (phi.size() > sig.total_deps()) throw std::invalid_argument("characteristic longer than the signature");
    JetTuple out;
    for (DepId a = 0; a < phi.size(); ++a) {
        if (phi[a].is_zero()) continue;
        // grow orders one slot at a time so each component reuses its predecessor
        std::map<MultiIndex, DiffFunction> layer{{MultiIndex{}, phi[a]}};
        out[JetVar{a, MultiIndex{}}] = phi[a];
        for (unsigned n = 1; n <= max_order; ++n) {
            std::map<MultiIndex, DiffFunction> next;
            for (const auto& [i, value] : layer) {
                unsigned from = i.is_zero() ? 0 : i.max_slot();
                for (unsigned mu = from; mu < sig.m(); ++mu)
                    next.emplace(i.plus(mu), total_derivative_slot(value, mu));
            }
            for (const auto& [i, value] : next)
                if (!value.is_zero()) out[JetVar{a, i}] = value;
            layer = std::move(next);
        }
    }
    return out;
}

std::vector<DiffFunction> j_star(const Signature& sig, const JetTuple& f) {
    std::vector<DiffFunction> out(sig.total_deps());
    for (const auto& [v, component] : f) {
        if (v.dep >= out.size()) throw std::invalid_argument("jet coordinate outside the signature");
        out[v.dep] = out[v.dep] + signed_total_derivative(component, v.index);
    }
    return out;
}

MixedJetTuple nabla(const Signature& sig, const JetTuple& phi) {
    MixedJetTuple out;
    auto add = [&](unsigned mu, const JetVar& v, const DiffFunction& value) {
        if (value.is_zero()) return;
        auto key = std::make_pair(mu, v);
        auto it = out.find(key);
        if (it == out.end())
            out.emplace(key, value);
        else {
            it->second = it->second + value;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    for (const auto& [v, component] : phi) {
        for (unsigned mu = 0; mu < sig.m(); ++mu) {
            add(mu, v, total_derivative_slot(component, mu));
            if (auto down = v.index.minus(mu)) add(mu, JetVar{v.dep, *down}, -component);
        }
    }
    return out;
}

JetTuple nabla_star(const Signature& sig, const MixedJetTuple& chi) {
    JetTuple out;
    auto add = [&](const JetVar& v, const DiffFunction& value) {
        if (value.is_zero()) return;
        auto it = out.find(v);
        if (it == out.end())
            out.emplace(v, value);
        else {
            it->second = it->second + value;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    for (const auto& [key, component] : chi) {
        const auto& [mu, v] = key;
        if (mu >= sig.m()) throw std::out_of_range("independent-variable index out of range");
        add(v, -total_derivative_slot(component, mu));
        add(JetVar{v.dep, v.index.plus(mu)}, -component);
    }
    return out;
}

DiffFunction jet_pairing(const JetTuple& f, const JetTuple& phi) {
    DiffFunction out;
    for (const auto& [v, component] : f) {
        auto it = phi.find(v);
        if (it != phi.end()) out = out + component * it->second;
    }
    return out;
}

DiffFunction mixed_pairing(const MixedJetTuple& chi, const MixedJetTuple& eta) {
    DiffFunction out;
    for (const auto& [key, component] : chi) {
        auto it = eta.find(key);
        if (it != eta.end()) out = out + component * it->second;
    }
    return out;
}

std::vector<DiffFunction> nabla_green_current(const Signature& sig, const MixedJetTuple& chi,
                                              const JetTuple& phi) {
    std::vector<DiffFunction> psi(sig.m());
    for (const auto& [key, component] : chi) {
        auto it = phi.find(key.second);
        if (it != phi.end()) psi[key.first] = psi[key.first] + component * it->second;
    }
    return psi;
}

CovectorSplit split_covector(const Signature& sig, const JetTuple& f) {
    CovectorSplit split;
    std::vector<DiffFunction> collapsed = j_star(sig, f);
    for (DepId a = 0; a < collapsed.size(); ++a)
        if (!collapsed[a].is_zero()) split.euler_part[JetVar{a, MultiIndex{}}] = collapsed[a];

    // peel the remainder r = f - g down to multi-index zero: a chi entry at
    // (mu, i-(mu)) with value -c cancels c at index i and pushes D_mu c one
    // step down, so the top index strictly decreases
    JetTuple remainder = f;
    for (const auto& [v, g] : split.euler_part) {
        auto it = remainder.find(v);
        if (it == remainder.end())
            remainder.emplace(v, -g);
        else {
            it->second = it->second - g;
            if (it->second.is_zero()) remainder.erase(it);
        }
    }
    while (true) {
        auto top = remainder.rbegin();
        while (top != remainder.rend() && top->second.is_zero()) ++top;
        if (top == remainder.rend()) break;
        const JetVar v = top->first;
        if (v.index.is_zero())
            throw std::logic_error("covector splitting left a nonzero remainder at multi-index zero");
        const DiffFunction c = top->second;
        unsigned mu = v.index.max_slot();
        JetVar down{v.dep, *v.index.minus(mu)};
        auto [slot, inserted] = split.chi.emplace(std::make_pair(mu, down), -c);
        if (!inserted) slot->second = slot->second - c;
        remainder.erase(v);
        DiffFunction push = total_derivative_slot(c, mu);
        if (!push.is_zero()) {
            auto it = remainder.find(down);
            if (it == remainder.end())
                remainder.emplace(down, -push);
            else {
                it->second = it->second - push;
                if (it->second.is_zero()) remainder.erase(it);
            }
        }
    }
    return split;
}

}  // namespace jetpoisson
