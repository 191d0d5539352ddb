#include "jetpoisson/validate.hpp"

#include <sstream>

#include "jetpoisson/printer.hpp"
#include "jetpoisson/sampling.hpp"

namespace jetpoisson {

std::vector<std::pair<JetVar, DiffFunction>> FreeGamma::bracket_row(const Signature&, unsigned mu,
                                                                    const JetVar& a) const {
    auto down = a.index.minus(mu);
    if (!down) return {};
    return {{JetVar{a.dep, *down}, DiffFunction::constant(-1)}};
}

namespace {

CheckResult commuting_totals(const Signature& sig, Sampler& draw, unsigned cases) {
    for (unsigned k = 0; k < cases; ++k) {
        DiffFunction f = draw.function(sig);
        for (unsigned mu = 0; mu < sig.m(); ++mu)
            for (unsigned nu = mu + 1; nu < sig.m(); ++nu) {
                DiffFunction lhs = total_derivative_slot(total_derivative_slot(f, nu), mu);
                DiffFunction rhs = total_derivative_slot(total_derivative_slot(f, mu), nu);
                if (!(lhs - rhs).is_zero())
                    return {"commuting_totals", false,
                            "[D" + std::to_string(mu + 1) + ", D" + std::to_string(nu + 1) +
                                "] != 0 on " + to_string(sig, f)};
            }
    }
    return {"commuting_totals", true, "total derivatives commute on all samples"};
}

CheckResult finite_jet_support(const Signature& sig, Sampler& draw, unsigned cases) {
    for (unsigned k = 0; k < cases; ++k) {
        DiffFunction f = draw.function(sig);
        unsigned before = f.max_jet_order();
        for (unsigned mu = 0; mu < sig.m(); ++mu) {
            DiffFunction df = total_derivative_slot(f, mu);
            if (df.jet_support().size() > 2 * (f.jet_support().size() + 1) ||
                df.max_jet_order() > before + 1)
                return {"finite_jet_support", false,
                        "derivative of " + to_string(sig, f) + " grew beyond one order"};
        }
    }
    return {"finite_jet_support", true, "jet support stays finite, order grows by at most one"};
}

CheckResult gamma_finiteness(const Signature& sig, const GammaModel& model, unsigned window) {
    // enumerate all jet coordinates up to the window order and count, per
    // column b, how many rows (mu, a) reach it; column-finiteness demands a
    // uniform bound, which the free model meets with one hit per slot
    std::map<JetVar, unsigned> hits;
    std::vector<MultiIndex> layer{MultiIndex{}}, all{MultiIndex{}};
    for (unsigned n = 1; n <= window; ++n) {
        std::vector<MultiIndex> next;
        for (const auto& i : layer) {
            unsigned from = i.is_zero() ? 0 : i.max_slot();
            for (unsigned mu = from; mu < sig.m(); ++mu) next.push_back(i.plus(mu));
        }
        all.insert(all.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    for (DepId a = 0; a < sig.main_deps(); ++a)
        for (const auto& i : all)
            for (unsigned mu = 0; mu < sig.m(); ++mu) {
                auto row = model.bracket_row(sig, mu, JetVar{a, i});
                if (row.size() > sig.m() * (i.order() + 1))
                    return {"gamma_finiteness", false,
                            "row (" + std::to_string(mu) + ", order " + std::to_string(i.order()) +
                                ") has " + std::to_string(row.size()) + " entries"};
                for (const auto& [b, coeff] : row)
                    if (!coeff.is_zero()) ++hits[b];
            }
    for (const auto& [b, count] : hits)
        if (count > sig.m())
            return {"gamma_finiteness", false,
                    "column " + jet_name(sig, b) + " is reached by " + std::to_string(count) +
                        " rows inside the window"};
    return {"gamma_finiteness", true, "rows finite and columns uniformly bounded on the window"};
}

CheckResult gamma_commutator(const Signature& sig, const GammaModel& model, Sampler& draw,
                             unsigned cases) {
    for (unsigned k = 0; k < cases; ++k) {
        DiffFunction f = draw.function(sig);
        JetVar a = draw.jet_var(sig, 3);
        for (unsigned mu = 0; mu < sig.m(); ++mu) {
            // [D_mu, d/du_a] f, computed from the engine's own derivatives
            DiffFunction lhs =
                total_derivative_slot(partial_jet(f, a), mu) - partial_jet(total_derivative_slot(f, mu), a);
            DiffFunction rhs;
            for (const auto& [b, coeff] : model.bracket_row(sig, mu, a))
                rhs = rhs + coeff * partial_jet(f, b);
            if (!(lhs - rhs).is_zero()) {
                std::ostringstream msg;
                msg << "model '" << model.name() << "' disagrees with [D" << mu + 1 << ", d/d"
                    << jet_name(sig, a) << "] on " << to_string(sig, f);
                return {"gamma_commutator", false, msg.str()};
            }
        }
    }
    return {"gamma_commutator", true,
            "model '" + model.name() + "' matches the jet-partial commutators"};
}

CheckResult prolongation_kernel(const Signature& sig, Sampler& draw, unsigned cases) {
    const unsigned window = 2;
    for (unsigned k = 0; k < cases; ++k) {
        std::vector<DiffFunction> phi = draw.tuple(sig, sig.main_deps());
        JetTuple prolonged = j_prolong(sig, phi, window + 1);
        MixedJetTuple eta = nabla(sig, prolonged);
        for (const auto& [key, comp] : eta)
            if (key.second.index.order() <= window && !comp.is_zero())
                return {"prolongation_kernel", false,
                        "nabla(j phi) has a nonzero component at " + jet_name(sig, key.second)};
        DiffFunction f = draw.function(sig);
        for (unsigned mu = 0; mu < sig.m(); ++mu) {
            DiffFunction lhs = ev_apply(phi, total_derivative_slot(f, mu));
            DiffFunction rhs = total_derivative_slot(ev_apply(phi, f), mu);
            if (!(lhs - rhs).is_zero())
                return {"prolongation_kernel", false,
                        "[ev_phi, D" + std::to_string(mu + 1) + "] != 0 on " + to_string(sig, f)};
        }
    }
    return {"prolongation_kernel", true, "nabla(j phi) = 0 on the window and ev commutes with D"};
}

CheckResult euler_kernel(const Signature& sig, Sampler& draw, unsigned cases) {
    for (unsigned k = 0; k < cases; ++k) {
        std::vector<DiffFunction> psi = draw.tuple(sig, sig.m());
        DiffFunction div = divergence(sig, psi);
        for (const auto& component : euler(sig, div))
            if (!component.is_zero())
                return {"euler_kernel", false,
                        "euler(Div psi) != 0 for psi = " + to_string(sig, psi)};
    }
    return {"euler_kernel", true, "euler annihilates divergences on all samples"};
}

}  // namespace

ValidationReport validate_algebra(const Signature& sig, const GammaModel& model,
                                  std::uint64_t seed, unsigned cases) {
    Sampler draw(seed);
    ValidationReport report;
    report.checks.push_back(commuting_totals(sig, draw, cases));
    report.checks.push_back(finite_jet_support(sig, draw, cases));
    report.checks.push_back(gamma_finiteness(sig, model, 3));
    report.checks.push_back(gamma_commutator(sig, model, draw, cases));
    report.checks.push_back(prolongation_kernel(sig, draw, cases));
    report.checks.push_back(euler_kernel(sig, draw, cases));
    report.passed = true;
    for (const auto& check : report.checks) report.passed = report.passed && check.passed;
    return report;
}

}  // namespace jetpoisson
