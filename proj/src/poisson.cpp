#include "jetpoisson/poisson.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace jetpoisson {

namespace {

void check_function(const Signature& sig, const DiffFunction& f, const char* where) {
    for (const auto& v : f.jet_support()) {
        if (v.dep >= sig.main_deps())
            throw std::invalid_argument(std::string(where) + ": jet coordinate outside the main family");
        for (const auto& [slot, exp] : v.index.entries())
            if (slot >= sig.m())
                throw std::invalid_argument(std::string(where) + ": jet index slot out of range");
    }
    for (const auto& t : f.terms())
        for (const auto& [slot, exp] : t.mono.xexp.entries())
            if (slot >= sig.m())
                throw std::invalid_argument(std::string(where) + ": independent variable out of range");
}

}  // namespace

PoissonSetup::PoissonSetup(Signature s, DiffOperator l) : sig(std::move(s)), lambda(std::move(l)) {
    if (sig.formal_families() != 0)
        throw std::invalid_argument("poisson setup expects a signature without formal families");
    if (lambda.rows() != sig.main_deps() || lambda.cols() != sig.main_deps())
        throw std::invalid_argument("operator must be square over the dependent family");
    for (const auto& [rc, entry] : lambda.entries())
        for (const auto& [i, coeff] : entry) {
            for (const auto& [slot, exp] : i.entries())
                if (slot >= sig.m())
                    throw std::invalid_argument("operator term differentiates along a missing variable");
            check_function(sig, coeff, "operator coefficient");
        }
}

std::vector<DiffFunction> hamiltonian_characteristic(const PoissonSetup& setup,
                                                     const DiffFunction& r) {
    return setup.lambda.apply(euler(setup.sig, r));
}

DiffFunction bracket(const PoissonSetup& setup, const DiffFunction& r, const DiffFunction& s) {
    return pairing(euler(setup.sig, r), hamiltonian_characteristic(setup, s));
}

JacobiReport jacobi_direct(const PoissonSetup& setup, const DiffFunction& k,
                           const DiffFunction& l, const DiffFunction& m) {
    DiffFunction residual = bracket(setup, k, bracket(setup, l, m)) +
                            bracket(setup, l, bracket(setup, m, k)) +
                            bracket(setup, m, bracket(setup, k, l));
    bool zero = is_divergence(setup.sig, residual);
    return {"direct", std::move(residual), zero};
}

JacobiReport jacobi_flow(const PoissonSetup& setup, const DiffFunction& k,
                       const DiffFunction& l, const DiffFunction& m) {
    std::array<const DiffFunction*, 3> f{&k, &l, &m};
    DiffFunction residual;
    for (int c = 0; c < 3; ++c) {
        const DiffFunction& a = *f[c];
        const DiffFunction& b = *f[(c + 1) % 3];
        const DiffFunction& d = *f[(c + 2) % 3];
        DiffOperator deformed = ev_on_operator(hamiltonian_characteristic(setup, b), setup.lambda);
        residual = residual + pairing(euler(setup.sig, a), deformed.apply(euler(setup.sig, d)));
    }
    bool zero = is_divergence(setup.sig, residual);
    return {"flow", std::move(residual), zero};
}

bool hamiltonian_sufficient(const PoissonSetup& setup) {
    if (!is_skew_adjoint(setup.lambda)) return false;
    for (const auto& [rc, entry] : setup.lambda.entries())
        for (const auto& [i, coeff] : entry)
            if (coeff.has_jets()) return false;
    return true;
}

UniversalCheck hamiltonian_universal(const PoissonSetup& setup) {
    Signature ext = setup.sig.with_formal_families(3);
    unsigned n = ext.main_deps();
    std::array<std::vector<DiffFunction>, 3> theta;
    for (unsigned fam = 0; fam < 3; ++fam) {
        theta[fam].reserve(n);
        for (unsigned alpha = 0; alpha < n; ++alpha)
            theta[fam].push_back(DiffFunction::jet(ext.formal_dep(fam, alpha)));
    }
    DiffFunction t;
    for (int c = 0; c < 3; ++c) {
        const auto& th1 = theta[c];
        const auto& th2 = theta[(c + 1) % 3];
        const auto& th3 = theta[(c + 2) % 3];
        DiffOperator deformed = ev_on_operator(setup.lambda.apply(th2), setup.lambda);
        t = t + pairing(th1, deformed.apply(th3));
    }
    bool zero = is_divergence(ext, t);
    return {std::move(ext), std::move(t), zero};
}

std::vector<DiffFunction> witness_basis(const PoissonSetup& setup, unsigned max_degree,
                                        unsigned max_order) {
    // all jet coordinates of the main family up to max_order, ascending
    std::vector<JetVar> vars;
    std::vector<MultiIndex> indices{MultiIndex{}};
    std::vector<MultiIndex> layer = indices;
    for (unsigned n = 1; n <= max_order; ++n) {
        std::vector<MultiIndex> next;
        for (const auto& i : layer) {
            unsigned from = i.is_zero() ? 0 : i.max_slot();
            for (unsigned mu = from; mu < setup.sig.m(); ++mu) next.push_back(i.plus(mu));
        }
        indices.insert(indices.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    for (DepId a = 0; a < setup.sig.main_deps(); ++a)
        for (const auto& i : indices) vars.push_back({a, i});
    std::sort(vars.begin(), vars.end());

    std::vector<DiffFunction> basis;
    std::vector<std::size_t> pick;
    auto emit = [&] {
        Monomial mono;
        for (std::size_t k = 0; k < pick.size(); ++k) {
            if (!mono.jets.empty() && mono.jets.back().first == vars[pick[k]])
                ++mono.jets.back().second;
            else
                mono.jets.push_back({vars[pick[k]], 1});
        }
        basis.push_back(DiffFunction::monomial(1, std::move(mono)));
    };
    // multisets in non-decreasing var order, grouped by total degree
    auto recurse = [&](auto&& self, std::size_t from, unsigned remaining) -> void {
        if (remaining == 0) {
            emit();
            return;
        }
        for (std::size_t k = from; k < vars.size(); ++k) {
            pick.push_back(k);
            self(self, k, remaining - 1);
            pick.pop_back();
        }
    };
    for (unsigned degree = 1; degree <= max_degree; ++degree) recurse(recurse, 0, degree);
    return basis;
}

std::optional<Witness> find_witness(const PoissonSetup& setup, unsigned max_degree,
                                    unsigned max_order) {
    std::vector<DiffFunction> basis = witness_basis(setup, max_degree, max_order);
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b)
            for (std::size_t c = b + 1; c < basis.size(); ++c) {
                JacobiReport rep = jacobi_direct(setup, basis[a], basis[b], basis[c]);
                if (!rep.zero)
                    return Witness{{basis[a], basis[b], basis[c]}, std::move(rep.residual)};
            }
    return std::nullopt;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::hamiltonian: return "hamiltonian";
        case Verdict::not_hamiltonian: return "not_hamiltonian";
        default: return "inconclusive";
    }
}

HamiltonianReport classify(const PoissonSetup& setup, unsigned max_degree, unsigned max_order) {
    HamiltonianReport report;
    report.skew = is_skew_adjoint(setup.lambda);
    if (!report.skew) {
        report.verdict = Verdict::not_hamiltonian;
        report.reason = "the operator is not skew-adjoint";
        return report;
    }
    report.constant_coefficients = hamiltonian_sufficient(setup);
    report.universal = hamiltonian_universal(setup);
    if (report.universal->zero) {
        report.verdict = Verdict::hamiltonian;
        report.reason = report.constant_coefficients
                            ? "skew-adjoint with coefficients free of jet variables"
                            : "the universal Jacobi form is a total divergence";
        return report;
    }
    report.witness = find_witness(setup, max_degree, max_order);
    if (report.witness) {
        report.verdict = Verdict::not_hamiltonian;
        report.reason = "explicit functional triple violates the Jacobi identity";
    } else {
        report.verdict = Verdict::inconclusive;
        report.reason = "universal Jacobi form did not reduce and no witness was found within the search bounds";
    }
    return report;
}

}  // namespace jetpoisson
