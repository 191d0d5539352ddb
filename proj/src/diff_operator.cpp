#include "jetpoisson/diff_operator.hpp"

#include <algorithm>
#include <stdexcept>

namespace jetpoisson {

namespace {

// normal-ordered D^i ∘ f = sum_{k<=i} C(i,k) (D^k f) D^{i-k}
std::vector<std::pair<MultiIndex, DiffFunction>> d_compose_coeff(const MultiIndex& i, const DiffFunction& f) {
    std::vector<std::pair<MultiIndex, DiffFunction>> out;
    for (const auto& k : sub_indices(i)) {
        DiffFunction c = total_derivative(f, k).scaled(make_rational(static_cast<long>(multi_binomial(i, k))));
        if (!c.is_zero()) out.push_back({*i.checked_minus(k), std::move(c)});
    }
    return out;
}

}  // namespace

DiffOperator DiffOperator::identity(unsigned n) {
    DiffOperator p(n, n);
    for (unsigned a = 0; a < n; ++a) p.add_term(a, a, MultiIndex{}, DiffFunction::constant(1));
    return p;
}

DiffOperator DiffOperator::scalar(DiffFunction coeff) {
    DiffOperator p(1, 1);
    p.add_term(0, 0, MultiIndex{}, coeff);
    return p;
}

DiffOperator DiffOperator::d_slot(unsigned slot) { return d_power(MultiIndex::unit(slot)); }

DiffOperator DiffOperator::d_power(const MultiIndex& i) {
    DiffOperator p(1, 1);
    p.add_term(0, 0, i, DiffFunction::constant(1));
    return p;
}

void DiffOperator::add_term(unsigned r, unsigned c, const MultiIndex& i, const DiffFunction& coeff) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("operator entry out of range");
    if (coeff.is_zero()) return;
    Entry& e = mat_[{r, c}];
    auto it = std::lower_bound(e.begin(), e.end(), i,
                               [](const auto& term, const MultiIndex& key) { return term.first < key; });
    if (it != e.end() && it->first == i) {
        it->second = it->second + coeff;
        if (it->second.is_zero()) e.erase(it);
    } else {
        e.insert(it, {i, coeff});
    }
    if (e.empty()) mat_.erase({r, c});
}

const DiffOperator::Entry& DiffOperator::entry(unsigned r, unsigned c) const {
    static const Entry empty;
    auto it = mat_.find({r, c});
    return it == mat_.end() ? empty : it->second;
}

unsigned DiffOperator::max_order() const {
    unsigned n = 0;
    for (const auto& [rc, e] : mat_)
        for (const auto& [i, coeff] : e) n = std::max(n, i.order());
    return n;
}

DiffOperator DiffOperator::operator+(const DiffOperator& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("operator shape mismatch");
    DiffOperator r = *this;
    for (const auto& [rc, e] : o.mat_)
        for (const auto& [i, coeff] : e) r.add_term(rc.first, rc.second, i, coeff);
    return r;
}

DiffOperator DiffOperator::operator-() const {
    DiffOperator r = *this;
    for (auto& [rc, e] : r.mat_)
        for (auto& [i, coeff] : e) coeff = -coeff;
    return r;
}

DiffOperator DiffOperator::operator-(const DiffOperator& o) const { return *this + (-o); }

DiffOperator DiffOperator::scaled(const Rational& c) const {
    if (c == 0) return DiffOperator(rows_, cols_);
    DiffOperator r = *this;
    for (auto& [rc, e] : r.mat_)
        for (auto& [i, coeff] : e) coeff = coeff.scaled(c);
    return r;
}

DiffOperator compose(const DiffOperator& p, const DiffOperator& q) {
    if (p.cols() != q.rows()) throw std::invalid_argument("operator composition shape mismatch");
    DiffOperator out(p.rows(), q.cols());
    for (const auto& [rc, pe] : p.entries()) {
        for (unsigned c = 0; c < q.cols(); ++c) {
            const auto& qe = q.entry(rc.second, c);
            if (qe.empty()) continue;
            for (const auto& [i, pc] : pe)
                for (const auto& [j, qc] : qe)
                    for (const auto& [k, mid] : d_compose_coeff(i, qc)) out.add_term(rc.first, c, k + j, pc * mid);
        }
    }
    return out;
}

DiffOperator adjoint(const DiffOperator& p) {
    DiffOperator out(p.cols(), p.rows());
    for (const auto& [rc, e] : p.entries())
        for (const auto& [i, coeff] : e) {
            int sign = parity_sign(i);
            for (const auto& [k, c] : d_compose_coeff(i, coeff))
                out.add_term(rc.second, rc.first, k, sign == 1 ? c : -c);
        }
    return out;
}

bool is_skew_adjoint(const DiffOperator& p) {
    if (p.rows() != p.cols()) return false;
    return (adjoint(p) + p).is_zero();
}

std::vector<DiffFunction> DiffOperator::apply(const std::vector<DiffFunction>& g) const {
    if (g.size() != cols_) throw std::invalid_argument("operator application needs one component per column");
    std::vector<DiffFunction> out(rows_);
    for (const auto& [rc, e] : mat_)
        for (const auto& [i, coeff] : e)
            out[rc.first] = out[rc.first] + coeff * total_derivative(g[rc.second], i);
    return out;
}

DiffOperator frechet(const Signature& sig, const DiffFunction& lagrangian) {
    DiffOperator out(1, sig.main_deps());
    for (const auto& v : lagrangian.jet_support()) {
        if (v.dep >= sig.main_deps())
            throw std::invalid_argument("frechet derivative over a formal covector family");
        out.add_term(0, v.dep, v.index, partial_jet(lagrangian, v));
    }
    return out;
}

std::vector<DiffFunction> green_current(const Signature& sig, const DiffOperator& p,
                                        const std::vector<DiffFunction>& f,
                                        const std::vector<DiffFunction>& g) {
    if (f.size() != p.rows() || g.size() != p.cols())
        throw std::invalid_argument("green current needs tuples matching the operator shape");
    std::vector<DiffFunction> psi(sig.m());
    for (const auto& [rc, e] : p.entries()) {
        for (const auto& [i, coeff] : e) {
            // peel K * D^i L, largest slot first:
            //   K * D_mu h = D_mu(K h) - (D_mu K) h
            DiffFunction k = f[rc.first] * coeff;
            MultiIndex rest = i;
            while (!rest.is_zero()) {
                unsigned mu = rest.max_slot();
                rest = *rest.minus(mu);
                psi[mu] = psi[mu] + k * total_derivative(g[rc.second], rest);
                k = -total_derivative_slot(k, mu);
            }
        }
    }
    return psi;
}

DiffOperator ev_on_operator(const std::vector<DiffFunction>& phi, const DiffOperator& p) {
    DiffOperator out(p.rows(), p.cols());
    for (const auto& [rc, e] : p.entries())
        for (const auto& [i, coeff] : e) out.add_term(rc.first, rc.second, i, ev_apply(phi, coeff));
    return out;
}

}  // namespace jetpoisson
