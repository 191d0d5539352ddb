#include "jetpoisson/diff_function.hpp"

#include <algorithm>

namespace jetpoisson {

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.xexp = xexp + o.xexp;
    auto a = jets.begin(), b = o.jets.begin();
    while (a != jets.end() || b != o.jets.end()) {
        if (b == o.jets.end() || (a != jets.end() && a->first < b->first))
            r.jets.push_back(*a++);
        else if (a == jets.end() || b->first < a->first)
            r.jets.push_back(*b++);
        else {
            r.jets.push_back({a->first, a->second + b->second});
            ++a, ++b;
        }
    }
    return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    unsigned da = total_degree(), db = o.total_degree();
    if (da != db) return da <=> db;
    if (auto c = xexp <=> o.xexp; c != 0) return c;
    auto a = jets.begin(), b = o.jets.begin();
    while (a != jets.end() && b != o.jets.end()) {
        if (auto c = a->first <=> b->first; c != 0) return c;
        if (a->second != b->second) return a->second <=> b->second;
        ++a, ++b;
    }
    if (a != jets.end()) return std::strong_ordering::greater;
    if (b != o.jets.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

DiffFunction DiffFunction::constant(Rational c) {
    DiffFunction f;
    if (c != 0) f.terms_.push_back({Monomial{}, std::move(c)});
    return f;
}

DiffFunction DiffFunction::indep(unsigned slot, unsigned exp) {
    if (exp == 0) return constant(1);
    Monomial m;
    for (unsigned k = 0; k < exp; ++k) m.xexp = m.xexp.plus(slot);
    return monomial(make_rational(1), std::move(m));
}

DiffFunction DiffFunction::jet(JetVar v) {
    Monomial m;
    m.jets.push_back({std::move(v), 1});
    return monomial(make_rational(1), std::move(m));
}

DiffFunction DiffFunction::monomial(Rational c, Monomial m) {
    DiffFunction f;
    if (c != 0) f.terms_.push_back({std::move(m), std::move(c)});
    return f;
}

DiffFunction DiffFunction::from_accumulator(std::map<Monomial, Rational>&& acc) {
    DiffFunction f;
    f.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) f.terms_.push_back({m, std::move(c)});
    return f;
}

bool DiffFunction::operator==(const DiffFunction& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t k = 0; k < terms_.size(); ++k)
        if (terms_[k].coeff != o.terms_[k].coeff || !(terms_[k].mono == o.terms_[k].mono))
            return false;
    return true;
}

DiffFunction DiffFunction::operator+(const DiffFunction& o) const {
    DiffFunction r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->mono < b->mono))
            r.terms_.push_back(*a++);
        else if (a == terms_.end() || b->mono < a->mono)
            r.terms_.push_back(*b++);
        else {
            Rational c = a->coeff + b->coeff;
            if (c != 0) r.terms_.push_back({a->mono, std::move(c)});
            ++a, ++b;
        }
    }
    return r;
}

DiffFunction DiffFunction::operator-() const {
    DiffFunction r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

DiffFunction DiffFunction::operator-(const DiffFunction& o) const { return *this + (-o); }

DiffFunction DiffFunction::operator*(const DiffFunction& o) const {
    std::map<Monomial, Rational> acc;
    for (const auto& ta : terms_)
        for (const auto& tb : o.terms_) acc[ta.mono * tb.mono] += ta.coeff * tb.coeff;
    return from_accumulator(std::move(acc));
}

DiffFunction DiffFunction::scaled(const Rational& c) const {
    if (c == 0) return {};
    DiffFunction r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

DiffFunction DiffFunction::pow(unsigned k) const {
    DiffFunction r = constant(1);
    for (unsigned t = 0; t < k; ++t) r = r * *this;
    return r;
}

std::vector<JetVar> DiffFunction::jet_support() const {
    std::vector<JetVar> out;
    for (const auto& t : terms_)
        for (const auto& [v, e] : t.mono.jets) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool DiffFunction::has_jets() const {
    for (const auto& t : terms_)
        if (!t.mono.jets.empty()) return true;
    return false;
}

unsigned DiffFunction::max_jet_order() const {
    unsigned n = 0;
    for (const auto& t : terms_)
        for (const auto& [v, e] : t.mono.jets) n = std::max(n, v.index.order());
    return n;
}

unsigned DiffFunction::total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

bool DiffFunction::is_constant(Rational* value) const {
    if (terms_.empty()) {
        if (value) *value = 0;
        return true;
    }
    if (terms_.size() == 1 && terms_[0].mono == Monomial{}) {
        if (value) *value = terms_[0].coeff;
        return true;
    }
    return false;
}

}  // namespace jetpoisson
