#include "jetpoisson/bicomplex.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace jetpoisson {

namespace {

struct RawFactor {
    bool horizontal = false;
    JetVar v;
    unsigned slot = 0;

    std::strong_ordering operator<=>(const RawFactor& o) const {
        if (horizontal != o.horizontal) return horizontal <=> o.horizontal;
        if (horizontal) return slot <=> o.slot;
        return v <=> o.v;
    }
    bool operator==(const RawFactor& o) const = default;
};

// insertion sort counting swaps; sign 0 flags a repeated factor
int sort_factors(std::vector<RawFactor>& seq) {
    int sign = 1;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        for (std::size_t j = i; j > 0 && seq[j] < seq[j - 1]; --j) {
            std::swap(seq[j], seq[j - 1]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i] == seq[i - 1]) return 0;
    return sign;
}

using FormKey = std::pair<std::vector<JetVar>, std::vector<unsigned>>;
using FormAccumulator = std::map<FormKey, DiffFunction>;

void accumulate(FormAccumulator& acc, const DiffFunction& coeff, std::vector<RawFactor> seq) {
    if (coeff.is_zero()) return;
    int sign = sort_factors(seq);
    if (sign == 0) return;
    FormKey key;
    for (const auto& f : seq) {
        if (f.horizontal)
            key.second.push_back(f.slot);
        else
            key.first.push_back(f.v);
    }
    DiffFunction value = sign < 0 ? -coeff : coeff;
    auto it = acc.find(key);
    if (it == acc.end())
        acc.emplace(std::move(key), std::move(value));
    else
        it->second = it->second + value;
}

MixedForm collect(FormAccumulator&& acc) {
    MixedForm out;
    for (auto& [key, coeff] : acc)
        if (!coeff.is_zero()) out.add_raw(coeff, key.first, key.second);
    return out;
}

std::vector<RawFactor> raw_sequence(const FormTerm& t) {
    std::vector<RawFactor> seq;
    seq.reserve(t.vertical.size() + t.horizontal.size());
    for (const auto& v : t.vertical) seq.push_back({false, v, 0});
    for (unsigned s : t.horizontal) seq.push_back({true, {}, s});
    return seq;
}

}  // namespace

MixedForm MixedForm::from_function(const DiffFunction& f) {
    MixedForm w;
    if (!f.is_zero()) w.add_raw(f, {}, {});
    return w;
}

MixedForm MixedForm::delta(const JetVar& v) {
    MixedForm w;
    w.add_raw(DiffFunction::constant(1), {v}, {});
    return w;
}

MixedForm MixedForm::dx(unsigned slot) {
    MixedForm w;
    w.add_raw(DiffFunction::constant(1), {}, {slot});
    return w;
}

bool MixedForm::homogeneous(unsigned p, unsigned q) const {
    for (const auto& t : terms_)
        if (t.vertical.size() != p || t.horizontal.size() != q) return false;
    return true;
}

void MixedForm::add_raw(const DiffFunction& coeff, const std::vector<JetVar>& vertical,
                        const std::vector<unsigned>& horizontal) {
    terms_.push_back({coeff, vertical, horizontal});
}

MixedForm MixedForm::operator+(const MixedForm& o) const {
    FormAccumulator acc;
    for (const auto* side : {this, &o})
        for (const auto& t : side->terms_) {
            FormKey key{t.vertical, t.horizontal};
            auto it = acc.find(key);
            if (it == acc.end())
                acc.emplace(std::move(key), t.coeff);
            else
                it->second = it->second + t.coeff;
        }
    return collect(std::move(acc));
}

MixedForm MixedForm::operator-(const MixedForm& o) const { return *this + (-o); }

MixedForm MixedForm::operator-() const {
    MixedForm w;
    for (const auto& t : terms_) w.add_raw(-t.coeff, t.vertical, t.horizontal);
    return w;
}

MixedForm MixedForm::scaled(const Rational& c) const {
    if (c == 0) return {};
    MixedForm w;
    for (const auto& t : terms_) w.add_raw(t.coeff.scaled(c), t.vertical, t.horizontal);
    return w;
}

bool MixedForm::operator==(const MixedForm& o) const {
    return (*this - o).is_zero();
}

MixedForm wedge(const MixedForm& a, const MixedForm& b) {
    FormAccumulator acc;
    for (const auto& s : a.terms())
        for (const auto& t : b.terms()) {
            auto seq = raw_sequence(s);
            auto tail = raw_sequence(t);
            seq.insert(seq.end(), tail.begin(), tail.end());
            accumulate(acc, s.coeff * t.coeff, std::move(seq));
        }
    return collect(std::move(acc));
}

MixedForm d_v(const Signature& sig, const MixedForm& w) {
    FormAccumulator acc;
    for (const auto& t : w.terms()) {
        for (const auto& a : t.coeff.jet_support()) {
            if (a.dep >= sig.total_deps()) throw std::invalid_argument("jet coordinate outside the signature");
            auto seq = raw_sequence(t);
            seq.insert(seq.begin(), {false, a, 0});
            accumulate(acc, partial_jet(t.coeff, a), std::move(seq));
        }
    }
    return collect(std::move(acc));
}

MixedForm d_h(const Signature& sig, const MixedForm& w) {
    FormAccumulator acc;
    for (const auto& t : w.terms()) {
        auto base = raw_sequence(t);
        for (unsigned mu = 0; mu < sig.m(); ++mu) {
            DiffFunction led = total_derivative_slot(t.coeff, mu);
            if (!led.is_zero()) {
                auto seq = base;
                seq.insert(seq.begin(), {true, {}, mu});
                accumulate(acc, led, std::move(seq));
            }
        }
        // d_h(du^alpha_i) = -sum_mu du^alpha_{i+(mu)} ^ dx^mu, inserted with
        // the anti-derivation sign (-1)^r at factor position r
        for (std::size_t r = 0; r < t.vertical.size(); ++r) {
            const JetVar& v = t.vertical[r];
            for (unsigned mu = 0; mu < sig.m(); ++mu) {
                auto seq = base;
                seq[r] = {false, JetVar{v.dep, v.index.plus(mu)}, 0};
                seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(r) + 1, {true, {}, mu});
                DiffFunction coeff = r % 2 == 0 ? -t.coeff : t.coeff;
                accumulate(acc, coeff, std::move(seq));
            }
        }
    }
    return collect(std::move(acc));
}

DiffFunction apply_derivation(const Signature& sig, const Derivation& x, const DiffFunction& f) {
    if (!x.horiz.empty() && x.horiz.size() != sig.m())
        throw std::invalid_argument("horizontal part must have one component per independent variable");
    DiffFunction out;
    for (const auto& [a, coeff] : x.vert) {
        if (coeff.is_zero()) continue;
        out = out + coeff * partial_jet(f, a);
    }
    for (unsigned mu = 0; mu < x.horiz.size(); ++mu) {
        if (x.horiz[mu].is_zero()) continue;
        out = out + x.horiz[mu] * total_derivative_slot(f, mu);
    }
    return out;
}

Derivation commutator(const Signature& sig, const Derivation& x, const Derivation& y) {
    Derivation z;
    auto add_vert = [&z](const JetVar& b, const DiffFunction& value) {
        if (value.is_zero()) return;
        auto it = z.vert.find(b);
        if (it == z.vert.end())
            z.vert.emplace(b, value);
        else {
            it->second = it->second + value;
            if (it->second.is_zero()) z.vert.erase(it);
        }
    };

    for (const auto& [b, yb] : y.vert) add_vert(b, apply_derivation(sig, x, yb));
    for (const auto& [b, xb] : x.vert) add_vert(b, -apply_derivation(sig, y, xb));
    // cross terms from [D_mu, d/du^beta_j] = -d/du^beta_{j-(mu)}
    for (unsigned nu = 0; nu < y.horiz.size(); ++nu) {
        if (y.horiz[nu].is_zero()) continue;
        for (const auto& [b, xb] : x.vert)
            if (auto down = b.index.minus(nu)) add_vert(JetVar{b.dep, *down}, y.horiz[nu] * xb);
    }
    for (unsigned mu = 0; mu < x.horiz.size(); ++mu) {
        if (x.horiz[mu].is_zero()) continue;
        for (const auto& [b, yb] : y.vert)
            if (auto down = b.index.minus(mu)) add_vert(JetVar{b.dep, *down}, -(x.horiz[mu] * yb));
    }

    if (!x.horiz.empty() || !y.horiz.empty()) {
        z.horiz.assign(sig.m(), DiffFunction{});
        for (unsigned nu = 0; nu < sig.m(); ++nu) {
            if (nu < y.horiz.size()) z.horiz[nu] = z.horiz[nu] + apply_derivation(sig, x, y.horiz[nu]);
            if (nu < x.horiz.size()) z.horiz[nu] = z.horiz[nu] - apply_derivation(sig, y, x.horiz[nu]);
        }
        bool all_zero = true;
        for (const auto& c : z.horiz) all_zero = all_zero && c.is_zero();
        if (all_zero) z.horiz.clear();
    }
    return z;
}

namespace {

DiffFunction factor_value(const FormTerm& t, std::size_t slot_index, const Derivation& arg) {
    if (slot_index < t.vertical.size()) {
        auto it = arg.vert.find(t.vertical[slot_index]);
        return it == arg.vert.end() ? DiffFunction{} : it->second;
    }
    unsigned mu = t.horizontal[slot_index - t.vertical.size()];
    return mu < arg.horiz.size() ? arg.horiz[mu] : DiffFunction{};
}

// determinant over the function ring by cofactor expansion along the first row
DiffFunction small_det(const std::vector<std::vector<DiffFunction>>& mat,
                       std::vector<std::size_t> cols, std::size_t row) {
    if (cols.empty()) return DiffFunction::constant(1);
    DiffFunction out;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        if (mat[row][cols[k]].is_zero()) continue;
        std::vector<std::size_t> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        DiffFunction minor = small_det(mat, std::move(rest), row + 1);
        DiffFunction piece = mat[row][cols[k]] * minor;
        out = k % 2 == 0 ? out + piece : out - piece;
    }
    return out;
}

}  // namespace

DiffFunction eval_form(const Signature& sig, const MixedForm& w,
                       const std::vector<Derivation>& args) {
    for (const auto& arg : args)
        if (!arg.horiz.empty() && arg.horiz.size() != sig.m())
            throw std::invalid_argument("horizontal part must have one component per independent variable");
    const std::size_t r = args.size();
    Rational weight = 1;
    for (std::size_t k = 2; k <= r; ++k) weight *= static_cast<long>(k);
    weight = 1 / weight;

    DiffFunction out;
    for (const auto& t : w.terms()) {
        if (t.vertical.size() + t.horizontal.size() != r) continue;
        if (r == 0) {
            out = out + t.coeff;
            continue;
        }
        std::vector<std::vector<DiffFunction>> mat(r, std::vector<DiffFunction>(r));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) mat[i][j] = factor_value(t, i, args[j]);
        std::vector<std::size_t> cols(r);
        for (std::size_t j = 0; j < r; ++j) cols[j] = j;
        out = out + weight * (t.coeff * small_det(mat, std::move(cols), 0));
    }
    return out;
}

MixedForm volume_form(const Signature& sig) {
    MixedForm w;
    std::vector<unsigned> all(sig.m());
    for (unsigned mu = 0; mu < sig.m(); ++mu) all[mu] = mu;
    w.add_raw(DiffFunction::constant(1), {}, all);
    return w;
}

MixedForm contracted_volume(const Signature& sig, unsigned mu) {
    if (mu >= sig.m()) throw std::out_of_range("independent-variable index out of range");
    MixedForm w;
    std::vector<unsigned> rest;
    for (unsigned nu = 0; nu < sig.m(); ++nu)
        if (nu != mu) rest.push_back(nu);
    auto one = DiffFunction::constant(1);
    w.add_raw(mu % 2 == 0 ? one : -one, {}, rest);
    return w;
}

MixedForm from_lagrangian(const Signature& sig, const DiffFunction& lagrangian) {
    return wedge(MixedForm::from_function(lagrangian), volume_form(sig));
}

MixedForm from_current(const Signature& sig, const std::vector<DiffFunction>& current) {
    if (current.size() != sig.m())
        throw std::invalid_argument("current must have one component per independent variable");
    MixedForm w;
    for (unsigned mu = 0; mu < sig.m(); ++mu)
        w = w + wedge(MixedForm::from_function(current[mu]), contracted_volume(sig, mu));
    return w;
}

MixedForm from_jet_covector(const Signature& sig, const JetTuple& f) {
    MixedForm w;
    for (const auto& [v, comp] : f)
        w = w + wedge(MixedForm::from_function(comp), wedge(MixedForm::delta(v), volume_form(sig)));
    return w;
}

MixedForm from_mixed_covector(const Signature& sig, const MixedJetTuple& chi) {
    MixedForm w;
    for (const auto& [key, comp] : chi) {
        const auto& [mu, v] = key;
        w = w + wedge(MixedForm::from_function(comp),
                      wedge(MixedForm::delta(v), contracted_volume(sig, mu)));
    }
    return w;
}

}  // namespace jetpoisson
