#include "jetpoisson/sampling.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace jetpoisson {

long Sampler::integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

Rational Sampler::rational() { return make_rational(integer(-4, 4), integer(1, 3)); }

Rational Sampler::nonzero_rational() {
    for (;;) {
        Rational r = rational();
        if (r != 0) return r;
    }
}

MultiIndex Sampler::multiindex(unsigned slots, unsigned max_order) {
    if (slots == 0) throw std::invalid_argument("multi-index needs at least one slot");
    MultiIndex i;
    long order = integer(0, max_order);
    for (long k = 0; k < order; ++k) i = i.plus(static_cast<unsigned>(integer(0, slots - 1)));
    return i;
}

JetVar Sampler::jet_var(const Signature& sig, unsigned max_order, bool main_only) {
    unsigned deps = main_only ? sig.main_deps() : sig.total_deps();
    return {static_cast<DepId>(integer(0, deps - 1)), multiindex(sig.m(), max_order)};
}

DiffFunction Sampler::function(const Signature& sig, const SampleOptions& opt) {
    DiffFunction f;
    long terms = integer(1, opt.max_terms);
    for (long t = 0; t < terms; ++t) {
        DiffFunction mono = DiffFunction::constant(nonzero_rational());
        long degree = integer(0, opt.max_degree);
        for (long d = 0; d < degree; ++d) {
            if (opt.allow_x && integer(0, 2) == 0)
                mono = mono * DiffFunction::indep(static_cast<unsigned>(integer(0, sig.m() - 1)));
            else
                mono = mono * DiffFunction::jet(jet_var(sig, opt.max_order, opt.main_only));
        }
        f = f + mono;
    }
    return f;
}

DiffFunction Sampler::nonzero_function(const Signature& sig, const SampleOptions& opt) {
    for (;;) {
        DiffFunction f = function(sig, opt);
        if (!f.is_zero()) return f;
    }
}

std::vector<DiffFunction> Sampler::tuple(const Signature& sig, std::size_t size,
                                         const SampleOptions& opt) {
    std::vector<DiffFunction> out;
    out.reserve(size);
    for (std::size_t k = 0; k < size; ++k) out.push_back(function(sig, opt));
    return out;
}

DiffOperator Sampler::op(const Signature& sig, unsigned rows, unsigned cols, unsigned max_op_order,
                         const SampleOptions& opt) {
    DiffOperator p(rows, cols);
    for (unsigned r = 0; r < rows; ++r)
        for (unsigned c = 0; c < cols; ++c) {
            long terms = integer(0, 2);
            for (long t = 0; t < terms; ++t)
                p.add_term(r, c, multiindex(sig.m(), max_op_order), function(sig, opt));
        }
    return p;
}

DiffOperator Sampler::skew_op(const Signature& sig, unsigned size, unsigned max_op_order,
                              const SampleOptions& opt) {
    DiffOperator q = op(sig, size, size, max_op_order, opt);
    return q - adjoint(q);
}

JetTuple Sampler::jet_tuple(const Signature& sig, unsigned entries, unsigned max_index_order,
                            const SampleOptions& opt) {
    JetTuple out;
    for (unsigned k = 0; k < entries; ++k) {
        JetVar v{static_cast<DepId>(integer(0, sig.main_deps() - 1)),
                 multiindex(sig.m(), max_index_order)};
        DiffFunction comp = nonzero_function(sig, opt);
        auto it = out.find(v);
        if (it == out.end())
            out.emplace(v, comp);
        else
            it->second = it->second + comp;
    }
    return out;
}

MixedJetTuple Sampler::mixed_tuple(const Signature& sig, unsigned entries,
                                   unsigned max_index_order, const SampleOptions& opt) {
    MixedJetTuple out;
    for (unsigned k = 0; k < entries; ++k) {
        auto key = std::make_pair(static_cast<unsigned>(integer(0, sig.m() - 1)),
                                  JetVar{static_cast<DepId>(integer(0, sig.main_deps() - 1)),
                                         multiindex(sig.m(), max_index_order)});
        DiffFunction comp = nonzero_function(sig, opt);
        auto it = out.find(key);
        if (it == out.end())
            out.emplace(key, comp);
        else
            it->second = it->second + comp;
    }
    return out;
}

Derivation Sampler::derivation(const Signature& sig, unsigned vert_entries, bool with_horiz,
                               unsigned max_index_order, const SampleOptions& opt) {
    Derivation x;
    for (unsigned k = 0; k < vert_entries; ++k) {
        JetVar v{static_cast<DepId>(integer(0, sig.main_deps() - 1)),
                 multiindex(sig.m(), max_index_order)};
        DiffFunction comp = nonzero_function(sig, opt);
        auto it = x.vert.find(v);
        if (it == x.vert.end())
            x.vert.emplace(v, comp);
        else
            it->second = it->second + comp;
    }
    if (with_horiz) {
        x.horiz.reserve(sig.m());
        for (unsigned mu = 0; mu < sig.m(); ++mu) x.horiz.push_back(function(sig, opt));
    }
    return x;
}

MixedForm Sampler::form(const Signature& sig, unsigned p, unsigned q, unsigned nterms,
                        const SampleOptions& opt) {
    if (q > sig.m()) throw std::invalid_argument("horizontal degree exceeds the number of independent variables");
    MixedForm w;
    for (unsigned t = 0; t < nterms; ++t) {
        std::set<JetVar> vert;
        while (vert.size() < p)
            vert.insert(JetVar{static_cast<DepId>(integer(0, sig.main_deps() - 1)),
                               multiindex(sig.m(), opt.max_order)});
        std::vector<unsigned> slots(sig.m());
        for (unsigned mu = 0; mu < sig.m(); ++mu) slots[mu] = mu;
        std::shuffle(slots.begin(), slots.end(), rng_);
        slots.resize(q);
        std::sort(slots.begin(), slots.end());

        MixedForm term = MixedForm::from_function(nonzero_function(sig, opt));
        for (const auto& v : vert) term = wedge(term, MixedForm::delta(v));
        for (unsigned s : slots) term = wedge(term, MixedForm::dx(s));
        w = w + term;
    }
    return w;
}

}  // namespace jetpoisson
