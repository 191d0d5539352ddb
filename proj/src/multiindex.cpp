#include "jetpoisson/multiindex.hpp"

namespace jetpoisson {

unsigned long long multi_binomial(const MultiIndex& i, const MultiIndex& j) {
    auto choose = [](unsigned n, unsigned k) -> unsigned long long {
        if (k > n) return 0;
        if (k > n - k) k = n - k;
        unsigned long long r = 1;
        for (unsigned t = 1; t <= k; ++t) r = r * (n - k + t) / t;
        return r;
    };
    unsigned long long r = 1;
    for (const auto& [slot, exp] : j.entries()) r *= choose(i.at(slot), exp);
    return r;
}

std::vector<MultiIndex> sub_indices(const MultiIndex& i) {
    std::vector<MultiIndex> out;
    out.push_back(MultiIndex{});
    for (const auto& [slot, exp] : i.entries()) {
        std::vector<MultiIndex> next;
        next.reserve(out.size() * (exp + 1));
        for (const auto& base : out) {
            MultiIndex cur = base;
            next.push_back(cur);
            for (unsigned k = 1; k <= exp; ++k) {
                cur = cur.plus(slot);
                next.push_back(cur);
            }
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace jetpoisson
