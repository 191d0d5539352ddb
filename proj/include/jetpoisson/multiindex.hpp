#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <vector>

namespace jetpoisson {

/**
 * Sparse multi-index i = (i^1, ..., i^m) over independent-variable slots.
 * Stored as (slot, exponent) pairs with exponent > 0, sorted by slot.
 * The default total order is graded-lex: first |i|, then lexicographic on
 * the dense exponent vector from slot 0 upward.
 */
class MultiIndex {
public:
    using Entry = std::pair<unsigned, unsigned>;

    MultiIndex() = default;

    static MultiIndex unit(unsigned slot) {
        MultiIndex i;
        i.entries_.push_back({slot, 1});
        return i;
    }

    static MultiIndex from_dense(const std::vector<unsigned>& exps) {
        MultiIndex i;
        for (unsigned s = 0; s < exps.size(); ++s)
            if (exps[s] > 0) i.entries_.push_back({s, exps[s]});
        return i;
    }

    bool is_zero() const { return entries_.empty(); }

    unsigned order() const {
        unsigned n = 0;
        for (const auto& [s, e] : entries_) n += e;
        return n;
    }

    unsigned at(unsigned slot) const {
        for (const auto& [s, e] : entries_) {
            if (s == slot) return e;
            if (s > slot) break;
        }
        return 0;
    }

    // largest slot with nonzero exponent; only meaningful when !is_zero()
    unsigned max_slot() const { return entries_.back().first; }

    const std::vector<Entry>& entries() const { return entries_; }

    MultiIndex plus(unsigned slot) const {
        MultiIndex r = *this;
        for (auto& [s, e] : r.entries_) {
            if (s == slot) {
                ++e;
                return r;
            }
        }
        r.entries_.push_back({slot, 1});
        std::sort(r.entries_.begin(), r.entries_.end());
        return r;
    }

    std::optional<MultiIndex> minus(unsigned slot) const {
        MultiIndex r;
        bool hit = false;
        for (const auto& [s, e] : entries_) {
            if (s == slot) {
                hit = true;
                if (e > 1) r.entries_.push_back({s, e - 1});
            } else {
                r.entries_.push_back({s, e});
            }
        }
        if (!hit) return std::nullopt;
        return r;
    }

    MultiIndex operator+(const MultiIndex& o) const {
        MultiIndex r;
        auto a = entries_.begin(), b = o.entries_.begin();
        while (a != entries_.end() || b != o.entries_.end()) {
            if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first))
                r.entries_.push_back(*a++);
            else if (a == entries_.end() || b->first < a->first)
                r.entries_.push_back(*b++);
            else {
                r.entries_.push_back({a->first, a->second + b->second});
                ++a, ++b;
            }
        }
        return r;
    }

    // component-wise subtraction; nullopt unless o <= this everywhere
    std::optional<MultiIndex> checked_minus(const MultiIndex& o) const {
        MultiIndex r;
        auto a = entries_.begin(), b = o.entries_.begin();
        while (a != entries_.end() || b != o.entries_.end()) {
            if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first)) {
                r.entries_.push_back(*a++);
            } else if (a == entries_.end() || b->first < a->first) {
                return std::nullopt;
            } else {
                if (b->second > a->second) return std::nullopt;
                if (a->second > b->second) r.entries_.push_back({a->first, a->second - b->second});
                ++a, ++b;
            }
        }
        return r;
    }

    std::strong_ordering operator<=>(const MultiIndex& o) const {
        unsigned oa = order(), ob = o.order();
        if (oa != ob) return oa <=> ob;
        auto a = entries_.begin(), b = o.entries_.begin();
        while (a != entries_.end() && b != o.entries_.end()) {
            if (a->first != b->first)
                // nonzero exponent at the earlier slot wins the lex comparison
                return a->first < b->first ? std::strong_ordering::greater
                                           : std::strong_ordering::less;
            if (a->second != b->second) return a->second <=> b->second;
            ++a, ++b;
        }
        if (a != entries_.end()) return std::strong_ordering::greater;
        if (b != o.entries_.end()) return std::strong_ordering::less;
        return std::strong_ordering::equal;
    }

    bool operator==(const MultiIndex& o) const { return entries_ == o.entries_; }

private:
    std::vector<Entry> entries_;
};

inline int parity_sign(const MultiIndex& i) { return i.order() % 2 == 0 ? 1 : -1; }

// product of per-slot binomial coefficients C(i^s, j^s); requires j <= i
unsigned long long multi_binomial(const MultiIndex& i, const MultiIndex& j);

// every j with j <= i component-wise, in a fixed (odometer) order
std::vector<MultiIndex> sub_indices(const MultiIndex& i);

}  // namespace jetpoisson
