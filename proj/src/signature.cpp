#include "jetpoisson/signature.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace jetpoisson {

namespace {

bool valid_name(const std::string& name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c))) return false;
    // "D", "D1", ... are reserved for the derivative symbols
    if (name[0] == 'D' &&
        std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return false;
    return true;
}

}  // namespace

Signature::Signature(std::vector<std::string> independent, std::vector<std::string> dependent)
    : indep_(std::move(independent)), deps_(std::move(dependent)), main_(static_cast<unsigned>(deps_.size())) {
    if (indep_.empty()) throw std::invalid_argument("signature needs at least one independent variable");
    if (deps_.empty()) throw std::invalid_argument("signature needs at least one dependent variable");
    std::set<std::string> seen;
    for (const auto& list : {indep_, deps_}) {
        for (const auto& n : list) {
            if (!valid_name(n))
                throw std::invalid_argument("invalid variable name '" + n +
                                            "' (letters then alphanumerics; D-symbols are reserved)");
            if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
        }
    }
}

std::optional<unsigned> Signature::find_indep(const std::string& name) const {
    for (unsigned s = 0; s < indep_.size(); ++s)
        if (indep_[s] == name) return s;
    return std::nullopt;
}

std::optional<DepId> Signature::find_dep(const std::string& name) const {
    for (DepId a = 0; a < deps_.size(); ++a)
        if (deps_[a] == name) return a;
    return std::nullopt;
}

bool Signature::single_letter_indeps() const {
    return std::all_of(indep_.begin(), indep_.end(), [](const std::string& n) { return n.size() == 1; });
}

Signature Signature::with_formal_families(unsigned count) const {
    if (formal_families() != 0)
        throw std::invalid_argument("signature already carries formal covector families");
    Signature ext;
    ext.indep_ = indep_;
    ext.deps_ = deps_;
    ext.main_ = main_;
    std::set<std::string> used(indep_.begin(), indep_.end());
    used.insert(deps_.begin(), deps_.end());
    for (unsigned f = 0; f < count; ++f) {
        for (unsigned a = 0; a < main_; ++a) {
            std::string name = "th" + std::to_string(f + 1) + deps_[a];
            while (used.count(name)) name += "z";
            used.insert(name);
            ext.deps_.push_back(std::move(name));
        }
    }
    return ext;
}

}  // namespace jetpoisson
