#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jetpoisson/diff_function.hpp"

namespace jetpoisson {

/**
 * Names the coordinates of a differential algebra: m independent variables
 * x^mu and a finite main family of dependent variables u^alpha.  Formal
 * covector families (used by the universal Hamiltonian check) are appended
 * as extra dependent variables, one per main dependent, so every operation
 * on functions applies to them unchanged.
 *
 * Dependent ids: the main family occupies 0..n-1; formal family f occupies
 * (f+1)*n..(f+2)*n-1.
 */
class Signature {
public:
    // throws std::invalid_argument on empty lists, bad or duplicate names
    Signature(std::vector<std::string> independent, std::vector<std::string> dependent);

    unsigned m() const { return static_cast<unsigned>(indep_.size()); }
    unsigned main_deps() const { return main_; }
    unsigned total_deps() const { return static_cast<unsigned>(deps_.size()); }
    unsigned formal_families() const { return (total_deps() - main_) / main_; }

    const std::string& indep_name(unsigned slot) const { return indep_.at(slot); }
    const std::string& dep_name(DepId id) const { return deps_.at(id); }
    const std::vector<std::string>& indep_names() const { return indep_; }
    const std::vector<std::string>& dep_names() const { return deps_; }

    std::optional<unsigned> find_indep(const std::string& name) const;
    std::optional<DepId> find_dep(const std::string& name) const;

    // true when every independent variable has a one-character name, which
    // makes the letter-subscript jet spelling (u_xx) unambiguous
    bool single_letter_indeps() const;

    // id of component alpha of formal family f (0-based)
    DepId formal_dep(unsigned family, unsigned alpha) const { return (family + 1) * main_ + alpha; }

    // copy of this signature with `count` fresh formal covector families
    Signature with_formal_families(unsigned count) const;

    bool operator==(const Signature& o) const { return indep_ == o.indep_ && deps_ == o.deps_; }

private:
    Signature() = default;
    std::vector<std::string> indep_;
    std::vector<std::string> deps_;
    unsigned main_ = 0;
};

}  // namespace jetpoisson
