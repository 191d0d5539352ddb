#include "jetpoisson/printer.hpp"

#include <sstream>

namespace jetpoisson {

namespace {

std::string monomial_factors(const Signature& sig, const Monomial& m) {
    std::ostringstream out;
    bool first = true;
    auto sep = [&] {
        if (!first) out << "*";
        first = false;
    };
    for (const auto& [slot, exp] : m.xexp.entries()) {
        sep();
        out << sig.indep_name(slot);
        if (exp > 1) out << "^" << exp;
    }
    for (const auto& [v, exp] : m.jets) {
        sep();
        out << jet_name(sig, v);
        if (exp > 1) out << "^" << exp;
    }
    return out.str();
}

// magnitude of one term, without its sign
std::string term_body(const Signature& sig, const Monomial& m, const Rational& abs_coeff) {
    std::string factors = monomial_factors(sig, m);
    if (factors.empty()) return to_string(abs_coeff);
    if (is_one(abs_coeff)) return factors;
    return to_string(abs_coeff) + "*" + factors;
}

std::string d_factors(const Signature& sig, const MultiIndex& i) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [slot, exp] : i.entries()) {
        if (!first) out << "*";
        first = false;
        out << "D";
        if (sig.m() > 1) out << slot + 1;
        if (exp > 1) out << "^" << exp;
    }
    return out.str();
}

std::string entry_to_string(const Signature& sig, const DiffOperator::Entry& entry) {
    if (entry.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // leading derivative first
    for (auto it = entry.rbegin(); it != entry.rend(); ++it) {
        const auto& [i, coeff] = *it;
        std::string d = d_factors(sig, i);
        bool negated = false;
        std::string body;
        if (coeff.terms().size() == 1) {
            const Term& t = coeff.terms()[0];
            negated = t.coeff < 0;
            body = term_body(sig, t.mono, negated ? Rational(-t.coeff) : t.coeff);
            if (!d.empty()) body = (body == "1") ? d : body + "*" + d;
        } else {
            body = "(" + to_string(sig, coeff) + ")";
            if (!d.empty()) body += "*" + d;
        }
        if (first) {
            if (negated) out << "-";
        } else {
            out << (negated ? " - " : " + ");
        }
        first = false;
        out << body;
    }
    return out.str();
}

}  // namespace

std::string jet_name(const Signature& sig, const JetVar& v) {
    std::string name = sig.dep_name(v.dep);
    if (v.index.is_zero()) return name;
    name += "[";
    for (unsigned slot = 0; slot < sig.m(); ++slot) {
        if (slot) name += ",";
        name += std::to_string(v.index.at(slot));
    }
    name += "]";
    return name;
}

std::string to_string(const Signature& sig, const DiffFunction& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    const auto& terms = f.terms();
    // leading (largest) monomial first
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        bool negated = it->coeff < 0;
        if (it == terms.rbegin()) {
            if (negated) out << "-";
        } else {
            out << (negated ? " - " : " + ");
        }
        out << term_body(sig, it->mono, negated ? Rational(-it->coeff) : it->coeff);
    }
    return out.str();
}

std::string to_string(const Signature& sig, const DiffOperator& p) {
    if (p.rows() == 1 && p.cols() == 1) return entry_to_string(sig, p.entry(0, 0));
    std::ostringstream out;
    out << "[";
    for (unsigned r = 0; r < p.rows(); ++r) {
        if (r) out << ",";
        out << "[";
        for (unsigned c = 0; c < p.cols(); ++c) {
            if (c) out << ", ";
            out << entry_to_string(sig, p.entry(r, c));
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

std::string to_string(const Signature& sig, const std::vector<DiffFunction>& tuple) {
    std::ostringstream out;
    out << "(";
    for (size_t k = 0; k < tuple.size(); ++k) {
        if (k) out << ", ";
        out << to_string(sig, tuple[k]);
    }
    out << ")";
    return out.str();
}

}  // namespace jetpoisson
