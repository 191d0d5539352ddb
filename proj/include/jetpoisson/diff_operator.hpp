#pragma once

#include <map>
#include <vector>

#include "jetpoisson/jet_algebra.hpp"

namespace jetpoisson {

/**
 * Matrix differential operator in normal form: entry (r,c) is a sum of
 * terms  coeff * D^i  with the coefficient function on the left.  Entries
 * and terms are sparse; a missing entry is zero.  Rows and columns are
 * dependent-variable ids of whatever tuples the operator acts on.
 */
class DiffOperator {
public:
    using Entry = std::vector<std::pair<MultiIndex, DiffFunction>>;  // sorted by multi-index

    DiffOperator(unsigned rows, unsigned cols) : rows_(rows), cols_(cols) {
        if (rows == 0 || cols == 0) throw std::invalid_argument("operator needs positive dimensions");
    }

    static DiffOperator identity(unsigned n);
    static DiffOperator scalar(DiffFunction coeff);            // 1x1 multiplication operator
    static DiffOperator d_slot(unsigned slot);                  // 1x1 D_mu
    static DiffOperator d_power(const MultiIndex& i);           // 1x1 D^i

    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }

    // adds coeff * D^i at entry (r,c)
    void add_term(unsigned r, unsigned c, const MultiIndex& i, const DiffFunction& coeff);

    const Entry& entry(unsigned r, unsigned c) const;
    bool is_zero() const { return mat_.empty(); }
    const std::map<std::pair<unsigned, unsigned>, Entry>& entries() const { return mat_; }
    unsigned max_order() const;

    // (P g)^r = sum_c sum_i coeff * D^i g[c]; g.size() must equal cols()
    std::vector<DiffFunction> apply(const std::vector<DiffFunction>& g) const;

    bool operator==(const DiffOperator& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && mat_ == o.mat_; }

    DiffOperator operator+(const DiffOperator& o) const;
    DiffOperator operator-(const DiffOperator& o) const;
    DiffOperator operator-() const;
    DiffOperator scaled(const Rational& c) const;

private:
    unsigned rows_, cols_;
    std::map<std::pair<unsigned, unsigned>, Entry> mat_;
};

// operator composition (P after Q); cols(P) must equal rows(Q)
DiffOperator compose(const DiffOperator& p, const DiffOperator& q);

// Lagrange adjoint: transpose and replace coeff * D^i by (-D)^i ∘ coeff,
// renormalized with coefficients on the left
DiffOperator adjoint(const DiffOperator& p);

bool is_skew_adjoint(const DiffOperator& p);

// frechet(L) = row operator with entries sum_i (dL/du^alpha_i) D^i over the
// main dependent family, so apply(frechet(L), phi) = (ev_phi L)
DiffOperator frechet(const Signature& sig, const DiffFunction& lagrangian);

/**
 * Green current for the integration-by-parts identity
 *   <f, P g> - <P* f, g> = Div psi.
 * Each term f_r * coeff * D^i g^c is peeled one derivative at a time,
 * largest slot first, which makes the returned current deterministic.
 */
std::vector<DiffFunction> green_current(const Signature& sig, const DiffOperator& p,
                                        const std::vector<DiffFunction>& f,
                                        const std::vector<DiffFunction>& g);

// applies ev_phi to every coefficient; represents the commutator [ev_phi, P]
DiffOperator ev_on_operator(const std::vector<DiffFunction>& phi, const DiffOperator& p);

}  // namespace jetpoisson
