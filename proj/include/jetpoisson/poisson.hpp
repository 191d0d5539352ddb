#pragma once

#include <array>
#include <optional>
#include <string>

#include "jetpoisson/diff_operator.hpp"
#include "jetpoisson/variational.hpp"

namespace jetpoisson {

/**
 * A candidate Poisson structure: a square matrix operator Lambda over the
 * main dependent family of a signature without formal families.  The bracket
 * of two functionals (given by densities) is {R, S} = <euler R, Lambda euler S>
 * up to total divergence.
 */
struct PoissonSetup {
    Signature sig;
    DiffOperator lambda;

    PoissonSetup(Signature s, DiffOperator l);
};

// characteristic of the would-be Hamiltonian flow of R: Lambda euler(R)
std::vector<DiffFunction> hamiltonian_characteristic(const PoissonSetup& setup,
                                                     const DiffFunction& r);

DiffFunction bracket(const PoissonSetup& setup, const DiffFunction& r, const DiffFunction& s);

struct JacobiReport {
    std::string method;
    DiffFunction residual;
    bool zero;  // the residual is a total divergence
};

// sum of {K,{L,M}} over cyclic permutations, by nested brackets
JacobiReport jacobi_direct(const PoissonSetup& setup, const DiffFunction& k,
                           const DiffFunction& l, const DiffFunction& m);

// the same residual class computed from the deformation of Lambda along the
// Hamiltonian flows: sum over cyclic permutations of <euler K, [ev_{phi(L)}, Lambda] euler M>
JacobiReport jacobi_flow(const PoissonSetup& setup, const DiffFunction& k,
                       const DiffFunction& l, const DiffFunction& m);

// skew-adjoint with every coefficient free of jet variables: such operators
// are Hamiltonian outright
bool hamiltonian_sufficient(const PoissonSetup& setup);

/**
 * Universal Jacobi test: adjoin three formal covector families theta1..theta3
 * and form T = sum_cyc <theta1, ev_{Lambda theta2}(Lambda) theta3>.  Lambda is
 * Hamiltonian iff T is a total divergence in the extended algebra.
 */
struct UniversalCheck {
    Signature extended;
    DiffFunction residual;
    bool zero;
};

UniversalCheck hamiltonian_universal(const PoissonSetup& setup);

// pure jet monomials over the main family (no explicit x), total degree
// 1..max_degree, every jet index of order <= max_order, in a fixed order
std::vector<DiffFunction> witness_basis(const PoissonSetup& setup, unsigned max_degree,
                                        unsigned max_order);

struct Witness {
    std::array<DiffFunction, 3> triple;
    DiffFunction residual;
};

// first basis triple (in enumeration order) whose direct Jacobi residual is
// not a divergence; the Jacobi form is alternating, so only distinct
// unordered triples are tried
std::optional<Witness> find_witness(const PoissonSetup& setup, unsigned max_degree,
                                    unsigned max_order);

enum class Verdict { hamiltonian, not_hamiltonian, inconclusive };

std::string to_string(Verdict v);

struct HamiltonianReport {
    Verdict verdict = Verdict::inconclusive;
    std::string reason;
    bool skew = false;
    bool constant_coefficients = false;
    std::optional<UniversalCheck> universal;
    std::optional<Witness> witness;
};

/**
 * Full decision pipeline: a non-skew operator is rejected outright; a skew
 * operator with a vanishing universal residual is Hamiltonian; otherwise a
 * witness search up to the given bounds either certifies the failure or the
 * verdict stays inconclusive.
 */
HamiltonianReport classify(const PoissonSetup& setup, unsigned max_degree = 3,
                           unsigned max_order = 2);

}  // namespace jetpoisson
