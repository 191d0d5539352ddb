#pragma once

#include <cstdint>
#include <random>

#include "jetpoisson/bicomplex.hpp"
#include "jetpoisson/diff_operator.hpp"

namespace jetpoisson {

/**
 * Shape bounds for sampled functions.  Degrees and orders stay small on
 * purpose: the property tests exercise identities whose cost grows quickly
 * with both.
 */
struct SampleOptions {
    unsigned max_terms = 3;
    unsigned max_degree = 2;  // monomial total degree, x factors included
    unsigned max_order = 2;   // jet derivative order
    bool allow_x = true;
    bool main_only = true;  // jets restricted to the main dependent family
};

// Deterministic source of random algebra elements; a fixed seed fixes the
// entire draw sequence.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi);
    Rational rational();  // small, possibly zero
    Rational nonzero_rational();
    MultiIndex multiindex(unsigned slots, unsigned max_order);
    JetVar jet_var(const Signature& sig, unsigned max_order, bool main_only = true);

    DiffFunction function(const Signature& sig, const SampleOptions& opt = {});
    DiffFunction nonzero_function(const Signature& sig, const SampleOptions& opt = {});
    std::vector<DiffFunction> tuple(const Signature& sig, std::size_t size,
                                    const SampleOptions& opt = {});

    DiffOperator op(const Signature& sig, unsigned rows, unsigned cols, unsigned max_op_order,
                    const SampleOptions& opt = {});
    // Q - Q* for a random Q, hence skew-adjoint by construction
    DiffOperator skew_op(const Signature& sig, unsigned size, unsigned max_op_order,
                         const SampleOptions& opt = {});

    JetTuple jet_tuple(const Signature& sig, unsigned entries, unsigned max_index_order,
                       const SampleOptions& opt = {});
    MixedJetTuple mixed_tuple(const Signature& sig, unsigned entries, unsigned max_index_order,
                              const SampleOptions& opt = {});

    Derivation derivation(const Signature& sig, unsigned vert_entries, bool with_horiz,
                          unsigned max_index_order, const SampleOptions& opt = {});

    // homogeneous (p,q)-form with at most nterms monomials
    MixedForm form(const Signature& sig, unsigned p, unsigned q, unsigned nterms,
                   const SampleOptions& opt = {});

private:
    std::mt19937_64 rng_;
};

}  // namespace jetpoisson
