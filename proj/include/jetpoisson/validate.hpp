#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "jetpoisson/variational.hpp"

namespace jetpoisson {

/**
 * Structure functions of the algebra: the commutators of total derivatives
 * with jet partials, [D_mu, d/du_a] = sum_b gamma^b_{mu,a} d/du_b, given row
 * by row as finite lists.  The engine itself hard-codes the free model; a
 * model object lets the validator re-derive the commutators independently
 * and cross-check the assumptions the calculus rests on.
 */
class GammaModel {
public:
    virtual ~GammaModel() = default;

    virtual std::string name() const = 0;

    // finitely many (b, coefficient) pairs for fixed (mu, a)
    virtual std::vector<std::pair<JetVar, DiffFunction>> bracket_row(const Signature& sig,
                                                                     unsigned mu,
                                                                     const JetVar& a) const = 0;
};

// the free jet algebra: [D_mu, d/du^alpha_i] = -d/du^alpha_{i-(mu)}
class FreeGamma : public GammaModel {
public:
    std::string name() const override { return "free"; }
    std::vector<std::pair<JetVar, DiffFunction>> bracket_row(const Signature& sig, unsigned mu,
                                                             const JetVar& a) const override;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    bool passed = false;
    std::vector<CheckResult> checks;
};

/**
 * Cross-checks the assumptions behind the calculus on sampled data:
 * commuting total derivatives, finite jet support with bounded order growth,
 * finiteness of the gamma rows on a window, the gamma commutator identity
 * against the supplied model, the prolongation kernel nabla(j phi) = 0 with
 * [ev_phi, D_mu] = 0, and euler(Div psi) = 0.
 */
ValidationReport validate_algebra(const Signature& sig, const GammaModel& model,
                                  std::uint64_t seed, unsigned cases = 25);

}  // namespace jetpoisson
