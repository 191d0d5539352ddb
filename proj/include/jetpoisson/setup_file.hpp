#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "jetpoisson/diff_operator.hpp"

namespace jetpoisson {

class SetupError : public std::runtime_error {
public:
    SetupError(const std::string& message, std::size_t line)
        : std::runtime_error("setup error at line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct SetupOptions {
    unsigned max_degree = 3;  // witness search: monomial degree bound
    unsigned max_order = 2;   // witness search: jet order bound
    std::uint64_t seed = 0;
};

struct NamedOperator {
    std::string name;
    DiffOperator op;
};

/**
 * Problem description loaded from a .setup file:
 *
 *   # kdv, second structure
 *   [signature]
 *   independent = x
 *   dependent = u
 *
 *   [operator kdv2]
 *   matrix = D^3 + 2/3*u*D + 1/3*u_x
 *
 *   [options]
 *   max_degree = 3
 *
 * One [signature] section is required and must precede the operators; any
 * number of [operator NAME] sections follow, each with a matrix key parsed
 * by the operator grammar.  Unknown sections or keys are errors.
 */
struct SetupFile {
    Signature sig;
    std::vector<NamedOperator> operators;
    SetupOptions options;
};

SetupFile parse_setup(const std::string& text);
SetupFile load_setup(const std::string& path);

// deterministic re-rendering: signature, operators in file order with
// canonically printed matrices, then non-default options
std::string canonical_text(const SetupFile& setup);

std::uint64_t fnv1a64(std::string_view bytes);

// 16 hex digits of fnv1a64(canonical_text), the identity of the problem
std::string setup_digest(const SetupFile& setup);

}  // namespace jetpoisson
