#include "jetpoisson/rational.hpp"

#include <stdexcept>

namespace jetpoisson {

Rational rational_from_digits(const std::string& num, const std::string& den) {
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace jetpoisson
