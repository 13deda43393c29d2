#pragma once

#include <gmpxx.h>

#include <vector>

namespace omegader::detail {

// Prime factorization of n > 0 as (prime, exponent) pairs, ascending.
std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n);

// All positive divisors of n > 0, ascending.
std::vector<mpz_class> positive_divisors(const mpz_class& n);

}  // namespace omegader::detail
