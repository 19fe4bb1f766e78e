#pragma once

#include <gmpxx.h>

#include <vector>

namespace specht {

using BigInt = mpz_class;

BigInt factorial(long n);

// binomial(n, k) with the convention that out-of-range k gives 0.
BigInt binomial(long n, long k);

// (sum parts)! / prod(parts[i]!).  Parts must be non-negative.
BigInt multinomial(const std::vector<int>& parts);

}  // namespace specht
