#include "specht/bigint.hpp"

#include <stdexcept>

namespace specht {

BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt multinomial(const std::vector<int>& parts) {
    long total = 0;
    for (int x : parts) {
        if (x < 0) throw std::invalid_argument("multinomial: negative part");
        total += x;
    }
    BigInt r = factorial(total);
    for (int x : parts) r /= factorial(x);
    return r;
}

}  // namespace specht
