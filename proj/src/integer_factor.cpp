#include "integer_factor.hpp"

#include <algorithm>
#include <map>

namespace omegader::detail {

namespace {

// Brent's variant of Pollard rho; n is odd, composite and not a prime power
// of a small prime.
mpz_class rho_split(const mpz_class& n) {
    for (unsigned long c = 1;; ++c) {
        mpz_class y = 2, x, ys, q = 1, g = 1;
        unsigned long r = 1;
        auto step = [&](const mpz_class& v) { return mpz_class((v * v + c) % n); };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = step(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                const unsigned long lim = std::min<unsigned long>(128, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = step(y);
                    q = (q * abs(mpz_class(x - y))) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
            }
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = step(ys);
                mpz_class d = abs(mpz_class(x - ys));
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        ++out[n];
        return;
    }
    const mpz_class d = rho_split(n);
    factor_into(d, out);
    factor_into(mpz_class(n / d), out);
}

}  // namespace

std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n) {
    std::map<mpz_class, unsigned> found;
    mpz_class m = n;
    for (unsigned long p = 2; p < 10000 && p * p <= m; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
            ++found[mpz_class(p)];
            m /= p;
        }
    }
    factor_into(m, found);
    return {found.begin(), found.end()};
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : factorize(n)) {
        const size_t base = divs.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace omegader::detail
