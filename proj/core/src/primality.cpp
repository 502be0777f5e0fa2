#include "dgmoduli/ring.hpp"

#include <gmpxx.h>

namespace dgm {

// Miller-Rabin with the fixed base set {2,...,37}, deterministic below
// 3.3e14 which covers every modulus this library accepts.
bool is_prime(long n) {
    if (n < 2) return false;
    for (long q : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    long d = n - 1;
    int s = 0;
    while (d % 2 == 0) { d /= 2; ++s; }
    mpz_class nz(n);
    for (long a : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        mpz_class x, base(a), exp(d);
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), nz.get_mpz_t());
        if (x == 1 || x == nz - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = (x * x) % nz;
            if (x == nz - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace dgm
