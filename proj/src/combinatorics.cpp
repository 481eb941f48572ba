#include "perazzo/combinatorics.hpp"

#include <stdexcept>

namespace perazzo {

mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class multinomial(const Monomial& lambda) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), lambda.degree());
    mpz_class f;
    for (auto e : lambda.exponents()) {
        mpz_fac_ui(f.get_mpz_t(), e);
        r /= f;
    }
    return r;
}

std::int64_t to_int64(const mpz_class& v) {
    if (!v.fits_slong_p())
        throw std::overflow_error("integer " + v.get_str() + " exceeds 64 bits");
    return v.get_si();
}

}  // namespace perazzo
