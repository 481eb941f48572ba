#pragma once

#include "perazzo/polynomial.hpp"

#include <gmpxx.h>

#include <span>

namespace perazzo {

/// C(n, k), zero when k < 0 or k > n.
mpz_class binomial(long n, long k);

/// |lambda|! / (lambda_1! ... lambda_m!).
mpz_class multinomial(const Monomial& lambda);

/// Exact conversion; throws std::overflow_error if v does not fit.
std::int64_t to_int64(const mpz_class& v);

}  // namespace perazzo
