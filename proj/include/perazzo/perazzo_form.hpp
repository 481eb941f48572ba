#pragma once

#include "perazzo/errors.hpp"
#include "perazzo/field.hpp"
#include "perazzo/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace perazzo {

/// F = X_0 p_0 + ... + X_n p_n + G with p_i, G in K[U_1..U_m].
/// The p_i and G are stored over the m U-variables only.
template <Field F>
struct PerazzoForm {
    F field{};
    int n = 0;
    int m = 0;
    int d = 0;
    std::vector<Polynomial<F>> p;  // n+1 forms of degree d-1
    Polynomial<F> G;               // degree d, or zero

    VarLayout layout() const { return {n, m}; }

    friend bool operator==(const PerazzoForm& a, const PerazzoForm& b) {
        return a.n == b.n && a.m == b.m && a.d == b.d && a.p == b.p && a.G == b.G;
    }
};

/// n >= m >= 2, d >= 2 and n + 1 <= C(d+m-2, m-1).
bool perazzo_params_valid(int n, int m, int d);

struct ValidationReport {
    std::vector<std::string> violations;
    bool is_full_perazzo = false;

    bool valid() const { return violations.empty(); }
};

template <Field F>
ValidationReport validate(const PerazzoForm<F>& f);

/// The form as a polynomial in X_0..X_n, U_1..U_m. Throws ValidationError.
template <Field F>
Polynomial<F> assemble(const PerazzoForm<F>& f);

/// Minimal-h-vector forms in P^4:
///   I:   X U^{d-1} + Y U^{d-2} V + Z U^{d-3} V^2
///   II:  X U^{d-1} + Y U^{d-2} V + Z V^{d-1}
///   III: X U^{d-1} + Y (U + lambda V)^{d-1} + Z V^{d-1}, lambda != 0
enum class CanonicalCase { I, II, III };

/// Requires d >= 5. For case III an absent lambda is sampled nonzero from `seed`.
template <Field F>
PerazzoForm<F> gen_canonical(const F& field, CanonicalCase which, int d,
                             std::optional<typename F::Element> lambda = std::nullopt,
                             std::uint64_t seed = 0);

/// p_i = sum of `terms` random (d-1)-th powers of linear forms; G random
/// when with_G. Resamples with derived seeds (at most 16 retries) until the
/// p_i are independent.
template <Field F>
PerazzoForm<F> gen_power_sum(const F& field, int n, int m, int d, int terms, bool with_G,
                             std::uint64_t seed);

/// F = sum X_i L_i^{d-1} with random linear forms L_i (minimal h-vector).
template <Field F>
PerazzoForm<F> gen_min(const F& field, int n, int m, int d, std::uint64_t seed);

/// p_i (and G when with_G) with independent uniform coefficients (maximal h-vector).
template <Field F>
PerazzoForm<F> gen_general(const F& field, int n, int m, int d, bool with_G, std::uint64_t seed);

/// Each p_i independently a (d-1)-th power of a random linear form, a sum of
/// two such powers, or a random form; G random when with_G. Produces the
/// intermediate h-vectors between the minimal and maximal ones.
template <Field F>
PerazzoForm<F> gen_mixed(const F& field, int n, int m, int d, bool with_G, std::uint64_t seed);

/// l∘F for l = a_0 x_0 + ... + a_n x_n + b_1 u_1 + ... + b_m u_m, given as the
/// coefficient vector (a, b), returned as a degree d-1 Perazzo form.
/// Requires l != 0 and n+1 <= C(d+m-3, m-1); throws IndependenceLost if the
/// contracted p_i are dependent.
template <Field F>
PerazzoForm<F> contract_linear(const PerazzoForm<F>& f, std::span<const typename F::Element> ell);

}  // namespace perazzo
