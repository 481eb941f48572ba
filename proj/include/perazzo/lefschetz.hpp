#pragma once

#include "perazzo/algebra.hpp"

#include <variant>

namespace perazzo {

enum class LefschetzMode { weak, strong };

/// A degree where no sampled form reached maximal rank: the best rank of
/// l^power : M_degree -> M_{degree+power} against min of the dimensions.
struct Deficit {
    std::size_t degree = 0;
    std::size_t power = 1;
    std::size_t rank = 0;
    std::size_t required = 0;

    friend bool operator==(const Deficit&, const Deficit&) = default;
};

template <Field F>
struct Holds {
    LinearForm<F> witness;
};

struct FailsGeneric {
    int trials = 0;
    std::vector<Deficit> deficits;
};

/// "Holds" carries a certificate; "fails" means every sampled form failed.
template <Field F>
struct LefschetzVerdict {
    LefschetzMode mode = LefschetzMode::weak;
    std::variant<Holds<F>, FailsGeneric> result;

    bool holds() const { return std::holds_alternative<Holds<F>>(result); }
};

inline constexpr int kDefaultTrials = 5;

template <Field F>
LefschetzVerdict<F> wlp(const GradedModule<F>& module, int trials = kDefaultTrials, std::uint64_t seed = 0);

/// Tests l^k for k = 1..top degree.
template <Field F>
LefschetzVerdict<F> slp(const GradedModule<F>& module, int trials = kDefaultTrials, std::uint64_t seed = 0);

/// Same tests on the algebra of a form. Over the rationals the ranks come
/// from l^k o b on the basis polynomials, which keeps the entries small.
template <Field F>
LefschetzVerdict<F> wlp(const AlgebraModel<F>& model, int trials = kDefaultTrials, std::uint64_t seed = 0);

template <Field F>
LefschetzVerdict<F> slp(const AlgebraModel<F>& model, int trials = kDefaultTrials, std::uint64_t seed = 0);

/// Deterministically re-checks a witness; returns the failing degrees (empty
/// when l has the Lefschetz property).
template <Field F>
std::vector<Deficit> lefschetz_deficits(const GradedModule<F>& module, const LinearForm<F>& ell, LefschetzMode mode);

template <Field F>
std::vector<Deficit> lefschetz_deficits(const AlgebraModel<F>& model, const LinearForm<F>& ell, LefschetzMode mode);

/// det of the Hessian matrix at `trials` random points; true when all vanish.
template <Field F>
bool hessian_vanishes(const Polynomial<F>& form, int trials = kDefaultTrials, std::uint64_t seed = 0);

/// Expanded Hessian determinant; at most 5 variables and degree 6.
template <Field F>
Polynomial<F> hessian_determinant(const Polynomial<F>& form);

/// For P^4 Perazzo h-vectors of degree d >= 5: WLP iff at most one h_i equals d+2.
bool thm_wlp_p4_predicate(const HVector& h, int d);

/// Builds gen_min(n,m,d,seed), checks its h-vector is h_min(n,m,d) and returns
/// whether WLP holds. Requires n >= m >= 3, h_min(n,m,d) unimodal and
/// n+1 <= beta_s; violations throw PreconditionError.
template <Field F>
bool minimal_wlp_check(const F& field, int n, int m, int d, std::uint64_t seed, int trials = kDefaultTrials);

}  // namespace perazzo
