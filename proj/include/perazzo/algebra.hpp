#pragma once

#include "perazzo/hilbert.hpp"
#include "perazzo/matrix.hpp"
#include "perazzo/polynomial.hpp"
#include "perazzo/rng.hpp"

#include <vector>

namespace perazzo {

/// Finite graded module over K[x_0..x_{N}] given by per-degree dimensions and
/// the action of each variable: mult[v][k] maps degree k to degree k+1
/// (dims[k+1] x dims[k]).
template <Field F>
struct GradedModule {
    F field{};
    std::size_t nvars = 0;
    std::vector<std::size_t> dims;
    std::vector<std::vector<Matrix<F>>> mult;

    std::size_t top_degree() const { return dims.empty() ? 0 : dims.size() - 1; }
    std::size_t dim(std::size_t k) const { return k < dims.size() ? dims[k] : 0; }
};

/// A_F realized on the derivative spaces W_k = span{d^alpha F : |alpha| = k}.
/// basis[k] are order-k partials d^{index[k][j]} F; x_v acts as d/dX_v.
template <Field F>
struct AlgebraModel {
    Polynomial<F> form;
    unsigned d = 0;
    std::vector<std::vector<Monomial>> index;
    std::vector<std::vector<Polynomial<F>>> basis;
    GradedModule<F> module;

    const F& field() const { return module.field; }
    std::size_t nvars() const { return module.nvars; }
    HVector h() const;
};

template <Field F>
using LinearForm = std::vector<typename F::Element>;

template <Field F>
LinearForm<F> random_linear_form(const F& field, std::size_t nvars, Rng& rng);

/// sum_v l_v x_v as a polynomial, for apply_operator.
template <Field F>
Polynomial<F> linear_operator(const F& field, const LinearForm<F>& ell);

/// Requires a nonzero homogeneous form.
template <Field F>
AlgebraModel<F> build_model(const Polynomial<F>& form);

/// sum_v l_v mult[v][k] : M_k -> M_{k+1}.
template <Field F>
Matrix<F> mult_map(const GradedModule<F>& module, const LinearForm<F>& ell, std::size_t k);

/// rank of l^power : (A_F)_k -> (A_F)_{k+power}, computed as the dimension of
/// span{l^power o b : b in basis[k]}; avoids the basis coordinates, whose
/// rational heights grow quickly.
template <Field F>
std::size_t mult_rank(const AlgebraModel<F>& model, const LinearForm<F>& ell, std::size_t k, std::size_t power = 1);

/// Dimensions of M / l M: entry k = dims[k] - rank(mult_map(k-1)).
template <Field F>
std::vector<std::int64_t> quotient_h(const GradedModule<F>& module, const LinearForm<F>& ell);

template <Field F>
std::vector<std::int64_t> quotient_h(const AlgebraModel<F>& model, const LinearForm<F>& ell);

/// M / l M with the induced variable action, using a coordinate complement
/// of the image of l in each degree.
template <Field F>
GradedModule<F> quotient_module(const GradedModule<F>& module, const LinearForm<F>& ell);

struct ExactSequenceReport {
    HVector h_form;                         // A_F
    HVector h_contracted;                   // A_{l o F}
    std::vector<std::int64_t> h_quotient;   // R/(Ann F, l)
    bool holds = false;
};

/// h_{A_F}(j) = h_{A_{l o F}}(j-1) + h_{R/(Ann F, l)}(j) for every j.
/// Requires l != 0 and l o F != 0.
template <Field F>
ExactSequenceReport check_exact_sequence(const Polynomial<F>& form, const LinearForm<F>& ell);

/// Same, reusing an already built model of the form.
template <Field F>
ExactSequenceReport check_exact_sequence(const AlgebraModel<F>& model, const LinearForm<F>& ell);

}  // namespace perazzo
