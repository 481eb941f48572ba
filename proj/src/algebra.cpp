#include "perazzo/algebra.hpp"

#include "perazzo/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace perazzo {

template <Field F>
HVector AlgebraModel<F>::h() const {
    HVector out;
    for (auto k : module.dims)
        out.entries.push_back(static_cast<std::int64_t>(k));
    return out;
}

template <Field F>
LinearForm<F> random_linear_form(const F& field, std::size_t nvars, Rng& rng) {
    LinearForm<F> ell(nvars);
    do {
        for (auto& c : ell)
            c = field.random(rng);
    } while (std::all_of(ell.begin(), ell.end(), [&](const auto& c) { return field.is_zero(c); }));
    return ell;
}

template <Field F>
Polynomial<F> linear_operator(const F& field, const LinearForm<F>& ell) {
    std::vector<typename Polynomial<F>::Term> terms;
    for (std::size_t v = 0; v < ell.size(); ++v)
        terms.push_back({Monomial::variable(ell.size(), v), ell[v]});
    return Polynomial<F>::from_terms(field, ell.size(), std::move(terms));
}

template <Field F>
AlgebraModel<F> build_model(const Polynomial<F>& form) {
    if (form.is_zero())
        throw std::invalid_argument("cannot build the algebra of the zero form");
    const F& field = form.field();
    const std::size_t nvars = form.nvars();
    AlgebraModel<F> model;
    model.form = form;
    model.d = *form.degree();
    model.module.field = field;
    model.module.nvars = nvars;
    model.module.mult.assign(nvars, {});
    model.index.push_back({Monomial::one(nvars)});
    model.basis.push_back({form});
    model.module.dims.push_back(1);

    for (unsigned k = 0; k < model.d; ++k) {
        const auto& idx = model.index[k];
        const auto& cur = model.basis[k];

        // Candidates alpha + e_v, each derivative computed once.
        std::map<Monomial, Polynomial<F>, std::greater<>> candidates;
        for (std::size_t j = 0; j < idx.size(); ++j)
            for (std::size_t v = 0; v < nvars; ++v) {
                auto alpha = idx[j] * Monomial::variable(nvars, v);
                if (candidates.contains(alpha))
                    continue;
                auto p = cur[j].differentiate(v);
                if (!p.is_zero())
                    candidates.emplace(std::move(alpha), std::move(p));
            }
        std::vector<Monomial> cand_index;
        std::vector<Polynomial<F>> cand_poly;
        for (auto& [alpha, p] : candidates) {
            cand_index.push_back(alpha);
            cand_poly.push_back(std::move(p));
        }

        std::vector<std::size_t> pivots;
        Matrix<F> reduced(field, 0, cand_poly.size());
        if (!cand_poly.empty()) {
            auto ech = reduced_row_echelon(support_coeff_matrix(field, std::span<const Polynomial<F>>(cand_poly)).matrix);
            pivots = std::move(ech.pivots);
            reduced = std::move(ech.reduced);
        }
        std::vector<Monomial> next_index;
        std::vector<Polynomial<F>> next_basis;
        for (auto p : pivots) {
            next_index.push_back(cand_index[p]);
            next_basis.push_back(cand_poly[p]);
        }
        const std::size_t h_next = pivots.size();

        std::map<Monomial, std::size_t> position;
        for (std::size_t c = 0; c < cand_index.size(); ++c)
            position.emplace(cand_index[c], c);
        for (std::size_t v = 0; v < nvars; ++v) {
            Matrix<F> m(field, h_next, idx.size());
            for (std::size_t j = 0; j < idx.size(); ++j) {
                const auto it = position.find(idx[j] * Monomial::variable(nvars, v));
                if (it == position.end())
                    continue;  // derivative is zero
                for (std::size_t r = 0; r < h_next; ++r)
                    m(r, j) = reduced(r, it->second);
            }
            model.module.mult[v].push_back(std::move(m));
        }
        model.index.push_back(std::move(next_index));
        model.basis.push_back(std::move(next_basis));
        model.module.dims.push_back(h_next);
    }
    return model;
}

template <Field F>
Matrix<F> mult_map(const GradedModule<F>& module, const LinearForm<F>& ell, std::size_t k) {
    if (ell.size() != module.nvars)
        throw std::invalid_argument("linear form has the wrong number of coefficients");
    if (k + 1 >= module.dims.size())
        throw std::out_of_range("multiplication map degree out of range");
    const F& field = module.field;
    Matrix<F> out(field, module.dims[k + 1], module.dims[k]);
    for (std::size_t v = 0; v < module.nvars; ++v) {
        if (field.is_zero(ell[v]))
            continue;
        const auto& m = module.mult[v][k];
        for (std::size_t r = 0; r < out.rows(); ++r)
            for (std::size_t c = 0; c < out.cols(); ++c)
                out(r, c) = field.add(out(r, c), field.mul(ell[v], m(r, c)));
    }
    return out;
}

template <Field F>
std::vector<std::int64_t> quotient_h(const GradedModule<F>& module, const LinearForm<F>& ell) {
    std::vector<std::int64_t> out;
    for (std::size_t k = 0; k < module.dims.size(); ++k) {
        const auto image = k == 0 ? 0 : rank(mult_map(module, ell, k - 1));
        out.push_back(static_cast<std::int64_t>(module.dims[k] - image));
    }
    return out;
}

template <Field F>
std::size_t mult_rank(const AlgebraModel<F>& model, const LinearForm<F>& ell, std::size_t k, std::size_t power) {
    if (ell.size() != model.nvars())
        throw std::invalid_argument("linear form has the wrong number of coefficients");
    if (k + power > model.d)
        return 0;
    const auto op = linear_operator(model.field(), ell);
    std::vector<Polynomial<F>> images = model.basis[k];
    for (std::size_t j = 0; j < power; ++j)
        for (auto& b : images)
            b = apply_operator(op, b);
    return rank(support_coeff_matrix(model.field(), std::span<const Polynomial<F>>(images)).matrix);
}

template <Field F>
std::vector<std::int64_t> quotient_h(const AlgebraModel<F>& model, const LinearForm<F>& ell) {
    std::vector<std::int64_t> out;
    for (std::size_t k = 0; k < model.module.dims.size(); ++k) {
        const auto image = k == 0 ? 0 : mult_rank(model, ell, k - 1);
        out.push_back(static_cast<std::int64_t>(model.module.dims[k] - image));
    }
    return out;
}

template <Field F>
GradedModule<F> quotient_module(const GradedModule<F>& module, const LinearForm<F>& ell) {
    const F& field = module.field;
    const std::size_t top = module.dims.size();
    // Per degree: selected coordinate vectors spanning a complement of the
    // image, and the projection onto them along the image.
    std::vector<std::vector<std::size_t>> selected(top);
    std::vector<Matrix<F>> projection(top);
    for (std::size_t k = 0; k < top; ++k) {
        const std::size_t dim = module.dims[k];
        Matrix<F> image(field, dim, 0);
        if (k > 0)
            image = column_space_basis(mult_map(module, ell, k - 1)).basis;
        const std::size_t r = image.cols();
        Matrix<F> aug(field, dim, r + dim);
        aug.place(0, 0, image);
        aug.place(0, r, Matrix<F>::identity(field, dim));
        const auto cs = column_space_basis(aug);
        for (auto p : cs.pivots)
            if (p >= r)
                selected[k].push_back(p - r);
        const auto inv = inverse(cs.basis);
        std::vector<std::size_t> rows;
        for (std::size_t i = r; i < dim; ++i)
            rows.push_back(i);
        projection[k] = inv.select_rows(rows);
    }

    GradedModule<F> out;
    out.field = field;
    out.nvars = module.nvars;
    for (std::size_t k = 0; k < top; ++k)
        out.dims.push_back(selected[k].size());
    // Trailing zero degrees carry no information.
    while (out.dims.size() > 1 && out.dims.back() == 0)
        out.dims.pop_back();
    out.mult.assign(module.nvars, {});
    for (std::size_t v = 0; v < module.nvars; ++v)
        for (std::size_t k = 0; k + 1 < out.dims.size(); ++k)
            out.mult[v].push_back(projection[k + 1] * module.mult[v][k].select_columns(selected[k]));
    return out;
}

template <Field F>
ExactSequenceReport check_exact_sequence(const Polynomial<F>& form, const LinearForm<F>& ell) {
    return check_exact_sequence(build_model(form), ell);
}

template <Field F>
ExactSequenceReport check_exact_sequence(const AlgebraModel<F>& model, const LinearForm<F>& ell) {
    const F& field = model.field();
    const auto& form = model.form;
    if (std::all_of(ell.begin(), ell.end(), [&](const auto& c) { return field.is_zero(c); }))
        throw PreconditionError("linear form is zero");
    const auto contracted = apply_operator(linear_operator(field, ell), form);
    if (contracted.is_zero())
        throw PreconditionError("the linear form annihilates the form");
    ExactSequenceReport r;
    r.h_form = model.h();
    r.h_contracted = build_model(contracted).h();
    r.h_quotient = quotient_h(model, ell);
    r.holds = true;
    for (std::size_t j = 0; j < r.h_form.size(); ++j) {
        const std::int64_t shifted = j == 0 ? 0 : r.h_contracted[j - 1];
        r.holds = r.holds && r.h_form[j] == shifted + r.h_quotient[j];
    }
    return r;
}

#define PERAZZO_INSTANTIATE_ALGEBRA(F)                                                          \
    template struct AlgebraModel<F>;                                                            \
    template LinearForm<F> random_linear_form(const F&, std::size_t, Rng&);                     \
    template Polynomial<F> linear_operator(const F&, const LinearForm<F>&);                     \
    template AlgebraModel<F> build_model(const Polynomial<F>&);                                 \
    template Matrix<F> mult_map(const GradedModule<F>&, const LinearForm<F>&, std::size_t);     \
    template std::vector<std::int64_t> quotient_h(const GradedModule<F>&, const LinearForm<F>&); \
    template std::size_t mult_rank(const AlgebraModel<F>&, const LinearForm<F>&, std::size_t, std::size_t); \
    template std::vector<std::int64_t> quotient_h(const AlgebraModel<F>&, const LinearForm<F>&);          \
    template GradedModule<F> quotient_module(const GradedModule<F>&, const LinearForm<F>&);     \
    template ExactSequenceReport check_exact_sequence(const Polynomial<F>&, const LinearForm<F>&);  \
    template ExactSequenceReport check_exact_sequence(const AlgebraModel<F>&, const LinearForm<F>&);

PERAZZO_INSTANTIATE_ALGEBRA(PrimeField)
PERAZZO_INSTANTIATE_ALGEBRA(RationalField)

#undef PERAZZO_INSTANTIATE_ALGEBRA

}  // namespace perazzo
