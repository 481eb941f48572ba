#include "perazzo/lefschetz.hpp"

#include "perazzo/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <type_traits>

namespace perazzo {

namespace {

template <Field F>
std::vector<Deficit> deficits_of(const GradedModule<F>& module, const LinearForm<F>& ell, LefschetzMode mode,
                                 std::vector<Deficit>* all_ranks) {
    const std::size_t top = module.top_degree();
    std::vector<Matrix<F>> step;
    for (std::size_t k = 0; k < top; ++k)
        step.push_back(mult_map(module, ell, k));
    const std::size_t max_power = mode == LefschetzMode::weak ? 1 : top;
    std::vector<Deficit> out;
    for (std::size_t k = 0; k < top; ++k) {
        Matrix<F> power = step[k];
        for (std::size_t j = 1; j <= max_power && k + j <= top; ++j) {
            if (j > 1)
                power = step[k + j - 1] * power;
            const Deficit entry{k, j, rank(power), std::min(module.dims[k], module.dims[k + j])};
            if (all_ranks)
                all_ranks->push_back(entry);
            if (entry.rank < entry.required)
                out.push_back(entry);
        }
    }
    return out;
}

// Same ranks via l^j o b on the basis polynomials of the model.
template <Field F>
std::vector<Deficit> deficits_of(const AlgebraModel<F>& model, const LinearForm<F>& ell, LefschetzMode mode,
                                 std::vector<Deficit>* all_ranks) {
    if (ell.size() != model.nvars())
        throw std::invalid_argument("linear form has the wrong number of coefficients");
    const std::size_t top = model.module.top_degree();
    const auto& dims = model.module.dims;
    const auto op = linear_operator(model.field(), ell);
    const std::size_t max_power = mode == LefschetzMode::weak ? 1 : top;
    std::vector<Deficit> out;
    for (std::size_t k = 0; k < top; ++k) {
        std::vector<Polynomial<F>> images = model.basis[k];
        for (std::size_t j = 1; j <= max_power && k + j <= top; ++j) {
            for (auto& b : images)
                b = apply_operator(op, b);
            const auto r = rank(support_coeff_matrix(model.field(), std::span<const Polynomial<F>>(images)).matrix);
            const Deficit entry{k, j, r, std::min(dims[k], dims[k + j])};
            if (all_ranks)
                all_ranks->push_back(entry);
            if (entry.rank < entry.required)
                out.push_back(entry);
        }
    }
    return out;
}

template <Field F, class Source>
LefschetzVerdict<F> sample(const Source& source, const GradedModule<F>& module, int trials, std::uint64_t seed,
                           LefschetzMode mode) {
    if (trials < 1)
        throw std::invalid_argument("at least one trial is required");
    std::vector<Deficit> best;
    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        const auto ell = random_linear_form(module.field, module.nvars, rng);
        std::vector<Deficit> ranks;
        if (deficits_of(source, ell, mode, &ranks).empty())
            return {mode, Holds<F>{ell}};
        if (best.empty())
            best = ranks;
        else
            for (std::size_t i = 0; i < ranks.size(); ++i)
                best[i].rank = std::max(best[i].rank, ranks[i].rank);
    }
    FailsGeneric fail{trials, {}};
    for (const auto& e : best)
        if (e.rank < e.required)
            fail.deficits.push_back(e);
    return {mode, fail};
}

}  // namespace

template <Field F>
std::vector<Deficit> lefschetz_deficits(const GradedModule<F>& module, const LinearForm<F>& ell, LefschetzMode mode) {
    return deficits_of(module, ell, mode, nullptr);
}

template <Field F>
std::vector<Deficit> lefschetz_deficits(const AlgebraModel<F>& model, const LinearForm<F>& ell, LefschetzMode mode) {
    return deficits_of(model, ell, mode, nullptr);
}

template <Field F>
LefschetzVerdict<F> wlp(const GradedModule<F>& module, int trials, std::uint64_t seed) {
    return sample(module, module, trials, seed, LefschetzMode::weak);
}

template <Field F>
LefschetzVerdict<F> slp(const GradedModule<F>& module, int trials, std::uint64_t seed) {
    return sample(module, module, trials, seed, LefschetzMode::strong);
}

template <Field F>
LefschetzVerdict<F> wlp(const AlgebraModel<F>& model, int trials, std::uint64_t seed) {
    if constexpr (std::is_same_v<F, PrimeField>)
        return sample(model.module, model.module, trials, seed, LefschetzMode::weak);
    else
        return sample(model, model.module, trials, seed, LefschetzMode::weak);
}

template <Field F>
LefschetzVerdict<F> slp(const AlgebraModel<F>& model, int trials, std::uint64_t seed) {
    if constexpr (std::is_same_v<F, PrimeField>)
        return sample(model.module, model.module, trials, seed, LefschetzMode::strong);
    else
        return sample(model, model.module, trials, seed, LefschetzMode::strong);
}

template <Field F>
bool hessian_vanishes(const Polynomial<F>& form, int trials, std::uint64_t seed) {
    if (trials < 1)
        throw std::invalid_argument("at least one trial is required");
    const F& field = form.field();
    const std::size_t n = form.nvars();
    if (form.is_zero() || *form.degree() < 2)
        return true;
    std::vector<std::vector<Polynomial<F>>> second(n);
    for (std::size_t a = 0; a < n; ++a) {
        const auto da = form.differentiate(a);
        for (std::size_t b = 0; b < n; ++b)
            second[a].push_back(da.differentiate(b));
    }
    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        std::vector<typename F::Element> point(n);
        for (auto& c : point)
            c = field.random(rng);
        Matrix<F> h(field, n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                h(a, b) = second[a][b].evaluate(point);
        if (rank(h) == n)
            return false;
    }
    return true;
}

template <Field F>
Polynomial<F> hessian_determinant(const Polynomial<F>& form) {
    const std::size_t n = form.nvars();
    if (n > 5 || (form.degree() && *form.degree() > 6))
        throw PreconditionError("symbolic Hessian is limited to 5 variables and degree 6");
    const F& field = form.field();
    std::vector<std::vector<Polynomial<F>>> second(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            second[a].push_back(form.differentiate(a).differentiate(b));

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<typename Polynomial<F>::Term> terms;
    do {
        Polynomial<F> prod = Polynomial<F>::monomial(field, Monomial::one(n), field.one());
        for (std::size_t a = 0; a < n && !prod.is_zero(); ++a)
            prod = prod * second[a][perm[a]];
        if (prod.is_zero())
            continue;
        std::size_t inversions = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                inversions += perm[a] > perm[b];
        if (inversions % 2 == 1)
            prod = prod.scaled(field.neg(field.one()));
        for (const auto& t : prod.terms())
            terms.push_back(t);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Polynomial<F>::from_terms(field, n, std::move(terms));
}

bool thm_wlp_p4_predicate(const HVector& h, int d) {
    if (d < 5 || h.size() != static_cast<std::size_t>(d + 1))
        throw PreconditionError("expected an h-vector of a P^4 Perazzo form of degree d >= 5");
    const auto count = std::count(h.entries.begin(), h.entries.end(), static_cast<std::int64_t>(d + 2));
    return count <= 1;
}

template <Field F>
bool minimal_wlp_check(const F& field, int n, int m, int d, std::uint64_t seed, int trials) {
    if (!perazzo_params_valid(n, m, d))
        throw PreconditionError("no Perazzo form with these parameters");
    if (m < 3)
        throw PreconditionError("the minimal-form WLP criterion needs n >= m >= 3");
    const auto hmin = h_min(n, m, d);
    if (!is_unimodal(hmin))
        throw PreconditionError("h_min" + hmin.to_string() + " is not unimodal");
    if (n + 1 > abg(n, m, d, d / 2).beta)
        throw PreconditionError("n+1 exceeds beta_s");
    const auto form = gen_min(field, n, m, d, seed);
    const auto h = hilbert_function(form);
    if (h != hmin)
        throw std::logic_error("generated form has h-vector " + h.to_string() + ", expected " + hmin.to_string());
    return wlp(build_model(assemble(form)), trials, seed).holds();
}

#define PERAZZO_INSTANTIATE_LEFSCHETZ(F)                                                                         \
    template std::vector<Deficit> lefschetz_deficits(const GradedModule<F>&, const LinearForm<F>&, LefschetzMode); \
    template LefschetzVerdict<F> wlp(const GradedModule<F>&, int, std::uint64_t);                               \
    template LefschetzVerdict<F> slp(const GradedModule<F>&, int, std::uint64_t);                               \
    template std::vector<Deficit> lefschetz_deficits(const AlgebraModel<F>&, const LinearForm<F>&, LefschetzMode); \
    template LefschetzVerdict<F> wlp(const AlgebraModel<F>&, int, std::uint64_t);                               \
    template LefschetzVerdict<F> slp(const AlgebraModel<F>&, int, std::uint64_t);                               \
    template bool hessian_vanishes(const Polynomial<F>&, int, std::uint64_t);                                   \
    template Polynomial<F> hessian_determinant(const Polynomial<F>&);                                           \
    template bool minimal_wlp_check(const F&, int, int, int, std::uint64_t, int);

PERAZZO_INSTANTIATE_LEFSCHETZ(PrimeField)
PERAZZO_INSTANTIATE_LEFSCHETZ(RationalField)

#undef PERAZZO_INSTANTIATE_LEFSCHETZ

}  // namespace perazzo
