#include "perazzo/perazzo_form.hpp"

#include "perazzo/combinatorics.hpp"
#include "perazzo/rng.hpp"

namespace perazzo {

namespace {

constexpr int kMaxRetries = 16;

template <Field F>
Polynomial<F> u_monomial(const F& field, int m, std::vector<Monomial::Exponent> exps) {
    (void)m;
    return Polynomial<F>::monomial(field, Monomial(std::move(exps)), field.one());
}

template <Field F>
Polynomial<F> random_form(const F& field, int nvars, int degree, Rng& rng) {
    std::vector<typename Polynomial<F>::Term> terms;
    for (auto& mono : monomials_of_degree(static_cast<std::size_t>(nvars), static_cast<unsigned>(degree)))
        terms.push_back({std::move(mono), field.random(rng)});
    return Polynomial<F>::from_terms(field, static_cast<std::size_t>(nvars), std::move(terms));
}

template <Field F>
bool independent(std::span<const Polynomial<F>> ps, int degree) {
    if (ps.empty())
        return true;
    for (const auto& q : ps)
        if (q.is_zero())
            return false;
    return rank(coeff_matrix(ps, static_cast<unsigned>(degree))) == ps.size();
}

void require_params(int n, int m, int d) {
    if (!perazzo_params_valid(n, m, d))
        throw PreconditionError("no Perazzo form with n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                                ", d=" + std::to_string(d) + " (need n >= m >= 2 and n+1 <= C(d+m-2,m-1))");
}

}  // namespace

bool perazzo_params_valid(int n, int m, int d) {
    return m >= 2 && n >= m && d >= 2 && binomial(d + m - 2, m - 1) >= n + 1;
}

template <Field F>
ValidationReport validate(const PerazzoForm<F>& f) {
    ValidationReport report;
    auto& v = report.violations;
    const auto um = static_cast<std::size_t>(f.m);
    if (f.m < 2)
        v.push_back("m must be at least 2");
    if (f.n < f.m)
        v.push_back("n must be at least m");
    if (f.d < 2)
        v.push_back("degree must be at least 2");
    if (binomial(f.d + f.m - 2, f.m - 1) < f.n + 1)
        v.push_back("n+1 exceeds C(d+m-2, m-1): the p_i cannot be independent");
    if (f.p.size() != static_cast<std::size_t>(f.n + 1))
        v.push_back("expected " + std::to_string(f.n + 1) + " polynomials p_i, got " + std::to_string(f.p.size()));

    bool shapes_ok = true;
    for (std::size_t i = 0; i < f.p.size(); ++i) {
        const auto& q = f.p[i];
        const std::string name = "p_" + std::to_string(i);
        if (q.nvars() != um) {
            v.push_back(name + " is not a polynomial in the " + std::to_string(f.m) + " U-variables");
            shapes_ok = false;
        } else if (q.is_zero()) {
            v.push_back(name + " is zero");
            shapes_ok = false;
        } else if (static_cast<int>(*q.degree()) != f.d - 1) {
            v.push_back(name + " has degree " + std::to_string(*q.degree()) + ", expected " + std::to_string(f.d - 1));
            shapes_ok = false;
        }
    }
    if (f.G.nvars() != um)
        v.push_back("G is not a polynomial in the U-variables");
    else if (!f.G.is_zero() && static_cast<int>(*f.G.degree()) != f.d)
        v.push_back("G has degree " + std::to_string(*f.G.degree()) + ", expected " + std::to_string(f.d));

    if (shapes_ok && !f.p.empty() && !independent<F>(f.p, f.d - 1))
        v.push_back("p_0..p_n are linearly dependent");

    // Algebraic dependence is automatic: n+1 > m forms in m variables.
    report.is_full_perazzo = report.valid() && binomial(f.d + f.m - 2, f.m - 1) == f.n + 1;
    return report;
}

template <Field F>
Polynomial<F> assemble(const PerazzoForm<F>& f) {
    auto report = validate(f);
    if (!report.valid())
        throw ValidationError(std::move(report.violations));
    const auto layout = f.layout();
    const std::size_t total = layout.total();
    const std::size_t offset = layout.x_count();
    Polynomial<F> out = f.G.embed(total, offset);
    for (std::size_t i = 0; i < f.p.size(); ++i)
        out = out + Polynomial<F>::variable(f.field, total, i) * f.p[i].embed(total, offset);
    return out;
}

template <Field F>
PerazzoForm<F> gen_canonical(const F& field, CanonicalCase which, int d,
                             std::optional<typename F::Element> lambda, std::uint64_t seed) {
    if (d < 5)
        throw PreconditionError("canonical minimal forms are classified for d >= 5 only");
    using E = Monomial::Exponent;
    const auto e = [](int k) { return static_cast<E>(k); };
    PerazzoForm<F> f{field, 2, 2, d, {}, Polynomial<F>(field, 2)};
    f.p.push_back(u_monomial(field, 2, {e(d - 1), 0}));
    switch (which) {
    case CanonicalCase::I:
        f.p.push_back(u_monomial(field, 2, {e(d - 2), 1}));
        f.p.push_back(u_monomial(field, 2, {e(d - 3), 2}));
        break;
    case CanonicalCase::II:
        f.p.push_back(u_monomial(field, 2, {e(d - 2), 1}));
        f.p.push_back(u_monomial(field, 2, {0, e(d - 1)}));
        break;
    case CanonicalCase::III: {
        if (!lambda) {
            Rng rng(derive_seed(seed, 0));
            lambda = field.random_nonzero(rng);
        }
        if (field.is_zero(*lambda))
            throw PreconditionError("case III requires lambda != 0");
        const auto lin = u_monomial(field, 2, {1, 0}) + u_monomial(field, 2, {0, 1}).scaled(*lambda);
        f.p.push_back(lin.pow(static_cast<unsigned>(d - 1)));
        f.p.push_back(u_monomial(field, 2, {0, e(d - 1)}));
        break;
    }
    }
    return f;
}

template <Field F>
PerazzoForm<F> gen_power_sum(const F& field, int n, int m, int d, int terms, bool with_G,
                             std::uint64_t seed) {
    require_params(n, m, d);
    if (terms < 1)
        throw PreconditionError("power sums need at least one term");
    for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        PerazzoForm<F> f{field, n, m, d, {}, Polynomial<F>(field, static_cast<std::size_t>(m))};
        for (int i = 0; i <= n; ++i) {
            Polynomial<F> q(field, static_cast<std::size_t>(m));
            for (int t = 0; t < terms; ++t)
                q = q + random_form(field, m, 1, rng).pow(static_cast<unsigned>(d - 1));
            f.p.push_back(std::move(q));
        }
        if (with_G)
            f.G = random_form(field, m, d, rng);
        if (independent<F>(f.p, d - 1))
            return f;
    }
    throw RetryExhausted("could not sample independent p_i");
}

template <Field F>
PerazzoForm<F> gen_min(const F& field, int n, int m, int d, std::uint64_t seed) {
    return gen_power_sum(field, n, m, d, 1, false, seed);
}

template <Field F>
PerazzoForm<F> gen_general(const F& field, int n, int m, int d, bool with_G, std::uint64_t seed) {
    require_params(n, m, d);
    for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        PerazzoForm<F> f{field, n, m, d, {}, Polynomial<F>(field, static_cast<std::size_t>(m))};
        for (int i = 0; i <= n; ++i)
            f.p.push_back(random_form(field, m, d - 1, rng));
        if (with_G)
            f.G = random_form(field, m, d, rng);
        if (independent<F>(f.p, d - 1))
            return f;
    }
    throw RetryExhausted("could not sample independent p_i");
}

template <Field F>
PerazzoForm<F> gen_mixed(const F& field, int n, int m, int d, bool with_G, std::uint64_t seed) {
    require_params(n, m, d);
    const auto e = static_cast<unsigned>(d - 1);
    for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        PerazzoForm<F> f{field, n, m, d, {}, Polynomial<F>(field, static_cast<std::size_t>(m))};
        for (int i = 0; i <= n; ++i) {
            switch (rng.below(3)) {
            case 0:
                f.p.push_back(random_form(field, m, 1, rng).pow(e));
                break;
            case 1:
                f.p.push_back(random_form(field, m, 1, rng).pow(e) + random_form(field, m, 1, rng).pow(e));
                break;
            default:
                f.p.push_back(random_form(field, m, d - 1, rng));
            }
        }
        if (with_G)
            f.G = random_form(field, m, d, rng);
        if (independent<F>(f.p, d - 1))
            return f;
    }
    throw RetryExhausted("could not sample independent p_i");
}

template <Field F>
PerazzoForm<F> contract_linear(const PerazzoForm<F>& f, std::span<const typename F::Element> ell) {
    const auto layout = f.layout();
    if (ell.size() != layout.total())
        throw std::invalid_argument("linear form has " + std::to_string(ell.size()) + " coefficients, expected " +
                                    std::to_string(layout.total()));
    bool all_zero = true;
    for (const auto& c : ell)
        all_zero = all_zero && f.field.is_zero(c);
    if (all_zero)
        throw PreconditionError("linear form is zero");
    if (binomial(f.d + f.m - 3, f.m - 1) < f.n + 1)
        throw PreconditionError("contraction needs n+1 <= C(d+m-3, m-1)");
    auto report = validate(f);
    if (!report.valid())
        throw ValidationError(std::move(report.violations));

    const auto um = static_cast<std::size_t>(f.m);
    const auto b_at = [&](std::size_t j) -> const auto& { return ell[layout.x_count() + j]; };
    const auto derive = [&](const Polynomial<F>& q) {
        Polynomial<F> acc(f.field, um);
        for (std::size_t j = 0; j < um; ++j)
            if (!f.field.is_zero(b_at(j)))
                acc = acc + q.differentiate(j).scaled(b_at(j));
        return acc;
    };

    PerazzoForm<F> out{f.field, f.n, f.m, f.d - 1, {}, derive(f.G)};
    for (std::size_t i = 0; i < f.p.size(); ++i) {
        out.p.push_back(derive(f.p[i]));
        out.G = out.G + f.p[i].scaled(ell[i]);
    }
    if (!independent<F>(out.p, out.d - 1))
        throw IndependenceLost("contracted polynomials are linearly dependent for this linear form");
    auto after = validate(out);
    if (!after.valid())
        throw ValidationError(std::move(after.violations));
    return out;
}

#define PERAZZO_INSTANTIATE_FORMS(F)                                                                        \
    template ValidationReport validate(const PerazzoForm<F>&);                                              \
    template Polynomial<F> assemble(const PerazzoForm<F>&);                                                 \
    template PerazzoForm<F> gen_canonical(const F&, CanonicalCase, int, std::optional<F::Element>,          \
                                          std::uint64_t);                                                   \
    template PerazzoForm<F> gen_power_sum(const F&, int, int, int, int, bool, std::uint64_t);               \
    template PerazzoForm<F> gen_min(const F&, int, int, int, std::uint64_t);                                \
    template PerazzoForm<F> gen_general(const F&, int, int, int, bool, std::uint64_t);                      \
    template PerazzoForm<F> gen_mixed(const F&, int, int, int, bool, std::uint64_t);                        \
    template PerazzoForm<F> contract_linear(const PerazzoForm<F>&, std::span<const F::Element>);

PERAZZO_INSTANTIATE_FORMS(PrimeField)
PERAZZO_INSTANTIATE_FORMS(RationalField)

#undef PERAZZO_INSTANTIATE_FORMS

}  // namespace perazzo
