#include "perazzo/hilbert.hpp"

#include "perazzo/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace perazzo {

bool HVector::is_symmetric() const {
    return std::equal(entries.begin(), entries.end(), entries.rbegin());
}

std::string HVector::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries.size(); ++i)
        out += (i ? "," : "") + std::to_string(entries[i]);
    return out + ")";
}

bool is_unimodal(const HVector& h) {
    std::size_t i = 1;
    while (i < h.size() && h[i - 1] <= h[i])
        ++i;
    while (i < h.size() && h[i - 1] >= h[i])
        ++i;
    return i >= h.size();
}

bool termwise_leq(const HVector& a, const HVector& b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

Abg abg(int n, int m, int d, int i) {
    return {to_int64(binomial(m + i - 1, m - 1)), to_int64(binomial(d + m - i - 1, m - 1)),
            to_int64((n + 1) * binomial(m + i - 2, m - 1))};
}

namespace {

void require_params(int n, int m, int d) {
    if (!perazzo_params_valid(n, m, d))
        throw PreconditionError("no Perazzo form with n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                                ", d=" + std::to_string(d));
}

template <class Fn>
HVector reflected(int d, Fn&& lower_half) {
    HVector h{std::vector<std::int64_t>(static_cast<std::size_t>(d + 1))};
    for (int i = 0; i <= d / 2; ++i)
        h.entries[static_cast<std::size_t>(i)] = h.entries[static_cast<std::size_t>(d - i)] = lower_half(i);
    return h;
}

}  // namespace

HVector h_max(int n, int m, int d) {
    require_params(n, m, d);
    return reflected(d, [&](int i) {
        const auto t = abg(n, m, d, i);
        return std::min(t.alpha + t.beta, t.alpha + t.gamma);
    });
}

HVector h_min(int n, int m, int d) {
    require_params(n, m, d);
    return reflected(d, [&](int i) -> std::int64_t {
        if (i == 0)
            return 1;
        const auto t = abg(n, m, d, i);
        return std::min({std::int64_t{2} * (n + 1), t.alpha + n + 1, t.alpha + t.beta});
    });
}

bool predict_hmax_unimodal(int n, int m, int d) {
    require_params(n, m, d);
    if (m == 2)
        return true;
    const int s = d / 2;
    const auto prev = abg(n, m, d, s - 1);
    const auto top = abg(n, m, d, s);
    return prev.gamma < prev.beta && prev.alpha + prev.gamma <= top.alpha + top.beta;
}

bool hmin_unimodality_inequality(int n, int m, int d) {
    require_params(n, m, d);
    return n + 1 <= abg(n, m, d, d / 2 - 1).beta;
}

bool predict_hmin_unimodal(int n, int m, int d) {
    require_params(n, m, d);
    if (m == 2)
        return true;
    if (!hmin_unimodality_inequality(n, m, d))
        return false;
    return is_unimodal(h_min(n, m, d));
}

bool extremes_coincide(int n, int m, int d) {
    require_params(n, m, d);
    return binomial(d + m - 3, m - 1) <= n + 1;
}

ExtremesReport extremes(int n, int m, int d) {
    ExtremesReport r;
    r.n = n;
    r.m = m;
    r.d = d;
    r.hmax = h_max(n, m, d);
    r.hmin = h_min(n, m, d);
    r.hmax_unimodal = predict_hmax_unimodal(n, m, d);
    r.hmin_unimodal = predict_hmin_unimodal(n, m, d);
    r.hmin_inequality = hmin_unimodality_inequality(n, m, d);
    r.coincide = extremes_coincide(n, m, d);
    r.s = d / 2;
    r.at_s_minus_1 = abg(n, m, d, r.s - 1);
    r.at_s = abg(n, m, d, r.s);
    return r;
}

template <Field F>
Matrix<F> catalecticant(const Polynomial<F>& q, std::size_t nvars, unsigned e, unsigned i) {
    if (i > e)
        throw std::invalid_argument("catalecticant index exceeds the degree");
    if (!q.is_zero() && (q.nvars() != nvars || *q.degree() != e))
        throw std::invalid_argument("catalecticant: polynomial does not match the requested shape");
    const F& field = q.field();
    const auto rows = monomials_of_degree(nvars, e - i);
    const auto cols = monomials_of_degree(nvars, i);
    Matrix<F> out(field, rows.size(), cols.size());
    if (q.is_zero())
        return out;
    std::map<Monomial, typename F::Element> normalized;
    for (const auto& t : q.terms())
        normalized.emplace(t.monomial, field.div(t.coeff, field.from_integer(multinomial(t.monomial))));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (auto it = normalized.find(rows[r] * cols[c]); it != normalized.end())
                out(r, c) = it->second;
    return out;
}

template <Field F>
Matrix<F> block_matrix(const PerazzoForm<F>& f, unsigned i) {
    const unsigned d = static_cast<unsigned>(f.d);
    if (i < 1 || i >= d)
        throw std::invalid_argument("block matrix index must lie in 1..d-1");
    const auto m = static_cast<std::size_t>(f.m);
    const std::size_t blocks = f.p.size();
    const auto x_rows = to_int64(binomial(static_cast<long>(d - 1 - i + m - 1), static_cast<long>(m - 1)));
    const auto u_rows = to_int64(binomial(static_cast<long>(d - i + m - 1), static_cast<long>(m - 1)));
    const auto a_cols = to_int64(binomial(static_cast<long>(i - 1 + m - 1), static_cast<long>(m - 1)));
    const auto b_cols = to_int64(binomial(static_cast<long>(i + m - 1), static_cast<long>(m - 1)));
    const auto xr = static_cast<std::size_t>(x_rows);
    const auto ur = static_cast<std::size_t>(u_rows);
    const auto ac = static_cast<std::size_t>(a_cols);
    const auto bc = static_cast<std::size_t>(b_cols);

    Matrix<F> out(f.field, blocks * xr + ur, blocks * ac + bc);
    for (std::size_t k = 0; k < blocks; ++k) {
        out.place(k * xr, blocks * ac, catalecticant(f.p[k], m, d - 1, i));        // N_i
        out.place(blocks * xr, k * ac, catalecticant(f.p[k], m, d - 1, i - 1));    // M_{i-1}
    }
    out.place(blocks * xr, blocks * ac, catalecticant(f.G, m, d, i));               // Gamma_i
    return out;
}

template <Field F>
HVector hilbert_function(const PerazzoForm<F>& f, bool full_check) {
    auto report = validate(f);
    if (!report.valid())
        throw ValidationError(std::move(report.violations));
    const int d = f.d;
    HVector h{std::vector<std::int64_t>(static_cast<std::size_t>(d + 1), 0)};
    h.entries.front() = h.entries.back() = 1;
    const int last = full_check ? d - 1 : d / 2;
    for (int i = 1; i <= last; ++i)
        h.entries[static_cast<std::size_t>(i)] =
            static_cast<std::int64_t>(rank(block_matrix(f, static_cast<unsigned>(i))));
    if (full_check) {
        if (!h.is_symmetric())
            throw std::logic_error("Hilbert function is not symmetric: " + h.to_string());
    } else {
        for (int i = d / 2 + 1; i < d; ++i)
            h.entries[static_cast<std::size_t>(i)] = h.entries[static_cast<std::size_t>(d - i)];
    }
    return h;
}

template <Field F>
HVector hilbert_function_by_partials(const Polynomial<F>& form) {
    if (form.is_zero())
        throw std::invalid_argument("the zero form has no Hilbert function");
    const unsigned d = *form.degree();
    HVector h;
    for (unsigned i = 0; i <= d; ++i) {
        const auto ps = partials(form, i);
        h.entries.push_back(static_cast<std::int64_t>(rank(support_coeff_matrix(form.field(), std::span<const Polynomial<F>>(ps)).matrix)));
    }
    return h;
}

#define PERAZZO_INSTANTIATE_HILBERT(F)                                                   \
    template Matrix<F> catalecticant(const Polynomial<F>&, std::size_t, unsigned, unsigned); \
    template Matrix<F> block_matrix(const PerazzoForm<F>&, unsigned);                    \
    template HVector hilbert_function(const PerazzoForm<F>&, bool);                      \
    template HVector hilbert_function_by_partials(const Polynomial<F>&);

PERAZZO_INSTANTIATE_HILBERT(PrimeField)
PERAZZO_INSTANTIATE_HILBERT(RationalField)

#undef PERAZZO_INSTANTIATE_HILBERT

}  // namespace perazzo
