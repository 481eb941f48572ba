#pragma once

#include "perazzo/perazzo_form.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace perazzo {

/// (h_0, ..., h_d).
struct HVector {
    std::vector<std::int64_t> entries;

    std::size_t size() const { return entries.size(); }
    std::int64_t operator[](std::size_t i) const { return entries[i]; }
    bool is_symmetric() const;
    /// "(1,5,6,6,5,1)"
    std::string to_string() const;

    friend bool operator==(const HVector&, const HVector&) = default;
};

/// Weakly increasing then weakly decreasing.
bool is_unimodal(const HVector& h);
bool termwise_leq(const HVector& a, const HVector& b);

struct Abg {
    std::int64_t alpha = 0;
    std::int64_t beta = 0;
    std::int64_t gamma = 0;

    friend bool operator==(const Abg&, const Abg&) = default;
};

/// alpha_i = C(m+i-1, m-1), beta_i = C(d+m-i-1, m-1), gamma_i = (n+1) C(m+i-2, m-1).
Abg abg(int n, int m, int d, int i);

/// Entrywise min{alpha_i+beta_i, alpha_i+gamma_i} on 0..floor(d/2), reflected.
HVector h_max(int n, int m, int d);
/// h_0 = 1, min{2(n+1), alpha_i+n+1, alpha_i+beta_i} on 1..floor(d/2), reflected.
HVector h_min(int n, int m, int d);

bool predict_hmax_unimodal(int n, int m, int d);
/// Always true for m = 2. For m >= 3, n+1 > beta_{s-1} forces a dip; otherwise
/// h_min can still drop from h_{s-1} to h_s, so the answer is read off h_min.
bool predict_hmin_unimodal(int n, int m, int d);
/// n+1 <= beta_{s-1}: necessary for unimodality of h_min, not sufficient
/// (fails at (9,3,4) and (13,3,5)).
bool hmin_unimodality_inequality(int n, int m, int d);
/// C(d+m-3, m-1) <= n+1.
bool extremes_coincide(int n, int m, int d);

struct ExtremesReport {
    int n = 0, m = 0, d = 0;
    HVector hmax;
    HVector hmin;
    bool hmax_unimodal = false;
    bool hmin_unimodal = false;
    bool hmin_inequality = false;
    bool coincide = false;
    int s = 0;
    Abg at_s_minus_1;
    Abg at_s;
};

/// Throws PreconditionError when no Perazzo form has these parameters.
ExtremesReport extremes(int n, int m, int d);

/// Rows eta with |eta| = e-i, columns delta with |delta| = i (descending
/// graded-lex); entry q_{delta+eta} = coefficient / multinomial. q may be zero.
template <Field F>
Matrix<F> catalecticant(const Polynomial<F>& q, std::size_t nvars, unsigned e, unsigned i);

/// [[0, N_i], [M_{i-1}, Gamma_i]] whose rank is h_i of A_F; 1 <= i <= d-1.
/// Columns: operators x_k u^mu (|mu| = i-1, blockwise in k), then u^nu (|nu| = i).
/// Rows: monomials X_k U^eta (|eta| = d-1-i, blockwise in k), then U^eta (|eta| = d-i).
template <Field F>
Matrix<F> block_matrix(const PerazzoForm<F>& f, unsigned i);

/// h_i = rank block_matrix(f, i) on 1..floor(d/2), reflected. With full_check
/// every degree is computed and asymmetry throws std::logic_error.
template <Field F>
HVector hilbert_function(const PerazzoForm<F>& f, bool full_check = false);

/// dim span of the order-i partials of any homogeneous form, i = 0..deg.
template <Field F>
HVector hilbert_function_by_partials(const Polynomial<F>& form);

}  // namespace perazzo
