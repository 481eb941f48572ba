#pragma once

#include "perazzo/algebra.hpp"

#include <map>
#include <string>
#include <utility>

namespace perazzo {

/// Graded Betti numbers beta_{i,j}; only nonzero entries are stored.
struct BettiTable {
    std::size_t nvars = 0;
    std::map<std::pair<int, int>, std::int64_t> entries;  // (i, j) -> beta

    std::int64_t at(int i, int j) const;
    void set(int i, int j, std::int64_t value);
    /// Column sums, i = 0..nvars.
    std::vector<std::int64_t> totals() const;
    /// beta_{i,j} = beta_{nvars-i, socle+nvars-j} for all i, j.
    bool is_self_dual(int socle_degree) const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Degree-j block of d_i : Lambda^i V (x) M -> Lambda^{i-1} V (x) M, with
/// e_S (x) w -> sum_{t in S} (-1)^{position of t} e_{S-t} (x) x_t w. Subsets
/// are ordered lexicographically. Out-of-range (i, j) gives a 0 x 0 matrix.
template <Field F>
Matrix<F> koszul_differential(const GradedModule<F>& module, int i, int j);

/// dim (Lambda^i V (x) M)_j.
template <Field F>
std::size_t koszul_dimension(const GradedModule<F>& module, int i, int j);

/// beta_{i,j} = dim ker(d_i)_j - rank(d_{i+1})_j, with d_0 = 0.
template <Field F>
BettiTable betti(const GradedModule<F>& module);

/// d_{i-1} d_i = 0 in every degree.
template <Field F>
bool koszul_squares_to_zero(const GradedModule<F>& module);

/// In each degree the alternating sums of term dimensions and of Betti
/// numbers agree.
template <Field F>
bool koszul_euler_balanced(const GradedModule<F>& module, const BettiTable& table);

/// Closed-form table of a minimal-h Perazzo algebra in P^4, d >= 5.
BettiTable expected_betti_min_p4(int d);

struct TorReport {
    BettiTable table;                 // of B = A / lA
    std::vector<std::size_t> h;       // dims of B
    bool vanishes = false;            // beta_{i,j}(B) = 0 for j > i+2
};

template <Field F>
TorReport check_tor_vanishing(const GradedModule<F>& module, const LinearForm<F>& ell);

/// Macaulay2-style box: header 0..nvars, "total:" row, rows j-i, dots for zeros.
/// Column 0 is as wide as its entries; the other columns share one width.
std::string render_m2(const BettiTable& table);

}  // namespace perazzo
