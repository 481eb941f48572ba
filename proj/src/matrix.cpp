#include "perazzo/matrix.hpp"

#include <algorithm>
#include <utility>

namespace perazzo {

namespace {

// Shoup's precomputed modular multiplication by a fixed w (valid for p < 2^63).
class FixedMul {
public:
    FixedMul(std::uint64_t w, std::uint64_t p)
        : w_(w), p_(p),
          wp_(static_cast<std::uint64_t>((static_cast<unsigned __int128>(w) << 64) / p)) {}

    std::uint64_t operator()(std::uint64_t x) const {
        const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(wp_) * x) >> 64);
        std::uint64_t r = w_ * x - q * p_;
        return r >= p_ ? r - p_ : r;
    }

private:
    std::uint64_t w_, p_, wp_;
};

// dst[j] -= f * src[j] for j >= from.
void sub_multiple(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                  std::uint64_t f, std::size_t from, std::uint64_t p) {
    const FixedMul mul(f, p);
    for (std::size_t j = from; j < dst.size(); ++j) {
        if (src[j] == 0)
            continue;
        const std::uint64_t t = mul(src[j]);
        dst[j] = dst[j] >= t ? dst[j] - t : dst[j] + (p - t);
    }
}

void swap_rows(Matrix<PrimeField>& a, std::size_t r1, std::size_t r2) {
    if (r1 == r2)
        return;
    auto x = a.row(r1);
    auto y = a.row(r2);
    std::swap_ranges(x.begin(), x.end(), y.begin());
}

// Gauss (full = false) or Gauss-Jordan (full = true) elimination in place.
std::vector<std::size_t> eliminate(Matrix<PrimeField>& a, bool full) {
    const auto& f = a.field();
    const std::uint64_t p = f.modulus();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
        std::size_t r = row;
        while (r < a.rows() && a(r, c) == 0)
            ++r;
        if (r == a.rows())
            continue;
        swap_rows(a, r, row);
        const std::uint64_t inv = f.inv(a(row, c));
        if (inv != 1) {
            const FixedMul mul(inv, p);
            auto pr = a.row(row);
            for (std::size_t j = c; j < a.cols(); ++j)
                pr[j] = mul(pr[j]);
        }
        const auto pr = std::as_const(a).row(row);
        for (std::size_t r2 = full ? 0 : row + 1; r2 < a.rows(); ++r2) {
            if (r2 == row || a(r2, c) == 0)
                continue;
            sub_multiple(a.row(r2), pr, a(r2, c), c, p);
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

// Fraction-free (Bareiss) forward elimination over Z after clearing row
// denominators; returns the pivot columns and the integer echelon rows.
std::pair<std::vector<std::size_t>, std::vector<std::vector<mpz_class>>>
bareiss(const Matrix<RationalField>& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < cols; ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < cols; ++c)
            a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }

    std::vector<std::size_t> pivots;
    mpz_class prev = 1;
    mpz_class t;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < rows; ++c) {
        std::size_t r = row;
        while (r < rows && sgn(a[r][c]) == 0)
            ++r;
        if (r == rows)
            continue;
        std::swap(a[r], a[row]);
        const mpz_class& piv = a[row][c];
        for (std::size_t r2 = row + 1; r2 < rows; ++r2) {
            auto& dst = a[r2];
            const mpz_class lead = dst[c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                // dst[j] = (piv * dst[j] - lead * a[row][j]) / prev
                mpz_mul(t.get_mpz_t(), piv.get_mpz_t(), dst[j].get_mpz_t());
                mpz_submul(t.get_mpz_t(), lead.get_mpz_t(), a[row][j].get_mpz_t());
                mpz_divexact(dst[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            dst[c] = 0;
        }
        prev = piv;
        pivots.push_back(c);
        ++row;
    }
    a.resize(row);
    return {std::move(pivots), std::move(a)};
}

RowEchelon<PrimeField> rref_impl(const Matrix<PrimeField>& m) {
    Matrix<PrimeField> a = m;
    auto pivots = eliminate(a, true);
    std::vector<std::size_t> keep(pivots.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        keep[i] = i;
    return {std::move(pivots), a.select_rows(keep)};
}

RowEchelon<RationalField> rref_impl(const Matrix<RationalField>& m) {
    auto [pivots, ech] = bareiss(m);
    Matrix<RationalField> red(m.field(), pivots.size(), m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = pivots[r]; c < m.cols(); ++c)
            red(r, c) = mpq_class(ech[r][c]);
    mpq_class t;
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const std::size_t pc = pivots[k];
        const mpq_class inv = 1 / red(k, pc);
        for (std::size_t c = pc; c < m.cols(); ++c)
            if (sgn(red(k, c)) != 0)
                red(k, c) *= inv;
        for (std::size_t r = 0; r < k; ++r) {
            const mpq_class f = red(r, pc);
            if (sgn(f) == 0)
                continue;
            for (std::size_t c = pc; c < m.cols(); ++c)
                if (sgn(red(k, c)) != 0)
                    red(r, c) -= f * red(k, c);
        }
    }
    return {std::move(pivots), std::move(red)};
}

std::vector<std::size_t> pivot_columns(const Matrix<PrimeField>& m) {
    Matrix<PrimeField> a = m;
    return eliminate(a, false);
}

std::vector<std::size_t> pivot_columns(const Matrix<RationalField>& m) {
    return bareiss(m).first;
}

}  // namespace

template <Field F>
Matrix<F> operator*(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("dimension mismatch in matrix product");
    const F& f = a.field();
    Matrix<F> c(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto& aik = a(i, k);
            if (f.is_zero(aik))
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!f.is_zero(b(k, j)))
                    c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
        }
    return c;
}

template <Field F>
Matrix<F> operator+(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("dimension mismatch in matrix sum");
    Matrix<F> c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = a.field().add(a(i, j), b(i, j));
    return c;
}

template <Field F>
Matrix<F> scaled(const Matrix<F>& a, const typename F::Element& s) {
    Matrix<F> c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = a.field().mul(a(i, j), s);
    return c;
}

template <Field F>
Vector<F> apply(const Matrix<F>& a, std::span<const typename F::Element> v) {
    if (v.size() != a.cols())
        throw std::invalid_argument("dimension mismatch in matrix-vector product");
    const F& f = a.field();
    Vector<F> out(a.rows(), f.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!f.is_zero(a(i, j)) && !f.is_zero(v[j]))
                out[i] = f.add(out[i], f.mul(a(i, j), v[j]));
    return out;
}

template <Field F>
RowEchelon<F> reduced_row_echelon(const Matrix<F>& m) {
    return rref_impl(m);
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
    if (m.empty())
        return 0;
    return pivot_columns(m).size();
}

template <Field F>
std::vector<Vector<F>> kernel_basis(const Matrix<F>& m) {
    const F& f = m.field();
    std::vector<Vector<F>> basis;
    if (m.cols() == 0)
        return basis;
    if (m.rows() == 0) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            Vector<F> v(m.cols(), f.zero());
            v[c] = f.one();
            basis.push_back(std::move(v));
        }
        return basis;
    }
    const auto ech = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ech.pivots)
        is_pivot[c] = true;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector<F> v(m.cols(), f.zero());
        v[free] = f.one();
        for (std::size_t r = 0; r < ech.pivots.size(); ++r)
            v[ech.pivots[r]] = f.neg(ech.reduced(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

template <Field F>
ColumnSpace<F> column_space_basis(const Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    if (!m.empty())
        pivots = pivot_columns(m);
    auto basis = m.select_columns(pivots);
    return {std::move(pivots), std::move(basis)};
}

template <Field F>
Matrix<F> inverse(const Matrix<F>& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n)
        throw std::domain_error("inverse of a non-square matrix");
    Matrix<F> aug(m.field(), n, 2 * n);
    aug.place(0, 0, m);
    aug.place(0, n, Matrix<F>::identity(m.field(), n));
    const auto ech = reduced_row_echelon(aug);
    if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] != n - 1))
        throw std::domain_error("matrix is singular");
    Matrix<F> inv(m.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = ech.reduced(r, n + c);
    return inv;
}

#define PERAZZO_INSTANTIATE_MATRIX(F)                                                  \
    template Matrix<F> operator*(const Matrix<F>&, const Matrix<F>&);                  \
    template Matrix<F> operator+(const Matrix<F>&, const Matrix<F>&);                  \
    template Matrix<F> scaled(const Matrix<F>&, const F::Element&);                    \
    template Vector<F> apply(const Matrix<F>&, std::span<const F::Element>);           \
    template RowEchelon<F> reduced_row_echelon(const Matrix<F>&);                      \
    template std::size_t rank(const Matrix<F>&);                                       \
    template std::vector<Vector<F>> kernel_basis(const Matrix<F>&);                    \
    template ColumnSpace<F> column_space_basis(const Matrix<F>&);                      \
    template Matrix<F> inverse(const Matrix<F>&);

PERAZZO_INSTANTIATE_MATRIX(PrimeField)
PERAZZO_INSTANTIATE_MATRIX(RationalField)

#undef PERAZZO_INSTANTIATE_MATRIX

}  // namespace perazzo
