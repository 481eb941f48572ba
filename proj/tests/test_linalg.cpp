#include "doctest.h"

#include "perazzo/matrix.hpp"
#include "perazzo/rng.hpp"

#include <algorithm>
#include <numeric>

using namespace perazzo;

namespace {

template <Field F>
Matrix<F> int_matrix(const F& f, const std::vector<std::vector<std::int64_t>>& rows) {
    std::vector<std::vector<typename F::Element>> conv;
    for (const auto& r : rows) {
        conv.emplace_back();
        for (auto v : r)
            conv.back().push_back(f.from_int(v));
    }
    return Matrix<F>::from_rows(f, conv);
}

// Integer matrix of prescribed rank: a product (rows x r)(r x cols) of small
// random integer factors, entries well below 2^20.
std::vector<std::vector<std::int64_t>> low_rank_ints(Rng& rng, std::size_t rows, std::size_t cols,
                                                     std::size_t r) {
    std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(r));
    std::vector<std::vector<std::int64_t>> b(r, std::vector<std::int64_t>(cols));
    for (auto& row : a)
        for (auto& v : row)
            v = rng.between(-30, 30);
    for (auto& row : b)
        for (auto& v : row)
            v = rng.between(-30, 30);
    std::vector<std::vector<std::int64_t>> c(rows, std::vector<std::int64_t>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t k = 0; k < r; ++k)
                c[i][j] += a[i][k] * b[k][j];
    return c;
}

template <Field F>
bool in_kernel(const Matrix<F>& m, const Vector<F>& v) {
    const auto out = apply(m, std::span<const typename F::Element>(v));
    return std::all_of(out.begin(), out.end(), [&](const auto& e) { return m.field().is_zero(e); });
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    PrimeField f;
    CHECK(f.modulus() == kDefaultPrime);
    const auto a = f.from_int(-5);
    CHECK(f.add(a, f.from_int(5)) == 0);
    CHECK(f.mul(f.inv(a), a) == 1);
    CHECK(f.parse("1/2") == f.inv(2));
    CHECK(f.parse("-3") == f.neg(3));
    CHECK(f.from_integer(mpz_class("-1")) == kDefaultPrime - 1);
    CHECK_THROWS_AS(PrimeField(1000003), std::invalid_argument);           // too small
    CHECK_THROWS_AS(PrimeField(kDefaultPrime - 2), std::invalid_argument);  // composite
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
}

TEST_CASE("rational field parsing") {
    RationalField q;
    CHECK(q.parse("6/4") == mpq_class(3, 2));
    CHECK(q.parse("-7") == mpq_class(-7));
    CHECK_THROWS(q.parse("1.5"));
    CHECK_THROWS(q.parse("1/0"));
}

TEST_CASE("field spec descriptors") {
    CHECK(FieldSpec::parse("prime") == FieldSpec::default_prime());
    CHECK(FieldSpec::parse("rational").kind == FieldSpec::Kind::rational);
    CHECK(FieldSpec::parse("4611686018427387847") == FieldSpec::default_prime());
    CHECK_THROWS(FieldSpec::parse("bogus"));
}

TEST_CASE_TEMPLATE("rank examples", F, PrimeField, RationalField) {
    F f;
    CHECK(rank(Matrix<F>::identity(f, 3)) == 3);
    CHECK(rank(int_matrix(f, {{1, 2}, {2, 4}})) == 1);
    CHECK(rank(Matrix<F>(f, 0, 4)) == 0);
    CHECK(rank(Matrix<F>(f, 3, 0)) == 0);
    CHECK(rank(Matrix<F>(f, 3, 3)) == 0);
}

TEST_CASE_TEMPLATE("kernel examples", F, PrimeField, RationalField) {
    F f;
    CHECK(kernel_basis(Matrix<F>::identity(f, 2)).empty());

    const auto m = int_matrix(f, {{1, -1}});
    const auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    CHECK(f.equal(ker[0][0], ker[0][1]));
    CHECK(!f.is_zero(ker[0][0]));
    CHECK(in_kernel(m, ker[0]));

    CHECK(kernel_basis(Matrix<F>(f, 0, 3)).size() == 3);
}

TEST_CASE_TEMPLATE("column space examples", F, PrimeField, RationalField) {
    F f;
    CHECK(column_space_basis(Matrix<F>::identity(f, 3)).pivots == std::vector<std::size_t>{0, 1, 2});
    const auto cs = column_space_basis(int_matrix(f, {{1, 2}, {2, 4}}));
    CHECK(cs.pivots == std::vector<std::size_t>{0});
    CHECK(cs.basis.cols() == 1);
    CHECK(column_space_basis(int_matrix(f, {{0, 1, 1}, {0, 1, 1}})).pivots == std::vector<std::size_t>{1});
}

TEST_CASE_TEMPLATE("inverse", F, PrimeField, RationalField) {
    F f;
    const auto m = int_matrix(f, {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
    CHECK(m * inverse(m) == Matrix<F>::identity(f, 3));
    CHECK_THROWS_AS(inverse(int_matrix(f, {{1, 2}, {2, 4}})), std::domain_error);
}

TEST_CASE_TEMPLATE("rank properties on random matrices", F, PrimeField, RationalField) {
    F f;
    Rng rng(20240601);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 1 + rng.below(9);
        const std::size_t cols = 1 + rng.below(9);
        const std::size_t r = rng.below(std::min(rows, cols) + 1);
        const auto m = int_matrix(f, low_rank_ints(rng, rows, cols, r));
        const auto rk = rank(m);
        CHECK(rk <= r);
        CHECK(rk == rank(m.transpose()));

        const auto ker = kernel_basis(m);
        CHECK(ker.size() + rk == cols);
        for (const auto& v : ker)
            CHECK(in_kernel(m, v));
        if (!ker.empty()) {
            // independence: kernel vectors as columns have full column rank
            CHECK(rank(Matrix<F>::from_columns(f, cols, ker)) == ker.size());
        }

        const auto cs = column_space_basis(m);
        CHECK(cs.pivots.size() == rk);
        CHECK(std::is_sorted(cs.pivots.begin(), cs.pivots.end()));
        CHECK(rank(cs.basis) == rk);

        std::vector<std::size_t> rp(rows), cp(cols);
        std::iota(rp.begin(), rp.end(), 0);
        std::iota(cp.begin(), cp.end(), 0);
        for (std::size_t i = rows; i > 1; --i)
            std::swap(rp[i - 1], rp[rng.below(i)]);
        for (std::size_t i = cols; i > 1; --i)
            std::swap(cp[i - 1], cp[rng.below(i)]);
        CHECK(rank(m.select_rows(rp).select_columns(cp)) == rk);
    }
}

TEST_CASE("prime and rational ranks agree on a regression corpus") {
    PrimeField p;
    RationalField q;
    Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 2 + rng.below(12);
        const std::size_t cols = 2 + rng.below(12);
        const std::size_t r = rng.below(std::min(rows, cols) + 1);
        const auto ints = low_rank_ints(rng, rows, cols, r);
        CHECK(rank(int_matrix(p, ints)) == rank(int_matrix(q, ints)));
    }
}
