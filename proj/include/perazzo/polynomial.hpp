#pragma once

#include "perazzo/field.hpp"
#include "perazzo/matrix.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace perazzo {

/// Split variable set X_0..X_n | U_1..U_m of a Perazzo form.
struct VarLayout {
    int n = 0;  // X-variables are X_0..X_n
    int m = 1;

    std::size_t x_count() const { return static_cast<std::size_t>(n + 1); }
    std::size_t total() const { return static_cast<std::size_t>(n + 1 + m); }
    /// Index of U_j (1-based j) in the full variable list.
    std::size_t u_index(int j) const { return static_cast<std::size_t>(n + j); }
    /// X,Y,Z,U,V for the P^4 case, otherwise X0..Xn,U1..Um.
    std::vector<std::string> names() const;

    friend bool operator==(const VarLayout&, const VarLayout&) = default;
};

/// Exponent vector with cached degree. Ordered graded-lexicographically with
/// variable 0 largest.
class Monomial {
public:
    using Exponent = std::uint16_t;

    Monomial() = default;
    explicit Monomial(std::vector<Exponent> exps);

    static Monomial one(std::size_t nvars) { return Monomial(std::vector<Exponent>(nvars, 0)); }
    static Monomial variable(std::size_t nvars, std::size_t v, unsigned power = 1);

    std::size_t nvars() const { return exps_.size(); }
    unsigned degree() const { return degree_; }
    unsigned operator[](std::size_t v) const { return exps_[v]; }
    std::span<const Exponent> exponents() const { return exps_; }

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    /// Requires divides(other, *this).
    Monomial operator/(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.degree_ <=> b.degree_; c != 0)
            return c;
        return a.exps_ <=> b.exps_;
    }

    std::string to_string(std::span<const std::string> names) const;

private:
    std::vector<Exponent> exps_;
    unsigned degree_ = 0;
};

/// All monomials of the given degree, in descending graded-lex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

/// Homogeneous polynomial with nonzero coefficients, terms kept in
/// descending graded-lex order. The zero polynomial has no degree.
template <Field F>
class Polynomial {
public:
    using Element = typename F::Element;

    struct Term {
        Monomial monomial;
        Element coeff;
    };

    Polynomial() = default;
    Polynomial(F field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

    static Polynomial monomial(F field, Monomial mono, Element coeff);
    static Polynomial variable(F field, std::size_t nvars, std::size_t v);
    /// Combines like terms and drops zeros; throws on mixed degrees.
    static Polynomial from_terms(F field, std::size_t nvars, std::vector<Term> terms);

    const F& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::optional<unsigned> degree() const;
    std::span<const Term> terms() const { return terms_; }
    Element coefficient(const Monomial& mono) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial scaled(const Element& s) const;
    Polynomial pow(unsigned k) const;

    /// Formal partial derivative with respect to variable `var`.
    Polynomial differentiate(std::size_t var) const;
    /// Iterated partial derivative d^alpha.
    Polynomial derivative(const Monomial& alpha) const;

    Element evaluate(std::span<const Element> point) const;

    /// Re-indexes into `nvars` variables, variable i moving to offset + i.
    Polynomial embed(std::size_t nvars, std::size_t offset) const;

    std::string to_string(std::span<const std::string> names) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size())
            return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].monomial != b.terms_[i].monomial ||
                !a.field_.equal(a.terms_[i].coeff, b.terms_[i].coeff))
                return false;
        return true;
    }

private:
    void check_compatible(const Polynomial& other) const;

    F field_{};
    std::size_t nvars_ = 0;
    std::vector<Term> terms_;
};

/// Parses sums of terms like "3*X*U^2 - 1/2*V^3 + Y*U*V" over the given
/// variable names. Throws std::invalid_argument on malformed input.
template <Field F>
Polynomial<F> parse_polynomial(const F& field, std::span<const std::string> names, std::string_view text);

/// op∘f: the dual-ring element `op` acting by differentiation.
template <Field F>
Polynomial<F> apply_operator(const Polynomial<F>& op, const Polynomial<F>& f);

/// All d^alpha f with |alpha| = order, alpha in descending graded-lex order
/// (zero derivatives included).
template <Field F>
std::vector<Polynomial<F>> partials(const Polynomial<F>& f, unsigned order);

/// Rows indexed by every degree-`degree` monomial (descending graded-lex),
/// column j holds the coefficients of fs[j]. fs must be nonempty.
template <Field F>
Matrix<F> coeff_matrix(std::span<const Polynomial<F>> fs, unsigned degree);

/// Same as coeff_matrix restricted to the monomials occurring in some fs[j];
/// the omitted rows are identically zero.
template <Field F>
struct SupportMatrix {
    std::vector<Monomial> rows;
    Matrix<F> matrix;
};

template <Field F>
SupportMatrix<F> support_coeff_matrix(const F& field, std::span<const Polynomial<F>> fs);

/// Falling factorial e (e-1) ... (e-k+1) as a field element.
template <Field F>
typename F::Element falling_factorial(const F& field, unsigned e, unsigned k);

}  // namespace perazzo
