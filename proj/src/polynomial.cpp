#include "perazzo/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace perazzo {

std::vector<std::string> VarLayout::names() const {
    std::vector<std::string> out;
    if (n == 2 && m == 2)
        return {"X", "Y", "Z", "U", "V"};
    for (int i = 0; i <= n; ++i)
        out.push_back("X" + std::to_string(i));
    for (int j = 1; j <= m; ++j)
        out.push_back("U" + std::to_string(j));
    return out;
}

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
    for (auto e : exps_)
        degree_ += e;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t v, unsigned power) {
    if (v >= nvars)
        throw std::out_of_range("variable index out of range");
    std::vector<Exponent> e(nvars, 0);
    e[v] = static_cast<Exponent>(power);
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
    if (other.nvars() != nvars() || degree_ > other.degree_)
        return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (other.nvars() != nvars())
        throw std::invalid_argument("monomials over different variable sets");
    std::vector<Exponent> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = static_cast<Exponent>(e[i] + other.exps_[i]);
    return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& other) const {
    if (!other.divides(*this))
        throw std::invalid_argument("monomial does not divide");
    std::vector<Exponent> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = static_cast<Exponent>(e[i] - other.exps_[i]);
    return Monomial(std::move(e));
}

std::string Monomial::to_string(std::span<const std::string> names) const {
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += i < names.size() ? names[i] : "x" + std::to_string(i);
        if (exps_[i] > 1)
            out += '^' + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
}

namespace {

void fill_monomials(std::vector<Monomial::Exponent>& cur, std::size_t pos, unsigned left,
                    std::vector<Monomial>& out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = static_cast<Monomial::Exponent>(left);
        out.emplace_back(cur);
        return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
        cur[pos] = static_cast<Monomial::Exponent>(e);
        fill_monomials(cur, pos + 1, left - e, out);
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (degree == 0)
            out.emplace_back();
        return out;
    }
    std::vector<Monomial::Exponent> cur(nvars, 0);
    fill_monomials(cur, 0, degree, out);
    return out;
}

template <Field F>
typename F::Element falling_factorial(const F& field, unsigned e, unsigned k) {
    auto r = field.one();
    for (unsigned i = 0; i < k; ++i)
        r = field.mul(r, field.from_int(static_cast<std::int64_t>(e - i)));
    return r;
}

template <Field F>
Polynomial<F> Polynomial<F>::monomial(F field, Monomial mono, Element coeff) {
    Polynomial p(field, mono.nvars());
    if (!field.is_zero(coeff))
        p.terms_.push_back({std::move(mono), std::move(coeff)});
    return p;
}

template <Field F>
Polynomial<F> Polynomial<F>::variable(F field, std::size_t nvars, std::size_t v) {
    auto one = field.one();
    return monomial(field, Monomial::variable(nvars, v), one);
}

template <Field F>
Polynomial<F> Polynomial<F>::from_terms(F field, std::size_t nvars, std::vector<Term> terms) {
    Polynomial p(field, nvars);
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
    for (auto& t : terms) {
        if (t.monomial.nvars() != nvars)
            throw std::invalid_argument("term has wrong number of variables");
        if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial)
            p.terms_.back().coeff = field.add(p.terms_.back().coeff, t.coeff);
        else
            p.terms_.push_back(std::move(t));
    }
    std::erase_if(p.terms_, [&](const Term& t) { return field.is_zero(t.coeff); });
    if (!p.terms_.empty()) {
        const unsigned deg = p.terms_.front().monomial.degree();
        for (const auto& t : p.terms_)
            if (t.monomial.degree() != deg)
                throw std::invalid_argument("polynomial is not homogeneous");
    }
    return p;
}

template <Field F>
std::optional<unsigned> Polynomial<F>::degree() const {
    if (terms_.empty())
        return std::nullopt;
    return terms_.front().monomial.degree();
}

template <Field F>
typename F::Element Polynomial<F>::coefficient(const Monomial& mono) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                               [](const Term& t, const Monomial& m) { return t.monomial > m; });
    if (it != terms_.end() && it->monomial == mono)
        return it->coeff;
    return field_.zero();
}

template <Field F>
void Polynomial<F>::check_compatible(const Polynomial& other) const {
    if (nvars_ != other.nvars_)
        throw std::invalid_argument("polynomials over different variable sets");
    if (!is_zero() && !other.is_zero() && *degree() != *other.degree())
        throw std::invalid_argument("sum of polynomials of different degrees");
}

template <Field F>
Polynomial<F> Polynomial<F>::operator+(const Polynomial& other) const {
    check_compatible(other);
    Polynomial out(field_, nvars_);
    out.terms_.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->monomial > b->monomial)) {
            out.terms_.push_back(*a++);
        } else if (a == terms_.end() || b->monomial > a->monomial) {
            out.terms_.push_back(*b++);
        } else {
            auto c = field_.add(a->coeff, b->coeff);
            if (!field_.is_zero(c))
                out.terms_.push_back({a->monomial, std::move(c)});
            ++a;
            ++b;
        }
    }
    return out;
}

template <Field F>
Polynomial<F> Polynomial<F>::operator-(const Polynomial& other) const {
    return *this + other.scaled(field_.neg(field_.one()));
}

template <Field F>
Polynomial<F> Polynomial<F>::operator*(const Polynomial& other) const {
    if (nvars_ != other.nvars_)
        throw std::invalid_argument("polynomials over different variable sets");
    std::map<Monomial, Element, std::greater<>> acc;
    for (const auto& s : terms_)
        for (const auto& t : other.terms_) {
            auto [it, inserted] = acc.try_emplace(s.monomial * t.monomial, field_.zero());
            it->second = field_.add(it->second, field_.mul(s.coeff, t.coeff));
        }
    Polynomial out(field_, nvars_);
    for (auto& [mono, c] : acc)
        if (!field_.is_zero(c))
            out.terms_.push_back({mono, c});
    return out;
}

template <Field F>
Polynomial<F> Polynomial<F>::scaled(const Element& s) const {
    Polynomial out(field_, nvars_);
    if (field_.is_zero(s))
        return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        out.terms_.push_back({t.monomial, field_.mul(t.coeff, s)});
    return out;
}

template <Field F>
Polynomial<F> Polynomial<F>::pow(unsigned k) const {
    Polynomial result = monomial(field_, Monomial::one(nvars_), field_.one());
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1U)
            result = result * base;
        k >>= 1U;
        if (k > 0)
            base = base * base;
    }
    return result;
}

template <Field F>
Polynomial<F> Polynomial<F>::differentiate(std::size_t var) const {
    if (var >= nvars_)
        throw std::out_of_range("variable index out of range");
    return derivative(Monomial::variable(nvars_, var));
}

// Subtracting a fixed exponent vector preserves the graded-lex order, so the
// surviving terms stay sorted.
template <Field F>
Polynomial<F> Polynomial<F>::derivative(const Monomial& alpha) const {
    if (alpha.nvars() != nvars_)
        throw std::invalid_argument("derivative multi-index has wrong length");
    Polynomial out(field_, nvars_);
    for (const auto& t : terms_) {
        if (!alpha.divides(t.monomial))
            continue;
        auto c = t.coeff;
        for (std::size_t v = 0; v < nvars_; ++v)
            if (alpha[v] > 0)
                c = field_.mul(c, falling_factorial(field_, t.monomial[v], alpha[v]));
        if (!field_.is_zero(c))
            out.terms_.push_back({t.monomial / alpha, std::move(c)});
    }
    return out;
}

template <Field F>
typename F::Element Polynomial<F>::evaluate(std::span<const Element> point) const {
    if (point.size() != nvars_)
        throw std::invalid_argument("evaluation point has wrong length");
    auto sum = field_.zero();
    for (const auto& t : terms_) {
        auto v = t.coeff;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (unsigned e = 0; e < t.monomial[i]; ++e)
                v = field_.mul(v, point[i]);
        sum = field_.add(sum, v);
    }
    return sum;
}

template <Field F>
Polynomial<F> Polynomial<F>::embed(std::size_t nvars, std::size_t offset) const {
    if (offset + nvars_ > nvars)
        throw std::out_of_range("embedding does not fit");
    Polynomial out(field_, nvars);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<Monomial::Exponent> e(nvars, 0);
        for (std::size_t i = 0; i < nvars_; ++i)
            e[offset + i] = static_cast<Monomial::Exponent>(t.monomial[i]);
        out.terms_.push_back({Monomial(std::move(e)), t.coeff});
    }
    // Embedding keeps relative lex order of the shifted block.
    return out;
}

template <Field F>
std::string Polynomial<F>::to_string(std::span<const std::string> names) const {
    if (terms_.empty())
        return "0";
    std::string out;
    const auto one = field_.one();
    for (const auto& t : terms_) {
        std::string c = field_.to_string(t.coeff);
        const bool negative = !c.empty() && c.front() == '-';
        if (negative)
            c.erase(0, 1);
        if (!out.empty())
            out += negative ? " - " : " + ";
        else if (negative)
            out += "-";
        const std::string mono = t.monomial.to_string(names);
        const bool unit = field_.equal(t.coeff, one) || (negative && c == "1");
        if (mono == "1")
            out += c;
        else if (unit)
            out += mono;
        else
            out += c + "*" + mono;
    }
    return out;
}

template <Field F>
Polynomial<F> parse_polynomial(const F& field, std::span<const std::string> names, std::string_view text) {
    const auto fail = [&](const std::string& why) {
        throw std::invalid_argument("cannot parse polynomial '" + std::string(text) + "': " + why);
    };
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        fail("empty input");
    if (s == "0")
        return Polynomial<F>(field, names.size());

    std::vector<typename Polynomial<F>::Term> terms;
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (!terms.empty()) {
            fail("expected + or -");
        }
        const std::size_t end = std::min(s.find_first_of("+-", pos), s.size());
        const std::string_view term(s.data() + pos, end - pos);
        pos = end;
        if (term.empty())
            fail("empty term");

        auto coeff = field.one();
        std::vector<Monomial::Exponent> exps(names.size(), 0);
        std::size_t i = 0;
        while (i <= term.size()) {
            const std::size_t stop = std::min(term.find('*', i), term.size());
            const std::string_view factor = term.substr(i, stop - i);
            i = stop + 1;
            if (factor.empty())
                fail("empty factor");
            if (std::isdigit(static_cast<unsigned char>(factor.front()))) {
                coeff = field.mul(coeff, field.parse(factor));
                continue;
            }
            const auto caret = factor.find('^');
            const std::string name(factor.substr(0, caret));
            const auto it = std::find(names.begin(), names.end(), name);
            if (it == names.end())
                fail("unknown variable " + name);
            unsigned power = 1;
            if (caret != std::string_view::npos) {
                const auto digits = factor.substr(caret + 1);
                if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                    fail("bad exponent");
                power = static_cast<unsigned>(std::stoul(std::string(digits)));
            }
            auto& e = exps[static_cast<std::size_t>(it - names.begin())];
            e = static_cast<Monomial::Exponent>(e + power);
        }
        if (negative)
            coeff = field.neg(coeff);
        terms.push_back({Monomial(std::move(exps)), coeff});
    }
    try {
        return Polynomial<F>::from_terms(field, names.size(), std::move(terms));
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
    return Polynomial<F>(field, names.size());
}

template <Field F>
Polynomial<F> apply_operator(const Polynomial<F>& op, const Polynomial<F>& f) {
    if (op.nvars() != f.nvars())
        throw std::invalid_argument("operator and form over different variable sets");
    std::optional<Polynomial<F>> acc;
    for (const auto& t : op.terms()) {
        auto part = f.derivative(t.monomial).scaled(t.coeff);
        acc = acc ? *acc + part : part;
    }
    return acc ? *acc : Polynomial<F>(f.field(), f.nvars());
}

template <Field F>
std::vector<Polynomial<F>> partials(const Polynomial<F>& f, unsigned order) {
    std::vector<Polynomial<F>> out;
    for (const auto& alpha : monomials_of_degree(f.nvars(), order))
        out.push_back(f.derivative(alpha));
    return out;
}

template <Field F>
Matrix<F> coeff_matrix(std::span<const Polynomial<F>> fs, unsigned degree) {
    if (fs.empty())
        throw std::invalid_argument("coeff_matrix needs at least one polynomial");
    const F& field = fs.front().field();
    const std::size_t nvars = fs.front().nvars();
    const auto rows = monomials_of_degree(nvars, degree);
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < rows.size(); ++i)
        index.emplace(rows[i], i);
    Matrix<F> m(field, rows.size(), fs.size());
    for (std::size_t j = 0; j < fs.size(); ++j) {
        if (fs[j].nvars() != nvars)
            throw std::invalid_argument("polynomials over different variable sets");
        if (!fs[j].is_zero() && *fs[j].degree() != degree)
            throw std::invalid_argument("polynomial of degree " + std::to_string(*fs[j].degree()) +
                                        " in a degree-" + std::to_string(degree) + " matrix");
        for (const auto& t : fs[j].terms())
            m(index.at(t.monomial), j) = t.coeff;
    }
    return m;
}

template <Field F>
SupportMatrix<F> support_coeff_matrix(const F& field, std::span<const Polynomial<F>> fs) {
    std::set<Monomial, std::greater<>> support;
    for (const auto& f : fs)
        for (const auto& t : f.terms())
            support.insert(t.monomial);
    SupportMatrix<F> out{{support.begin(), support.end()}, Matrix<F>(field, support.size(), fs.size())};
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < out.rows.size(); ++i)
        index.emplace(out.rows[i], i);
    for (std::size_t j = 0; j < fs.size(); ++j)
        for (const auto& t : fs[j].terms())
            out.matrix(index.at(t.monomial), j) = t.coeff;
    return out;
}

#define PERAZZO_INSTANTIATE_POLY(F)                                                          \
    template class Polynomial<F>;                                                            \
    template F::Element falling_factorial(const F&, unsigned, unsigned);                     \
    template Polynomial<F> apply_operator(const Polynomial<F>&, const Polynomial<F>&);      \
    template Polynomial<F> parse_polynomial(const F&, std::span<const std::string>, std::string_view); \
    template std::vector<Polynomial<F>> partials(const Polynomial<F>&, unsigned);           \
    template Matrix<F> coeff_matrix(std::span<const Polynomial<F>>, unsigned);              \
    template SupportMatrix<F> support_coeff_matrix(const F&, std::span<const Polynomial<F>>);

PERAZZO_INSTANTIATE_POLY(PrimeField)
PERAZZO_INSTANTIATE_POLY(RationalField)

#undef PERAZZO_INSTANTIATE_POLY

}  // namespace perazzo
