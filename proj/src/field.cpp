#include "perazzo/field.hpp"

#include "perazzo/rng.hpp"

#include <charconv>
#include <stdexcept>

namespace perazzo {

namespace {

mpq_class parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty())
        throw std::invalid_argument("empty coefficient");
    for (char c : s) {
        if (!(c == '-' || c == '+' || c == '/' || (c >= '0' && c <= '9')))
            throw std::invalid_argument("malformed coefficient '" + s + "'");
    }
    if (s.front() == '+')
        s.erase(0, 1);
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed coefficient '" + std::string(text) + "'");
    if (sgn(q.get_den()) == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

}  // namespace

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "prime" || text == "default")
        return default_prime();
    if (text == "rational" || text == "QQ")
        return rational();
    mpz_class p;
    if (text.empty() || p.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("unknown field '" + std::string(text) + "'");
    return prime_field(p);
}

std::string FieldSpec::to_string() const {
    return kind == Kind::rational ? "rational" : "prime:" + prime.get_str();
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p <= (std::uint64_t{1} << 40) || p >= (std::uint64_t{1} << 63))
        throw std::invalid_argument("prime modulus must satisfy 2^40 < p < 2^63");
    mpz_class z(std::to_string(p));
    if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

PrimeField::Element PrimeField::inv(Element a) const {
    if (a == 0)
        throw std::domain_error("inverse of zero");
    // extended Euclid on signed 128-bit values
    __int128 t = 0, new_t = 1;
    __int128 r = p_, new_r = a;
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0)
        t += p_;
    return static_cast<Element>(t);
}

PrimeField::Element PrimeField::from_int(std::int64_t v) const {
    if (v >= 0)
        return static_cast<Element>(v) % p_;
    const std::uint64_t mag = static_cast<std::uint64_t>(-(v + 1)) + 1;
    return neg(mag % p_);
}

PrimeField::Element PrimeField::from_integer(const mpz_class& v) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
    return r.get_ui();
}

PrimeField::Element PrimeField::from_rational(const mpq_class& v) const {
    const Element den = from_integer(v.get_den());
    if (den == 0)
        throw std::domain_error("denominator vanishes modulo p");
    return div(from_integer(v.get_num()), den);
}

PrimeField::Element PrimeField::parse(std::string_view text) const {
    return from_rational(parse_rational(text));
}

PrimeField::Element PrimeField::random(Rng& rng) const { return rng.below(p_); }

PrimeField::Element PrimeField::random_nonzero(Rng& rng) const { return 1 + rng.below(p_ - 1); }

RationalField::Element RationalField::inv(const Element& a) const {
    if (sgn(a) == 0)
        throw std::domain_error("inverse of zero");
    Element r = 1 / a;
    r.canonicalize();
    return r;
}

RationalField::Element RationalField::div(const Element& a, const Element& b) const {
    if (sgn(b) == 0)
        throw std::domain_error("division by zero");
    Element r = a / b;
    r.canonicalize();
    return r;
}

RationalField::Element RationalField::parse(std::string_view text) const {
    return parse_rational(text);
}

RationalField::Element RationalField::random(Rng& rng) const {
    return from_int(rng.between(-kSampleBound, kSampleBound));
}

RationalField::Element RationalField::random_nonzero(Rng& rng) const {
    std::int64_t v = 0;
    while (v == 0)
        v = rng.between(-kSampleBound, kSampleBound);
    return from_int(v);
}

}  // namespace perazzo
