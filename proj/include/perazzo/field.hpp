#pragma once

#include <gmpxx.h>

#include <concepts>
#include <stdexcept>
#include <cstdint>
#include <string>
#include <string_view>

namespace perazzo {

class Rng;

/// 2^62 - 57, the default coefficient field.
inline constexpr std::uint64_t kDefaultPrime = 4611686018427387847ULL;

/// Descriptor of an exact coefficient field: a large prime field or Q.
struct FieldSpec {
    enum class Kind { prime, rational };

    Kind kind = Kind::prime;
    mpz_class prime{static_cast<unsigned long>(kDefaultPrime)};

    static FieldSpec default_prime() { return {}; }
    static FieldSpec rational() { return {Kind::rational, 0}; }
    static FieldSpec prime_field(const mpz_class& p) { return {Kind::prime, p}; }

    /// Accepts "prime", "rational", or a decimal prime.
    static FieldSpec parse(std::string_view text);
    std::string to_string() const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.kind == b.kind && (a.kind == Kind::rational || a.prime == b.prime);
    }
};

/// Z/p for a prime 2^40 < p < 2^63; elements are canonical residues in [0, p).
class PrimeField {
public:
    using Element = std::uint64_t;

    PrimeField() = default;
    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    bool is_zero(Element a) const { return a == 0; }
    bool equal(Element a, Element b) const { return a == b; }

    Element add(Element a, Element b) const {
        Element s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + (p_ - b); }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const {
        return static_cast<Element>(static_cast<unsigned __int128>(a) * b % p_);
    }
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    Element from_int(std::int64_t v) const;
    Element from_integer(const mpz_class& v) const;
    Element from_rational(const mpq_class& v) const;
    /// Decimal integer or "a/b".
    Element parse(std::string_view text) const;
    std::string to_string(Element a) const { return std::to_string(a); }

    /// Uniform over the whole field.
    Element random(Rng& rng) const;
    Element random_nonzero(Rng& rng) const;

    FieldSpec spec() const { return FieldSpec::prime_field(mpz_class(std::to_string(p_))); }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint64_t p_ = kDefaultPrime;
};

/// Q with GMP rationals kept in lowest terms.
class RationalField {
public:
    using Element = mpq_class;

    /// Random elements are integers in [-kSampleBound, kSampleBound].
    static constexpr std::int64_t kSampleBound = 999;

    Element zero() const { return 0; }
    Element one() const { return 1; }
    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool equal(const Element& a, const Element& b) const { return a == b; }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element inv(const Element& a) const;
    Element div(const Element& a, const Element& b) const;

    Element from_int(std::int64_t v) const { return mpq_class(mpz_class(std::to_string(v))); }
    Element from_integer(const mpz_class& v) const { return mpq_class(v); }
    Element from_rational(const mpq_class& v) const { return v; }
    Element parse(std::string_view text) const;
    std::string to_string(const Element& a) const { return a.get_str(); }

    Element random(Rng& rng) const;
    Element random_nonzero(Rng& rng) const;

    FieldSpec spec() const { return FieldSpec::rational(); }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

template <class F>
concept Field = std::regular<F> && requires(const F& f, const typename F::Element& a, Rng& rng) {
    { f.zero() } -> std::convertible_to<typename F::Element>;
    { f.one() } -> std::convertible_to<typename F::Element>;
    { f.is_zero(a) } -> std::same_as<bool>;
    { f.add(a, a) } -> std::convertible_to<typename F::Element>;
    { f.sub(a, a) } -> std::convertible_to<typename F::Element>;
    { f.mul(a, a) } -> std::convertible_to<typename F::Element>;
    { f.inv(a) } -> std::convertible_to<typename F::Element>;
    { f.from_integer(mpz_class{}) } -> std::convertible_to<typename F::Element>;
    { f.random(rng) } -> std::convertible_to<typename F::Element>;
    { f.spec() } -> std::same_as<FieldSpec>;
};

/// Calls fn(PrimeField) or fn(RationalField) according to the descriptor.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.kind == FieldSpec::Kind::rational)
        return fn(RationalField{});
    if (!spec.prime.fits_ulong_p())
        throw std::invalid_argument("prime modulus must be below 2^63");
    return fn(PrimeField(spec.prime.get_ui()));
}

}  // namespace perazzo
