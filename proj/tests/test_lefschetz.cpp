#include "doctest.h"

#include "perazzo/lefschetz.hpp"

#include <array>

using namespace perazzo;

namespace {

HVector H(std::vector<std::int64_t> v) { return HVector{std::move(v)}; }

template <Field F>
GradedModule<F> module_of(const PerazzoForm<F>& f) {
    return build_model(assemble(f)).module;
}

}  // namespace

TEST_CASE_TEMPLATE("weak Lefschetz verdicts", F, PrimeField, RationalField) {
    F f;
    const auto c1 = module_of(gen_canonical(f, CanonicalCase::I, 7));
    const auto v = wlp(c1, 5, 1);
    REQUIRE(v.holds());
    CHECK(v.mode == LefschetzMode::weak);
    CHECK(lefschetz_deficits(c1, std::get<Holds<F>>(v.result).witness, LefschetzMode::weak).empty());

    const auto general = wlp(module_of(gen_general(f, 2, 2, 7, true, 1)), 5, 1);
    REQUIRE(!general.holds());
    const auto& fail = std::get<FailsGeneric>(general.result);
    CHECK(fail.trials == 5);
    CHECK(!fail.deficits.empty());
    for (const auto& d : fail.deficits) {
        CHECK(d.power == 1);
        CHECK(d.rank < d.required);
    }

    CHECK(!wlp(module_of(gen_min(f, 9, 3, 4, 1)), 3, 1).holds());
    CHECK_THROWS(wlp(c1, 0, 1));
}

TEST_CASE_TEMPLATE("strong Lefschetz verdicts", F, PrimeField, RationalField) {
    F f;
    const std::vector<std::string> uvw = {"U", "V", "W"};
    for (int d = 2; d <= 6; ++d) {
        const auto text = "U^" + std::to_string(d) + " + V^" + std::to_string(d) + " + W^" + std::to_string(d);
        const auto model = build_model(parse_polynomial(f, uvw, text));
        const auto v = slp(model.module, 5, 3);
        REQUIRE(v.holds());
        CHECK(v.mode == LefschetzMode::strong);
        CHECK(lefschetz_deficits(model.module, std::get<Holds<F>>(v.result).witness, LefschetzMode::strong).empty());
    }
    const auto c1 = module_of(gen_canonical(f, CanonicalCase::I, 6));
    const auto v = slp(c1, 3, 2);
    REQUIRE(!v.holds());
    // the Hessian obstruction: l^{d-2} : A_1 -> A_{d-1} drops rank
    bool found = false;
    for (const auto& d : std::get<FailsGeneric>(v.result).deficits)
        found = found || (d.degree == 1 && d.power == 4);
    CHECK(found);
}

TEST_CASE("strong mode stops at the top degree") {
    PrimeField f;
    const auto model = build_model(assemble(gen_canonical(f, CanonicalCase::I, 5)));
    Rng rng(1);
    const auto ell = random_linear_form(f, 5, rng);
    std::size_t max_power = 0;
    for (const auto& d : lefschetz_deficits(model.module, ell, LefschetzMode::strong))
        max_power = std::max(max_power, d.degree + d.power);
    CHECK(max_power <= 5);
}

TEST_CASE("every Perazzo form fails SLP") {
    PrimeField f;
    Rng rng(6);
    const std::vector<std::array<int, 3>> grid = {{2, 2, 4}, {2, 2, 6}, {3, 2, 5}, {3, 3, 4}, {4, 3, 5}, {5, 4, 4}};
    for (const auto& [n, m, d] : grid) {
        CHECK(!slp(module_of(gen_min(f, n, m, d, rng.next())), 3, rng.next()).holds());
        CHECK(!slp(module_of(gen_general(f, n, m, d, true, rng.next())), 3, rng.next()).holds());
    }
}

TEST_CASE_TEMPLATE("Hessians", F, PrimeField, RationalField) {
    F f;
    const std::vector<std::string> p4 = {"X", "Y", "Z", "U", "V"};
    const auto perazzo = parse_polynomial(f, std::vector<std::string>{"X", "Y", "Z", "U", "V"}, "X*U^2 + Y*U*V + Z*V^2");
    CHECK(hessian_vanishes(perazzo));
    CHECK(hessian_determinant(perazzo).is_zero());

    const std::vector<std::string> uv = {"U", "V"};
    for (int d = 3; d <= 6; ++d) {
        const auto q = parse_polynomial(f, uv, "U^" + std::to_string(d) + " + V^" + std::to_string(d));
        CHECK(!hessian_vanishes(q));
        const auto det = hessian_determinant(q);
        const auto c = f.from_int(static_cast<std::int64_t>(d * (d - 1)) * d * (d - 1));
        const auto expected = Polynomial<F>::monomial(
            f, Monomial({static_cast<Monomial::Exponent>(d - 2), static_cast<Monomial::Exponent>(d - 2)}), c);
        CHECK(det == expected);
    }
    for (int d = 4; d <= 6; ++d)
        CHECK(hessian_determinant(assemble(gen_canonical(f, CanonicalCase::II, d == 4 ? 5 : d))).is_zero());
    CHECK_THROWS_AS(hessian_determinant(assemble(gen_canonical(f, CanonicalCase::I, 7))), PreconditionError);
}

TEST_CASE("Perazzo Hessians vanish across parameters") {
    PrimeField f;
    Rng rng(15);
    const std::vector<std::array<int, 3>> grid = {{2, 2, 4}, {3, 2, 6}, {3, 3, 5}, {4, 3, 6}, {5, 4, 4}, {7, 4, 5}, {13, 3, 6}};
    for (const auto& [n, m, d] : grid) {
        CHECK(hessian_vanishes(assemble(gen_general(f, n, m, d, true, rng.next())), 5, rng.next()));
        CHECK(hessian_vanishes(assemble(gen_min(f, n, m, d, rng.next())), 5, rng.next()));
    }
}

TEST_CASE("P4 WLP criterion") {
    CHECK(thm_wlp_p4_predicate(H({1, 5, 6, 6, 5, 1}), 5));
    CHECK(!thm_wlp_p4_predicate(H({1, 5, 9, 9, 9, 9, 5, 1}), 7));
    CHECK(!thm_wlp_p4_predicate(H({1, 5, 8, 9, 9, 8, 5, 1}), 7));
    CHECK(!thm_wlp_p4_predicate(H({1, 5, 9, 8, 8, 9, 5, 1}), 7));
    CHECK(thm_wlp_p4_predicate(H({1, 5, 7, 8, 7, 5, 1}), 6));
    CHECK(!thm_wlp_p4_predicate(H({1, 5, 8, 8, 8, 5, 1}), 6));
    CHECK_THROWS_AS(thm_wlp_p4_predicate(H({1, 5, 6, 5, 1}), 4), PreconditionError);
    CHECK_THROWS_AS(thm_wlp_p4_predicate(H({1, 5, 6, 5, 1}), 5), PreconditionError);
}

TEST_CASE("P4 WLP criterion agrees with computed verdicts") {
    PrimeField f;
    Rng rng(40);
    int agree = 0;
    int total = 0;
    for (int d = 5; d <= 8; ++d) {
        std::vector<PerazzoForm<PrimeField>> forms = {
            gen_canonical(f, CanonicalCase::I, d), gen_canonical(f, CanonicalCase::II, d),
            gen_canonical(f, CanonicalCase::III, d, std::nullopt, rng.next()), gen_min(f, 2, 2, d, rng.next()),
            gen_general(f, 2, 2, d, false, rng.next()), gen_general(f, 2, 2, d, true, rng.next())};
        for (int terms = 2; terms <= 3; ++terms)
            forms.push_back(gen_power_sum(f, 2, 2, d, terms, rng.chance(1, 2), rng.next()));
        for (int k = 0; k < 6; ++k)
            forms.push_back(gen_mixed(f, 2, 2, d, rng.chance(1, 2), rng.next()));
        for (const auto& form : forms) {
            const auto h = hilbert_function(form);
            CAPTURE(h.to_string());
            const bool verdict = wlp(module_of(form), 5, rng.next()).holds();
            CHECK(verdict == thm_wlp_p4_predicate(h, d));
            agree += verdict == thm_wlp_p4_predicate(h, d);
            ++total;
        }
    }
    CHECK(agree == total);
}

TEST_CASE("minimal forms with WLP") {
    PrimeField f;
    CHECK(minimal_wlp_check(f, 3, 3, 8, 1));
    CHECK(minimal_wlp_check(f, 4, 3, 9, 1));
    CHECK_THROWS_AS(minimal_wlp_check(f, 9, 3, 4, 1), PreconditionError);
    CHECK_THROWS_AS(minimal_wlp_check(f, 2, 2, 6, 1), PreconditionError);
}

// For odd d = 2s+1 the middle map x l : A_s -> A_{s+1} has rank h_{l o F}(s),
// and l o F is a degree d-1 form with the same n, m, so the rank is at most
// h_max(n,m,d-1)_s. When that is below h_s the minimal algebra fails WLP even
// though h_min is unimodal and n+1 <= beta_s.
TEST_CASE("odd-degree minimal forms can fail WLP at the middle map") {
    PrimeField f;
    for (auto [n, m, d] : std::array<std::array<int, 3>, 2>{{{9, 3, 5}, {13, 3, 7}}}) {
        CAPTURE(n);
        CAPTURE(d);
        const int s = d / 2;
        const auto hmin = h_min(n, m, d);
        REQUIRE(is_unimodal(hmin));
        REQUIRE(n + 1 <= abg(n, m, d, s).beta);
        const auto bound = h_max(n, m, d - 1)[static_cast<std::size_t>(s)];
        REQUIRE(bound < hmin[static_cast<std::size_t>(s)]);

        CHECK_FALSE(minimal_wlp_check(f, n, m, d, 1));
        const auto model = build_model(assemble(gen_min(f, n, m, d, 1)));
        Rng rng(5);
        const auto ell = random_linear_form(f, model.nvars(), rng);
        const auto rank = mult_rank(model, ell, static_cast<std::size_t>(s));
        CHECK(static_cast<std::int64_t>(rank) <= bound);
        const auto deficits = lefschetz_deficits(model.module, ell, LefschetzMode::weak);
        REQUIRE(deficits.size() == 1);
        CHECK(deficits[0].degree == static_cast<std::size_t>(s));
    }
}

TEST_CASE("model and module verdicts agree over the rationals") {
    RationalField q;
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const auto model = build_model(assemble(gen_mixed(q, 2, 2, 6, seed == 1, seed)));
        for (auto mode : {LefschetzMode::weak, LefschetzMode::strong}) {
            const auto a = mode == LefschetzMode::weak ? wlp(model, 2, seed) : slp(model, 2, seed);
            const auto b = mode == LefschetzMode::weak ? wlp(model.module, 2, seed) : slp(model.module, 2, seed);
            REQUIRE(a.holds() == b.holds());
            if (a.holds())
                CHECK(std::get<Holds<RationalField>>(a.result).witness == std::get<Holds<RationalField>>(b.result).witness);
            else
                CHECK(std::get<FailsGeneric>(a.result).deficits == std::get<FailsGeneric>(b.result).deficits);
        }
    }
}
