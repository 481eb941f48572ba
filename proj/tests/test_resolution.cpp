#include "doctest.h"

#include "perazzo/resolution.hpp"

#include <fstream>
#include <sstream>

using namespace perazzo;

namespace {

std::string golden(int d) {
    std::ifstream in(std::string(PERAZZO_GOLDEN_DIR) + "/betti_min_p4_d" + std::to_string(d) + ".txt");
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <Field F>
GradedModule<F> module_of(const PerazzoForm<F>& f) {
    return build_model(assemble(f)).module;
}

}  // namespace

TEST_CASE("expected minimal tables render like the stored ones") {
    for (int d = 5; d <= 8; ++d)
        CHECK(render_m2(expected_betti_min_p4(d)) == golden(d));
    for (int d = 5; d <= 20; ++d) {
        const auto t = expected_betti_min_p4(d);
        CHECK(t.totals() == std::vector<std::int64_t>{1, 14, 35, 35, 14, 1});
        CHECK(t.is_self_dual(d));
    }
    CHECK_THROWS_AS(expected_betti_min_p4(4), PreconditionError);
}

TEST_CASE("rendering small tables") {
    BettiTable t;
    t.nvars = 1;
    t.set(0, 0, 1);
    const auto text = render_m2(t);
    std::vector<std::string> lines;
    std::stringstream ss(text);
    for (std::string l; std::getline(ss, l);)
        lines.push_back(l);
    REQUIRE(lines.size() == 5);  // border, header, total, one data row, border
    CHECK(lines[3] == "|    0: 1 .|");
    CHECK(lines[2] == "|total: 1 0|");
}

TEST_CASE_TEMPLATE("Koszul differentials", F, PrimeField, RationalField) {
    F f;
    const auto mod = module_of(gen_canonical(f, CanonicalCase::I, 5));
    CHECK(rank(koszul_differential(mod, 1, 1)) == 5);
    CHECK(koszul_differential(mod, 0, 1).empty());
    CHECK(koszul_differential(mod, 6, 7).empty());
    CHECK(koszul_differential(mod, 2, 1).rows() == 0);
    CHECK(koszul_squares_to_zero(mod));
    const auto k2 = koszul_differential(mod, 1, 2);
    const auto kernel = k2.cols() - rank(k2);
    CHECK(kernel - rank(koszul_differential(mod, 2, 2)) == 9);
}

TEST_CASE_TEMPLATE("Betti tables of the canonical minimal forms", F, PrimeField, RationalField) {
    F f;
    for (int d = 5; d <= 8; ++d)
        for (auto which : {CanonicalCase::I, CanonicalCase::II, CanonicalCase::III}) {
            CAPTURE(d);
            const auto mod = module_of(gen_canonical(f, which, d, std::nullopt, 7));
            const auto t = betti(mod);
            CHECK(render_m2(t) == golden(d));
            CHECK(t == expected_betti_min_p4(d));
            CHECK(koszul_euler_balanced(mod, t));
        }
}

TEST_CASE("Betti tables up to degree 10") {
    PrimeField f;
    for (int d = 9; d <= 10; ++d) {
        const auto mod = module_of(gen_canonical(f, CanonicalCase::II, d));
        const auto t = betti(mod);
        CHECK(t == expected_betti_min_p4(d));
        CHECK(koszul_squares_to_zero(mod));
    }
}

TEST_CASE_TEMPLATE("general Betti table properties", F, PrimeField, RationalField) {
    F f;
    Rng rng(10);
    for (int d = 4; d <= 7; ++d) {
        for (const auto& form : {gen_general(f, 2, 2, d, true, rng.next()), gen_mixed(f, 2, 2, d, false, rng.next())}) {
            const auto mod = module_of(form);
            const auto t = betti(mod);
            CHECK(t.at(0, 0) == 1);
            for (const auto& [ij, b] : t.entries)
                if (ij.first == 0)
                    CHECK(ij.second == 0);
            CHECK(t.is_self_dual(d));
            CHECK(t.at(5, d + 5) == 1);
            CHECK(koszul_squares_to_zero(mod));
            CHECK(koszul_euler_balanced(mod, t));
        }
    }
    // quadrics in the annihilator: C(6,2) - h_2 with no linear generators
    const auto mod = module_of(gen_canonical(f, CanonicalCase::I, 6));
    CHECK(betti(mod).at(1, 2) == 15 - 6);
}

TEST_CASE_TEMPLATE("principal ideal in one variable", F, PrimeField, RationalField) {
    F f;
    const std::vector<std::string> u = {"U"};
    for (int d = 1; d <= 5; ++d) {
        const auto t = betti(build_model(parse_polynomial(f, u, "U^" + std::to_string(d))).module);
        BettiTable expected;
        expected.nvars = 1;
        expected.set(0, 0, 1);
        expected.set(1, d + 1, 1);
        CHECK(t == expected);
    }
}

TEST_CASE_TEMPLATE("Tor vanishing for quotients by a general linear form", F, PrimeField, RationalField) {
    F f;
    Rng rng(19);
    for (int d = 5; d <= 8; ++d) {
        const auto mod = module_of(gen_canonical(f, CanonicalCase::I, d));
        const auto r = check_tor_vanishing(mod, random_linear_form(f, 5, rng));
        CHECK(r.vanishes);
        CHECK(r.h == std::vector<std::size_t>{1, 4, 1});
    }
    // a special linear form is only reported
    const auto mod = module_of(gen_canonical(f, CanonicalCase::I, 7));
    LinearForm<F> u(5, f.zero());
    u[3] = f.one();
    const auto special = check_tor_vanishing(mod, u);
    CHECK(special.table.at(0, 0) == 1);
}
