#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "quadeuler/gw.hpp"

using namespace quadeuler;

namespace {

std::vector<FieldSpec> all_fields() {
    return {FieldSpec::quadratically_closed(), FieldSpec::real_closed(),
            FieldSpec::finite_odd(true), FieldSpec::finite_odd(false), FieldSpec::universal()};
}

GWElem random_elem(FieldSpec f, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-50, 50);
    return {d(rng), d(rng), f};
}

}  // namespace

TEST_CASE("normal forms per field") {
    CHECK(GWElem(3, 2, FieldSpec::quadratically_closed()) ==
          GWElem(5, 0, FieldSpec::quadratically_closed()));
    CHECK(GWElem(3, 2, FieldSpec::finite_odd(true)) == GWElem(5, 0, FieldSpec::finite_odd(true)));
    CHECK(GWElem(0, 2, FieldSpec::finite_odd(false)) == GWElem(2, 0, FieldSpec::finite_odd(false)));
    CHECK(GWElem(0, 3, FieldSpec::finite_odd(false)) == GWElem(2, 1, FieldSpec::finite_odd(false)));
    CHECK(GWElem(0, -1, FieldSpec::finite_odd(false)) ==
          GWElem(-2, 1, FieldSpec::finite_odd(false)));
    CHECK_FALSE(GWElem(3, 2, FieldSpec::universal()) == GWElem(5, 0, FieldSpec::universal()));
    CHECK_FALSE(GWElem(3, 2, FieldSpec::real_closed()) == GWElem(5, 0, FieldSpec::real_closed()));
}

TEST_CASE("hyperbolic element identities") {
    for (auto f : all_fields()) {
        auto h = hyperbolic_form(f);
        CHECK(gw_mul(h, h) == gw_add(h, h));                       // h^2 = 2h
        CHECK(gw_mul(GWElem(0, 1, f), h) == h);                    // <-1> h = h
        CHECK(witt_image(h).is_zero());                            // eta h = 0 in degree 0
        CHECK(rank_map(h) == 2);
    }
}

TEST_CASE("gw ring examples") {
    auto u = FieldSpec::universal();
    CHECK(gw_mul(GWElem::unit(u), GWElem(7, 5, u)) == GWElem(7, 5, u));
    CHECK(rank_map(gw_add(GWElem(3, 0, u), hyperbolic(12, u))) == 27);
    CHECK(GWElem(15, 12, u).render() == "3 + 12h");
    CHECK(GWElem(0, 0, u).render() == "0");
    CHECK(hyperbolic(28, u).render() == "28h");
    CHECK(hyperbolic(1, u).render() == "h");
    CHECK(hyperbolic(-1, u).render() == "-h");
    CHECK(GWElem(2, -3, u).render() == "5 - 3h");
    CHECK_THROWS_AS(gw_add(GWElem::unit(u), GWElem::unit(FieldSpec::real_closed())), domain_error);
}

TEST_CASE("ring axioms on random elements per field") {
    std::mt19937 rng(77);
    for (auto f : all_fields()) {
        for (int trial = 0; trial < 60; ++trial) {
            auto a = random_elem(f, rng);
            auto b = random_elem(f, rng);
            auto c = random_elem(f, rng);
            CHECK(gw_add(a, b) == gw_add(b, a));
            CHECK(gw_add(gw_add(a, b), c) == gw_add(a, gw_add(b, c)));
            CHECK(gw_mul(a, b) == gw_mul(b, a));
            CHECK(gw_mul(gw_mul(a, b), c) == gw_mul(a, gw_mul(b, c)));
            CHECK(gw_mul(a, gw_add(b, c)) == gw_add(gw_mul(a, b), gw_mul(a, c)));
            CHECK(gw_add(a, GWElem::zero(f)) == a);
            CHECK(gw_mul(a, GWElem::unit(f)) == a);
        }
    }
}

TEST_CASE("witt images") {
    CHECK(witt_image(GWElem(15, 12, FieldSpec::real_closed())).value == 3);
    CHECK(witt_image(GWElem(15, 12, FieldSpec::real_closed())).rank_parity() == 1);
    CHECK(witt_image(GWElem(1, 0, FieldSpec::quadratically_closed())).value == 1);
    CHECK(witt_image(GWElem(2, 0, FieldSpec::quadratically_closed())).is_zero());
    // W is cyclic of order 4 when -1 is not a square: h and h + 2<1> differ.
    auto f3 = FieldSpec::finite_odd(false);
    CHECK(witt_image(hyperbolic_form(f3)).is_zero());
    CHECK_FALSE(witt_image(gw_add(hyperbolic_form(f3), GWElem(2, 0, f3))).is_zero());
    CHECK(witt_image(GWElem(4, 0, f3)).is_zero());

    std::mt19937 rng(31);
    for (auto f : all_fields()) {
        for (int trial = 0; trial < 60; ++trial) {
            auto a = random_elem(f, rng);
            CHECK(witt_image(gw_mul(hyperbolic_form(f), a)).is_zero());
        }
    }
}

TEST_CASE("forgetful and hyperbolic maps") {
    auto u = FieldSpec::universal();
    CHECK(hyperbolic(28, u) == GWElem(28, 28, u));
    CHECK(rank_map(hyperbolic(28, u)) == 56);
    CHECK(hyperbolic(0, u).is_zero());

    std::mt19937 rng(13);
    for (auto f : all_fields()) {
        for (int trial = 0; trial < 60; ++trial) {
            auto a = random_elem(f, rng);
            CHECK(forgetful(hyperbolic(Int(trial), f)) == 2 * trial);          // F H = 2
            CHECK(hyperbolic(forgetful(a), f) == gw_mul(hyperbolic_form(f), a));  // H F = gamma_h
        }
    }
}

TEST_CASE("GW(real closed) injects into (rank, signature)") {
    std::mt19937 rng(41);
    auto f = FieldSpec::real_closed();
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_elem(f, rng);
        auto b = random_elem(f, rng);
        bool same_invariants =
            rank_map(a) == rank_map(b) && witt_image(a).value == witt_image(b).value;
        CHECK(same_invariants == (a == b));
    }
}

TEST_CASE("the two-generator relation <u> + <v> = <u+v> + <(u+v)uv>") {
    // Instantiated at u, v in {1, -1} with u + v != 0; <2> and <-2> resolve
    // to <1> or <-1> according to the field's square classes, and for finite
    // fields both options are exercised.
    struct Case {
        FieldSpec field;
        std::vector<bool> two_is_square_options;
    };
    std::vector<Case> cases = {
        {FieldSpec::quadratically_closed(), {true}},
        {FieldSpec::real_closed(), {true}},
        {FieldSpec::finite_odd(true), {true, false}},
        {FieldSpec::finite_odd(false), {true, false}},
    };
    for (const auto& c : cases) {
        for (bool two_square : c.two_is_square_options) {
            auto cls = [&](int unit) {  // square class of <unit * 2> as (m, n)
                bool positive = two_square == (unit == 1);
                return positive ? GWElem(1, 0, c.field) : GWElem(0, 1, c.field);
            };
            // u = v = 1: <1> + <1> = <2> + <2>
            CHECK(gw_add(GWElem::unit(c.field), GWElem::unit(c.field)) ==
                  gw_add(cls(1), cls(1)));
            // u = v = -1: <-1> + <-1> = <-2> + <-2>
            CHECK(gw_add(GWElem(0, 1, c.field), GWElem(0, 1, c.field)) ==
                  gw_add(cls(-1), cls(-1)));
        }
    }
}

TEST_CASE("trivialized Chow-Witt classes") {
    auto c56 = cw_from_chow(56);
    CHECK(c56.chow() == 56);
    CHECK(c56.witt_part() == 0);
    auto p = cw_as_hyperbolic(c56);
    REQUIRE(p.has_value());
    CHECK(p->render() == "28h");

    auto c16 = cw_from_chow(16);
    REQUIRE(cw_as_hyperbolic(c16).has_value());
    CHECK(cw_as_hyperbolic(c16)->render() == "8h");

    auto c27 = cw_from_chow(27);
    CHECK(c27.witt_part() == 1);
    CHECK_FALSE(cw_as_hyperbolic(c27).has_value());

    CHECK_THROWS_AS(TrivializedCWClass(56, 1), domain_error);
    CHECK_THROWS_AS(TrivializedCWClass(27, 0), domain_error);
    CHECK(cw_from_chow(-4).witt_part() == 0);
    REQUIRE(cw_as_hyperbolic(cw_from_chow(-4)).has_value());
    CHECK(cw_as_hyperbolic(cw_from_chow(-4))->render() == "-2h");
}
