#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "quadeuler/cli.hpp"
#include "quadeuler/parse.hpp"

using namespace quadeuler;

namespace {

/// Random AST in canonical (grammar-expressible) form: direct sums nest to
/// the left, tw's second argument is a term.
BundleExpr random_canonical(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 4 : 9);
    std::uniform_int_distribution<int> small(-9, 9);
    switch (pick(rng)) {
        case 0: return BundleExpr::taut_quotient();
        case 1: return BundleExpr::taut_sub();
        case 2: return BundleExpr::line_on_grass(small(rng));
        case 3: return BundleExpr::line_on_fiber(small(rng));
        case 4: return BundleExpr::trivial(std::uniform_int_distribution<int>(0, 5)(rng));
        case 5: return BundleExpr::dual(random_canonical(rng, depth - 1));
        case 6:
            return BundleExpr::sym(std::uniform_int_distribution<int>(1, 4)(rng),
                                   random_canonical(rng, depth - 1));
        case 7: return random_canonical(rng, depth - 1) + random_canonical(rng, depth - 1);
        case 8: {
            BundleExpr term = std::uniform_int_distribution<int>(0, 1)(rng)
                                  ? BundleExpr::line_on_grass(small(rng))
                                  : BundleExpr::line_on_fiber(small(rng));
            return BundleExpr::tensor_line(random_canonical(rng, depth - 1), std::move(term));
        }
        default: return BundleExpr::pullback(random_canonical(rng, depth - 1));
    }
}

/// Left-associate every direct sum; the canonical shape the grammar yields.
BundleExpr canonicalize(const BundleExpr& e) {
    using K = BundleExpr::Kind;
    switch (e.kind()) {
        case K::DirectSum: {
            std::vector<BundleExpr> summands;
            std::function<void(const BundleExpr&)> flatten = [&](const BundleExpr& s) {
                if (s.kind() == K::DirectSum) {
                    flatten(s.child1());
                    flatten(s.child2());
                } else {
                    summands.push_back(canonicalize(s));
                }
            };
            flatten(e);
            BundleExpr out = summands.front();
            for (size_t i = 1; i < summands.size(); ++i) out = std::move(out) + summands[i];
            return out;
        }
        case K::Dual: return BundleExpr::dual(canonicalize(e.child1()));
        case K::Sym: return BundleExpr::sym(e.arg(), canonicalize(e.child1()));
        case K::TensorLine:
            return BundleExpr::tensor_line(canonicalize(e.child1()), canonicalize(e.child2()));
        case K::Pullback: return BundleExpr::pullback(canonicalize(e.child1()));
        default: return e;
    }
}

int run_capture(const Command& cmd, std::string* out_text = nullptr,
                std::string* err_text = nullptr) {
    std::ostringstream out, err;
    int code = run(cmd, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

}  // namespace

TEST_CASE("bundle grammar") {
    CHECK(parse_bundle("sym(2,Q) + sym(2,Q)") ==
          BundleExpr::sym(2, BundleExpr::taut_quotient()) +
              BundleExpr::sym(2, BundleExpr::taut_quotient()));
    CHECK(parse_bundle("Q") == BundleExpr::taut_quotient());
    CHECK(parse_bundle("triv(1) + sym(2,dual(Q))") ==
          BundleExpr::trivial(1) + BundleExpr::sym(2, BundleExpr::dual(BundleExpr::taut_quotient())));
    CHECK(parse_bundle(" tw( Q , O(-2) ) ") ==
          BundleExpr::tensor_line(BundleExpr::taut_quotient(), BundleExpr::line_on_grass(-2)));
    CHECK(parse_bundle("pull(S) + OY(3)") ==
          BundleExpr::pullback(BundleExpr::taut_sub()) + BundleExpr::line_on_fiber(3));

    SECTION("sums associate to the left") {
        auto e = parse_bundle("Q + S + triv(1)");
        CHECK(e == (BundleExpr::taut_quotient() + BundleExpr::taut_sub()) + BundleExpr::trivial(1));
    }
}

TEST_CASE("bundle grammar errors carry positions and expectations") {
    try {
        parse_bundle("sym(2,Q) + floop");
        FAIL("should have thrown");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 11);
        CHECK(std::string(e.what()).find("'Q'") != std::string::npos);
    }
    try {
        parse_bundle("sym(0,Q)");
        FAIL("should have thrown");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 4);
        CHECK(e.expected().find("positive") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_bundle("dual(Q"), parse_error);
    CHECK_THROWS_AS(parse_bundle("Q + "), parse_error);
    CHECK_THROWS_AS(parse_bundle("Q S"), parse_error);
    CHECK_THROWS_AS(parse_bundle(""), parse_error);
    CHECK_THROWS_AS(parse_bundle("Qx"), parse_error);
}

TEST_CASE("parse of render is the identity on canonical forms") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 200; ++trial) {
        auto e = canonicalize(random_canonical(rng, 3));
        CAPTURE(e.to_string());
        CHECK(parse_bundle(e.to_string()) == e);
    }
}

TEST_CASE("space grammar") {
    CHECK(parse_space("Gr(2,5)") == SpaceDesc::grassmann(2, 5));
    auto y = parse_space("P(triv(1) + sym(2,dual(Q))) over Gr(2,3)");
    CHECK(y.is_proj_bundle());
    CHECK(y.fiber_rank() == 4);
    CHECK(y.box() == BoxShape::for_grassmannian(2, 3));
    CHECK(parse_space(y.to_string()) == y);

    CHECK_THROWS_AS(parse_space("Gr(2,1)"), domain_error);
    CHECK_THROWS_AS(parse_space("P(Q) on Gr(2,3)"), parse_error);
    CHECK_THROWS_AS(parse_space("P(OY(1)) over Gr(2,3)"), domain_error);
    CHECK_THROWS_AS(parse_space("Flag(1,2,3)"), parse_error);
}

TEST_CASE("gw grammar") {
    auto u = FieldSpec::universal();
    CHECK(parse_gw("h*h").render() == "2h");
    CHECK(parse_gw("h*h") == hyperbolic(2, u));
    CHECK(parse_gw("3 + 12h") == GWElem(15, 12, u));
    CHECK(parse_gw("<1> + <-1>") == hyperbolic_form(u));
    CHECK(parse_gw("2(<1> - <-1>)") == GWElem(2, -2, u));
    CHECK(parse_gw("-h + h").is_zero());
    CHECK(parse_gw("28h").render() == "28h");
    CHECK(parse_gw("h*h", FieldSpec::quadratically_closed()) ==
          GWElem(4, 0, FieldSpec::quadratically_closed()));
    CHECK_THROWS_AS(parse_gw("<2>"), parse_error);
    CHECK_THROWS_AS(parse_gw("h +"), parse_error);
    CHECK_THROWS_AS(parse_gw("eta"), parse_error);
}

TEST_CASE("pic and field parsing") {
    CHECK(parse_pic("O(6)") == PicClass(Int(6)));
    CHECK(parse_pic("OY(-4)*piO(-6)") == PicClass(Int(-4), Int(-6)));
    CHECK_THROWS_AS(parse_pic("O(6) extra"), parse_error);
    CHECK(parse_field("universal") == FieldSpec::universal());
    CHECK(parse_field("fq3") == FieldSpec::finite_odd(false));
    CHECK_THROWS_AS(parse_field("padic"), domain_error);
}

TEST_CASE("cli scenario commands") {
    SECTION("dp4 report contains 8h and chow degree 16") {
        Command cmd;
        cmd.kind = Command::Kind::Scenario;
        cmd.scenario_name = "dp4";
        std::string out;
        CHECK(run_capture(cmd, &out) == 0);
        CHECK(out.find("8h") != std::string::npos);
        CHECK(out.find("chow degree: 16") != std::string::npos);
        CHECK(out.find("NonOrientableTrivialized") != std::string::npos);
    }
    SECTION("dp2 report has two branches rendering 28h") {
        Command cmd;
        cmd.kind = Command::Kind::Scenario;
        cmd.scenario_name = "dp2";
        std::string out;
        CHECK(run_capture(cmd, &out) == 0);
        size_t first = out.find("28h");
        REQUIRE(first != std::string::npos);
        CHECK(out.find("28h", first + 1) != std::string::npos);
        CHECK(out.find("branches:") != std::string::npos);
    }
    SECTION("cubic reports Undetermined with chow 27 and no GW value") {
        Command cmd;
        cmd.kind = Command::Kind::Scenario;
        cmd.scenario_name = "cubic";
        std::string out;
        CHECK(run_capture(cmd, &out) == 0);
        CHECK(out.find("Undetermined") != std::string::npos);
        CHECK(out.find("chow degree: 27") != std::string::npos);
        CHECK(out.find("quadratic degree") == std::string::npos);
        CHECK(out.find("h\n") == std::string::npos);
    }
    SECTION("unknown scenario is a domain error") {
        Command cmd;
        cmd.kind = Command::Kind::Scenario;
        cmd.scenario_name = "dp9";
        std::string err;
        CHECK(run_capture(cmd, nullptr, &err) == 1);
        CHECK(err.find("unknown scenario") != std::string::npos);
    }
}

TEST_CASE("cli euler, chern, pic, gw commands") {
    SECTION("euler with a bundle expression") {
        Command cmd;
        cmd.kind = Command::Kind::Euler;
        cmd.space_text = "Gr(2,5)";
        cmd.bundle_text = "sym(2,Q) + sym(2,Q)";
        std::string out;
        CHECK(run_capture(cmd, &out) == 0);
        CHECK(out.find("8h") != std::string::npos);
    }
    SECTION("euler with opaque parameters") {
        Command cmd;
        cmd.kind = Command::Kind::Euler;
        cmd.space_text = "P(triv(1) + sym(2,dual(Q))) over Gr(2,3)";
        cmd.opaque_text = "rank=5,deg=56";
        std::string out;
        CHECK(run_capture(cmd, &out) == 0);
        CHECK(out.find("28h") != std::string::npos);
        CHECK(out.find("det: unknown") != std::string::npos);
    }
    SECTION("syntax errors exit 2, domain errors exit 1") {
        Command cmd;
        cmd.kind = Command::Kind::Euler;
        cmd.space_text = "Gr(2,5)";
        cmd.bundle_text = "sym(2,";
        std::string err;
        CHECK(run_capture(cmd, nullptr, &err) == 2);
        CHECK(err.find("syntax error") != std::string::npos);

        cmd.bundle_text = "Q";  // rank 2 != dim 6
        CHECK(run_capture(cmd, nullptr, &err) == 1);
    }
    SECTION("chern prints the top degree") {
        Command cmd;
        cmd.kind = Command::Kind::Chern;
        cmd.space_text = "Gr(2,4)";
        cmd.bundle_text = "sym(3,Q)";
        std::string out;
        CHECK(run_capture(cmd, &out) == 0);
        CHECK(out.find("top degree: 27") != std::string::npos);
        CHECK(out.find("rank: 4") != std::string::npos);
    }
    SECTION("pic reports orientability") {
        Command cmd;
        cmd.kind = Command::Kind::Pic;
        cmd.space_text = "Gr(2,5)";
        cmd.bundle_text = "sym(2,Q) + sym(2,Q)";
        std::string out;
        CHECK(run_capture(cmd, &out) == 0);
        CHECK(out.find("det: O(6)") != std::string::npos);
        CHECK(out.find("omega: O(-5)") != std::string::npos);
        CHECK(out.find("relatively orientable: no") != std::string::npos);
    }
    SECTION("gw evaluates expressions") {
        Command cmd;
        cmd.kind = Command::Kind::Gw;
        cmd.gw_text = "h*h";
        std::string out;
        CHECK(run_capture(cmd, &out) == 0);
        CHECK(out.rfind("2h\n", 0) == 0);
    }
}

TEST_CASE("json output is schema-shaped and byte-stable") {
    auto report_json = [](const std::string& name) {
        Command cmd;
        cmd.kind = Command::Kind::Scenario;
        cmd.scenario_name = name;
        cmd.quiet = true;
        cmd.json_path = "test_report_tmp.json";
        REQUIRE(run_capture(cmd) == 0);
        std::ifstream f(cmd.json_path);
        std::stringstream ss;
        ss << f.rdbuf();
        std::remove(cmd.json_path.c_str());
        return ss.str();
    };

    SECTION("byte stability across runs") {
        for (const auto& name : {"cubic", "dp4", "dp2"})
            CHECK(report_json(name) == report_json(name));
    }

    SECTION("required keys are present with the right shapes") {
        auto parsed = json::parse(report_json("dp2"));
        REQUIRE(parsed.contains("report"));
        const auto& r = parsed["report"];
        for (const auto& key :
             {"verdict", "chow_degree", "gw", "branches", "hypotheses", "audit", "notes"})
            REQUIRE(r.contains(key));
        CHECK(r["verdict"].is_string());
        CHECK(r["chow_degree"] == "56");
        CHECK(r["branches"].is_array());
        CHECK(r["branches"].size() == 2);
        CHECK(r["branches"][0]["gw"]["rendered"] == "28h");
        CHECK(r["branches"][1]["gw"]["rendered"] == "28h");
        for (const auto& h : r["hypotheses"]) {
            CHECK(h.contains("name"));
            CHECK(h["holds"].is_boolean());
        }
        const auto& audit = r["audit"];
        for (const auto& key : {"rank", "det", "omega"}) REQUIRE(audit.contains(key));
        CHECK(audit["rank"] == "5");
        CHECK(audit["det"] == "unknown");
    }

    SECTION("scenario serialization is deterministic for the sheaf and space") {
        auto a = json::parse(report_json("dp4"));
        CHECK(a["sheaf"] == "sym(2,Q) + sym(2,Q)");
        CHECK(a["space"]["rendered"] == "Gr(2,5)");
    }
}
