// Command-line front end. Argument handling is CLI11; the expression
// grammars and all computation live in the library (quadeuler/cli.hpp), so
// everything here is plumbing.

#include <CLI11.hpp>

#include <iostream>

#include "quadeuler/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "quadeuler: exact Euler classes on Grassmannians and projective bundles,\n"
        "with Grothendieck-Witt valued verdicts where the case analysis allows one.\n"
        "Convention: Gr(k,n) is the Grassmannian of rank-k QUOTIENTS of n-space."};
    app.require_subcommand(1);

    quadeuler::Command cmd;
    auto add_common = [&cmd](CLI::App* sub) {
        sub->add_option("--json", cmd.json_path, "write a JSON report to this path");
        sub->add_flag("--quiet", cmd.quiet, "suppress the text report");
        sub->add_option("--field", cmd.field_text,
                        "base field: universal (default), qclosed, rclosed, fq1, fq3");
    };

    auto* sc = app.add_subcommand("scenario", "run a built-in line-count geometry");
    sc->add_option("name", cmd.scenario_name, "cubic, dp4 or dp2")->required();
    add_common(sc);

    auto* eu = app.add_subcommand("euler", "enriched Euler class verdict for a sheaf");
    eu->add_option("--space", cmd.space_text, "Gr(k,n) or 'P(F) over Gr(k,n)'")->required();
    auto* eu_bundle = eu->add_option("--bundle", cmd.bundle_text, "bundle expression");
    auto* eu_opaque =
        eu->add_option("--opaque", cmd.opaque_text, "rank=R,deg=N[,det=O(a)|OY(a)*piO(b)]");
    eu_bundle->excludes(eu_opaque);
    eu_opaque->excludes(eu_bundle);
    add_common(eu);

    auto* ch = app.add_subcommand("chern", "total Chern class of a bundle expression");
    ch->add_option("--space", cmd.space_text)->required();
    ch->add_option("--bundle", cmd.bundle_text)->required();
    add_common(ch);

    auto* pc = app.add_subcommand("pic", "determinant, canonical class and orientability");
    pc->add_option("--space", cmd.space_text)->required();
    pc->add_option("--bundle", cmd.bundle_text)->required();
    add_common(pc);

    auto* gw = app.add_subcommand("gw", "evaluate a Grothendieck-Witt expression");
    gw->add_option("expr", cmd.gw_text, "e.g. \"h*h\" or \"3 + 12h\"")->required();
    add_common(gw);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (sc->parsed()) cmd.kind = quadeuler::Command::Kind::Scenario;
    if (eu->parsed()) {
        cmd.kind = quadeuler::Command::Kind::Euler;
        if (cmd.bundle_text.empty() && cmd.opaque_text.empty()) {
            std::cerr << "error: euler needs either --bundle or --opaque\n";
            return 2;
        }
    }
    if (ch->parsed()) cmd.kind = quadeuler::Command::Kind::Chern;
    if (pc->parsed()) cmd.kind = quadeuler::Command::Kind::Pic;
    if (gw->parsed()) cmd.kind = quadeuler::Command::Kind::Gw;

    return quadeuler::run(cmd, std::cout, std::cerr);
}
