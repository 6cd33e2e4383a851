#pragma once

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "quadeuler/chern.hpp"
#include "quadeuler/error.hpp"
#include "quadeuler/euler.hpp"
#include "quadeuler/json_io.hpp"
#include "quadeuler/parse.hpp"
#include "quadeuler/projbundle.hpp"

namespace quadeuler {

/// A fully parsed command line. The front end (tools/) fills this in; run()
/// below does the work, so tests can drive the CLI without a process.
struct Command {
    enum class Kind { Scenario, Euler, Chern, Pic, Gw };

    Kind kind = Kind::Scenario;
    std::string scenario_name;
    std::string space_text;
    std::string bundle_text;  // mutually exclusive with opaque_text
    std::string opaque_text;  // "rank=R,deg=N[,det=...]"
    std::string gw_text;
    std::string field_text = "universal";
    std::string json_path;
    bool quiet = false;
};

namespace cli_detail {

struct OpaqueParams {
    Int rank;
    std::optional<Int> deg;
    std::optional<PicClass> det;
};

inline Int parse_big(const std::string& s, const std::string& what) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw domain_error("--opaque: " + what + " must be an integer, got '" + s + "'");
    }
}

inline OpaqueParams parse_opaque(const std::string& text) {
    OpaqueParams out{0, {}, {}};
    bool have_rank = false;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw domain_error("--opaque expects comma-separated key=value pairs");
        std::string key = item.substr(0, eq);
        std::string value = item.substr(eq + 1);
        if (key == "rank") {
            out.rank = parse_big(value, "rank");
            have_rank = true;
        } else if (key == "deg") {
            out.deg = parse_big(value, "deg");
        } else if (key == "det") {
            out.det = parse_pic(value);
        } else {
            throw domain_error("--opaque: unknown key '" + key + "' (expected rank, deg, det)");
        }
    }
    if (!have_rank) throw domain_error("--opaque: missing rank=");
    return out;
}

inline void print_report(std::ostream& os, const EulerReport& r, int indent = 0) {
    std::string pad(static_cast<size_t>(indent), ' ');
    if (!r.assumption.empty()) os << pad << "- " << r.assumption << ":\n";
    os << pad << "  verdict: " << to_string(r.verdict) << "\n";
    if (r.chow_degree) os << pad << "  chow degree: " << to_decimal(*r.chow_degree) << "\n";
    if (r.trivialized)
        os << pad << "  trivialized class: chow " << to_decimal(r.trivialized->chow())
           << ", witt part " << r.trivialized->witt_part() << "\n";
    if (r.hyperbolic_presentation)
        os << pad << "  hyperbolic presentation: " << r.hyperbolic_presentation->render() << "\n";
    if (r.gw_degree) os << pad << "  quadratic degree: " << r.gw_degree->render() << "\n";
    if (!r.reason.empty()) os << pad << "  reason: " << r.reason << "\n";
}

inline void print_full_report(std::ostream& os, const SpaceDesc& space, const std::string& sheaf,
                              const EulerReport& r) {
    os << "space: " << space.to_string() << "  [dim " << space.dimension() << "]\n";
    os << "sheaf: " << sheaf << "\n";
    os << "field: " << r.field.name() << "\n";
    os << "rank: " << to_decimal(r.rank) << "\n";
    os << "det: " << (r.det ? to_string(*r.det) : "unknown") << "\n";
    os << "omega: " << to_string(r.omega) << "\n";
    os << "hypotheses:\n";
    for (const auto& h : r.hypotheses)
        os << "  [" << (h.holds ? "ok" : "FAIL") << "] " << h.name << "\n";
    print_report(os, r);
    if (!r.branches.empty()) {
        os << "branches:\n";
        for (const auto& b : r.branches) print_report(os, b, 2);
    }
    for (const auto& note : r.notes) os << "note: " << note << "\n";
}

inline void sink_json(const Command& cmd, const json& payload) {
    if (cmd.json_path.empty()) return;
    std::ofstream file(cmd.json_path);
    if (!file) throw domain_error("cannot open JSON sink '" + cmd.json_path + "'");
    file << payload.dump(2) << "\n";
}

inline int run_scenario_cmd(const Command& cmd, std::ostream& out) {
    Scenario s = scenario(cmd.scenario_name);
    EulerReport r = run_scenario(s, parse_field(cmd.field_text));
    if (!cmd.quiet) print_full_report(out, s.space, s.sheaf.to_string(), r);
    json payload;
    payload["scenario"] = s.name;
    payload["space"] = to_json(s.space);
    payload["sheaf"] = s.sheaf.to_string();
    payload["report"] = to_json(r);
    sink_json(cmd, payload);
    return 0;
}

inline int run_euler_cmd(const Command& cmd, std::ostream& out) {
    SpaceDesc space = parse_space(cmd.space_text);
    SheafDesc sheaf = [&] {
        if (!cmd.opaque_text.empty()) {
            auto p = parse_opaque(cmd.opaque_text);
            return SheafDesc::opaque(p.rank, p.deg, p.det);
        }
        return SheafDesc::expr(parse_bundle(cmd.bundle_text));
    }();
    EulerReport r = euler_class(sheaf, space, parse_field(cmd.field_text));
    if (!cmd.quiet) print_full_report(out, space, sheaf.to_string(), r);
    json payload;
    payload["space"] = to_json(space);
    payload["sheaf"] = sheaf.to_string();
    payload["report"] = to_json(r);
    sink_json(cmd, payload);
    return 0;
}

inline int run_chern_cmd(const Command& cmd, std::ostream& out) {
    SpaceDesc space = parse_space(cmd.space_text);
    BundleExpr e = parse_bundle(cmd.bundle_text);
    GradedClass total = chern_total(e, space);
    Int rk = rank(e, space);
    PicClass det = first_chern(e, space);

    if (!cmd.quiet) {
        out << "space: " << space.to_string() << "  [dim " << space.dimension() << "]\n";
        out << "bundle: " << e.to_string() << "\n";
        out << "rank: " << to_decimal(rk) << "\n";
        out << "det: " << to_string(det) << "\n";
        for (long long d = 0; d <= space.dimension(); ++d) {
            auto piece = total.graded_piece(d);
            if (!piece.is_zero()) out << "c_" << d << ": " << piece.to_string() << "\n";
        }
        if (rk == space.dimension()) {
            auto top = total.graded_piece(space.dimension());
            out << "top degree: " << to_decimal(degree_Y(top)) << "\n";
        }
    }

    json payload;
    payload["space"] = to_json(space);
    payload["bundle"] = e.to_string();
    payload["rank"] = to_decimal(rk);
    payload["det"] = to_json(det);
    payload["chern_total"] = to_json(total);
    if (rk == space.dimension())
        payload["top_degree"] = to_decimal(degree_Y(total.graded_piece(space.dimension())));
    sink_json(cmd, payload);
    return 0;
}

inline int run_pic_cmd(const Command& cmd, std::ostream& out) {
    SpaceDesc space = parse_space(cmd.space_text);
    BundleExpr e = parse_bundle(cmd.bundle_text);
    PicClass det = first_chern(e, space);
    PicClass omega = canonical(space);
    Int rk = rank(e, space);
    bool equivalent = quad_equiv(det, omega);
    bool orientable = rel_orientable(det, rk, space);

    if (!cmd.quiet) {
        out << "space: " << space.to_string() << "  [dim " << space.dimension() << "]\n";
        out << "bundle: " << e.to_string() << "\n";
        out << "rank: " << to_decimal(rk) << "\n";
        out << "det: " << to_string(det) << "\n";
        out << "omega: " << to_string(omega) << "\n";
        out << "det ~q omega: " << (equivalent ? "yes" : "no") << "\n";
        out << "relatively orientable: " << (orientable ? "yes" : "no") << "\n";
    }

    json payload;
    payload["space"] = to_json(space);
    payload["bundle"] = e.to_string();
    payload["rank"] = to_decimal(rk);
    payload["det"] = to_json(det);
    payload["omega"] = to_json(omega);
    payload["quad_equiv"] = equivalent;
    payload["rel_orientable"] = orientable;
    sink_json(cmd, payload);
    return 0;
}

inline int run_gw_cmd(const Command& cmd, std::ostream& out) {
    FieldSpec field = parse_field(cmd.field_text);
    GWElem e = parse_gw(cmd.gw_text, field);
    WittElem w = witt_image(e);

    if (!cmd.quiet) {
        out << e.render() << "\n";
        out << "rank: " << to_decimal(rank_map(e)) << "\n";
        out << "witt image: " << to_decimal(w.value)
            << (w.modulus != 0 ? " (mod " + to_decimal(w.modulus) + ")" : "") << "\n";
    }

    json payload;
    payload["field"] = field.name();
    payload["gw"] = to_json(e);
    payload["rank"] = to_decimal(rank_map(e));
    payload["witt"] = to_json(w);
    sink_json(cmd, payload);
    return 0;
}

}  // namespace cli_detail

/// Execute a command: report to `out`, errors to `err`.
/// Exit codes: 0 success, 1 domain error, 2 syntax error.
inline int run(const Command& cmd, std::ostream& out, std::ostream& err) {
    try {
        switch (cmd.kind) {
            case Command::Kind::Scenario: return cli_detail::run_scenario_cmd(cmd, out);
            case Command::Kind::Euler: return cli_detail::run_euler_cmd(cmd, out);
            case Command::Kind::Chern: return cli_detail::run_chern_cmd(cmd, out);
            case Command::Kind::Pic: return cli_detail::run_pic_cmd(cmd, out);
            case Command::Kind::Gw: return cli_detail::run_gw_cmd(cmd, out);
        }
        err << "error: unknown command\n";
        return 1;
    } catch (const parse_error& e) {
        err << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace quadeuler
