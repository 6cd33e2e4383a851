#pragma once

#include <json.hpp>

#include "quadeuler/euler.hpp"
#include "quadeuler/graded.hpp"
#include "quadeuler/gw.hpp"
#include "quadeuler/pic.hpp"
#include "quadeuler/schubert.hpp"
#include "quadeuler/space.hpp"

namespace quadeuler {

// JSON views of the core values. Integers are rendered as decimal strings to
// stay word-size independent; nlohmann objects keep keys sorted, so the
// output is byte-stable for identical inputs.

using json = nlohmann::json;

inline json to_json(const SchubertClass& c) {
    json out = json::array();
    for (const auto& [lambda, coeff] : c.terms()) {
        json term;
        term["partition"] = lambda.parts();
        term["coeff"] = to_decimal(coeff);
        out.push_back(std::move(term));
    }
    return out;
}

inline json to_json(const GradedClass& c) {
    json out = json::array();
    for (const auto& [key, coeff] : c.terms()) {
        json term;
        term["partition"] = key.first.parts();
        term["xi"] = key.second;
        term["coeff"] = to_decimal(coeff);
        out.push_back(std::move(term));
    }
    return out;
}

inline json to_json(const PicClass& p) {
    json coords = json::array();
    for (const auto& c : p.coords) coords.push_back(to_decimal(c));
    return json{{"coords", std::move(coords)}, {"rendered", to_string(p)}};
}

inline json to_json(const GWElem& g) {
    return json{{"ones", to_decimal(g.ones())},
                {"minus_ones", to_decimal(g.minus_ones())},
                {"rendered", g.render()}};
}

inline json to_json(const WittElem& w) {
    return json{{"value", to_decimal(w.value)},
                {"modulus", to_decimal(w.modulus)},
                {"field", w.field.name()}};
}

inline json to_json(const SpaceDesc& s) {
    json out;
    out["rendered"] = s.to_string();
    out["kind"] = s.is_proj_bundle() ? "proj_bundle" : "grassmannian";
    out["k"] = s.box().k;
    out["n"] = s.base_n();
    out["dimension"] = s.dimension();
    if (s.is_proj_bundle()) {
        out["fiber"] = s.fiber_expr().to_string();
        out["fiber_rank"] = s.fiber_rank();
    }
    return out;
}

inline json to_json(const EulerReport& r) {
    json out;
    out["verdict"] = to_string(r.verdict);
    out["chow_degree"] = r.chow_degree ? json(to_decimal(*r.chow_degree)) : json(nullptr);

    const GWElem* gw = r.gw_degree   ? &*r.gw_degree
                       : r.hyperbolic_presentation ? &*r.hyperbolic_presentation
                                                   : nullptr;
    out["gw"] = gw ? to_json(*gw) : json(nullptr);

    out["trivialized"] =
        r.trivialized
            ? json{{"chow", to_decimal(r.trivialized->chow())}, {"witt_part", r.trivialized->witt_part()}}
            : json(nullptr);
    out["reason"] = r.reason;
    if (!r.assumption.empty()) out["assumption"] = r.assumption;

    json branches = json::array();
    for (const auto& b : r.branches) branches.push_back(to_json(b));
    out["branches"] = std::move(branches);

    json hypotheses = json::array();
    for (const auto& h : r.hypotheses)
        hypotheses.push_back(json{{"name", h.name}, {"holds", h.holds}});
    out["hypotheses"] = std::move(hypotheses);

    out["audit"] = json{{"rank", to_decimal(r.rank)},
                        {"det", r.det ? json(to_string(*r.det)) : json("unknown")},
                        {"omega", to_string(r.omega)}};
    out["field"] = r.field.name();
    out["notes"] = r.notes;
    return out;
}

}  // namespace quadeuler
