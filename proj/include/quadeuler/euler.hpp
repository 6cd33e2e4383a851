#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadeuler/bundle.hpp"
#include "quadeuler/chern.hpp"
#include "quadeuler/error.hpp"
#include "quadeuler/graded.hpp"
#include "quadeuler/gw.hpp"
#include "quadeuler/int_types.hpp"
#include "quadeuler/pic.hpp"
#include "quadeuler/projbundle.hpp"
#include "quadeuler/space.hpp"

namespace quadeuler {

// ============================================================================
// Sheaf descriptions
// ============================================================================

/// Either a bundle expression with computable invariants, or an opaque sheaf
/// known only through its rank and, possibly, its top Chern degree and
/// determinant.
class SheafDesc {
public:
    [[nodiscard]] static SheafDesc expr(BundleExpr e) {
        SheafDesc s;
        s.expr_ = std::move(e);
        return s;
    }

    [[nodiscard]] static SheafDesc opaque(Int rank, std::optional<Int> chow_degree = {},
                                          std::optional<PicClass> det = {}) {
        if (rank < 0) throw domain_error("opaque sheaf: rank must be non-negative");
        SheafDesc s;
        s.rank_ = std::move(rank);
        s.chow_ = std::move(chow_degree);
        s.det_ = std::move(det);
        return s;
    }

    [[nodiscard]] bool is_expr() const { return expr_.has_value(); }
    [[nodiscard]] const BundleExpr& expression() const {
        if (!expr_) throw domain_error("sheaf is opaque");
        return *expr_;
    }
    [[nodiscard]] const Int& opaque_rank() const { return rank_; }
    [[nodiscard]] const std::optional<Int>& opaque_chow_degree() const { return chow_; }
    [[nodiscard]] const std::optional<PicClass>& opaque_det() const { return det_; }

    [[nodiscard]] std::string to_string() const {
        if (expr_) return expr_->to_string();
        std::string s = "opaque(rank=" + to_decimal(rank_);
        if (chow_) s += ", deg=" + to_decimal(*chow_);
        s += det_ ? ", det=" + quadeuler::to_string(*det_) : ", det unknown";
        return s + ")";
    }

private:
    SheafDesc() = default;

    std::optional<BundleExpr> expr_;
    Int rank_ = 0;
    std::optional<Int> chow_;
    std::optional<PicClass> det_;
};

// ============================================================================
// Reports
// ============================================================================

enum class Verdict { NonOrientableTrivialized, OrientableOddRank, Undetermined };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::NonOrientableTrivialized: return "NonOrientableTrivialized";
        case Verdict::OrientableOddRank: return "OrientableOddRank";
        case Verdict::Undetermined: return "Undetermined";
    }
    return "?";
}

struct HypothesisCheck {
    std::string name;
    bool holds = false;
};

/// Verdict of the decision engine, together with the audit trail needed to
/// recheck it. When the determinant is unknown, `branches` carries one
/// sub-report per orientability possibility and the top-level verdict is
/// Undetermined.
struct EulerReport {
    Verdict verdict = Verdict::Undetermined;
    std::optional<Int> chow_degree;
    std::optional<TrivializedCWClass> trivialized;   // NonOrientableTrivialized only
    std::optional<GWElem> hyperbolic_presentation;   // (N/2)h when N is even
    std::optional<GWElem> gw_degree;                 // OrientableOddRank only
    std::string reason;                              // Undetermined only
    std::string assumption;                          // set on branches

    std::vector<EulerReport> branches;
    std::vector<HypothesisCheck> hypotheses;

    Int rank = 0;
    std::optional<PicClass> det;  // absent when unknown
    PicClass omega;
    FieldSpec field;
    std::vector<std::string> notes;

    [[nodiscard]] bool hypotheses_hold() const {
        for (const auto& h : hypotheses)
            if (!h.holds) return false;
        return true;
    }
};

// ============================================================================
// Decision engine
// ============================================================================

namespace detail {

/// One orientability branch, rules (b)-(d) of the case analysis.
inline EulerReport decide_branch(bool orientable, bool structural_ok,
                                 const std::optional<Int>& chow, const Int& rank_e,
                                 FieldSpec field) {
    EulerReport r;
    r.field = field;
    r.chow_degree = chow;
    r.rank = rank_e;

    if (!structural_ok) {
        r.verdict = Verdict::Undetermined;
        r.reason = "structural hypotheses on the ambient space are not satisfied";
        return r;
    }

    if (!orientable) {
        if (!chow)
            throw domain_error(
                "insufficient data: the non-orientable case needs the top Chern degree");
        r.verdict = Verdict::NonOrientableTrivialized;
        r.trivialized = cw_from_chow(*chow);
        r.hyperbolic_presentation = cw_as_hyperbolic(*r.trivialized, field);
        return r;
    }

    if (rank_e % 2 == 1) {
        if (!chow)
            throw domain_error(
                "insufficient data: the orientable odd-rank case needs the top Chern degree");
        if (*chow % 2 != 0) {
            r.verdict = Verdict::Undetermined;
            r.reason =
                "odd Chow degree is inconsistent with the vanishing Witt part forced by odd rank";
            return r;
        }
        r.verdict = Verdict::OrientableOddRank;
        r.gw_degree = hyperbolic(*chow / 2, field);
        return r;
    }

    r.verdict = Verdict::Undetermined;
    r.reason = "orientable with even rank: the quadratic part is not determined by these methods";
    return r;
}

}  // namespace detail

/// Compute the enriched Euler class verdict for a sheaf on a supported
/// space. The Chow degree of an expression sheaf is computed through the
/// single path degree_Y(top piece of chern_total); the engine never invents
/// a quadratic value the case analysis does not force.
inline EulerReport euler_class(const SheafDesc& sheaf, const SpaceDesc& space,
                               FieldSpec field = FieldSpec::universal()) {
    const long long dim = space.dimension();

    Int rank_e = sheaf.is_expr() ? rank(sheaf.expression(), space) : sheaf.opaque_rank();
    if (rank_e != dim)
        throw domain_error("euler_class: rank " + to_decimal(rank_e) +
                           " does not match the ambient dimension " + std::to_string(dim));

    std::optional<Int> chow;
    std::optional<PicClass> det;
    if (sheaf.is_expr()) {
        GradedClass top = chern_total(sheaf.expression(), space).graded_piece(dim);
        chow = degree_Y(top.is_zero() ? GradedClass::zero(space) : top);
        det = first_chern(sheaf.expression(), space);
    } else {
        chow = sheaf.opaque_chow_degree();
        det = sheaf.opaque_det();
    }

    // Structural hypotheses: a bare Grassmannian is the degenerate bundle
    // P(O) with relative dimension 0, so its parity condition always holds.
    const int r = space.relative_dimension();
    const int n = space.base_n();
    const bool parity_ok = r % 2 == 0 || n % 2 == 1;

    EulerReport report;
    report.field = field;
    report.rank = rank_e;
    report.chow_degree = chow;
    report.det = det;
    report.omega = canonical(space);
    report.hypotheses.push_back({"rank equals ambient dimension", true});
    report.hypotheses.push_back({"space is a Grassmannian or a projective bundle over one", true});
    report.hypotheses.push_back(
        {"relative dimension r = " + std::to_string(r) + ", base n = " + std::to_string(n) +
             ": r even, or r and n both odd",
         parity_ok});
    if (!space.is_proj_bundle())
        report.notes.push_back("bare Grassmannian treated as P(O) with relative dimension 0");

    const bool structural_ok = report.hypotheses_hold();

    if (det) {
        bool orientable = rel_orientable(*det, rank_e, space);
        EulerReport branch = detail::decide_branch(orientable, structural_ok, chow, rank_e, field);
        report.verdict = branch.verdict;
        report.trivialized = branch.trivialized;
        report.hyperbolic_presentation = branch.hyperbolic_presentation;
        report.gw_degree = branch.gw_degree;
        report.reason = branch.reason;
        return report;
    }

    report.verdict = Verdict::Undetermined;
    report.reason = "determinant unknown: every orientability possibility is enumerated in branches";
    for (bool orientable : {false, true}) {
        EulerReport branch = detail::decide_branch(orientable, structural_ok, chow, rank_e, field);
        branch.assumption = orientable ? "assuming det E is quadratically equivalent to omega"
                                       : "assuming det E is not quadratically equivalent to omega";
        branch.omega = report.omega;
        report.branches.push_back(std::move(branch));
    }
    return report;
}

// ============================================================================
// Scenarios
// ============================================================================

/// Dimension of the space of degree-(d m) forms on P^(n-1); the rank of the
/// direct image sheaf cutting out lines in the fibered setting.
inline Int hilbert_sheaf_rank(int n, int d, int m) {
    if (n < 2) throw domain_error("hilbert_sheaf_rank: need n >= 2");
    if (d < 1) throw domain_error("hilbert_sheaf_rank: need d >= 1");
    if (m < 0) throw domain_error("hilbert_sheaf_rank: need m >= 0");
    return binomial(n - 1 + static_cast<long long>(d) * m, n - 1);
}

struct ExpectedBranch {
    Verdict verdict = Verdict::Undetermined;
    std::string gw_rendered;
};

struct ExpectedFragment {
    Verdict verdict = Verdict::Undetermined;
    std::optional<Int> chow_degree;
    std::string gw_rendered;  // of the presentation or degree, empty if none
    std::vector<ExpectedBranch> branches;
};

struct Scenario {
    std::string name;
    SpaceDesc space;
    SheafDesc sheaf;
    std::vector<std::string> notes;
    ExpectedFragment expected;
};

/// The three geometries: lines on the cubic surface, on the degree-4 del
/// Pezzo, and on the degree-2 del Pezzo.
inline Scenario scenario(const std::string& name) {
    const BundleExpr Q = BundleExpr::taut_quotient();
    if (name == "cubic") {
        // Lines on a cubic surface: zero locus of a section of Sym^3(Q) on
        // the Grassmannian of lines in P^3. Classical count 27; the case
        // analysis leaves the quadratic refinement undetermined.
        Scenario s{"cubic", SpaceDesc::grassmann(2, 4),
                   SheafDesc::expr(BundleExpr::sym(3, Q)),
                   {},
                   {Verdict::Undetermined, Int(27), "", {}}};
        return s;
    }
    if (name == "dp4") {
        // Lines on a degree-4 del Pezzo: zero locus of a section of
        // Sym^2(Q) + Sym^2(Q) on Gr(2,5). Not relatively orientable; the
        // trivialized class is 8h over Chow degree 16.
        Scenario s{"dp4", SpaceDesc::grassmann(2, 5),
                   SheafDesc::expr(BundleExpr::sym(2, Q) + BundleExpr::sym(2, Q)),
                   {"assumes the base field has at least 6 elements"},
                   {Verdict::NonOrientableTrivialized, Int(16), "8h", {}}};
        return s;
    }
    if (name == "dp2") {
        // Lines on a degree-2 del Pezzo: the Hilbert scheme lives in
        // P(O + Sym^2(dual Q)) over Gr(2,3); the rank-5 direct image sheaf
        // is opaque (rank and degree known, determinant not), so both
        // orientability branches are reported. Both yield 28h.
        BundleExpr fiber = BundleExpr::trivial(1) + BundleExpr::sym(2, BundleExpr::dual(Q));
        SpaceDesc y = make_projective_bundle(BoxShape::for_grassmannian(2, 3), fiber);
        Scenario s{"dp2", y, SheafDesc::opaque(5, Int(56)),
                   {},
                   {Verdict::Undetermined,
                    Int(56),
                    "",
                    {{Verdict::NonOrientableTrivialized, "28h"},
                     {Verdict::OrientableOddRank, "28h"}}}};
        return s;
    }
    throw domain_error("unknown scenario '" + name + "' (expected cubic, dp4 or dp2)");
}

/// Run a scenario through the decision engine, attaching its notes.
inline EulerReport run_scenario(const Scenario& s, FieldSpec field = FieldSpec::universal()) {
    EulerReport r = euler_class(s.sheaf, s.space, field);
    for (const auto& note : s.notes) r.notes.push_back(note);
    return r;
}

}  // namespace quadeuler
