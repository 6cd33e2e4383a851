#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadeuler/bundle.hpp"
#include "quadeuler/error.hpp"
#include "quadeuler/partition.hpp"
#include "quadeuler/schubert.hpp"

namespace quadeuler {

/// Ambient space: either the Grassmannian Gr(k, n) of rank-k quotients, or a
/// projective bundle P(F) over one. A projective bundle carries the Chern
/// classes of its fiber sheaf, computed once at construction (see
/// make_projective_bundle in chern.hpp); they define the relation that
/// normalizes powers of the relative hyperplane class.
///
/// Projective bundles over projective bundles are not representable.
class SpaceDesc {
public:
    enum class Kind { Grassmann, ProjBundle };

    [[nodiscard]] static SpaceDesc grassmann(BoxShape box) {
        return SpaceDesc(Kind::Grassmann, box);
    }
    [[nodiscard]] static SpaceDesc grassmann(int k, int n) {
        return grassmann(BoxShape::for_grassmannian(k, n));
    }

    /// Used by make_projective_bundle; fiber_chern holds c_0 .. c_m of F on
    /// the base, c_0 = 1.
    [[nodiscard]] static SpaceDesc proj_bundle(BoxShape base, BundleExpr fiber_expr,
                                               int fiber_rank,
                                               std::vector<SchubertClass> fiber_chern) {
        if (fiber_rank < 1) throw domain_error("P(F): fiber rank must be at least 1");
        if (!fiber_expr.base_only())
            throw domain_error("P(F): fiber sheaf must live on the base Grassmannian");
        SpaceDesc s(Kind::ProjBundle, base);
        s.fiber_expr_ = std::move(fiber_expr);
        s.fiber_rank_ = fiber_rank;
        s.fiber_chern_ = std::move(fiber_chern);
        return s;
    }

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] bool is_proj_bundle() const { return kind_ == Kind::ProjBundle; }
    [[nodiscard]] const BoxShape& box() const { return box_; }
    [[nodiscard]] int base_n() const { return box_.ambient_n(); }

    [[nodiscard]] int fiber_rank() const {
        require_bundle();
        return fiber_rank_;
    }
    /// Relative dimension of P(F) over the base.
    [[nodiscard]] int relative_dimension() const { return is_proj_bundle() ? fiber_rank_ - 1 : 0; }

    [[nodiscard]] const BundleExpr& fiber_expr() const {
        require_bundle();
        return *fiber_expr_;
    }

    /// c_i of the fiber sheaf on the base; zero class beyond the stored range.
    [[nodiscard]] SchubertClass fiber_chern(int i) const {
        require_bundle();
        if (i < 0 || i >= static_cast<int>(fiber_chern_.size())) return SchubertClass::zero(box_);
        return fiber_chern_[static_cast<size_t>(i)];
    }

    [[nodiscard]] long long dimension() const {
        return box_.dimension() + (is_proj_bundle() ? fiber_rank_ - 1 : 0);
    }

    [[nodiscard]] int picard_rank() const { return is_proj_bundle() ? 2 : 1; }

    [[nodiscard]] std::string to_string() const {
        std::string gr = "Gr(" + std::to_string(box_.k) + "," + std::to_string(box_.ambient_n()) + ")";
        if (!is_proj_bundle()) return gr;
        return "P(" + fiber_expr_->to_string() + ") over " + gr;
    }

    friend bool operator==(const SpaceDesc& a, const SpaceDesc& b) {
        if (a.kind_ != b.kind_ || !(a.box_ == b.box_)) return false;
        if (a.kind_ == Kind::Grassmann) return true;
        return a.fiber_rank_ == b.fiber_rank_ && *a.fiber_expr_ == *b.fiber_expr_;
    }

private:
    SpaceDesc(Kind kind, BoxShape box) : kind_(kind), box_(box) {}

    void require_bundle() const {
        if (!is_proj_bundle()) throw domain_error("space is not a projective bundle");
    }

    Kind kind_;
    BoxShape box_;
    std::optional<BundleExpr> fiber_expr_;
    int fiber_rank_ = 0;
    std::vector<SchubertClass> fiber_chern_;
};

}  // namespace quadeuler
