#pragma once

#include <memory>
#include <string>
#include <utility>

#include "quadeuler/error.hpp"

namespace quadeuler {

/// Abstract syntax tree of a bundle construction. Immutable; children are
/// shared, so copies are cheap and thread-safe.
///
/// Canonical text form (the CLI grammar):
///   expr := term ('+' term)*
///   term := 'Q' | 'S' | 'O(' int ')' | 'OY(' int ')' | 'triv(' int ')'
///         | 'dual(' expr ')' | 'sym(' int ',' expr ')'
///         | 'tw(' expr ',' term ')' | 'pull(' expr ')'
class BundleExpr {
public:
    enum class Kind {
        TautQuotient,  // Q, the universal rank-k quotient
        TautSub,       // S, its kernel in the Euler sequence
        LineOnGrass,   // O(a), powers of det Q
        LineOnFiber,   // OY(a), powers of the relative O_Y(1)
        Trivial,       // triv(r)
        Dual,          // dual(e)
        Sym,           // sym(d, e), d >= 1
        DirectSum,     // e1 + e2
        TensorLine,    // tw(e, line)
        Pullback,      // pull(e), base expression seen on the total space
    };

    [[nodiscard]] static BundleExpr taut_quotient() { return BundleExpr(Kind::TautQuotient); }
    [[nodiscard]] static BundleExpr taut_sub() { return BundleExpr(Kind::TautSub); }
    [[nodiscard]] static BundleExpr line_on_grass(int a) {
        BundleExpr e(Kind::LineOnGrass);
        e.arg_ = a;
        return e;
    }
    [[nodiscard]] static BundleExpr line_on_fiber(int a) {
        BundleExpr e(Kind::LineOnFiber);
        e.arg_ = a;
        return e;
    }
    [[nodiscard]] static BundleExpr trivial(int r) {
        if (r < 0) throw domain_error("triv: rank must be non-negative");
        BundleExpr e(Kind::Trivial);
        e.arg_ = r;
        return e;
    }
    [[nodiscard]] static BundleExpr dual(BundleExpr e) {
        BundleExpr d(Kind::Dual);
        d.child1_ = share(std::move(e));
        return d;
    }
    [[nodiscard]] static BundleExpr sym(int d, BundleExpr e) {
        if (d < 1) throw domain_error("sym: degree must be at least 1");
        BundleExpr s(Kind::Sym);
        s.arg_ = d;
        s.child1_ = share(std::move(e));
        return s;
    }
    [[nodiscard]] static BundleExpr direct_sum(BundleExpr a, BundleExpr b) {
        BundleExpr s(Kind::DirectSum);
        s.child1_ = share(std::move(a));
        s.child2_ = share(std::move(b));
        return s;
    }
    [[nodiscard]] static BundleExpr tensor_line(BundleExpr e, BundleExpr line) {
        BundleExpr t(Kind::TensorLine);
        t.child1_ = share(std::move(e));
        t.child2_ = share(std::move(line));
        return t;
    }
    [[nodiscard]] static BundleExpr pullback(BundleExpr e) {
        BundleExpr p(Kind::Pullback);
        p.child1_ = share(std::move(e));
        return p;
    }

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] int arg() const { return arg_; }
    [[nodiscard]] const BundleExpr& child1() const { return *child1_; }
    [[nodiscard]] const BundleExpr& child2() const { return *child2_; }

    friend BundleExpr operator+(BundleExpr a, BundleExpr b) {
        return direct_sum(std::move(a), std::move(b));
    }

    friend bool operator==(const BundleExpr& a, const BundleExpr& b) {
        if (a.kind_ != b.kind_ || a.arg_ != b.arg_) return false;
        if (static_cast<bool>(a.child1_) != static_cast<bool>(b.child1_)) return false;
        if (a.child1_ && !(*a.child1_ == *b.child1_)) return false;
        if (static_cast<bool>(a.child2_) != static_cast<bool>(b.child2_)) return false;
        if (a.child2_ && !(*a.child2_ == *b.child2_)) return false;
        return true;
    }

    /// Canonical text form; direct sums are flattened left to right.
    [[nodiscard]] std::string to_string() const {
        switch (kind_) {
            case Kind::TautQuotient: return "Q";
            case Kind::TautSub: return "S";
            case Kind::LineOnGrass: return "O(" + std::to_string(arg_) + ")";
            case Kind::LineOnFiber: return "OY(" + std::to_string(arg_) + ")";
            case Kind::Trivial: return "triv(" + std::to_string(arg_) + ")";
            case Kind::Dual: return "dual(" + child1_->to_string() + ")";
            case Kind::Sym:
                return "sym(" + std::to_string(arg_) + "," + child1_->to_string() + ")";
            case Kind::DirectSum: return child1_->to_string() + " + " + child2_->to_string();
            case Kind::TensorLine:
                return "tw(" + child1_->to_string() + "," + child2_->to_string() + ")";
            case Kind::Pullback: return "pull(" + child1_->to_string() + ")";
        }
        return "?";
    }

    /// True if the expression only mentions base-space constructors, i.e. is
    /// meaningful on a bare Grassmannian.
    [[nodiscard]] bool base_only() const {
        if (kind_ == Kind::LineOnFiber || kind_ == Kind::Pullback) return false;
        if (child1_ && !child1_->base_only()) return false;
        if (child2_ && !child2_->base_only()) return false;
        return true;
    }

private:
    explicit BundleExpr(Kind kind) : kind_(kind) {}

    static std::shared_ptr<const BundleExpr> share(BundleExpr e) {
        return std::make_shared<const BundleExpr>(std::move(e));
    }

    Kind kind_;
    int arg_ = 0;
    std::shared_ptr<const BundleExpr> child1_;
    std::shared_ptr<const BundleExpr> child2_;
};

}  // namespace quadeuler
