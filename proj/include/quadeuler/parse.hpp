#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "quadeuler/bundle.hpp"
#include "quadeuler/chern.hpp"
#include "quadeuler/error.hpp"
#include "quadeuler/gw.hpp"
#include "quadeuler/pic.hpp"
#include "quadeuler/space.hpp"

namespace quadeuler {

namespace detail {

/// Cursor over the input with whitespace skipping and positioned errors.
class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    [[nodiscard]] bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    [[nodiscard]] char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    [[nodiscard]] std::size_t position() {
        skip_ws();
        return pos_;
    }

    /// Consume `token` if it is the next input; keywords refuse to match a
    /// prefix of a longer word.
    bool try_consume(std::string_view token, bool keyword = false) {
        skip_ws();
        if (text_.substr(pos_, token.size()) != token) return false;
        if (keyword) {
            std::size_t after = pos_ + token.size();
            if (after < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[after])) ||
                                         text_[after] == '_'))
                return false;
        }
        pos_ += token.size();
        return true;
    }

    void expect(std::string_view token, std::string_view description) {
        if (!try_consume(token)) fail(std::string(description));
    }

    [[nodiscard]] long long parse_int(std::string_view what) {
        skip_ws();
        std::size_t start = pos_;
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            pos_ = start;
            fail(std::string(what));
        }
        long long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000'000LL) fail("a smaller integer");
            ++pos_;
        }
        return negative ? -value : value;
    }

    [[noreturn]] void fail(std::string expected) {
        skip_ws();
        throw parse_error("syntax error", pos_, std::move(expected));
    }

    void expect_end() {
        if (!at_end()) fail("end of input");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

inline BundleExpr parse_bundle_expr(Cursor& in);

inline BundleExpr parse_bundle_term(Cursor& in) {
    if (in.try_consume("OY")) {
        in.expect("(", "'('");
        long long a = in.parse_int("an integer twist");
        in.expect(")", "')'");
        return BundleExpr::line_on_fiber(static_cast<int>(a));
    }
    if (in.try_consume("O")) {
        in.expect("(", "'('");
        long long a = in.parse_int("an integer twist");
        in.expect(")", "')'");
        return BundleExpr::line_on_grass(static_cast<int>(a));
    }
    if (in.try_consume("Q", true)) return BundleExpr::taut_quotient();
    if (in.try_consume("S", true)) return BundleExpr::taut_sub();
    if (in.try_consume("triv", true)) {
        in.expect("(", "'('");
        std::size_t at = in.position();
        long long r = in.parse_int("a non-negative rank");
        if (r < 0) throw parse_error("syntax error", at, "a non-negative rank");
        in.expect(")", "')'");
        return BundleExpr::trivial(static_cast<int>(r));
    }
    if (in.try_consume("dual", true)) {
        in.expect("(", "'('");
        BundleExpr e = parse_bundle_expr(in);
        in.expect(")", "')'");
        return BundleExpr::dual(std::move(e));
    }
    if (in.try_consume("sym", true)) {
        in.expect("(", "'('");
        std::size_t at = in.position();
        long long d = in.parse_int("a positive symmetric-power degree");
        if (d < 1) throw parse_error("syntax error", at, "a positive symmetric-power degree");
        in.expect(",", "','");
        BundleExpr e = parse_bundle_expr(in);
        in.expect(")", "')'");
        return BundleExpr::sym(static_cast<int>(d), std::move(e));
    }
    if (in.try_consume("tw", true)) {
        in.expect("(", "'('");
        BundleExpr e = parse_bundle_expr(in);
        in.expect(",", "','");
        BundleExpr line = parse_bundle_term(in);
        in.expect(")", "')'");
        return BundleExpr::tensor_line(std::move(e), std::move(line));
    }
    if (in.try_consume("pull", true)) {
        in.expect("(", "'('");
        BundleExpr e = parse_bundle_expr(in);
        in.expect(")", "')'");
        return BundleExpr::pullback(std::move(e));
    }
    in.fail("'Q', 'S', 'O(', 'OY(', 'triv(', 'dual(', 'sym(', 'tw(' or 'pull('");
}

inline BundleExpr parse_bundle_expr(Cursor& in) {
    BundleExpr e = parse_bundle_term(in);
    while (in.try_consume("+")) e = std::move(e) + parse_bundle_term(in);
    return e;
}

inline GWElem parse_gw_expr(Cursor& in, FieldSpec field);

inline GWElem parse_gw_atom(Cursor& in, FieldSpec field) {
    if (in.try_consume("h", true)) return hyperbolic_form(field);
    if (in.try_consume("<")) {
        std::size_t at = in.position();
        long long a = in.parse_int("1 or -1");
        in.expect(">", "'>'");
        if (a == 1) return GWElem(1, 0, field);
        if (a == -1) return GWElem(0, 1, field);
        throw parse_error("syntax error", at,
                          "'<1>' or '<-1>' (other unit classes are not representable here)");
    }
    if (in.try_consume("(")) {
        GWElem e = parse_gw_expr(in, field);
        in.expect(")", "')'");
        return e;
    }
    char c = in.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
        long long v = in.parse_int("an integer");
        GWElem e(v, 0, field);
        // Implicit multiplication: 12h, 3<−1>, 2(...)
        if (in.peek() == 'h' || in.peek() == '<' || in.peek() == '(')
            return gw_mul(e, parse_gw_atom(in, field));
        return e;
    }
    in.fail("an integer, 'h', '<1>', '<-1>' or '('");
}

inline GWElem parse_gw_unary(Cursor& in, FieldSpec field) {
    if (in.try_consume("-")) return gw_neg(parse_gw_unary(in, field));
    return parse_gw_atom(in, field);
}

inline GWElem parse_gw_product(Cursor& in, FieldSpec field) {
    GWElem e = parse_gw_unary(in, field);
    while (in.try_consume("*")) e = gw_mul(e, parse_gw_unary(in, field));
    return e;
}

inline GWElem parse_gw_expr(Cursor& in, FieldSpec field) {
    GWElem e = parse_gw_product(in, field);
    while (true) {
        if (in.try_consume("+")) {
            e = gw_add(e, parse_gw_product(in, field));
        } else if (in.try_consume("-")) {
            e = gw_sub(e, parse_gw_product(in, field));
        } else {
            return e;
        }
    }
}

}  // namespace detail

/// Parse a bundle expression in the canonical grammar.
inline BundleExpr parse_bundle(std::string_view text) {
    detail::Cursor in(text);
    BundleExpr e = detail::parse_bundle_expr(in);
    in.expect_end();
    return e;
}

/// Parse `Gr(k,n)` or `P(F) over Gr(k,n)`.
inline SpaceDesc parse_space(std::string_view text) {
    detail::Cursor in(text);
    if (in.try_consume("Gr", true)) {
        in.expect("(", "'('");
        long long k = in.parse_int("the quotient rank k");
        in.expect(",", "','");
        long long n = in.parse_int("the ambient dimension n");
        in.expect(")", "')'");
        in.expect_end();
        return SpaceDesc::grassmann(static_cast<int>(k), static_cast<int>(n));
    }
    if (in.try_consume("P", true)) {
        in.expect("(", "'('");
        BundleExpr fiber = detail::parse_bundle_expr(in);
        in.expect(")", "')'");
        if (!in.try_consume("over", true)) in.fail("'over'");
        if (!in.try_consume("Gr", true)) in.fail("'Gr'");
        in.expect("(", "'('");
        long long k = in.parse_int("the quotient rank k");
        in.expect(",", "','");
        long long n = in.parse_int("the ambient dimension n");
        in.expect(")", "')'");
        in.expect_end();
        return make_projective_bundle(
            BoxShape::for_grassmannian(static_cast<int>(k), static_cast<int>(n)), fiber);
    }
    in.fail("'Gr(k,n)' or 'P(F) over Gr(k,n)'");
}

/// Parse a GW expression over the given field, e.g. "h*h" or "3 + 12h".
inline GWElem parse_gw(std::string_view text, FieldSpec field = FieldSpec::universal()) {
    detail::Cursor in(text);
    GWElem e = detail::parse_gw_expr(in, field);
    in.expect_end();
    return e;
}

/// Parse a Picard class: `O(a)` for a Grassmannian, `OY(a)*piO(b)` for a
/// projective bundle.
inline PicClass parse_pic(std::string_view text) {
    detail::Cursor in(text);
    if (in.try_consume("OY", true)) {
        in.expect("(", "'('");
        long long a = in.parse_int("an integer");
        in.expect(")", "')'");
        in.expect("*", "'*'");
        if (!in.try_consume("piO", true)) in.fail("'piO'");
        in.expect("(", "'('");
        long long b = in.parse_int("an integer");
        in.expect(")", "')'");
        in.expect_end();
        return PicClass(Int(a), Int(b));
    }
    if (in.try_consume("O", true)) {
        in.expect("(", "'('");
        long long a = in.parse_int("an integer");
        in.expect(")", "')'");
        in.expect_end();
        return PicClass(Int(a));
    }
    in.fail("'O(a)' or 'OY(a)*piO(b)'");
}

/// Field names accepted by the CLI.
inline FieldSpec parse_field(std::string_view name) {
    if (name == "universal" || name.empty()) return FieldSpec::universal();
    if (name == "qclosed" || name == "quadratically-closed") return FieldSpec::quadratically_closed();
    if (name == "rclosed" || name == "real-closed") return FieldSpec::real_closed();
    if (name == "fq1" || name == "finite-odd-square") return FieldSpec::finite_odd(true);
    if (name == "fq3" || name == "finite-odd-nonsquare") return FieldSpec::finite_odd(false);
    throw domain_error("unknown field '" + std::string(name) +
                       "' (expected universal, qclosed, rclosed, fq1 or fq3)");
}

}  // namespace quadeuler
