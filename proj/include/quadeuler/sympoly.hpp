#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "quadeuler/error.hpp"
#include "quadeuler/int_types.hpp"

namespace quadeuler::sympoly {

// Exact multivariate polynomials over Int, just enough machinery for the
// splitting principle: expand a product of linear forms in formal Chern
// roots x_1..x_r (plus one inert variable t for a line-bundle twist), then
// rewrite the symmetric part in the elementary symmetric polynomials
// e_1..e_r by leading-term elimination.

/// Exponent vector; index 0 is t, indices 1..r are the roots.
using Exponents = std::vector<int>;

struct Poly {
    int nvars = 1;
    std::map<Exponents, Int> terms;

    explicit Poly(int vars) : nvars(vars) {}

    [[nodiscard]] static Poly zero(int vars) { return Poly(vars); }
    [[nodiscard]] static Poly constant(int vars, Int c) {
        Poly p(vars);
        if (c != 0) p.terms.emplace(Exponents(static_cast<size_t>(vars), 0), std::move(c));
        return p;
    }
    [[nodiscard]] static Poly variable(int vars, int index, Int c = 1) {
        Poly p(vars);
        if (c != 0) {
            Exponents e(static_cast<size_t>(vars), 0);
            e[static_cast<size_t>(index)] = 1;
            p.terms.emplace(std::move(e), std::move(c));
        }
        return p;
    }

    [[nodiscard]] bool is_zero() const { return terms.empty(); }

    void add_term(const Exponents& e, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    Poly& operator+=(const Poly& other) {
        for (const auto& [e, c] : other.terms) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& other) {
        for (const auto& [e, c] : other.terms) add_term(e, -c);
        return *this;
    }

    /// Product, dropping monomials of total degree above max_degree when
    /// max_degree >= 0.
    [[nodiscard]] Poly multiply(const Poly& other, long long max_degree = -1) const {
        Poly out(nvars);
        for (const auto& [e1, c1] : terms) {
            for (const auto& [e2, c2] : other.terms) {
                Exponents e(static_cast<size_t>(nvars));
                long long total = 0;
                for (int v = 0; v < nvars; ++v) {
                    e[static_cast<size_t>(v)] =
                        e1[static_cast<size_t>(v)] + e2[static_cast<size_t>(v)];
                    total += e[static_cast<size_t>(v)];
                }
                if (max_degree >= 0 && total > max_degree) continue;
                out.add_term(e, c1 * c2);
            }
        }
        return out;
    }
};

/// Elementary symmetric polynomial e_i in the root variables (homogeneous of
/// degree i, no t component).
inline Poly elementary(int nvars, int roots, int i) {
    Poly out(nvars);
    if (i == 0) return Poly::constant(nvars, 1);
    if (i > roots) return out;
    std::vector<int> subset;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(subset.size()) == i) {
            Exponents e(static_cast<size_t>(nvars), 0);
            for (int v : subset) e[static_cast<size_t>(v)] = 1;
            out.add_term(e, 1);
            return;
        }
        for (int v = next; v <= roots - (i - 1 - static_cast<int>(subset.size())); ++v) {
            subset.push_back(v);
            rec(v + 1);
            subset.pop_back();
        }
    };
    rec(1);
    return out;
}

/// Result of the elementary-symmetric rewrite: coefficient of
/// t^(key.first) * e_1^(key.second[0]) * ... * e_r^(key.second[r-1]).
using ElementaryExpansion = std::map<std::pair<int, std::vector<int>>, Int>;

/// Rewrite a polynomial that is symmetric in its root variables as a
/// polynomial in t and e_1..e_r. Standard leading-term elimination: the lex
/// leading root-monomial x^alpha of a symmetric polynomial has weakly
/// decreasing alpha and is killed by subtracting
/// coeff * prod_i e_i^(alpha_i - alpha_{i+1}).
inline ElementaryExpansion to_elementary(const Poly& p, int roots) {
    const int nvars = p.nvars;
    ElementaryExpansion out;

    // Split into buckets with a fixed t exponent; symmetry acts within.
    std::map<int, Poly> buckets;
    for (const auto& [e, c] : p.terms) {
        auto [it, inserted] = buckets.try_emplace(e[0], Poly::zero(nvars));
        Exponents rootPart = e;
        rootPart[0] = 0;
        it->second.add_term(rootPart, c);
    }

    for (auto& [texp, bucket] : buckets) {
        while (!bucket.is_zero()) {
            const auto& lead = *bucket.terms.rbegin();
            Exponents alpha = lead.first;
            Int coeff = lead.second;
            for (int i = 1; i < roots; ++i)
                if (alpha[static_cast<size_t>(i)] < alpha[static_cast<size_t>(i) + 1])
                    throw domain_error("to_elementary: polynomial is not symmetric in the roots");

            std::vector<int> eExp(static_cast<size_t>(roots), 0);
            Poly product = Poly::constant(nvars, 1);
            for (int i = 1; i <= roots; ++i) {
                int next = i < roots ? alpha[static_cast<size_t>(i) + 1] : 0;
                int mult = alpha[static_cast<size_t>(i)] - next;
                eExp[static_cast<size_t>(i) - 1] = mult;
                for (int rep = 0; rep < mult; ++rep)
                    product = product.multiply(elementary(nvars, roots, i));
            }

            out[{texp, eExp}] += coeff;
            if (out[{texp, eExp}] == 0) out.erase({texp, eExp});

            Poly scaled(nvars);
            for (const auto& [e, c] : product.terms) scaled.add_term(e, c * coeff);
            bucket -= scaled;
        }
    }
    return out;
}

}  // namespace quadeuler::sympoly
