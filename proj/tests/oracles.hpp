#pragma once

// Test-only oracles, deliberately independent of the library's computation
// paths: Littlewood-Richardson coefficients by explicit tableau enumeration,
// standard-tableau counts by the hook length formula, and symmetric-power
// Chern classes by direct root expansion for rank 2.

#include <map>
#include <vector>

#include "quadeuler/int_types.hpp"
#include "quadeuler/partition.hpp"
#include "quadeuler/schubert.hpp"

namespace oracles {

using quadeuler::BoxShape;
using quadeuler::Int;
using quadeuler::Partition;
using quadeuler::SchubertClass;

// Number of skew semistandard tableaux of shape nu/lambda with content mu
// whose reverse reading word (rows top to bottom, each row right to left)
// is a ballot sequence. This is c^nu_{lambda,mu}.
inline Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (!nu.contains(lambda)) return 0;
    if (nu.weight() - lambda.weight() != mu.weight()) return 0;

    // Cells in reverse reading order.
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < nu.length(); ++r)
        for (int c = nu.part(r) - 1; c >= lambda.part(r); --c) cells.emplace_back(r, c);
    if (cells.empty()) return mu.weight() == 0 ? 1 : 0;

    const int values = mu.length();
    std::vector<long long> used(static_cast<size_t>(values) + 1, 0);
    std::vector<std::vector<int>> grid(static_cast<size_t>(nu.length()));
    for (int r = 0; r < nu.length(); ++r)
        grid[static_cast<size_t>(r)].assign(static_cast<size_t>(nu.part(r)), 0);

    Int count = 0;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[idx];
        for (int t = 1; t <= values; ++t) {
            if (used[static_cast<size_t>(t)] >= mu.part(t - 1)) continue;
            if (t >= 2 && used[static_cast<size_t>(t)] + 1 > used[static_cast<size_t>(t) - 1])
                continue;  // ballot
            if (c + 1 < nu.part(r) && t > grid[static_cast<size_t>(r)][static_cast<size_t>(c) + 1])
                continue;  // rows weakly increase
            if (r > 0 && c >= lambda.part(r - 1) &&
                t <= grid[static_cast<size_t>(r) - 1][static_cast<size_t>(c)])
                continue;  // columns strictly increase
            used[static_cast<size_t>(t)]++;
            grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = t;
            rec(idx + 1);
            grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
            used[static_cast<size_t>(t)]--;
        }
    };
    rec(0);
    return count;
}

// Box-truncated product straight from the LR rule.
inline SchubertClass lr_multiply(const Partition& lambda, const Partition& mu, const BoxShape& box) {
    SchubertClass out(box);
    for (const auto& nu : quadeuler::partitions_in_box(box)) {
        if (nu.weight() != lambda.weight() + mu.weight()) continue;
        Int c = lr_coefficient(lambda, mu, nu);
        if (c != 0) out.add_term(nu, c);
    }
    return out;
}

// Number of standard Young tableaux of the k x w rectangle, by hooks.
inline Int rectangle_syt_count(int k, int w) {
    Int numerator = 1;
    for (long long i = 2; i <= static_cast<long long>(k) * w; ++i) numerator *= i;
    Int hooks = 1;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < w; ++j) hooks *= (k - i) + (w - j) - 1;
    return numerator / hooks;
}

// Dense polynomial in two commuting roots a, b: coefficient of a^i b^j at
// [i][j]. Enough structure to expand products of linear forms exactly.
struct RootPoly {
    std::map<std::pair<int, int>, Int> coeff;

    static RootPoly constant(Int c) {
        RootPoly p;
        if (c != 0) p.coeff[{0, 0}] = std::move(c);
        return p;
    }

    static RootPoly linear(Int c0, Int ca, Int cb) {
        RootPoly p;
        if (c0 != 0) p.coeff[{0, 0}] = std::move(c0);
        if (ca != 0) p.coeff[{1, 0}] = std::move(ca);
        if (cb != 0) p.coeff[{0, 1}] = std::move(cb);
        return p;
    }

    RootPoly operator*(const RootPoly& other) const {
        RootPoly out;
        for (const auto& [m1, c1] : coeff)
            for (const auto& [m2, c2] : other.coeff) {
                auto key = std::make_pair(m1.first + m2.first, m1.second + m2.second);
                auto [it, inserted] = out.coeff.try_emplace(key, c1 * c2);
                if (!inserted) {
                    it->second += c1 * c2;
                    if (it->second == 0) out.coeff.erase(it);
                }
            }
        return out;
    }

    RootPoly& operator+=(const RootPoly& other) {
        for (const auto& [m, c] : other.coeff) {
            auto [it, inserted] = coeff.try_emplace(m, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) coeff.erase(it);
            }
        }
        return *this;
    }

    friend bool operator==(const RootPoly& x, const RootPoly& y) { return x.coeff == y.coeff; }
};

// Total Chern class of Sym^d(E) for E of rank 2 with roots a, b:
// the product over i = 0..d of (1 + (d-i)a + i b), fully expanded.
inline RootPoly sym_chern_by_roots(int d) {
    RootPoly out = RootPoly::constant(1);
    for (int i = 0; i <= d; ++i) out = out * RootPoly::linear(1, d - i, i);
    return out;
}

// Substitute e1 = a + b, e2 = ab into a polynomial given by elementary
// symmetric exponents: map (m1, m2) -> coefficient of e1^m1 e2^m2.
inline RootPoly expand_elementary(const std::map<std::pair<int, int>, Int>& epoly) {
    RootPoly e1 = RootPoly::linear(0, 1, 1);
    RootPoly e2;
    e2.coeff[{1, 1}] = 1;
    RootPoly out;
    for (const auto& [m, c] : epoly) {
        RootPoly term = RootPoly::constant(c);
        for (int i = 0; i < m.first; ++i) term = term * e1;
        for (int i = 0; i < m.second; ++i) term = term * e2;
        out += term;
    }
    return out;
}

}  // namespace oracles
