#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quadeuler/error.hpp"
#include "quadeuler/int_types.hpp"
#include "quadeuler/partition.hpp"

namespace quadeuler {

/// Element of the Chow ring of Gr(k, n) in the Schubert basis: an integer
/// linear combination of partitions inside the k x w box. Immutable in
/// spirit: every operation returns a fresh value, so sharing across threads
/// is safe.
class SchubertClass {
public:
    using TermMap = std::map<Partition, Int>;

    explicit SchubertClass(BoxShape box) : box_(box) {}

    SchubertClass(BoxShape box, Partition lambda, Int coeff = 1) : box_(box) {
        if (!lambda.fits(box)) throw domain_error("SchubertClass: partition does not fit box");
        if (coeff != 0) terms_.emplace(std::move(lambda), std::move(coeff));
    }

    [[nodiscard]] static SchubertClass zero(BoxShape box) { return SchubertClass(box); }
    [[nodiscard]] static SchubertClass one(BoxShape box) { return SchubertClass(box, Partition{}); }

    [[nodiscard]] const BoxShape& box() const { return box_; }
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    [[nodiscard]] Int coefficient(const Partition& lambda) const {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const Partition& lambda, const Int& coeff) {
        if (coeff == 0) return;
        if (!lambda.fits(box_)) throw domain_error("SchubertClass: partition does not fit box");
        auto [it, inserted] = terms_.try_emplace(lambda, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Sum of the terms with |lambda| = degree.
    [[nodiscard]] SchubertClass graded_piece(long long degree) const {
        SchubertClass out(box_);
        for (const auto& [lambda, c] : terms_)
            if (lambda.weight() == degree) out.add_term(lambda, c);
        return out;
    }

    [[nodiscard]] bool is_homogeneous(long long degree) const {
        for (const auto& [lambda, c] : terms_)
            if (lambda.weight() != degree) return false;
        return true;
    }

    SchubertClass& operator+=(const SchubertClass& other) {
        require_same_box(other);
        for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
        return *this;
    }

    SchubertClass& operator-=(const SchubertClass& other) {
        require_same_box(other);
        for (const auto& [lambda, c] : other.terms_) add_term(lambda, -c);
        return *this;
    }

    SchubertClass& operator*=(const Int& scalar) {
        if (scalar == 0) {
            terms_.clear();
        } else {
            for (auto& [lambda, c] : terms_) c *= scalar;
        }
        return *this;
    }

    friend SchubertClass operator+(SchubertClass a, const SchubertClass& b) { return a += b; }
    friend SchubertClass operator-(SchubertClass a, const SchubertClass& b) { return a -= b; }
    friend SchubertClass operator*(SchubertClass a, const Int& s) { return a *= s; }
    friend SchubertClass operator*(const Int& s, SchubertClass a) { return a *= s; }

    /// The zero class compares equal in any box.
    friend bool operator==(const SchubertClass& a, const SchubertClass& b) {
        if (a.terms_.empty() && b.terms_.empty()) return true;
        return a.box_ == b.box_ && a.terms_ == b.terms_;
    }

    [[nodiscard]] std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [lambda, c] : terms_) {
            if (!s.empty()) s += " + ";
            if (c != 1 || lambda.empty()) s += to_decimal(c);
            if (c != 1 && !lambda.empty()) s += "*";
            if (!lambda.empty()) s += "s" + lambda.to_string();
        }
        return s;
    }

private:
    void require_same_box(const SchubertClass& other) const {
        if (!(box_ == other.box_)) throw domain_error("SchubertClass: mismatched boxes");
    }

    BoxShape box_;
    TermMap terms_;
};

// ============================================================================
// Pieri rule
// ============================================================================

/// Multiplication of sigma_lambda by the single-row class sigma_(i):
/// sum of sigma_mu over mu obtained from lambda by adding i boxes, no two in
/// the same column, mu still inside the box. Coefficients are all 1.
inline SchubertClass pieri(const Partition& lambda, int i, const BoxShape& box) {
    if (!lambda.fits(box)) throw domain_error("pieri: partition does not fit box");
    if (i < 0) throw domain_error("pieri: strip size must be non-negative");

    SchubertClass out(box);
    // Row r of mu is bounded below by lambda_r and above by both the box and
    // lambda_{r-1} (the no-two-in-a-column condition for a horizontal strip).
    std::vector<int> mu(static_cast<size_t>(box.k), 0);
    std::function<void(int, int)> rec = [&](int row, int remaining) {
        if (row == box.k) {
            if (remaining == 0) out.add_term(Partition(std::vector<int>(mu)), 1);
            return;
        }
        int low = lambda.part(row);
        int high = row == 0 ? box.w : std::min(mu[static_cast<size_t>(row) - 1], lambda.part(row - 1));
        for (int v = low; v <= high; ++v) {
            if (v - low > remaining) break;
            mu[static_cast<size_t>(row)] = v;
            rec(row + 1, remaining - (v - low));
        }
        mu[static_cast<size_t>(row)] = 0;
    };
    rec(0, i);
    return out;
}

namespace detail {

/// sigma_lambda * sigma_(m) extended bilinearly; m > w contributes nothing.
inline SchubertClass pieri_on_class(const SchubertClass& a, int m) {
    const BoxShape& box = a.box();
    if (m > box.w) return SchubertClass::zero(box);
    SchubertClass out(box);
    for (const auto& [lambda, c] : a.terms()) out += pieri(lambda, m, box) * c;
    return out;
}

/// sigma_lambda * sigma_mu via the Giambelli determinant
///   sigma_mu = det( sigma_(mu_i + j - i) )_{1 <= i,j <= len(mu)}
/// expanded over permutations, each monomial applied to `a` as a chain of
/// Pieri steps. Entries with negative row length kill the term; rows longer
/// than the box are zero classes.
inline SchubertClass multiply_by_schubert(const SchubertClass& a, const Partition& mu) {
    const BoxShape& box = a.box();
    const int len = mu.length();
    if (len == 0) return a;

    SchubertClass out(box);
    std::vector<int> perm(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) perm[static_cast<size_t>(i)] = i;
    do {
        int sign = 1;
        for (int i = 0; i < len; ++i)
            for (int j = i + 1; j < len; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) sign = -sign;

        bool dead = false;
        SchubertClass acc = a;
        for (int i = 0; i < len && !dead; ++i) {
            int rowlen = mu.part(i) + perm[static_cast<size_t>(i)] - i;
            if (rowlen < 0) {
                dead = true;
            } else if (rowlen > 0) {
                acc = pieri_on_class(acc, rowlen);
                if (acc.is_zero()) dead = true;
            }
        }
        if (!dead) out += sign == 1 ? acc : acc * Int(-1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace detail

/// Product in the Chow ring, bilinear over the Schubert basis.
inline SchubertClass multiply(const SchubertClass& a, const SchubertClass& b) {
    if (!(a.box() == b.box())) throw domain_error("multiply: mismatched boxes");
    SchubertClass out(a.box());
    for (const auto& [mu, c] : b.terms()) out += detail::multiply_by_schubert(a, mu) * c;
    return out;
}

/// Degree map CH^(kw)(Gr) -> Z: coefficient of the full-box partition.
/// Requires the class to be homogeneous of top codimension (or zero).
inline Int degree(const SchubertClass& c) {
    if (c.is_zero()) return 0;
    const long long top = c.box().dimension();
    if (!c.is_homogeneous(top))
        throw domain_error("degree: class is not homogeneous of top codimension");
    return c.coefficient(full_box(c.box()));
}

}  // namespace quadeuler
