#pragma once

#include <map>
#include <string>
#include <utility>

#include "quadeuler/error.hpp"
#include "quadeuler/int_types.hpp"
#include "quadeuler/partition.hpp"
#include "quadeuler/schubert.hpp"
#include "quadeuler/space.hpp"

namespace quadeuler {

/// Class in the Chow ring of a space: finite sum of terms
/// coeff * sigma_lambda * xi^j, with lambda in the base box and xi the
/// relative hyperplane class (j is identically 0 on a bare Grassmannian).
/// Total degree of a term is |lambda| + j; multiplication truncates above
/// the ambient dimension, which is sound because the defining relation of a
/// projective bundle is degree-preserving.
class GradedClass {
public:
    using Key = std::pair<Partition, int>;  // (lambda, xi exponent)
    using TermMap = std::map<Key, Int>;

    explicit GradedClass(SpaceDesc space) : space_(std::move(space)) {}

    [[nodiscard]] static GradedClass zero(const SpaceDesc& s) { return GradedClass(s); }
    [[nodiscard]] static GradedClass one(const SpaceDesc& s) {
        GradedClass c(s);
        c.add_term(Partition{}, 0, 1);
        return c;
    }
    [[nodiscard]] static GradedClass xi_power(const SpaceDesc& s, int j) {
        GradedClass c(s);
        c.add_term(Partition{}, j, 1);
        return c;
    }
    [[nodiscard]] static GradedClass from_schubert(const SpaceDesc& s, const SchubertClass& b) {
        if (!(b.box() == s.box())) throw domain_error("GradedClass: base class box mismatch");
        GradedClass c(s);
        for (const auto& [lambda, coeff] : b.terms()) c.add_term(lambda, 0, coeff);
        return c;
    }

    [[nodiscard]] const SpaceDesc& space() const { return space_; }
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    void add_term(const Partition& lambda, int xi, const Int& coeff) {
        if (coeff == 0) return;
        if (!lambda.fits(space_.box())) throw domain_error("GradedClass: partition does not fit box");
        if (xi < 0) throw domain_error("GradedClass: negative xi exponent");
        if (xi > 0 && !space_.is_proj_bundle())
            throw domain_error("GradedClass: xi does not exist on a bare Grassmannian");
        auto [it, inserted] = terms_.try_emplace({lambda, xi}, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    [[nodiscard]] Int coefficient(const Partition& lambda, int xi) const {
        auto it = terms_.find({lambda, xi});
        return it == terms_.end() ? Int(0) : it->second;
    }

    /// Terms of total degree |lambda| + j equal to `degree`.
    [[nodiscard]] GradedClass graded_piece(long long degree) const {
        GradedClass out(space_);
        for (const auto& [key, c] : terms_)
            if (key.first.weight() + key.second == degree) out.add_term(key.first, key.second, c);
        return out;
    }

    [[nodiscard]] bool is_homogeneous(long long degree) const {
        for (const auto& [key, c] : terms_)
            if (key.first.weight() + key.second != degree) return false;
        return true;
    }

    [[nodiscard]] long long max_xi_exponent() const {
        long long m = 0;
        for (const auto& [key, c] : terms_) m = std::max<long long>(m, key.second);
        return m;
    }

    /// Collect the base coefficient of xi^j as a SchubertClass.
    [[nodiscard]] SchubertClass xi_coefficient(int j) const {
        SchubertClass out(space_.box());
        for (const auto& [key, c] : terms_)
            if (key.second == j) out.add_term(key.first, c);
        return out;
    }

    GradedClass& operator+=(const GradedClass& other) {
        require_same_space(other);
        for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
        return *this;
    }
    GradedClass& operator-=(const GradedClass& other) {
        require_same_space(other);
        for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, -c);
        return *this;
    }
    GradedClass& operator*=(const Int& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [key, c] : terms_) c *= s;
        }
        return *this;
    }

    friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
    friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
    friend GradedClass operator*(GradedClass a, const Int& s) { return a *= s; }
    friend GradedClass operator*(const Int& s, GradedClass a) { return a *= s; }

    friend GradedClass operator*(const GradedClass& a, const GradedClass& b) {
        a.require_same_space(b);
        const long long dim = a.space_.dimension();
        GradedClass out(a.space_);
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                long long deg = ka.first.weight() + kb.first.weight() + ka.second + kb.second;
                if (deg > dim) continue;
                SchubertClass base = multiply(SchubertClass(a.space_.box(), ka.first),
                                              SchubertClass(a.space_.box(), kb.first));
                for (const auto& [mu, cm] : base.terms())
                    out.add_term(mu, ka.second + kb.second, ca * cb * cm);
            }
        }
        return out;
    }

    /// The zero class compares equal on any space.
    friend bool operator==(const GradedClass& a, const GradedClass& b) {
        if (a.terms_.empty() && b.terms_.empty()) return true;
        return a.space_ == b.space_ && a.terms_ == b.terms_;
    }

    [[nodiscard]] std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [key, c] : terms_) {
            if (!s.empty()) s += " + ";
            bool unit = c == 1 && !(key.first.empty() && key.second == 0);
            if (!unit) s += to_decimal(c);
            std::string sym;
            if (!key.first.empty()) sym += "s" + key.first.to_string();
            if (key.second > 0) {
                if (!sym.empty()) sym += "*";
                sym += key.second == 1 ? "xi" : "xi^" + std::to_string(key.second);
            }
            if (!unit && !sym.empty()) s += "*";
            s += sym;
        }
        return s;
    }

private:
    void require_same_space(const GradedClass& other) const {
        if (!(space_ == other.space_)) throw domain_error("GradedClass: mismatched spaces");
    }

    SpaceDesc space_;
    TermMap terms_;
};

}  // namespace quadeuler
