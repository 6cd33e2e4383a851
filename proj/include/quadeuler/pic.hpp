#pragma once

#include <string>
#include <vector>

#include "quadeuler/error.hpp"
#include "quadeuler/int_types.hpp"
#include "quadeuler/space.hpp"

namespace quadeuler {

/// Class in the Picard lattice, as exponents against the ordered generators:
/// [O_G(1)] on a Grassmannian, [O_Y(1), pi*O_G(1)] on a projective bundle.
struct PicClass {
    std::vector<Int> coords;

    PicClass() = default;
    explicit PicClass(std::vector<Int> c) : coords(std::move(c)) {}
    PicClass(Int a) : coords{std::move(a)} {}
    PicClass(Int a, Int b) : coords{std::move(a), std::move(b)} {}

    [[nodiscard]] int rank() const { return static_cast<int>(coords.size()); }

    friend bool operator==(const PicClass&, const PicClass&) = default;

    friend PicClass operator+(const PicClass& x, const PicClass& y) {
        if (x.coords.size() != y.coords.size())
            throw domain_error("PicClass: mismatched Picard ranks");
        PicClass out;
        out.coords.reserve(x.coords.size());
        for (size_t i = 0; i < x.coords.size(); ++i) out.coords.push_back(x.coords[i] + y.coords[i]);
        return out;
    }

    friend PicClass operator-(const PicClass& x, const PicClass& y) {
        if (x.coords.size() != y.coords.size())
            throw domain_error("PicClass: mismatched Picard ranks");
        PicClass out;
        out.coords.reserve(x.coords.size());
        for (size_t i = 0; i < x.coords.size(); ++i) out.coords.push_back(x.coords[i] - y.coords[i]);
        return out;
    }

    friend PicClass operator*(const Int& s, const PicClass& x) {
        PicClass out;
        out.coords.reserve(x.coords.size());
        for (const auto& c : x.coords) out.coords.push_back(s * c);
        return out;
    }
};

/// Text form for CLI reports: `O(a)` or `O_Y(a) ⊗ pi*O(b)`.
inline std::string to_string(const PicClass& p) {
    if (p.rank() == 1) return "O(" + to_decimal(p.coords[0]) + ")";
    if (p.rank() == 2)
        return "O_Y(" + to_decimal(p.coords[0]) + ") ⊗ pi*O(" + to_decimal(p.coords[1]) + ")";
    return "Pic<rank " + std::to_string(p.rank()) + ">";
}

/// Canonical class omega of the space in Picard coordinates.
///
/// Gr(k, n):   omega = O(-n).
/// P(F) -> G:  omega = O_Y(-m) ⊗ pi*O(c_1(F) - n), m = rank F.
///
/// A zero-dimensional space has trivial Picard generators; the coordinates
/// are normalized to 0 there so parity comparisons stay meaningful.
inline PicClass canonical(const SpaceDesc& space) {
    const bool point_base = space.box().dimension() == 0;
    Int base_omega = point_base ? Int(0) : Int(-space.base_n());
    if (!space.is_proj_bundle()) return PicClass(base_omega);

    if (space.dimension() == 0) return PicClass(Int(0), Int(0));
    Int c1F = space.fiber_chern(1).coefficient(Partition{1});
    return PicClass(Int(-space.fiber_rank()), c1F + base_omega);
}

/// Quadratic equivalence: the difference is a tensor square, i.e. all
/// coordinates of a - b are even.
inline bool quad_equiv(const PicClass& a, const PicClass& b) {
    if (a.coords.size() != b.coords.size())
        throw domain_error("quad_equiv: classes live on different spaces");
    for (size_t i = 0; i < a.coords.size(); ++i)
        if ((a.coords[i] - b.coords[i]) % 2 != 0) return false;
    return true;
}

/// det E ~ omega ⊗ L^2 with rank E = dim X: the hinge of the whole case
/// analysis. Existence only; no orientation is chosen.
inline bool rel_orientable(const PicClass& det_e, const Int& rank_e, const SpaceDesc& space) {
    if (rank_e != space.dimension()) return false;
    return quad_equiv(det_e, canonical(space));
}

}  // namespace quadeuler
