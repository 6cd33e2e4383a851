#pragma once

#include <vector>

#include "quadeuler/error.hpp"
#include "quadeuler/graded.hpp"
#include "quadeuler/int_types.hpp"
#include "quadeuler/schubert.hpp"
#include "quadeuler/space.hpp"

namespace quadeuler {

// The projective bundle P(F) parameterizes rank-1 quotients of F (Proj of
// the symmetric algebra), so with xi = c_1(O_Y(1)) the Chow ring of Y is the
// base ring with xi adjoined modulo
//
//     sum_{i=0..m} (-1)^i c_i(F) xi^(m-i) = 0,        m = rank F,
//
// i.e. the Chern classes entering the relation are those of the dual of F.
// The sign pattern is validated by deg(xi^(m-1)) = 1 over a point and by the
// Hirzebruch-surface intersection table in the test suite.

namespace detail {

/// Segre classes of the dual fiber sheaf: the series inverse of
/// sum_i (-1)^i c_i(F), up to total degree `up_to` on the base.
inline std::vector<SchubertClass> dual_fiber_segre(const SpaceDesc& space, long long up_to) {
    const BoxShape box = space.box();
    std::vector<SchubertClass> segre;
    segre.reserve(static_cast<size_t>(up_to) + 1);
    segre.push_back(SchubertClass::one(box));
    for (long long t = 1; t <= up_to; ++t) {
        SchubertClass s(box);
        for (long long i = 1; i <= t; ++i) {
            SchubertClass ci = space.fiber_chern(static_cast<int>(i));
            if (ci.is_zero()) continue;
            if (i % 2 == 1) ci *= Int(-1);
            s -= multiply(ci, segre[static_cast<size_t>(t - i)]);
        }
        segre.push_back(std::move(s));
    }
    return segre;
}

/// pi_*(sigma_lambda xi^j) = sigma_lambda * s_(j - m + 1) with s the Segre
/// classes above. Does not reduce its input first; the public pushforward
/// does.
inline SchubertClass pushforward_unreduced(const GradedClass& c) {
    const SpaceDesc& space = c.space();
    if (!space.is_proj_bundle()) throw domain_error("pushforward: space is not a projective bundle");
    const int m = space.fiber_rank();
    const BoxShape box = space.box();

    long long max_index = c.max_xi_exponent() - (m - 1);
    auto segre = dual_fiber_segre(space, std::max<long long>(max_index, 0));

    SchubertClass out(box);
    for (const auto& [key, coeff] : c.terms()) {
        long long s_index = key.second - (m - 1);
        if (s_index < 0) continue;
        SchubertClass base(box, key.first, coeff);
        out += multiply(base, segre[static_cast<size_t>(s_index)]);
    }
    return out;
}

}  // namespace detail

/// Normal form: substitute the defining relation until every xi exponent is
/// strictly below the fiber rank. Idempotent, degree-preserving.
inline GradedClass reduce(const GradedClass& c) {
    const SpaceDesc& space = c.space();
    if (!space.is_proj_bundle()) throw domain_error("reduce: space is not a projective bundle");
    const int m = space.fiber_rank();
    const BoxShape box = space.box();

    const int maxj = static_cast<int>(c.max_xi_exponent());
    std::vector<SchubertClass> bucket(static_cast<size_t>(maxj) + 1, SchubertClass::zero(box));
    for (const auto& [key, coeff] : c.terms())
        bucket[static_cast<size_t>(key.second)].add_term(key.first, coeff);

    // xi^j = sum_{i=1..m} (-1)^(i+1) c_i(F) xi^(j-i) for j >= m.
    for (int j = maxj; j >= m; --j) {
        if (bucket[static_cast<size_t>(j)].is_zero()) continue;
        SchubertClass head = std::move(bucket[static_cast<size_t>(j)]);
        bucket[static_cast<size_t>(j)] = SchubertClass::zero(box);
        for (int i = 1; i <= m && i <= j; ++i) {
            SchubertClass ci = space.fiber_chern(i);
            if (ci.is_zero()) continue;
            if (i % 2 == 0) ci *= Int(-1);
            bucket[static_cast<size_t>(j - i)] += multiply(head, ci);
        }
    }

    GradedClass out(space);
    const long long dim = space.dimension();
    for (int j = 0; j < m && j <= maxj; ++j)
        for (const auto& [lambda, coeff] : bucket[static_cast<size_t>(j)].terms())
            if (lambda.weight() + j <= dim) out.add_term(lambda, j, coeff);
    return out;
}

/// Proper pushforward to the base Grassmannian; lowers total degree by the
/// relative dimension m - 1.
inline SchubertClass pushforward(const GradedClass& c) {
    return detail::pushforward_unreduced(reduce(c));
}

/// Integer degree of a top-codimension class on the space.
inline Int degree_Y(const GradedClass& c) {
    if (c.is_zero()) return 0;
    const SpaceDesc& space = c.space();
    if (!c.is_homogeneous(space.dimension()))
        throw domain_error("degree_Y: class is not homogeneous of top codimension");
    if (!space.is_proj_bundle()) return degree(c.xi_coefficient(0));
    return degree(pushforward(c));
}

}  // namespace quadeuler
