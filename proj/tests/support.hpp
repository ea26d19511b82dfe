#pragma once

// Shared fixtures: small builders, lexicographic vertex ordering, and an
// independent brute-force vertex oracle (solve every d-subset of tight
// constraints, keep feasible unique solutions).

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "qdice/polytope.hpp"

namespace support {

using qdice::HalfSpace;
using qdice::HPolytope;
using qdice::Rational;
using qdice::RatMatrix;
using qdice::RatVector;

inline HPolytope make_hp(int dim, const std::vector<std::vector<long>>& rows) {
    HPolytope p;
    p.ambient_dim = dim;
    for (const auto& r : rows) {
        HalfSpace h;
        h.offset = Rational(r.at(0));
        h.normal = RatVector(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i)
            h.normal[static_cast<std::size_t>(i)] = Rational(r.at(static_cast<std::size_t>(i) + 1));
        p.halfspaces.push_back(std::move(h));
    }
    return p;
}

inline HPolytope box(const std::vector<std::pair<Rational, Rational>>& sides) {
    HPolytope p;
    p.ambient_dim = static_cast<int>(sides.size());
    for (std::size_t i = 0; i < sides.size(); ++i) {
        HalfSpace lo, hi;
        lo.normal = RatVector(sides.size());
        hi.normal = RatVector(sides.size());
        lo.normal[i] = Rational(1);
        lo.offset = -sides[i].first;  // x_i >= lo
        hi.normal[i] = Rational(-1);
        hi.offset = sides[i].second;  // x_i <= hi
        p.halfspaces.push_back(std::move(lo));
        p.halfspaces.push_back(std::move(hi));
    }
    return p;
}

inline HPolytope standard_simplex(int d) {
    HPolytope p;
    p.ambient_dim = d;
    for (int i = 0; i < d; ++i) {
        HalfSpace h;
        h.offset = Rational(0);
        h.normal = RatVector(static_cast<std::size_t>(d));
        h.normal[static_cast<std::size_t>(i)] = Rational(1);
        p.halfspaces.push_back(std::move(h));
    }
    HalfSpace top;
    top.offset = Rational(1);
    top.normal = RatVector(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) top.normal[static_cast<std::size_t>(i)] = Rational(-1);
    p.halfspaces.push_back(std::move(top));
    return p;
}

inline bool lex_less(const RatVector& a, const RatVector& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

inline std::vector<RatVector> sorted_points(std::vector<RatVector> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    return pts;
}

inline bool same_vertex_set(const std::vector<RatVector>& a, const std::vector<RatVector>& b) {
    return sorted_points(a) == sorted_points(b);
}

/// Every way to pick ambient_dim constraints, solved as equalities; a
/// solution counts when the subsystem has full rank and the point
/// satisfies all constraints. Exponential, test-only.
inline std::vector<RatVector> brute_force_vertices(const HPolytope& p) {
    const int n = p.ambient_dim;
    const std::size_t m = p.halfspaces.size();
    std::vector<RatVector> found;
    if (m < static_cast<std::size_t>(n)) return found;

    std::vector<std::size_t> pick(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
    auto advance = [&]() {
        std::size_t i = pick.size();
        while (i > 0) {
            --i;
            if (pick[i] + (pick.size() - i) < m) {
                ++pick[i];
                for (std::size_t j = i + 1; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    do {
        std::vector<RatVector> rows;
        RatVector rhs(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < pick.size(); ++i) {
            rows.push_back(p.halfspaces[pick[i]].normal);
            rhs[i] = -p.halfspaces[pick[i]].offset;
        }
        const RatMatrix mat(rows);
        if (qdice::rank(mat) != static_cast<std::size_t>(n)) continue;
        const auto x = qdice::solve_linear(mat, rhs);
        if (!x || !p.contains(*x)) continue;
        bool dup = false;
        for (const auto& v : found)
            if (v == *x) {
                dup = true;
                break;
            }
        if (!dup) found.push_back(*x);
    } while (advance());
    return found;
}

/// Bounded, full-dimensional random polytope: a cube plus random cuts that
/// keep the origin strictly inside.
inline HPolytope random_polytope(std::mt19937_64& rng, int dim, int cuts) {
    std::uniform_int_distribution<long> coeff(-3, 3), den(1, 3), off_num(1, 4);
    HPolytope p = box(std::vector<std::pair<Rational, Rational>>(
        static_cast<std::size_t>(dim), {Rational(-1), Rational(1)}));
    for (int c = 0; c < cuts; ++c) {
        HalfSpace h;
        h.normal = RatVector(static_cast<std::size_t>(dim));
        bool nonzero = false;
        for (int i = 0; i < dim; ++i) {
            h.normal[static_cast<std::size_t>(i)] = Rational(coeff(rng), den(rng));
            nonzero |= !h.normal[static_cast<std::size_t>(i)].is_zero();
        }
        if (!nonzero) {
            --c;
            continue;
        }
        h.offset = Rational(off_num(rng), 4);  // strictly positive: origin stays interior
        p.halfspaces.push_back(std::move(h));
    }
    return p;
}

}  // namespace support
