#include "qdice/polytope.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace qdice {

bool HPolytope::contains(const RatVector& x) const {
    for (const auto& h : halfspaces)
        if (h.eval(x).sign() < 0) return false;
    return true;
}

namespace {

void validate_hpolytope(const HPolytope& p) {
    if (p.ambient_dim < 1) throw std::invalid_argument("polytope: ambient dimension must be positive");
    for (const auto& h : p.halfspaces)
        if (h.normal.size() != static_cast<std::size_t>(p.ambient_dim))
            throw std::invalid_argument("polytope: normal length != ambient dimension");
}

// Vertices of the current intersection plus, for each, the set of tight
// constraints. Bits 0..n are the artificial bounding simplex, bit n+1+k is
// input halfspace k.
struct Working {
    int n = 0;
    std::size_t total_bits = 0;
    std::vector<RatVector> pts;
    std::vector<IndexSet> inc;
};

// Intersect with offset + dot(normal, x) >= 0, assigning `bit` to the new
// tight set entries. Standard double-description step on the vertex side:
// vertices on the positive side survive, vertices on the hyperplane gain
// the bit, and each edge crossing the hyperplane contributes one new
// vertex. Adjacency of a (+,-) pair is decided combinatorially: the pair
// spans an edge iff no third vertex is tight on everything both share.
void cut_with(Working& w, const HalfSpace& h, std::size_t bit) {
    const std::size_t count = w.pts.size();
    std::vector<Rational> val(count);
    bool any_pos = false, any_neg = false;
    for (std::size_t i = 0; i < count; ++i) {
        val[i] = h.eval(w.pts[i]);
        const int s = val[i].sign();
        any_pos |= s > 0;
        any_neg |= s < 0;
    }

    if (!any_neg) {
        for (std::size_t i = 0; i < count; ++i)
            if (val[i].is_zero()) w.inc[i].set(bit);
        return;
    }
    if (!any_pos) {
        // Everything on or below the hyperplane: only the tight face survives.
        Working kept;
        kept.n = w.n;
        kept.total_bits = w.total_bits;
        for (std::size_t i = 0; i < count; ++i) {
            if (!val[i].is_zero()) continue;
            kept.pts.push_back(std::move(w.pts[i]));
            kept.inc.push_back(std::move(w.inc[i]));
            kept.inc.back().set(bit);
        }
        w = std::move(kept);
        return;
    }

    std::vector<RatVector> new_pts;
    std::vector<IndexSet> new_inc;
    const std::size_t min_tight = static_cast<std::size_t>(w.n) - 1;  // an edge is tight on >= n-1 constraints
    for (std::size_t p = 0; p < count; ++p) {
        if (val[p].sign() <= 0) continue;
        for (std::size_t q = 0; q < count; ++q) {
            if (val[q].sign() >= 0) continue;
            IndexSet common = w.inc[p] & w.inc[q];
            if (common.count() < min_tight) continue;
            bool adjacent = true;
            for (std::size_t t = 0; t < count; ++t) {
                if (t == p || t == q) continue;
                if (common.is_subset_of(w.inc[t])) {
                    adjacent = false;
                    break;
                }
            }
            if (!adjacent) continue;
            const Rational f = val[p] / (val[p] - val[q]);
            RatVector x(static_cast<std::size_t>(w.n));
            for (std::size_t i = 0; i < x.size(); ++i)
                x[i] = w.pts[p][i] + f * (w.pts[q][i] - w.pts[p][i]);
            common.set(bit);
            new_pts.push_back(std::move(x));
            new_inc.push_back(std::move(common));
        }
    }

    Working next;
    next.n = w.n;
    next.total_bits = w.total_bits;
    for (std::size_t i = 0; i < count; ++i) {
        const int s = val[i].sign();
        if (s < 0) continue;
        next.pts.push_back(std::move(w.pts[i]));
        next.inc.push_back(std::move(w.inc[i]));
        if (s == 0) next.inc.back().set(bit);
    }
    for (std::size_t i = 0; i < new_pts.size(); ++i) {
        next.pts.push_back(std::move(new_pts[i]));
        next.inc.push_back(std::move(new_inc[i]));
    }
    w = std::move(next);
}

}  // namespace

VPolytope vertex_enumerate(const HPolytope& p) {
    validate_hpolytope(p);
    const int n = p.ambient_dim;
    const std::size_t m = p.halfspaces.size();

    // Cramer-style containment radius: clear each row to integers, take the
    // largest magnitude A; every vertex and, when nonempty, at least one
    // point of the polyhedron has all |x_i| <= (n*A)^n < M. A bounding
    // simplex at that scale therefore changes nothing inside, and any final
    // vertex still tight on it certifies unboundedness.
    mpz_class max_entry = 1;
    for (const auto& h : p.halfspaces) {
        mpz_class l = 1;
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), h.offset.den().get_mpz_t());
        for (std::size_t i = 0; i < h.normal.size(); ++i)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), h.normal[i].den().get_mpz_t());
        auto consider = [&](const Rational& r) {
            mpz_class e = ::abs(r.num() * (l / r.den()));
            if (e > max_entry) max_entry = e;
        };
        consider(h.offset);
        for (std::size_t i = 0; i < h.normal.size(); ++i) consider(h.normal[i]);
    }
    mpz_class mz;
    const mpz_class base = n * max_entry;
    mpz_pow_ui(mz.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n));
    mz += 1;
    const Rational big_m(mz, 1);
    const Rational apex_coord((2 * n - 1) * mz + 1, 1);  // so the simplex sum constraint is tight

    Working w;
    w.n = n;
    w.total_bits = static_cast<std::size_t>(n) + 1 + m;

    RatVector corner(static_cast<std::size_t>(n));
    IndexSet corner_inc(w.total_bits);
    for (int i = 0; i < n; ++i) {
        corner[static_cast<std::size_t>(i)] = -big_m;
        corner_inc.set(static_cast<std::size_t>(i));
    }
    w.pts.push_back(corner);
    w.inc.push_back(corner_inc);
    for (int j = 0; j < n; ++j) {
        RatVector v(static_cast<std::size_t>(n));
        IndexSet inc(w.total_bits);
        for (int i = 0; i < n; ++i) {
            v[static_cast<std::size_t>(i)] = i == j ? apex_coord : -big_m;
            if (i != j) inc.set(static_cast<std::size_t>(i));
        }
        inc.set(static_cast<std::size_t>(n));
        w.pts.push_back(std::move(v));
        w.inc.push_back(std::move(inc));
    }

    for (std::size_t k = 0; k < m && !w.pts.empty(); ++k)
        cut_with(w, p.halfspaces[k], static_cast<std::size_t>(n) + 1 + k);

    for (const auto& inc : w.inc)
        for (int i = 0; i <= n; ++i)
            if (inc.test(static_cast<std::size_t>(i)))
                throw UnboundedError("vertex_enumerate: polyhedron is unbounded");

    VPolytope out;
    out.ambient_dim = n;
    out.vertices = std::move(w.pts);
    out.incidence.reserve(w.inc.size());
    for (const auto& inc : w.inc) {
        IndexSet t(m);
        for (std::size_t k = 0; k < m; ++k)
            if (inc.test(static_cast<std::size_t>(n) + 1 + k)) t.set(k);
        out.incidence.push_back(std::move(t));
    }
    return out;
}

int affine_dimension(const std::vector<RatVector>& points) {
    if (points.empty()) return -1;
    std::vector<RatVector> diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
    if (diffs.empty()) return 0;
    return static_cast<int>(rank(RatMatrix(std::move(diffs))));
}

int dimension(const HPolytope& p) { return affine_dimension(vertex_enumerate(p).vertices); }

namespace {

// Placing triangulation over the face lattice. A face is identified by its
// sorted vertex id list; each call cones the face's first vertex over the
// triangulations of the facets that miss it. Facets are recovered from the
// incidence data alone: for every constraint not tight on the whole face,
// collect the face vertices where it is tight; the maximal collections
// under inclusion are exactly the facets.
class Triangulator {
public:
    explicit Triangulator(const VPolytope& v) : v_(v) {}

    const std::vector<std::vector<int>>& run() {
        std::vector<int> all(v_.vertices.size());
        std::iota(all.begin(), all.end(), 0);
        return tri(all, v_.ambient_dim);
    }

private:
    const VPolytope& v_;
    std::map<std::vector<int>, std::vector<std::vector<int>>> memo_;

    const std::vector<std::vector<int>>& tri(const std::vector<int>& face, int k) {
        if (auto it = memo_.find(face); it != memo_.end()) return it->second;
        std::vector<std::vector<int>> out;
        if (face.size() == static_cast<std::size_t>(k) + 1) {
            out.push_back(face);
        } else {
            const std::size_t m = v_.incidence.front().size();
            IndexSet common = v_.incidence[static_cast<std::size_t>(face[0])];
            for (int id : face) common &= v_.incidence[static_cast<std::size_t>(id)];
            std::set<std::vector<int>> cands;
            for (std::size_t c = 0; c < m; ++c) {
                if (common.test(c)) continue;
                std::vector<int> tight;
                for (int id : face)
                    if (v_.incidence[static_cast<std::size_t>(id)].test(c)) tight.push_back(id);
                if (tight.size() >= static_cast<std::size_t>(k)) cands.insert(std::move(tight));
            }
            const int apex = face[0];
            for (const auto& facet : cands) {
                bool maximal = true;
                for (const auto& other : cands) {
                    if (&other == &facet || other.size() <= facet.size()) continue;
                    if (std::includes(other.begin(), other.end(), facet.begin(), facet.end())) {
                        maximal = false;
                        break;
                    }
                }
                if (!maximal) continue;
                if (std::binary_search(facet.begin(), facet.end(), apex)) continue;
                for (auto s : tri(facet, k - 1)) {
                    s.push_back(apex);
                    out.push_back(std::move(s));
                }
            }
        }
        return memo_.emplace(face, std::move(out)).first->second;
    }
};

}  // namespace

std::vector<Simplex> triangulate(const VPolytope& v) {
    if (affine_dimension(v.vertices) != v.ambient_dim)
        throw std::invalid_argument("triangulate: polytope is not full-dimensional");
    Triangulator t(v);
    std::vector<Simplex> out;
    for (const auto& ids : t.run()) {
        Simplex s;
        s.vertices.reserve(ids.size());
        for (int id : ids) s.vertices.push_back(v.vertices[static_cast<std::size_t>(id)]);
        out.push_back(std::move(s));
    }
    return out;
}

Rational simplex_volume(const Simplex& s) {
    if (s.vertices.empty()) throw std::invalid_argument("simplex_volume: no vertices");
    const std::size_t d = s.vertices.size() - 1;
    for (const auto& v : s.vertices)
        if (v.size() != d) throw std::invalid_argument("simplex_volume: needs d+1 vertices in dimension d");
    if (d == 0) return Rational(1);
    std::vector<RatVector> rows;
    rows.reserve(d);
    for (std::size_t i = 1; i <= d; ++i) rows.push_back(s.vertices[i] - s.vertices[0]);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(d));
    return determinant(RatMatrix(std::move(rows))).abs() / Rational(fact, 1);
}

Rational volume(const VPolytope& v) {
    if (v.vertices.empty()) return Rational(0);
    if (affine_dimension(v.vertices) != v.ambient_dim) return Rational(0);
    Rational total;
    for (const auto& s : triangulate(v)) total += simplex_volume(s);
    return total;
}

Rational volume(const HPolytope& p) { return volume(vertex_enumerate(p)); }

HPolytope product(const HPolytope& a, const HPolytope& b) {
    validate_hpolytope(a);
    validate_hpolytope(b);
    HPolytope out;
    out.ambient_dim = a.ambient_dim + b.ambient_dim;
    const auto na = static_cast<std::size_t>(a.ambient_dim);
    const auto nb = static_cast<std::size_t>(b.ambient_dim);
    for (const auto& h : a.halfspaces) {
        RatVector normal(na + nb);
        for (std::size_t i = 0; i < na; ++i) normal[i] = h.normal[i];
        out.halfspaces.push_back({h.offset, std::move(normal)});
    }
    for (const auto& h : b.halfspaces) {
        RatVector normal(na + nb);
        for (std::size_t i = 0; i < nb; ++i) normal[na + i] = h.normal[i];
        out.halfspaces.push_back({h.offset, std::move(normal)});
    }
    return out;
}

HPolytope parse_hpolytope(std::istream& in) {
    HPolytope p;
    bool have_dim = false;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (!have_dim) {
            if (tok != "dim") throw ParseError(line_no, "expected \"dim n\" header");
            long n = 0;
            if (!(ls >> n) || n < 1) throw ParseError(line_no, "dimension must be a positive integer");
            std::string extra;
            if (ls >> extra) throw ParseError(line_no, "trailing text after header");
            p.ambient_dim = static_cast<int>(n);
            have_dim = true;
            continue;
        }
        std::vector<Rational> xs;
        do {
            auto r = Rational::parse(tok);
            if (!r) throw ParseError(line_no, "bad rational \"" + tok + "\"");
            xs.push_back(*r);
        } while (ls >> tok);
        if (xs.size() != static_cast<std::size_t>(p.ambient_dim) + 1)
            throw ParseError(line_no, "expected " + std::to_string(p.ambient_dim + 1) + " values, got " +
                                          std::to_string(xs.size()));
        HalfSpace h;
        h.offset = xs[0];
        h.normal = RatVector(std::vector<Rational>(xs.begin() + 1, xs.end()));
        p.halfspaces.push_back(std::move(h));
    }
    if (!have_dim) throw ParseError(line_no + 1, "missing \"dim n\" header");
    return p;
}

std::string format_hpolytope(const HPolytope& p) {
    std::ostringstream os;
    os << "dim " << p.ambient_dim << "\n";
    for (const auto& h : p.halfspaces) {
        os << h.offset.str();
        for (std::size_t i = 0; i < h.normal.size(); ++i) os << " " << h.normal[i].str();
        os << "\n";
    }
    return os.str();
}

}  // namespace qdice
