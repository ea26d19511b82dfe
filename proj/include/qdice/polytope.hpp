#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdice/indexset.hpp"
#include "qdice/linalg.hpp"

namespace qdice {

/// Closed halfspace offset + dot(normal, x) >= 0.
struct HalfSpace {
    Rational offset;
    RatVector normal;

    Rational eval(const RatVector& x) const { return offset + dot(normal, x); }
};

/// Intersection of finitely many closed halfspaces in fixed ambient dimension.
struct HPolytope {
    int ambient_dim = 0;
    std::vector<HalfSpace> halfspaces;

    bool contains(const RatVector& x) const;
};

/// Vertex description produced by vertex_enumerate. incidence[i] has one
/// bit per input halfspace and marks the constraints tight at vertex i.
struct VPolytope {
    int ambient_dim = 0;
    std::vector<RatVector> vertices;
    std::vector<IndexSet> incidence;
};

/// Full-dimensional simplex given by dim+1 affinely independent vertices.
struct Simplex {
    std::vector<RatVector> vertices;
};

/// Thrown when an input polyhedron has an extreme ray. Every polytope in
/// this project is bounded by construction, so this signals a caller bug.
struct UnboundedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Text-format violation; line is 1-based.
struct ParseError : std::runtime_error {
    ParseError(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    int line;
};

/// All vertices of the (possibly empty, possibly lower-dimensional)
/// intersection, each with its exact tight set. Throws UnboundedError.
VPolytope vertex_enumerate(const HPolytope& p);

/// -1 for an empty set of points, else the dimension of their affine hull.
int affine_dimension(const std::vector<RatVector>& points);

/// -1 if empty, else dimension of the affine hull of the vertex set.
int dimension(const HPolytope& p);

/// Partition of a full-dimensional polytope into simplices sharing its
/// vertices. Throws std::invalid_argument when dim < ambient_dim.
std::vector<Simplex> triangulate(const VPolytope& v);

/// |det(v1-v0, ..., vd-v0)| / d!. Zero for a degenerate simplex.
Rational simplex_volume(const Simplex& s);

/// Exact volume: 0 when empty or not full-dimensional, UnboundedError when
/// unbounded, else the sum over a triangulation.
Rational volume(const HPolytope& p);
Rational volume(const VPolytope& v);

/// Cartesian product: block-diagonal constraint matrix, a's rows first.
HPolytope product(const HPolytope& a, const HPolytope& b);

/// Text format: a "dim n" header line, then one halfspace per line as
/// offset followed by n normal coefficients ("p" or "p/q" tokens).
/// Lines whose first nonblank character is '#' and blank lines are skipped.
HPolytope parse_hpolytope(std::istream& in);
std::string format_hpolytope(const HPolytope& p);

}  // namespace qdice
