/**
 * Continuous piecewise-affine maps of the line and the circle with rational
 * data, their exact images and preimages, and the product map f x f acting on
 * grid regions of the square.
 */
#ifndef ISYS_DYNAMICS_HPP
#define ISYS_DYNAMICS_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "isys/geometry.hpp"

namespace isys {

class DomainEscape : public std::invalid_argument {
public:
    explicit DomainEscape(const std::string& what) : std::invalid_argument(what) {}
};

class MapSpecError : public std::invalid_argument {
public:
    explicit MapSpecError(const std::string& what) : std::invalid_argument(what) {}
};

/// A vertex (x, f(x)) of the graph of a PL map. For circle maps, y is a lift.
struct Vertex {
    Scalar x;
    Scalar y;
    friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Affine piece y = slope * x + offset over dom (lift coordinates).
struct Piece {
    Interval dom;
    Scalar slope;
    Scalar offset;

    Scalar at(const Scalar& x) const { return slope * x + offset; }
    Interval image() const;
};

/// Maximal affine subinterval with the sign of its slope.
struct Branch {
    Interval dom;
    int orientation;
    Interval image;
};

class PLMap {
public:
    /// Line maps: the graph through the given vertices, domain [x_0, x_n].
    /// Circle maps: a lift on [0, 1] with x_0 = 0, x_n = 1 and integer
    /// y_n - y_0 (the degree); extended by F(x + 1) = F(x) + degree.
    static PLMap make(Space space, std::vector<Vertex> vertices);

    static PLMap identity(Space space, Scalar lo = 0, Scalar hi = 1);

    Space space() const { return space_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    std::vector<Scalar> breakpoints() const;
    RegionSet domain() const;
    Interval domain_hull() const;
    Integer degree() const;

    /// Lift value. Line maps throw DomainEscape outside the domain.
    Scalar lift(const Scalar& x) const;

    /// Point value in the codomain (reduced mod 1 on the circle).
    Scalar eval(const Scalar& x) const;

    /// Affine pieces covering the lift interval, adjacent equal rules merged.
    std::vector<Piece> pieces_over(const Interval& cell) const;

    /// Image of a connected cell as a lift interval.
    Interval lift_image(const Interval& cell) const;

    friend bool operator==(const PLMap&, const PLMap&) = default;

private:
    Space space_ = Space::Line;
    std::vector<Vertex> vertices_;
};

RegionSet image(const PLMap& f, const RegionSet& a);
RegionSet preimage(const PLMap& f, const RegionSet& b);

/// f iterated n times on a region.
RegionSet image_power(const PLMap& f, const RegionSet& a, int n);

std::vector<Branch> monotone_branches(const PLMap& f, const Interval& cell);

/// g o f restricted to `cell`. Line results have domain `cell`; for circle maps
/// pass [0, 1] to obtain a circle map.
PLMap compose(const PLMap& g, const PLMap& f, const Interval& cell);

/// f composed with itself n >= 1 times over `cell`.
PLMap power(const PLMap& f, int n, const Interval& cell);

/// (x, y) -> (f(x), f(y)).
struct ProductMap {
    PLMap factor;
};

/// Grid-aligned outer enclosure of (f x f)(A): every box whose interior meets
/// the exact image.
GridRegion box_image(const ProductMap& F, const GridRegion& a);

/// Exact image of one box as a pair of lift intervals.
std::pair<Interval, Interval> exact_box_image(const ProductMap& F, const Box& b, std::int64_t k);

/// Points x with f^i(x) in cores[i] for 0 <= i < p and f^p(x) = x, where p is
/// the number of cores. Solved exactly, branch by branch. Throws when a whole
/// interval of such points exists (the orbit is not isolated).
std::vector<Scalar> periodic_points(const PLMap& f, const std::vector<RegionSet>& cores);

}  // namespace isys

#endif
