/**
 * Exact set algebra for finite unions of closed rational intervals on the line
 * or on the circle R/Z, and for unions of grid boxes in the square.
 */
#ifndef ISYS_GEOMETRY_HPP
#define ISYS_GEOMETRY_HPP

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "isys/rational.hpp"

namespace isys {

enum class Space { Line, Circle };

std::string to_string(Space s);

/// Closed interval [lo, hi]. On the circle this is an arc given by a lift.
struct Interval {
    Scalar lo;
    Scalar hi;

    Scalar length() const { return hi - lo; }
    bool degenerate() const { return lo == hi; }
    bool contains(const Scalar& x) const { return lo <= x && x <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

std::string to_string(const Interval& c);

class EmptyCellError : public std::invalid_argument {
public:
    explicit EmptyCellError(const Interval& cell);
    Interval cell;
};

class SpaceMismatch : public std::invalid_argument {
public:
    SpaceMismatch() : std::invalid_argument("operands live in different spaces") {}
};

class GridMisalignment : public std::invalid_argument {
public:
    explicit GridMisalignment(const std::string& what) : std::invalid_argument(what) {}
};

/// Finite union of closed cells in one 1-D space, kept in canonical form.
///
/// Line: cells sorted, pairwise disjoint, merged when touching.
/// Circle: arcs [lo, hi] with lo in [0,1) and hi - lo < 1, sorted by lo and
/// pairwise disjoint on the circle; the whole circle is the single arc [0,1].
class RegionSet {
public:
    RegionSet() = default;
    explicit RegionSet(Space space) : space_(space) {}

    /// Canonicalizes an arbitrary cell list. Throws EmptyCellError on a > b.
    static RegionSet normalize(Space space, std::vector<Interval> cells);
    static RegionSet interval(Space space, Scalar lo, Scalar hi) { return normalize(space, {{std::move(lo), std::move(hi)}}); }
    static RegionSet full_circle() { return normalize(Space::Circle, {{0, 1}}); }

    Space space() const { return space_; }
    const std::vector<Interval>& cells() const { return cells_; }
    bool empty() const { return cells_.empty(); }
    bool is_full_circle() const;

    /// Cells with positive length (the parts that carry interior).
    std::vector<Interval> regular_cells() const;

    bool contains(const Scalar& x) const;

    /// Total one-dimensional measure.
    Scalar measure() const;

    /// Convex hull (Line only); throws on an empty set.
    Interval hull() const;

    /// Drops point cells.
    RegionSet without_points() const;

    /// Representation on [0,1] where arcs through 0 contribute both 0 and 1,
    /// so ordinary interval algebra on the result is correct on the circle.
    std::vector<Interval> unrolled() const;

    friend bool operator==(const RegionSet&, const RegionSet&) = default;

private:
    Space space_ = Space::Line;
    std::vector<Interval> cells_;
};

std::string to_string(const RegionSet& r);

RegionSet unite(const RegionSet& a, const RegionSet& b);
RegionSet intersect(const RegionSet& a, const RegionSet& b);
bool disjoint(const RegionSet& a, const RegionSet& b);
bool subset(const RegionSet& a, const RegionSet& b);

/// X \ Int(b), a closed set. On the line the result is clipped to `universe`.
RegionSet interior_complement(const RegionSet& b, const Interval& universe);

/// A is contained in the interior of B, decided exactly.
bool subset_of_interior(const RegionSet& a, const RegionSet& b);

/// cl(n \ l). Assumes n is regular closed.
RegionSet closure_of_difference(const RegionSet& n, const RegionSet& l);

/// A compact pair (N, L) with L inside N, both regular closed.
struct CompactPair {
    std::string label;
    RegionSet N;
    RegionSet L;

    /// Validates the pair invariants; throws std::invalid_argument.
    static CompactPair make(std::string label, RegionSet n, RegionSet l);

    Space space() const { return N.space(); }
    friend bool operator==(const CompactPair&, const CompactPair&) = default;
};

/// The core cl(N \ L).
RegionSet pair_core(const CompactPair& p);

// ---------------------------------------------------------------------------
// Square space

/// Grid box [col/k, (col+1)/k] x [row/k, (row+1)/k].
struct Box {
    std::int64_t col;
    std::int64_t row;
    friend auto operator<=>(const Box&, const Box&) = default;
};

/// Union of grid boxes at step 1/k. A periodic region lives on the torus
/// (Circle x Circle) and keeps indices in [0, k).
class GridRegion {
public:
    GridRegion() = default;
    GridRegion(std::int64_t k, bool periodic);

    std::int64_t k() const { return k_; }
    Scalar step() const { return Scalar(1) / Scalar(k_); }
    bool periodic() const { return periodic_; }
    Space factor_space() const { return periodic_ ? Space::Circle : Space::Line; }
    const std::set<Box>& boxes() const { return boxes_; }
    bool empty() const { return boxes_.empty(); }
    std::size_t size() const { return boxes_.size(); }

    void insert(Box b);
    void erase(const Box& b) { boxes_.erase(b); }
    bool contains(const Box& b) const { return boxes_.count(wrap(b)) != 0; }

    Box wrap(Box b) const;
    std::int64_t wrap_index(std::int64_t i) const;

    /// Column indices (sorted, unique) occupied by at least one box.
    std::vector<std::int64_t> columns() const;

    friend bool operator==(const GridRegion&, const GridRegion&) = default;

private:
    std::int64_t k_ = 1;
    bool periodic_ = false;
    std::set<Box> boxes_;
};

GridRegion grid_union(const GridRegion& a, const GridRegion& b);
GridRegion grid_difference(const GridRegion& a, const GridRegion& b);

/// Grid indices of cells [c/k, (c+1)/k] whose interior meets the closed
/// interval [lo, hi]. A degenerate interval meets no interior unless it lies
/// strictly inside a cell.
std::pair<std::int64_t, std::int64_t> open_raster(const Interval& iv, std::int64_t k);

/// Grid indices of cells meeting the closed interval (touching counts).
std::pair<std::int64_t, std::int64_t> closed_raster(const Interval& iv, std::int64_t k);

/// a x b as a union of grid boxes. Every endpoint must be a multiple of 1/k.
GridRegion product(const RegionSet& a, const RegionSet& b, std::int64_t k);

/// pi_2(({x} x X) cap A).
RegionSet slice(const GridRegion& a, const Scalar& x);

/// Slice over the open column slab (col/k, (col+1)/k).
RegionSet slab_slice(const GridRegion& a, std::int64_t col);

}  // namespace isys

#endif
