/**
 * Index systems from index pairs of f x f near the diagonal: a strip
 * template in the square, discretization to a grid, and slicing of the grid
 * pair into 1-D pairs.
 */
#ifndef ISYS_CONSTRUCT_HPP
#define ISYS_CONSTRUCT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "isys/dynamics.hpp"
#include "isys/geometry.hpp"
#include "isys/index_core.hpp"

namespace isys {

/// A pair (N, L) in the square made of grid boxes, with L inside N.
struct ProductPair {
    GridRegion N;
    GridRegion L;

    std::int64_t k() const { return N.k(); }
    bool periodic() const { return N.periodic(); }
    GridRegion core() const { return grid_difference(N, L); }
    friend bool operator==(const ProductPair&, const ProductPair&) = default;
};

/// Raised when a discretized pair fails re-verification; retry with a finer grid.
class RefineDelta : public std::runtime_error {
public:
    RefineDelta(Scalar delta, const std::string& why);
    Scalar delta;
    Scalar suggested;
};

class ConstructionError : public std::runtime_error {
public:
    explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

struct ProductCheck {
    bool ok = false;
    std::vector<Box> exit_violations;   // core boxes whose image leaves Int N
    std::vector<Box> image_violations;  // L boxes whose image meets the core
    bool meets_diagonal = false;        // core contains a diagonal box
    std::string reason() const;
};

/// Index-pair conditions for f x f on a grid pair, from exact box images.
ProductCheck check_product_pair(const ProductPair& p, const PLMap& f);

/// Column (and row) range of the grid covering the map's domain.
std::pair<std::int64_t, std::int64_t> grid_range(const PLMap& f, std::int64_t k);

/// Diagonal strip |i - j| <= w/step with the outer c/step diagonals in L, on
/// the grid 1/lcm(den w, den c), then completed: core boxes whose image
/// leaves Int N, or that the image of L touches, are moved to L until stable.
ProductPair strip_template(const PLMap& f, const Scalar& w, const Scalar& c);

/// Regrids the pair to step delta (boxes meeting N, resp. L) and re-verifies.
/// Grids must divide one another. Throws RefineDelta or GridMisalignment.
ProductPair discretize(const ProductPair& p, const PLMap& f, const Scalar& delta);

struct Slab {
    std::int64_t col = 0;
    std::optional<std::size_t> slice;  // index into SliceFamily::slices
};

struct SliceFamily {
    std::vector<CompactPair> slices;        // distinct slices, labelled s0, s1, ...
    std::vector<std::size_t> multiplicity;  // slabs per slice
    std::vector<bool> empty_core;
    std::vector<Slab> slabs;
    std::vector<std::int64_t> empty_slabs;  // columns with an empty slice
};

SliceFamily slice_system(const ProductPair& p);

struct Assembly {
    IndexSystem system;
    VerificationReport report;
    std::vector<std::pair<std::string, std::string>> slab_edges;  // before the precedes filter
    std::vector<std::string> pruned;                              // slices without a valid outgoing edge
};

/// Builds the index system on the slices and verifies it. Throws
/// ConstructionError unless the result is VERIFIED.
Assembly assemble(const ProductPair& p, const SliceFamily& slices, const PLMap& f);

struct Construction {
    ProductPair input;
    ProductPair discrete;
    SliceFamily slices;
    Assembly assembly;
};

Construction construct(const PLMap& f, const ProductPair& input, const Scalar& delta);
Construction construct_from_template(const PLMap& f, const Scalar& w, const Scalar& c, const Scalar& delta);

}  // namespace isys

#endif
