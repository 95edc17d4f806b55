/**
 * Rational homology of 1-D pointed pairs N/L and the maps induced by a PL map,
 * computed by counting signed crossings of monotone branches.
 *
 * Every generator in degree one is a component of cl(N \ L) whose two ends
 * lie in L; it is oriented by increasing coordinate (the counterclockwise
 * lift on the circle). Degree-zero generators are components of N that miss L
 * entirely (reduced homology of the pointed space).
 */
#ifndef ISYS_HOMOLOGY_HPP
#define ISYS_HOMOLOGY_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "isys/dynamics.hpp"
#include "isys/geometry.hpp"
#include "isys/matrix.hpp"

namespace isys {

struct GradedSpace {
    std::vector<std::size_t> dims{0, 0};

    std::size_t dim(std::size_t k) const { return k < dims.size() ? dims[k] : 0; }
    bool is_zero() const;
    friend bool operator==(const GradedSpace&, const GradedSpace&) = default;
};

struct CoreComponent {
    Interval span;
    bool lower_in_L = false;
    bool upper_in_L = false;
    bool whole_circle = false;
};

struct PairHomology {
    GradedSpace space;
    std::vector<CoreComponent> components;     // every component of the core
    std::vector<CoreComponent> degree0_basis;
    std::vector<CoreComponent> degree1_basis;
};

PairHomology pair_homology(const CompactPair& p);

/// f_{a,b*}: one matrix per degree, shaped target dim x source dim.
struct InducedMap {
    std::string source;
    std::string target;
    std::vector<Matrix> by_degree;

    const Matrix& degree(std::size_t k) const { return by_degree.at(k); }
};

class UndecidedCrossing : public std::runtime_error {
public:
    explicit UndecidedCrossing(const std::string& what) : std::runtime_error(what) {}
};

class PrecedesViolation : public std::invalid_argument {
public:
    explicit PrecedesViolation(const std::string& what) : std::invalid_argument(what) {}
};

struct Crossing {
    bool decided = true;
    int value = 0;
};

/// Signed count of the branch passing over `probe` inside the component.
/// Undecided when the branch image ends exactly on the component boundary or
/// on the probe.
Crossing degree_count(const Branch& branch, const CoreComponent& component, const Scalar& probe, Space space);

/// Induced map for an edge; checks the precedes conditions first.
InducedMap induced_map(const CompactPair& pa, const CompactPair& pb, const PLMap& f);

/// Degree counting without the precedes check. Well defined whenever f maps
/// the ends of every source component off the target core (e.g. f^2 along a
/// path a -> b -> c).
InducedMap degree_matrices(const CompactPair& pa, const CompactPair& pb, const PLMap& f);

}  // namespace isys

#endif
