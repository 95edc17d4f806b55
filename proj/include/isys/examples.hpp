/**
 * Built-in example maps and index systems: the doubling map with ten pairs,
 * the tent map with four pairs and the single trivial tent pair.
 */
#ifndef ISYS_EXAMPLES_HPP
#define ISYS_EXAMPLES_HPP

#include <string>
#include <vector>

#include "isys/dynamics.hpp"
#include "isys/index_core.hpp"

namespace isys {

PLMap doubling_map();
PLMap tent_map();

IndexSystem doubling_system(const Scalar& eps);
IndexSystem tent_system(const Scalar& eps);
IndexSystem trivial_tent_system(const Scalar& eps);

struct Example {
    std::string name;
    PLMap map;
    IndexSystem system;
};

/// Names: "doubling", "tent", "trivial". Throws std::invalid_argument otherwise.
Example example(const std::string& name, const Scalar& eps);
std::vector<std::string> example_names();

}  // namespace isys

#endif
