/**
 * Index systems for the doubling map, the tent map and the single trivial
 * tent pair, built at a given epsilon.
 */
#ifndef ISYS_TEST_FIXTURES_HPP
#define ISYS_TEST_FIXTURES_HPP

#include <string>

#include "isys/dynamics.hpp"
#include "isys/index_core.hpp"

namespace fixtures {

using isys::Interval;
using isys::RegionSet;
using isys::Scalar;
using isys::Space;

inline Scalar eps_default() { return isys::rat(1, 100); }

inline isys::PLMap doubling_map()
{
    return isys::PLMap::make(Space::Circle, {{0, 0}, {1, 2}});
}

inline isys::PLMap tent_map()
{
    return isys::PLMap::make(Space::Line, {{-1, -3}, {isys::rat(1, 2), isys::rat(3, 2)}, {2, -3}});
}

inline RegionSet set(Space s, std::vector<Interval> cells)
{
    return RegionSet::normalize(s, std::move(cells));
}

inline isys::IndexSystem doubling_system(const Scalar& e = eps_default())
{
    isys::IndexSystem s(Space::Circle);
    for (int i = 0; i < 10; ++i) {
        Scalar lo = (Scalar(i - 3) - 3 * e) / 10;
        Scalar hi = (Scalar(i + 3) + 3 * e) / 10;
        RegionSet n = set(Space::Circle, {{lo, hi}});
        RegionSet l = set(Space::Circle, {{lo, (Scalar(i - 1) - e) / 10}, {(Scalar(i + 1) + e) / 10, hi}});
        s.add_pair(isys::CompactPair::make(std::to_string(i), n, l));
    }
    for (int i = 0; i < 10; ++i)
        for (int d = -1; d <= 1; ++d)
            s.add_edge(std::to_string(i), std::to_string(((2 * i + d) % 10 + 10) % 10));
    return s;
}

inline isys::IndexSystem tent_system(const Scalar& e = eps_default())
{
    const Space L = Space::Line;
    const Scalar third = isys::rat(1, 3), two_thirds = isys::rat(2, 3);
    isys::IndexSystem s(L);
    RegionSet left = set(L, {{-4 * e, third + 4 * e}});
    RegionSet right = set(L, {{two_thirds - 4 * e, 1 + 4 * e}});
    s.add_pair(isys::CompactPair::make(
        "1", left, set(L, {{-4 * e, -e}, {isys::rat(1, 9) + e, third + 4 * e}})));
    s.add_pair(isys::CompactPair::make(
        "2", left, set(L, {{-4 * e, isys::rat(2, 9) - e}, {third + e, third + 4 * e}})));
    s.add_pair(isys::CompactPair::make(
        "3", right, set(L, {{two_thirds - 4 * e, two_thirds - e}, {isys::rat(7, 9) + e, 1 + 4 * e}})));
    s.add_pair(isys::CompactPair::make(
        "4", right, set(L, {{two_thirds - 4 * e, isys::rat(8, 9) - e}, {1 + e, 1 + 4 * e}})));
    for (const char* a : {"1", "4"})
        for (const char* b : {"1", "2"})
            s.add_edge(a, b);
    for (const char* a : {"2", "3"})
        for (const char* b : {"3", "4"})
            s.add_edge(a, b);
    return s;
}

inline isys::IndexSystem trivial_tent_system(const Scalar& e = eps_default())
{
    const Space L = Space::Line;
    isys::IndexSystem s(L);
    s.add_pair(isys::CompactPair::make(
        "0", set(L, {{-4 * e, 1 + 4 * e}}),
        set(L, {{-4 * e, -e}, {isys::rat(1, 3) + e, isys::rat(2, 3) - e}, {1 + e, 1 + 4 * e}})));
    s.add_edge("0", "0");
    return s;
}

}  // namespace fixtures

#endif
