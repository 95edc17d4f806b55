#include "isys/examples.hpp"

namespace isys {

namespace {

RegionSet cells(Space s, std::vector<Interval> c) { return RegionSet::normalize(s, std::move(c)); }

}  // namespace

PLMap doubling_map() { return PLMap::make(Space::Circle, {{0, 0}, {1, 2}}); }

PLMap tent_map() { return PLMap::make(Space::Line, {{-1, -3}, {rat(1, 2), rat(3, 2)}, {2, -3}}); }

IndexSystem doubling_system(const Scalar& e)
{
    IndexSystem s(Space::Circle);
    for (int i = 0; i < 10; ++i) {
        Scalar lo = (Scalar(i - 3) - 3 * e) / 10;
        Scalar hi = (Scalar(i + 3) + 3 * e) / 10;
        s.add_pair(CompactPair::make(std::to_string(i), cells(Space::Circle, {{lo, hi}}),
                                     cells(Space::Circle, {{lo, (Scalar(i - 1) - e) / 10}, {(Scalar(i + 1) + e) / 10, hi}})));
    }
    for (int i = 0; i < 10; ++i)
        for (int d = -1; d <= 1; ++d)
            s.add_edge(std::to_string(i), std::to_string(((2 * i + d) % 10 + 10) % 10));
    return s;
}

IndexSystem tent_system(const Scalar& e)
{
    const Space L = Space::Line;
    const Scalar third = rat(1, 3), two_thirds = rat(2, 3);
    IndexSystem s(L);
    RegionSet left = cells(L, {{-4 * e, third + 4 * e}});
    RegionSet right = cells(L, {{two_thirds - 4 * e, 1 + 4 * e}});
    s.add_pair(CompactPair::make("1", left, cells(L, {{-4 * e, -e}, {rat(1, 9) + e, third + 4 * e}})));
    s.add_pair(CompactPair::make("2", left, cells(L, {{-4 * e, rat(2, 9) - e}, {third + e, third + 4 * e}})));
    s.add_pair(CompactPair::make("3", right, cells(L, {{two_thirds - 4 * e, two_thirds - e}, {rat(7, 9) + e, 1 + 4 * e}})));
    s.add_pair(CompactPair::make("4", right, cells(L, {{two_thirds - 4 * e, rat(8, 9) - e}, {1 + e, 1 + 4 * e}})));
    for (const char* a : {"1", "4"})
        for (const char* b : {"1", "2"})
            s.add_edge(a, b);
    for (const char* a : {"2", "3"})
        for (const char* b : {"3", "4"})
            s.add_edge(a, b);
    return s;
}

IndexSystem trivial_tent_system(const Scalar& e)
{
    const Space L = Space::Line;
    IndexSystem s(L);
    s.add_pair(CompactPair::make("0", cells(L, {{-4 * e, 1 + 4 * e}}),
                                 cells(L, {{-4 * e, -e}, {rat(1, 3) + e, rat(2, 3) - e}, {1 + e, 1 + 4 * e}})));
    s.add_edge("0", "0");
    return s;
}

Example example(const std::string& name, const Scalar& eps)
{
    if (name == "doubling")
        return {name, doubling_map(), doubling_system(eps)};
    if (name == "tent")
        return {name, tent_map(), tent_system(eps)};
    if (name == "trivial")
        return {name, tent_map(), trivial_tent_system(eps)};
    throw std::invalid_argument("unknown example '" + name + "'");
}

std::vector<std::string> example_names() { return {"doubling", "tent", "trivial"}; }

}  // namespace isys
