#include "isys/homology.hpp"

#include "isys/index_core.hpp"

namespace isys {

bool GradedSpace::is_zero() const
{
    for (auto d : dims)
        if (d)
            return false;
    return true;
}

PairHomology pair_homology(const CompactPair& p)
{
    for (const RegionSet* r : {&p.N, &p.L})
        for (const auto& c : r->cells())
            if (c.degenerate())
                throw std::invalid_argument("pair '" + p.label + "' is not regular closed");

    PairHomology h;
    RegionSet core = pair_core(p);
    for (const auto& c : core.cells()) {
        CoreComponent comp;
        comp.span = c;
        if (core.is_full_circle()) {
            comp.whole_circle = true;
            h.components.push_back(comp);
            h.degree0_basis.push_back(comp);
            h.degree1_basis.push_back(comp);
            continue;
        }
        comp.lower_in_L = p.L.contains(c.lo);
        comp.upper_in_L = p.L.contains(c.hi);
        h.components.push_back(comp);
        if (comp.lower_in_L && comp.upper_in_L)
            h.degree1_basis.push_back(comp);
        else if (!comp.lower_in_L && !comp.upper_in_L)
            h.degree0_basis.push_back(comp);
    }
    h.space.dims = {h.degree0_basis.size(), h.degree1_basis.size()};
    return h;
}

namespace {

bool congruent(const Scalar& a, const Scalar& b, Space space)
{
    if (space == Space::Line)
        return a == b;
    return is_integer(a - b);
}

/// A probe strictly inside the component that no branch image ends on.
Scalar choose_probe(const CoreComponent& comp, const std::vector<Branch>& branches, Space space)
{
    const Scalar lo = comp.whole_circle ? Scalar(0) : comp.span.lo;
    const Scalar len = comp.whole_circle ? Scalar(1) : comp.span.length();
    for (long den = 2; den < 64; ++den) {
        for (long num = 1; num < den; ++num) {
            Scalar probe = lo + len * Scalar(num) / Scalar(den);
            bool clash = false;
            for (const auto& b : branches)
                if (congruent(b.image.lo, probe, space) || congruent(b.image.hi, probe, space))
                    clash = true;
            if (!clash)
                return probe;
        }
    }
    throw UndecidedCrossing("no regular value found in component " + to_string(comp.span));
}

}  // namespace

Crossing degree_count(const Branch& branch, const CoreComponent& component, const Scalar& probe, Space space)
{
    if (!component.whole_circle) {
        for (const auto& e : {branch.image.lo, branch.image.hi})
            for (const auto& c : {component.span.lo, component.span.hi})
                if (congruent(e, c, space))
                    return {false, 0};
    }
    for (const auto& e : {branch.image.lo, branch.image.hi})
        if (congruent(e, probe, space))
            return {false, 0};

    int count = 0;
    if (space == Space::Line) {
        count = branch.image.lo < probe && probe < branch.image.hi ? 1 : 0;
    }
    else {
        Integer n0 = floor_int(branch.image.lo - probe) + 1;
        Integer n1 = ceil_int(branch.image.hi - probe) - 1;
        if (n1 >= n0)
            count = static_cast<int>(to_int64(n1 - n0 + 1));
    }
    return {true, branch.orientation * count};
}

InducedMap degree_matrices(const CompactPair& pa, const CompactPair& pb, const PLMap& f)
{
    const Space space = f.space();
    PairHomology ha = pair_homology(pa);
    PairHomology hb = pair_homology(pb);

    InducedMap m;
    m.source = pa.label;
    m.target = pb.label;

    Matrix d0(hb.degree0_basis.size(), ha.degree0_basis.size());
    for (std::size_t i = 0; i < ha.degree0_basis.size(); ++i) {
        const auto& ci = ha.degree0_basis[i];
        RegionSet img = image(f, RegionSet::normalize(space, {ci.span}));
        for (std::size_t j = 0; j < hb.degree0_basis.size(); ++j)
            if (!disjoint(img, RegionSet::normalize(space, {hb.degree0_basis[j].span})))
                d0(j, i) = 1;
    }

    Matrix d1(hb.degree1_basis.size(), ha.degree1_basis.size());
    for (std::size_t i = 0; i < ha.degree1_basis.size(); ++i) {
        const auto& ci = ha.degree1_basis[i];
        Interval dom = ci.whole_circle ? Interval{0, 1} : ci.span;
        auto branches = monotone_branches(f, dom);
        for (std::size_t j = 0; j < hb.degree1_basis.size(); ++j) {
            const auto& cj = hb.degree1_basis[j];
            Scalar probe = choose_probe(cj, branches, space);
            int total = 0;
            for (const auto& br : branches) {
                Crossing c = degree_count(br, cj, probe, space);
                if (!c.decided)
                    throw UndecidedCrossing("branch over " + to_string(br.dom) + " ends on the boundary of component " +
                                            to_string(cj.span) + " of '" + pb.label + "'; refine the pairs");
                total += c.value;
            }
            d1(j, i) = total;
        }
    }
    m.by_degree = {std::move(d0), std::move(d1)};
    return m;
}

InducedMap induced_map(const CompactPair& pa, const CompactPair& pb, const PLMap& f)
{
    if (!check_precedes(pa, pb, f).holds)
        throw PrecedesViolation("'" + pa.label + "' does not precede '" + pb.label + "'");
    return degree_matrices(pa, pb, f);
}

}  // namespace isys
