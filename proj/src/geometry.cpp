#include "isys/geometry.hpp"

#include <algorithm>
#include <limits>

namespace isys {

std::string to_string(Space s)
{
    return s == Space::Line ? "line" : "circle";
}

std::string to_string(const Interval& c)
{
    return "[" + to_string(c.lo) + ", " + to_string(c.hi) + "]";
}

EmptyCellError::EmptyCellError(const Interval& c)
    : std::invalid_argument("empty cell " + to_string(c) + " (lower end exceeds upper end)"), cell(c)
{
}

namespace {

void sort_and_merge(std::vector<Interval>& cells)
{
    if (cells.empty())
        return;
    std::sort(cells.begin(), cells.end(), [](const Interval& a, const Interval& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    std::vector<Interval> out;
    out.reserve(cells.size());
    for (auto& c : cells) {
        if (!out.empty() && c.lo <= out.back().hi) {
            if (c.hi > out.back().hi)
                out.back().hi = c.hi;
        }
        else {
            out.push_back(std::move(c));
        }
    }
    cells = std::move(out);
}

std::vector<Interval> line_intersection(const std::vector<Interval>& a, const std::vector<Interval>& b)
{
    std::vector<Interval> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const Scalar& lo = std::max(a[i].lo, b[j].lo);
        const Scalar& hi = std::min(a[i].hi, b[j].hi);
        if (lo <= hi)
            out.push_back({lo, hi});
        if (a[i].hi < b[j].hi)
            ++i;
        else
            ++j;
    }
    return out;
}

Interval expanded_hull(const RegionSet& a, const RegionSet& b)
{
    Scalar lo = 0, hi = 0;
    bool first = true;
    for (const RegionSet* r : {&a, &b}) {
        for (const auto& c : r->cells()) {
            if (first || c.lo < lo)
                lo = c.lo;
            if (first || c.hi > hi)
                hi = c.hi;
            first = false;
        }
    }
    return {lo - 1, hi + 1};
}

}  // namespace

RegionSet RegionSet::normalize(Space space, std::vector<Interval> cells)
{
    for (const auto& c : cells)
        if (c.lo > c.hi)
            throw EmptyCellError(c);

    RegionSet r(space);
    if (space == Space::Line) {
        sort_and_merge(cells);
        r.cells_ = std::move(cells);
        return r;
    }

    std::vector<Interval> split;
    for (const auto& c : cells) {
        if (c.hi - c.lo >= 1) {
            r.cells_ = {{0, 1}};
            return r;
        }
        Scalar a = frac(c.lo);
        Scalar b = a + (c.hi - c.lo);
        if (b <= 1) {
            if (a == 1)
                a = b = 0;
            split.push_back({a, b});
        }
        else {
            split.push_back({a, 1});
            split.push_back({0, b - 1});
        }
    }
    for (auto& c : split)
        if (c.lo == 1)
            c = {0, 0};
    sort_and_merge(split);
    if (split.size() == 1 && split[0].lo == 0 && split[0].hi == 1) {
        r.cells_ = std::move(split);
        return r;
    }
    if (split.size() >= 2 && split.front().lo == 0 && split.back().hi == 1) {
        Interval wrap{split.back().lo, 1 + split.front().hi};
        split.pop_back();
        split.erase(split.begin());
        split.push_back(std::move(wrap));
    }
    r.cells_ = std::move(split);
    return r;
}

bool RegionSet::is_full_circle() const
{
    return space_ == Space::Circle && cells_.size() == 1 && cells_[0].lo == 0 && cells_[0].hi == 1;
}

std::vector<Interval> RegionSet::regular_cells() const
{
    std::vector<Interval> out;
    for (const auto& c : cells_)
        if (!c.degenerate())
            out.push_back(c);
    return out;
}

std::vector<Interval> RegionSet::unrolled() const
{
    if (space_ == Space::Line)
        return cells_;
    std::vector<Interval> out;
    for (const auto& c : cells_) {
        if (c.hi <= 1) {
            out.push_back(c);
            if (c.lo == 0)
                out.push_back({1, 1});
            if (c.hi == 1)
                out.push_back({0, 0});
        }
        else {
            out.push_back({c.lo, 1});
            out.push_back({0, c.hi - 1});
        }
    }
    sort_and_merge(out);
    return out;
}

bool RegionSet::contains(const Scalar& x) const
{
    if (space_ == Space::Line) {
        for (const auto& c : cells_)
            if (c.contains(x))
                return true;
        return false;
    }
    Scalar y = frac(x);
    for (const auto& c : unrolled())
        if (c.contains(y))
            return true;
    return false;
}

Scalar RegionSet::measure() const
{
    Scalar m = 0;
    for (const auto& c : cells_)
        m += c.length();
    return m;
}

Interval RegionSet::hull() const
{
    if (space_ != Space::Line)
        throw std::logic_error("hull is defined for line regions only");
    if (cells_.empty())
        throw std::logic_error("hull of an empty region");
    return {cells_.front().lo, cells_.back().hi};
}

RegionSet RegionSet::without_points() const
{
    RegionSet r(space_);
    r.cells_ = regular_cells();
    return r;
}

std::string to_string(const RegionSet& r)
{
    if (r.empty())
        return "{}";
    std::string s;
    for (const auto& c : r.cells()) {
        if (!s.empty())
            s += " u ";
        s += to_string(c);
    }
    return s;
}

RegionSet unite(const RegionSet& a, const RegionSet& b)
{
    if (a.space() != b.space())
        throw SpaceMismatch();
    std::vector<Interval> cells = a.cells();
    cells.insert(cells.end(), b.cells().begin(), b.cells().end());
    return RegionSet::normalize(a.space(), std::move(cells));
}

RegionSet intersect(const RegionSet& a, const RegionSet& b)
{
    if (a.space() != b.space())
        throw SpaceMismatch();
    return RegionSet::normalize(a.space(), line_intersection(a.unrolled(), b.unrolled()));
}

bool disjoint(const RegionSet& a, const RegionSet& b)
{
    if (a.space() != b.space())
        throw SpaceMismatch();
    return line_intersection(a.unrolled(), b.unrolled()).empty();
}

bool subset(const RegionSet& a, const RegionSet& b)
{
    return intersect(a, b) == a;
}

RegionSet interior_complement(const RegionSet& b, const Interval& universe)
{
    std::vector<Interval> regular = b.regular_cells();
    std::vector<Interval> gaps;
    if (b.space() == Space::Line) {
        Scalar start = universe.lo;
        for (const auto& c : regular) {
            if (start <= c.lo)
                gaps.push_back({start, std::min(c.lo, universe.hi)});
            if (c.hi > start)
                start = c.hi;
        }
        if (start <= universe.hi)
            gaps.push_back({start, universe.hi});
        std::erase_if(gaps, [](const Interval& g) { return g.lo > g.hi; });
        return RegionSet::normalize(Space::Line, std::move(gaps));
    }
    if (regular.empty())
        return RegionSet::full_circle();
    if (b.is_full_circle())
        return RegionSet(Space::Circle);
    for (std::size_t i = 0; i + 1 < regular.size(); ++i)
        gaps.push_back({regular[i].hi, regular[i + 1].lo});
    gaps.push_back({regular.back().hi, regular.front().lo + 1});
    return RegionSet::normalize(Space::Circle, std::move(gaps));
}

bool subset_of_interior(const RegionSet& a, const RegionSet& b)
{
    if (a.space() != b.space())
        throw SpaceMismatch();
    if (a.empty())
        return true;
    return disjoint(a, interior_complement(b, expanded_hull(a, b)));
}

RegionSet closure_of_difference(const RegionSet& n, const RegionSet& l)
{
    if (n.space() != l.space())
        throw SpaceMismatch();
    if (n.empty())
        return n;
    return intersect(n, interior_complement(l, expanded_hull(n, l))).without_points();
}

CompactPair CompactPair::make(std::string label, RegionSet n, RegionSet l)
{
    if (n.space() != l.space())
        throw SpaceMismatch();
    for (const RegionSet* r : {&n, &l})
        for (const auto& c : r->cells())
            if (c.degenerate())
                throw std::invalid_argument("pair '" + label + "': point cell " + to_string(c) +
                                            " is not the closure of its interior");
    if (!subset(l, n))
        throw std::invalid_argument("pair '" + label + "': L is not contained in N");
    return CompactPair{std::move(label), std::move(n), std::move(l)};
}

RegionSet pair_core(const CompactPair& p)
{
    return closure_of_difference(p.N, p.L);
}

// ---------------------------------------------------------------------------

GridRegion::GridRegion(std::int64_t k, bool periodic) : k_(k), periodic_(periodic)
{
    if (k <= 0)
        throw std::invalid_argument("grid resolution must be positive");
}

std::int64_t GridRegion::wrap_index(std::int64_t i) const
{
    if (!periodic_)
        return i;
    std::int64_t m = i % k_;
    return m < 0 ? m + k_ : m;
}

Box GridRegion::wrap(Box b) const
{
    return {wrap_index(b.col), wrap_index(b.row)};
}

void GridRegion::insert(Box b)
{
    boxes_.insert(wrap(b));
}

std::vector<std::int64_t> GridRegion::columns() const
{
    std::vector<std::int64_t> cols;
    for (const auto& b : boxes_)
        if (cols.empty() || cols.back() != b.col)
            cols.push_back(b.col);
    return cols;
}

GridRegion grid_union(const GridRegion& a, const GridRegion& b)
{
    if (a.k() != b.k() || a.periodic() != b.periodic())
        throw GridMisalignment("grid regions use different grids");
    GridRegion out = a;
    for (const auto& box : b.boxes())
        out.insert(box);
    return out;
}

GridRegion grid_difference(const GridRegion& a, const GridRegion& b)
{
    if (a.k() != b.k() || a.periodic() != b.periodic())
        throw GridMisalignment("grid regions use different grids");
    GridRegion out(a.k(), a.periodic());
    for (const auto& box : a.boxes())
        if (!b.contains(box))
            out.insert(box);
    return out;
}

std::pair<std::int64_t, std::int64_t> open_raster(const Interval& iv, std::int64_t k)
{
    Scalar K(k);
    return {to_int64(floor_int(iv.lo * K)), to_int64(ceil_int(iv.hi * K)) - 1};
}

std::pair<std::int64_t, std::int64_t> closed_raster(const Interval& iv, std::int64_t k)
{
    Scalar K(k);
    return {to_int64(ceil_int(iv.lo * K)) - 1, to_int64(floor_int(iv.hi * K))};
}

namespace {

std::pair<std::int64_t, std::int64_t> aligned_range(const Interval& c, std::int64_t k)
{
    Scalar lo = c.lo * Scalar(k), hi = c.hi * Scalar(k);
    if (!is_integer(lo) || !is_integer(hi) || c.degenerate())
        throw GridMisalignment("cell " + to_string(c) + " is not aligned to the grid 1/" + std::to_string(k));
    return {to_int64(floor_int(lo)), to_int64(floor_int(hi)) - 1};
}

}  // namespace

GridRegion product(const RegionSet& a, const RegionSet& b, std::int64_t k)
{
    if (a.space() != b.space())
        throw SpaceMismatch();
    GridRegion out(k, a.space() == Space::Circle);
    for (const auto& ca : a.cells()) {
        auto [c0, c1] = aligned_range(ca, k);
        for (const auto& cb : b.cells()) {
            auto [r0, r1] = aligned_range(cb, k);
            for (auto c = c0; c <= c1; ++c)
                for (auto r = r0; r <= r1; ++r)
                    out.insert({c, r});
        }
    }
    return out;
}

RegionSet slab_slice(const GridRegion& a, std::int64_t col)
{
    col = a.wrap_index(col);
    std::vector<Interval> cells;
    Scalar step = a.step();
    auto it = a.boxes().lower_bound(Box{col, std::numeric_limits<std::int64_t>::min()});
    for (; it != a.boxes().end() && it->col == col; ++it)
        cells.push_back({Scalar(it->row) * step, Scalar(it->row + 1) * step});
    return RegionSet::normalize(a.factor_space(), std::move(cells));
}

RegionSet slice(const GridRegion& a, const Scalar& x)
{
    Scalar xx = a.periodic() ? frac(x) : x;
    Scalar scaled = xx * Scalar(a.k());
    auto c = to_int64(floor_int(scaled));
    if (!is_integer(scaled))
        return slab_slice(a, c);
    return unite(slab_slice(a, c - 1), slab_slice(a, c));
}

}  // namespace isys
