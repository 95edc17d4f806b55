#include "isys/dynamics.hpp"

#include <algorithm>

namespace isys {

Interval Piece::image() const
{
    Scalar a = at(dom.lo), b = at(dom.hi);
    return a <= b ? Interval{a, b} : Interval{b, a};
}

PLMap PLMap::make(Space space, std::vector<Vertex> vertices)
{
    if (vertices.size() < 2)
        throw MapSpecError("a PL map needs at least two vertices");
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        if (!(vertices[i].x < vertices[i + 1].x))
            throw MapSpecError("vertex abscissae must be strictly increasing (at x = " + to_string(vertices[i + 1].x) + ")");
        if (vertices[i].y == vertices[i + 1].y)
            throw MapSpecError("constant piece on [" + to_string(vertices[i].x) + ", " + to_string(vertices[i + 1].x) + "]");
    }
    if (space == Space::Circle) {
        if (vertices.front().x != 0 || vertices.back().x != 1)
            throw MapSpecError("circle map lifts must be given on [0, 1]");
        if (!is_integer(vertices.back().y - vertices.front().y))
            throw MapSpecError("circle map lift is discontinuous mod 1 at 0");
    }
    PLMap f;
    f.space_ = space;
    f.vertices_ = std::move(vertices);
    return f;
}

PLMap PLMap::identity(Space space, Scalar lo, Scalar hi)
{
    if (space == Space::Circle)
        return make(space, {{0, 0}, {1, 1}});
    return make(space, {{lo, lo}, {hi, hi}});
}

std::vector<Scalar> PLMap::breakpoints() const
{
    std::vector<Scalar> b;
    for (const auto& v : vertices_)
        b.push_back(v.x);
    return b;
}

RegionSet PLMap::domain() const
{
    if (space_ == Space::Circle)
        return RegionSet::full_circle();
    return RegionSet::interval(Space::Line, vertices_.front().x, vertices_.back().x);
}

Interval PLMap::domain_hull() const
{
    return {vertices_.front().x, vertices_.back().x};
}

Integer PLMap::degree() const
{
    if (space_ != Space::Circle)
        throw std::logic_error("degree is defined for circle maps only");
    return floor_int(vertices_.back().y - vertices_.front().y);
}

namespace {

Scalar base_eval(const std::vector<Vertex>& v, const Scalar& x)
{
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (x <= v[i + 1].x) {
            Scalar m = (v[i + 1].y - v[i].y) / (v[i + 1].x - v[i].x);
            return v[i].y + m * (x - v[i].x);
        }
    }
    return v.back().y;
}

}  // namespace

Scalar PLMap::lift(const Scalar& x) const
{
    if (space_ == Space::Line) {
        if (x < vertices_.front().x || x > vertices_.back().x)
            throw DomainEscape("point " + to_string(x) + " outside the map domain");
        return base_eval(vertices_, x);
    }
    Integer n = floor_int(x);
    Scalar t = x - Scalar(n);
    return base_eval(vertices_, t) + Scalar(n * degree());
}

Scalar PLMap::eval(const Scalar& x) const
{
    Scalar y = lift(x);
    return space_ == Space::Circle ? frac(y) : y;
}

std::vector<Piece> PLMap::pieces_over(const Interval& cell) const
{
    if (cell.lo > cell.hi)
        throw EmptyCellError(cell);
    std::vector<Piece> raw;
    auto emit = [&](const Scalar& x0, const Scalar& x1, const Scalar& m, const Scalar& c) {
        Scalar lo = std::max(x0, cell.lo), hi = std::min(x1, cell.hi);
        if (lo < hi || (cell.degenerate() && lo == hi && raw.empty()))
            raw.push_back({{lo, hi}, m, c});
    };

    if (space_ == Space::Line) {
        if (cell.lo < vertices_.front().x || cell.hi > vertices_.back().x)
            throw DomainEscape("cell " + to_string(cell) + " escapes the map domain " + to_string(domain_hull()));
        for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
            const auto& a = vertices_[i];
            const auto& b = vertices_[i + 1];
            Scalar m = (b.y - a.y) / (b.x - a.x);
            emit(a.x, b.x, m, a.y - m * a.x);
        }
    }
    else {
        Integer deg = degree();
        for (Integer n = floor_int(cell.lo); Scalar(n) <= cell.hi; ++n) {
            Scalar sn(n);
            for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
                const auto& a = vertices_[i];
                const auto& b = vertices_[i + 1];
                Scalar m = (b.y - a.y) / (b.x - a.x);
                Scalar c = a.y - m * a.x + Scalar(n * deg) - m * sn;
                emit(a.x + sn, b.x + sn, m, c);
            }
        }
    }

    std::vector<Piece> merged;
    for (auto& p : raw) {
        if (!merged.empty() && merged.back().slope == p.slope && merged.back().offset == p.offset &&
            merged.back().dom.hi == p.dom.lo)
            merged.back().dom.hi = p.dom.hi;
        else
            merged.push_back(std::move(p));
    }
    return merged;
}

Interval PLMap::lift_image(const Interval& cell) const
{
    auto pieces = pieces_over(cell);
    Interval out = pieces.front().image();
    for (const auto& p : pieces) {
        Interval im = p.image();
        if (im.lo < out.lo)
            out.lo = im.lo;
        if (im.hi > out.hi)
            out.hi = im.hi;
    }
    return out;
}

RegionSet image(const PLMap& f, const RegionSet& a)
{
    if (a.space() != f.space())
        throw SpaceMismatch();
    std::vector<Interval> out;
    for (const auto& cell : a.cells())
        for (const auto& p : f.pieces_over(cell))
            out.push_back(p.image());
    return RegionSet::normalize(f.space(), std::move(out));
}

namespace {

/// x-range of the piece mapped into the closed value range [u, v] (u <= v).
Interval pull_back(const Piece& p, const Scalar& u, const Scalar& v)
{
    Scalar x1 = (u - p.offset) / p.slope, x2 = (v - p.offset) / p.slope;
    return x1 <= x2 ? Interval{x1, x2} : Interval{x2, x1};
}

}  // namespace

RegionSet preimage(const PLMap& f, const RegionSet& b)
{
    if (b.space() != f.space())
        throw SpaceMismatch();
    std::vector<Interval> out;
    Interval whole = f.space() == Space::Circle ? Interval{0, 1} : f.domain_hull();
    for (const auto& p : f.pieces_over(whole)) {
        Interval j = p.image();
        for (const auto& cell : b.cells()) {
            Integer n0 = 0, n1 = 0;
            if (f.space() == Space::Circle) {
                n0 = ceil_int(j.lo - cell.hi);
                n1 = floor_int(j.hi - cell.lo);
            }
            for (Integer n = n0; n <= n1; ++n) {
                Scalar lo = std::max(cell.lo + Scalar(n), j.lo);
                Scalar hi = std::min(cell.hi + Scalar(n), j.hi);
                if (lo <= hi)
                    out.push_back(pull_back(p, lo, hi));
            }
        }
    }
    return RegionSet::normalize(f.space(), std::move(out));
}

RegionSet image_power(const PLMap& f, const RegionSet& a, int n)
{
    RegionSet r = a;
    for (int i = 0; i < n; ++i)
        r = image(f, r);
    return r;
}

std::vector<Branch> monotone_branches(const PLMap& f, const Interval& cell)
{
    std::vector<Branch> out;
    for (const auto& p : f.pieces_over(cell))
        out.push_back({p.dom, p.slope > 0 ? 1 : -1, p.image()});
    return out;
}

PLMap compose(const PLMap& g, const PLMap& f, const Interval& cell)
{
    if (f.space() != g.space())
        throw SpaceMismatch();
    if (f.space() == Space::Circle && !(cell.lo == 0 && cell.hi == 1))
        throw std::invalid_argument("circle compositions are taken over [0, 1]");

    std::vector<Scalar> xs;
    for (const auto& p : f.pieces_over(cell)) {
        xs.push_back(p.dom.lo);
        xs.push_back(p.dom.hi);
        Interval j = p.image();
        auto gb = g.breakpoints();
        if (g.space() == Space::Line) {
            for (const auto& b : gb)
                if (j.lo < b && b < j.hi)
                    xs.push_back((b - p.offset) / p.slope);
        }
        else {
            for (Integer n = floor_int(j.lo); Scalar(n) <= j.hi; ++n)
                for (const auto& b : gb) {
                    Scalar bb = b + Scalar(n);
                    if (j.lo < bb && bb < j.hi)
                        xs.push_back((bb - p.offset) / p.slope);
                }
        }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<Vertex> v;
    for (const auto& x : xs)
        v.push_back({x, g.lift(f.lift(x))});
    return PLMap::make(f.space(), std::move(v));
}

PLMap power(const PLMap& f, int n, const Interval& cell)
{
    if (n < 1)
        throw std::invalid_argument("power needs n >= 1");
    PLMap h = compose(f, PLMap::identity(f.space(), cell.lo, cell.hi), cell);
    for (int i = 1; i < n; ++i)
        h = compose(f, h, cell);
    return h;
}

std::pair<Interval, Interval> exact_box_image(const ProductMap& F, const Box& b, std::int64_t k)
{
    Scalar step = Scalar(1) / Scalar(k);
    Interval x{Scalar(b.col) * step, Scalar(b.col + 1) * step};
    Interval y{Scalar(b.row) * step, Scalar(b.row + 1) * step};
    return {F.factor.lift_image(x), F.factor.lift_image(y)};
}

GridRegion box_image(const ProductMap& F, const GridRegion& a)
{
    bool periodic = F.factor.space() == Space::Circle;
    if (periodic != a.periodic())
        throw SpaceMismatch();
    GridRegion out(a.k(), periodic);
    auto range = [&](const Interval& iv) {
        if (periodic && iv.length() >= 1)
            return std::pair<std::int64_t, std::int64_t>{0, a.k() - 1};
        return open_raster(iv, a.k());
    };
    for (const auto& b : a.boxes()) {
        auto [ix, iy] = exact_box_image(F, b, a.k());
        auto [c0, c1] = range(ix);
        auto [r0, r1] = range(iy);
        for (auto c = c0; c <= c1; ++c)
            for (auto r = r0; r <= r1; ++r)
                out.insert({c, r});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Periodic point oracle

namespace {

struct Track {
    Interval dom;
    Scalar slope;   // current iterate is slope * x + offset (lift)
    Scalar offset;

    Interval values() const
    {
        Scalar a = slope * dom.lo + offset, b = slope * dom.hi + offset;
        return a <= b ? Interval{a, b} : Interval{b, a};
    }
    /// x-range within dom whose value lies in [u, v].
    std::optional<Interval> where(const Scalar& u, const Scalar& v) const
    {
        Scalar x1 = (u - offset) / slope, x2 = (v - offset) / slope;
        if (x2 < x1)
            std::swap(x1, x2);
        Scalar lo = std::max(x1, dom.lo), hi = std::min(x2, dom.hi);
        if (lo > hi)
            return std::nullopt;
        return Interval{lo, hi};
    }
};

std::vector<Track> constrain(const std::vector<Track>& tracks, const RegionSet& region, Space space)
{
    std::vector<Track> out;
    for (const auto& t : tracks) {
        Interval val = t.values();
        for (const auto& cell : region.cells()) {
            Integer n0 = 0, n1 = 0;
            if (space == Space::Circle) {
                n0 = ceil_int(val.lo - cell.hi);
                n1 = floor_int(val.hi - cell.lo);
            }
            for (Integer n = n0; n <= n1; ++n)
                if (auto d = t.where(cell.lo + Scalar(n), cell.hi + Scalar(n)))
                    out.push_back({*d, t.slope, t.offset});
        }
    }
    return out;
}

std::vector<Track> advance(const PLMap& f, const std::vector<Track>& tracks)
{
    std::vector<Track> out;
    for (const auto& t : tracks) {
        Interval val = t.values();
        if (f.space() == Space::Line) {
            Interval dom = f.domain_hull();
            val.lo = std::max(val.lo, dom.lo);
            val.hi = std::min(val.hi, dom.hi);
            if (val.lo > val.hi)
                continue;
        }
        for (const auto& p : f.pieces_over(val)) {
            auto d = t.where(p.dom.lo, p.dom.hi);
            if (!d)
                continue;
            out.push_back({*d, p.slope * t.slope, p.slope * t.offset + p.offset});
        }
    }
    return out;
}

}  // namespace

std::vector<Scalar> periodic_points(const PLMap& f, const std::vector<RegionSet>& cores)
{
    if (cores.empty())
        throw std::invalid_argument("periodic_points needs at least one core");
    const Space space = f.space();
    std::vector<Track> tracks;
    for (const auto& cell : cores[0].cells())
        tracks.push_back({cell, 1, 0});

    const std::size_t p = cores.size();
    for (std::size_t i = 0; i < p; ++i) {
        tracks = advance(f, tracks);
        if (i + 1 < p)
            tracks = constrain(tracks, cores[i + 1], space);
    }

    std::vector<Scalar> points;
    for (const auto& t : tracks) {
        // slope * x + offset = x + n
        Scalar a = (t.slope - 1) * t.dom.lo + t.offset;
        Scalar b = (t.slope - 1) * t.dom.hi + t.offset;
        if (b < a)
            std::swap(a, b);
        Integer n0 = 0, n1 = 0;
        if (space == Space::Circle) {
            n0 = ceil_int(a);
            n1 = floor_int(b);
        }
        for (Integer n = n0; n <= n1; ++n) {
            if (t.slope == 1) {
                if (t.offset == Scalar(n))
                    throw std::runtime_error("non-isolated periodic points on " + to_string(t.dom));
                continue;
            }
            Scalar x = (Scalar(n) - t.offset) / (t.slope - 1);
            if (t.dom.contains(x))
                points.push_back(space == Space::Circle ? frac(x) : x);
        }
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

}  // namespace isys
