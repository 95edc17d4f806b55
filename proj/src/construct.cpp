#include "isys/construct.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace isys {

RefineDelta::RefineDelta(Scalar d, const std::string& why)
    : std::runtime_error("grid step " + to_string(d) + " too coarse: " + why + "; try " + to_string(d / 3)),
      delta(d),
      suggested(d / 3)
{
}

std::string ProductCheck::reason() const
{
    if (ok)
        return "ok";
    std::string r;
    auto add = [&](const std::string& s) { r += (r.empty() ? "" : "; ") + s; };
    if (!exit_violations.empty())
        add(std::to_string(exit_violations.size()) + " core boxes leave Int N");
    if (!image_violations.empty())
        add(std::to_string(image_violations.size()) + " L boxes map onto the core");
    if (!meets_diagonal)
        add("the core misses the diagonal");
    return r;
}

namespace {

std::int64_t grid_of(const Scalar& delta)
{
    if (delta <= 0 || boost::multiprecision::numerator(delta) != 1)
        throw GridMisalignment("grid step " + to_string(delta) + " is not of the form 1/k");
    return to_int64(Integer(boost::multiprecision::denominator(delta)));
}

std::pair<std::int64_t, std::int64_t> touched(const Interval& iv, std::int64_t k, bool periodic)
{
    if (periodic && iv.length() >= 1)
        return {0, k - 1};
    return closed_raster(iv, k);
}

template <class Fn>
void for_touched(const ProductPair& p, const PLMap& f, const Box& b, Fn fn)
{
    auto [ix, iy] = exact_box_image(ProductMap{f}, b, p.k());
    auto [c0, c1] = touched(ix, p.k(), p.periodic());
    auto [r0, r1] = touched(iy, p.k(), p.periodic());
    for (auto c = c0; c <= c1; ++c)
        for (auto r = r0; r <= r1; ++r)
            if (!fn(Box{c, r}))
                return;
}

bool exits(const ProductPair& p, const PLMap& f, const Box& b)
{
    bool out = false;
    for_touched(p, f, b, [&](const Box& t) {
        out = !p.N.contains(t);
        return !out;
    });
    return out;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

GridRegion regrid(const GridRegion& a, std::int64_t k)
{
    GridRegion out(k, a.periodic());
    if (k % a.k() == 0) {
        const std::int64_t r = k / a.k();
        for (const auto& b : a.boxes())
            for (std::int64_t dc = 0; dc < r; ++dc)
                for (std::int64_t dr = 0; dr < r; ++dr)
                    out.insert({b.col * r + dc, b.row * r + dr});
    }
    else {
        const std::int64_t r = a.k() / k;
        for (const auto& b : a.boxes())
            out.insert({floor_div(b.col, r), floor_div(b.row, r)});
    }
    return out;
}

}  // namespace

ProductCheck check_product_pair(const ProductPair& p, const PLMap& f)
{
    if (p.periodic() != (f.space() == Space::Circle))
        throw SpaceMismatch();
    ProductCheck r;
    GridRegion core = p.core();
    for (const auto& b : core.boxes()) {
        if (b.col == b.row)
            r.meets_diagonal = true;
        if (exits(p, f, b))
            r.exit_violations.push_back(b);
    }
    for (const auto& b : p.L.boxes()) {
        bool hit = false;
        for_touched(p, f, b, [&](const Box& t) {
            hit = core.contains(t);
            return !hit;
        });
        if (hit)
            r.image_violations.push_back(b);
    }
    r.ok = r.exit_violations.empty() && r.image_violations.empty() && r.meets_diagonal;
    return r;
}

std::pair<std::int64_t, std::int64_t> grid_range(const PLMap& f, std::int64_t k)
{
    if (f.space() == Space::Circle)
        return {0, k - 1};
    Interval dom = f.domain_hull();
    return {to_int64(ceil_int(dom.lo * k)), to_int64(floor_int(dom.hi * k)) - 1};
}

ProductPair strip_template(const PLMap& f, const Scalar& w, const Scalar& c)
{
    if (w <= 0 || c <= 0 || c > w)
        throw std::invalid_argument("strip template needs 0 < c <= w");
    Integer kw = boost::multiprecision::denominator(w);
    Integer kc = boost::multiprecision::denominator(c);
    const std::int64_t k = to_int64(Integer(boost::multiprecision::lcm(kw, kc)));
    const std::int64_t W = to_int64(Integer(boost::multiprecision::numerator(Scalar(w * k))));
    const std::int64_t C = to_int64(Integer(boost::multiprecision::numerator(Scalar(c * k))));
    const bool periodic = f.space() == Space::Circle;
    auto [lo, hi] = grid_range(f, k);

    ProductPair p{GridRegion(k, periodic), GridRegion(k, periodic)};
    for (auto i = lo; i <= hi; ++i)
        for (auto j = i - W; j <= i + W; ++j) {
            if (!periodic && (j < lo || j > hi))
                continue;
            std::int64_t d = std::abs(i - j);
            if (periodic)
                d = std::min(d % k, k - d % k);
            p.N.insert({i, j});
            if (d > W - C)
                p.L.insert({i, j});
        }

    for (bool changed = true; changed;) {
        changed = false;
        GridRegion core = p.core();
        for (const auto& b : core.boxes())
            if (exits(p, f, b)) {
                p.L.insert(b);
                changed = true;
            }
        core = p.core();
        std::set<Box> hit;
        for (const auto& b : p.L.boxes())
            for_touched(p, f, b, [&](const Box& t) {
                if (core.contains(t))
                    hit.insert(p.N.wrap(t));
                return true;
            });
        for (const auto& b : hit)
            p.L.insert(b);
        changed = changed || !hit.empty();
    }
    return p;
}

ProductPair discretize(const ProductPair& p, const PLMap& f, const Scalar& delta)
{
    const std::int64_t k = grid_of(delta);
    ProductPair q = p;
    if (k != p.k()) {
        if (k % p.k() != 0 && p.k() % k != 0)
            throw GridMisalignment("grid 1/" + std::to_string(k) + " does not divide or refine 1/" +
                                   std::to_string(p.k()));
        q = {regrid(p.N, k), regrid(p.L, k)};
    }
    ProductCheck chk = check_product_pair(q, f);
    if (!chk.ok)
        throw RefineDelta(delta, chk.reason());
    return q;
}

SliceFamily slice_system(const ProductPair& p)
{
    SliceFamily out;
    auto cols = p.N.columns();
    if (cols.empty())
        return out;
    const std::int64_t lo = p.periodic() ? 0 : cols.front();
    const std::int64_t hi = p.periodic() ? p.k() - 1 : cols.back();
    for (auto col = lo; col <= hi; ++col) {
        RegionSet n = slab_slice(p.N, col);
        if (n.empty()) {
            out.empty_slabs.push_back(col);
            out.slabs.push_back({col, std::nullopt});
            continue;
        }
        RegionSet l = slab_slice(p.L, col);
        std::size_t idx = out.slices.size();
        for (std::size_t i = 0; i < out.slices.size(); ++i)
            if (out.slices[i].N == n && out.slices[i].L == l)
                idx = i;
        if (idx == out.slices.size()) {
            out.slices.push_back(CompactPair::make("s" + std::to_string(idx), n, l));
            out.multiplicity.push_back(0);
            out.empty_core.push_back(pair_core(out.slices.back()).empty());
        }
        ++out.multiplicity[idx];
        out.slabs.push_back({col, idx});
    }
    return out;
}

Assembly assemble(const ProductPair& p, const SliceFamily& slices, const PLMap& f)
{
    const std::int64_t k = p.k();
    const bool periodic = p.periodic();
    std::map<std::int64_t, std::size_t> at;
    for (const auto& s : slices.slabs)
        if (s.slice && !slices.empty_core[*s.slice])
            at[s.col] = *s.slice;

    std::set<std::pair<std::size_t, std::size_t>> derived;
    for (const auto& [col, a] : at) {
        Interval x{Scalar(col) / k, Scalar(col + 1) / k};
        Interval img = f.lift_image(x);
        auto [c0, c1] = periodic && img.length() >= 1 ? std::pair<std::int64_t, std::int64_t>{0, k - 1}
                                                      : open_raster(img, k);
        for (auto c = c0; c <= c1; ++c) {
            std::int64_t cc = periodic ? ((c % k) + k) % k : c;
            auto it = at.find(cc);
            if (it != at.end())
                derived.insert({a, it->second});
        }
    }

    Assembly out;
    std::set<std::pair<std::size_t, std::size_t>> valid;
    for (const auto& [a, b] : derived) {
        out.slab_edges.emplace_back(slices.slices[a].label, slices.slices[b].label);
        if (check_precedes(slices.slices[a], slices.slices[b], f).holds)
            valid.insert({a, b});
    }

    std::set<std::size_t> keep;
    for (const auto& [col, a] : at)
        keep.insert(a);
    for (bool changed = true; changed;) {
        changed = false;
        for (auto it = keep.begin(); it != keep.end();) {
            bool has_out = false;
            for (const auto& [a, b] : valid)
                has_out = has_out || (a == *it && keep.count(b));
            if (has_out) {
                ++it;
            }
            else {
                out.pruned.push_back(slices.slices[*it].label);
                it = keep.erase(it);
                changed = true;
            }
        }
    }
    if (keep.empty())
        throw ConstructionError("no slice has a valid outgoing edge");

    out.system = IndexSystem(f.space());
    for (auto a : keep)
        out.system.add_pair(slices.slices[a]);
    for (const auto& [a, b] : valid)
        if (keep.count(a) && keep.count(b))
            out.system.add_edge(slices.slices[a].label, slices.slices[b].label);

    out.report = verify(out.system, f);
    if (out.report.verdict != Verdict::Verified) {
        std::string msg = "assembled system is " + to_string(out.report.verdict);
        for (std::size_t i = 0; i < out.report.failures.size() && i < 5; ++i)
            msg += "\n  " + out.report.failures[i];
        throw ConstructionError(msg);
    }
    return out;
}

Construction construct(const PLMap& f, const ProductPair& input, const Scalar& delta)
{
    Construction c;
    c.input = input;
    c.discrete = discretize(input, f, delta);
    c.slices = slice_system(c.discrete);
    c.assembly = assemble(c.discrete, c.slices, f);
    return c;
}

Construction construct_from_template(const PLMap& f, const Scalar& w, const Scalar& c, const Scalar& delta)
{
    return construct(f, strip_template(f, w, c), delta);
}

}  // namespace isys
