#include <random>

#include <catch_amalgamated.hpp>

#include "isys/dynamics.hpp"
#include "support/fixtures.hpp"

using namespace isys;

namespace {

RegionSet random_set(std::mt19937& rng, Space s, int den = 30)
{
    std::uniform_int_distribution<int> start(0, den - 1), len(1, den / 3), count(1, 3);
    std::vector<Interval> cells;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
        Scalar lo = rat(start(rng), den);
        cells.push_back({lo, lo + rat(len(rng), den)});
    }
    return RegionSet::normalize(s, cells);
}

std::vector<Scalar> samples(const Interval& dom, int n)
{
    std::vector<Scalar> out;
    for (int i = 0; i <= n; ++i)
        out.push_back(dom.lo + dom.length() * rat(i, n));
    for (int i = 0; i < n; ++i)
        out.push_back(dom.lo + dom.length() * rat(2 * i + 1, 2 * n));
    return out;
}

}  // namespace

TEST_CASE("maps validate their vertices")
{
    CHECK_THROWS_AS(PLMap::make(Space::Line, {{0, 0}}), MapSpecError);
    CHECK_THROWS_AS(PLMap::make(Space::Line, {{0, 0}, {0, 1}}), MapSpecError);
    CHECK_THROWS_AS(PLMap::make(Space::Line, {{0, 1}, {1, 1}}), MapSpecError);
    CHECK_THROWS_AS(PLMap::make(Space::Circle, {{0, 0}, {1, rat(3, 2)}}), MapSpecError);
    CHECK_THROWS_AS(PLMap::make(Space::Circle, {{rat(1, 2), 0}, {1, 2}}), MapSpecError);
    CHECK(fixtures::doubling_map().degree() == 2);
}

TEST_CASE("tent and doubling evaluate exactly")
{
    auto t = fixtures::tent_map();
    CHECK(t.eval(0) == 0);
    CHECK(t.eval(rat(3, 4)) == rat(3, 4));
    CHECK(t.eval(rat(1, 2)) == rat(3, 2));
    CHECK(t.eval(1) == 0);
    CHECK_THROWS_AS(t.eval(3), DomainEscape);

    auto d = fixtures::doubling_map();
    CHECK(d.eval(rat(1, 7)) == rat(2, 7));
    CHECK(d.eval(rat(4, 7)) == rat(1, 7));
    CHECK(d.eval(rat(3, 2)) == 0);
}

TEST_CASE("image and preimage are adjoint on sample points")
{
    std::mt19937 rng(9);
    auto t = fixtures::tent_map();
    auto d = fixtures::doubling_map();
    for (int trial = 0; trial < 200; ++trial) {
        bool circle = trial % 2;
        const PLMap& f = circle ? d : t;
        Space s = f.space();
        RegionSet a = random_set(rng, s);
        RegionSet b = random_set(rng, s);
        RegionSet img = image(f, a);
        RegionSet pre = preimage(f, b);
        Interval dom = circle ? Interval{0, 1} : Interval{-1, 2};
        for (const auto& x : samples(dom, 90)) {
            if (a.contains(x))
                CHECK(img.contains(f.eval(x)));
            CHECK(pre.contains(x) == b.contains(f.eval(x)));
        }
        CHECK(subset(image(f, pre), b));
        CHECK(subset(a, preimage(f, img)));
    }
}

TEST_CASE("monotone branches split at turning points")
{
    auto t = fixtures::tent_map();
    auto br = monotone_branches(t, {0, 1});
    REQUIRE(br.size() == 2);
    CHECK(br[0].orientation == 1);
    CHECK(br[0].image == Interval{0, rat(3, 2)});
    CHECK(br[1].orientation == -1);
    CHECK(br[1].image == Interval{0, rat(3, 2)});

    auto d = fixtures::doubling_map();
    auto db = monotone_branches(d, {rat(9, 10), rat(11, 10)});
    REQUIRE(db.size() == 1);
    CHECK(db[0].image.length() == rat(2, 5));
}

TEST_CASE("powers agree with iteration")
{
    auto t = fixtures::tent_map();
    Interval dom{rat(-1, 20), rat(21, 20)};
    auto t2 = power(t, 2, dom);
    for (const auto& x : samples(dom, 60))
        CHECK(t2.eval(x) == t.eval(t.eval(x)));

    auto d = fixtures::doubling_map();
    auto d3 = power(d, 3, {0, 1});
    CHECK(d3.degree() == 8);
    for (const auto& x : samples({0, 1}, 60))
        CHECK(frac(d3.eval(x)) == frac(8 * x));
}

TEST_CASE("box_image contains the image of every sample point")
{
    std::mt19937 rng(17);
    for (auto [f, k] : {std::pair{fixtures::tent_map(), std::int64_t{27}}, {fixtures::doubling_map(), std::int64_t{20}}}) {
        const bool periodic = f.space() == Space::Circle;
        ProductMap F{f};
        std::uniform_int_distribution<std::int64_t> idx(0, k - 1);
        std::uniform_int_distribution<int> frac_num(0, 64);
        int checked = 0;
        while (checked < 5000) {
            GridRegion a(k, periodic);
            Box b{idx(rng), idx(rng)};
            a.insert(b);
            GridRegion img = box_image(F, a);
            for (int s = 0; s < 10; ++s, ++checked) {
                Scalar x = (Scalar(b.col) + rat(frac_num(rng), 64)) / k;
                Scalar y = (Scalar(b.row) + rat(frac_num(rng), 64)) / k;
                Scalar fx = f.eval(x), fy = f.eval(y);
                // the image point lies in the closure of some image box
                auto cx = closed_raster({fx, fx}, k);
                auto cy = closed_raster({fy, fy}, k);
                bool found = false;
                for (auto c = cx.first; c <= cx.second; ++c)
                    for (auto r = cy.first; r <= cy.second; ++r)
                        found = found || img.contains({c, r});
                CHECK(found);
            }
        }
    }
}

TEST_CASE("periodic point oracle")
{
    auto d = fixtures::doubling_map();
    auto fixed = periodic_points(d, {RegionSet::interval(Space::Circle, rat(-1, 10), rat(1, 10))});
    CHECK(fixed == std::vector<Scalar>{0});

    auto t = fixtures::tent_map();
    auto both = periodic_points(t, {RegionSet::interval(Space::Line, rat(-1, 10), rat(9, 10))});
    CHECK(both == std::vector<Scalar>{0, rat(3, 4)});

    CHECK_THROWS(periodic_points(PLMap::identity(Space::Line, 0, 1), {RegionSet::interval(Space::Line, 0, 1)}));
}
