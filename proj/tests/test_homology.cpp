#include <random>

#include <catch_amalgamated.hpp>

#include "isys/homology.hpp"
#include "isys/index_core.hpp"
#include "support/cubical_oracle.hpp"
#include "support/fixtures.hpp"

using namespace isys;

namespace {

Matrix m1(int x) { return Matrix(1, 1, {Scalar(x)}); }

InducedMap edge_map(const IndexSystem& s, const PLMap& f, const std::string& a, const std::string& b)
{
    return induced_map(s.pair(a), s.pair(b), f);
}

std::vector<CompactPair> all_fixture_pairs()
{
    std::vector<CompactPair> out;
    for (const auto& s : {fixtures::doubling_system(), fixtures::tent_system(), fixtures::trivial_tent_system()})
        for (const auto& p : s.pairs())
            out.push_back(p);
    return out;
}

}  // namespace

TEST_CASE("tent pairs carry one circle each")
{
    auto s = fixtures::tent_system();
    for (const auto& p : s.pairs()) {
        auto h = pair_homology(p);
        CHECK(h.space.dims == std::vector<std::size_t>{0, 1});
    }
}

TEST_CASE("tent induced maps reproduce the sign table")
{
    auto s = fixtures::tent_system();
    auto f = fixtures::tent_map();
    for (auto [a, b] : {std::pair{"1", "1"}, {"1", "2"}, {"2", "3"}, {"2", "4"}})
        CHECK(edge_map(s, f, a, b).degree(1) == m1(1));
    for (auto [a, b] : {std::pair{"3", "3"}, {"3", "4"}, {"4", "1"}, {"4", "2"}})
        CHECK(edge_map(s, f, a, b).degree(1) == m1(-1));
}

TEST_CASE("doubling induced maps are all one")
{
    auto s = fixtures::doubling_system();
    auto f = fixtures::doubling_map();
    for (const auto& [a, b] : s.edges()) {
        auto m = induced_map(s.pair(a), s.pair(b), f);
        CHECK(m.degree(0).rows() == 0);
        CHECK(m.degree(1) == m1(1));
    }
}

TEST_CASE("doubling row sums count the covered cores")
{
    auto s = fixtures::doubling_system();
    auto f = fixtures::doubling_map();
    for (std::size_t a = 0; a < s.size(); ++a) {
        Scalar total = 0;
        for (auto b : s.successors(a))
            total += induced_map(s.pair(a), s.pair(b), f).degree(1)(0, 0);
        CHECK(total == 3);
    }
}

TEST_CASE("trivial tent pair has a nilpotent self map")
{
    auto s = fixtures::trivial_tent_system();
    auto f = fixtures::tent_map();
    auto h = pair_homology(s.pair("0"));
    CHECK(h.space.dims == std::vector<std::size_t>{0, 2});
    auto m = edge_map(s, f, "0", "0").degree(1);
    CHECK(m == Matrix(2, 2, {1, -1, 1, -1}));
    CHECK((m * m).is_zero());
}

TEST_CASE("degree_count on single branches")
{
    const Scalar e = rat(1, 100);
    CoreComponent comp{{rat(2, 9) - e, rat(1, 3) + e}, true, true, false};
    Branch up{{0, 1}, 1, {-3 * e, rat(1, 3) + 3 * e}};
    auto c = degree_count(up, comp, rat(5, 18), Space::Line);
    CHECK(c.decided);
    CHECK(c.value == 1);

    Branch down{{0, 1}, -1, {-3 * e, rat(1, 3) + 3 * e}};
    CHECK(degree_count(down, comp, rat(5, 18), Space::Line).value == -1);

    Branch gap{{0, 1}, 1, {rat(1, 2), rat(3, 5)}};
    CHECK(degree_count(gap, comp, rat(5, 18), Space::Line).value == 0);

    Branch touching{{0, 1}, 1, {0, rat(1, 3) + e}};
    CHECK_FALSE(degree_count(touching, comp, rat(5, 18), Space::Line).decided);
}

TEST_CASE("circle crossings count every lift")
{
    CoreComponent comp{{rat(1, 10), rat(2, 10)}, true, true, false};
    Branch wide{{0, 1}, 1, {0, 2}};
    auto c = degree_count(wide, comp, rat(3, 20), Space::Circle);
    CHECK(c.decided);
    CHECK(c.value == 2);
}

TEST_CASE("pair_homology matches the cubical oracle on every fixture pair")
{
    auto pairs = all_fixture_pairs();
    REQUIRE(pairs.size() == 15);
    for (const auto& p : pairs) {
        auto h = pair_homology(p);
        auto b = oracle::relative_betti(p);
        INFO(p.label);
        CHECK(h.space.dim(0) == b[0]);
        CHECK(h.space.dim(1) == b[1]);
    }
}

TEST_CASE("pair_homology matches the cubical oracle on random pairs")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, 40);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < 300; ++trial) {
        const Space sp = coin(rng) ? Space::Line : Space::Circle;
        std::set<int> cuts;
        while (cuts.size() < 6)
            cuts.insert(pick(rng));
        std::vector<int> c(cuts.begin(), cuts.end());
        std::vector<Interval> n, l;
        for (std::size_t i = 0; i + 1 < c.size(); i += 2) {
            Scalar lo = rat(c[i], 40), hi = rat(c[i + 1], 40);
            n.push_back({lo, hi});
            Scalar len = hi - lo;
            if (coin(rng))
                l.push_back({lo, lo + len / 4});
            if (coin(rng))
                l.push_back({hi - len / 4, hi});
            if (coin(rng))
                l.push_back({lo + 3 * len / 8, lo + 5 * len / 8});
        }
        auto p = CompactPair::make("r", RegionSet::normalize(sp, n), RegionSet::normalize(sp, l));
        auto h = pair_homology(p);
        auto b = oracle::relative_betti(p);
        INFO(to_string(p.N) << " / " << to_string(p.L));
        CHECK(h.space.dim(0) == b[0]);
        CHECK(h.space.dim(1) == b[1]);
    }
}

TEST_CASE("f^2 along tent edges is the product of the edge maps")
{
    auto s = fixtures::tent_system();
    auto f = fixtures::tent_map();
    PLMap f2 = power(f, 2, {rat(-1, 20), rat(21, 20)});
    int checked = 0;
    for (const auto& [a, b] : s.edges())
        for (auto c : s.successors(b)) {
            auto direct = degree_matrices(s.pair(a), s.pair(c), f2).degree(1);
            auto prod = induced_map(s.pair(b), s.pair(c), f).degree(1) * induced_map(s.pair(a), s.pair(b), f).degree(1);
            CHECK(direct == prod);
            ++checked;
        }
    CHECK(checked == 16);
}

TEST_CASE("f^2 along doubling edges with a unique connecting path")
{
    auto s = fixtures::doubling_system();
    auto f = fixtures::doubling_map();
    PLMap f2 = power(f, 2, {0, 1});
    int checked = 0;
    for (std::size_t a = 0; a < s.size(); ++a)
        for (int d : {-3, -2, 2, 3}) {
            std::size_t c = static_cast<std::size_t>(((4 * static_cast<int>(a) + d) % 10 + 10) % 10);
            std::size_t b = static_cast<std::size_t>(((2 * static_cast<int>(a) + (d > 0 ? 1 : -1)) % 10 + 10) % 10);
            REQUIRE(s.has_edge(a, b));
            REQUIRE(s.has_edge(b, c));
            auto direct = degree_matrices(s.pair(a), s.pair(c), f2).degree(1);
            auto prod = induced_map(s.pair(b), s.pair(c), f).degree(1) * induced_map(s.pair(a), s.pair(b), f).degree(1);
            CHECK(direct == prod);
            ++checked;
        }
    CHECK(checked == 40);
}

TEST_CASE("refining epsilon leaves homology and induced maps unchanged")
{
    auto fine = rat(1, 1000);
    for (auto [coarse_s, fine_s, f] :
         {std::tuple{fixtures::tent_system(), fixtures::tent_system(fine), fixtures::tent_map()},
          std::tuple{fixtures::doubling_system(), fixtures::doubling_system(fine), fixtures::doubling_map()}}) {
        for (std::size_t a = 0; a < coarse_s.size(); ++a)
            CHECK(pair_homology(coarse_s.pair(a)).space == pair_homology(fine_s.pair(a)).space);
        for (const auto& [a, b] : coarse_s.edges())
            CHECK(induced_map(coarse_s.pair(a), coarse_s.pair(b), f).by_degree ==
                  induced_map(fine_s.pair(a), fine_s.pair(b), f).by_degree);
    }
}

TEST_CASE("induced_map rejects edges that do not satisfy precedes")
{
    auto s = fixtures::tent_system();
    auto f = fixtures::tent_map();
    CHECK_THROWS_AS(induced_map(s.pair("1"), s.pair("3"), f), PrecedesViolation);
}

TEST_CASE("components with one end in L contribute nothing")
{
    auto p = CompactPair::make("h", RegionSet::interval(Space::Line, 0, 1), RegionSet::interval(Space::Line, 0, rat(1, 4)));
    auto h = pair_homology(p);
    CHECK(h.space.is_zero());
    CHECK(h.components.size() == 1);
}

TEST_CASE("a whole circle core carries both degrees")
{
    auto p = CompactPair::make("c", RegionSet::full_circle(), RegionSet(Space::Circle));
    auto h = pair_homology(p);
    CHECK(h.space.dims == std::vector<std::size_t>{1, 1});
    auto m = degree_matrices(p, p, fixtures::doubling_map());
    CHECK(m.degree(1) == Matrix(1, 1, {2}));
    CHECK(m.degree(0) == Matrix(1, 1, {1}));
}
