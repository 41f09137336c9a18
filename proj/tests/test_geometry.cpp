#include <doctest.h>

#include <algorithm>
#include <set>

#include "cfcolor/geometry.hpp"
#include "cfcolor/planar.hpp"
#include "cfcolor/rng.hpp"

using namespace cfcolor;

namespace {

std::set<std::vector<int>> edge_set(const Hypergraph& h) {
    return {h.edges().begin(), h.edges().end()};
}

PointSet random_general_points(CounterRng& rng, int n, long long box) {
    for (;;) {
        std::vector<Point> pts;
        std::set<std::pair<long long, long long>> seen;
        while (static_cast<int>(pts.size()) < n) {
            Point p{rng.next_int(-box, box), rng.next_int(-box, box)};
            if (seen.insert({p.x, p.y}).second) pts.push_back(p);
        }
        PointSet ps(pts);
        if (ps.no_three_collinear() && ps.no_four_cocircular()) return ps;
    }
}

}  // namespace

TEST_CASE("orientation and incircle predicates") {
    CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == 1);
    CHECK(orientation({0, 0}, {0, 1}, {1, 0}) == -1);
    CHECK(orientation({0, 0}, {1, 1}, {2, 2}) == 0);

    // circumcircle of (0,0),(2,0),(0,2): center (1,1), r^2 = 2
    CHECK(incircle({0, 0}, {2, 0}, {0, 2}, {1, 1}) == 1);
    CHECK(incircle({0, 0}, {2, 0}, {0, 2}, {2, 2}) == 0);
    CHECK(incircle({0, 0}, {2, 0}, {0, 2}, {5, 5}) == -1);
    // orientation of the defining triple must not matter
    CHECK(incircle({0, 0}, {0, 2}, {2, 0}, {1, 1}) == 1);
}

TEST_CASE("point set flags") {
    CHECK_THROWS_AS(PointSet({{1, 1}, {1, 1}}), InputError);

    PointSet collinear({{0, 0}, {1, 1}, {2, 2}, {5, 0}});
    CHECK(!collinear.no_three_collinear());

    PointSet square({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    CHECK(square.no_three_collinear());
    CHECK(!square.no_four_cocircular());
    CHECK(square.in_convex_position());

    PointSet tri_center({{0, 0}, {6, 1}, {2, 6}, {2, 2}});
    CHECK(tri_center.no_three_collinear());
    CHECK(!tri_center.in_convex_position());

    PointSet convex({{0, 0}, {5, 1}, {6, 5}, {1, 7}});
    CHECK(convex.in_convex_position());
}

TEST_CASE("interval hypergraph") {
    CHECK(build_interval_hypergraph(1).edges() ==
          std::vector<std::vector<int>>{{0}});
    CHECK(build_interval_hypergraph(3).edge_count() == 6);
    for (int n : {2, 4, 7, 12})
        CHECK(build_interval_hypergraph(n).edge_count() == n * (n + 1) / 2);

    auto g = delaunay_graph(build_interval_hypergraph(5));
    std::sort(g.edges.begin(), g.edges.end());
    CHECK(g.edges == std::vector<std::pair<int, int>>{
                         {0, 1}, {1, 2}, {2, 3}, {3, 4}});
}

TEST_CASE("halfplane hypergraph of a triangle has all 7 subsets") {
    PointSet tri({{0, 0}, {4, 0}, {1, 3}});
    auto h = build_halfplane_hypergraph(tri);
    CHECK(h.edge_count() == 7);

    PointSet lone({{3, 4}});
    CHECK(build_halfplane_hypergraph(lone).edges() ==
          std::vector<std::vector<int>>{{0}});

    CHECK_THROWS_AS(
        build_halfplane_hypergraph(PointSet({{0, 0}, {1, 1}, {2, 2}})),
        InputError);
}

TEST_CASE("halfplane cuts: interior singletons absent, hull cycle present") {
    PointSet p({{0, 0}, {6, 1}, {2, 6}, {2, 2}});  // vertex 3 interior
    auto h = build_halfplane_hypergraph(p);
    auto edges = edge_set(h);
    CHECK(!edges.count({3}));
    CHECK(edges.count({0}));
    CHECK(edges.count({0, 1, 2, 3}));

    PointSet quad({{0, 0}, {5, 1}, {6, 5}, {1, 7}});
    auto g = delaunay_graph(build_halfplane_hypergraph(quad));
    std::sort(g.edges.begin(), g.edges.end());
    // hull cycle: consecutive pairs only, diagonals are not cuts
    CHECK(g.edges == std::vector<std::pair<int, int>>{
                         {0, 1}, {0, 3}, {1, 2}, {2, 3}});
}

TEST_CASE("halfplane random-cut oracle finds only known hyperedges") {
    CounterRng rng(101);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = static_cast<int>(rng.next_int(1, 7));
        PointSet p = random_general_points(rng, n, 30);
        auto h = build_halfplane_hypergraph(p);
        auto edges = edge_set(h);
        for (int probe = 0; probe < 400; ++probe) {
            const long long a = rng.next_int(-9, 9);
            const long long b = rng.next_int(-9, 9);
            const long long c = rng.next_int(-400, 400);
            if (a == 0 && b == 0) continue;
            std::vector<int> cut;
            for (int i = 0; i < n; ++i)
                if (a * p[i].x + b * p[i].y <= c) cut.push_back(i);
            if (!cut.empty()) CHECK(edges.count(cut));
        }
    }
}

TEST_CASE("disc hypergraph basics") {
    PointSet two({{0, 0}, {4, 2}});
    auto h2 = build_disc_hypergraph(two);
    CHECK(edge_set(h2) ==
          std::set<std::vector<int>>{{0}, {1}, {0, 1}});

    PointSet tri({{0, 0}, {4, 0}, {1, 3}});
    auto h3 = build_disc_hypergraph(tri);
    auto edges = edge_set(h3);
    for (const std::vector<int>& e :
         {std::vector<int>{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}})
        CHECK(edges.count(e));

    CHECK_THROWS_AS(
        build_disc_hypergraph(PointSet({{0, 0}, {2, 0}, {2, 2}, {0, 2}})),
        InputError);
}

TEST_CASE("disc random-cut oracle finds only known hyperedges") {
    CounterRng rng(303);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = static_cast<int>(rng.next_int(2, 7));
        PointSet p = random_general_points(rng, n, 25);
        auto h = build_disc_hypergraph(p);
        auto edges = edge_set(h);
        for (int probe = 0; probe < 400; ++probe) {
            const long long cx = rng.next_int(-60, 60);
            const long long cy = rng.next_int(-60, 60);
            const long long r2 = rng.next_int(1, 4000);
            std::vector<int> cut;
            for (int i = 0; i < n; ++i) {
                const long long dx = p[i].x - cx, dy = p[i].y - cy;
                if (dx * dx + dy * dy <= r2) cut.push_back(i);
            }
            if (!cut.empty()) CHECK(edges.count(cut));
        }
    }
}

TEST_CASE("disc Delaunay graphs are planar") {
    CounterRng rng(404);
    for (int trial = 0; trial < 8; ++trial) {
        const int n = static_cast<int>(rng.next_int(4, 9));
        PointSet p = random_general_points(rng, n, 40);
        auto g = delaunay_graph(build_disc_hypergraph(p));
        CHECK(is_planar(g.n_vertices, g.edges));
    }
}

TEST_CASE("region hypergraph of simple families") {
    DiscFamily overlapping({{0, 0, 9}, {4, 0, 9}});
    CHECK(edge_set(build_region_hypergraph(overlapping)) ==
          std::set<std::vector<int>>{{0}, {1}, {0, 1}});

    DiscFamily disjoint({{0, 0, 4}, {10, 0, 4}});
    CHECK(edge_set(build_region_hypergraph(disjoint)) ==
          std::set<std::vector<int>>{{0}, {1}});

    DiscFamily triple({{0, 0, 9}, {3, 0, 9}, {0, 3, 9}});
    CHECK(edge_set(build_region_hypergraph(triple)).count({0, 1, 2}));
}

TEST_CASE("region hypergraph sees annulus faces of nested discs") {
    // The big disc's center lies inside the small one, so no candidate point
    // of the naive center/vertex scheme would fall into the annulus.
    DiscFamily nested({{0, 0, 100}, {1, 0, 4}});
    auto edges = edge_set(build_region_hypergraph(nested));
    CHECK(edges == std::set<std::vector<int>>{{0}, {0, 1}});
}

TEST_CASE("region guards") {
    CHECK_THROWS_AS(DiscFamily({{0, 0, 4}, {0, 0, 4}}), InputError);
    CHECK_THROWS_AS(DiscFamily({{0, 0, 0}}), InputError);
    // external tangency: centers 2 apart, unit radii
    CHECK_THROWS_AS(build_region_hypergraph(DiscFamily({{0, 0, 1}, {2, 0, 1}})),
                    InputError);
    // internal tangency
    CHECK_THROWS_AS(build_region_hypergraph(DiscFamily({{0, 0, 4}, {1, 0, 1}})),
                    InputError);
}

TEST_CASE("region grid oracle agreement") {
    CounterRng rng(505);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = static_cast<int>(rng.next_int(1, 6));
        std::vector<Disc> discs;
        while (static_cast<int>(discs.size()) < n) {
            Disc d{rng.next_int(-12, 12), rng.next_int(-12, 12),
                   rng.next_int(1, 80)};
            auto copy = discs;
            copy.push_back(d);
            try {
                DiscFamily fam(copy);
                build_region_hypergraph(fam);
                discs.push_back(d);
            } catch (const InputError&) {
            }
        }
        DiscFamily fam(discs);
        auto edges = edge_set(build_region_hypergraph(fam));
        for (int gx = -44; gx <= 44; gx += 4)
            for (int gy = -44; gy <= 44; gy += 4) {
                // offset denominator keeps samples off circle boundaries
                const Rational x(gx * 16 + 1, 16), y(gy * 16 + 1, 16);
                auto cov = coverage_at(fam, x, y);
                if (!cov.empty()) CHECK(edges.count(cov));
            }
    }
}
