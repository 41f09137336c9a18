#pragma once

#include <vector>

#include "cfcolor/hypergraph.hpp"
#include "cfcolor/rational.hpp"

namespace cfcolor {

struct Point {
    long long x = 0;
    long long y = 0;
    bool operator==(const Point&) const = default;
};

// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right turn,
// 0 collinear. Exact.
int orientation(const Point& a, const Point& b, const Point& c);

// +1 when d lies strictly inside the circumcircle of the non-collinear
// triple a,b,c, -1 strictly outside, 0 on the circle. Exact, independent of
// the orientation of a,b,c.
int incircle(const Point& a, const Point& b, const Point& c, const Point& d);

// Integer-coordinate point set with general-position flags computed at
// construction. Duplicate points are rejected.
class PointSet {
public:
    explicit PointSet(std::vector<Point> pts);

    int size() const { return static_cast<int>(pts_.size()); }
    const Point& operator[](int i) const { return pts_[i]; }
    const std::vector<Point>& points() const { return pts_; }

    bool no_three_collinear() const { return no3_; }
    bool no_four_cocircular() const { return no4_; }
    // Every point is a vertex of the convex hull.
    bool in_convex_position() const { return convex_; }

private:
    std::vector<Point> pts_;
    bool no3_ = true;
    bool no4_ = true;
    bool convex_ = true;
};

struct Disc {
    long long cx = 0;
    long long cy = 0;
    long long r2 = 0;  // squared radius
    bool operator==(const Disc&) const = default;
};

class DiscFamily {
public:
    explicit DiscFamily(std::vector<Disc> discs);

    int size() const { return static_cast<int>(discs_.size()); }
    const Disc& operator[](int i) const { return discs_[i]; }
    const std::vector<Disc>& discs() const { return discs_; }

private:
    std::vector<Disc> discs_;
};

// Vertices 0..n-1 on a line, one hyperedge per contiguous range; n(n+1)/2
// edges in total. Vertex ids double as line positions.
Hypergraph build_interval_hypergraph(int n);

// All nonempty subsets cut off by closed halfplanes. Requires no three
// collinear points.
Hypergraph build_halfplane_hypergraph(const PointSet& p);

// All nonempty subsets cut off by closed discs. Requires no three collinear
// and no four cocircular points.
Hypergraph build_disc_hypergraph(const PointSet& p);

// Discs as vertices; one hyperedge per distinct nonempty coverage set over
// the faces and vertices of the circle arrangement. Requires pairwise
// non-tangent, non-identical discs.
Hypergraph build_region_hypergraph(const DiscFamily& d);

// Coverage set of an exact rational point, ascending disc indices.
std::vector<int> coverage_at(const DiscFamily& d, const Rational& x,
                             const Rational& y);

}  // namespace cfcolor
