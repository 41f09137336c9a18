#include "cfcolor/geometry.hpp"

#include <algorithm>
#include <set>

namespace cfcolor {

namespace {

int sign_of(const BigInt& v) { return v == 0 ? 0 : (v > 0 ? 1 : -1); }

}  // namespace

int orientation(const Point& a, const Point& b, const Point& c) {
    const BigInt v = BigInt(b.x - a.x) * BigInt(c.y - a.y) -
                     BigInt(b.y - a.y) * BigInt(c.x - a.x);
    return sign_of(v);
}

int incircle(const Point& a, const Point& b, const Point& c, const Point& d) {
    const int orient = orientation(a, b, c);
    if (orient == 0) throw InputError("incircle: collinear defining triple");
    const BigInt adx = a.x - d.x, ady = a.y - d.y;
    const BigInt bdx = b.x - d.x, bdy = b.y - d.y;
    const BigInt cdx = c.x - d.x, cdy = c.y - d.y;
    const BigInt al = adx * adx + ady * ady;
    const BigInt bl = bdx * bdx + bdy * bdy;
    const BigInt cl = cdx * cdx + cdy * cdy;
    const BigInt det = adx * (bdy * cl - cdy * bl) -
                       ady * (bdx * cl - cdx * bl) +
                       al * (bdx * cdy - cdx * bdy);
    return sign_of(det) * orient;
}

PointSet::PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {
    const int n = static_cast<int>(pts_.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (pts_[i] == pts_[j]) throw InputError("duplicate point");

    for (int i = 0; i < n && no3_; ++i)
        for (int j = i + 1; j < n && no3_; ++j)
            for (int k = j + 1; k < n; ++k)
                if (orientation(pts_[i], pts_[j], pts_[k]) == 0) {
                    no3_ = false;
                    break;
                }

    if (no3_) {
        for (int i = 0; i < n && no4_; ++i)
            for (int j = i + 1; j < n && no4_; ++j)
                for (int k = j + 1; k < n && no4_; ++k)
                    for (int l = k + 1; l < n; ++l)
                        if (incircle(pts_[i], pts_[j], pts_[k], pts_[l]) == 0) {
                            no4_ = false;
                            break;
                        }
    } else {
        no4_ = false;
    }

    // A point is interior iff it lies inside or on a triangle of three others.
    for (int p = 0; p < n && convex_; ++p) {
        for (int i = 0; i < n && convex_; ++i) {
            if (i == p) continue;
            for (int j = i + 1; j < n && convex_; ++j) {
                if (j == p) continue;
                for (int k = j + 1; k < n; ++k) {
                    if (k == p) continue;
                    const int o = orientation(pts_[i], pts_[j], pts_[k]);
                    if (o == 0) continue;
                    const int s1 = orientation(pts_[i], pts_[j], pts_[p]);
                    const int s2 = orientation(pts_[j], pts_[k], pts_[p]);
                    const int s3 = orientation(pts_[k], pts_[i], pts_[p]);
                    if (s1 * o >= 0 && s2 * o >= 0 && s3 * o >= 0) {
                        convex_ = false;
                        break;
                    }
                }
            }
        }
    }
}

DiscFamily::DiscFamily(std::vector<Disc> discs) : discs_(std::move(discs)) {
    for (const auto& d : discs_)
        if (d.r2 <= 0) throw InputError("disc with non-positive squared radius");
    const int n = static_cast<int>(discs_.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (discs_[i] == discs_[j]) throw InputError("duplicate disc");
}

Hypergraph build_interval_hypergraph(int n) {
    if (n < 1) throw InputError("interval hypergraph needs n >= 1");
    std::vector<std::vector<int>> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    for (int s = 0; s < n; ++s)
        for (int t = s; t < n; ++t) {
            std::vector<int> e(t - s + 1);
            for (int i = s; i <= t; ++i) e[i - s] = i;
            edges.push_back(std::move(e));
        }
    return Hypergraph(n, std::move(edges));
}

Hypergraph build_halfplane_hypergraph(const PointSet& p) {
    if (!p.no_three_collinear())
        throw InputError("halfplane hypergraph requires no three collinear points");
    const int n = p.size();
    std::vector<std::vector<int>> edges;
    if (n == 1) {
        edges.push_back({0});
        return Hypergraph(1, std::move(edges));
    }
    // Every halfplane cut is realized by a boundary line through one or two
    // points: sweep all ordered pairs and each boundary-inclusion choice.
    std::vector<int> open_side;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            open_side.clear();
            for (int r = 0; r < n; ++r) {
                if (r == i || r == j) continue;
                if (orientation(p[i], p[j], p[r]) > 0) open_side.push_back(r);
            }
            for (int mask = 0; mask < 4; ++mask) {
                std::vector<int> cut = open_side;
                if (mask & 1) cut.push_back(i);
                if (mask & 2) cut.push_back(j);
                if (!cut.empty()) edges.push_back(std::move(cut));
            }
        }
    return Hypergraph(n, std::move(edges));
}

Hypergraph build_disc_hypergraph(const PointSet& p) {
    if (!p.no_three_collinear() || !p.no_four_cocircular())
        throw InputError(
            "disc hypergraph requires no three collinear and no four cocircular points");
    const int n = p.size();
    std::vector<std::vector<int>> edges;

    for (int i = 0; i < n; ++i) edges.push_back({i});
    {
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        edges.push_back(std::move(all));
    }

    auto emit = [&edges](const std::vector<int>& inside,
                         const std::vector<int>& on) {
        const int m = static_cast<int>(on.size());
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<int> cut = inside;
            for (int b = 0; b < m; ++b)
                if (mask & (1 << b)) cut.push_back(on[b]);
            if (!cut.empty()) edges.push_back(std::move(cut));
        }
    };

    // Diametral circles of pairs. In-circle test against the circle with
    // diameter p_i p_j, scaled by 4 to stay integral:
    //   (2x - xi - xj)^2 + (2y - yi - yj)^2  vs  (xi - xj)^2 + (yi - yj)^2.
    std::vector<int> inside, on;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            inside.clear();
            on.clear();
            const BigInt rhs = BigInt(p[i].x - p[j].x) * (p[i].x - p[j].x) +
                               BigInt(p[i].y - p[j].y) * (p[i].y - p[j].y);
            for (int r = 0; r < n; ++r) {
                const BigInt ex = 2 * BigInt(p[r].x) - p[i].x - p[j].x;
                const BigInt ey = 2 * BigInt(p[r].y) - p[i].y - p[j].y;
                const BigInt lhs = ex * ex + ey * ey;
                if (lhs < rhs)
                    inside.push_back(r);
                else if (lhs == rhs)
                    on.push_back(r);
            }
            emit(inside, on);
        }

    // Circumcircles of triples. No fourth cocircular point exists, so the
    // boundary set is exactly the triple.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                inside.clear();
                for (int r = 0; r < n; ++r) {
                    if (r == i || r == j || r == k) continue;
                    if (incircle(p[i], p[j], p[k], p[r]) > 0) inside.push_back(r);
                }
                emit(inside, {i, j, k});
            }

    return Hypergraph(n, std::move(edges));
}

std::vector<int> coverage_at(const DiscFamily& d, const Rational& x,
                             const Rational& y) {
    std::vector<int> cov;
    for (int i = 0; i < d.size(); ++i) {
        const Rational dx = x - d[i].cx;
        const Rational dy = y - d[i].cy;
        if (dx * dx + dy * dy <= Rational(d[i].r2)) cov.push_back(i);
    }
    return cov;
}

}  // namespace cfcolor
