#include <algorithm>
#include <cmath>
#include <vector>

#include "cfcolor/geometry.hpp"

// Region hypergraph of a disc family: enumerate every coverage set of the
// circle arrangement exactly. Sample x-coordinates are chosen strictly
// between consecutive critical abscissas (circle extremes and intersection
// points), then each vertical line is cut at its circle crossings and one
// rational point per gap is classified. Arrangement vertices are classified
// directly in quadratic-surd arithmetic, so coverage sets realized only at
// boundary points are kept as well.

namespace cfcolor {

namespace {

int sgn(const Rational& r) { return r == 0 ? 0 : (r > 0 ? 1 : -1); }

// sign of A + B*sqrt(u), u >= 0
int sign_single(const Rational& A, const Rational& B, const Rational& u) {
    if (B == 0 || u == 0) return sgn(A);
    if (B > 0) {
        if (A >= 0) return 1;
        return sgn(B * B * u - A * A);
    }
    return -sign_single(-A, -B, u);
}

// sign of B*sqrt(u) + C*sqrt(w)
int sign_two_roots(const Rational& B, const Rational& u, const Rational& C,
                   const Rational& w) {
    const int sb = (B == 0 || u == 0) ? 0 : sgn(B);
    const int sc = (C == 0 || w == 0) ? 0 : sgn(C);
    if (sb == 0) return sc;
    if (sc == 0) return sb;
    if (sb == sc) return sb;
    const int m = sgn(B * B * u - C * C * w);
    return m == 0 ? 0 : (m > 0 ? sb : sc);
}

// sign of A + B*sqrt(u) + C*sqrt(w)
int sign_full(const Rational& A, const Rational& B, const Rational& u,
              const Rational& C, const Rational& w) {
    if (B == 0 || u == 0) return sign_single(A, C, w);
    if (C == 0 || w == 0) return sign_single(A, B, u);
    const int st = sign_two_roots(B, u, C, w);
    const int sa = sgn(A);
    if (sa == 0) return st;
    if (st == 0) return sa;
    if (sa == st) return sa;
    const Rational diff = A * A - B * B * u - C * C * w;
    const int m = sign_single(diff, Rational(-2) * B * C, u * w);
    return m == 0 ? 0 : (m > 0 ? sa : st);
}

// value = a + b*sqrt(rad), rad >= 0
struct Surd {
    Rational a;
    Rational b;
    Rational rad;
};

int compare(const Surd& lhs, const Surd& rhs) {
    return sign_full(lhs.a - rhs.a, lhs.b, lhs.rad, -rhs.b, rhs.rad);
}

double approx(const Surd& s) {
    return static_cast<double>(s.a) +
           static_cast<double>(s.b) *
               std::sqrt(std::max(0.0, static_cast<double>(s.rad)));
}

Rational from_double(double x) {
    const double scaled = x * 1048576.0;
    return Rational(static_cast<long long>(std::llround(scaled)), 1048576LL);
}

// Exact rational strictly between lo and hi; requires lo < hi.
Rational rational_between(const Surd& lo, const Surd& hi) {
    Rational a = from_double(approx(lo)) - 2;
    Rational b = from_double(approx(hi)) + 2;
    for (;;) {
        Rational mid = (a + b) / 2;
        const Surd m{mid, Rational(0), Rational(0)};
        if (compare(m, lo) <= 0) {
            a = std::move(mid);
        } else if (compare(m, hi) >= 0) {
            b = std::move(mid);
        } else {
            return mid;
        }
    }
}

void sort_unique(std::vector<Surd>& v) {
    std::sort(v.begin(), v.end(),
              [](const Surd& x, const Surd& y) { return compare(x, y) < 0; });
    v.erase(std::unique(v.begin(), v.end(),
                        [](const Surd& x, const Surd& y) {
                            return compare(x, y) == 0;
                        }),
            v.end());
}

struct CirclePair {
    int i, j;
    Rational base_x, base_y;  // chord midpoint
    Rational coef_x, coef_y;  // displacement coefficients of sqrt(q)
    Rational q;               // squared half-chord over squared distance
};

}  // namespace

Hypergraph build_region_hypergraph(const DiscFamily& d) {
    const int n = d.size();
    if (n < 1) throw InputError("region hypergraph needs at least one disc");

    // Tangency guard: |c1-c2|^2 == (r1 +- r2)^2 collapses exactly to
    // (dist2 - R1 - R2)^2 == 4 R1 R2 over the squared radii.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const BigInt dx = BigInt(d[i].cx) - d[j].cx;
            const BigInt dy = BigInt(d[i].cy) - d[j].cy;
            const BigInt dist2 = dx * dx + dy * dy;
            const BigInt s = dist2 - d[i].r2 - d[j].r2;
            if (s * s == 4 * BigInt(d[i].r2) * d[j].r2)
                throw InputError("tangent disc pair");
        }

    std::vector<Surd> critical;
    std::vector<CirclePair> crossings;
    for (int i = 0; i < n; ++i) {
        critical.push_back({Rational(d[i].cx), Rational(1), Rational(d[i].r2)});
        critical.push_back({Rational(d[i].cx), Rational(-1), Rational(d[i].r2)});
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const BigInt dx = BigInt(d[j].cx) - d[i].cx;
            const BigInt dy = BigInt(d[j].cy) - d[i].cy;
            const BigInt dist2 = dx * dx + dy * dy;
            const BigInt s = dist2 - d[i].r2 - d[j].r2;
            if (s * s >= 4 * BigInt(d[i].r2) * d[j].r2) continue;  // no crossing

            const BigInt m = dist2 + d[i].r2 - d[j].r2;
            const Rational t = Rational(m) / Rational(2 * dist2);
            const Rational q =
                Rational(4 * dist2 * d[i].r2 - m * m) / Rational(4 * dist2 * dist2);
            CirclePair cp;
            cp.i = i;
            cp.j = j;
            cp.base_x = Rational(d[i].cx) + t * Rational(dx);
            cp.base_y = Rational(d[i].cy) + t * Rational(dy);
            cp.coef_x = Rational(-dy);
            cp.coef_y = Rational(dx);
            cp.q = q;
            crossings.push_back(cp);
            critical.push_back({cp.base_x, cp.coef_x, q});
            critical.push_back({cp.base_x, -cp.coef_x, q});
        }
    sort_unique(critical);

    std::vector<std::vector<int>> edges;

    // Disc centers.
    for (int i = 0; i < n; ++i) {
        auto cov = coverage_at(d, Rational(d[i].cx), Rational(d[i].cy));
        if (!cov.empty()) edges.push_back(std::move(cov));
    }

    // One vertical line per gap between consecutive critical abscissas.
    std::vector<Surd> cuts;
    for (std::size_t g = 0; g + 1 < critical.size(); ++g) {
        const Rational x = rational_between(critical[g], critical[g + 1]);
        cuts.clear();
        for (int i = 0; i < n; ++i) {
            const Rational off = x - d[i].cx;
            const Rational depth = Rational(d[i].r2) - off * off;
            if (depth > 0) {
                cuts.push_back({Rational(d[i].cy), Rational(1), depth});
                cuts.push_back({Rational(d[i].cy), Rational(-1), depth});
            }
        }
        if (cuts.empty()) continue;
        sort_unique(cuts);
        for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
            const Rational y = rational_between(cuts[c], cuts[c + 1]);
            auto cov = coverage_at(d, x, y);
            if (!cov.empty()) edges.push_back(std::move(cov));
        }
    }

    // Arrangement vertices, classified in surd arithmetic. Coordinates of
    // both intersection points of a pair share the radicand q.
    for (const auto& cp : crossings) {
        for (int side = -1; side <= 1; side += 2) {
            std::vector<int> cov;
            for (int k = 0; k < n; ++k) {
                const Rational ax = cp.base_x - d[k].cx;
                const Rational bx = Rational(side) * cp.coef_x;
                const Rational ay = cp.base_y - d[k].cy;
                const Rational by = Rational(side) * cp.coef_y;
                // (ax + bx sqrt q)^2 + (ay + by sqrt q)^2 - Rk
                const Rational lin =
                    ax * ax + bx * bx * cp.q + ay * ay + by * by * cp.q -
                    Rational(d[k].r2);
                const Rational root_coef = 2 * (ax * bx + ay * by);
                if (sign_single(lin, root_coef, cp.q) <= 0) cov.push_back(k);
            }
            if (!cov.empty()) edges.push_back(std::move(cov));
        }
    }

    return Hypergraph(n, std::move(edges));
}

}  // namespace cfcolor
