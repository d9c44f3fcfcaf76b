#pragma once

// Independent reference implementations used only by the tests.

#include "symtri/enumeration.hpp"

#include <boost/rational.hpp>

#include <algorithm>
#include <set>
#include <vector>

namespace oracle {

using Q = boost::rational<long long>;
// mixed int comparisons recurse under C++20 rewritten operators
inline const Q kZero{0};

struct QPoint {
    Q x, y;
    friend bool operator<(const QPoint& a, const QPoint& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
    friend bool operator==(const QPoint& a, const QPoint& b) { return a.x == b.x && a.y == b.y; }
};

inline Q cross(const QPoint& o, const QPoint& a, const QPoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/// Sutherland-Hodgman clipping of a convex polygon by a ccw triangle, closed
/// half-planes, exact rationals.
inline std::vector<QPoint> clip(std::vector<QPoint> poly, const std::array<QPoint, 3>& tri) {
    for (int k = 0; k < 3 && !poly.empty(); ++k) {
        const QPoint& a = tri[static_cast<std::size_t>(k)];
        const QPoint& b = tri[static_cast<std::size_t>((k + 1) % 3)];
        std::vector<QPoint> out;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const QPoint& p = poly[i];
            const QPoint& q = poly[(i + 1) % poly.size()];
            const Q sp = cross(a, b, p);
            const Q sq = cross(a, b, q);
            if (sp >= kZero) out.push_back(p);
            if ((sp > kZero && sq < kZero) || (sp < kZero && sq > kZero)) {
                const Q t = sp / (sp - sq);
                out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
            }
        }
        poly = std::move(out);
    }
    return poly;
}

inline std::array<QPoint, 3> ccw(const symtri::PointConfiguration& c, const symtri::Simplex& s) {
    std::array<QPoint, 3> t;
    for (int i = 0; i < 3; ++i) {
        const auto& p = c[s.v[static_cast<std::size_t>(i)]];
        t[static_cast<std::size_t>(i)] = {Q(p.x), Q(p.y)};
    }
    if (cross(t[0], t[1], t[2]) < kZero) std::swap(t[1], t[2]);
    return t;
}

/// True iff the closed triangles meet in a common face of both, decided from
/// the exact intersection polygon.
inline bool properly_intersect(const symtri::PointConfiguration& c, const symtri::Simplex& s,
                               const symtri::Simplex& r) {
    const auto ts = ccw(c, s);
    const auto tr = ccw(c, r);
    auto poly = clip({ts.begin(), ts.end()}, tr);
    std::sort(poly.begin(), poly.end());
    poly.erase(std::unique(poly.begin(), poly.end()), poly.end());
    if (poly.empty()) return true;
    for (std::size_t i = 2; i < poly.size(); ++i) {
        if (cross(poly[0], poly[1], poly[i]) != kZero) return false;  // positive area
    }
    // collinear: the extremes in lex order are the endpoints
    auto is_vertex = [](const std::array<QPoint, 3>& t, const QPoint& p) {
        return std::find(t.begin(), t.end(), p) != t.end();
    };
    return is_vertex(ts, poly.front()) && is_vertex(tr, poly.front()) && is_vertex(ts, poly.back()) &&
           is_vertex(tr, poly.back());
}

/// All nondegenerate triangles of a configuration.
inline std::vector<symtri::Simplex> all_triangles(const symtri::PointConfiguration& c, bool unimodular_only) {
    std::vector<symtri::Simplex> out;
    const int n = static_cast<int>(c.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int e = b + 1; e < n; ++e) {
                const auto s = symtri::Simplex::make(a, b, e);
                const auto area = symtri::normalized_area(c, s);
                if (area == 0 || (unimodular_only && area != 1)) continue;
                out.push_back(s);
            }
    return out;
}

inline std::vector<symtri::Simplex> image(const symtri::SymmetryAction& g, std::vector<symtri::Simplex> t) {
    for (auto& s : t) s = g.apply(s);
    std::sort(t.begin(), t.end());
    return t;
}

/// Number of orbits of a set of triangulations under a group, by canonical forms.
inline std::size_t orbit_count(const std::vector<std::vector<symtri::Simplex>>& ts, const symtri::Group& g) {
    std::set<std::vector<symtri::Simplex>> canon;
    for (const auto& t : ts) {
        auto best = image(g.elements.front(), t);
        for (const auto& h : g.elements) best = std::min(best, image(h, t));
        canon.insert(best);
    }
    return canon.size();
}

}  // namespace oracle
