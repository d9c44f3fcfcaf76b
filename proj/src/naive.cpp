#include "symtri/enumeration.hpp"

#include <algorithm>

namespace symtri {

namespace {

class NaiveSearch {
public:
    NaiveSearch(const PointConfiguration& config, Mode mode, const Visitor& visitor)
        : config_(config), visitor_(visitor), n_(static_cast<int>(config.size())) {
        for (PointIndex a = 0; a < n_; ++a) {
            for (PointIndex b = a + 1; b < n_; ++b) {
                for (PointIndex c = b + 1; c < n_; ++c) {
                    const Simplex s{{a, b, c}};
                    const auto area = normalized_area(config, s);
                    if (area == 0 || (mode == Mode::Unimodular && area != 1)) continue;
                    pool_.push_back(s);
                }
            }
        }
        by_edge_.resize(static_cast<std::size_t>(n_ * n_));
        for (const auto& s : pool_) {
            for (const auto& e : edges_of(s)) by_edge_[slot(e)].push_back(s);
        }
        count_.assign(static_cast<std::size_t>(n_ * n_), 0);
    }

    BigInt run() {
        total_ = 0;
        if (config_.is_degenerate()) {
            emit();
            return total_;
        }
        // The triangle at the lowest point that rests on the hull edge leaving it
        // counter-clockwise is unique in every triangulation.
        const auto hull = config_.hull();
        const auto& p0 = config_[hull[0]];
        const auto& p1 = config_[hull[1]];
        for (const auto& s : pool_) {
            if (s.v[0] != hull[0]) continue;
            const bool rests = orientation(p0, p1, config_[s.v[1]]) == 0 || orientation(p0, p1, config_[s.v[2]]) == 0;
            if (!rests) continue;
            add(s);
            recurse();
            remove(s);
        }
        return total_;
    }

private:
    std::size_t slot(const Edge& e) const { return static_cast<std::size_t>(e.v[0] * n_ + e.v[1]); }

    void add(const Simplex& s) {
        tris_.push_back(s);
        for (const auto& e : edges_of(s)) ++count_[slot(e)];
    }

    void remove(const Simplex& s) {
        tris_.pop_back();
        for (const auto& e : edges_of(s)) --count_[slot(e)];
    }

    std::optional<Edge> open_edge() const {
        std::optional<Edge> best;
        for (const auto& t : tris_) {
            for (const auto& e : edges_of(t)) {
                if (count_[slot(e)] == 1 && !config_.is_boundary_edge(e) && (!best || e < *best)) best = e;
            }
        }
        return best;
    }

    void recurse() {
        const auto e = open_edge();
        if (!e) {
            emit();
            return;
        }
        for (const auto& s : by_edge_[slot(*e)]) {
            bool ok = true;
            for (const auto& t : tris_) {
                if (s == t || !properly_intersect(config_, s, t)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            add(s);
            recurse();
            remove(s);
        }
    }

    void emit() {
        ++total_;
        if (visitor_) {
            Triangulation t{config_.region(), tris_};
            std::sort(t.simplices.begin(), t.simplices.end());
            visitor_(t);
        }
    }

    const PointConfiguration& config_;
    const Visitor& visitor_;
    int n_;
    std::vector<Simplex> pool_;
    std::vector<std::vector<Simplex>> by_edge_;
    std::vector<int> count_;
    std::vector<Simplex> tris_;
    BigInt total_;
};

}  // namespace

BigInt enumerate_naive(const PointConfiguration& config, Mode mode, const Visitor& visitor) {
    NaiveSearch search(config, mode, visitor);
    return search.run();
}

BigInt enumerate_naive_symmetric(int d, Mode mode, const Visitor& visitor) {
    if (d < 1) throw std::invalid_argument("dilation d must be >= 1");
    if (d > kNaiveSymmetricMaxD) {
        throw std::invalid_argument("naive enumeration refused for d = " + std::to_string(d) + " (limit " +
                                    std::to_string(kNaiveSymmetricMaxD) + ")");
    }
    const auto config = lattice_points(Region::full(d));
    BigInt symmetric = 0;
    enumerate_naive(config, mode, [&](const Triangulation& t) {
        if (!is_mirror_invariant(config, t)) return;
        ++symmetric;
        if (visitor) visitor(t);
    });
    return symmetric;
}

TriangulationCheck validate(const PointConfiguration& config, const Triangulation& t) {
    TriangulationCheck check;
    std::int64_t area = 0;
    std::vector<bool> used(config.size(), false);
    for (std::size_t i = 0; i < t.simplices.size(); ++i) {
        const auto& s = t.simplices[i];
        const auto a = normalized_area(config, s);
        area += a;
        check.unimodular = check.unimodular && a == 1;
        if (a == 0) check.proper = false;
        for (PointIndex p : s.v) used[static_cast<std::size_t>(p)] = true;
        for (std::size_t j = i + 1; j < t.simplices.size(); ++j) {
            if (s == t.simplices[j] || !properly_intersect(config, s, t.simplices[j])) check.proper = false;
        }
    }
    check.covers = area == config.normalized_area();
    check.uses_all_points = config.is_degenerate() || std::all_of(used.begin(), used.end(), [](bool b) { return b; });
    return check;
}

std::vector<Edge> distinct_edges(const PointConfiguration& config, const Triangulation& t) {
    std::vector<Edge> edges;
    for (const auto& s : t.simplices) {
        for (const auto& e : edges_of(s)) edges.push_back(e);
    }
    if (config.is_degenerate()) {
        // a collinear configuration is subdivided by its consecutive points
        for (std::size_t i = 0; i + 1 < config.size(); ++i) {
            edges.push_back(Edge::make(static_cast<PointIndex>(i), static_cast<PointIndex>(i + 1)));
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

bool is_mirror_invariant(const PointConfiguration& config, const Triangulation& t) {
    const auto pi = reflection(config);
    std::vector<Simplex> image;
    image.reserve(t.simplices.size());
    for (const auto& s : t.simplices) image.push_back(pi.apply(s));
    std::sort(image.begin(), image.end());
    std::vector<Simplex> orig = t.simplices;
    std::sort(orig.begin(), orig.end());
    return image == orig;
}

}  // namespace symtri
