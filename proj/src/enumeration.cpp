#include "symtri/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <thread>

namespace symtri {

std::string to_string(Mode mode) { return mode == Mode::Unimodular ? "unimodular" : "all"; }

Mode parse_mode(const std::string& s) {
    if (s == "unimodular") return Mode::Unimodular;
    if (s == "all") return Mode::All;
    throw std::invalid_argument("unknown mode '" + s + "'");
}

namespace {

inline bool test_bit(const std::uint64_t* w, int i) { return (w[i >> 6] >> (i & 63)) & 1u; }
inline void set_bit(std::uint64_t* w, int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
inline void clear_bit(std::uint64_t* w, int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

int lowest_bit(const std::vector<std::uint64_t>& w) {
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k]) return static_cast<int>(k * 64) + std::countr_zero(w[k]);
    }
    return -1;
}

struct Box {
    int x0, y0, x1, y1;
};

Box bounding_box(const PointConfiguration& config, const Simplex& s) {
    Box b{config[s.v[0]].x, config[s.v[0]].y, config[s.v[0]].x, config[s.v[0]].y};
    for (PointIndex i : s.v) {
        b.x0 = std::min(b.x0, config[i].x);
        b.y0 = std::min(b.y0, config[i].y);
        b.x1 = std::max(b.x1, config[i].x);
        b.y1 = std::max(b.y1, config[i].y);
    }
    return b;
}

bool boxes_disjoint(const Box& a, const Box& b) {
    return a.x1 < b.x0 || b.x1 < a.x0 || a.y1 < b.y0 || b.y1 < a.y0;
}

std::vector<Simplex> region_pool(const PointConfiguration& config, Mode mode) {
    std::vector<Simplex> pool;
    const auto n = static_cast<PointIndex>(config.size());
    for (PointIndex a = 0; a < n; ++a) {
        for (PointIndex b = a + 1; b < n; ++b) {
            for (PointIndex c = b + 1; c < n; ++c) {
                const Simplex s{{a, b, c}};
                const auto area = normalized_area(config, s);
                if (area == 0 || (mode == Mode::Unimodular && area != 1)) continue;
                pool.push_back(s);
            }
        }
    }
    return pool;
}

}  // namespace

// ---------------------------------------------------------------------------
// SearchSpace

SearchSpace::SearchSpace(PointConfiguration config, Mode mode, bool symmetric)
    : config_(std::move(config)), mode_(mode), symmetric_(symmetric) {}

std::shared_ptr<const SearchSpace> SearchSpace::symmetric(int d, Mode mode, std::size_t pool_limit) {
    auto config = lattice_points(Region::full(d));
    std::shared_ptr<SearchSpace> sp(new SearchSpace(config, mode, true));
    sp->mirror_ = reflection(sp->config_);
    auto pool = h_feasible_pool(sp->config_, mode == Mode::Unimodular);
    std::vector<Simplex> reps;
    reps.reserve(pool.size());
    for (const auto& s : pool) reps.push_back(std::min(s, sp->mirror_.apply(s)));
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    sp->build(std::move(reps), pool_limit);
    sp->set_quotient(feasible_symmetry_group(symmetry_group(sp->config_), sp->config_, pool));
    return sp;
}

std::shared_ptr<const SearchSpace> SearchSpace::plain(const Region& region, Mode mode, bool up_to_symmetry,
                                                      std::size_t pool_limit) {
    std::shared_ptr<SearchSpace> sp(new SearchSpace(lattice_points(region), mode, false));
    sp->build(region_pool(sp->config_, mode), pool_limit);
    Group quotient;
    if (up_to_symmetry) {
        quotient = symmetry_group(sp->config_);
    } else {
        quotient.elements.push_back(symmetry_group(sp->config_).elements.front());
    }
    sp->set_quotient(std::move(quotient));
    return sp;
}

void SearchSpace::build(std::vector<Simplex> reps, std::size_t pool_limit) {
    if (reps.size() > pool_limit) {
        throw EnumerationAborted("simplex pool of " + std::to_string(reps.size()) + " exceeds the limit of " +
                                 std::to_string(pool_limit));
    }
    reps_ = std::move(reps);
    const int n = size();
    words_ = std::max(1, (n + 63) / 64);

    orbit_members_.resize(2 * reps_.size());
    orbit_len_.resize(reps_.size());
    orbit_area_.resize(reps_.size());
    for (int i = 0; i < n; ++i) {
        const auto& r = reps_[i];
        orbit_members_[2 * i] = r;
        orbit_len_[i] = 1;
        if (symmetric_) {
            const Simplex m = mirror_.apply(r);
            if (m != r) {
                orbit_members_[2 * i + 1] = m;
                orbit_len_[i] = 2;
            }
        }
        orbit_area_[i] = normalized_area(config_, r) * orbit_len_[i];
    }

    for (int i = 0; i < n; ++i) {
        for (const auto& s : orbit(i)) {
            for (const auto& e : edges_of(s)) edges_.push_back(e);
        }
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    edge_boundary_.resize(edges_.size());
    edge_capacity_.resize(edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        edge_boundary_[e] = config_.is_boundary_edge(edges_[e]);
        edge_capacity_[e] = edge_boundary_[e] ? 1 : 2;
    }

    auto edge_id = [&](const Edge& e) {
        return static_cast<int>(std::lower_bound(edges_.begin(), edges_.end(), e) - edges_.begin());
    };
    rep_edges_.assign(reps_.size(), {-1, -1, -1, -1, -1, -1});
    rep_points_.assign(reps_.size(), {-1, -1, -1, -1, -1, -1});
    edge_cover_.assign(edges_.size() * static_cast<std::size_t>(words_), 0);
    point_cover_.assign(config_.size() * static_cast<std::size_t>(words_), 0);
    for (int i = 0; i < n; ++i) {
        int k = 0;
        int m = 0;
        for (const auto& s : orbit(i)) {
            for (const auto& e : edges_of(s)) {
                const int id = edge_id(e);
                rep_edges_[i][k++] = id;
                set_bit(&edge_cover_[static_cast<std::size_t>(id) * words_], i);
            }
            for (PointIndex p : s.v) {
                rep_points_[i][m++] = p;
                set_bit(&point_cover_[static_cast<std::size_t>(p) * words_], i);
            }
        }
    }

    conflict_.assign(reps_.size() * static_cast<std::size_t>(words_), 0);
    std::vector<Box> boxes;
    boxes.reserve(orbit_members_.size());
    for (const auto& s : orbit_members_) boxes.push_back(bounding_box(config_, s));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool compatible = true;
            for (int a = 0; a < orbit_len_[i] && compatible; ++a) {
                for (int b = 0; b < orbit_len_[j] && compatible; ++b) {
                    if (boxes_disjoint(boxes[2 * i + a], boxes[2 * j + b])) continue;
                    compatible = properly_intersect(config_, orbit_members_[2 * i + a], orbit_members_[2 * j + b]);
                }
            }
            if (!compatible) {
                set_bit(&conflict_[static_cast<std::size_t>(i) * words_], j);
                set_bit(&conflict_[static_cast<std::size_t>(j) * words_], i);
            }
        }
    }
}

void SearchSpace::set_quotient(Group quotient) {
    quotient_ = std::move(quotient);
    rep_perms_.clear();
    for (const auto& g : quotient_.elements) {
        std::vector<int> perm(reps_.size());
        bool moves = false;
        for (int i = 0; i < size(); ++i) {
            const int j = find(g.apply(reps_[i]));
            if (j < 0) throw std::logic_error("quotient element does not preserve the simplex pool");
            perm[i] = j;
            moves = moves || j != i;
        }
        if (moves) rep_perms_.push_back(std::move(perm));
    }
}

std::span<const Simplex> SearchSpace::orbit(int i) const {
    return {orbit_members_.data() + 2 * i, orbit_len_[static_cast<std::size_t>(i)]};
}

Simplex SearchSpace::canonical(const Simplex& s) const {
    return symmetric_ ? std::min(s, mirror_.apply(s)) : s;
}

int SearchSpace::find(const Simplex& s) const {
    const Simplex c = canonical(s);
    auto it = std::lower_bound(reps_.begin(), reps_.end(), c);
    if (it == reps_.end() || *it != c) return -1;
    return static_cast<int>(it - reps_.begin());
}

bool SearchSpace::conflicts(int i, int j) const {
    return test_bit(&conflict_[static_cast<std::size_t>(i) * words_], j);
}

bool SearchSpace::is_canonical(std::span<const int> chosen) const {
    if (rep_perms_.empty()) return true;
    std::vector<int> mapped(chosen.size());
    for (const auto& perm : rep_perms_) {
        for (std::size_t k = 0; k < chosen.size(); ++k) mapped[k] = perm[chosen[k]];
        std::sort(mapped.begin(), mapped.end());
        if (std::lexicographical_compare(mapped.begin(), mapped.end(), chosen.begin(), chosen.end())) return false;
    }
    return true;
}

std::size_t SearchSpace::orbit_size(std::span<const int> chosen) const {
    std::vector<std::vector<int>> images;
    images.emplace_back(chosen.begin(), chosen.end());
    for (const auto& perm : rep_perms_) {
        std::vector<int> mapped(chosen.size());
        for (std::size_t k = 0; k < chosen.size(); ++k) mapped[k] = perm[chosen[k]];
        std::sort(mapped.begin(), mapped.end());
        images.push_back(std::move(mapped));
    }
    std::sort(images.begin(), images.end());
    return static_cast<std::size_t>(std::unique(images.begin(), images.end()) - images.begin());
}

// ---------------------------------------------------------------------------
// PartialState

PartialState::PartialState(const SearchSpace& space) : space_(&space) {
    const std::size_t w = static_cast<std::size_t>(space.words_);
    // every representative covers positive area, so depth <= region area
    const std::size_t levels = static_cast<std::size_t>(space.config_.normalized_area()) + 2;
    forbidden_levels_.assign(levels * w, 0);
    edge_count_.assign(space.edges_.size(), 0);
    const std::size_t ew = std::max<std::size_t>(1, (space.edges_.size() + 63) / 64);
    open_interior_.assign(ew, 0);
    open_boundary_.assign(ew, 0);
    if (space.mode_ == Mode::Unimodular) {
        for (std::size_t e = 0; e < space.edges_.size(); ++e) {
            if (space.edge_boundary_[e]) set_bit(open_boundary_.data(), static_cast<int>(e));
        }
    }
    point_use_.assign(space.config_.size(), 0);
    chosen_.reserve(levels);
}

const std::uint64_t* PartialState::forbidden() const {
    return &forbidden_levels_[chosen_.size() * static_cast<std::size_t>(space_->words_)];
}

void PartialState::touch_edge(int e, int delta) {
    const auto& sp = *space_;
    const int c = edge_count_[e] + delta;
    edge_count_[e] = static_cast<std::uint8_t>(c);
    if (sp.edge_boundary_[e]) {
        if (sp.mode_ == Mode::Unimodular && c == 0) {
            set_bit(open_boundary_.data(), e);
        } else {
            clear_bit(open_boundary_.data(), e);
        }
    } else if (c == 1) {
        set_bit(open_interior_.data(), e);
    } else {
        clear_bit(open_interior_.data(), e);
    }
}

void PartialState::push(int rep) {
    const auto& sp = *space_;
    const std::size_t w = static_cast<std::size_t>(sp.words_);
    const std::size_t depth = chosen_.size();
    if ((depth + 2) * w > forbidden_levels_.size()) throw std::logic_error("partial state exceeds maximal depth");
    const std::uint64_t* cur = &forbidden_levels_[depth * w];
    std::uint64_t* next = &forbidden_levels_[(depth + 1) * w];
    const std::uint64_t* conf = &sp.conflict_[static_cast<std::size_t>(rep) * w];
    for (std::size_t k = 0; k < w; ++k) next[k] = cur[k] | conf[k];
    chosen_.push_back(rep);
    for (int e : sp.rep_edges_[rep]) {
        if (e >= 0) touch_edge(e, +1);
    }
    for (int p : sp.rep_points_[rep]) {
        if (p >= 0) ++point_use_[p];
    }
    area_ += sp.orbit_area_[rep];
}

void PartialState::pop() {
    const auto& sp = *space_;
    const int rep = chosen_.back();
    chosen_.pop_back();
    for (int e : sp.rep_edges_[rep]) {
        if (e >= 0) touch_edge(e, -1);
    }
    for (int p : sp.rep_points_[rep]) {
        if (p >= 0) --point_use_[p];
    }
    area_ -= sp.orbit_area_[rep];
}

std::vector<Simplex> PartialState::expanded() const {
    std::vector<Simplex> out;
    for (int r : chosen_) {
        for (const auto& s : space_->orbit(r)) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int PartialState::edge_count(const Edge& e) const {
    const auto& edges = space_->edges_;
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) return 0;
    return edge_count_[static_cast<std::size_t>(it - edges.begin())];
}

bool PartialState::is_forbidden(int rep) const { return test_bit(forbidden(), rep); }

int PartialState::next_candidate(int after) const {
    const int n = space_->size();
    const std::uint64_t* f = forbidden();
    int i = after + 1;
    if (i >= n) return -1;
    int w = i >> 6;
    std::uint64_t bits = ~f[w] & (~std::uint64_t{0} << (i & 63));
    const int words = space_->words_;
    while (true) {
        if (bits) {
            const int r = w * 64 + std::countr_zero(bits);
            return r < n ? r : -1;
        }
        if (++w >= words) return -1;
        bits = ~f[w];
    }
}

int PartialState::highest_candidate_in(const std::uint64_t* mask) const {
    const std::uint64_t* f = forbidden();
    const int lo = last() + 1;
    const int lo_word = lo >> 6;
    for (int w = space_->words_ - 1; w >= lo_word; --w) {
        std::uint64_t bits = mask[w] & ~f[w];
        if (w == lo_word) bits &= ~std::uint64_t{0} << (lo & 63);
        if (bits) return w * 64 + 63 - std::countl_zero(bits);
    }
    return -1;
}

std::optional<Edge> PartialState::min_uncovered_interior_edge() const {
    const int e = lowest_bit(open_interior_);
    if (e < 0) return std::nullopt;
    return space_->edges_[static_cast<std::size_t>(e)];
}

int PartialState::coverage_limit() const {
    const auto& sp = *space_;
    const std::size_t w = static_cast<std::size_t>(sp.words_);
    int limit = sp.size() - 1;
    auto visit = [&](const std::vector<std::uint64_t>& open) {
        for (std::size_t k = 0; k < open.size(); ++k) {
            std::uint64_t bits = open[k];
            while (bits) {
                const int e = static_cast<int>(k * 64) + std::countr_zero(bits);
                bits &= bits - 1;
                const int m = highest_candidate_in(&sp.edge_cover_[static_cast<std::size_t>(e) * w]);
                if (m < 0) return false;
                limit = std::min(limit, m);
            }
        }
        return true;
    };
    if (!visit(open_interior_) || !visit(open_boundary_)) return -1;
    if (sp.mode_ == Mode::Unimodular) {
        for (std::size_t p = 0; p < point_use_.size(); ++p) {
            if (point_use_[p]) continue;
            const int m = highest_candidate_in(&sp.point_cover_[p * w]);
            if (m < 0) return -1;
            limit = std::min(limit, m);
            break;
        }
    }
    return limit;
}

bool is_complete(const PartialState& state) {
    return state.covered_area() == state.space().config().normalized_area();
}

bool prune_check(const PartialState& state) {
    const auto e = state.min_uncovered_interior_edge();
    if (!e) return false;
    const int c = state.next_candidate(state.last());
    if (c < 0) return true;
    // representatives are lex-sorted and lex-<= their mirror images, so the
    // first candidate carries the lex-minimal facet of all remaining orbits
    const auto& r = state.space().representative(c);
    return *e < Edge{{r.v[0], r.v[1]}};
}

bool canonical_check(const PartialState& state, const Group& quotient) {
    const auto& sp = state.space();
    const auto chosen = state.chosen();
    std::vector<int> mapped(chosen.size());
    for (const auto& g : quotient.elements) {
        for (std::size_t k = 0; k < chosen.size(); ++k) {
            const int j = sp.find(g.apply(sp.representative(chosen[k])));
            if (j < 0) throw std::invalid_argument("group element does not preserve the simplex pool");
            mapped[k] = j;
        }
        std::sort(mapped.begin(), mapped.end());
        if (std::lexicographical_compare(mapped.begin(), mapped.end(), chosen.begin(), chosen.end())) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// depth-first search

namespace {

struct SharedRun {
    const SearchSpace& space;
    const EnumerationConfig& cfg;
    const Visitor* visitor;
    std::mutex visit_mutex;
    std::atomic<std::uint64_t> nodes{0};
    bool serialize = false;
};

class Worker {
public:
    explicit Worker(SharedRun& run) : run_(run), state_(run.space) {}

    void replay(std::span<const int> prefix) {
        for (int r : prefix) state_.push(r);
    }

    void search() { dfs(); }

    void collect(std::size_t depth, std::vector<std::vector<int>>& tasks) {
        collect_depth_ = depth;
        tasks_ = &tasks;
        dfs();
        tasks_ = nullptr;
    }

    void finish() { flush_nodes(); }

    std::uint64_t count = 0;
    std::uint64_t raw = 0;

private:
    void count_node() {
        const std::uint64_t batch = run_.cfg.node_limit ? std::min<std::uint64_t>(4096, run_.cfg.node_limit) : 4096;
        if (++pending_nodes_ >= batch) flush_nodes();
    }

    void flush_nodes() {
        const auto total = run_.nodes.fetch_add(pending_nodes_, std::memory_order_relaxed) + pending_nodes_;
        pending_nodes_ = 0;
        if (run_.cfg.node_limit && total > run_.cfg.node_limit) {
            throw EnumerationAborted("node limit of " + std::to_string(run_.cfg.node_limit) +
                                     " reached; run incomplete");
        }
    }

    void emit() {
        ++count;
        raw += run_.space.has_nontrivial_quotient() ? run_.space.orbit_size(state_.chosen()) : 1;
        if (run_.visitor && *run_.visitor) {
            const auto& region = run_.space.config().region();
            Triangulation t{run_.space.is_symmetric() ? Region::full(region.d) : region, state_.expanded()};
            if (run_.serialize) {
                std::lock_guard lock(run_.visit_mutex);
                (*run_.visitor)(t);
            } else {
                (*run_.visitor)(t);
            }
        }
    }

    void dfs() {
        if (is_complete(state_)) {
            emit();
            return;
        }
        if (tasks_ && state_.chosen().size() == collect_depth_) {
            tasks_->emplace_back(state_.chosen().begin(), state_.chosen().end());
            return;
        }
        count_node();
        const auto& cfg = run_.cfg;
        if (cfg.facet_prune && prune_check(state_)) return;
        int limit = run_.space.size() - 1;
        if (cfg.coverage_guard) {
            limit = state_.coverage_limit();
            if (limit < 0) return;
        }
        for (int i = state_.next_candidate(state_.last()); i >= 0 && i <= limit; i = state_.next_candidate(i)) {
            state_.push(i);
            if (!cfg.canonical || run_.space.is_canonical(state_.chosen())) dfs();
            state_.pop();
        }
    }

    SharedRun& run_;
    PartialState state_;
    std::uint64_t pending_nodes_ = 0;
    std::size_t collect_depth_ = 0;
    std::vector<std::vector<int>>* tasks_ = nullptr;
};

}  // namespace

EnumerationResult enumerate(const SearchSpace& space, const EnumerationConfig& cfg, const Visitor& visitor) {
    if (cfg.workers < 1) throw std::invalid_argument("workers must be positive");
    SharedRun run{space, cfg, visitor ? &visitor : nullptr, {}, {0}, false};
    run.serialize = cfg.workers > 1;
    EnumerationResult result;

    if (cfg.workers == 1) {
        Worker w(run);
        w.search();
        w.finish();
        result.count = w.count;
        result.raw_count = w.raw;
        result.nodes = run.nodes.load();
        return result;
    }

    // split the tree at a shallow frontier; workers pull prefixes
    std::vector<std::vector<int>> tasks;
    std::unique_ptr<Worker> root;
    for (std::size_t depth = 1; depth <= 3; ++depth) {
        tasks.clear();
        root = std::make_unique<Worker>(run);
        root->collect(depth, tasks);
        if (tasks.size() >= static_cast<std::size_t>(cfg.workers) * 16) break;
    }
    root->finish();
    std::uint64_t count = root->count;
    std::uint64_t raw = root->raw;

    std::atomic<std::size_t> next{0};
    std::mutex merge;
    std::exception_ptr failure;
    std::vector<std::thread> threads;
    for (int t = 0; t < cfg.workers; ++t) {
        threads.emplace_back([&] {
            try {
                std::uint64_t c = 0;
                std::uint64_t r = 0;
                for (std::size_t k = next.fetch_add(1); k < tasks.size(); k = next.fetch_add(1)) {
                    Worker w(run);
                    w.replay(tasks[k]);
                    w.search();
                    w.finish();
                    c += w.count;
                    r += w.raw;
                }
                std::lock_guard lock(merge);
                count += c;
                raw += r;
            } catch (...) {
                std::lock_guard lock(merge);
                if (!failure) failure = std::current_exception();
                next.store(tasks.size());
            }
        });
    }
    for (auto& th : threads) th.join();
    if (failure) std::rethrow_exception(failure);
    result.count = count;
    result.raw_count = raw;
    result.nodes = run.nodes.load();
    return result;
}

EnumerationResult enumerate_symmetric(const EnumerationConfig& cfg, const Visitor& visitor) {
    if (cfg.d < 1) throw std::invalid_argument("dilation d must be >= 1");
    if (!cfg.symmetric) throw std::invalid_argument("enumerate_symmetric requires symmetric = true");
    auto space = SearchSpace::symmetric(cfg.d, cfg.mode, cfg.pool_limit);
    return enumerate(*space, cfg, visitor);
}

EnumerationResult enumerate_region(const Region& region, Mode mode, const Visitor& visitor) {
    EnumerationConfig cfg;
    cfg.d = region.d;
    cfg.mode = mode;
    cfg.symmetric = false;
    return enumerate_region(region, cfg, visitor);
}

EnumerationResult enumerate_region(const Region& region, const EnumerationConfig& cfg, const Visitor& visitor) {
    if (region.d < 1) throw std::invalid_argument("dilation d must be >= 1");
    auto space = SearchSpace::plain(region, cfg.mode, cfg.up_to_symmetry, cfg.pool_limit);
    return enumerate(*space, cfg, visitor);
}

}  // namespace symtri
