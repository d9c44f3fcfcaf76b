#pragma once

// Symmetric lexicographic subset reverse search over lattice triangles.
//
// A search space is a lex-sorted list of orbit representatives (H-orbits of
// H-feasible triangles for symmetric enumeration, single triangles otherwise)
// with precomputed admissibility conflicts. A depth-first search adds
// representatives in increasing order, keeps only lex-minimal states under the
// quotient group, and emits every state whose covered area equals the area of
// the region.

#include "symtri/bigint.hpp"
#include "symtri/geometry.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace symtri {

enum class Mode { Unimodular, All };
enum class Emit { CountOnly, Stream };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& s);

struct EnumerationConfig {
    int d = 1;
    Mode mode = Mode::Unimodular;
    bool symmetric = true;
    int workers = 1;
    Emit emit = Emit::CountOnly;

    // search switches; all on is the production configuration
    bool facet_prune = true;     // lex-min uncovered facet vs lex-min candidate facet
    bool coverage_guard = true;  // every open edge/unused point keeps a covering candidate
    bool canonical = true;       // orderly check under the quotient group
    bool up_to_symmetry = false; // plain regions only: quotient by the full symmetry group

    std::uint64_t node_limit = 0;       // 0 = unlimited
    std::size_t pool_limit = 1u << 20;  // maximum number of orbit representatives
};

struct Triangulation {
    Region region;
    std::vector<Simplex> simplices;  // sorted

    friend bool operator==(const Triangulation&, const Triangulation&) = default;
};

/// Called once per emitted triangulation. With more than one worker calls are
/// serialized but unordered.
using Visitor = std::function<void(const Triangulation&)>;

struct EnumerationResult {
    BigInt count;      // classes up to the quotient group
    BigInt raw_count;  // triangulations before quotienting
    std::uint64_t nodes = 0;
};

/// Raised when a resource guard stops a run. No partial count is reported.
class EnumerationAborted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SearchSpace {
public:
    /// H-orbits of H-feasible triangles of FullTriangle(d); quotient group G_H.
    static std::shared_ptr<const SearchSpace> symmetric(int d, Mode mode, std::size_t pool_limit = 1u << 20);
    /// Every triangle of the region as its own orbit; quotient trivial unless
    /// up_to_symmetry, in which case the full affine symmetry group is used.
    static std::shared_ptr<const SearchSpace> plain(const Region& region, Mode mode, bool up_to_symmetry = false,
                                                    std::size_t pool_limit = 1u << 20);

    const PointConfiguration& config() const { return config_; }
    Mode mode() const { return mode_; }
    bool is_symmetric() const { return symmetric_; }
    int size() const { return static_cast<int>(reps_.size()); }
    int word_count() const { return words_; }

    const Simplex& representative(int i) const { return reps_[static_cast<std::size_t>(i)]; }
    std::span<const Simplex> orbit(int i) const;
    /// Index of the representative whose orbit contains s, or -1.
    int find(const Simplex& s) const;
    /// Canonical representative of the orbit of s (lex-min of s and its mirror).
    Simplex canonical(const Simplex& s) const;

    const Group& quotient_group() const { return quotient_; }
    /// The mirror as a point permutation (symmetric spaces only).
    const SymmetryAction* mirror() const { return symmetric_ ? &mirror_ : nullptr; }

    /// Orderly check against the precomputed representative permutations of the
    /// quotient elements that move at least one orbit. `chosen` must be sorted.
    bool is_canonical(std::span<const int> chosen) const;
    /// Number of distinct images of `chosen` under the quotient group.
    std::size_t orbit_size(std::span<const int> chosen) const;
    bool has_nontrivial_quotient() const { return !rep_perms_.empty(); }

    bool conflicts(int i, int j) const;

private:
    friend class PartialState;
    SearchSpace(PointConfiguration config, Mode mode, bool symmetric);
    void build(std::vector<Simplex> pool, std::size_t pool_limit);
    void set_quotient(Group quotient);

    PointConfiguration config_;
    Mode mode_;
    bool symmetric_;
    SymmetryAction mirror_;

    std::vector<Simplex> reps_;
    std::vector<Simplex> orbit_members_;  // flattened, 2 slots per rep
    std::vector<std::uint8_t> orbit_len_;
    std::vector<std::int64_t> orbit_area_;

    int words_ = 0;
    std::vector<std::uint64_t> conflict_;  // size() rows of words_

    std::vector<Edge> edges_;  // lex-sorted
    std::vector<std::uint8_t> edge_capacity_;
    std::vector<bool> edge_boundary_;
    std::vector<std::array<int, 6>> rep_edges_;  // edge ids with multiplicity, -1 padded
    std::vector<std::array<int, 6>> rep_points_;
    std::vector<std::uint64_t> edge_cover_;   // edges_.size() rows
    std::vector<std::uint64_t> point_cover_;  // config_.size() rows

    Group quotient_;
    std::vector<std::vector<int>> rep_perms_;
};

/// In-progress enumeration state. Maintains the admissible-candidate mask,
/// per-edge incidence counts and the covered area incrementally.
class PartialState {
public:
    explicit PartialState(const SearchSpace& space);

    void push(int rep);
    void pop();

    const SearchSpace& space() const { return *space_; }
    std::span<const int> chosen() const { return chosen_; }
    int last() const { return chosen_.empty() ? -1 : chosen_.back(); }
    std::vector<Simplex> expanded() const;
    int edge_count(const Edge& e) const;
    std::int64_t covered_area() const { return area_; }

    bool is_forbidden(int rep) const;
    /// Smallest admissible representative index strictly greater than `after`, or -1.
    int next_candidate(int after) const;
    std::optional<Edge> min_uncovered_interior_edge() const;
    /// Largest candidate index that may still be added without leaving an open
    /// edge (or, in unimodular mode, an unused point) uncoverable; -1 if some
    /// requirement already has no covering candidate.
    int coverage_limit() const;

private:
    int highest_candidate_in(const std::uint64_t* mask) const;
    const std::uint64_t* forbidden() const;
    void touch_edge(int e, int delta);

    const SearchSpace* space_;
    std::vector<int> chosen_;
    std::vector<std::uint64_t> forbidden_levels_;
    std::vector<std::uint8_t> edge_count_;
    std::vector<std::uint64_t> open_interior_;
    std::vector<std::uint64_t> open_boundary_;
    std::vector<std::uint8_t> point_use_;
    std::int64_t area_ = 0;
};

bool is_complete(const PartialState& state);
/// The facet pruning rule: prune iff the lex-minimal uncovered interior edge is
/// lex-smaller than the lex-minimal facet of every remaining candidate.
bool prune_check(const PartialState& state);
/// True iff the sorted representative sequence is lex-<= its image under every g.
bool canonical_check(const PartialState& state, const Group& quotient);

EnumerationResult enumerate(const SearchSpace& space, const EnumerationConfig& cfg, const Visitor& visitor = {});

/// H-invariant triangulations of FullTriangle(cfg.d) up to G_H.
EnumerationResult enumerate_symmetric(const EnumerationConfig& cfg, const Visitor& visitor = {});

/// All triangulations of a region (H trivial).
EnumerationResult enumerate_region(const Region& region, Mode mode, const Visitor& visitor = {});
EnumerationResult enumerate_region(const Region& region, const EnumerationConfig& cfg, const Visitor& visitor = {});

// ---------------------------------------------------------------------------
// brute-force oracle

/// Every triangulation of the configuration, each reached once by always
/// covering the lex-smallest open interior edge. No symmetry machinery.
BigInt enumerate_naive(const PointConfiguration& config, Mode mode, const Visitor& visitor = {});

inline constexpr int kNaiveSymmetricMaxD = 5;

/// Number of mirror-invariant triangulations of FullTriangle(d), by filtering
/// the brute-force enumeration.
BigInt enumerate_naive_symmetric(int d, Mode mode, const Visitor& visitor = {});

// ---------------------------------------------------------------------------
// validation helpers

struct TriangulationCheck {
    bool proper = true;
    bool covers = true;
    bool unimodular = true;
    bool uses_all_points = true;
};

TriangulationCheck validate(const PointConfiguration& config, const Triangulation& t);
std::vector<Edge> distinct_edges(const PointConfiguration& config, const Triangulation& t);
bool is_mirror_invariant(const PointConfiguration& config, const Triangulation& t);

}  // namespace symtri
