#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace k1k2::ass {

// Page arithmetic for the two differential families.
// h(e)  = (2^e + (-1)^{e+1})/3 + floor(e/2)
// h'(e) = (2^{e+1} + (-1)^e)/3 - floor(e/2)
// The divisions are exact; h(e) + h'(e) = 2^e.
std::int64_t h_value(int e);
std::int64_t hprime_value(int e);

/// |p_e| = 2 h(e) + 2^e + 1, for e >= 2.
std::int64_t p_degree(int e);
/// Same value through |p_2| = 9, |p_3| = 17, |p_{e+2}| = |p_e| + 2^e + 2^{e+2} + 2.
std::int64_t p_degree_recursive(int e);

enum class AtomKind { P2, P3, Y, Z };

/// Exterior generator of the E2 term: p_2 = x_9, p_3 = x_17, y_e = x_{2^e},
/// z_e = x_{2^{e+2}+2}.
struct Atom {
    AtomKind kind;
    int e;       // 0 for P2/P3
    int degree;
    std::string name;
    bool operator==(const Atom&) const = default;
};

/// All E2 exterior generators of degree <= max_degree, ascending by degree.
std::vector<Atom> build_e2(int max_degree);

/// Square-free monomial over the instantiated atoms (bit i = atoms()[i]).
struct TowerMonomial {
    std::uint64_t mask = 0;
    int degree = 0;
    bool operator==(const TowerMonomial&) const = default;
};

/// One stage of the differential pattern. Family 1 kills p_e·M -> y_e·M at
/// page h(e) for M over E[p_{e+1}] ⊗ E[y_i: i>e, z_j: j>=e]; family 2 kills
/// z_e·M' -> y_e·p_e·M' at page h'(e) for M' over E[p_{e+1}] ⊗ E[y_i: i>e,
/// z_j: j>e]. p_e is composite for e >= 4: p_{e+2} = p_e y_e z_e.
struct StagePlan {
    int e = 0;
    std::int64_t page_h = 0;
    std::int64_t page_hprime = 0;
    std::int64_t p_deg = 0;            // |p_e|, closed form
    std::uint64_t p_mask = 0;          // atoms of p_e (valid when p_complete)
    bool p_complete = false;           // every atom of p_e is instantiated
    std::uint64_t p_next_mask = 0;     // p_{e+1}
    bool p_next_complete = false;
    bool operator==(const StagePlan&) const = default;
};

struct StageStep {
    int e = 0;
    int family = 0;  // 1 or 2
    std::int64_t page = 0;
    bool operator==(const StageStep&) const = default;
};

struct KilledBy {
    std::int64_t page = 0;
    int stage_e = 0;
    int family = 0;
    TowerMonomial source;
    bool operator==(const KilledBy&) const = default;
};

/// What remains of a target tower after its differential: elements base,
/// v·base, ..., v^{height-1}·base.
struct TruncatedTower {
    TowerMonomial base;
    int base_degree = 0;
    std::int64_t height = 0;
    KilledBy killed_by;
    bool operator==(const TruncatedTower&) const = default;
};

/// Target whose source lies beyond the degree bound; resolved only by a
/// larger run, so degrees >= its base are outside the safe window.
struct DeferredTarget {
    TowerMonomial target;
    int stage_e = 0;
    int family = 0;
    std::int64_t source_degree = 0;
    bool operator==(const DeferredTarget&) const = default;
};

struct GroupRow {
    int n = 0;
    std::int64_t dim = 0;
    std::int64_t filtration0 = 0;
    std::int64_t tower_hits = 0;
    bool operator==(const GroupRow&) const = default;
};

struct TableRow {
    std::string generator;
    std::int64_t grading = 0;
    std::int64_t v_height = 0;
    std::array<std::int64_t, 4> tensor_degrees{};
    bool operator==(const TableRow&) const = default;
};

struct MatchReport {
    int max_degree = 0;
    std::size_t monomials = 0;       // nonunit basis monomials of degree <= N
    std::size_t matched_pairs = 0;
    std::size_t deferred = 0;
    bool unit_survives = false;
    std::vector<std::string> unmatched;
    std::vector<std::string> doubly_matched;
    std::vector<std::string> surviving_nonunit;
    bool ok() const {
        return unmatched.empty() && doubly_matched.empty() && surviving_nonunit.empty() &&
               unit_survives;
    }
};

/// Runs the full differential pattern at a degree bound: builds the E2
/// exterior basis, classifies every monomial into its (stage, family, role),
/// executes the stages in page order, and records the truncated towers.
/// Deterministic; all queries afterwards are read-only.
class Engine {
public:
    explicit Engine(int max_degree);

    int max_degree() const { return n_; }
    int stage_max() const { return e_max_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    const std::vector<StagePlan>& stage_plans() const { return plans_; }
    const std::vector<StageStep>& schedule() const { return schedule_; }

    /// p_e as a monomial over the atoms; rejects when a factor exceeds the
    /// degree bound, naming the missing factor.
    TowerMonomial p_monomial(int e) const;

    const std::vector<TruncatedTower>& towers() const { return towers_; }
    const std::vector<DeferredTarget>& deferred() const { return deferred_; }
    /// Monomials untouched by every scheduled stage; the unit is always here
    /// and is expected to be alone.
    const std::vector<TowerMonomial>& survivors() const { return survivors_; }

    /// Largest degree at which the tower census is complete:
    /// min(max_degree, smallest deferred base degree - 1).
    int safe_degree_max() const { return safe_degree_max_; }

    /// Pairs every nonunit monomial as source or target of exactly one
    /// differential (or defers it at the boundary) and cross-checks the
    /// pairing both ways.
    MatchReport match_check() const;

    /// dim k(1)_n = filtration0[n] + tower hits at n, for n up to
    /// min(safe_degree_max, filtration0.size()-1).
    std::vector<GroupRow> groups(std::span<const std::int64_t> filtration0) const;
    std::int64_t tower_hits(int n) const;

    /// Rows (y_2, y_2 p_2, y_3, y_3 p_3, ...): grading, v-height, and the
    /// degrees of the four smallest admissible tensor factors. Rejects when
    /// the degree bound doesn't cover a requested row.
    std::vector<TableRow> tower_table(int count) const;

    std::string render(const TowerMonomial& m) const;          // primitive atoms
    std::string render_tower_base(const TruncatedTower& t) const;   // composite p's
    std::string render_tower_source(const TruncatedTower& t) const;

private:
    struct Classified {
        enum class Role { Unit, Source, Target, Survivor };
        Role role = Role::Survivor;
        int e = 0;
        int family = 0;
        bool partner_in_range = false;
        std::uint64_t partner_mask = 0;
        std::int64_t partner_degree = 0;
    };

    const StagePlan& plan(int e) const { return plans_[static_cast<std::size_t>(e - 2)]; }
    bool has_atom(AtomKind kind, int e) const;
    int atom_pos(AtomKind kind, int e) const;  // -1 when not instantiated
    std::uint64_t atom_bit(AtomKind kind, int e) const;
    int mask_degree(std::uint64_t mask) const;
    Classified classify(std::uint64_t mask) const;
    void execute();
    std::string render_factors(std::uint64_t mask, int composite_e) const;

    int n_;
    int e_max_;
    std::vector<Atom> atoms_;
    std::unordered_map<int, int> atom_pos_;  // key = kind-tagged id
    std::vector<StagePlan> plans_;
    std::vector<StageStep> schedule_;
    std::vector<std::uint64_t> masks_;       // basis, sorted by (degree, mask)
    std::vector<int> degrees_;
    std::unordered_map<std::uint64_t, int> index_of_mask_;
    std::vector<Classified> classified_;
    std::vector<TruncatedTower> towers_;
    std::vector<DeferredTarget> deferred_;
    std::vector<TowerMonomial> survivors_;
    int safe_degree_max_ = 0;
};

}  // namespace k1k2::ass
