#pragma once

// Combinatorial shadow of a trisection of a closed orientable 3-manifold:
// the genera of the three pairwise surfaces S12, S13, S23 together with the
// labeled components of the triple-intersection link B.  Every pairwise
// surface is connected and has all of B as its boundary, so a state is fully
// described by three genera and the component count b.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace trisect {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Base for every error that reflects the mathematics rather than I/O.
/// `name()` is the identifier printed by the CLI ("IllegalMove", ...).
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class Infeasible : public DomainError {
public:
    explicit Infeasible(const std::string& what) : DomainError("Infeasible", what) {}
};

class OutOfDomain : public DomainError {
public:
    explicit OutOfDomain(const std::string& what) : DomainError("OutOfDomain", what) {}
};

class IllegalMove : public DomainError {
public:
    explicit IllegalMove(const std::string& what) : DomainError("IllegalMove", what) {}
};

/// Malformed input data (state files, scripts, component labels).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Handlebody indices and link components
// ---------------------------------------------------------------------------

enum class Handlebody : std::uint8_t { H1 = 1, H2 = 2, H3 = 3 };

inline constexpr Handlebody kHandlebodies[] = {Handlebody::H1, Handlebody::H2, Handlebody::H3};

constexpr int index_of(Handlebody h) noexcept { return static_cast<int>(h); }

/// Throws OutOfDomain unless 1 <= i <= 3.
Handlebody handlebody_from_index(int i);

/// The two indices other than i, in increasing order.
std::pair<Handlebody, Handlebody> complement(Handlebody i);

/// Opaque component label "c<n>".  Labels are ordered by creation index.
struct ComponentId {
    std::uint32_t index = 0;

    std::string str() const { return "c" + std::to_string(index); }
    static ComponentId parse(std::string_view text);  // throws FormatError

    auto operator<=>(const ComponentId&) const = default;
};

struct GenealogyEvent {
    std::string cause;  // "init", "stab", "destab", "fake_stab"
    std::vector<ComponentId> parents;
    std::vector<ComponentId> children;

    bool operator==(const GenealogyEvent&) const = default;
};

/// The components of B.  Never empty; labels are never reused.
class LinkComponentSet {
public:
    /// `count` fresh components c0 .. c(count-1).
    explicit LinkComponentSet(int count = 1);

    /// Rebuild from an initial set plus a sequence of (cause, removed, created)
    /// rewrites.  Throws FormatError when the rewrites do not apply.
    static LinkComponentSet from_genealogy(std::vector<ComponentId> initial, std::uint32_t next_id,
                                           const std::vector<GenealogyEvent>& rewrites);

    int size() const noexcept { return static_cast<int>(components_.size()); }
    const std::vector<ComponentId>& components() const noexcept { return components_; }
    std::uint32_t next_id() const noexcept { return next_id_; }
    const std::vector<GenealogyEvent>& genealogy() const noexcept { return genealogy_; }
    bool contains(ComponentId c) const;

    /// Replace `parents` by `child_count` fresh components; returns the new labels.
    std::vector<ComponentId> rewrite(const std::string& cause, const std::vector<ComponentId>& parents,
                                     int child_count);

    /// Apply the genealogy from scratch and compare with the current set.
    bool genealogy_consistent() const;

    bool operator==(const LinkComponentSet&) const = default;

private:
    std::vector<ComponentId> components_;  // sorted
    std::uint32_t next_id_ = 0;
    std::vector<GenealogyEvent> genealogy_;
};

// ---------------------------------------------------------------------------
// Genera and profiles
// ---------------------------------------------------------------------------

struct SurfaceGenera {
    int g12 = 0;
    int g13 = 0;
    int g23 = 0;

    /// Genus of S_ab for a != b.
    int between(Handlebody a, Handlebody b) const;
    int& between(Handlebody a, Handlebody b);

    /// Genus of the surface S_jk facing H_i.
    int opposite(Handlebody i) const;
    int& opposite(Handlebody i);

    int sum() const noexcept { return g12 + g13 + g23; }

    auto operator<=>(const SurfaceGenera&) const = default;
};

/// The quadruple (h1,h2,h3;b).
struct Profile {
    int h1 = 0;
    int h2 = 0;
    int h3 = 0;
    int b = 1;

    int h(Handlebody i) const;
    int sum() const noexcept { return h1 + h2 + h3; }
    int max_genus() const;
    bool is_balanced() const noexcept { return h1 == h2 && h2 == h3; }

    /// "(h1,h2,h3;b)"
    std::string str() const;

    auto operator<=>(const Profile&) const = default;
};

/// h_i = g_ij + g_ik + b - 1.
Profile profile_from_genera(const SurfaceGenera& genera, int b);

/// g_ij = (h_i + h_j - h_k + 1 - b) / 2 when all three are nonnegative
/// integers; nullopt otherwise.
std::optional<SurfaceGenera> genera_from_profile(const Profile& p);

bool is_feasible(const Profile& p);

/// Euler characteristic of a genus-g surface with b boundary circles.
constexpr int surface_euler_characteristic(int genus, int b) noexcept { return 2 - 2 * genus - b; }

// ---------------------------------------------------------------------------
// Moves as data (the calculus itself lives in moves.hpp)
// ---------------------------------------------------------------------------

/// Class of a nonseparating arc by where its endpoints lie on B.
struct ArcClass {
    enum class Kind : std::uint8_t { Same, Distinct };

    Kind kind = Kind::Same;
    ComponentId first;
    ComponentId second;  // meaningful only for Distinct

    static ArcClass same(ComponentId c) { return {Kind::Same, c, c}; }
    static ArcClass distinct(ComponentId a, ComponentId b) { return {Kind::Distinct, a, b}; }

    bool is_same() const noexcept { return kind == Kind::Same; }
    std::string str() const;  // "same:c0" / "distinct:c1,c2"
    static ArcClass parse(std::string_view text);  // inverse of str(); throws FormatError

    bool operator==(const ArcClass&) const = default;
};

enum class MoveOp : std::uint8_t { Stab, Destab, FakeStab };

std::string_view op_name(MoveOp op);

/// One entry of a move script or state history.
struct MoveRecord {
    MoveOp op = MoveOp::Stab;
    Handlebody handlebody = Handlebody::H1;
    ArcClass arc;
    std::vector<ComponentId> created;
    std::vector<ComponentId> removed;

    bool operator==(const MoveRecord&) const = default;
};

using MoveScript = std::vector<MoveRecord>;

// ---------------------------------------------------------------------------
// States
// ---------------------------------------------------------------------------

/// Immutable trisection state.  The constructor rejects negative genera and
/// histories whose component bookkeeping disagrees with the link.
class TrisectionState {
public:
    TrisectionState(SurfaceGenera genera, LinkComponentSet link, MoveScript history = {},
                    std::string label = {});

    const SurfaceGenera& genera() const noexcept { return genera_; }
    const LinkComponentSet& link() const noexcept { return link_; }
    const MoveScript& history() const noexcept { return history_; }
    const std::string& label() const noexcept { return label_; }

    int b() const noexcept { return link_.size(); }
    Profile profile() const { return profile_from_genera(genera_, b()); }
    bool is_trivial() const noexcept;

    /// sum_i (1 - h_i) - sum_ij chi(S_ij); zero for every closed orientable M.
    int euler_defect() const;

    TrisectionState with_label(std::string label) const;

    bool operator==(const TrisectionState&) const = default;

private:
    SurfaceGenera genera_;
    LinkComponentSet link_;
    MoveScript history_;
    std::string label_;
};

Profile profile_of(const TrisectionState& state);

/// Fresh state with genera derived from the profile; throws Infeasible.
TrisectionState state_from_profile(const Profile& p, std::string label = {});

}  // namespace trisect
