#pragma once

// Constructors for the standard families of trisections.  Each returns the
// combinatorial shadow only (surface genera and link components); no
// embedding data is produced.  Handlebody order is significant and follows
// the tuple documented on each constructor.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trisect/core.hpp"

namespace trisect {

enum class ConstructorKind {
    Trivial,
    FromHeegaard,
    SplitHeegaard,
    OpenBook,
    TunnelSystem,
    ConnectSum,
    SurfaceBundle,
    KodaOzawa,
};

/// Three balls meeting in disks: (0,0,0;1).
TrisectionState trivial();

/// Genus-g Heegaard splitting with a disk's neighborhood carved out: (g,g,0;1).
TrisectionState from_heegaard(int g);

/// Heegaard splitting whose second handlebody is cut by a disk into pieces of
/// genus h and g-h: (g,h,g-h;1), 0 <= h <= g.
TrisectionState split_heegaard(int g, int h);

/// Open book with page genus g cut into three sectors: (2g,2g,2g;1).
TrisectionState open_book(int page_genus);

/// Knot neighborhood plus an m-tunnel system: (1,m,m+1;1).
TrisectionState tunnel_system(int m);

/// Connect sum of two Heegaard genus-g manifolds: (g,g,g;g+1), all S_ij planar.
TrisectionState connect_sum_equal_genus(int g);

/// Surface bundle with fiber genus g >= 1: (2g,g+1,g+1;b) with b = 1 for even g
/// and b = 3 for odd g.
TrisectionState surface_bundle(int fiber_genus);

/// Knot neighborhood plus the two handlebodies cut out by a twice punctured
/// genus-1 surface: (1,2,2;2).  Admits no destabilizing disk.
TrisectionState koda_ozawa();

/// Dispatch by kind; `params` must have the arity of the named constructor.
TrisectionState construct(ConstructorKind kind, std::span<const int> params);

std::string_view constructor_name(ConstructorKind kind);  // CLI spelling, e.g. "from-heegaard"
std::optional<ConstructorKind> constructor_from_name(std::string_view name);
int constructor_arity(ConstructorKind kind);

/// Remarks attached to states by their construction label, e.g. the surface
/// bundle profile with odd fiber genus.  Empty for most labels.
std::vector<std::string> construction_notes(std::string_view label);

}  // namespace trisect
