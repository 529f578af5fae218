#include "trisect/catalogue.hpp"

#include <array>
#include <charconv>

namespace trisect {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw OutOfDomain(what);
    }
}

TrisectionState make(SurfaceGenera genera, int b, std::string label) {
    return TrisectionState(genera, LinkComponentSet(b), {}, std::move(label));
}

struct Entry {
    ConstructorKind kind;
    std::string_view name;
    int arity;
};

constexpr std::array<Entry, 8> kEntries{{
    {ConstructorKind::Trivial, "trivial", 0},
    {ConstructorKind::FromHeegaard, "from-heegaard", 1},
    {ConstructorKind::SplitHeegaard, "split-heegaard", 2},
    {ConstructorKind::OpenBook, "open-book", 1},
    {ConstructorKind::TunnelSystem, "tunnel", 1},
    {ConstructorKind::ConnectSum, "connect-sum", 1},
    {ConstructorKind::SurfaceBundle, "surface-bundle", 1},
    {ConstructorKind::KodaOzawa, "koda-ozawa", 0},
}};

const Entry& entry(ConstructorKind kind) {
    for (const auto& e : kEntries) {
        if (e.kind == kind) return e;
    }
    throw OutOfDomain("unknown constructor");
}

constexpr std::string_view kBundlePrefix = "surface-bundle(fiber_genus=";

}  // namespace

TrisectionState trivial() { return make({0, 0, 0}, 1, "trivial"); }

TrisectionState from_heegaard(int g) {
    require(g >= 0, "Heegaard genus must be >= 0");
    return make({g, 0, 0}, 1, "from-heegaard(g=" + std::to_string(g) + ")");
}

TrisectionState split_heegaard(int g, int h) {
    require(g >= 0, "Heegaard genus must be >= 0");
    require(0 <= h && h <= g, "split genus must satisfy 0 <= h <= g");
    // H1 = W of genus g; the disk cuts V into H2 (genus h) and H3 (genus g-h).
    return make({h, g - h, 0}, 1,
                "split-heegaard(g=" + std::to_string(g) + ",h=" + std::to_string(h) + ")");
}

TrisectionState open_book(int page_genus) {
    require(page_genus >= 0, "page genus must be >= 0");
    const int g = page_genus;
    return make({g, g, g}, 1, "open-book(page_genus=" + std::to_string(g) + ")");
}

TrisectionState tunnel_system(int m) {
    require(m >= 0, "tunnel number must be >= 0");
    // H1 cap H2 is a disk, so g12 = 0.
    return make({0, 1, m}, 1, "tunnel(m=" + std::to_string(m) + ")");
}

TrisectionState connect_sum_equal_genus(int g) {
    require(g >= 0, "summand genus must be >= 0");
    return make({0, 0, 0}, g + 1, "connect-sum(g=" + std::to_string(g) + ")");
}

TrisectionState surface_bundle(int fiber_genus) {
    require(fiber_genus >= 1, "fiber genus must be >= 1");
    const int g = fiber_genus;
    const std::string label = std::string(kBundlePrefix) + std::to_string(g) + ")";
    if (g % 2 == 0) {
        // S23 a punctured torus, S12 and S13 genus g.
        return make({g, g, 1}, 1, label);
    }
    // Three boundary circles: S23 planar, S12 and S13 of genus g-1.
    return make({g - 1, g - 1, 0}, 3, label);
}

TrisectionState koda_ozawa() { return make({0, 0, 1}, 2, "koda-ozawa"); }

TrisectionState construct(ConstructorKind kind, std::span<const int> params) {
    const auto& e = entry(kind);
    if (static_cast<int>(params.size()) != e.arity) {
        throw OutOfDomain(std::string(e.name) + " takes " + std::to_string(e.arity) + " parameter(s)");
    }
    switch (kind) {
        case ConstructorKind::Trivial: return trivial();
        case ConstructorKind::FromHeegaard: return from_heegaard(params[0]);
        case ConstructorKind::SplitHeegaard: return split_heegaard(params[0], params[1]);
        case ConstructorKind::OpenBook: return open_book(params[0]);
        case ConstructorKind::TunnelSystem: return tunnel_system(params[0]);
        case ConstructorKind::ConnectSum: return connect_sum_equal_genus(params[0]);
        case ConstructorKind::SurfaceBundle: return surface_bundle(params[0]);
        case ConstructorKind::KodaOzawa: return koda_ozawa();
    }
    throw OutOfDomain("unknown constructor");
}

std::string_view constructor_name(ConstructorKind kind) { return entry(kind).name; }

std::optional<ConstructorKind> constructor_from_name(std::string_view name) {
    for (const auto& e : kEntries) {
        if (e.name == name) return e.kind;
    }
    return std::nullopt;
}

int constructor_arity(ConstructorKind kind) { return entry(kind).arity; }

std::vector<std::string> construction_notes(std::string_view label) {
    std::vector<std::string> notes;
    if (label.starts_with(kBundlePrefix)) {
        const auto digits = label.substr(kBundlePrefix.size());
        int g = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), g);
        if (ec == std::errc{} && ptr != digits.data() + digits.size() && *ptr == ')' && g % 2 == 1) {
            notes.push_back("odd fiber genus: B has 3 components and the profile is (2g,g+1,g+1;3) = (" +
                            std::to_string(2 * g) + "," + std::to_string(g + 1) + "," +
                            std::to_string(g + 1) +
                            ";3); the tuple (2g,g,g;3) sometimes quoted for this case fails the "
                            "genus formula h_i = g_ij + g_ik + b - 1 (it would need g23 = -1)");
        }
    }
    if (label == "koda-ozawa") {
        notes.push_back(
            "this (1,2,2;2) family is not a stabilization of any other trisection; parameter-level "
            "destabilizations from it are formal only");
    }
    return notes;
}

}  // namespace trisect
