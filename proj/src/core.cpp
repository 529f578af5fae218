#include "trisect/core.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace trisect {

Handlebody handlebody_from_index(int i) {
    if (i < 1 || i > 3) {
        throw OutOfDomain("handlebody index must be 1, 2 or 3 (got " + std::to_string(i) + ")");
    }
    return static_cast<Handlebody>(i);
}

std::pair<Handlebody, Handlebody> complement(Handlebody i) {
    switch (i) {
        case Handlebody::H1: return {Handlebody::H2, Handlebody::H3};
        case Handlebody::H2: return {Handlebody::H1, Handlebody::H3};
        case Handlebody::H3: return {Handlebody::H1, Handlebody::H2};
    }
    throw OutOfDomain("bad handlebody");
}

ComponentId ComponentId::parse(std::string_view text) {
    if (text.size() < 2 || text.front() != 'c') {
        throw FormatError("bad component label '" + std::string(text) + "'");
    }
    const auto digits = text.substr(1);
    if (digits.size() > 1 && digits.front() == '0') {
        throw FormatError("bad component label '" + std::string(text) + "'");
    }
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw FormatError("bad component label '" + std::string(text) + "'");
    }
    return ComponentId{value};
}

// ---------------------------------------------------------------------------
// LinkComponentSet
// ---------------------------------------------------------------------------

LinkComponentSet::LinkComponentSet(int count) {
    if (count < 1) {
        throw OutOfDomain("a link has at least one component");
    }
    for (int i = 0; i < count; ++i) {
        components_.push_back(ComponentId{next_id_++});
    }
    genealogy_.push_back({"init", {}, components_});
}

LinkComponentSet LinkComponentSet::from_genealogy(std::vector<ComponentId> initial, std::uint32_t next_id,
                                                  const std::vector<GenealogyEvent>& rewrites) {
    std::sort(initial.begin(), initial.end());
    if (initial.empty() || std::adjacent_find(initial.begin(), initial.end()) != initial.end()) {
        throw FormatError("initial link components must be nonempty and distinct");
    }
    LinkComponentSet set;
    set.components_ = initial;
    set.genealogy_ = {{"init", {}, initial}};
    std::vector<ComponentId> seen = initial;
    for (const auto& ev : rewrites) {
        for (const auto& p : ev.parents) {
            if (!set.contains(p)) {
                throw FormatError("history removes unknown component " + p.str());
            }
            std::erase(set.components_, p);
        }
        for (const auto& c : ev.children) {
            if (std::find(seen.begin(), seen.end(), c) != seen.end()) {
                throw FormatError("history reuses component label " + c.str());
            }
            seen.push_back(c);
            set.components_.push_back(c);
        }
        std::sort(set.components_.begin(), set.components_.end());
        if (set.components_.empty()) {
            throw FormatError("history empties the link");
        }
        set.genealogy_.push_back(ev);
    }
    for (const auto& c : seen) {
        if (c.index >= next_id) {
            throw FormatError("next_id " + std::to_string(next_id) + " does not exceed label " + c.str());
        }
    }
    set.next_id_ = next_id;
    return set;
}

bool LinkComponentSet::contains(ComponentId c) const {
    return std::binary_search(components_.begin(), components_.end(), c);
}

std::vector<ComponentId> LinkComponentSet::rewrite(const std::string& cause,
                                                   const std::vector<ComponentId>& parents,
                                                   int child_count) {
    for (const auto& p : parents) {
        if (!contains(p)) {
            throw IllegalMove("component " + p.str() + " is not in the link");
        }
    }
    if (size() - static_cast<int>(parents.size()) + child_count < 1) {
        throw IllegalMove("rewrite would empty the link");
    }
    for (const auto& p : parents) {
        std::erase(components_, p);
    }
    std::vector<ComponentId> children;
    for (int i = 0; i < child_count; ++i) {
        if (next_id_ == std::numeric_limits<std::uint32_t>::max()) {
            throw OutOfDomain("component label space exhausted");
        }
        children.push_back(ComponentId{next_id_++});
    }
    components_.insert(components_.end(), children.begin(), children.end());
    std::sort(components_.begin(), components_.end());
    genealogy_.push_back({cause, parents, children});
    return children;
}

bool LinkComponentSet::genealogy_consistent() const {
    if (genealogy_.empty() || genealogy_.front().cause != "init") {
        return false;
    }
    try {
        const auto rebuilt = from_genealogy(
            genealogy_.front().children, next_id_,
            std::vector<GenealogyEvent>(genealogy_.begin() + 1, genealogy_.end()));
        return rebuilt.components_ == components_;
    } catch (const FormatError&) {
        return false;
    }
}

// ---------------------------------------------------------------------------
// Genera and profiles
// ---------------------------------------------------------------------------

namespace {

template <typename Genera>
auto& surface_slot(Genera& g, Handlebody a, Handlebody b) {
    const int lo = std::min(index_of(a), index_of(b));
    const int hi = std::max(index_of(a), index_of(b));
    if (lo == 1 && hi == 2) return g.g12;
    if (lo == 1 && hi == 3) return g.g13;
    if (lo == 2 && hi == 3) return g.g23;
    throw OutOfDomain("S_ij needs two distinct handlebodies");
}

}  // namespace

int SurfaceGenera::between(Handlebody a, Handlebody b) const {
    return surface_slot(*this, a, b);
}

int& SurfaceGenera::between(Handlebody a, Handlebody b) { return surface_slot(*this, a, b); }

int SurfaceGenera::opposite(Handlebody i) const {
    const auto [j, k] = complement(i);
    return between(j, k);
}

int& SurfaceGenera::opposite(Handlebody i) {
    const auto [j, k] = complement(i);
    return between(j, k);
}

int Profile::h(Handlebody i) const {
    switch (i) {
        case Handlebody::H1: return h1;
        case Handlebody::H2: return h2;
        case Handlebody::H3: return h3;
    }
    throw OutOfDomain("bad handlebody");
}

int Profile::max_genus() const { return std::max({h1, h2, h3}); }

std::string Profile::str() const {
    return "(" + std::to_string(h1) + "," + std::to_string(h2) + "," + std::to_string(h3) + ";" +
           std::to_string(b) + ")";
}

Profile profile_from_genera(const SurfaceGenera& g, int b) {
    return Profile{g.g12 + g.g13 + b - 1, g.g12 + g.g23 + b - 1, g.g13 + g.g23 + b - 1, b};
}

std::optional<SurfaceGenera> genera_from_profile(const Profile& p) {
    if (p.h1 < 0 || p.h2 < 0 || p.h3 < 0 || p.b < 1) {
        return std::nullopt;
    }
    if ((p.h1 + p.h2 + p.h3 + p.b) % 2 == 0) {
        return std::nullopt;
    }
    const SurfaceGenera g{(p.h1 + p.h2 - p.h3 + 1 - p.b) / 2, (p.h1 + p.h3 - p.h2 + 1 - p.b) / 2,
                          (p.h2 + p.h3 - p.h1 + 1 - p.b) / 2};
    if (g.g12 < 0 || g.g13 < 0 || g.g23 < 0) {
        return std::nullopt;
    }
    return g;
}

bool is_feasible(const Profile& p) { return genera_from_profile(p).has_value(); }

// ---------------------------------------------------------------------------
// Arc classes and records
// ---------------------------------------------------------------------------

std::string ArcClass::str() const {
    return is_same() ? "same:" + first.str() : "distinct:" + first.str() + "," + second.str();
}

ArcClass ArcClass::parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw FormatError("arc must be same:cK or distinct:cK,cL");
    }
    const auto kind = text.substr(0, colon);
    const auto rest = text.substr(colon + 1);
    if (kind == "same") {
        return same(ComponentId::parse(rest));
    }
    if (kind == "distinct") {
        const auto comma = rest.find(',');
        if (comma == std::string_view::npos) {
            throw FormatError("distinct arc needs two components");
        }
        const auto a = ComponentId::parse(rest.substr(0, comma));
        const auto b = ComponentId::parse(rest.substr(comma + 1));
        if (a == b) {
            throw FormatError("distinct arc needs two different components");
        }
        return distinct(a, b);
    }
    throw FormatError("arc must be same:cK or distinct:cK,cL");
}

std::string_view op_name(MoveOp op) {
    switch (op) {
        case MoveOp::Stab: return "stab";
        case MoveOp::Destab: return "destab";
        case MoveOp::FakeStab: return "fake_stab";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// TrisectionState
// ---------------------------------------------------------------------------

TrisectionState::TrisectionState(SurfaceGenera genera, LinkComponentSet link, MoveScript history,
                                 std::string label)
    : genera_(genera), link_(std::move(link)), history_(std::move(history)), label_(std::move(label)) {
    if (genera_.g12 < 0 || genera_.g13 < 0 || genera_.g23 < 0) {
        throw Infeasible("surface genera must be nonnegative");
    }
    const auto& events = link_.genealogy();
    if (events.size() != history_.size() + 1) {
        throw FormatError("link genealogy does not match move history");
    }
    for (std::size_t i = 0; i < history_.size(); ++i) {
        const auto& ev = events[i + 1];
        if (ev.parents != history_[i].removed || ev.children != history_[i].created) {
            throw FormatError("link genealogy does not match move history at step " + std::to_string(i + 1));
        }
    }
    if (euler_defect() != 0) {
        throw std::logic_error("Euler characteristic identity violated");
    }
}

bool TrisectionState::is_trivial() const noexcept {
    return genera_.g12 == 0 && genera_.g13 == 0 && genera_.g23 == 0 && b() == 1;
}

int TrisectionState::euler_defect() const {
    const Profile p = profile();
    const int handlebodies = (1 - p.h1) + (1 - p.h2) + (1 - p.h3);
    const int surfaces = surface_euler_characteristic(genera_.g12, p.b) +
                         surface_euler_characteristic(genera_.g13, p.b) +
                         surface_euler_characteristic(genera_.g23, p.b);
    return handlebodies - surfaces;
}

TrisectionState TrisectionState::with_label(std::string label) const {
    TrisectionState copy = *this;
    copy.label_ = std::move(label);
    return copy;
}

Profile profile_of(const TrisectionState& state) { return state.profile(); }

TrisectionState state_from_profile(const Profile& p, std::string label) {
    const auto genera = genera_from_profile(p);
    if (!genera) {
        throw Infeasible("profile " + p.str() + " admits no nonnegative integer surface genera");
    }
    return TrisectionState(*genera, LinkComponentSet(p.b), {}, std::move(label));
}

}  // namespace trisect
