#include "trisect/moves.hpp"

#include <algorithm>
#include <array>

namespace trisect {

namespace {

std::string describe(Handlebody i, const ArcClass& arc) {
    return "H" + std::to_string(index_of(i)) + " along " + arc.str();
}

TrisectionState extend(const TrisectionState& state, SurfaceGenera genera, LinkComponentSet link,
                       MoveRecord record, std::string label) {
    MoveScript history = state.history();
    history.push_back(std::move(record));
    return TrisectionState(genera, std::move(link), std::move(history), std::move(label));
}

// Effect-table tripwire: only h_i moves, by `delta_h`, and b moves by one.
void check_effect(const TrisectionState& before, const TrisectionState& after, Handlebody i, int delta_h) {
    const Profile p = before.profile();
    const Profile q = after.profile();
    for (const auto h : kHandlebodies) {
        const int expected = p.h(h) + (h == i ? delta_h : 0);
        if (q.h(h) != expected) {
            throw std::logic_error("move changed handlebody genera outside the effect table");
        }
    }
    if (std::abs(q.b - p.b) != 1) {
        throw std::logic_error("move changed b by other than one");
    }
}

std::vector<ComponentId> net_difference(const std::vector<ComponentId>& a, const std::vector<ComponentId>& b) {
    std::vector<ComponentId> out;
    for (const auto& c : a) {
        if (std::find(b.begin(), b.end(), c) == b.end()) out.push_back(c);
    }
    return out;
}

}  // namespace

bool is_legal(const TrisectionState& state, const StabMove& move) {
    const auto& link = state.link();
    if (move.arc.is_same()) {
        return link.contains(move.arc.first) && state.genera().opposite(move.handlebody) >= 1;
    }
    return move.arc.first != move.arc.second && link.contains(move.arc.first) &&
           link.contains(move.arc.second);
}

bool is_legal(const TrisectionState& state, const DestabMove& move) {
    const auto& link = state.link();
    if (move.band.is_same()) {
        const auto [j, k] = complement(move.handlebody);
        return link.contains(move.band.first) && state.genera().between(move.handlebody, j) >= 1 &&
               state.genera().between(move.handlebody, k) >= 1;
    }
    return move.band.first != move.band.second && link.contains(move.band.first) &&
           link.contains(move.band.second);
}

std::vector<StabMove> legal_moves(const TrisectionState& state) {
    std::vector<StabMove> moves;
    const auto& comps = state.link().components();
    for (const auto i : kHandlebodies) {
        if (state.genera().opposite(i) >= 1) {
            for (const auto& c : comps) {
                moves.push_back({i, ArcClass::same(c)});
            }
        }
        for (std::size_t a = 0; a < comps.size(); ++a) {
            for (std::size_t b = a + 1; b < comps.size(); ++b) {
                moves.push_back({i, ArcClass::distinct(comps[a], comps[b])});
            }
        }
    }
    return moves;
}

TrisectionState apply_stabilization(const TrisectionState& state, const StabMove& move) {
    if (!is_legal(state, move)) {
        throw IllegalMove("no nonseparating arc class for stabilizing " + describe(move.handlebody, move.arc) +
                          " in state " + state.profile().str());
    }
    const Handlebody i = move.handlebody;
    const auto [j, k] = complement(i);
    SurfaceGenera genera = state.genera();
    LinkComponentSet link = state.link();
    MoveRecord record{MoveOp::Stab, i, move.arc, {}, {}};
    if (move.arc.is_same()) {
        genera.opposite(i) -= 1;
        record.removed = {move.arc.first};
    } else {
        genera.between(i, j) += 1;
        genera.between(i, k) += 1;
        record.removed = {move.arc.first, move.arc.second};
    }
    record.created = link.rewrite("stab", record.removed, move.arc.is_same() ? 2 : 1);
    auto next = extend(state, genera, std::move(link), std::move(record), state.label());
    check_effect(state, next, i, +1);
    return next;
}

TrisectionState apply_destabilization(const TrisectionState& state, const DestabMove& move) {
    if (!is_legal(state, move)) {
        throw IllegalMove("no formal destabilization of " + describe(move.handlebody, move.band) + " in state " +
                          state.profile().str());
    }
    const Handlebody i = move.handlebody;
    const auto [j, k] = complement(i);
    SurfaceGenera genera = state.genera();
    LinkComponentSet link = state.link();
    MoveRecord record{MoveOp::Destab, i, move.band, {}, {}};
    if (move.band.is_same()) {
        genera.between(i, j) -= 1;
        genera.between(i, k) -= 1;
        record.removed = {move.band.first};
    } else {
        genera.opposite(i) += 1;
        record.removed = {move.band.first, move.band.second};
    }
    record.created = link.rewrite("destab", record.removed, move.band.is_same() ? 2 : 1);
    std::string label = state.label();
    if (label.find(kFormalDestabCaveat) == std::string::npos) {
        label += label.empty() ? "" : " ";
        label += std::string("[") + kFormalDestabCaveat + "]";
    }
    auto next = extend(state, genera, std::move(link), std::move(record), std::move(label));
    check_effect(state, next, i, -1);
    return next;
}

DestabMove inverse(const MoveRecord& record) {
    if (record.op != MoveOp::Stab) {
        throw IllegalMove("only single stabilizations have a formal inverse");
    }
    if (record.arc.is_same()) {
        if (record.created.size() != 2) throw FormatError("Same stabilization must create two components");
        return {record.handlebody, ArcClass::distinct(record.created[0], record.created[1])};
    }
    if (record.created.size() != 1) throw FormatError("Distinct stabilization must create one component");
    return {record.handlebody, ArcClass::same(record.created[0])};
}

StabMove canonical_move(const TrisectionState& state, Handlebody i) {
    const auto& comps = state.link().components();
    if (comps.size() >= 2) {
        return {i, ArcClass::distinct(comps[0], comps[1])};
    }
    if (state.genera().opposite(i) >= 1) {
        return {i, ArcClass::same(comps[0])};
    }
    throw IllegalMove("S_jk opposite H" + std::to_string(index_of(i)) + " is a disk and b = 1");
}

// ---------------------------------------------------------------------------
// Compound operations
// ---------------------------------------------------------------------------

bool fake_heegaard_stab_legal(const TrisectionState& state) {
    return state.b() >= 2 || state.genera().g13 >= 1;
}

MoveResult fake_heegaard_stab(const TrisectionState& state) {
    const auto& comps = state.link().components();
    if (state.b() >= 2) {
        return fake_heegaard_stab(state, ArcClass::distinct(comps[0], comps[1]));
    }
    if (state.genera().g13 >= 1) {
        return fake_heegaard_stab(state, ArcClass::same(comps[0]));
    }
    throw IllegalMove("fake Heegaard stabilization needs b >= 2 or g13 >= 1 (state " + state.profile().str() + ")");
}

MoveResult fake_heegaard_stab(const TrisectionState& state, const ArcClass& first_arc) {
    const auto first = apply_stabilization(state, {Handlebody::H2, first_arc});
    const auto& r1 = first.history().back();
    const ArcClass second_arc = first_arc.is_same() ? ArcClass::distinct(r1.created[0], r1.created[1])
                                                    : ArcClass::same(r1.created[0]);
    auto second = apply_stabilization(first, {Handlebody::H1, second_arc});
    const auto& r2 = second.history().back();

    const SurfaceGenera before = state.genera();
    const SurfaceGenera after = second.genera();
    if (after.g12 != before.g12 + 1 || after.g13 != before.g13 || after.g23 != before.g23 ||
        second.b() != state.b()) {
        throw std::logic_error("fake Heegaard stabilization net effect is not (+1,0,0;0)");
    }

    MoveRecord record{MoveOp::FakeStab, Handlebody::H2, first_arc, {}, {}};
    record.removed = r1.removed;
    for (const auto& c : net_difference(r2.removed, r1.created)) record.removed.push_back(c);
    record.created = net_difference(r1.created, r2.removed);
    for (const auto& c : r2.created) record.created.push_back(c);
    return {std::move(second), MoveScript{std::move(record)}};
}

StabMove balancing_move(const TrisectionState& state) {
    const Profile p = state.profile();
    std::array<Handlebody, 3> order{Handlebody::H1, Handlebody::H2, Handlebody::H3};
    std::stable_sort(order.begin(), order.end(),
                     [&](Handlebody a, Handlebody b) { return p.h(a) > p.h(b); });
    // Arc in S_ij, i.e. the surface opposite H_k.
    return canonical_move(state, order[2]);
}

MoveResult balance(const TrisectionState& state) {
    MoveResult result{state, {}};
    while (!result.state.profile().is_balanced()) {
        result.state = apply_stabilization(result.state, balancing_move(result.state));
        result.script.push_back(result.state.history().back());
    }
    return result;
}

HeegaardResult build_heegaard(const TrisectionState& state, Handlebody i) {
    HeegaardResult result{state, 0, {}};
    while (result.state.genera().opposite(i) > 0 || result.state.b() > 1) {
        result.state = apply_stabilization(result.state, canonical_move(result.state, i));
        result.script.push_back(result.state.history().back());
    }
    result.heegaard_genus = result.state.profile().h(i);
    return result;
}

}  // namespace trisect
