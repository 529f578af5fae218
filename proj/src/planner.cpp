#include "trisect/planner.hpp"

#include "trisect/moves.hpp"

namespace trisect {

namespace {

void append(MoveScript& into, const MoveScript& more) { into.insert(into.end(), more.begin(), more.end()); }

struct Side {
    TrisectionState state;
    PlanSteps steps;
};

void stabilize_once(Side& side, const StabMove& move) {
    side.state = apply_stabilization(side.state, move);
    side.steps.step1_balance.push_back(side.state.history().back());
}

void rebalance(Side& side) {
    auto balanced = balance(side.state);
    side.state = std::move(balanced.state);
    append(side.steps.step1_balance, balanced.script);
}

// Step 1 for one side: balance, then bring b down to at most 2.
void balance_and_thin(Side& side) {
    rebalance(side);
    while (side.state.b() > 2) {
        stabilize_once(side, balancing_move(side.state));  // Distinct, since b > 2
        rebalance(side);
    }
}

void raise_genus(Side& side) {
    stabilize_once(side, balancing_move(side.state));
    rebalance(side);
}

void build(Side& side, Handlebody i, MoveScript PlanSteps::*slot) {
    auto built = build_heegaard(side.state, i);
    side.state = std::move(built.state);
    side.steps.*slot = std::move(built.script);
}

}  // namespace

MoveScript PlanSteps::concatenated() const {
    MoveScript all;
    for (const auto* part : {&step1_balance, &step2_build, &step3_fake, &step4_s12_to_disk, &step5_s13_to_disk}) {
        append(all, *part);
    }
    return all;
}

PlanReport plan_common_stabilization(const TrisectionState& a, const TrisectionState& b, int rs_bound) {
    if (a.is_trivial() || b.is_trivial()) {
        throw TrivialInput("the trivial trisection admits no stabilization");
    }
    if (rs_bound < 0) {
        throw OutOfDomain("rs_bound must be >= 0");
    }
    Side x{a, {}};
    Side y{b, {}};

    balance_and_thin(x);
    balance_and_thin(y);
    while (x.state.profile().h1 != y.state.profile().h1) {
        raise_genus(x.state.profile().h1 < y.state.profile().h1 ? x : y);
    }
    if (x.state.profile() != y.state.profile()) {
        // Both balanced of equal genus with b <= 2; parity pins b.
        throw std::logic_error("step 1 ended with different quadruples");
    }

    for (Side* side : {&x, &y}) {
        build(*side, Handlebody::H1, &PlanSteps::step2_build);
        for (int n = 0; n < rs_bound; ++n) {
            auto faked = fake_heegaard_stab(side->state);
            side->state = std::move(faked.state);
            append(side->steps.step3_fake, faked.script);
        }
        build(*side, Handlebody::H3, &PlanSteps::step4_s12_to_disk);
        build(*side, Handlebody::H2, &PlanSteps::step5_s13_to_disk);
    }

    if (x.state.genera() != y.state.genera() || x.state.b() != y.state.b()) {
        throw std::logic_error("planner endpoints differ");
    }
    return PlanReport{rs_bound, std::move(x.steps), std::move(y.steps), x.state.profile(), x.state.genera()};
}

PlanReport plan_common_stabilization(const Profile& a, const Profile& b, int rs_bound) {
    for (const auto* p : {&a, &b}) {
        if (!is_feasible(*p)) {
            throw InfeasibleInput("profile " + p->str() + " is not feasible");
        }
    }
    return plan_common_stabilization(state_from_profile(a), state_from_profile(b), rs_bound);
}

TrisectionState replay(const TrisectionState& state, const MoveScript& script) {
    TrisectionState current = state;
    for (std::size_t n = 0; n < script.size(); ++n) {
        const auto& record = script[n];
        try {
            switch (record.op) {
                case MoveOp::Stab:
                    current = apply_stabilization(current, {record.handlebody, record.arc});
                    break;
                case MoveOp::Destab:
                    current = apply_destabilization(current, {record.handlebody, record.arc});
                    break;
                case MoveOp::FakeStab:
                    if (record.handlebody != Handlebody::H2) {
                        throw IllegalMove("fake_stab records start by stabilizing H2");
                    }
                    current = fake_heegaard_stab(current, record.arc).state;
                    break;
            }
        } catch (const IllegalMove& e) {
            throw ReplayError(n + 1, e.what());
        }
    }
    return current;
}

}  // namespace trisect
