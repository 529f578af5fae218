#pragma once

// Common stabilization of two trisections of the same manifold, following
// the five-step procedure: equalize the quadruples, build the Heegaard
// splitting from H1, apply fake Heegaard stabilizations, then collapse S12
// and S13 to disks.  Only profile equality and move provenance are certified;
// isotopy of the resulting trisections is outside the model.

#include <cstddef>

#include "trisect/core.hpp"

namespace trisect {

class TrivialInput : public DomainError {
public:
    explicit TrivialInput(const std::string& what) : DomainError("TrivialInput", what) {}
};

class InfeasibleInput : public DomainError {
public:
    explicit InfeasibleInput(const std::string& what) : DomainError("InfeasibleInput", what) {}
};

/// IllegalMove raised by replay, with the 1-based index of the failing record.
class ReplayError : public IllegalMove {
public:
    ReplayError(std::size_t step, const std::string& what)
        : IllegalMove("step " + std::to_string(step) + ": " + what), step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

struct PlanSteps {
    MoveScript step1_balance;
    MoveScript step2_build;
    MoveScript step3_fake;
    MoveScript step4_s12_to_disk;
    MoveScript step5_s13_to_disk;

    /// All five scripts in order.
    MoveScript concatenated() const;

    bool operator==(const PlanSteps&) const = default;
};

struct PlanReport {
    int rs_bound = 0;
    PlanSteps a;
    PlanSteps b;
    Profile final_profile;
    SurfaceGenera final_genera;

    bool operator==(const PlanReport&) const = default;
};

/// `rs_bound` is the number of fake Heegaard stabilizations applied in step 3;
/// the count needed for the two built splittings to become isotopic is not
/// computable here and must be supplied.  Throws TrivialInput when either
/// state is the trivial trisection and OutOfDomain for negative rs_bound.
PlanReport plan_common_stabilization(const TrisectionState& a, const TrisectionState& b, int rs_bound);

/// Profile overload; throws InfeasibleInput for profiles with no genera.
PlanReport plan_common_stabilization(const Profile& a, const Profile& b, int rs_bound);

/// Fold the script over the state.  fake_stab records are expanded into their
/// two constituent stabilizations.  Throws ReplayError.
TrisectionState replay(const TrisectionState& state, const MoveScript& script);

}  // namespace trisect
