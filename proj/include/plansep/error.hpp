#pragma once

#include <stdexcept>
#include <string>

namespace plansep {

enum class Errc {
    SchemaViolation,
    AsymmetricAdjacency,
    NotPlanarEmbedding,
    BadOuterWitness,
    InfeasibleParams,
    BitBudgetExceeded,
    RoundLimitExceeded,
    OverflowBeyondBudget,
    NodeNotInPart,
    MultipleSources,
    DisconnectedPart,
    CrossPartQuery,
    IsTreeEdge,
    NotALeaf,
    NotInside,
    EmptySet,
    PreconditionNotContained,
    InternalWitnessMismatch,
    NotASeparatorInput,
    Disconnected,
    NotACycle,
    NotSpanning,
    IoError,
    VerificationFailed,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail);
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace plansep
