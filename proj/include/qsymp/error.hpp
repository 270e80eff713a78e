#pragma once

#include <stdexcept>
#include <string>

namespace qsymp {

/// Base for all domain-level failures (as opposed to malformed input).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MixedAmbient : DomainError {
    MixedAmbient() : DomainError("ambient spaces differ") {}
};
struct NotHomogeneous : DomainError {
    NotHomogeneous() : DomainError("basis column mixes degrees") {}
};
struct NotASubspace : DomainError {
    NotASubspace() : DomainError("not a subspace of the given space") {}
};
struct NotCoisotropic : DomainError {
    NotCoisotropic() : DomainError("subspace is not coisotropic") {}
};
struct NotIsotropic : DomainError {
    NotIsotropic() : DomainError("subspace is not isotropic") {}
};
struct NotLagrangian : DomainError {
    NotLagrangian() : DomainError("relation is not Lagrangian") {}
};
struct SourceTargetMismatch : DomainError {
    SourceTargetMismatch() : DomainError("source/target spaces do not match") {}
};
struct NotOrthogonal : DomainError {
    NotOrthogonal() : DomainError("span of reductions is not orthogonal") {}
};
struct DoesNotFactor : DomainError {
    DoesNotFactor() : DomainError("reduction does not factor through the other") {}
};
struct NotInvertible : DomainError {
    NotInvertible() : DomainError("matrix is not invertible") {}
};
struct NotABasis : DomainError {
    NotABasis() : DomainError("vectors do not form a homogeneous basis") {}
};
struct NotComplementary : DomainError {
    NotComplementary() : DomainError("subspaces are not complementary") {}
};
struct SpaceMismatch : DomainError {
    SpaceMismatch() : DomainError("formal functions live on different spaces") {}
};
struct WeightNotPositive : DomainError {
    WeightNotPositive() : DomainError("series argument needs min weight >= 1") {}
};
struct NotUnital : DomainError {
    NotUnital() : DomainError("series argument needs constant term 1") {}
};
struct NotCompatible : DomainError {
    NotCompatible() : DomainError("differential incompatible with the pairing") {}
};
struct SingularForm : DomainError {
    SingularForm() : DomainError("quadratic form is singular") {}
};
struct Degenerate : DomainError {
    Degenerate() : DomainError("isotrope is degenerate for this free action") {}
};
struct NonComposable : DomainError {
    NonComposable() : DomainError("kernel quadratic form degenerate; composition undefined") {}
};
struct MalformedAction : DomainError {
    MalformedAction() : DomainError("action violates component constraints") {}
};

} // namespace qsymp
