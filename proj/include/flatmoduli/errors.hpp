#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace flatmoduli {

// Base for all domain errors. code() is the machine-readable reason string
// surfaced by the CLI when it refuses a request.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

#define FLATMODULI_DEFINE_ERROR(NAME, CODE)                    \
  class NAME : public Error {                                  \
  public:                                                      \
    explicit NAME(const std::string& what) : Error(CODE, what) {} \
  }

FLATMODULI_DEFINE_ERROR(AmbiguousBranch, "ambiguous_branch");
FLATMODULI_DEFINE_ERROR(BranchFailure, "branch_failure");
FLATMODULI_DEFINE_ERROR(UnsupportedGroup, "unsupported_group");
FLATMODULI_DEFINE_ERROR(UnsupportedType, "unsupported_type");
FLATMODULI_DEFINE_ERROR(UnsupportedCombination, "unsupported_combination");
FLATMODULI_DEFINE_ERROR(InvalidRank, "invalid_rank");
FLATMODULI_DEFINE_ERROR(SingularSystem, "singular_system");
FLATMODULI_DEFINE_ERROR(SpecMismatch, "spec_mismatch");
FLATMODULI_DEFINE_ERROR(ExcludedSurface, "excluded_surface_k_in_{1,2,4}");
FLATMODULI_DEFINE_ERROR(NoConvergence, "no_convergence");
FLATMODULI_DEFINE_ERROR(ImageViolation, "image_violation");
FLATMODULI_DEFINE_ERROR(NotASolution, "not_a_solution");
FLATMODULI_DEFINE_ERROR(OrientableSurface, "orientable_surface");
FLATMODULI_DEFINE_ERROR(NoInvolutiveLift, "no_involutive_lift");
FLATMODULI_DEFINE_ERROR(ArityError, "arity_error");

#undef FLATMODULI_DEFINE_ERROR

}  // namespace flatmoduli
