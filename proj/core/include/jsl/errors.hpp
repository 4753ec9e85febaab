// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace jsl {

/// Base class for runtime failures of the numerical machinery, as opposed to
/// std::invalid_argument which is thrown on parameter-domain violations.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Explicit time step exceeds the integrator's stability bound.
struct StabilityError : NumericalError {
    using NumericalError::NumericalError;
};

/// Evolved density lost or gained more mass than the run tolerates.
struct MassDriftError : NumericalError {
    using NumericalError::NumericalError;
};

/// A rate or density evaluation produced a non-finite value.
struct OverflowError : NumericalError {
    using NumericalError::NumericalError;
};

/// Least-squares problem too ill-conditioned or under-determined to solve.
struct FitError : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace jsl
