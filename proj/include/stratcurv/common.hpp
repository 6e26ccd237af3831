#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace stratcurv {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using VectorRef = Eigen::Ref<const Eigen::VectorXd>;

/// Centralized numeric tolerances. One instance with defaults is used
/// throughout unless a caller overrides.
struct NumericConfig {
    double linalg_tol = 1e-10;        // orthonormality, projections
    double rank_tol = 1e-8;           // Jacobian rank decisions
    double membership_tol = 1e-9;     // sign-condition slack, scale-relative
    double root_merge_rel = 3e-7;     // cluster width for near-multiple roots
    double projection_tol = 1e-8;     // nearest-point convergence
    double degenerate_vol = 1e-12;    // simplex volume floor
};

const NumericConfig& default_config();

// Error taxonomy. Everything derives from Error so CLI/tests can map
// failures to exit codes uniformly.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : Error { using Error::Error; };
struct SingularityError : Error { using Error::Error; };
struct EstimationError : Error { using Error::Error; };
struct SamplingError : Error { using Error::Error; };
struct ProjectionError : Error { using Error::Error; };
struct IntegrationError : Error { using Error::Error; };
struct PreconditionError : Error { using Error::Error; };
struct DegenerateSliceError : Error { using Error::Error; };
struct HistogramUnreliableError : Error { using Error::Error; };
struct UsageError : Error { using Error::Error; };

/// Value with a standard-error estimate attached.
struct Estimate {
    double value = 0.0;
    double stderr_ = 0.0;
};

}  // namespace stratcurv
