#pragma once

#include <Eigen/Dense>
#include <utility>

#include "otinv/errors.hpp"

namespace otinv {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Mask = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// Supply vector mu (length m) and demand vector nu (length n).
/// Totals must agree: construction rejects relative imbalance above 1e-6
/// and rescales nu to match mu exactly below that.
struct Marginals {
    Vector mu;
    Vector nu;

    Marginals() = default;
    Marginals(Vector mu_in, Vector nu_in);

    Eigen::Index rows() const { return mu.size(); }
    Eigen::Index cols() const { return nu.size(); }
    double total_mass() const { return mu.sum(); }
};

/// Latent transport cost with its entropic regularization strength.
/// Inferred costs live in [0,1] (sigmoid output); the solver itself accepts
/// any finite entries so gauge-shifted costs can be solved directly.
struct CostMatrix {
    Matrix values;
    double epsilon = 0.1;

    CostMatrix() = default;
    CostMatrix(Matrix values_in, double epsilon_in);

    Eigen::Index rows() const { return values.rows(); }
    Eigen::Index cols() const { return values.cols(); }
    bool in_unit_range() const;
};

/// Nonnegative flow matrix with an observation mask (true = observed).
/// Masked entries are stored as zero so that sums and losses can treat
/// them uniformly; the CSV sentinel "NA" appears only on disk.
struct TransportPlan {
    Matrix values;
    Mask mask;

    TransportPlan() = default;
    explicit TransportPlan(Matrix values_in);  // fully observed
    TransportPlan(Matrix values_in, Mask mask_in);

    Eigen::Index rows() const { return values.rows(); }
    Eigen::Index cols() const { return values.cols(); }
    bool fully_observed() const { return mask.all(); }
    Eigen::Index observed_count() const { return mask.count(); }
};

/// Diagonal scalings Pi, Omega of the kernel exp(-C/eps) together with the
/// Lagrange multipliers they encode: pi_i = exp(-lambda_i/eps),
/// omega_j = exp(-eta_j/eps).  Rows or columns dropped for zero mass carry
/// pi = 0 (lambda = +inf) so that Pi exp(-C/eps) Omega reproduces the plan
/// including its zero lines.
struct ScalingVectors {
    Vector pi;
    Vector omega;
    Vector lambda_dual;
    Vector eta_dual;
};

/// Dual potentials of the unregularized problem; feasibility f_i + g_j <= C_ij
/// is checkable via dual_feasible, not enforced here.
struct DualPotentials {
    Vector f;
    Vector g;
};

struct SolverOptions {
    int max_iterations = 10000;
    /// Stopping threshold on the L1 marginal residual, measured relative to
    /// total mass (scale-invariant); the reported residual is in problem units.
    double tolerance = 1e-9;
    bool log_domain = true;
    /// Fixed iteration count for differentiable solves.
    int unroll_depth = 50;
};

inline void require_same_shape(Eigen::Index r1, Eigen::Index c1, Eigen::Index r2, Eigen::Index c2,
                               const char* what) {
    if (r1 != r2 || c1 != c2) {
        throw ShapeMismatch(std::string(what) + ": shape (" + std::to_string(r1) + "x" +
                            std::to_string(c1) + ") vs (" + std::to_string(r2) + "x" +
                            std::to_string(c2) + ")");
    }
}

}  // namespace otinv
