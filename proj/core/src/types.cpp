#include "otinv/types.hpp"

#include <cmath>

namespace otinv {

namespace {

void require_finite(const Matrix& m, const char* what) {
    if (!m.allFinite()) {
        throw NumericError(std::string(what) + ": non-finite entries");
    }
}

}  // namespace

Marginals::Marginals(Vector mu_in, Vector nu_in) : mu(std::move(mu_in)), nu(std::move(nu_in)) {
    if (mu.size() == 0 || nu.size() == 0) {
        throw NumericError("Marginals: empty supply or demand vector");
    }
    if ((mu.array() < 0.0).any() || (nu.array() < 0.0).any()) {
        throw NumericError("Marginals: negative entries");
    }
    if (!mu.allFinite() || !nu.allFinite()) {
        throw NumericError("Marginals: non-finite entries");
    }
    const double mu_total = mu.sum();
    const double nu_total = nu.sum();
    if (mu_total <= 0.0 || nu_total <= 0.0) {
        throw NumericError("Marginals: zero total mass");
    }
    const double rel = std::abs(mu_total - nu_total) / std::max(mu_total, nu_total);
    if (rel > 1e-6) {
        throw NumericError("Marginals: supply/demand totals differ by relative " +
                           std::to_string(rel) + " (limit 1e-6)");
    }
    // Small imbalance is measurement noise; rescale demand to match exactly.
    nu *= mu_total / nu_total;
}

CostMatrix::CostMatrix(Matrix values_in, double epsilon_in)
    : values(std::move(values_in)), epsilon(epsilon_in) {
    require_finite(values, "CostMatrix");
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw NumericError("CostMatrix: epsilon must be positive and finite");
    }
}

bool CostMatrix::in_unit_range() const {
    return (values.array() >= 0.0).all() && (values.array() <= 1.0).all();
}

TransportPlan::TransportPlan(Matrix values_in) : values(std::move(values_in)) {
    require_finite(values, "TransportPlan");
    if ((values.array() < 0.0).any()) {
        throw NumericError("TransportPlan: negative flow");
    }
    mask = Mask::Constant(values.rows(), values.cols(), true);
}

TransportPlan::TransportPlan(Matrix values_in, Mask mask_in)
    : values(std::move(values_in)), mask(std::move(mask_in)) {
    require_same_shape(values.rows(), values.cols(), mask.rows(), mask.cols(), "TransportPlan");
    // Masked cells hold zero in memory regardless of how they were encoded.
    values = mask.select(values, Matrix::Zero(values.rows(), values.cols()));
    require_finite(values, "TransportPlan");
    if ((values.array() < 0.0).any()) {
        throw NumericError("TransportPlan: negative flow");
    }
}

}  // namespace otinv
