#include "stratcurv/subspace.hpp"

#include <cmath>

namespace stratcurv {

namespace {

// Deterministic column sign convention: first component larger than
// 1e-12 in magnitude is made positive.
void normalize_signs(Matrix& frame) {
    for (Eigen::Index j = 0; j < frame.cols(); ++j) {
        for (Eigen::Index i = 0; i < frame.rows(); ++i) {
            if (std::abs(frame(i, j)) > 1e-12) {
                if (frame(i, j) < 0) frame.col(j) = -frame.col(j);
                break;
            }
        }
    }
}

}  // namespace

Subspace::Subspace(int ambient_dim) : ambient_dim_(ambient_dim), frame_(ambient_dim, 0) {
    if (ambient_dim < 0) throw DomainError("Subspace: negative ambient dimension");
}

Subspace Subspace::from_frame(Matrix frame) {
    const int n = static_cast<int>(frame.rows());
    const int l = static_cast<int>(frame.cols());
    if (l > n) throw DomainError("Subspace: frame has more columns than ambient dimension");
    const Matrix gram = frame.transpose() * frame;
    if (l > 0 && (gram - Matrix::Identity(l, l)).cwiseAbs().maxCoeff() > default_config().linalg_tol)
        throw DomainError("Subspace: frame is not orthonormal");
    return Subspace(n, std::move(frame));
}

Subspace Subspace::from_span(const Matrix& span) {
    const int n = static_cast<int>(span.rows());
    if (span.cols() == 0) return Subspace(n);
    Eigen::ColPivHouseholderQR<Matrix> qr(span);
    qr.setThreshold(1e-12);
    const int rank = static_cast<int>(qr.rank());
    if (rank < span.cols())
        throw DomainError("Subspace: spanning set is rank deficient");
    Matrix q = qr.householderQ() * Matrix::Identity(n, rank);
    normalize_signs(q);
    return Subspace(n, std::move(q));
}

Vector Subspace::project(const VectorRef& x) const {
    if (x.size() != ambient_dim_)
        throw DomainError("Subspace::project: dimension mismatch");
    if (dim() == 0) return Vector::Zero(ambient_dim_);
    return frame_ * (frame_.transpose() * x);
}

Subspace Subspace::orthogonal_complement() const {
    const int n = ambient_dim_;
    const int l = dim();
    if (l == 0) return Subspace(n, Matrix::Identity(n, n));
    if (l == n) return Subspace(n);
    Eigen::HouseholderQR<Matrix> qr(frame_);
    Matrix q = qr.householderQ();
    Matrix comp = q.rightCols(n - l);
    normalize_signs(comp);
    return Subspace(n, std::move(comp));
}

bool Subspace::same_span(const Subspace& other, double tol) const {
    if (other.ambient_dim() != ambient_dim_ || other.dim() != dim()) return false;
    const Matrix pa = frame_ * frame_.transpose();
    const Matrix pb = other.frame_ * other.frame_.transpose();
    if (dim() == 0) return true;
    return (pa - pb).cwiseAbs().maxCoeff() <= tol;
}

Subspace haar_sample(int n, int l, RngStream& rng) {
    if (l < 0 || l > n) throw DomainError("haar_sample: l out of [0, n]");
    if (l == 0) return Subspace(n);
    Matrix g(n, l);
    for (int j = 0; j < l; ++j)
        for (int i = 0; i < n; ++i) g(i, j) = rng.normal();
    // Householder QR of a Gaussian matrix gives a rotation-invariant frame.
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(n, l);
    normalize_signs(q);
    return Subspace::from_frame(std::move(q));
}

Vector project(const Subspace& P, const VectorRef& x) { return P.project(x); }

double gap(const Subspace& M, const Subspace& N) {
    if (M.ambient_dim() != N.ambient_dim())
        throw DomainError("gap: ambient dimensions differ");
    if (M.dim() == 0) return 0.0;
    const Subspace nc = N.orthogonal_complement();
    if (nc.dim() == 0) return 0.0;
    const Matrix cross = nc.frame().transpose() * M.frame();
    Eigen::JacobiSVD<Matrix> svd(cross);
    const double s = svd.singularValues().size() > 0 ? svd.singularValues()[0] : 0.0;
    return std::min(1.0, s);
}

double crofton_constant(int n, int k) {
    if (k < 0 || k > n) throw DomainError("crofton_constant: k out of [0, n]");
    const double log_c = std::lgamma((n + 1) / 2.0) + std::lgamma(0.5)
                       - std::lgamma((n - k + 1) / 2.0) - std::lgamma((k + 1) / 2.0);
    return std::exp(log_c);
}

double unit_ball_volume(int d) {
    if (d < 0) throw DomainError("unit_ball_volume: negative dimension");
    return std::exp(0.5 * d * std::log(M_PI) - std::lgamma(0.5 * d + 1.0));
}

}  // namespace stratcurv
