#pragma once

#include "stratcurv/common.hpp"
#include "stratcurv/rng.hpp"

namespace stratcurv {

/// Linear subspace of R^n carried by an orthonormal frame (n x l matrix
/// of column vectors; empty when l = 0). Immutable after construction.
class Subspace {
public:
    /// The zero subspace of R^n.
    explicit Subspace(int ambient_dim);

    /// Build from a frame whose columns must already be orthonormal
    /// (checked against the identity Gram matrix at linalg_tol).
    static Subspace from_frame(Matrix frame);

    /// Orthonormalize the columns of a full-rank spanning set first.
    static Subspace from_span(const Matrix& span);

    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return static_cast<int>(frame_.cols()); }
    const Matrix& frame() const { return frame_; }

    /// Orthogonal projection of x onto this subspace.
    Vector project(const VectorRef& x) const;

    /// Orthonormal frame of the orthogonal complement.
    Subspace orthogonal_complement() const;

    /// True if the two subspaces induce the same projection operator.
    bool same_span(const Subspace& other, double tol = 1e-9) const;

private:
    Subspace(int ambient_dim, Matrix frame)
        : ambient_dim_(ambient_dim), frame_(std::move(frame)) {}

    int ambient_dim_;
    Matrix frame_;  // n x l, orthonormal columns
};

/// l-plane drawn from the rotation-invariant distribution on the
/// Grassmannian, realized by orthonormalizing independent Gaussian
/// columns. Frames are sign-normalized so fixed seeds give fixed frames.
Subspace haar_sample(int n, int l, RngStream& rng);

/// Orthogonal projection of x onto P (free-function form).
Vector project(const Subspace& P, const VectorRef& x);

/// Asymmetric gap delta(M, N) = sup over unit x in M of |x - proj_N(x)|.
/// Equals the largest singular value of the cross-Gram block between M's
/// frame and the complement of N; 0 when dim M = 0.
double gap(const Subspace& M, const Subspace& N);

/// c(n,k) = Gamma((n+1)/2) Gamma(1/2) / (Gamma((n-k+1)/2) Gamma((k+1)/2)).
double crofton_constant(int n, int k);

/// Volume of the d-dimensional unit ball.
double unit_ball_volume(int d);

}  // namespace stratcurv
