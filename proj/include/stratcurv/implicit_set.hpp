#pragma once

#include <optional>
#include <vector>

#include "stratcurv/polynomial.hpp"

namespace stratcurv {

/// Auxiliary coordinate cos/sin(offset + lin . x), appended after the
/// ambient coordinates for atom polynomials. Lets one set family carry
/// fibers whose defining coefficients rotate with the parameter. Needed
/// because such families are definable but not polynomial in the
/// parameter.
struct DerivedCoord {
    enum class Fn { Cos, Sin };
    Fn fn = Fn::Cos;
    double offset = 0.0;
    Vector lin;  // length = ambient dim

    double value(const VectorRef& x) const;
    double deriv(const VectorRef& x, int j) const;  // d/dx_j
};

enum class Rel { Eq, Ge, Gt };

struct Atom {
    Polynomial poly;  // over ambient + derived variables
    Rel rel = Rel::Eq;
};

using Clause = std::vector<Atom>;  // conjunction

/// Set defined by a disjunction of sign-condition clauses.
class ImplicitSet {
public:
    ImplicitSet(int ambient_dim, int declared_dim,
                std::vector<Clause> clauses,
                std::vector<DerivedCoord> derived = {},
                std::vector<Polynomial> jacobian_override = {});

    int ambient_dim() const { return ambient_dim_; }
    int declared_dim() const { return declared_dim_; }
    const std::vector<Clause>& clauses() const { return clauses_; }
    const std::vector<DerivedCoord>& derived() const { return derived_; }
    const std::vector<Polynomial>& jacobian_override() const { return jacobian_override_; }
    int nvars() const { return ambient_dim_ + static_cast<int>(derived_.size()); }

    /// Ambient point extended with derived-coordinate values.
    Vector extended(const VectorRef& x) const;

    bool contains(const VectorRef& x, double tol) const;

    /// Ambient-space gradient of an atom polynomial (chain rule through
    /// derived coordinates).
    Vector ambient_gradient(const Polynomial& p, const VectorRef& x) const;

    /// Polynomials whose kernels give tangent spaces at regular points:
    /// the explicit override when present, otherwise the equality atoms
    /// of the first clause satisfied at x.
    std::vector<const Polynomial*> tangent_equations(const VectorRef& x, double tol) const;

    /// Rows are ambient gradients of tangent_equations at x.
    Matrix jacobian_at(const VectorRef& x, double tol) const;

    /// Substitute the trailing k ambient coordinates. Derived coordinates
    /// must be supported on the substituted block; they fold into plain
    /// polynomial coefficients.
    ImplicitSet substitute_tail(const VectorRef& tail, int new_declared_dim) const;

    /// True when every derived coordinate is constant along dir.
    bool constant_derived_along(const VectorRef& dir) const;

private:
    int ambient_dim_;
    int declared_dim_;
    std::vector<Clause> clauses_;
    std::vector<DerivedCoord> derived_;
    std::vector<Polynomial> jacobian_override_;
};

}  // namespace stratcurv
