#include "stratcurv/implicit_set.hpp"

#include <cmath>

namespace stratcurv {

double DerivedCoord::value(const VectorRef& x) const {
    const double u = offset + lin.dot(x);
    return fn == Fn::Cos ? std::cos(u) : std::sin(u);
}

double DerivedCoord::deriv(const VectorRef& x, int j) const {
    const double u = offset + lin.dot(x);
    const double du = lin[j];
    return fn == Fn::Cos ? -std::sin(u) * du : std::cos(u) * du;
}

ImplicitSet::ImplicitSet(int ambient_dim, int declared_dim,
                         std::vector<Clause> clauses,
                         std::vector<DerivedCoord> derived,
                         std::vector<Polynomial> jacobian_override)
    : ambient_dim_(ambient_dim),
      declared_dim_(declared_dim),
      clauses_(std::move(clauses)),
      derived_(std::move(derived)),
      jacobian_override_(std::move(jacobian_override)) {
    if (declared_dim_ < 0 || declared_dim_ > ambient_dim_)
        throw DomainError("ImplicitSet: declared_dim out of [0, n]");
    const int nv = nvars();
    for (const auto& cl : clauses_)
        for (const auto& a : cl)
            if (a.poly.nvars() != nv)
                throw DomainError("ImplicitSet: atom polynomial variable count mismatch");
    for (const auto& d : derived_)
        if (d.lin.size() != ambient_dim_)
            throw DomainError("ImplicitSet: derived coordinate linear form length mismatch");
    for (const auto& p : jacobian_override_)
        if (p.nvars() != nv)
            throw DomainError("ImplicitSet: jacobian polynomial variable count mismatch");
}

Vector ImplicitSet::extended(const VectorRef& x) const {
    if (x.size() != ambient_dim_) throw DomainError("ImplicitSet: point dimension mismatch");
    Vector e(nvars());
    e.head(ambient_dim_) = x;
    for (size_t i = 0; i < derived_.size(); ++i) e[ambient_dim_ + i] = derived_[i].value(x);
    return e;
}

bool ImplicitSet::contains(const VectorRef& x, double tol) const {
    const Vector e = extended(x);
    for (const auto& cl : clauses_) {
        bool ok = true;
        for (const auto& a : cl) {
            const double v = a.poly.eval(e);
            const double scale = std::max(1.0, a.poly.eval_abs(e));
            if (a.rel == Rel::Eq) {
                if (std::abs(v) > tol * scale) { ok = false; break; }
            } else if (a.rel == Rel::Ge) {
                if (v < -tol * scale) { ok = false; break; }
            } else {
                if (!(v > 0.0)) { ok = false; break; }
            }
        }
        if (ok) return true;
    }
    return false;
}

Vector ImplicitSet::ambient_gradient(const Polynomial& p, const VectorRef& x) const {
    const Vector e = extended(x);
    const Vector full = p.gradient_at(e);
    Vector g = full.head(ambient_dim_);
    for (size_t d = 0; d < derived_.size(); ++d) {
        const double pd = full[ambient_dim_ + d];
        if (pd == 0.0) continue;
        for (int j = 0; j < ambient_dim_; ++j)
            if (derived_[d].lin[j] != 0.0) g[j] += pd * derived_[d].deriv(x, j);
    }
    return g;
}

std::vector<const Polynomial*> ImplicitSet::tangent_equations(const VectorRef& x, double tol) const {
    std::vector<const Polynomial*> eqs;
    if (!jacobian_override_.empty()) {
        for (const auto& p : jacobian_override_) eqs.push_back(&p);
        return eqs;
    }
    const Vector e = extended(x);
    for (const auto& cl : clauses_) {
        bool ok = true;
        for (const auto& a : cl) {
            const double v = a.poly.eval(e);
            const double scale = std::max(1.0, a.poly.eval_abs(e));
            if (a.rel == Rel::Eq) {
                if (std::abs(v) > tol * scale) { ok = false; break; }
            } else if (a.rel == Rel::Ge) {
                if (v < -tol * scale) { ok = false; break; }
            } else if (!(v > 0.0)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        for (const auto& a : cl)
            if (a.rel == Rel::Eq) eqs.push_back(&a.poly);
        return eqs;
    }
    throw DomainError("ImplicitSet::tangent_equations: point not on set");
}

Matrix ImplicitSet::jacobian_at(const VectorRef& x, double tol) const {
    const auto eqs = tangent_equations(x, tol);
    Matrix jac(static_cast<int>(eqs.size()), ambient_dim_);
    for (size_t i = 0; i < eqs.size(); ++i) jac.row(i) = ambient_gradient(*eqs[i], x).transpose();
    return jac;
}

ImplicitSet ImplicitSet::substitute_tail(const VectorRef& tail, int new_declared_dim) const {
    const int k = static_cast<int>(tail.size());
    if (k > ambient_dim_) throw DomainError("ImplicitSet::substitute_tail: too many values");
    const int m = ambient_dim_ - k;
    for (const auto& d : derived_)
        if (d.lin.head(m).cwiseAbs().maxCoeff() > 0.0)
            throw DomainError("ImplicitSet::substitute_tail: derived coordinate depends on kept variables");

    // Build the substitution block: tail ambient values, then all derived
    // values (computable from the tail alone).
    Vector sub(k + static_cast<int>(derived_.size()));
    sub.head(k) = tail;
    Vector full = Vector::Zero(ambient_dim_);
    full.tail(k) = tail;
    for (size_t i = 0; i < derived_.size(); ++i) sub[k + i] = derived_[i].value(full);

    std::vector<Clause> new_clauses;
    new_clauses.reserve(clauses_.size());
    for (const auto& cl : clauses_) {
        Clause nc;
        nc.reserve(cl.size());
        for (const auto& a : cl) nc.push_back({a.poly.substitute_tail(sub), a.rel});
        new_clauses.push_back(std::move(nc));
    }
    std::vector<Polynomial> new_jac;
    for (const auto& p : jacobian_override_) new_jac.push_back(p.substitute_tail(sub));
    return ImplicitSet(m, new_declared_dim, std::move(new_clauses), {}, std::move(new_jac));
}

bool ImplicitSet::constant_derived_along(const VectorRef& dir) const {
    for (const auto& d : derived_)
        if (std::abs(d.lin.dot(dir)) > 1e-14 * (d.lin.norm() * dir.norm() + 1e-300)) return false;
    return true;
}

}  // namespace stratcurv
