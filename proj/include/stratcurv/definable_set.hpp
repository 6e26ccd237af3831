#pragma once

#include <variant>

#include "stratcurv/implicit_set.hpp"
#include "stratcurv/pl_complex.hpp"

namespace stratcurv {

/// A concretely represented definable set: polynomial sign conditions or
/// a PL complex. All corpus sets are closed unless a carrier restricts to
/// open faces / strict inequalities for stratification bookkeeping.
class DefinableSet {
public:
    DefinableSet(ImplicitSet s) : rep_(std::move(s)) {}
    DefinableSet(PLComplex k) : rep_(std::move(k)) {}

    bool is_implicit() const { return std::holds_alternative<ImplicitSet>(rep_); }
    bool is_pl() const { return std::holds_alternative<PLComplex>(rep_); }
    const ImplicitSet& implicit() const { return std::get<ImplicitSet>(rep_); }
    const PLComplex& pl() const { return std::get<PLComplex>(rep_); }

    int ambient_dim() const;
    int declared_dim() const;

    bool contains(const VectorRef& x, double tol) const;

private:
    std::variant<ImplicitSet, PLComplex> rep_;
};

bool contains(const DefinableSet& set, const VectorRef& x, double tol);

/// Family of sets in R^(n-k) parameterized by the trailing k coordinates.
class SetFamily {
public:
    SetFamily(DefinableSet total, int param_dim)
        : total_(std::move(total)), param_dim_(param_dim) {
        if (param_dim_ <= 0 || param_dim_ >= total_.ambient_dim())
            throw DomainError("SetFamily: parameter dimension out of range");
    }

    const DefinableSet& total() const { return total_; }
    int param_dim() const { return param_dim_; }
    int fiber_ambient_dim() const { return total_.ambient_dim() - param_dim_; }
    int fiber_dim() const { return total_.declared_dim() - param_dim_; }

    DefinableSet fiber(const VectorRef& t) const;

private:
    DefinableSet total_;
    int param_dim_;
};

}  // namespace stratcurv
