#include "stratcurv/definable_set.hpp"

namespace stratcurv {

int DefinableSet::ambient_dim() const {
    return is_implicit() ? implicit().ambient_dim() : pl().ambient_dim();
}

int DefinableSet::declared_dim() const {
    if (is_implicit()) return implicit().declared_dim();
    int top = 0;
    for (int f : pl().member_faces()) top = std::max(top, pl().face_dim(f));
    return top;
}

bool DefinableSet::contains(const VectorRef& x, double tol) const {
    return is_implicit() ? implicit().contains(x, tol) : pl().contains(x, tol);
}

bool contains(const DefinableSet& set, const VectorRef& x, double tol) {
    return set.contains(x, tol);
}

DefinableSet SetFamily::fiber(const VectorRef& t) const {
    if (t.size() != param_dim_) throw DomainError("SetFamily::fiber: parameter length mismatch");
    if (!total_.is_implicit())
        throw DomainError("SetFamily::fiber: PL families are not supported");
    const int fdim = std::max(0, fiber_dim());
    return DefinableSet(total_.implicit().substitute_tail(t, fdim));
}

}  // namespace stratcurv
