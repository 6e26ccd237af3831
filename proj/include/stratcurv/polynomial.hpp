#pragma once

#include <vector>

#include "stratcurv/common.hpp"

namespace stratcurv {

/// Sparse multivariate polynomial: sum of coeff * prod(x_i^e_i).
/// Coefficients are doubles; corpus files may state them as {num, den}
/// rationals, which load exactly whenever the quotient is representable.
class Polynomial {
public:
    struct Term {
        double coeff = 0.0;
        std::vector<int> exps;  // length nvars
    };

    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}
    Polynomial(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;

    void add_term(double coeff, std::vector<int> exps);

    double eval(const VectorRef& x) const;
    /// Sum of |coeff| * prod |x_i|^e_i; >= |eval(x)|, used as the scale
    /// for relative sign-condition tolerances.
    double eval_abs(const VectorRef& x) const;

    Polynomial derivative(int var) const;
    Vector gradient_at(const VectorRef& x) const;

    /// Fix the trailing k variables to the given values; the result is a
    /// polynomial in the leading nvars - k variables.
    Polynomial substitute_tail(const VectorRef& tail) const;

    /// Restriction to the line p0 + s*dir: exact univariate coefficients
    /// (ascending powers of s).
    std::vector<double> restrict_to_line(const VectorRef& p0, const VectorRef& dir) const;

private:
    void merge_terms();

    int nvars_ = 0;
    std::vector<Term> terms_;
};

}  // namespace stratcurv
