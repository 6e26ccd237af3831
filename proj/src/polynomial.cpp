#include "stratcurv/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace stratcurv {

Polynomial::Polynomial(int nvars, std::vector<Term> terms)
    : nvars_(nvars), terms_(std::move(terms)) {
    for (const auto& t : terms_)
        if (static_cast<int>(t.exps.size()) != nvars_)
            throw DomainError("Polynomial: exponent vector length mismatch");
    merge_terms();
}

int Polynomial::degree() const {
    int d = 0;
    for (const auto& t : terms_) {
        int s = 0;
        for (int e : t.exps) s += e;
        d = std::max(d, s);
    }
    return d;
}

void Polynomial::add_term(double coeff, std::vector<int> exps) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw DomainError("Polynomial::add_term: exponent vector length mismatch");
    for (int e : exps)
        if (e < 0) throw DomainError("Polynomial: negative exponent");
    terms_.push_back({coeff, std::move(exps)});
    merge_terms();
}

void Polynomial::merge_terms() {
    std::map<std::vector<int>, double> acc;
    for (const auto& t : terms_) acc[t.exps] += t.coeff;
    terms_.clear();
    for (auto& [exps, c] : acc)
        if (c != 0.0) terms_.push_back({c, exps});
}

double Polynomial::eval(const VectorRef& x) const {
    if (x.size() != nvars_) throw DomainError("Polynomial::eval: dimension mismatch");
    double sum = 0.0;
    for (const auto& t : terms_) {
        double m = t.coeff;
        for (int i = 0; i < nvars_; ++i)
            for (int e = 0; e < t.exps[i]; ++e) m *= x[i];
        sum += m;
    }
    return sum;
}

double Polynomial::eval_abs(const VectorRef& x) const {
    if (x.size() != nvars_) throw DomainError("Polynomial::eval_abs: dimension mismatch");
    double sum = 0.0;
    for (const auto& t : terms_) {
        double m = std::abs(t.coeff);
        for (int i = 0; i < nvars_; ++i)
            for (int e = 0; e < t.exps[i]; ++e) m *= std::abs(x[i]);
        sum += m;
    }
    return sum;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw DomainError("Polynomial::derivative: bad variable");
    Polynomial out(nvars_);
    for (const auto& t : terms_) {
        if (t.exps[var] == 0) continue;
        Term d = t;
        d.coeff *= d.exps[var];
        d.exps[var] -= 1;
        out.terms_.push_back(std::move(d));
    }
    out.merge_terms();
    return out;
}

Vector Polynomial::gradient_at(const VectorRef& x) const {
    Vector g = Vector::Zero(nvars_);
    for (const auto& t : terms_) {
        for (int v = 0; v < nvars_; ++v) {
            if (t.exps[v] == 0) continue;
            double m = t.coeff * t.exps[v];
            for (int i = 0; i < nvars_; ++i) {
                const int e = (i == v) ? t.exps[i] - 1 : t.exps[i];
                for (int k = 0; k < e; ++k) m *= x[i];
            }
            g[v] += m;
        }
    }
    return g;
}

Polynomial Polynomial::substitute_tail(const VectorRef& tail) const {
    const int k = static_cast<int>(tail.size());
    if (k > nvars_) throw DomainError("Polynomial::substitute_tail: too many values");
    const int m = nvars_ - k;
    Polynomial out(m);
    for (const auto& t : terms_) {
        double c = t.coeff;
        for (int i = 0; i < k; ++i)
            for (int e = 0; e < t.exps[m + i]; ++e) c *= tail[i];
        if (c == 0.0) continue;
        Term nt;
        nt.coeff = c;
        nt.exps.assign(t.exps.begin(), t.exps.begin() + m);
        out.terms_.push_back(std::move(nt));
    }
    out.merge_terms();
    return out;
}

std::vector<double> Polynomial::restrict_to_line(const VectorRef& p0, const VectorRef& dir) const {
    if (p0.size() != nvars_ || dir.size() != nvars_)
        throw DomainError("Polynomial::restrict_to_line: dimension mismatch");
    std::vector<double> acc{0.0};
    acc.reserve(degree() + 1);
    std::vector<double> out{0.0};
    for (const auto& t : terms_) {
        // Expand coeff * prod (p0_i + s dir_i)^e_i by repeated convolution
        // with the linear factor.
        std::vector<double> prod{t.coeff};
        for (int i = 0; i < nvars_; ++i) {
            for (int e = 0; e < t.exps[i]; ++e) {
                std::vector<double> next(prod.size() + 1, 0.0);
                for (size_t j = 0; j < prod.size(); ++j) {
                    next[j] += prod[j] * p0[i];
                    next[j + 1] += prod[j] * dir[i];
                }
                prod = std::move(next);
            }
        }
        if (out.size() < prod.size()) out.resize(prod.size(), 0.0);
        for (size_t j = 0; j < prod.size(); ++j) out[j] += prod[j];
    }
    while (out.size() > 1 && out.back() == 0.0) out.pop_back();
    return out;
}

}  // namespace stratcurv
