#include "stratcurv/univariate.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace stratcurv {

double poly_eval(const std::vector<double>& coeffs, double s) {
    double v = 0.0;
    for (size_t i = coeffs.size(); i-- > 0;) v = v * s + coeffs[i];
    return v;
}

namespace {

double poly_deriv_eval(const std::vector<double>& coeffs, double s) {
    double v = 0.0;
    for (size_t i = coeffs.size(); i-- > 1;) v = v * s + coeffs[i] * static_cast<double>(i);
    return v;
}

double polish(const std::vector<double>& coeffs, double s, double lo, double hi) {
    for (int it = 0; it < 24; ++it) {
        const double f = poly_eval(coeffs, s);
        const double df = poly_deriv_eval(coeffs, s);
        if (df == 0.0) break;
        double step = f / df;
        const double limit = 0.25 * (hi - lo) + 1e-30;
        step = std::clamp(step, -limit, limit);
        const double next = std::clamp(s - step, lo, hi);
        if (next == s) break;
        s = next;
        if (std::abs(step) < 1e-16 * (std::abs(s) + 1.0)) break;
    }
    return s;
}

}  // namespace

std::vector<UnivariateRoot> poly_roots_in(const std::vector<double>& coeffs,
                                          double a, double b,
                                          bool* identically_zero) {
    if (identically_zero) *identically_zero = false;
    const double span = std::max(b - a, 1e-300);
    double coeff_scale = 0.0;
    double sp = std::max({1.0, std::abs(a), std::abs(b)});
    double p = 1.0;
    for (double c : coeffs) {
        coeff_scale = std::max(coeff_scale, std::abs(c) * p);
        p *= sp;
    }
    if (coeff_scale == 0.0) {
        if (identically_zero) *identically_zero = true;
        return {};
    }

    // Trim numerically vanishing leading coefficients.
    std::vector<double> cs = coeffs;
    {
        double lead_scale = coeff_scale;
        while (cs.size() > 1 && std::abs(cs.back()) * std::pow(sp, cs.size() - 1) < 1e-13 * lead_scale)
            cs.pop_back();
    }
    const int deg = static_cast<int>(cs.size()) - 1;
    if (deg == 0) {
        if (std::abs(cs[0]) < 1e-13 * coeff_scale && identically_zero) *identically_zero = true;
        return {};
    }

    const double edge = 1e-9 * span;
    struct Cand { double s; bool contact; };
    std::vector<Cand> cand;

    if (deg == 1) {
        cand.push_back({-cs[0] / cs[1], false});
    } else if (deg == 2) {
        const double A = cs[2], B = cs[1], C = cs[0];
        const double disc = B * B - 4 * A * C;
        const double disc_scale = B * B + 4 * std::abs(A * C) + 1e-300;
        if (disc > 1e-12 * disc_scale) {
            const double q = -0.5 * (B + (B >= 0 ? std::sqrt(disc) : -std::sqrt(disc)));
            cand.push_back({q / A, false});
            cand.push_back({C / q, false});
        } else if (disc > -1e-12 * disc_scale) {
            cand.push_back({-B / (2 * A), true});  // double root
        }
    } else {
        if (deg > 40) throw DomainError("poly_roots_in: degree too large");
        Matrix comp = Matrix::Zero(deg, deg);
        for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -cs[i] / cs[deg];
        for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
        Eigen::EigenSolver<Matrix> es(comp, /*computeEigenvectors=*/false);
        const auto vals = es.eigenvalues();
        const double imag_tol = 1e-6 * std::max(span, 1.0);
        std::vector<bool> used(deg, false);
        for (int i = 0; i < deg; ++i) {
            if (used[i]) continue;
            const double re = vals[i].real(), im = vals[i].imag();
            if (std::abs(im) < 1e-12 * (1.0 + std::abs(re))) {
                cand.push_back({re, false});
                used[i] = true;
            } else if (std::abs(im) <= imag_tol) {
                // Near-real conjugate pair: treat as an even-multiplicity
                // real contact so fibers at refined event values include
                // the tangency point.
                for (int j = i + 1; j < deg; ++j) {
                    if (!used[j] && std::abs(vals[j].real() - re) < 1e-9 * (1.0 + std::abs(re)) &&
                        std::abs(vals[j].imag() + im) < 1e-9 * (1.0 + std::abs(im))) {
                        used[j] = true;
                        break;
                    }
                }
                cand.push_back({re, true});
                used[i] = true;
            } else {
                used[i] = true;
            }
        }
    }

    std::vector<Cand> inside;
    for (auto& c : cand) {
        double s = polish(cs, c.s, a - 4 * edge, b + 4 * edge);
        if (s < a - edge || s > b + edge) continue;
        inside.push_back({std::clamp(s, a, b), c.contact});
    }
    std::sort(inside.begin(), inside.end(), [](const Cand& x, const Cand& y) { return x.s < y.s; });

    // Merge clusters; a merged pair of simple roots becomes a contact.
    const double merge_tol = 1e-6 * span;
    std::vector<UnivariateRoot> roots;
    size_t i = 0;
    while (i < inside.size()) {
        size_t j = i + 1;
        double sum = inside[i].s;
        bool contact = inside[i].contact;
        int count = 1;
        int simple = inside[i].contact ? 2 : 1;
        while (j < inside.size() && inside[j].s - inside[j - 1].s <= merge_tol) {
            sum += inside[j].s;
            contact = contact || inside[j].contact;
            simple += inside[j].contact ? 2 : 1;
            ++count;
            ++j;
        }
        const double s = sum / count;
        bool sign_change;
        if (count == 1 && !contact) {
            sign_change = true;
        } else {
            // Resolve by evaluating on both sides of the cluster.
            double h = std::max(4 * merge_tol, 1e-9 * span);
            sign_change = (simple % 2 == 1);
            for (int k = 0; k < 3; ++k) {
                const double fl = poly_eval(cs, s - h);
                const double fr = poly_eval(cs, s + h);
                if (fl != 0.0 && fr != 0.0) {
                    sign_change = (fl > 0) != (fr > 0);
                    break;
                }
                h *= 4;
            }
        }
        roots.push_back({s, sign_change});
        i = j;
    }
    return roots;
}

}  // namespace stratcurv
