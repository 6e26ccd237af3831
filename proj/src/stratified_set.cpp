#include "stratcurv/stratified_set.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

namespace stratcurv {

namespace {

std::uint64_t hash_point(const VectorRef& x) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (int i = 0; i < x.size(); ++i) {
        std::uint64_t bits;
        const double v = x[i];
        std::memcpy(&bits, &v, sizeof(bits));
        h = (h ^ bits) * 0x100000001b3ULL;
    }
    return h;
}

// Kernel of the Jacobian of the active equalities at a point already on
// the carrier; frame columns orthonormal.
Subspace implicit_tangent(const ImplicitSet& set, const VectorRef& x, int expected_dim) {
    const int n = set.ambient_dim();
    const Matrix jac = set.jacobian_at(x, default_config().membership_tol * 10);
    if (jac.rows() == 0) {
        if (expected_dim >= 0 && expected_dim != n)
            throw SingularityError("tangent_space: no active equalities but stratum dim < n");
        return Subspace::from_frame(Matrix::Identity(n, n));
    }
    Eigen::JacobiSVD<Matrix> svd(jac, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv[0] : 0.0;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] > default_config().rank_tol * std::max(1.0, smax)) ++rank;
    if (expected_dim >= 0 && rank != n - expected_dim)
        throw SingularityError("tangent_space: Jacobian rank inconsistent with stratum dimension");
    return Subspace::from_frame(svd.matrixV().rightCols(n - rank));
}

bool lex_less(const Vector& a, const Vector& b) {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

}  // namespace

const Stratum& StratifiedSet::by_label(const std::string& label) const {
    const int i = index_of(label);
    if (i < 0) throw DomainError("StratifiedSet: unknown stratum label '" + label + "'");
    return strata[i];
}

int StratifiedSet::index_of(const std::string& label) const {
    for (size_t i = 0; i < strata.size(); ++i)
        if (strata[i].label == label) return static_cast<int>(i);
    return -1;
}

Subspace tangent_space(const Stratum& stratum, const VectorRef& x) {
    const double tol = default_config().membership_tol * 100;
    if (!stratum.carrier.contains(x, tol))
        throw DomainError("tangent_space: point not on stratum");
    if (stratum.carrier.is_pl()) {
        Subspace t = stratum.carrier.pl().tangent_at(x, default_config().membership_tol);
        if (t.dim() != stratum.dim)
            throw SingularityError("tangent_space: open simplex dimension mismatch");
        return t;
    }
    return implicit_tangent(stratum.carrier.implicit(), x, stratum.dim);
}

std::optional<Vector> project_to_implicit(const ImplicitSet& set, const VectorRef& seed,
                                          double tol, int max_iter) {
    const int n = set.ambient_dim();
    std::optional<Vector> best;
    double best_dist = std::numeric_limits<double>::infinity();

    auto gauss_newton = [&](const std::vector<const Polynomial*>& eqs, Vector y) -> std::optional<Vector> {
        if (eqs.empty()) return y;
        const int m = static_cast<int>(eqs.size());
        for (int it = 0; it < max_iter; ++it) {
            Vector g(m);
            Matrix jac(m, n);
            double scale = 1.0;
            const Vector e = set.extended(y);
            for (int i = 0; i < m; ++i) {
                g[i] = eqs[i]->eval(e);
                jac.row(i) = set.ambient_gradient(*eqs[i], y).transpose();
                scale = std::max(scale, eqs[i]->eval_abs(e));
            }
            if (g.cwiseAbs().maxCoeff() <= tol * scale) return y;
            const Matrix jjt = jac * jac.transpose();
            const Vector lam = jjt.completeOrthogonalDecomposition().solve(g);
            Vector step = jac.transpose() * lam;
            if (!step.allFinite()) return std::nullopt;
            // Damped update.
            double eta = 1.0;
            const double g0 = g.norm();
            for (int ls = 0; ls < 20; ++ls) {
                const Vector trial = y - eta * step;
                const Vector et = set.extended(trial);
                double gn = 0.0;
                for (int i = 0; i < m; ++i) gn += std::pow(eqs[i]->eval(et), 2);
                if (std::sqrt(gn) < g0) { y = trial; break; }
                eta *= 0.5;
                if (ls == 19) return std::nullopt;
            }
        }
        // Final residual check.
        const Vector e = set.extended(y);
        double scale = 1.0, gmax = 0.0;
        for (const auto* p : eqs) {
            gmax = std::max(gmax, std::abs(p->eval(e)));
            scale = std::max(scale, p->eval_abs(e));
        }
        if (gmax <= 100 * tol * scale) return y;
        return std::nullopt;
    };

    auto consider = [&](const Vector& y) {
        if (!set.contains(y, default_config().membership_tol * 100)) return;
        const double d = (y - seed).norm();
        if (d < best_dist - 1e-14 ||
            (std::abs(d - best_dist) <= 1e-14 && best && lex_less(*best, y))) {
            best_dist = d;
            best = y;
        }
    };

    for (const auto& clause : set.clauses()) {
        std::vector<const Polynomial*> eqs;
        std::vector<const Polynomial*> ineqs;
        for (const auto& a : clause) {
            if (a.rel == Rel::Eq) eqs.push_back(&a.poly);
            else ineqs.push_back(&a.poly);
        }
        if (auto y = gauss_newton(eqs, seed)) consider(*y);
        // Boundary candidates: activate inequality atoms singly and in pairs.
        const int ni = static_cast<int>(ineqs.size());
        for (int i = 0; i < ni; ++i) {
            auto with_i = eqs;
            with_i.push_back(ineqs[i]);
            if (auto y = gauss_newton(with_i, seed)) consider(*y);
            for (int j = i + 1; j < ni; ++j) {
                auto with_ij = with_i;
                with_ij.push_back(ineqs[j]);
                if (auto y = gauss_newton(with_ij, seed)) consider(*y);
            }
        }
    }
    return best;
}

Vector nearest_on_stratum(const Stratum& stratum, const VectorRef& x) {
    if (stratum.carrier.is_pl()) return stratum.carrier.pl().nearest_point(x);

    const auto& set = stratum.carrier.implicit();
    const double ptol = default_config().projection_tol;
    RngStream rng(hash_point(x), 0x70726f6aULL);

    std::optional<Vector> best;
    double best_dist = std::numeric_limits<double>::infinity();
    auto consider = [&](const std::optional<Vector>& y) {
        if (!y) return;
        const double d = (*y - x).norm();
        if (d < best_dist * (1.0 - 1e-9) ||
            (d <= best_dist * (1.0 + 1e-9) && (!best || lex_less(*best, *y)))) {
            best_dist = d;
            best = *y;
        }
    };

    consider(project_to_implicit(set, x, ptol));
    const double spread = best ? std::max(best_dist, 1e-3) : std::max(1.0, 0.5 * x.norm());
    for (int k = 0; k < 12; ++k) {
        Vector seed = x + spread * rng.uniform(0.2, 1.0) * rng.normal_vector(x.size()).normalized();
        consider(project_to_implicit(set, seed, ptol));
    }
    if (!best) throw ProjectionError("nearest_on_stratum: projection failed to land on stratum");

    // Tangential slide toward x within the carrier.
    Vector y = *best;
    for (int it = 0; it < 80; ++it) {
        Subspace tan(0);
        try {
            tan = implicit_tangent(set, y, -1);
        } catch (const Error&) {
            break;
        }
        const Vector t = tan.project(x - y);
        if (t.norm() <= ptol * (1.0 + x.norm())) break;
        double eta = 1.0;
        bool moved = false;
        const double cur = (y - x).norm();
        for (int ls = 0; ls < 12; ++ls) {
            const auto trial = project_to_implicit(set, y + eta * t, ptol);
            if (trial && (*trial - x).norm() < cur - 0.1 * eta * t.squaredNorm() / (cur + 1e-12)) {
                y = *trial;
                moved = true;
                break;
            }
            eta *= 0.5;
        }
        if (!moved) break;
    }
    if ((y - x).norm() <= best_dist * (1.0 + 1e-9)) consider(std::optional<Vector>(y));
    return *best;
}

std::vector<Vector> sample_on_stratum(const Stratum& stratum, const VectorRef& center,
                                      double rmin, double rmax, int n, RngStream& rng,
                                      int min_count) {
    std::vector<Vector> out;
    const double mtol = default_config().membership_tol * 100;
    const int budget = 80 * n;
    for (int attempt = 0; attempt < budget && static_cast<int>(out.size()) < n; ++attempt) {
        if (stratum.carrier.is_pl()) {
            const Vector pt = stratum.carrier.pl().sample_point(rng);
            const double d = (pt - center).norm();
            if (d >= rmin && d <= rmax) out.push_back(pt);
            continue;
        }
        const double r = rng.uniform(std::max(rmin, 1e-12), rmax);
        const Vector seed = center + r * rng.normal_vector(center.size()).normalized();
        const auto proj = project_to_implicit(stratum.carrier.implicit(), seed,
                                              default_config().projection_tol);
        if (!proj) continue;
        if (!stratum.carrier.contains(*proj, mtol)) continue;
        const double d = (*proj - center).norm();
        if (d >= rmin && d <= rmax) out.push_back(*proj);
    }
    if (static_cast<int>(out.size()) < min_count)
        throw SamplingError("sample_on_stratum: too few points found on '" + stratum.label + "'");
    return out;
}

FrontierReport check_frontier(const StratifiedSet& ss, int probes, RngStream& rng, double scale) {
    if (probes < 1) throw DomainError("check_frontier: probes must be >= 1");
    FrontierReport report;
    report.pass = true;

    auto approachable = [&](int upper, int lower, int nprobe, double* worst) -> bool {
        const auto& lo = ss.strata[lower];
        const auto& up = ss.strata[upper];
        std::vector<Vector> ys;
        try {
            ys = sample_on_stratum(lo, Vector::Zero(ss.ambient_dim), 0.0, scale, nprobe, rng, 1);
        } catch (const SamplingError&) {
            return false;
        }
        int success = 0;
        double worst_d = 0.0;
        const double h_fine = scale / 16.0;
        for (const auto& y : ys) {
            double found = std::numeric_limits<double>::infinity();
            for (int k = 0; k < 14; ++k) {
                const Vector seed = y + h_fine * rng.uniform(0.1, 1.0) *
                                            rng.normal_vector(y.size()).normalized();
                std::optional<Vector> proj;
                if (up.carrier.is_pl()) {
                    Vector p = up.carrier.pl().nearest_point(seed);
                    proj = p;
                } else {
                    proj = project_to_implicit(up.carrier.implicit(), seed,
                                               default_config().projection_tol);
                }
                if (!proj) continue;
                if (!up.carrier.contains(*proj, default_config().membership_tol * 100)) continue;
                found = std::min(found, (*proj - y).norm());
            }
            if (found <= 2.0 * h_fine) {
                ++success;
                worst_d = std::max(worst_d, found);
            }
        }
        if (worst) *worst = worst_d;
        return success * 5 >= static_cast<int>(ys.size()) * 4;
    };

    for (const auto& [upper, lower] : ss.frontier) {
        FrontierReport::PairResult pr;
        pr.upper = upper;
        pr.lower = lower;
        pr.approachable = approachable(upper, lower, probes, &pr.worst_distance);
        if (!pr.approachable) report.pass = false;
        report.declared.push_back(pr);
    }

    // Scan for incidences that were not declared.
    for (size_t u = 0; u < ss.strata.size(); ++u) {
        for (size_t l = 0; l < ss.strata.size(); ++l) {
            if (u == l || ss.strata[l].dim >= ss.strata[u].dim) continue;
            bool declared = false;
            for (const auto& [du, dl] : ss.frontier)
                if (du == static_cast<int>(u) && dl == static_cast<int>(l)) declared = true;
            if (declared) continue;
            if (approachable(static_cast<int>(u), static_cast<int>(l),
                             std::max(2, probes / 2), nullptr)) {
                report.undeclared_incidences.emplace_back(static_cast<int>(u), static_cast<int>(l));
                report.pass = false;
            }
        }
    }
    return report;
}

}  // namespace stratcurv
