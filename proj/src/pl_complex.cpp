#include "stratcurv/pl_complex.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace stratcurv {

namespace {

// k! for small k
double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

Matrix edge_matrix(const std::vector<Vector>& verts, const std::vector<int>& face) {
    const int k = static_cast<int>(face.size()) - 1;
    Matrix e(verts[face[0]].size(), k);
    for (int i = 0; i < k; ++i) e.col(i) = verts[face[i + 1]] - verts[face[0]];
    return e;
}

// Signed area contribution of one polygon edge against a disc of radius r
// centered at the origin (Green's theorem with arc clipping).
double edge_disc_contribution(const Eigen::Vector2d& a, const Eigen::Vector2d& b, double r) {
    auto cross2 = [](const Eigen::Vector2d& p, const Eigen::Vector2d& q) {
        return p.x() * q.y() - p.y() * q.x();
    };
    // Split the edge at circle crossings.
    const Eigen::Vector2d d = b - a;
    const double A = d.squaredNorm();
    std::vector<double> ts{0.0, 1.0};
    if (A > 0) {
        const double B = 2.0 * a.dot(d);
        const double C = a.squaredNorm() - r * r;
        const double disc = B * B - 4 * A * C;
        if (disc > 0) {
            const double sq = std::sqrt(disc);
            for (double t : {(-B - sq) / (2 * A), (-B + sq) / (2 * A)})
                if (t > 1e-14 && t < 1.0 - 1e-14) ts.push_back(t);
        }
    }
    std::sort(ts.begin(), ts.end());
    double total = 0.0;
    for (size_t i = 0; i + 1 < ts.size(); ++i) {
        const Eigen::Vector2d p = a + ts[i] * d;
        const Eigen::Vector2d q = a + ts[i + 1] * d;
        const Eigen::Vector2d mid = a + 0.5 * (ts[i] + ts[i + 1]) * d;
        if (mid.squaredNorm() <= r * r) {
            total += 0.5 * cross2(p, q);
        } else {
            double ang = std::atan2(q.y(), q.x()) - std::atan2(p.y(), p.x());
            if (ang > M_PI) ang -= 2 * M_PI;
            if (ang < -M_PI) ang += 2 * M_PI;
            total += 0.5 * r * r * ang;
        }
    }
    return total;
}

double polygon_disc_area(const std::vector<Eigen::Vector2d>& poly,
                         const Eigen::Vector2d& center, double r) {
    double s = 0.0;
    for (size_t i = 0; i < poly.size(); ++i) {
        const Eigen::Vector2d a = poly[i] - center;
        const Eigen::Vector2d b = poly[(i + 1) % poly.size()] - center;
        s += edge_disc_contribution(a, b, r);
    }
    return std::abs(s);
}

}  // namespace

PLComplex PLComplex::from_simplices(int ambient_dim,
                                    std::vector<Vector> vertices,
                                    const std::vector<std::vector<int>>& simplices) {
    PLComplex k;
    k.ambient_dim_ = ambient_dim;
    k.vertices_ = std::move(vertices);
    for (const auto& v : k.vertices_)
        if (v.size() != ambient_dim)
            throw DomainError("PLComplex: vertex dimension mismatch");

    std::set<std::vector<int>> face_set;
    for (auto simplex : simplices) {
        std::sort(simplex.begin(), simplex.end());
        if (std::adjacent_find(simplex.begin(), simplex.end()) != simplex.end())
            throw DomainError("PLComplex: repeated vertex in simplex");
        for (int idx : simplex)
            if (idx < 0 || idx >= static_cast<int>(k.vertices_.size()))
                throw DomainError("PLComplex: vertex index out of range");
        const int kd = static_cast<int>(simplex.size()) - 1;
        if (kd >= 1) {
            const Matrix e = edge_matrix(k.vertices_, simplex);
            const double vol = std::sqrt(std::max(0.0, (e.transpose() * e).determinant())) / factorial(kd);
            if (vol <= default_config().degenerate_vol)
                throw DomainError("PLComplex: degenerate simplex (volume below threshold)");
        }
        // Closure under faces: every nonempty vertex subset.
        const int m = static_cast<int>(simplex.size());
        for (int mask = 1; mask < (1 << m); ++mask) {
            std::vector<int> face;
            for (int i = 0; i < m; ++i)
                if (mask & (1 << i)) face.push_back(simplex[i]);
            face_set.insert(std::move(face));
        }
    }
    k.faces_.assign(face_set.begin(), face_set.end());
    std::sort(k.faces_.begin(), k.faces_.end(),
              [](const auto& x, const auto& y) {
                  if (x.size() != y.size()) return x.size() < y.size();
                  return x < y;
              });
    k.dim_ = 0;
    for (const auto& f : k.faces_) k.dim_ = std::max(k.dim_, static_cast<int>(f.size()) - 1);
    k.members_.resize(k.faces_.size());
    for (size_t i = 0; i < k.faces_.size(); ++i) k.members_[i] = static_cast<int>(i);
    k.whole_ = true;
    k.build_mobius();
    return k;
}

void PLComplex::build_mobius() {
    const int nf = face_count();
    mobius_.assign(nf, 0.0);
    // Supersets: faces_ sorted by size, so strict supersets come later.
    std::vector<std::vector<int>> supersets(nf);
    for (int f = 0; f < nf; ++f) {
        for (int g = f + 1; g < nf; ++g) {
            if (faces_[g].size() <= faces_[f].size()) continue;
            if (std::includes(faces_[g].begin(), faces_[g].end(),
                              faces_[f].begin(), faces_[f].end()))
                supersets[f].push_back(g);
        }
    }
    for (int f = nf - 1; f >= 0; --f) {
        double a = 1.0;
        for (int g : supersets[f]) a -= mobius_[g];
        mobius_[f] = a;
    }
}

PLComplex PLComplex::restrict_to(std::vector<int> member_faces) const {
    PLComplex k = *this;
    for (int f : member_faces)
        if (f < 0 || f >= face_count())
            throw DomainError("PLComplex::restrict_to: face index out of range");
    std::sort(member_faces.begin(), member_faces.end());
    k.members_ = std::move(member_faces);
    k.whole_ = false;
    return k;
}

int PLComplex::find_face(std::vector<int> verts) const {
    std::sort(verts.begin(), verts.end());
    for (int f = 0; f < face_count(); ++f)
        if (faces_[f] == verts) return f;
    return -1;
}

int PLComplex::smallest_containing_face(const VectorRef& x, double tol) const {
    for (int f = 0; f < face_count(); ++f) {  // sorted by ascending dim
        const auto& face = faces_[f];
        const int k = static_cast<int>(face.size()) - 1;
        if (k == 0) {
            if ((x - vertices_[face[0]]).norm() <= tol) return f;
            continue;
        }
        const Matrix e = edge_matrix(vertices_, face);
        const Vector rhs = x - vertices_[face[0]];
        const Vector lam = e.colPivHouseholderQr().solve(rhs);
        if ((e * lam - rhs).norm() > tol) continue;
        double sum = 0.0;
        bool ok = true;
        for (int i = 0; i < k; ++i) {
            if (lam[i] < -tol) { ok = false; break; }
            sum += lam[i];
        }
        if (ok && sum <= 1.0 + tol) return f;
    }
    return -1;
}

bool PLComplex::contains(const VectorRef& x, double tol) const {
    const int f = smallest_containing_face(x, tol);
    if (f < 0) return false;
    if (whole_) return true;
    return std::binary_search(members_.begin(), members_.end(), f);
}

Subspace PLComplex::tangent_at(const VectorRef& x, double tol) const {
    const int f = smallest_containing_face(x, tol);
    if (f < 0) throw DomainError("PLComplex::tangent_at: point not on complex");
    const auto& face = faces_[f];
    if (face.size() == 1) return Subspace(ambient_dim_);
    return Subspace::from_span(edge_matrix(vertices_, face));
}

Vector PLComplex::nearest_point(const VectorRef& x) const {
    double best = std::numeric_limits<double>::infinity();
    Vector best_pt = Vector::Zero(ambient_dim_);
    const Matrix no_flat(ambient_dim_, 0);
    for (int f : members_) {
        // Closest point on the closed face via active-subface enumeration.
        const auto& face = faces_[f];
        const int m = static_cast<int>(face.size());
        for (int mask = 1; mask < (1 << m); ++mask) {
            std::vector<int> sub;
            for (int i = 0; i < m; ++i)
                if (mask & (1 << i)) sub.push_back(face[i]);
            const int k = static_cast<int>(sub.size()) - 1;
            Vector y;
            if (k == 0) {
                y = vertices_[sub[0]];
            } else {
                const Matrix e = edge_matrix(vertices_, sub);
                const Vector rhs = x - vertices_[sub[0]];
                const Vector lam = (e.transpose() * e).ldlt().solve(e.transpose() * rhs);
                double sum = 0.0;
                bool ok = true;
                for (int i = 0; i < k; ++i) {
                    if (lam[i] < -1e-12) { ok = false; break; }
                    sum += lam[i];
                }
                if (!ok || sum > 1.0 + 1e-12) continue;
                y = vertices_[sub[0]] + e * lam;
            }
            const double d = (y - x).norm();
            if (d < best - 1e-15 ||
                (std::abs(d - best) <= 1e-15 &&
                 std::lexicographical_compare(best_pt.data(), best_pt.data() + best_pt.size(),
                                              y.data(), y.data() + y.size()))) {
                best = d;
                best_pt = y;
            }
        }
    }
    if (!std::isfinite(best)) throw ProjectionError("PLComplex::nearest_point: empty complex");
    return best_pt;
}

double PLComplex::distance(const VectorRef& x) const { return (nearest_point(x) - x).norm(); }

double PLComplex::face_flat_distance(int f, const Matrix& flat_frame,
                                     const VectorRef& flat_point, const VectorRef& c) const {
    const auto& face = faces_[f];
    const int m = static_cast<int>(face.size());
    const int l = static_cast<int>(flat_frame.cols());
    const Vector b = l > 0 ? Vector(flat_frame.transpose() * flat_point) : Vector(0);
    const double tol = 1e-9 * (1.0 + c.norm() + flat_point.norm());
    double best = std::numeric_limits<double>::infinity();
    for (int mask = 1; mask < (1 << m); ++mask) {
        std::vector<int> sub;
        for (int i = 0; i < m; ++i)
            if (mask & (1 << i)) sub.push_back(face[i]);
        const int k = static_cast<int>(sub.size()) - 1;
        const Vector& v0 = vertices_[sub[0]];
        Vector y;
        if (k == 0) {
            if (l > 0 && (flat_frame.transpose() * v0 - b).norm() > tol) continue;
            y = v0;
        } else {
            const Matrix e = edge_matrix(vertices_, sub);
            // minimize |e lam - (c - v0)|^2 subject to (F^T e) lam = b - F^T v0
            const Matrix a = l > 0 ? Matrix(flat_frame.transpose() * e) : Matrix(0, k);
            const Vector d = l > 0 ? Vector(b - flat_frame.transpose() * v0) : Vector(0);
            Matrix kkt(k + l, k + l);
            kkt.setZero();
            kkt.topLeftCorner(k, k) = e.transpose() * e;
            if (l > 0) {
                kkt.topRightCorner(k, l) = a.transpose();
                kkt.bottomLeftCorner(l, k) = a;
            }
            Vector rhs(k + l);
            rhs.head(k) = e.transpose() * (c - v0);
            if (l > 0) rhs.tail(l) = d;
            const Vector sol = kkt.completeOrthogonalDecomposition().solve(rhs);
            const Vector lam = sol.head(k);
            if (l > 0 && (a * lam - d).norm() > tol) continue;  // flat misses aff(sub)
            double sum = 0.0;
            bool ok = true;
            for (int i = 0; i < k; ++i) {
                if (lam[i] < -1e-10) { ok = false; break; }
                sum += lam[i];
            }
            if (!ok || sum > 1.0 + 1e-10) continue;
            y = v0 + e * lam;
        }
        best = std::min(best, (y - c).norm());
    }
    return best;
}

int PLComplex::euler_in_ball(const Matrix& flat_frame, const VectorRef& flat_point,
                             const VectorRef& c, double r) const {
    if (!whole_)
        throw DomainError("PLComplex::euler_in_ball: restricted carriers are not closed sets");
    double chi = 0.0;
    for (int f = 0; f < face_count(); ++f) {
        if (mobius_[f] == 0.0) continue;
        const double d = face_flat_distance(f, flat_frame, flat_point, c);
        if (d <= r * (1.0 + 1e-12) + 1e-14) chi += mobius_[f];
    }
    return static_cast<int>(std::llround(chi));
}

double PLComplex::face_measure(int f) const {
    const auto& face = faces_[f];
    const int k = static_cast<int>(face.size()) - 1;
    if (k == 0) return 0.0;
    const Matrix e = edge_matrix(vertices_, face);
    return std::sqrt(std::max(0.0, (e.transpose() * e).determinant())) / factorial(k);
}

double PLComplex::measure_in_ball(int l, const VectorRef& c, double r) const {
    double total = 0.0;
    for (int f : members_) {
        if (face_dim(f) != l) continue;
        const auto& face = faces_[f];
        if (l == 0) {
            if ((vertices_[face[0]] - c).norm() <= r) total += 1.0;
        } else if (l == 1) {
            const Vector& a = vertices_[face[0]];
            const Vector d = vertices_[face[1]] - a;
            const double A = d.squaredNorm();
            const double B = 2.0 * d.dot(a - c);
            const double C = (a - c).squaredNorm() - r * r;
            const double disc = B * B - 4 * A * C;
            if (disc <= 0) continue;
            const double sq = std::sqrt(disc);
            const double t0 = std::clamp((-B - sq) / (2 * A), 0.0, 1.0);
            const double t1 = std::clamp((-B + sq) / (2 * A), 0.0, 1.0);
            total += (t1 - t0) * std::sqrt(A);
        } else if (l == 2) {
            // Reduce to a disc in the triangle's plane.
            const Vector& v0 = vertices_[face[0]];
            Matrix e = edge_matrix(vertices_, face);
            Eigen::HouseholderQR<Matrix> qr(e);
            const Matrix q = qr.householderQ() * Matrix::Identity(ambient_dim_, 2);
            const Vector rel = c - v0;
            const Vector in_plane = q.transpose() * rel;
            const double h2 = rel.squaredNorm() - in_plane.squaredNorm();
            if (h2 >= r * r) continue;
            const double rho = std::sqrt(r * r - h2);
            std::vector<Eigen::Vector2d> tri;
            tri.emplace_back(0.0, 0.0);
            tri.emplace_back((q.transpose() * e.col(0)).x(), (q.transpose() * e.col(0)).y());
            tri.emplace_back((q.transpose() * e.col(1)).x(), (q.transpose() * e.col(1)).y());
            total += polygon_disc_area(tri, Eigen::Vector2d(in_plane.x(), in_plane.y()), rho);
        } else {
            throw EstimationError("PLComplex::measure_in_ball: dimension > 2 unsupported");
        }
    }
    return total;
}

Vector PLComplex::sample_point(RngStream& rng) const {
    int top = 0;
    for (int f : members_) top = std::max(top, face_dim(f));
    std::vector<int> cands;
    std::vector<double> weights;
    double total = 0.0;
    for (int f : members_) {
        if (face_dim(f) != top) continue;
        cands.push_back(f);
        const double w = (top == 0) ? 1.0 : face_measure(f);
        weights.push_back(w);
        total += w;
    }
    if (cands.empty()) throw SamplingError("PLComplex::sample_point: no member faces");
    double u = rng.uniform01() * total;
    int pick = cands.back();
    for (size_t i = 0; i < cands.size(); ++i) {
        if (u < weights[i]) { pick = cands[i]; break; }
        u -= weights[i];
    }
    const auto& face = faces_[pick];
    const int m = static_cast<int>(face.size());
    Vector w(m);
    double s = 0.0;
    for (int i = 0; i < m; ++i) {
        w[i] = -std::log(std::max(rng.uniform01(), 1e-300));
        s += w[i];
    }
    Vector pt = Vector::Zero(ambient_dim_);
    for (int i = 0; i < m; ++i) pt += (w[i] / s) * vertices_[face[i]];
    return pt;
}

double PLComplex::min_edge_length() const {
    double best = std::numeric_limits<double>::infinity();
    for (int f = 0; f < face_count(); ++f) {
        if (face_dim(f) != 1) continue;
        best = std::min(best, (vertices_[faces_[f][1]] - vertices_[faces_[f][0]]).norm());
    }
    return std::isfinite(best) ? best : 1.0;
}

}  // namespace stratcurv
