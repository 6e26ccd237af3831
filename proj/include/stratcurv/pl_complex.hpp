#pragma once

#include <vector>

#include "stratcurv/common.hpp"
#include "stratcurv/subspace.hpp"

namespace stratcurv {

/// Geometric simplicial complex. Faces are stored closure-complete and a
/// subset of them ("member faces", as open simplices) makes up the
/// represented point set; by default all faces are members, i.e. the set
/// is the closed polyhedron |K|. A stratum like "segment minus endpoint"
/// is the same complex with only the open segment as member.
class PLComplex {
public:
    /// Builds from maximal input simplices; faces are completed
    /// automatically and degenerate simplices are rejected.
    static PLComplex from_simplices(int ambient_dim,
                                    std::vector<Vector> vertices,
                                    const std::vector<std::vector<int>>& simplices);

    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return dim_; }
    int face_count() const { return static_cast<int>(faces_.size()); }
    const std::vector<int>& face(int f) const { return faces_[f]; }
    int face_dim(int f) const { return static_cast<int>(faces_[f].size()) - 1; }
    const std::vector<Vector>& vertices() const { return vertices_; }
    const std::vector<int>& member_faces() const { return members_; }
    bool whole_complex() const { return whole_; }

    /// Restriction carrying only the given open faces as the point set.
    PLComplex restrict_to(std::vector<int> member_faces) const;
    /// Face id for a sorted vertex tuple, -1 if absent.
    int find_face(std::vector<int> verts) const;

    /// Membership of x in the represented set (tolerance on barycentric
    /// coordinates).
    bool contains(const VectorRef& x, double tol) const;

    /// Smallest face whose closed simplex contains x (-1 if none).
    int smallest_containing_face(const VectorRef& x, double tol) const;

    /// Tangent space at x: span of the open simplex containing x.
    Subspace tangent_at(const VectorRef& x, double tol) const;

    /// Closest point of the represented set.
    Vector nearest_point(const VectorRef& x) const;
    double distance(const VectorRef& x) const;

    /// Euclidean distance from c to the closed face f intersected with
    /// the affine flat {y : F^T y = F^T flat_point}; +inf when empty.
    /// An empty frame means no constraint.
    double face_flat_distance(int f, const Matrix& flat_frame,
                              const VectorRef& flat_point, const VectorRef& c) const;

    /// Euler characteristic of |K| ∩ flat ∩ B(c, r) via the inclusion-
    /// exclusion weights (exact; whole-complex sets only).
    int euler_in_ball(const Matrix& flat_frame, const VectorRef& flat_point,
                      const VectorRef& c, double r) const;

    /// l-dimensional measure of the member set inside B(c, r); exact for
    /// member dimension <= 2.
    double measure_in_ball(int l, const VectorRef& c, double r) const;

    /// Uniform point on a member face of top dimension (area weighted).
    Vector sample_point(RngStream& rng) const;

    /// Mesh scale: shortest edge among member faces.
    double min_edge_length() const;

private:
    int ambient_dim_ = 0;
    int dim_ = 0;
    std::vector<Vector> vertices_;
    std::vector<std::vector<int>> faces_;    // sorted vertex tuples
    std::vector<double> mobius_;             // inclusion-exclusion weight per face
    std::vector<int> members_;               // open faces forming the set
    bool whole_ = true;

    void build_mobius();
    double face_measure(int f) const;
};

}  // namespace stratcurv
