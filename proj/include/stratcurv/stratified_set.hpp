#pragma once

#include <string>

#include "stratcurv/definable_set.hpp"
#include "stratcurv/subspace.hpp"

namespace stratcurv {

struct Stratum {
    DefinableSet carrier;
    int dim = 0;
    std::string label;
};

/// Finite stratification: strata plus the frontier relation. A pair
/// (upper, lower) declares that the lower stratum lies in the closure of
/// the upper one.
struct StratifiedSet {
    int ambient_dim = 0;
    std::vector<Stratum> strata;
    std::vector<std::pair<int, int>> frontier;

    const Stratum& by_label(const std::string& label) const;
    int index_of(const std::string& label) const;
};

/// Tangent space of a stratum at one of its regular points: kernel of
/// the active Jacobian for implicit carriers, span of the containing
/// open simplex for PL carriers.
Subspace tangent_space(const Stratum& stratum, const VectorRef& x);

/// Locally orthogonal projection onto the stratum: multi-start projected
/// descent for implicit carriers, exact for PL. Ties broken toward the
/// lexicographically larger point.
Vector nearest_on_stratum(const Stratum& stratum, const VectorRef& x);

/// Project a seed onto an implicit carrier's equality locus
/// (Gauss-Newton), then validate the clause inequalities. Returns empty
/// optional when no clause accepts the landing point.
std::optional<Vector> project_to_implicit(const ImplicitSet& set, const VectorRef& seed,
                                          double tol, int max_iter = 80);

/// Up to n points of the stratum with |x - center| in [rmin, rmax].
/// Throws SamplingError if fewer than min_count are found.
std::vector<Vector> sample_on_stratum(const Stratum& stratum, const VectorRef& center,
                                      double rmin, double rmax, int n, RngStream& rng,
                                      int min_count = 1);

struct FrontierReport {
    struct PairResult {
        int upper = -1;
        int lower = -1;
        bool approachable = false;
        double worst_distance = 0.0;  // at the finest probe level
    };
    std::vector<PairResult> declared;
    std::vector<std::pair<int, int>> undeclared_incidences;
    bool pass = false;
};

/// Sampled audit of the frontier relation: declared pairs must be
/// approachable, approachable-but-undeclared pairs are flagged.
FrontierReport check_frontier(const StratifiedSet& ss, int probes, RngStream& rng,
                              double scale = 0.5);

}  // namespace stratcurv
