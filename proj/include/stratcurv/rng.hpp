#pragma once

#include <cstdint>

#include "stratcurv/common.hpp"

namespace stratcurv {

/// Deterministic random stream keyed by (seed, stream_id). Identical keys
/// reproduce identical sequences on every platform: the generator and all
/// distributions below are implemented here rather than delegated to
/// std::<distribution> (whose output is implementation-defined).
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    /// Child stream derived deterministically; use for parallel substreams.
    RngStream spawn(std::uint64_t child_id) const;

    std::uint64_t next_u64();
    double uniform01();                       // [0, 1)
    double uniform(double a, double b);
    double normal();                          // standard normal
    std::uint64_t below(std::uint64_t n);     // uniform in [0, n)

    Vector normal_vector(int dim);
    /// Uniform point in the unit ball of the given dimension.
    Vector ball_point(int dim);

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t state_[4];
    bool have_cached_normal_ = false;
    double cached_normal_ = 0.0;
};

}  // namespace stratcurv
