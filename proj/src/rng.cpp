#include "stratcurv/rng.hpp"

#include <cmath>

namespace stratcurv {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
    // xoshiro256** state, seeded from (seed, stream) via splitmix64.
    std::uint64_t s = seed ^ rotl(stream_id + 0x9e3779b97f4a7c15ULL, 17);
    for (auto& w : state_) w = splitmix64(s);
}

RngStream RngStream::spawn(std::uint64_t child_id) const {
    std::uint64_t mix = stream_id_;
    std::uint64_t h = splitmix64(mix) ^ (child_id * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
    return RngStream(seed_, h);
}

std::uint64_t RngStream::next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double RngStream::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double a, double b) {
    return a + (b - a) * uniform01();
}

double RngStream::normal() {
    if (have_cached_normal_) {
        have_cached_normal_ = false;
        return cached_normal_;
    }
    // Box-Muller; u strictly positive to keep log finite.
    double u = 0.0;
    do {
        u = uniform01();
    } while (u <= 0.0);
    const double v = uniform01();
    const double mag = std::sqrt(-2.0 * std::log(u));
    cached_normal_ = mag * std::sin(2.0 * M_PI * v);
    have_cached_normal_ = true;
    return mag * std::cos(2.0 * M_PI * v);
}

std::uint64_t RngStream::below(std::uint64_t n) {
    if (n == 0) throw DomainError("RngStream::below: n must be positive");
    // Rejection to avoid modulo bias.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % n;
}

Vector RngStream::normal_vector(int dim) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v[i] = normal();
    return v;
}

Vector RngStream::ball_point(int dim) {
    if (dim == 0) return Vector(0);
    Vector dir = normal_vector(dim);
    const double nrm = dir.norm();
    if (nrm < 1e-300) return Vector::Zero(dim);
    const double radius = std::pow(uniform01(), 1.0 / dim);
    return dir * (radius / nrm);
}

const NumericConfig& default_config() {
    static const NumericConfig cfg{};
    return cfg;
}

}  // namespace stratcurv
