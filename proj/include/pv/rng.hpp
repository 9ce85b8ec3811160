#pragma once
#include <cmath>
#include <cstdint>
#include <complex>

namespace pv {

// Counter-based splittable RNG.  Each generator is identified by a
// (seed, stream) pair; draw i is a pure function of (seed, stream, i),
// so results never depend on thread scheduling.  Child streams are
// derived by hashing, never by mutating the parent.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream), counter_(0) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    SeededRng child(std::uint64_t index) const {
        return SeededRng(seed_, mix(mix(stream_ ^ 0x9e3779b97f4a7c15ull, index), 0x2545f4914f6cdd1dull));
    }

    std::uint64_t next_u64() {
        return mix(mix(seed_, stream_), counter_++);
    }

    // uniform in [0,1)
    double next_real() {
        return double(next_u64() >> 11) * 0x1.0p-53;
    }

    // standard real normal via Box-Muller (portable across stdlibs)
    double next_gaussian() {
        if (have_cached_) { have_cached_ = false; return cached_; }
        double u1 = 1.0 - next_real();  // (0,1]
        double u2 = next_real();
        double rad = std::sqrt(-2.0 * std::log(u1));
        cached_ = rad * std::sin(6.283185307179586476925286766559 * u2);
        have_cached_ = true;
        return rad * std::cos(6.283185307179586476925286766559 * u2);
    }

    // standard complex normal: E|z|^2 = 1
    std::complex<double> next_cgaussian() {
        const double s = 0.70710678118654752440084436210485;
        double re = next_gaussian(), im = next_gaussian();
        return {re * s, im * s};
    }

    int next_sign() { return (next_u64() & 1ull) ? 1 : -1; }

private:
    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        std::uint64_t z = a + 0x9e3779b97f4a7c15ull * (b + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_, stream_, counter_;
    bool have_cached_ = false;
    double cached_ = 0.0;
};

} // namespace pv
