#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace ssm {

// Counter-based PRNG: the SplitMix64 finalizer applied to key + counter * gamma.
// State is just (key, counter), so jumping and splitting are trivial: streams
// derived from (seed, stream_index) are decorrelated and every draw is a pure
// function of (seed, stream, counter).  This makes parallel sampling
// reproducible across platforms and thread schedules.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix(mix(seed ^ 0x6a09e667f3bcc909ULL) ^ mix(stream ^ 0xbb67ae8584caa73bULL))) {}

    static const char* name() { return "splitmix64-counter"; }

    // Independent stream derived from the same logical seed.
    static CounterRng stream_of(std::uint64_t seed, std::uint64_t stream) {
        return CounterRng(seed, stream);
    }

    std::uint64_t next_u64() {
        ctr_ += 0x9e3779b97f4a7c15ULL;
        return mix(key_ ^ ctr_);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // Uniform integer in [0, n); n > 0.  Lemire multiply-shift (bias < n / 2^64).
    std::uint64_t uniform_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // Standard normal via Box-Muller (pair cached).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 1.0 - uniform01();  // (0, 1]
        double u2 = uniform01();
        double rad = std::sqrt(-2.0 * std::log(u1));
        double ang = 6.283185307179586476925286766559 * u2;
        spare_ = rad * std::sin(ang);
        have_spare_ = true;
        return rad * std::cos(ang);
    }

    // Index drawn according to cumulative weights (last entry ~ 1).
    int categorical(const std::vector<double>& cumulative) {
        double u = uniform01();
        int lo = 0;
        int hi = static_cast<int>(cumulative.size()) - 1;
        while (lo < hi) {
            int mid = (lo + hi) / 2;
            if (u < cumulative[static_cast<std::size_t>(mid)]) hi = mid;
            else lo = mid + 1;
        }
        return lo;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t ctr_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace ssm
