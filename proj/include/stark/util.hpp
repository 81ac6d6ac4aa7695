#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace stark {

// Counter-based generator: every (seed, stream) pair yields an independent,
// platform-stable sequence. splitmix64 finalizer from Steele et al.
class SplitMix64 {
  public:
    SplitMix64(std::uint64_t seed, std::uint64_t stream)
        : state_(mix(seed ^ mix(stream * 0x9E3779B97F4A7C15ULL + 0x243F6A8885A308D3ULL))) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        return mix(z);
    }

    // uniform in [0, 1), 53-bit resolution
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    std::uint64_t state_;
};

// Number of worker threads: STARK_EMBED_THREADS caps it, default is the
// hardware count (at most 8). Always >= 1.
int worker_threads();

// Index-deterministic parallel map: body(i) for i in [0, n). Results must be
// written by index by the caller; the schedule never changes outcomes.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

// 17 significant digits, '.' decimal point, no locale surprises.
inline std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::vector<double> geomspace(double lo, double hi, int points_per_decade) {
    std::vector<double> out;
    const double dec = std::log10(hi / lo);
    const int n = std::max(2, static_cast<int>(dec * points_per_decade) + 1);
    out.reserve(n);
    for (int i = 0; i < n; ++i)
        out.push_back(lo * std::pow(10.0, dec * i / (n - 1)));
    out.back() = hi;
    return out;
}

}  // namespace stark
