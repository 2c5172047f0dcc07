#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <thread>
#include <vector>

namespace mjet {

/// SplitMix64 step (Steele, Lea, Flood 2014). Used both as a generator
/// and as the mixer that derives independent sub-streams from a root seed.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Derives the seed of a sub-stream from a root seed and a stream id.
/// Every Monte Carlo sample, trial or bootstrap replicate gets its own
/// stream keyed by its index, so results do not depend on how work is
/// split across threads.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream_id) {
    std::uint64_t s = root ^ (0xD1B54A32D192ED03ULL * (stream_id + 1));
    std::uint64_t a = splitmix64_next(s);
    std::uint64_t b = splitmix64_next(s);
    return a ^ (b << 1);
}

inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t id1, std::uint64_t id2) {
    return derive_seed(derive_seed(root, id1), id2);
}

/// Counter-style deterministic random stream. Uniform doubles are taken
/// from the top 53 bits; normals come from Box-Muller in fixed pairs.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() { return splitmix64_next(state_); }

    /// Uniform in (0, 1].
    double uniform01() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * (1.0 - uniform01()); }

    /// Standard normal. Generates Box-Muller pairs, caches the second.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    void fill_normal(double* dst, std::size_t count) {
        for (std::size_t i = 0; i < count; ++i) dst[i] = normal();
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Runs fn(i) for i in [0, count) on `threads` workers and accumulates the
/// returned vectors with Neumaier-compensated summation. Work is cut into
/// fixed-size blocks and block partials are reduced in block order, so the
/// result is bit-identical for any thread count.
class BlockedAccumulator {
public:
    static constexpr std::size_t kBlock = 4096;

    /// fn(sample_index, out) must write `width` doubles into out.
    static std::vector<double> sum(std::size_t count, std::size_t width, int threads,
                                   const std::function<void(std::size_t, double*)>& fn) {
        const std::size_t nblocks = (count + kBlock - 1) / kBlock;
        std::vector<double> partials(nblocks * width, 0.0);

        auto run_block = [&](std::size_t b) {
            const std::size_t begin = b * kBlock;
            const std::size_t end = std::min(begin + kBlock, count);
            std::vector<double> acc(width, 0.0), comp(width, 0.0), val(width, 0.0);
            for (std::size_t i = begin; i < end; ++i) {
                fn(i, val.data());
                for (std::size_t j = 0; j < width; ++j) {
                    // Neumaier variant of Kahan summation.
                    double t = acc[j] + val[j];
                    if (std::abs(acc[j]) >= std::abs(val[j]))
                        comp[j] += (acc[j] - t) + val[j];
                    else
                        comp[j] += (val[j] - t) + acc[j];
                    acc[j] = t;
                }
            }
            for (std::size_t j = 0; j < width; ++j) partials[b * width + j] = acc[j] + comp[j];
        };

        if (threads <= 1 || nblocks <= 1) {
            for (std::size_t b = 0; b < nblocks; ++b) run_block(b);
        } else {
            std::vector<std::thread> pool;
            const int nthreads = std::min<std::size_t>(threads, nblocks);
            for (int t = 0; t < nthreads; ++t) {
                pool.emplace_back([&, t] {
                    for (std::size_t b = t; b < nblocks; b += nthreads) run_block(b);
                });
            }
            for (auto& th : pool) th.join();
        }

        std::vector<double> total(width, 0.0), comp(width, 0.0);
        for (std::size_t b = 0; b < nblocks; ++b) {
            for (std::size_t j = 0; j < width; ++j) {
                double v = partials[b * width + j];
                double t = total[j] + v;
                if (std::abs(total[j]) >= std::abs(v))
                    comp[j] += (total[j] - t) + v;
                else
                    comp[j] += (v - t) + total[j];
                total[j] = t;
            }
        }
        for (std::size_t j = 0; j < width; ++j) total[j] += comp[j];
        return total;
    }
};

}  // namespace mjet
