// Splittable counter-seeded RNG used by the stochastic modules.
//
// Streams are derived as splitmix64(seed ^ mix(stream_index)), so path i of
// an ensemble draws from its own reproducible stream regardless of execution
// order. Normal variates come from the Marsaglia polar method; everything is
// plain integer/double arithmetic, so replays are bit-identical.
#pragma once

#include <cmath>
#include <cstdint>

namespace dqlab::rng {

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in (0, 1]: never returns 0, safe for logs.
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    // Uniform in [-1, 1).
    double next_symmetric() {
        return static_cast<double>(static_cast<std::int64_t>(next_u64() >> 10)) * 0x1.0p-53 - 1.0;
    }

  private:
    std::uint64_t state_;
};

// Stream seed for path/substream `index` under a master seed.
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
    SplitMix64 mixer(master ^ (0xA3EC4E7511D2BA0Dull + index * 0x9E3779B97F4A7C15ull));
    return mixer.next_u64();
}

class NormalStream {
  public:
    explicit NormalStream(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = rng_.next_symmetric();
            v = rng_.next_symmetric();
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double factor = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * factor;
        have_spare_ = true;
        return u * factor;
    }

  private:
    SplitMix64 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace dqlab::rng
