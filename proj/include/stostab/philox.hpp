#ifndef STOSTAB_PHILOX_HPP
#define STOSTAB_PHILOX_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace stostab {

/// Philox4x32-10 counter-based generator. Streams are addressed by
/// (seed, path index) in the key and the step index in the counter, so
/// any increment can be generated independently of execution order.
class Philox {
public:
    Philox(std::uint64_t seed, std::uint64_t path) : seed_(seed), path_(path) {}

    std::array<std::uint32_t, 4> block(std::uint64_t step) const {
        std::uint32_t c0 = static_cast<std::uint32_t>(step);
        std::uint32_t c1 = static_cast<std::uint32_t>(step >> 32);
        std::uint32_t c2 = static_cast<std::uint32_t>(path_);
        std::uint32_t c3 = static_cast<std::uint32_t>(path_ >> 32);
        std::uint32_t k0 = static_cast<std::uint32_t>(seed_);
        std::uint32_t k1 = static_cast<std::uint32_t>(seed_ >> 32);
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = 0xD2511F53ull * c0;
            const std::uint64_t p1 = 0xCD9E8D57ull * c2;
            const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
            const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
            const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
            const std::uint32_t n0 = hi1 ^ c1 ^ k0;
            const std::uint32_t n2 = hi0 ^ c3 ^ k1;
            c0 = n0; c1 = lo1; c2 = n2; c3 = lo0;
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        return {c0, c1, c2, c3};
    }

    /// One standard normal per step via Box-Muller on two 53-bit uniforms.
    double normal(std::uint64_t step) const {
        const auto w = block(step);
        const std::uint64_t u = (static_cast<std::uint64_t>(w[0]) << 32) | w[1];
        const std::uint64_t v = (static_cast<std::uint64_t>(w[2]) << 32) | w[3];
        const double u1 = (static_cast<double>(u >> 11) + 0.5) * 0x1p-53;
        const double u2 = (static_cast<double>(v >> 11) + 0.5) * 0x1p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::uint64_t seed_;
    std::uint64_t path_;
};

} // namespace stostab

#endif
