#pragma once

#include <cstdint>
#include <random>

namespace graphon {

/// Derives an independent child seed from a master seed (splitmix64 mix).
/// Used to split one master seed into per-trial / per-stage streams.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Deterministic random stream: a fixed engine (std::mt19937_64, whose output
/// sequence is pinned by the standard) plus hand-rolled distributions, so the
/// same seed produces the same draws on every platform and compiler. The
/// standard library distributions are implementation-defined and would break
/// that contract.
///
/// Every call consumes a well-defined number of raw engine outputs, which is
/// what makes "U-draws before edge-draws, row-major" stream layouts exact.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_raw() { return engine_(); }

    /// Uniform on [0,1) with 53-bit resolution. One raw draw.
    double uniform() { return static_cast<double>(next_raw() >> 11) * 0x1.0p-53; }

    /// One raw draw regardless of p.
    bool bernoulli(double p) { return uniform() < p; }

    /// Uniform integer in [0, bound); bound must be positive. One raw draw.
    std::size_t uniform_index(std::size_t bound);

    /// Standard normal via Box-Muller. Two raw draws, no cached spare.
    double normal();

    /// Gamma(shape, 1) via Marsaglia-Tsang; variable draw count (rejection).
    double gamma(double shape);

    /// Beta(a, b) as gamma(a)/(gamma(a)+gamma(b)).
    double beta(double a, double b);

private:
    std::mt19937_64 engine_;
};

}  // namespace graphon
