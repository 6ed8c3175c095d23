// Copyright 2026 The uncert authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Seeded, reproducible instance generation.
 *
 * The generator is SplitMix64 run in counter mode: output t of stream s is
 * mix64(s + (t+1) * 0x9E3779B97F4A7C15) where mix64 is the SplitMix64
 * finalizer. Per-trial streams derive their seed as
 * derive_seed(seed, trial) = mix64(seed ^ mix64(trial + GOLDEN)), so
 * campaigns are reproducible across thread counts. Integer streams are
 * bit-exact across platforms; derived floating-point matrices are subject
 * to the usual arithmetic tolerances.
 *
 * Distributions are the unitarily invariant defaults: GUE-style Hermitian
 * (G + G^dagger)/2, Wishart densities GG^dagger / tr, and Haar-style
 * unitaries from QR with phase-fixed diagonal.
 */

#pragma once

#include <cstdint>

#include "uncert/tracial_map.hpp"

namespace uncert {

namespace rng {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

/// Public per-trial seed derivation (documented contract).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t trial) {
    return mix64(seed ^ mix64(trial + kGolden));
}

/// Counter-mode SplitMix64 stream.
class Stream {
  public:
    explicit Stream(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next_u64() { return mix64(seed_ + (++counter_) * kGolden); }

    /// Uniform in (0, 1].
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller (two uniforms per call, no caching).
    double next_gaussian();

    /// Standard complex Gaussian: (N(0,1) + i N(0,1)) / sqrt(2).
    cplx next_cgauss();

    /// Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

  private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

} // namespace rng

/// GUE-style Hermitian matrix: (G + G^dagger)/2, G iid standard complex
/// Gaussian entries.
HermitianMatrix random_hermitian(int dim, std::uint64_t seed);

/// Wishart density: W = G G^dagger, rho = W / tr(W). PSD, trace 1.
HermitianMatrix random_density(int dim, std::uint64_t seed);

/// Haar-style unitary via Gram-Schmidt QR of a complex Gaussian matrix
/// with phase-fixed diagonal; unitarity defect <= 1e-10.
ComplexMatrix random_unitary(int dim, std::uint64_t seed);

/// Plain iid complex Gaussian square matrix (generally non-Hermitian).
ComplexMatrix random_complex(int dim, std::uint64_t seed);

/// Blockwise variants over an algebra.
AlgebraElement random_hermitian_element(const BlockAlgebra &alg, std::uint64_t seed);
AlgebraElement random_element(const BlockAlgebra &alg, std::uint64_t seed);
/// Blockwise Wishart, normalized to total trace 1 (PSD, definite a.s.).
AlgebraElement random_positive_element(const BlockAlgebra &alg, std::uint64_t seed);

/// Delegates to make_phi_density with randomized starting blocks.
AlgebraElement random_phi_density(const TracialMap &map, std::uint64_t seed);

/// Samples a map of the given kind over the domain. For scaled-block-trace
/// and composite, k is the number of rows/points; rows are nonnegative and
/// normalized to unitality. Composite targets are random PSD matrices
/// Q_j <- S^{-1/2} Q_j S^{-1/2}, S = sum Q_j, so they sum to the identity.
/// composite_codomain_dim picks the codomain block size (default 2).
TracialMap random_tracial_map(const BlockAlgebra &domain, MapKind kind, int k, std::uint64_t seed,
                              int composite_codomain_dim = 2);

/// Campaign-level generation parameters.
struct InstanceSpec {
    std::vector<int> block_dims;
    MapKind map_kind = MapKind::UsualTrace;
    int map_rows = 1; // k for scaled-block-trace / composite
    std::vector<double> alpha_grid;
    int trials = 1;
    std::uint64_t seed = 0;

    void validate() const;
    static std::vector<double> default_alpha_grid();
};

} // namespace uncert
