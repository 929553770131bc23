// SPDX-License-Identifier: Apache-2.0
//
// sitesim - LTE / 5G mmWave uplink video simulator for construction sites
// Copyright (C) 2026 The sitesim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef SITESIM_RNG_STREAM_HPP
#define SITESIM_RNG_STREAM_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace sitesim
{

/// SplitMix64 finalizer; used to derive seeds, never as a stream generator.
std::uint64_t mix64(std::uint64_t x);

/// FNV-1a over the label bytes.
std::uint64_t hash_label(std::string_view label);

/// Named, seeded random substream.
///
/// The generator state is derived from (label, seed) only, so two streams with
/// the same pair replay the same draws and a new label never perturbs the draws
/// of an existing one. Distribution transforms are implemented here rather than
/// through <random> distributions so that draw sequences do not depend on the
/// standard library implementation.
class RngStream
{
  public:
    RngStream(std::string label, std::uint64_t seed);

    const std::string& label() const { return m_label; }
    std::uint64_t seed() const { return m_seed; }

    /// Uniform in [0, 1) with 53 bits of resolution.
    double uniform();
    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);
    /// Box-Muller; one normal per call (the paired value is discarded).
    double normal(double mean, double stddev);
    bool bernoulli(double p);
    std::uint64_t next_u64() { return m_engine(); }

  private:
    std::string m_label;
    std::uint64_t m_seed;
    std::mt19937_64 m_engine;
};

/// Convenience factory mirroring the engine-level operation name.
RngStream rng_stream(std::string label, std::uint64_t seed);

} // namespace sitesim

#endif // SITESIM_RNG_STREAM_HPP
