/**
 * Copyright 2026 The medaugment-cpp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef MEDAUG_SAMPLER_HPP_
#define MEDAUG_SAMPLER_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "medaug/level.hpp"
#include "medaug/ops.hpp"
#include "medaug/rng.hpp"

namespace medaug {

/// How many ops one branch draws from each space. The pixel count never
/// exceeds one and the total is 2 or 3.
struct Strategy {
  int n_pixel = 0;
  int n_spatial = 0;

  int total() const { return n_pixel + n_spatial; }
  bool operator==(const Strategy&) const = default;
};

/// The full strategy set: 1+2, 0+3, 1+1, 0+2. Its size is why the default
/// branch count is four.
inline constexpr std::array<Strategy, 4> kStrategySet = {
    Strategy{1, 2}, Strategy{0, 3}, Strategy{1, 1}, Strategy{0, 2}};

/// One branch's ordered (post-shuffle) op sequence. branch_index -1 marks
/// the untouched pass-through appended when the original is kept.
struct BranchPlan {
  int branch_index = 0;
  Strategy strategy;
  std::vector<OpSpec> ops;
};

enum class TaskKind { classification, segmentation };

/// "split" samples under the pixel/spatial separation with its strategy
/// set; "merged" is the single-space ablation that abandons the strategy
/// and draws 2-3 ops from the fourteen-op union.
enum class SpaceMode { split, merged };

/// Everything one augmentation run derives from: level l, branch count N,
/// seed, task and space mode. N=1 with include_original=false is the
/// one-to-one mode.
struct AugConfig {
  Level level = Level(5);
  int branches = 4;
  bool include_original = true;
  std::uint64_t seed = 8;
  TaskKind task = TaskKind::classification;
  SpaceMode space_mode = SpaceMode::split;
};

/// N=4: a uniformly random permutation of the strategy set, so every image
/// sees each strategy exactly once. Any other N: independent uniform draws
/// from the set (replacement sampling).
std::vector<Strategy> sample_strategies(const AugConfig& config, Rng& rng);

/// Draws the strategy's op kinds (without replacement inside each space)
/// and shuffles the combined list. No magnitudes are attached yet.
BranchPlan sample_branch_plan(const Strategy& strategy, const AugConfig& config,
                              Rng& rng);

/// Merged-space ablation plan: 2 or 3 distinct kinds from all fourteen,
/// without the one-pixel-op constraint. The recorded strategy holds the
/// post-hoc per-space counts.
BranchPlan sample_branch_plan_merged(const AugConfig& config, Rng& rng);

/// Attaches magnitudes drawn uniformly within each op's level bound
/// (integer-uniform over odd kernel sizes for blur, sign drawn where the
/// bound is signed), seeds the noise stream, then gates each op: it stays
/// enabled with probability 0.2*l and becomes the identity otherwise.
/// Draw order per op is fixed: magnitude, sign, noise seed, gate.
BranchPlan materialize(BranchPlan plan, const AugConfig& config, Rng& rng);

/// The full per-image sampling round: strategy assignment from the image's
/// reserved stream, then one sampled and materialized plan per branch from
/// its own (seed, image, branch) stream.
std::vector<BranchPlan> plan_image_branches(const AugConfig& config,
                                            std::uint64_t image_index);

/// Human-readable one-line plan description for logs and previews.
std::string describe(const BranchPlan& plan);

}  // namespace medaug

#endif  // MEDAUG_SAMPLER_HPP_
