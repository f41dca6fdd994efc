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
#include "medaug/sampler.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace medaug {
namespace {

// Draws `count` distinct kinds from `space` by partial Fisher-Yates.
template <std::size_t N>
std::vector<OpKind> draw_distinct(const std::array<OpKind, N>& space,
                                  int count, Rng& rng) {
  std::vector<OpKind> pool(space.begin(), space.end());
  std::vector<OpKind> picked;
  picked.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int j = rng.uniform_int(i, static_cast<int>(pool.size()) - 1);
    std::swap(pool[static_cast<std::size_t>(i)],
              pool[static_cast<std::size_t>(j)]);
    picked.push_back(pool[static_cast<std::size_t>(i)]);
  }
  return picked;
}

}  // namespace

std::vector<Strategy> sample_strategies(const AugConfig& config, Rng& rng) {
  std::vector<Strategy> out;
  out.reserve(static_cast<std::size_t>(config.branches));
  if (config.branches == 4) {
    // without replacement: every branch sees a distinct strategy
    out.assign(kStrategySet.begin(), kStrategySet.end());
    rng.shuffle(out);
  } else {
    for (int j = 0; j < config.branches; ++j)
      out.push_back(kStrategySet[static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<int>(kStrategySet.size()) - 1))]);
  }
  return out;
}

BranchPlan sample_branch_plan(const Strategy& strategy, const AugConfig&,
                              Rng& rng) {
  assert(strategy.n_pixel <= 1 &&
         (strategy.total() == 2 || strategy.total() == 3));
  BranchPlan plan;
  plan.strategy = strategy;

  std::vector<OpKind> kinds = draw_distinct(kPixelSpace, strategy.n_pixel, rng);
  std::vector<OpKind> spatial =
      draw_distinct(kSpatialSpace, strategy.n_spatial, rng);
  kinds.insert(kinds.end(), spatial.begin(), spatial.end());
  rng.shuffle(kinds);

  plan.ops.reserve(kinds.size());
  for (OpKind k : kinds) {
    OpSpec op;
    op.kind = k;
    plan.ops.push_back(op);
  }
  return plan;
}

BranchPlan sample_branch_plan_merged(const AugConfig&, Rng& rng) {
  BranchPlan plan;
  const int m = rng.uniform_int(2, 3);
  std::vector<OpKind> kinds = draw_distinct(kAllOps, m, rng);
  rng.shuffle(kinds);
  for (OpKind k : kinds) {
    OpSpec op;
    op.kind = k;
    plan.ops.push_back(op);
    if (is_pixel_op(k))
      ++plan.strategy.n_pixel;
    else
      ++plan.strategy.n_spatial;
  }
  return plan;
}

BranchPlan materialize(BranchPlan plan, const AugConfig& config, Rng& rng) {
  const double p = op_probability(config.level);
  for (OpSpec& op : plan.ops) {
    assert(!op.magnitude);
    const MagnitudeBound bound = magnitude_bound(op.kind, config.level);
    if (bound.has_magnitude) {
      double m;
      if (op.kind == OpKind::gaussian_blur) {
        // integer-uniform over the odd kernel sizes in the bound
        const int lo = static_cast<int>(bound.lower);
        const int hi = static_cast<int>(bound.upper);
        m = static_cast<double>(lo + 2 * rng.uniform_int(0, (hi - lo) / 2));
      } else if (op.kind == OpKind::posterize) {
        m = bound.lower;  // single table value
      } else {
        m = rng.uniform(bound.lower, bound.upper);
      }
      if (bound.is_signed && rng.next_bool()) m = -m;
      op.magnitude = m;
    }
    if (op.kind == OpKind::gaussian_noise) op.noise_seed = rng.next_u64();
    op.enabled = rng.next_double() < p;
  }
  return plan;
}

std::vector<BranchPlan> plan_image_branches(const AugConfig& config,
                                            std::uint64_t image_index) {
  if (config.branches < 1)
    throw std::invalid_argument("branch count must be at least 1, got " +
                                std::to_string(config.branches));
  Rng strategy_rng = derive_stream(config.seed, image_index, kStrategyStream);
  std::vector<Strategy> strategies;
  if (config.space_mode == SpaceMode::split)
    strategies = sample_strategies(config, strategy_rng);

  std::vector<BranchPlan> plans;
  plans.reserve(static_cast<std::size_t>(config.branches));
  for (int j = 0; j < config.branches; ++j) {
    Rng rng = derive_stream(config.seed, image_index,
                            static_cast<std::uint64_t>(j));
    BranchPlan plan =
        config.space_mode == SpaceMode::split
            ? sample_branch_plan(strategies[static_cast<std::size_t>(j)],
                                 config, rng)
            : sample_branch_plan_merged(config, rng);
    plan.branch_index = j;
    plans.push_back(materialize(std::move(plan), config, rng));
  }
  return plans;
}

std::string describe(const BranchPlan& plan) {
  std::ostringstream os;
  if (plan.branch_index < 0) {
    os << "original (pass-through)";
    return os.str();
  }
  os << "branch " << plan.branch_index << " [" << plan.strategy.n_pixel << "+"
     << plan.strategy.n_spatial << "]:";
  for (const OpSpec& op : plan.ops) {
    os << " " << op_name(op.kind);
    if (op.magnitude) os << "(" << *op.magnitude << ")";
    if (!op.enabled) os << "[skipped]";
  }
  return os.str();
}

}  // namespace medaug
