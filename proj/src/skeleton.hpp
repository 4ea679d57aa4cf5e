// Copyright 2026 The tropaut Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef TROPAUT_SRC_SKELETON_HPP_
#define TROPAUT_SRC_SKELETON_HPP_

#include <vector>

#include "tropaut/metric.hpp"

namespace tropaut::internal {

// Shape of the smoothed graph (every 2-valent vertex merged away), which is
// where the extremal families are recognised.
enum class SkeletonKind { kOther, kBanana, kBouquet, kLollipop, kDumbbell };

struct Skeleton {
  SkeletonKind kind = SkeletonKind::kOther;
  int genus = 0;
  // Input vertex at the centre: the bouquet vertex or the lollipop hub.
  VertexId hub = -1;
  std::vector<Rational> edge_lengths;    // banana
  std::vector<Rational> loop_lengths;    // bouquet, lollipop, dumbbell
  std::vector<Rational> bridge_lengths;  // lollipop, dumbbell
  // Dumbbell only: input vertices along the chain joining the two loops.
  std::vector<VertexId> bridge_path;
};

// Requires a connected graph of genus >= 2.
Skeleton DescribeSkeleton(const MetricGraph& m);

bool AllEqual(const std::vector<Rational>& values);

}  // namespace tropaut::internal

#endif  // TROPAUT_SRC_SKELETON_HPP_
