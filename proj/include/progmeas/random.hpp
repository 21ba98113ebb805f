// Copyright 2026 The progmeas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace progmeas {

using RandomEngine = std::mt19937_64;

/// Independent stream for (master seed, sweep point, purpose tag). Streams
/// for distinct (point, tag) pairs do not depend on evaluation order.
RandomEngine make_stream(std::uint64_t master_seed, std::uint64_t point, std::uint64_t tag);

}  // namespace progmeas
