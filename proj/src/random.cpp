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

#include "progmeas/random.hpp"

namespace progmeas {

RandomEngine make_stream(std::uint64_t master_seed, std::uint64_t point, std::uint64_t tag) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
        static_cast<std::uint32_t>(point),       static_cast<std::uint32_t>(point >> 32),
        static_cast<std::uint32_t>(tag),         static_cast<std::uint32_t>(tag >> 32),
    };
    return RandomEngine(seq);
}

}  // namespace progmeas
