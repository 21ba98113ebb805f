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

#include <array>
#include <cstdint>
#include <string_view>

namespace progmeas {

/// Raw coincidence counts of one sweep point. First sign = Bell outcome
/// (Psi+ / Psi-), second sign = data input (phi+ / phi-). So c_mp counts
/// Psi- detections while the data photon was prepared in phi+. The shoulder
/// counts use the 45/45 (second sign +) and -45/45 (second sign -) inputs
/// taken outside the interference dip.
struct CountRecord {
    std::uint64_t c_pp = 0;
    std::uint64_t c_pm = 0;
    std::uint64_t c_mp = 0;
    std::uint64_t c_mm = 0;
    std::uint64_t sh_pp = 0;
    std::uint64_t sh_pm = 0;
    std::uint64_t sh_mp = 0;
    std::uint64_t sh_mm = 0;

    bool operator==(const CountRecord &) const = default;
};

/// Column names used for CountRecord fields in every dataset, in field order.
inline constexpr std::array<std::string_view, 8> kCountColumns{"c_pp",  "c_pm",  "c_mp",  "c_mm",
                                                                "sh_pp", "sh_pm", "sh_mp", "sh_mm"};

/// Point estimate with a first-order propagated standard error.
struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
};

}  // namespace progmeas
