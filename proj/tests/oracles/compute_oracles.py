#!/usr/bin/env python3
# Copyright 2026 The progmeas Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# Independent high-precision reference values for the unit and acceptance
# tests. Emits tests/oracle_values.hpp. Uses mpmath at 40 significant digits.
import sys
from mpmath import mp, mpf, cos, sin, sqrt, exp, radians, nstr

mp.dps = 40


def a_sq(eps_deg, theta_deg):
    e, t = radians(eps_deg), radians(theta_deg)
    x, y = cos(e), sin(e)
    return x**2 * cos(t) ** 2 + y**2 * sin(t) ** 2


def p_theory(eps_deg, theta_deg):
    a2 = a_sq(eps_deg, theta_deg)
    return 2 * (a2 - a2**2)


def p_optimal(eps_deg, theta_deg):
    # |<phi+|phi->| = ||a|^2 - |b|^2| for the elliptical pair
    a2 = a_sq(eps_deg, theta_deg)
    return 1 - abs(2 * a2 - 1)


def f(v):
    return nstr(v, 25, strip_zeros=False)


LICENSE = [
    '// Copyright 2026 The progmeas Authors',
    '//',
    '// Licensed under the Apache License, Version 2.0 (the "License");',
    '// you may not use this file except in compliance with the License.',
    '// You may obtain a copy of the License at',
    '//',
    '//      http://www.apache.org/licenses/LICENSE-2.0',
    '//',
    '// Unless required by applicable law or agreed to in writing, software',
    '// distributed under the License is distributed on an "AS IS" BASIS,',
    '// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.',
    '// See the License for the specific language governing permissions and',
    '// limitations under the License.',
]


def main(out):
    lines = list(LICENSE) + [""]
    w = lines.append
    w("// Generated by tests/oracles/compute_oracles.py (mpmath, 40 digits). Do not edit.")
    w("#pragma once")
    w("")
    w("#include <array>")
    w("")
    w("namespace progmeas::oracle {")
    w("")
    w(f"inline constexpr double kASq_24_20 = {f(a_sq(24, 20))};")
    w(f"inline constexpr double kPTheory_24_20 = {f(p_theory(24, 20))};")
    w(f"inline constexpr double kPTheory_36_0 = {f(p_theory(36, 0))};")
    w(f"inline constexpr double kASq_36_0 = {f(a_sq(36, 0))};")
    w(f"inline constexpr double kPOptimal_0_20 = {f(p_optimal(0, 20))};")
    w(f"inline constexpr double kCos40 = {f(cos(radians(40)))};")
    a, b = cos(radians(20)), sin(radians(20))
    w(f"inline constexpr double kMinusBranchCPhiPlus_20 = {f((a*a - b*b) / sqrt(2))};")
    w(f"inline constexpr double kMinusBranchCPhiMinus_20 = {f((a*a + b*b) / sqrt(2))};")
    w(f"inline constexpr double kMinusBranchCPsiMinus_20 = {f(sqrt(2) * a * b)};")
    w(f"inline constexpr double kMinusBranchPPsiMinus_20 = {f(2 * (a*b)**2)};")
    w(f"inline constexpr double kFidelityAtQuarter = {f((3 - 2*mpf(1)/4) / (4 * (1 - mpf(1)/4)))};")
    w(f"inline constexpr double kOverlapAt150Sigma35 = {f(exp(-mpf(150)**2 / (2 * mpf(35)**2)))};")
    w("")
    eps = [0, 12, 24, 36]
    thetas = list(range(0, 89, 4))
    w("struct GridValue {")
    w("  double epsilon;")
    w("  double theta;")
    w("  double p_theory;")
    w("  double p_optimal;")
    w("};")
    w("")
    w(f"inline constexpr std::array<GridValue, {len(eps) * len(thetas)}> kDiscriminatorGrid = {{{{")
    for e in eps:
        for t in thetas:
            w(f"    {{{e}, {t}, {f(p_theory(e, t))}, {f(p_optimal(e, t))}}},")
    w("}};")
    w("")
    w("}  // namespace progmeas::oracle")
    with open(out, "w") as fh:
        fh.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "oracle_values.hpp")
