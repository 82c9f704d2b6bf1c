/*
   Copyright 2026 The regula authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "regula/fixtures.hpp"

namespace regula {

namespace {

const char* kQuadtank = R"json({
  "format": 1,
  "metadata": {
    "name": "quadtank",
    "notes": "Linearized quadruple-tank process with a multivariable controller; generator entry (1,2) is -1/(s^2+1), matching the controller poles at 0 and +-i. See fixtures/README.md for the -1/(s^2-1) variant."
  },
  "plant": [
    ["2/(s+1)", "1/((2*s+1)*(s+1))"],
    ["1/(s+1)^2", "1/(s+1)"]
  ],
  "controller": [
    ["-(4*s^2+2*s+2)/(s*(s^2+1))", "-(4*s^2+3*s+5)/(5*s*(s^2+1))"],
    ["-(s^2+s+1)/(s*(s^2+1))", "-(2*s^2+s+1)/(s*(s^2+1))"]
  ],
  "generator": [
    ["1/s", "-1/(s^2+1)"],
    ["1/s", "(s+2)/(s+1)"]
  ]
}
)json";

const char* kQuadtankTypo = R"json({
  "format": 1,
  "metadata": {
    "name": "quadtank-typo",
    "notes": "Negative control: generator entry (1,2) is -1/(s^2-1). Its pole at s = 1 is not reproduced by the controller, so the internal-model checks must fail at entry (1,2)."
  },
  "plant": [
    ["2/(s+1)", "1/((2*s+1)*(s+1))"],
    ["1/(s+1)^2", "1/(s+1)"]
  ],
  "controller": [
    ["-(4*s^2+2*s+2)/(s*(s^2+1))", "-(4*s^2+3*s+5)/(5*s*(s^2+1))"],
    ["-(s^2+s+1)/(s*(s^2+1))", "-(2*s^2+s+1)/(s*(s^2+1))"]
  ],
  "generator": [
    ["1/s", "-1/(s^2-1)"],
    ["1/s", "(s+2)/(s+1)"]
  ]
}
)json";

const char* kQuadtankRcf = R"json({
  "format": 1,
  "metadata": {
    "name": "quadtank-rcf",
    "notes": "Right coprime factorization C = N*D^-1 of the quadtank controller over the stable ring; Bezout witnesses X, Y are constructed by the tool."
  },
  "N": [
    ["-(4*s^2+2*s+2)/(s+1)^3", "-(4*s^2+3*s+5)/(5*(s+1)^3)"],
    ["-(s^2+s+1)/(s+1)^3", "-(2*s^2+s+1)/(s+1)^3"]
  ],
  "D": [
    ["s*(s^2+1)/(s+1)^3", "0"],
    ["0", "s*(s^2+1)/(s+1)^3"]
  ]
}
)json";

} // namespace

const char* builtin_fixture_json(const std::string& name) {
    if (name == "quadtank") return kQuadtank;
    if (name == "quadtank-typo") return kQuadtankTypo;
    return nullptr;
}

const char* builtin_rcf_json(const std::string& name) {
    if (name == "quadtank") return kQuadtankRcf;
    return nullptr;
}

std::vector<std::string> builtin_fixture_names() { return {"quadtank", "quadtank-typo"}; }

} // namespace regula
