// Copyright 2026 The hwqubo Authors
//
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

#pragma once

#include <map>

#include "hwqubo/pubo.hpp"

namespace hwqubo::detail {

/// b_v = -2 c_v - sum_j c_vj for every variable of a QUBO.
inline std::map<VarId, double> linear_field(const Polynomial &qubo) {
  std::map<VarId, double> b;
  for (VarId v : qubo.variables()) {
    b[v] = 0.0;
  }
  for (const auto &[m, c] : qubo.terms()) {
    if (m.degree() == 1) {
      b[m.vars()[0]] -= 2.0 * c;
    } else if (m.degree() == 2) {
      b[m.vars()[0]] -= c;
      b[m.vars()[1]] -= c;
    }
  }
  return b;
}

}  // namespace hwqubo::detail
