// Copyright 2026 The trotterbench Authors
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

// Textual formula names used by the CLI and the sweep configuration:
//
//   trotter1 | strang | suzuki4
//   w2:a4=<v>[,branch=<k>]       designed second-order formula
//   w2p:a4=<v>[,branch=<k>]      its reversal
//   w2w2p:a4=<v>[,branch=<k>]    W2(s/2) W2'(s/2)
//   w2w2:a4=<v>[,branch=<k>]     W2(s/2) W2(s/2)
//
// The parsed formula is named after the spec text, so sweep output can be
// fed back through the parser.

#include <string>
#include <vector>

#include "trotterbench/formula.hpp"

namespace trotterbench {

struct FormulaSpec {
  std::string family;
  double a4 = 0.0;
  bool has_a4 = false;
  int branch = 0;
  std::string text;
};

FormulaSpec parse_formula_text(const std::string& text);

/// Builds the formula over `labels` (terms of the target Hamiltonian). The w2
/// families need exactly two labels.
ProductFormula make_formula(const FormulaSpec& spec, const std::vector<std::string>& labels);
ProductFormula make_formula(const std::string& text,
                            const std::vector<std::string>& labels = {"A", "B"});

}  // namespace trotterbench
