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

// Regenerates the three benchmark figures as CSV files:
//   left    W2 coefficient family over a4 outside [0, 1]
//   middle  strang vs W2 on the XY lattice (energy and operator errors)
//   right   W2(s/2) W2(s/2) vs W2(s/2) W2'(s/2) on a random two-term model
// Desk scale keeps every figure within seconds; full scale uses the
// 3x4 lattice and a 9-qubit, 50-string random model.

#include <string>
#include <vector>

namespace trotterbench {

enum class Figure { Left, Middle, Right };
enum class Scale { Desk, Full };

Figure parse_figure(const std::string& name);
std::string to_string(Figure f);

struct FigureOutput {
  std::string csv_path;
  std::vector<std::string> summary;  // one line per fitted series
};

FigureOutput reproduce_figure(Figure which, Scale scale, const std::string& out_dir = ".");

}  // namespace trotterbench
