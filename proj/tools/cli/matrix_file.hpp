// Copyright 2026 The bsfilter Authors
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

#include <istream>
#include <string>

#include "bsfilter/qlinalg.hpp"

namespace bsf::cli {

/// Parses 4 lines of 4 whitespace-separated entries written `re+imj` or
/// `re-imj` (e.g. `0.5+0j`). Blank lines and lines starting with '#' are
/// skipped. Throws ValidationError on malformed input.
Mat4 parse_matrix(std::istream &in);
Mat4 read_matrix_file(const std::string &path);

/// Inverse of parse_matrix, using format_number for each part.
std::string format_matrix(const Mat4 &m);

}  // namespace bsf::cli
