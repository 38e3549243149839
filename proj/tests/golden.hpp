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

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef BSFILTER_GOLDEN_DIR
#error "BSFILTER_GOLDEN_DIR must point at tests/golden"
#endif

namespace bsf::testing {

struct GoldenEntry {
    std::string file;
    std::vector<std::string> args;  // arguments without --out
};

inline std::string golden_path(const std::string &file) { return std::string(BSFILTER_GOLDEN_DIR) + "/" + file; }

inline std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Entries of tests/golden/manifest.txt.
inline std::vector<GoldenEntry> golden_entries() {
    std::istringstream in(read_file(golden_path("manifest.txt")));
    std::vector<GoldenEntry> out;
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line.front() == '#') continue;
        const auto bar = line.find('|');
        GoldenEntry e{line.substr(0, bar), {}};
        std::istringstream args(line.substr(bar + 1));
        for (std::string a; args >> a;) e.args.push_back(a);
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace bsf::testing
