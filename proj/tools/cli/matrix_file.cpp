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

#include "cli/matrix_file.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "bsfilter/errors.hpp"
#include "cli/number_format.hpp"

namespace bsf::cli {

namespace {

Complex parse_entry(const std::string &tok) {
    const char *first = tok.data();
    const char *last = first + tok.size();
    double re = 0.0, im = 0.0;
    auto r1 = std::from_chars(first, last, re);
    if (r1.ec != std::errc() || r1.ptr == last || (*r1.ptr != '+' && *r1.ptr != '-')) {
        throw ValidationError("malformed matrix entry '" + tok + "', expected re+imj");
    }
    const bool negative = *r1.ptr == '-';
    auto r2 = std::from_chars(r1.ptr + 1, last, im);
    if (r2.ec != std::errc() || r2.ptr + 1 != last || *r2.ptr != 'j') {
        throw ValidationError("malformed matrix entry '" + tok + "', expected re+imj");
    }
    return {re, negative ? -im : im};
}

}  // namespace

Mat4 parse_matrix(std::istream &in) {
    Mat4 m;
    std::size_t row = 0;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty() || toks.front().front() == '#') continue;
        if (row == 4) throw ValidationError("matrix file has more than 4 rows");
        if (toks.size() != 4) {
            throw ValidationError("matrix row " + std::to_string(row + 1) + " has " + std::to_string(toks.size()) +
                                  " entries, expected 4");
        }
        for (std::size_t c = 0; c < 4; ++c) m(row, c) = parse_entry(toks[c]);
        ++row;
    }
    if (row != 4) throw ValidationError("matrix file has " + std::to_string(row) + " rows, expected 4");
    return m;
}

Mat4 read_matrix_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open matrix file '" + path + "'");
    return parse_matrix(in);
}

std::string format_matrix(const Mat4 &m) {
    std::string out;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            const double im = m(r, c).imag();
            out += format_number(m(r, c).real());
            out += std::signbit(im) && im != 0.0 ? "-" : "+";
            out += format_number(std::abs(im));
            out += c == 3 ? "j\n" : "j ";
        }
    }
    return out;
}

}  // namespace bsf::cli
