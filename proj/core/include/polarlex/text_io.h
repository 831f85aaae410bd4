// Copyright 2026 The Polarlex Authors.
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

#ifndef POLARLEX_TEXT_IO_H_
#define POLARLEX_TEXT_IO_H_

// Small helpers shared by the TSV readers and writers.

#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace polarlex {

// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double value);

// Parses a complete field as a double; throws ParseError naming `context`.
double parse_double(std::string_view field, const std::string& context);
long long parse_int(std::string_view field, const std::string& context);

std::vector<std::string_view> split(std::string_view line, char sep);

// Strips a trailing '\r' so files written on Windows read the same.
std::string_view chomp(std::string_view line);

std::ifstream open_input(const std::filesystem::path& path);
std::ofstream open_output(const std::filesystem::path& path);

// "<path>:<line>" for error messages.
std::string where(const std::filesystem::path& path, std::size_t line);

}  // namespace polarlex

#endif  // POLARLEX_TEXT_IO_H_
