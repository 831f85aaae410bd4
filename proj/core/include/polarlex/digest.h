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

#ifndef POLARLEX_DIGEST_H_
#define POLARLEX_DIGEST_H_

#include <filesystem>
#include <string>
#include <string_view>

namespace polarlex {

// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

// Streams the file through SHA-256. Throws IoError if it cannot be read.
std::string sha256_file(const std::filesystem::path& path);

}  // namespace polarlex

#endif  // POLARLEX_DIGEST_H_
