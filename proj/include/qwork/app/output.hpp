// Copyright 2026 The qwork Authors
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

#include <filesystem>
#include <string>
#include <string_view>

namespace qwork::app {

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

/// Writes to a sibling temp file and renames it over `path`, so readers never
/// see a half-written file.
void atomic_write(const std::filesystem::path& path, std::string_view data);

/// Directory for relative output paths: $QWORK_OUTPUT_DIR if set, else the
/// current directory.
std::filesystem::path default_output_dir();

/// `requested` when absolute, otherwise relative to default_output_dir().
std::filesystem::path resolve_output_path(const std::string& requested);

}  // namespace qwork::app
