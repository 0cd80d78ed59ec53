// Copyright 2026 The HRI Toolkit Authors
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

#ifndef HRI__FILEIO_HPP_
#define HRI__FILEIO_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hri
{

/// Throws Error(Io) when the file cannot be read.
std::string read_text_file(const std::filesystem::path & path);
std::vector<std::uint8_t> read_binary_file(const std::filesystem::path & path);

/// Writes through a sibling temporary file and renames it into place, so a
/// failed write never leaves a truncated target behind.
void write_file_atomic(const std::filesystem::path & path, std::string_view content);
void write_file_atomic(const std::filesystem::path & path, std::span<const std::uint8_t> content);

}  // namespace hri

#endif  // HRI__FILEIO_HPP_
