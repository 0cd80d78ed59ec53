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

#include "hri/fileio.hpp"

#include "hri/error.hpp"

#include <fstream>
#include <iterator>
#include <system_error>

namespace hri
{
namespace
{

void write_bytes(const std::filesystem::path & path, const char * data, std::size_t size)
{
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(ErrorKind::Io, "cannot open " + tmp.string() + " for writing");
    }
    out.write(data, static_cast<std::streamsize>(size));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw Error(ErrorKind::Io, "write failed: " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw Error(ErrorKind::Io, "cannot move " + tmp.string() + " to " + path.string() + ": " +
                                 ec.message());
  }
}

}  // namespace

std::string read_text_file(const std::filesystem::path & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::Io, "cannot open " + path.string());
  }
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw Error(ErrorKind::Io, "read failed: " + path.string());
  }
  return text;
}

std::vector<std::uint8_t> read_binary_file(const std::filesystem::path & path)
{
  const auto text = read_text_file(path);
  return {text.begin(), text.end()};
}

void write_file_atomic(const std::filesystem::path & path, std::string_view content)
{
  write_bytes(path, content.data(), content.size());
}

void write_file_atomic(const std::filesystem::path & path, std::span<const std::uint8_t> content)
{
  write_bytes(path, reinterpret_cast<const char *>(content.data()), content.size());
}

}  // namespace hri
