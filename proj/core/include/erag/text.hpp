// Copyright 2026 The erag Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ERAG_TEXT_HPP_
#define ERAG_TEXT_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace erag {

// Splits on runs of ASCII whitespace; no empty tokens.
std::vector<std::string_view> SplitWhitespace(std::string_view text);

std::size_t CountWhitespaceTokens(std::string_view text);

std::string_view Trim(std::string_view text);

std::string Join(const std::vector<std::string>& parts, std::string_view sep);

// Shortest decimal representation that round-trips through strtod.
std::string FormatDouble(double value);

// Whole-file read; throws Error(kIoError) when the file cannot be opened.
std::string ReadFile(const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it over `path`, so readers
// never observe a partially written file.
void WriteFileAtomic(const std::filesystem::path& path,
                     std::string_view contents);

}  // namespace erag

#endif  // ERAG_TEXT_HPP_
