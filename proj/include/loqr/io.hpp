// Copyright 2026 The loqr authors
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

#include <cstdint>
#include <functional>
#include <string>

namespace loqr {

/// Round-trip-exact decimal form of a double (%.17g).
std::string format_double(double value);

/// Write a whole file; throws std::runtime_error with the path on failure.
void write_file(const std::string& path, const std::string& content);

/// Read a whole file; throws std::runtime_error with the path on failure.
std::string read_file(const std::string& path);

/// FNV-1a 64-bit hash, hex-encoded; used to fingerprint resolved configs.
std::string fnv1a_hex(const std::string& bytes);

/// Run fn(0..count-1) on a small worker pool (threads <= 0 means hardware
/// concurrency). Exceptions from workers are rethrown on the caller.
void parallel_for_index(std::size_t count, int threads,
                        const std::function<void(std::size_t)>& fn);

}  // namespace loqr
