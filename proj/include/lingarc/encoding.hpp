// Copyright 2026 The lingarc Authors
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

#ifndef LINGARC_ENCODING_HPP
#define LINGARC_ENCODING_HPP

#include <string_view>

namespace lingarc {

/// Strict UTF-8 check: rejects overlong forms, surrogate code points and
/// anything above U+10FFFF. Returns the byte offset of the first bad byte,
/// or -1 if the input is valid.
long long utf8_invalid_at(std::string_view bytes);

inline bool is_valid_utf8(std::string_view bytes) {
    return utf8_invalid_at(bytes) < 0;
}

/// Throws Error(E_ENCODING) when the input is not valid UTF-8. The line
/// number in the error is derived from the offending byte offset.
void require_utf8(std::string_view bytes);

}  // namespace lingarc

#endif  // LINGARC_ENCODING_HPP
