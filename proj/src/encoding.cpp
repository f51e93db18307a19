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

#include "lingarc/encoding.hpp"

#include <algorithm>
#include <cstdint>

#include "lingarc/diagnostics.hpp"

namespace lingarc {

long long utf8_invalid_at(std::string_view bytes) {
    const auto* p = reinterpret_cast<const std::uint8_t*>(bytes.data());
    const std::size_t n = bytes.size();
    std::size_t i = 0;
    while (i < n) {
        const std::uint8_t b = p[i];
        if (b < 0x80) {
            ++i;
            continue;
        }
        std::size_t len;
        std::uint32_t cp;
        if ((b & 0xE0) == 0xC0) {
            len = 2;
            cp = b & 0x1F;
        } else if ((b & 0xF0) == 0xE0) {
            len = 3;
            cp = b & 0x0F;
        } else if ((b & 0xF8) == 0xF0) {
            len = 4;
            cp = b & 0x07;
        } else {
            return static_cast<long long>(i);
        }
        if (i + len > n) return static_cast<long long>(i);
        for (std::size_t k = 1; k < len; ++k) {
            if ((p[i + k] & 0xC0) != 0x80) return static_cast<long long>(i);
            cp = (cp << 6) | (p[i + k] & 0x3F);
        }
        // Overlong encodings, surrogates and out-of-range code points.
        if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
            (len == 4 && cp < 0x10000) || (cp >= 0xD800 && cp <= 0xDFFF) ||
            cp > 0x10FFFF) {
            return static_cast<long long>(i);
        }
        i += len;
    }
    return -1;
}

void require_utf8(std::string_view bytes) {
    const long long at = utf8_invalid_at(bytes);
    if (at < 0) return;
    const int line = 1 + static_cast<int>(std::count(
                             bytes.begin(), bytes.begin() + at, '\n'));
    throw Error(codes::E_ENCODING, "input is not valid UTF-8", line);
}

}  // namespace lingarc
