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

#ifndef LINGARC_XML_DOM_HPP
#define LINGARC_XML_DOM_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lingarc/diagnostics.hpp"

// Minimal XML reader for the document shapes this toolkit emits: one root
// element, attributes, character data with the five predefined entities plus
// numeric references, comments, an optional declaration and DOCTYPE. No
// namespaces, no processing instructions, no CDATA.
namespace lingarc::xmldom {

struct Node {
    std::string name;
    std::vector<std::pair<std::string, std::string>> attrs;
    std::vector<Node> children;
    std::string text;  // concatenated character data (entities decoded)
    int line = 1;

    const std::string* attr(std::string_view name) const;
};

struct ParseResult {
    std::optional<Node> root;
    std::vector<Diagnostic> diagnostics;  // E_ENCODING / E_MALFORMED
};

ParseResult parse(std::string_view input);

/// Escapes &, <, > for character data.
std::string escape_text(std::string_view s);
/// Escapes &, <, >, " for double-quoted attribute values.
std::string escape_attr(std::string_view s);

}  // namespace lingarc::xmldom

#endif  // LINGARC_XML_DOM_HPP
