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

#ifndef LINGARC_XML_IO_HPP
#define LINGARC_XML_IO_HPP

#include <string>
#include <string_view>

#include "lingarc/diagnostics.hpp"
#include "lingarc/model.hpp"

// Interlinear XML representation. The grammar ships as docs/interlinear.dtd
// (plus docs/metadata.dtd for the crosswalk documents); validate_xml enforces
// the same content models with line-numbered diagnostics.
namespace lingarc::xml {

/// Serializes a text. Requires validate(text) to report no errors
/// (Error(E_PRECONDITION) otherwise). Deterministic: equal models produce
/// byte-identical output. Units serialize as <lexical_item> for lexicon and
/// <text_unit> for primary_text; offsets render with two decimals; every
/// tier element is present, empty when absent.
std::string to_xml(const ArchiveText& text);

/// Inverse of to_xml on its image. Throws Error(E_ENCODING) on bad bytes,
/// Error(E_MALFORMED) on XML syntax faults and Error(E_SCHEMA) on
/// grammar violations (both carry line numbers).
ArchiveText from_xml(std::string_view input);

/// Well-formedness plus grammar validation; empty list iff clean.
/// Root dispatch: <text> (interlinear), <olac>/<olac_set>/<dc> (metadata).
std::vector<Diagnostic> validate_xml(std::string_view input);

}  // namespace lingarc::xml

#endif  // LINGARC_XML_IO_HPP
