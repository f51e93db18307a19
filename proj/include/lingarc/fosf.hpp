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

#ifndef LINGARC_FOSF_HPP
#define LINGARC_FOSF_HPP

#include <string>
#include <string_view>
#include <vector>

#include "lingarc/diagnostics.hpp"

// Field-ordered standard format ("back-slashed") files. A marker line is a
// backslash at byte offset 0, a marker name, one space, then the value to end
// of line. Non-blank lines that do not start with a backslash continue the
// previous field; end tags do not exist and record boundaries are inferred
// from the template's record-head marker.
namespace lingarc::fosf {

enum class TemplateKind { metadata, lexicon, primary_text };

std::string template_name(TemplateKind t);

/// How a marker name relates to the selected template:
///  - known:     listed in the template's marker table
///  - extension: one of the toolkit markers (md, spk, off, nac) that carry
///               media/speaker/offset/analyst data the tables never covered
///  - unknown:   anything else (preserved, but flagged)
enum class MarkerClass { known, extension, unknown };

struct RawField {
    std::string marker;  // as written, without the leading backslash
    std::string value;   // continuation lines already joined with spaces
    int line = 1;        // 1-based source line of the marker line
    MarkerClass klass = MarkerClass::unknown;

    bool operator==(const RawField& o) const {
        return marker == o.marker && value == o.value;
    }
};

struct RawRecord {
    std::vector<RawField> fields;
    // True for the document header / stray-field block in front of the first
    // record-head marker.
    bool preamble = false;
};

struct Document {
    TemplateKind template_kind = TemplateKind::lexicon;
    std::vector<RawRecord> records;
    std::vector<Diagnostic> diagnostics;
};

/// Marker table lookups.
bool is_template_marker(std::string_view marker, TemplateKind t);
bool is_extension_marker(std::string_view marker);
bool is_repeatable_marker(std::string_view marker);
/// Record-head marker for a template; for primary_text the head is "sp" when
/// the document contains any sp field, otherwise "ft".
std::string head_marker(TemplateKind t, const std::vector<RawField>& fields);

/// Parses a FOSF byte stream. Throws Error(E_ENCODING) on non-UTF-8 input;
/// everything else is reported through Document::diagnostics (unknown
/// markers warn, structural faults are errors). Empty input gives a
/// zero-record document with no diagnostics.
Document parse_fosf(std::string_view input, TemplateKind t);

/// Splits a field sequence into records at each record-head marker. Fields
/// before the first head form a preamble record; it is warning-free when it
/// holds only document-header extension markers (md, spk).
std::vector<RawRecord> infer_record_boundaries(std::vector<RawField> fields,
                                               TemplateKind t,
                                               std::vector<Diagnostic>* diags);

/// Canonical emission: one field per line, values with embedded newlines as
/// continuation lines, exactly one blank line between records, final newline.
/// parse_fosf(emit_fosf(d), t) reproduces d field for field.
/// Throws Error(E_PRECONDITION) when d carries error-severity diagnostics.
std::string emit_fosf(const Document& doc);

/// Full marker audit: unknown markers warn, markers belonging to a different
/// template warn W_WRONG_TEMPLATE, duplicated non-repeatable markers within
/// a record are errors.
std::vector<Diagnostic> validate_markers(const Document& doc);

}  // namespace lingarc::fosf

#endif  // LINGARC_FOSF_HPP
