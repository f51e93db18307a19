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

#ifndef LINGARC_DIAGNOSTICS_HPP
#define LINGARC_DIAGNOSTICS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lingarc {

enum class Severity { note, warning, error };

/// One finding about an input. `code` is drawn from the enumeration in
/// codes:: below (also listed in docs/formats.md); `line` is the 1-based
/// source line when known.
struct Diagnostic {
    Severity severity = Severity::warning;
    std::string code;
    std::string message;
    std::optional<int> line;

    bool operator==(const Diagnostic&) const = default;
};

/// Fatal condition: the operation could not produce a result at all.
/// Recoverable findings travel as Diagnostic lists instead.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message,
          std::optional<int> line = std::nullopt)
        : std::runtime_error(message), code_(std::move(code)), line_(line) {}

    const std::string& code() const { return code_; }
    std::optional<int> line() const { return line_; }

private:
    std::string code_;
    std::optional<int> line_;
};

namespace codes {
// Encoding / input shape
inline constexpr const char* E_ENCODING = "E_ENCODING";
inline constexpr const char* E_IO = "E_IO";
// FOSF structure
inline constexpr const char* E_NO_MARKER = "E_NO_MARKER";
inline constexpr const char* E_NO_HEAD = "E_NO_HEAD";
inline constexpr const char* E_DUP_MARKER = "E_DUP_MARKER";
inline constexpr const char* E_PRECONDITION = "E_PRECONDITION";
inline constexpr const char* W_UNKNOWN_MARKER = "W_UNKNOWN_MARKER";
inline constexpr const char* W_WRONG_TEMPLATE = "W_WRONG_TEMPLATE";
inline constexpr const char* W_PREAMBLE = "W_PREAMBLE";
// Model conversion / validation
inline constexpr const char* E_UNRESOLVED_SPEAKER = "E_UNRESOLVED_SPEAKER";
inline constexpr const char* E_BAD_DOCNUM = "E_BAD_DOCNUM";
inline constexpr const char* E_SELF_XREF = "E_SELF_XREF";
inline constexpr const char* E_DUP_SPEAKER = "E_DUP_SPEAKER";
inline constexpr const char* E_SPEAKER_CODE = "E_SPEAKER_CODE";
inline constexpr const char* E_KIND_SLOT = "E_KIND_SLOT";
inline constexpr const char* E_NO_TRANSCRIPTION = "E_NO_TRANSCRIPTION";
inline constexpr const char* E_OFFSET_ORDER = "E_OFFSET_ORDER";
inline constexpr const char* E_OFFSET_RANGE = "E_OFFSET_RANGE";
inline constexpr const char* E_MEDIA_URL = "E_MEDIA_URL";
inline constexpr const char* E_EMPTY_SOURCE = "E_EMPTY_SOURCE";
// XML
inline constexpr const char* E_MALFORMED = "E_MALFORMED";
inline constexpr const char* E_SCHEMA = "E_SCHEMA";
// Tabular import
inline constexpr const char* E_RAGGED = "E_RAGGED";
inline constexpr const char* E_BAD_OFFSET = "E_BAD_OFFSET";
inline constexpr const char* W_SHORT_ROW = "W_SHORT_ROW";
inline constexpr const char* W_UNMAPPED_COLUMN = "W_UNMAPPED_COLUMN";
inline constexpr const char* W_DUP_COLUMN = "W_DUP_COLUMN";
// Media
inline constexpr const char* E_POLICY = "E_POLICY";
inline constexpr const char* E_MANIFEST = "E_MANIFEST";
inline constexpr const char* E_MISSING_MEDIA = "E_MISSING_MEDIA";
inline constexpr const char* W_NO_DERIVATIVE = "W_NO_DERIVATIVE";
inline constexpr const char* W_EMPTY_SEGMENT = "W_EMPTY_SEGMENT";
inline constexpr const char* W_ORPHAN_OFFSETS = "W_ORPHAN_OFFSETS";
// Catalog
inline constexpr const char* E_DUP_DOCNUM = "E_DUP_DOCNUM";
inline constexpr const char* W_DANGLING_XREF = "W_DANGLING_XREF";
inline constexpr const char* N_ASYMMETRIC = "N_ASYMMETRIC";
// Rendering
inline constexpr const char* E_KIND = "E_KIND";
inline constexpr const char* W_IGNORED_OPTION = "W_IGNORED_OPTION";
}  // namespace codes

/// "NOTE" / "WARNING" / "ERROR".
std::string severity_name(Severity s);

/// Renders a diagnostic as the CLI line format "SEVERITY CODE line:N message"
/// (the "line:N" part is omitted when no line is known).
std::string format_diagnostic(const Diagnostic& d);

/// True if any entry has error severity.
bool has_errors(const std::vector<Diagnostic>& diags);

}  // namespace lingarc

#endif  // LINGARC_DIAGNOSTICS_HPP
