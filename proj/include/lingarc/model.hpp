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

#ifndef LINGARC_MODEL_HPP
#define LINGARC_MODEL_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lingarc/diagnostics.hpp"
#include "lingarc/fosf.hpp"

// Unified interlinear model: one ArchiveText of kind lexicon or primary_text
// holds annotated units; the lexicon and primary-text templates differ only
// in a handful of unit-level fields, so both live in the same structures with
// a kind discriminator. Template-1 metadata has its own record type.
namespace lingarc {

enum class TextKind { lexicon, primary_text };

std::string text_kind_name(TextKind k);

struct Speaker {
    std::string code;
    std::string name;
    bool operator==(const Speaker&) const = default;
};

struct MediaLink {
    std::string format;  // media type, e.g. "audio/mp3"
    std::string url;
    std::string comment;
    bool operator==(const MediaLink&) const = default;
};

struct SourceEntry {
    std::string citation;
    bool operator==(const SourceEntry&) const = default;
};

struct Analysis {
    std::string text;
    std::optional<std::string> analyst_code;
    bool operator==(const Analysis&) const = default;
};

/// The per-unit annotation tiers. flint_transcription is the only mandatory
/// tier; empty strings are normalized to absent on conversion.
struct AnnotationTiers {
    std::string flint_transcription;                        // \ft
    std::optional<std::string> transcription_comment;       // \ncft
    std::optional<std::string> recording_comment;           // \ncr
    std::optional<std::string> flint_gloss;                 // \fg
    std::optional<std::string> gloss_comment;               // \ncfg
    std::optional<std::string> free_translation;            // \fft
    std::optional<std::string> free_translation_comment;    // \ncfft
    std::vector<SourceEntry> other_sources;                 // \os (repeatable)
    std::optional<std::string> other_sources_comment;       // \ncos
    std::optional<Analysis> analysis;                       // \na (+\nac code)
    std::optional<std::string> analysis_comment;            // \ncna
    std::optional<std::string> morpheme_gloss;              // \ng
    std::optional<std::string> morpheme_gloss_comment;      // \ncng
    bool operator==(const AnnotationTiers&) const = default;
};

struct TextUnit {
    std::optional<double> offset_s;                  // seconds into the media
    std::optional<std::string> speaker_code;         // primary-text only
    std::optional<std::string> syn_sem_domain;       // lexicon only (\sd)
    std::optional<std::string> other_recordings;     // lexicon only (\or)
    // Free-form note holding lexicon-only data after lexical_as_interlinear;
    // never serialized.
    std::optional<std::string> extension_note;
    AnnotationTiers tiers;
    bool operator==(const TextUnit&) const = default;
};

/// Hierarchical archive identifier, rendered "box/doc" or "box/doc/subdoc".
struct DocumentNumber {
    int box = 0;
    int doc = 0;
    std::optional<int> subdoc;

    std::string str() const;
    static std::optional<DocumentNumber> parse(std::string_view text);

    auto operator<=>(const DocumentNumber&) const = default;
};

struct CalendarDate {
    int year = 0;
    std::optional<int> month;
    std::optional<int> day;
    bool operator==(const CalendarDate&) const = default;
};

/// Recording dates are 1950s-60s free text; kept verbatim with a best-effort
/// parsed companion.
struct DateField {
    std::string verbatim;
    std::optional<CalendarDate> parsed;
    bool operator==(const DateField&) const = default;

    static DateField from_text(std::string_view text);
};

struct MetadataRecord {
    DocumentNumber document_number;             // \dn
    std::vector<DocumentNumber> cross_refs;     // \cr (repeatable)
    std::string tape_log;                       // \fl
    std::string aiatsis_acquisition;            // \an
    std::string aiatsis_tape_ref;               // \cm
    std::string aiatsis_cdrom_ref;              // \cd
    std::string group_number;                   // \gp
    std::string language_name;                  // \lg
    std::string location;                       // \loc
    DateField date;                             // \da
    std::string observer;                       // \o
    std::vector<Speaker> speakers;              // \snc (repeatable)
    bool operator==(const MetadataRecord&) const = default;
};

struct ArchiveText {
    TextKind kind = TextKind::lexicon;
    std::vector<MediaLink> media;
    std::vector<Speaker> speakers;
    std::vector<TextUnit> units;
    std::optional<MetadataRecord> metadata;
    bool operator==(const ArchiveText&) const = default;
};

/// Result of converting a parsed FOSF document: lexicon/primary_text fills
/// `text`, the metadata template fills `metadata` (one record per FOSF
/// record, preserving source order).
struct FromFosf {
    std::optional<ArchiveText> text;
    std::vector<MetadataRecord> metadata;
    std::vector<Diagnostic> diagnostics;
};

/// Requires a document with no error diagnostics (Error(E_PRECONDITION)
/// otherwise). Unknown-marker fields do not reach the model; they warn.
FromFosf from_fosf(const fosf::Document& doc);

/// Canonical FOSF rendition: document header (\md, \spk), then one record
/// per unit with fields in template order. Inverse of from_fosf on its image.
fosf::Document to_fosf(const ArchiveText& text);
fosf::Document to_fosf(const MetadataRecord& m);
fosf::Document to_fosf(const std::vector<MetadataRecord>& records);

/// Reinterprets a lexicon unit as a primary-text unit: lexicon-only fields
/// move into extension_note, every other field is untouched.
TextUnit lexical_as_interlinear(const TextUnit& unit);

/// Checks every model invariant; empty result iff the text is valid.
std::vector<Diagnostic> validate(const ArchiveText& text);

/// Parses a \snc value: "Name (CODE)" or bare "Name" (code defaults to the
/// name's first character, the paper's convention).
Speaker parse_speaker_name_code(std::string_view value);

/// Trims ASCII whitespace at both ends.
std::string_view trim(std::string_view s);

}  // namespace lingarc

#endif  // LINGARC_MODEL_HPP
