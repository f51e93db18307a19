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

#include "lingarc/model.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <map>
#include <set>

namespace lingarc {

namespace {

void add(std::vector<Diagnostic>& diags, Severity sev, const char* code,
         std::string message, std::optional<int> line = std::nullopt) {
    diags.push_back({sev, code, std::move(message), line});
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
    });
}

std::optional<int> parse_positive_int(std::string_view s) {
    if (!all_digits(s) || s.size() > 9) return std::nullopt;
    int v = 0;
    std::from_chars(s.data(), s.data() + s.size(), v);
    if (v <= 0) return std::nullopt;
    return v;
}

/// Plain non-negative decimal: digits with at most one dot, no exponent.
std::optional<double> parse_offset_value(std::string_view s) {
    s = trim(s);
    if (s.empty()) return std::nullopt;
    int dots = 0;
    int digits = 0;
    for (char c : s) {
        if (c == '.') {
            if (++dots > 1) return std::nullopt;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            ++digits;
        } else {
            return std::nullopt;
        }
    }
    if (digits == 0) return std::nullopt;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

std::string format_offset(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

void set_first(std::optional<std::string>& slot, std::string_view value) {
    if (!slot) slot = std::string(value);
}

// Repeated \or / \ncos values share one model slot; they are newline-joined
// (FOSF values never contain newlines, so the join splits back exactly).
void append_joined(std::optional<std::string>& slot, std::string_view value) {
    if (!slot)
        slot = std::string(value);
    else
        *slot += "\n" + std::string(value);
}

std::string first_utf8_char(std::string_view s) {
    if (s.empty()) return "";
    std::size_t len = 1;
    const auto b = static_cast<unsigned char>(s[0]);
    if ((b & 0xE0) == 0xC0) len = 2;
    else if ((b & 0xF0) == 0xE0) len = 3;
    else if ((b & 0xF8) == 0xF0) len = 4;
    return std::string(s.substr(0, std::min(len, s.size())));
}

const std::array<const char*, 12> kMonths = {
    "january", "february", "march",     "april",   "may",      "june",
    "july",    "august",   "september", "october", "november", "december"};

std::optional<int> month_from_name(std::string_view word) {
    std::string lower;
    for (char c : word)
        lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower.size() < 3) return std::nullopt;
    for (std::size_t i = 0; i < kMonths.size(); ++i) {
        std::string_view full = kMonths[i];
        if (lower == full || (lower.size() == 3 && full.substr(0, 3) == lower))
            return static_cast<int>(i + 1);
    }
    return std::nullopt;
}

bool plausible(const CalendarDate& d) {
    if (d.year < 1000 || d.year > 2999) return false;
    if (d.month && (*d.month < 1 || *d.month > 12)) return false;
    if (d.day && (*d.day < 1 || *d.day > 31)) return false;
    return true;
}

std::vector<std::string> split_words(std::string_view s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ' ' || c == '\t' || c == ',') {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

void split_value(std::string_view value, char sep,
                 std::vector<std::string_view>& out) {
    out.clear();
    std::size_t pos = 0;
    while (true) {
        std::size_t next = value.find(sep, pos);
        out.push_back(value.substr(pos, next - pos));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
}

}  // namespace

std::string text_kind_name(TextKind k) {
    return k == TextKind::lexicon ? "lexicon" : "primary_text";
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                          s.front() == '\r' || s.front() == '\n'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                          s.back() == '\r' || s.back() == '\n'))
        s.remove_suffix(1);
    return s;
}

std::string DocumentNumber::str() const {
    std::string out = std::to_string(box) + "/" + std::to_string(doc);
    if (subdoc) out += "/" + std::to_string(*subdoc);
    return out;
}

std::optional<DocumentNumber> DocumentNumber::parse(std::string_view text) {
    text = trim(text);
    std::vector<std::string_view> parts;
    split_value(text, '/', parts);
    if (parts.size() < 2 || parts.size() > 3) return std::nullopt;
    DocumentNumber dn;
    auto box = parse_positive_int(trim(parts[0]));
    auto doc = parse_positive_int(trim(parts[1]));
    if (!box || !doc) return std::nullopt;
    dn.box = *box;
    dn.doc = *doc;
    if (parts.size() == 3) {
        auto sub = parse_positive_int(trim(parts[2]));
        if (!sub) return std::nullopt;
        dn.subdoc = *sub;
    }
    return dn;
}

DateField DateField::from_text(std::string_view text) {
    DateField out;
    out.verbatim = std::string(trim(text));
    std::string_view v = out.verbatim;
    if (v.empty()) return out;

    // ISO-ish: YYYY[-MM[-DD]]
    {
        std::vector<std::string_view> parts;
        split_value(v, '-', parts);
        if (parts.size() >= 1 && parts.size() <= 3 &&
            trim(parts[0]).size() == 4 && all_digits(trim(parts[0]))) {
            CalendarDate d;
            bool ok = true;
            d.year = *parse_positive_int(trim(parts[0]));
            if (parts.size() >= 2) {
                auto m = parse_positive_int(trim(parts[1]));
                if (m) d.month = *m; else ok = false;
            }
            if (ok && parts.size() == 3) {
                auto dd = parse_positive_int(trim(parts[2]));
                if (dd) d.day = *dd; else ok = false;
            }
            if (ok && plausible(d)) {
                out.parsed = d;
                return out;
            }
        }
    }
    // D/M/YYYY or D.M.YYYY
    for (char sep : {'/', '.'}) {
        std::vector<std::string_view> parts;
        split_value(v, sep, parts);
        if (parts.size() == 3 && trim(parts[2]).size() == 4) {
            auto day = parse_positive_int(trim(parts[0]));
            auto month = parse_positive_int(trim(parts[1]));
            auto year = parse_positive_int(trim(parts[2]));
            if (day && month && year) {
                CalendarDate d{*year, *month, *day};
                if (plausible(d)) {
                    out.parsed = d;
                    return out;
                }
            }
        }
    }
    // "21 March 1964", "March 1964", "1964"
    {
        auto words = split_words(v);
        std::optional<int> day, month, year;
        bool extra = false;
        for (const auto& w : words) {
            if (auto m = month_from_name(w)) {
                if (month) extra = true;
                month = m;
            } else if (all_digits(w) && w.size() == 4) {
                if (year) extra = true;
                year = parse_positive_int(w);
            } else if (all_digits(w) && w.size() <= 2) {
                if (day) extra = true;
                day = parse_positive_int(w);
            } else {
                extra = true;
            }
        }
        if (year && !extra) {
            CalendarDate d;
            d.year = *year;
            d.month = month;
            d.day = month ? day : std::nullopt;
            if (plausible(d)) out.parsed = d;
        }
    }
    return out;
}

Speaker parse_speaker_name_code(std::string_view value) {
    value = trim(value);
    Speaker s;
    if (!value.empty() && value.back() == ')') {
        const std::size_t open = value.rfind('(');
        if (open != std::string_view::npos) {
            std::string_view code =
                trim(value.substr(open + 1, value.size() - open - 2));
            if (!code.empty()) {
                s.code = std::string(code);
                s.name = std::string(trim(value.substr(0, open)));
                return s;
            }
        }
    }
    s.name = std::string(value);
    s.code = first_utf8_char(s.name);
    return s;
}

namespace {

MetadataRecord metadata_from_record(const fosf::RawRecord& rec,
                                    std::vector<Diagnostic>& diags,
                                    bool& ok) {
    MetadataRecord m;
    ok = false;
    bool have_dn = false;
    for (const auto& f : rec.fields) {
        const std::string value(trim(f.value));
        if (value.empty()) continue;
        if (f.marker == "dn") {
            if (have_dn) continue;
            auto dn = DocumentNumber::parse(value);
            if (!dn) {
                add(diags, Severity::error, codes::E_BAD_DOCNUM,
                    "cannot parse document number \"" + value + "\"", f.line);
                return m;
            }
            m.document_number = *dn;
            have_dn = true;
        } else if (f.marker == "cr") {
            auto dn = DocumentNumber::parse(value);
            if (!dn) {
                add(diags, Severity::error, codes::E_BAD_DOCNUM,
                    "cannot parse cross-reference \"" + value + "\"", f.line);
                continue;
            }
            m.cross_refs.push_back(*dn);
        } else if (f.marker == "fl") {
            if (m.tape_log.empty()) m.tape_log = value;
        } else if (f.marker == "an") {
            if (m.aiatsis_acquisition.empty()) m.aiatsis_acquisition = value;
        } else if (f.marker == "cm") {
            if (m.aiatsis_tape_ref.empty()) m.aiatsis_tape_ref = value;
        } else if (f.marker == "cd") {
            if (m.aiatsis_cdrom_ref.empty()) m.aiatsis_cdrom_ref = value;
        } else if (f.marker == "gp") {
            if (m.group_number.empty()) m.group_number = value;
        } else if (f.marker == "lg") {
            if (m.language_name.empty()) m.language_name = value;
        } else if (f.marker == "loc") {
            if (m.location.empty()) m.location = value;
        } else if (f.marker == "da") {
            if (m.date.verbatim.empty()) m.date = DateField::from_text(value);
        } else if (f.marker == "o") {
            if (m.observer.empty()) m.observer = value;
        } else if (f.marker == "snc") {
            m.speakers.push_back(parse_speaker_name_code(value));
        }
        // Unknown markers were already flagged when the document was parsed.
    }
    if (!have_dn) {
        add(diags, Severity::error, codes::E_BAD_DOCNUM,
            "metadata record without a document number",
            rec.fields.empty() ? std::optional<int>{}
                               : std::optional<int>{rec.fields.front().line});
        return m;
    }
    // Self-references are dropped to uphold the cross_refs invariant.
    auto self = std::remove(m.cross_refs.begin(), m.cross_refs.end(),
                            m.document_number);
    if (self != m.cross_refs.end()) {
        add(diags, Severity::error, codes::E_SELF_XREF,
            "record " + m.document_number.str() + " cross-references itself");
        m.cross_refs.erase(self, m.cross_refs.end());
    }
    ok = true;
    return m;
}

ArchiveText text_from_document(const fosf::Document& doc,
                               std::vector<Diagnostic>& diags) {
    ArchiveText text;
    text.kind = doc.template_kind == fosf::TemplateKind::lexicon
                    ? TextKind::lexicon
                    : TextKind::primary_text;

    std::set<std::string> declared;
    std::set<std::string> auto_declared;

    // Media and speaker declarations are document-level wherever they appear.
    for (const auto& rec : doc.records) {
        for (const auto& f : rec.fields) {
            const std::string value(trim(f.value));
            if (f.marker == "md") {
                if (value.empty()) continue;
                // "<format> <url> [comment...]"
                std::string_view v = value;
                const std::size_t p1 = v.find(' ');
                if (p1 == std::string_view::npos) {
                    add(diags, Severity::error, codes::E_MEDIA_URL,
                        "\\md needs \"<format> <url> [comment]\"", f.line);
                    continue;
                }
                MediaLink link;
                link.format = std::string(v.substr(0, p1));
                std::string_view rest = trim(v.substr(p1 + 1));
                const std::size_t p2 = rest.find(' ');
                link.url = std::string(rest.substr(0, p2));
                if (p2 != std::string_view::npos)
                    link.comment = std::string(trim(rest.substr(p2 + 1)));
                text.media.push_back(std::move(link));
            } else if (f.marker == "spk") {
                if (value.empty()) continue;
                Speaker s;
                const std::size_t sp = value.find(' ');
                s.code = value.substr(0, sp);
                if (sp != std::string::npos)
                    s.name = std::string(trim(value.substr(sp + 1)));
                if (declared.insert(s.code).second)
                    text.speakers.push_back(std::move(s));
            }
        }
    }

    for (const auto& rec : doc.records) {
        if (rec.preamble) continue;
        TextUnit unit;
        auto& t = unit.tiers;
        for (const auto& f : rec.fields) {
            const std::string value(trim(f.value));
            if (value.empty()) continue;
            if (f.marker == "ft") {
                if (t.flint_transcription.empty())
                    t.flint_transcription = value;
            } else if (f.marker == "ncft") {
                set_first(t.transcription_comment, value);
            } else if (f.marker == "ncr") {
                set_first(t.recording_comment, value);
            } else if (f.marker == "fg") {
                set_first(t.flint_gloss, value);
            } else if (f.marker == "ncfg") {
                set_first(t.gloss_comment, value);
            } else if (f.marker == "fft") {
                set_first(t.free_translation, value);
            } else if (f.marker == "ncfft") {
                set_first(t.free_translation_comment, value);
            } else if (f.marker == "os") {
                t.other_sources.push_back({value});
            } else if (f.marker == "ncos") {
                append_joined(t.other_sources_comment, value);
            } else if (f.marker == "na") {
                if (!t.analysis)
                    t.analysis = Analysis{value, std::nullopt};
                else if (t.analysis->text.empty())
                    t.analysis->text = value;
            } else if (f.marker == "nac") {
                if (!t.analysis) t.analysis = Analysis{"", std::nullopt};
                if (!t.analysis->analyst_code) t.analysis->analyst_code = value;
            } else if (f.marker == "ncna") {
                set_first(t.analysis_comment, value);
            } else if (f.marker == "ng") {
                set_first(t.morpheme_gloss, value);
            } else if (f.marker == "ncng") {
                set_first(t.morpheme_gloss_comment, value);
            } else if (f.marker == "sd" &&
                       doc.template_kind == fosf::TemplateKind::lexicon) {
                set_first(unit.syn_sem_domain, value);
            } else if (f.marker == "or" &&
                       doc.template_kind == fosf::TemplateKind::lexicon) {
                append_joined(unit.other_recordings, value);
            } else if (f.marker == "sp" &&
                       doc.template_kind == fosf::TemplateKind::primary_text) {
                if (!unit.speaker_code) {
                    unit.speaker_code = value;
                    if (!declared.count(value) &&
                        auto_declared.insert(value).second) {
                        add(diags, Severity::warning,
                            codes::E_UNRESOLVED_SPEAKER,
                            "speaker code \"" + value +
                                "\" has no declaration; declared with an "
                                "empty name",
                            f.line);
                        text.speakers.push_back({value, ""});
                    }
                }
            } else if (f.marker == "off") {
                auto off = parse_offset_value(value);
                if (!off) {
                    add(diags, Severity::error, codes::E_BAD_OFFSET,
                        "offset \"" + value +
                            "\" is not a non-negative decimal",
                        f.line);
                    continue;
                }
                if (!unit.offset_s) unit.offset_s = *off;
            }
        }
        text.units.push_back(std::move(unit));
    }
    return text;
}

}  // namespace

FromFosf from_fosf(const fosf::Document& doc) {
    if (has_errors(doc.diagnostics)) {
        throw Error(codes::E_PRECONDITION,
                    "document carries error diagnostics");
    }
    FromFosf out;
    if (doc.template_kind == fosf::TemplateKind::metadata) {
        for (const auto& rec : doc.records) {
            if (rec.preamble) continue;
            bool ok = false;
            MetadataRecord m = metadata_from_record(rec, out.diagnostics, ok);
            if (ok) out.metadata.push_back(std::move(m));
        }
    } else {
        out.text = text_from_document(doc, out.diagnostics);
    }
    return out;
}

namespace {

void push_field(fosf::RawRecord& rec, const char* marker,
                std::string_view value) {
    if (trim(value).empty()) return;
    fosf::RawField f;
    f.marker = marker;
    f.value = std::string(value);
    f.klass = fosf::MarkerClass::known;
    rec.fields.push_back(std::move(f));
}

// Slots backed by repeatable markers re-split on the newlines that
// from_fosf joined with.
void push_split(fosf::RawRecord& rec, const char* marker,
                const std::optional<std::string>& value) {
    if (!value) return;
    std::vector<std::string_view> parts;
    split_value(*value, '\n', parts);
    for (auto part : parts) push_field(rec, marker, part);
}

}  // namespace

fosf::Document to_fosf(const ArchiveText& text) {
    fosf::Document doc;
    doc.template_kind = text.kind == TextKind::lexicon
                            ? fosf::TemplateKind::lexicon
                            : fosf::TemplateKind::primary_text;

    fosf::RawRecord header;
    header.preamble = true;
    for (const auto& m : text.media) {
        std::string v = m.format + " " + m.url;
        if (!m.comment.empty()) v += " " + m.comment;
        push_field(header, "md", v);
    }
    for (const auto& s : text.speakers) {
        std::string v = s.code;
        if (!s.name.empty()) v += " " + s.name;
        push_field(header, "spk", v);
    }
    if (!header.fields.empty()) doc.records.push_back(std::move(header));

    // When any unit carries a speaker code the record head is \sp, so every
    // record must open with one (possibly empty) to keep boundaries intact.
    const bool use_sp =
        text.kind == TextKind::primary_text &&
        std::any_of(text.units.begin(), text.units.end(),
                    [](const TextUnit& u) { return u.speaker_code.has_value(); });

    for (const auto& u : text.units) {
        fosf::RawRecord rec;
        if (use_sp) {
            fosf::RawField f;
            f.marker = "sp";
            f.value = u.speaker_code.value_or("");
            f.klass = fosf::MarkerClass::known;
            rec.fields.push_back(std::move(f));
        }
        const auto& t = u.tiers;
        push_field(rec, "ft", t.flint_transcription);
        if (u.offset_s) push_field(rec, "off", format_offset(*u.offset_s));
        if (text.kind == TextKind::lexicon) {
            push_split(rec, "or", u.other_recordings);
            push_split(rec, "ncr", t.recording_comment);
            push_split(rec, "sd", u.syn_sem_domain);
            push_split(rec, "ncft", t.transcription_comment);
            push_split(rec, "fg", t.flint_gloss);
        } else {
            push_split(rec, "fg", t.flint_gloss);
            push_split(rec, "ncr", t.recording_comment);
            push_split(rec, "ncft", t.transcription_comment);
        }
        push_split(rec, "ncfg", t.gloss_comment);
        push_split(rec, "fft", t.free_translation);
        push_split(rec, "ncfft", t.free_translation_comment);
        for (const auto& src : t.other_sources)
            push_field(rec, "os", src.citation);
        push_split(rec, "ncos", t.other_sources_comment);
        if (t.analysis) {
            push_field(rec, "na", t.analysis->text);
            if (t.analysis->analyst_code)
                push_field(rec, "nac", *t.analysis->analyst_code);
        }
        push_split(rec, "ncna", t.analysis_comment);
        push_split(rec, "ng", t.morpheme_gloss);
        push_split(rec, "ncng", t.morpheme_gloss_comment);
        doc.records.push_back(std::move(rec));
    }
    return doc;
}

fosf::Document to_fosf(const MetadataRecord& m) {
    return to_fosf(std::vector<MetadataRecord>{m});
}

fosf::Document to_fosf(const std::vector<MetadataRecord>& records) {
    fosf::Document doc;
    doc.template_kind = fosf::TemplateKind::metadata;
    for (const auto& m : records) {
        fosf::RawRecord rec;
        push_field(rec, "dn", m.document_number.str());
        for (const auto& cr : m.cross_refs) push_field(rec, "cr", cr.str());
        push_field(rec, "fl", m.tape_log);
        push_field(rec, "an", m.aiatsis_acquisition);
        push_field(rec, "cm", m.aiatsis_tape_ref);
        push_field(rec, "cd", m.aiatsis_cdrom_ref);
        push_field(rec, "gp", m.group_number);
        push_field(rec, "lg", m.language_name);
        push_field(rec, "loc", m.location);
        push_field(rec, "da", m.date.verbatim);
        push_field(rec, "o", m.observer);
        for (const auto& s : m.speakers) {
            std::string v = s.name.empty() ? "(" + s.code + ")"
                                           : s.name + " (" + s.code + ")";
            push_field(rec, "snc", v);
        }
        doc.records.push_back(std::move(rec));
    }
    return doc;
}

TextUnit lexical_as_interlinear(const TextUnit& unit) {
    TextUnit out = unit;
    std::string note;
    if (out.syn_sem_domain) {
        note += "sd=" + *out.syn_sem_domain;
        out.syn_sem_domain.reset();
    }
    if (out.other_recordings) {
        if (!note.empty()) note += "; ";
        note += "or=" + *out.other_recordings;
        out.other_recordings.reset();
    }
    if (!note.empty()) {
        if (out.extension_note)
            *out.extension_note += "; " + note;
        else
            out.extension_note = note;
    }
    return out;
}

std::vector<Diagnostic> validate(const ArchiveText& text) {
    std::vector<Diagnostic> diags;

    std::set<std::string> codes_seen;
    for (const auto& s : text.speakers) {
        if (s.code.empty()) {
            add(diags, Severity::error, codes::E_SPEAKER_CODE,
                "speaker \"" + s.name + "\" has an empty code");
            continue;
        }
        if (!codes_seen.insert(s.code).second) {
            add(diags, Severity::error, codes::E_DUP_SPEAKER,
                "speaker code \"" + s.code + "\" declared more than once");
        }
    }

    for (const auto& m : text.media) {
        if (!m.format.empty() && m.url.empty()) {
            add(diags, Severity::error, codes::E_MEDIA_URL,
                "media link with format \"" + m.format + "\" has no url");
        }
    }

    std::optional<double> prev_offset;
    for (std::size_t i = 0; i < text.units.size(); ++i) {
        const TextUnit& u = text.units[i];
        const std::string where = "unit " + std::to_string(i);
        if (u.tiers.flint_transcription.empty()) {
            add(diags, Severity::error, codes::E_NO_TRANSCRIPTION,
                where + " has no transcription");
        }
        if (u.speaker_code) {
            if (text.kind == TextKind::lexicon) {
                add(diags, Severity::error, codes::E_KIND_SLOT,
                    where + " carries a speaker code in a lexicon text");
            } else if (!codes_seen.count(*u.speaker_code)) {
                add(diags, Severity::error, codes::E_UNRESOLVED_SPEAKER,
                    where + " names undeclared speaker \"" + *u.speaker_code +
                        "\"");
            }
        }
        if (text.kind == TextKind::primary_text) {
            if (u.syn_sem_domain) {
                add(diags, Severity::error, codes::E_KIND_SLOT,
                    where + " carries a semantic domain in a primary text");
            }
            if (u.other_recordings) {
                add(diags, Severity::error, codes::E_KIND_SLOT,
                    where + " carries other-recordings in a primary text");
            }
        }
        if (u.offset_s) {
            if (*u.offset_s < 0) {
                add(diags, Severity::error, codes::E_OFFSET_RANGE,
                    where + " has a negative offset");
            } else if (prev_offset && *u.offset_s < *prev_offset) {
                add(diags, Severity::error, codes::E_OFFSET_ORDER,
                    where + " offset decreases from " +
                        format_offset(*prev_offset) + " to " +
                        format_offset(*u.offset_s));
            }
            prev_offset = u.offset_s;
        }
        for (const auto& src : u.tiers.other_sources) {
            if (trim(src.citation).empty()) {
                add(diags, Severity::error, codes::E_EMPTY_SOURCE,
                    where + " has an empty source citation");
            }
        }
    }

    if (text.metadata) {
        const auto& m = *text.metadata;
        if (m.document_number.box <= 0 || m.document_number.doc <= 0 ||
            (m.document_number.subdoc && *m.document_number.subdoc <= 0)) {
            add(diags, Severity::error, codes::E_BAD_DOCNUM,
                "metadata document number is not positive");
        }
        for (const auto& cr : m.cross_refs) {
            if (cr == m.document_number) {
                add(diags, Severity::error, codes::E_SELF_XREF,
                    "metadata cross-references itself");
            }
        }
    }
    return diags;
}

}  // namespace lingarc
