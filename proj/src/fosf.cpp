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

#include "lingarc/fosf.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "lingarc/encoding.hpp"

namespace lingarc::fosf {

namespace {

const std::set<std::string, std::less<>> kMetadataMarkers = {
    "dn", "cr", "fl", "an", "cm", "cd", "gp", "lg", "loc", "da", "o", "snc"};

const std::set<std::string, std::less<>> kLexiconMarkers = {
    "ft", "or", "ncr", "sd", "ncft", "fg", "ncfg", "fft", "ncfft",
    "os", "ncos", "na", "ncna", "ng", "ncng"};

const std::set<std::string, std::less<>> kPrimaryTextMarkers = {
    "sp", "ft", "fg", "ncr", "ncft", "ncfg", "fft", "ncfft",
    "os", "ncos", "na", "ncna", "ng", "ncng"};

// Toolkit markers carrying data the templates have no column for: media
// links, speaker declarations, unit time offsets and analyst codes.
const std::set<std::string, std::less<>> kExtensionMarkers = {"md", "spk",
                                                              "off", "nac"};

// Document-header extensions allowed in front of the first record head.
const std::set<std::string, std::less<>> kHeaderMarkers = {"md", "spk"};

const std::set<std::string, std::less<>> kRepeatableMarkers = {
    "snc", "os", "ncos", "or", "cr", "md", "spk"};

const std::set<std::string, std::less<>>& table_for(TemplateKind t) {
    switch (t) {
        case TemplateKind::metadata: return kMetadataMarkers;
        case TemplateKind::lexicon: return kLexiconMarkers;
        case TemplateKind::primary_text: return kPrimaryTextMarkers;
    }
    return kLexiconMarkers;
}

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t") == std::string_view::npos;
}

MarkerClass classify(std::string_view marker, TemplateKind t) {
    if (table_for(t).count(marker)) return MarkerClass::known;
    if (t != TemplateKind::metadata && kExtensionMarkers.count(marker))
        return MarkerClass::extension;
    return MarkerClass::unknown;
}

void add(std::vector<Diagnostic>* diags, Severity sev, const char* code,
         std::string message, std::optional<int> line = std::nullopt) {
    if (diags) diags->push_back({sev, code, std::move(message), line});
}

}  // namespace

std::string template_name(TemplateKind t) {
    switch (t) {
        case TemplateKind::metadata: return "metadata";
        case TemplateKind::lexicon: return "lexicon";
        case TemplateKind::primary_text: return "primary_text";
    }
    return "lexicon";
}

bool is_template_marker(std::string_view marker, TemplateKind t) {
    return table_for(t).count(marker) > 0;
}

bool is_extension_marker(std::string_view marker) {
    return kExtensionMarkers.count(marker) > 0;
}

bool is_repeatable_marker(std::string_view marker) {
    return kRepeatableMarkers.count(marker) > 0;
}

std::string head_marker(TemplateKind t, const std::vector<RawField>& fields) {
    switch (t) {
        case TemplateKind::metadata: return "dn";
        case TemplateKind::lexicon: return "ft";
        case TemplateKind::primary_text:
            for (const auto& f : fields)
                if (f.marker == "sp") return "sp";
            return "ft";
    }
    return "ft";
}

Document parse_fosf(std::string_view input, TemplateKind t) {
    require_utf8(input);

    Document doc;
    doc.template_kind = t;
    std::vector<RawField> fields;
    bool reported_no_marker = false;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos < input.size()) {
        std::size_t eol = input.find('\n', pos);
        std::string_view line = (eol == std::string_view::npos)
                                    ? input.substr(pos)
                                    : input.substr(pos, eol - pos);
        pos = (eol == std::string_view::npos) ? input.size() : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        if (is_blank(line)) continue;

        if (line.front() == '\\') {
            std::string_view rest = line.substr(1);
            const std::size_t sp = rest.find(' ');
            RawField f;
            f.marker = std::string(rest.substr(0, sp));
            f.value = (sp == std::string_view::npos)
                          ? std::string()
                          : std::string(rest.substr(sp + 1));
            f.line = line_no;
            f.klass = classify(f.marker, t);
            if (f.klass == MarkerClass::unknown) {
                add(&doc.diagnostics, Severity::warning,
                    codes::W_UNKNOWN_MARKER,
                    "unknown marker \"\\" + f.marker + "\" in " +
                        template_name(t) + " template",
                    line_no);
            }
            fields.push_back(std::move(f));
        } else if (fields.empty()) {
            if (!reported_no_marker) {
                add(&doc.diagnostics, Severity::error, codes::E_NO_MARKER,
                    "content before the first marker line", line_no);
                reported_no_marker = true;
            }
        } else {
            auto& value = fields.back().value;
            if (value.empty())
                value = std::string(line);
            else
                value += " " + std::string(line);
        }
    }

    doc.records = infer_record_boundaries(std::move(fields), t,
                                          &doc.diagnostics);
    return doc;
}

std::vector<RawRecord> infer_record_boundaries(
    std::vector<RawField> fields, TemplateKind t,
    std::vector<Diagnostic>* diags) {
    std::vector<RawRecord> records;
    if (fields.empty()) return records;

    const std::string head = head_marker(t, fields);
    const bool any_head = std::any_of(
        fields.begin(), fields.end(),
        [&](const RawField& f) { return f.marker == head; });

    if (!any_head) {
        add(diags, Severity::error, codes::E_NO_HEAD,
            "no record-head marker \"\\" + head + "\" in document",
            fields.front().line);
        RawRecord all;
        all.preamble = true;
        all.fields = std::move(fields);
        records.push_back(std::move(all));
        return records;
    }

    std::size_t i = 0;
    RawRecord preamble;
    preamble.preamble = true;
    while (i < fields.size() && fields[i].marker != head) {
        const auto& f = fields[i];
        const bool header_field =
            t != TemplateKind::metadata && kHeaderMarkers.count(f.marker) > 0;
        if (!header_field) {
            add(diags, Severity::warning, codes::W_PREAMBLE,
                "field \"\\" + f.marker +
                    "\" before the first record-head marker",
                f.line);
        }
        preamble.fields.push_back(std::move(fields[i]));
        ++i;
    }
    if (!preamble.fields.empty()) records.push_back(std::move(preamble));

    RawRecord current;
    for (; i < fields.size(); ++i) {
        if (fields[i].marker == head && !current.fields.empty()) {
            records.push_back(std::move(current));
            current = RawRecord{};
        }
        current.fields.push_back(std::move(fields[i]));
    }
    if (!current.fields.empty()) records.push_back(std::move(current));
    return records;
}

std::string emit_fosf(const Document& doc) {
    if (has_errors(doc.diagnostics)) {
        throw Error(codes::E_PRECONDITION,
                    "cannot emit a document with error diagnostics");
    }
    std::string out;
    bool first_record = true;
    for (const auto& rec : doc.records) {
        if (!first_record) out += "\n";
        first_record = false;
        for (const auto& f : rec.fields) {
            out += "\\" + f.marker;
            std::string_view v = f.value;
            std::size_t nl = v.find('\n');
            std::string_view first = v.substr(0, nl);
            if (!first.empty()) out += " " + std::string(first);
            out += "\n";
            while (nl != std::string_view::npos) {
                v.remove_prefix(nl + 1);
                nl = v.find('\n');
                out += std::string(v.substr(0, nl)) + "\n";
            }
        }
    }
    return out;
}

std::vector<Diagnostic> validate_markers(const Document& doc) {
    std::vector<Diagnostic> diags;
    for (const auto& rec : doc.records) {
        std::map<std::string, int> seen;
        for (const auto& f : rec.fields) {
            MarkerClass klass = classify(f.marker, doc.template_kind);
            if (klass == MarkerClass::unknown) {
                bool elsewhere = false;
                for (TemplateKind other :
                     {TemplateKind::metadata, TemplateKind::lexicon,
                      TemplateKind::primary_text}) {
                    if (other != doc.template_kind &&
                        is_template_marker(f.marker, other)) {
                        elsewhere = true;
                        break;
                    }
                }
                if (!elsewhere && doc.template_kind == TemplateKind::metadata &&
                    is_extension_marker(f.marker)) {
                    elsewhere = true;
                }
                if (elsewhere) {
                    add(&diags, Severity::warning, codes::W_WRONG_TEMPLATE,
                        "marker \"\\" + f.marker + "\" is not valid in the " +
                            template_name(doc.template_kind) + " template",
                        f.line);
                } else {
                    add(&diags, Severity::warning, codes::W_UNKNOWN_MARKER,
                        "unknown marker \"\\" + f.marker + "\"", f.line);
                }
                continue;
            }
            if (!is_repeatable_marker(f.marker) && ++seen[f.marker] == 2) {
                add(&diags, Severity::error, codes::E_DUP_MARKER,
                    "marker \"\\" + f.marker +
                        "\" repeated within one record",
                    f.line);
            }
        }
    }
    return diags;
}

}  // namespace lingarc::fosf
