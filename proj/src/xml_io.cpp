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

#include "lingarc/xml_io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <set>

#include "xml_dom.hpp"

namespace lingarc::xml {

namespace {

using xmldom::escape_attr;
using xmldom::escape_text;
using xmldom::Node;

constexpr std::array<const char*, 14> kLexiconTiers = {
    "flint_transcription",
    "flint_transcription_comment",
    "other_recordings",
    "recording_comment",
    "flint_gloss",
    "flint_gloss_comment",
    "flint_free_translation",
    "flint_free_translation_comment",
    "other_sources",
    "other_sources_comment",
    "analysis",
    "analysis_comment",
    "gloss",
    "gloss_comment",
};

constexpr std::array<const char*, 13> kPrimaryTextTiers = {
    "flint_transcription",
    "flint_transcription_comment",
    "recording_comment",
    "flint_gloss",
    "flint_gloss_comment",
    "flint_free_translation",
    "flint_free_translation_comment",
    "other_sources",
    "other_sources_comment",
    "analysis",
    "analysis_comment",
    "gloss",
    "gloss_comment",
};

std::string format_offset(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::optional<double> parse_offset_attr(std::string_view s) {
    if (s.empty()) return std::nullopt;
    int dots = 0, digits = 0;
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
    std::from_chars(s.data(), s.data() + s.size(), v);
    return v;
}

void element(std::string& out, std::string_view name, std::string_view body) {
    if (body.empty()) {
        out += "<" + std::string(name) + "/>\n";
    } else {
        out += "<" + std::string(name) + ">" + escape_text(body) + "</" +
               std::string(name) + ">\n";
    }
}

struct SchemaSink {
    std::vector<Diagnostic>* diags = nullptr;  // collect mode when set

    void schema_error(const std::string& message, int line) {
        if (diags) {
            diags->push_back(
                {Severity::error, codes::E_SCHEMA, message, line});
        } else {
            throw Error(codes::E_SCHEMA, message, line);
        }
    }
};

bool is_ws_only(std::string_view s) {
    return s.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

// ---------------------------------------------------------------------------
// Interlinear grammar walk (builds the model while checking).

void check_no_children(SchemaSink& sink, const Node& n) {
    if (!n.children.empty()) {
        sink.schema_error("element <" + n.name + "> cannot contain <" +
                              n.children.front().name + ">",
                          n.children.front().line);
    }
}

void check_attrs(SchemaSink& sink, const Node& n,
                 const std::set<std::string>& allowed) {
    for (const auto& [k, v] : n.attrs) {
        (void)v;
        if (!allowed.count(k)) {
            sink.schema_error(
                "unexpected attribute \"" + k + "\" on <" + n.name + ">",
                n.line);
        }
    }
}

std::optional<std::string> leaf_value(const Node& n) {
    if (n.text.empty()) return std::nullopt;
    return n.text;
}

TextUnit read_unit(SchemaSink& sink, const Node& n, TextKind kind) {
    TextUnit unit;
    const bool lexicon = kind == TextKind::lexicon;
    check_attrs(sink, n,
                lexicon
                    ? std::set<std::string>{"offset", "syn_sem_domain_code"}
                    : std::set<std::string>{"offset", "speaker_code"});
    if (const auto* off = n.attr("offset")) {
        auto v = parse_offset_attr(*off);
        if (!v) {
            sink.schema_error(
                "offset \"" + *off + "\" is not a non-negative decimal",
                n.line);
        } else {
            unit.offset_s = v;
        }
    }
    if (lexicon) {
        if (const auto* sd = n.attr("syn_sem_domain_code"); sd && !sd->empty())
            unit.syn_sem_domain = *sd;
    } else {
        if (const auto* sp = n.attr("speaker_code"); sp && !sp->empty())
            unit.speaker_code = *sp;
    }
    if (!is_ws_only(n.text)) {
        sink.schema_error("stray text inside <" + n.name + ">", n.line);
    }

    const auto& expected = lexicon
                               ? std::vector<std::string>(kLexiconTiers.begin(),
                                                          kLexiconTiers.end())
                               : std::vector<std::string>(
                                     kPrimaryTextTiers.begin(),
                                     kPrimaryTextTiers.end());
    if (n.children.size() != expected.size()) {
        // Find what is missing or extra for a useful message.
        std::size_t i = 0;
        for (; i < std::min(n.children.size(), expected.size()); ++i) {
            if (n.children[i].name != expected[i]) break;
        }
        if (i < expected.size() &&
            (i >= n.children.size() || n.children[i].name != expected[i])) {
            sink.schema_error("<" + n.name + "> is missing <" + expected[i] +
                                  "> (or has it out of order)",
                              n.line);
        } else {
            sink.schema_error("<" + n.name + "> has unexpected extra children",
                              n.line);
        }
        return unit;
    }
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (n.children[i].name != expected[i]) {
            sink.schema_error("expected <" + expected[i] + "> but found <" +
                                  n.children[i].name + ">",
                              n.children[i].line);
            return unit;
        }
    }

    auto& t = unit.tiers;
    for (const auto& c : n.children) {
        const std::string& name = c.name;
        if (name == "other_sources") {
            check_attrs(sink, c, {});
            if (!is_ws_only(c.text))
                sink.schema_error("stray text inside <other_sources>", c.line);
            for (const auto& s : c.children) {
                if (s.name != "source") {
                    sink.schema_error(
                        "<other_sources> can only contain <source>, found <" +
                            s.name + ">",
                        s.line);
                    continue;
                }
                check_attrs(sink, s, {});
                check_no_children(sink, s);
                t.other_sources.push_back({s.text});
            }
            continue;
        }
        if (name == "analysis") {
            check_attrs(sink, c, {"code"});
            check_no_children(sink, c);
            const auto* code = c.attr("code");
            if ((code && !code->empty()) || !c.text.empty()) {
                Analysis a;
                a.text = c.text;
                if (code && !code->empty()) a.analyst_code = *code;
                t.analysis = std::move(a);
            }
            continue;
        }
        check_attrs(sink, c, {});
        check_no_children(sink, c);
        auto v = leaf_value(c);
        if (name == "flint_transcription")
            t.flint_transcription = v.value_or("");
        else if (name == "flint_transcription_comment")
            t.transcription_comment = v;
        else if (name == "other_recordings")
            unit.other_recordings = v;
        else if (name == "recording_comment")
            t.recording_comment = v;
        else if (name == "flint_gloss")
            t.flint_gloss = v;
        else if (name == "flint_gloss_comment")
            t.gloss_comment = v;
        else if (name == "flint_free_translation")
            t.free_translation = v;
        else if (name == "flint_free_translation_comment")
            t.free_translation_comment = v;
        else if (name == "other_sources_comment")
            t.other_sources_comment = v;
        else if (name == "analysis_comment")
            t.analysis_comment = v;
        else if (name == "gloss")
            t.morpheme_gloss = v;
        else if (name == "gloss_comment")
            t.morpheme_gloss_comment = v;
    }
    return unit;
}

ArchiveText read_text(SchemaSink& sink, const Node& root) {
    ArchiveText text;
    check_attrs(sink, root, {"type"});
    const auto* type = root.attr("type");
    if (!type) {
        sink.schema_error("<text> requires a type attribute", root.line);
    } else if (*type == "lexicon") {
        text.kind = TextKind::lexicon;
    } else if (*type == "primary_text") {
        text.kind = TextKind::primary_text;
    } else {
        sink.schema_error(
            "text type \"" + *type + "\" is not lexicon or primary_text",
            root.line);
    }
    if (!is_ws_only(root.text))
        sink.schema_error("stray text inside <text>", root.line);

    const std::string unit_name =
        text.kind == TextKind::lexicon ? "lexical_item" : "text_unit";
    enum Stage { media, speakers, units } stage = media;
    for (const auto& c : root.children) {
        if (c.name == "media") {
            if (stage != Stage::media) {
                sink.schema_error("<media> must precede speakers and units",
                                  c.line);
            }
            check_attrs(sink, c, {"format", "url", "comment"});
            check_no_children(sink, c);
            if (!is_ws_only(c.text))
                sink.schema_error("<media> cannot hold text", c.line);
            if (!c.attr("format") || !c.attr("url")) {
                sink.schema_error("<media> requires format and url", c.line);
                continue;
            }
            MediaLink link;
            link.format = *c.attr("format");
            link.url = *c.attr("url");
            if (const auto* cm = c.attr("comment")) link.comment = *cm;
            text.media.push_back(std::move(link));
        } else if (c.name == "speaker") {
            if (stage == Stage::units) {
                sink.schema_error("<speaker> must precede units", c.line);
            }
            stage = Stage::speakers;
            check_attrs(sink, c, {"code"});
            check_no_children(sink, c);
            if (!c.attr("code")) {
                sink.schema_error("<speaker> requires a code attribute",
                                  c.line);
                continue;
            }
            text.speakers.push_back({*c.attr("code"), c.text});
        } else if (c.name == unit_name) {
            stage = Stage::units;
            text.units.push_back(read_unit(sink, c, text.kind));
        } else {
            sink.schema_error("unexpected element <" + c.name + ">", c.line);
        }
    }
    return text;
}

// ---------------------------------------------------------------------------
// Metadata-document grammar (crosswalk output shapes).

const std::set<std::string> kOlacTerms = {
    "identifier", "relation",    "subject_language", "coverage",
    "date",       "contributor", "description",      "type_linguistic"};

const std::set<std::string> kDcTerms = {
    "identifier", "relation",    "subject",     "coverage",
    "date",       "contributor", "description", "type"};

void check_metadata_leaf(SchemaSink& sink, const Node& c, bool olac) {
    check_no_children(sink, c);
    if (c.name == "contributor" && olac) {
        check_attrs(sink, c, {"refine"});
        if (const auto* r = c.attr("refine")) {
            if (*r != "researcher" && *r != "speaker") {
                sink.schema_error(
                    "contributor refinement \"" + *r +
                        "\" is not researcher or speaker",
                    c.line);
            }
        }
    } else {
        check_attrs(sink, c, {});
    }
    if (c.text.empty()) {
        sink.schema_error("element <" + c.name + "> has an empty value",
                          c.line);
    }
    if (olac && c.name == "type_linguistic" && c.text != "lexicon" &&
        c.text != "primary_text") {
        sink.schema_error("type_linguistic \"" + c.text +
                              "\" is not lexicon or primary_text",
                          c.line);
    }
}

void read_metadata_doc(SchemaSink& sink, const Node& n, bool olac) {
    if (!is_ws_only(n.text))
        sink.schema_error("stray text inside <" + n.name + ">", n.line);
    const auto& terms = olac ? kOlacTerms : kDcTerms;
    int identifiers = 0;
    for (const auto& c : n.children) {
        if (!terms.count(c.name)) {
            sink.schema_error("unexpected element <" + c.name + ">", c.line);
            continue;
        }
        if (c.name == "identifier") ++identifiers;
        check_metadata_leaf(sink, c, olac);
    }
    if (olac && identifiers != 1) {
        sink.schema_error("<olac> requires exactly one identifier, found " +
                              std::to_string(identifiers),
                          n.line);
    }
}

void walk_root(SchemaSink& sink, const Node& root) {
    if (root.name == "text") {
        read_text(sink, root);
    } else if (root.name == "olac") {
        read_metadata_doc(sink, root, true);
    } else if (root.name == "dc") {
        read_metadata_doc(sink, root, false);
    } else if (root.name == "olac_set") {
        if (!is_ws_only(root.text))
            sink.schema_error("stray text inside <olac_set>", root.line);
        for (const auto& c : root.children) {
            if (c.name != "olac") {
                sink.schema_error("<olac_set> can only contain <olac>",
                                  c.line);
                continue;
            }
            read_metadata_doc(sink, c, true);
        }
    } else {
        sink.schema_error("unknown root element <" + root.name + ">",
                          root.line);
    }
}

}  // namespace

std::string to_xml(const ArchiveText& text) {
    if (has_errors(validate(text))) {
        throw Error(codes::E_PRECONDITION,
                    "text does not satisfy the model invariants");
    }
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    const std::string type = text_kind_name(text.kind);
    const bool empty =
        text.media.empty() && text.speakers.empty() && text.units.empty();
    if (empty) {
        out += "<text type=\"" + type + "\"/>\n";
        return out;
    }
    out += "<text type=\"" + type + "\">\n";
    for (const auto& m : text.media) {
        out += "<media format=\"" + escape_attr(m.format) + "\" url=\"" +
               escape_attr(m.url) + "\" comment=\"" + escape_attr(m.comment) +
               "\"/>\n";
    }
    for (const auto& s : text.speakers) {
        out += "<speaker code=\"" + escape_attr(s.code) + "\">" +
               escape_text(s.name) + "</speaker>\n";
    }
    const bool lexicon = text.kind == TextKind::lexicon;
    const std::string unit_name = lexicon ? "lexical_item" : "text_unit";
    for (const auto& u : text.units) {
        out += "<" + unit_name;
        if (u.offset_s)
            out += " offset=\"" + format_offset(*u.offset_s) + "\"";
        if (lexicon && u.syn_sem_domain)
            out += " syn_sem_domain_code=\"" + escape_attr(*u.syn_sem_domain) +
                   "\"";
        if (!lexicon && u.speaker_code)
            out += " speaker_code=\"" + escape_attr(*u.speaker_code) + "\"";
        out += ">\n";

        const auto& t = u.tiers;
        element(out, "flint_transcription", t.flint_transcription);
        element(out, "flint_transcription_comment",
                t.transcription_comment.value_or(""));
        if (lexicon)
            element(out, "other_recordings", u.other_recordings.value_or(""));
        element(out, "recording_comment", t.recording_comment.value_or(""));
        element(out, "flint_gloss", t.flint_gloss.value_or(""));
        element(out, "flint_gloss_comment", t.gloss_comment.value_or(""));
        element(out, "flint_free_translation",
                t.free_translation.value_or(""));
        element(out, "flint_free_translation_comment",
                t.free_translation_comment.value_or(""));
        if (t.other_sources.empty()) {
            out += "<other_sources/>\n";
        } else {
            out += "<other_sources>\n";
            for (const auto& s : t.other_sources)
                element(out, "source", s.citation);
            out += "</other_sources>\n";
        }
        element(out, "other_sources_comment",
                t.other_sources_comment.value_or(""));
        if (t.analysis) {
            out += "<analysis";
            if (t.analysis->analyst_code)
                out += " code=\"" + escape_attr(*t.analysis->analyst_code) +
                       "\"";
            if (t.analysis->text.empty())
                out += "/>\n";
            else
                out += ">" + escape_text(t.analysis->text) + "</analysis>\n";
        } else {
            out += "<analysis/>\n";
        }
        element(out, "analysis_comment", t.analysis_comment.value_or(""));
        element(out, "gloss", t.morpheme_gloss.value_or(""));
        element(out, "gloss_comment", t.morpheme_gloss_comment.value_or(""));
        out += "</" + unit_name + ">\n";
    }
    out += "</text>\n";
    return out;
}

ArchiveText from_xml(std::string_view input) {
    auto parsed = xmldom::parse(input);
    if (!parsed.root) {
        const Diagnostic& d = parsed.diagnostics.empty()
                                  ? Diagnostic{Severity::error,
                                               codes::E_MALFORMED,
                                               "empty document", 1}
                                  : parsed.diagnostics.front();
        throw Error(d.code, d.message, d.line);
    }
    if (parsed.root->name != "text") {
        throw Error(codes::E_SCHEMA,
                    "expected a <text> root, found <" + parsed.root->name +
                        ">",
                    parsed.root->line);
    }
    SchemaSink sink;  // throwing mode
    return read_text(sink, *parsed.root);
}

std::vector<Diagnostic> validate_xml(std::string_view input) {
    auto parsed = xmldom::parse(input);
    if (!parsed.root) return parsed.diagnostics;
    std::vector<Diagnostic> diags = std::move(parsed.diagnostics);
    SchemaSink sink{&diags};
    walk_root(sink, *parsed.root);
    return diags;
}

}  // namespace lingarc::xml
