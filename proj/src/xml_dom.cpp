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

#include "xml_dom.hpp"

#include <cctype>
#include <cstdint>

#include "lingarc/encoding.hpp"

namespace lingarc::xmldom {

const std::string* Node::attr(std::string_view name) const {
    for (const auto& [k, v] : attrs)
        if (k == name) return &v;
    return nullptr;
}

namespace {

bool name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '-' || c == '.' || c == ':';
}

struct Reader {
    std::string_view in;
    std::size_t pos = 0;
    int line = 1;
    std::vector<Diagnostic>* diags;
    bool failed = false;

    bool eof() const { return pos >= in.size(); }
    char peek() const { return in[pos]; }

    char take() {
        char c = in[pos++];
        if (c == '\n') ++line;
        return c;
    }

    bool starts_with(std::string_view s) const {
        return in.substr(pos, s.size()) == s;
    }

    void skip(std::size_t n) {
        for (std::size_t i = 0; i < n && !eof(); ++i) take();
    }

    void error(const std::string& message, std::optional<int> at = {}) {
        if (!failed) {
            diags->push_back({Severity::error, codes::E_MALFORMED, message,
                              at.value_or(line)});
        }
        failed = true;
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek())))
            take();
    }

    std::string read_name() {
        std::string out;
        if (eof() || !name_start(peek())) {
            error("expected a name");
            return out;
        }
        while (!eof() && name_char(peek())) out += take();
        return out;
    }

    void append_entity(std::string& out) {
        // positioned just past '&'
        std::string ent;
        while (!eof() && peek() != ';' && ent.size() < 10) ent += take();
        if (eof() || peek() != ';') {
            error("unterminated entity reference");
            return;
        }
        take();
        if (ent == "amp") out += '&';
        else if (ent == "lt") out += '<';
        else if (ent == "gt") out += '>';
        else if (ent == "quot") out += '"';
        else if (ent == "apos") out += '\'';
        else if (!ent.empty() && ent[0] == '#') {
            std::uint32_t cp = 0;
            bool ok = ent.size() > 1;
            if (ent.size() > 2 && (ent[1] == 'x' || ent[1] == 'X')) {
                for (std::size_t i = 2; i < ent.size() && ok; ++i) {
                    char c = ent[i];
                    if (std::isxdigit(static_cast<unsigned char>(c))) {
                        cp = cp * 16 + static_cast<std::uint32_t>(
                            std::isdigit(static_cast<unsigned char>(c))
                                ? c - '0'
                                : std::tolower(c) - 'a' + 10);
                    } else ok = false;
                }
                ok = ok && ent.size() > 2;
            } else {
                for (std::size_t i = 1; i < ent.size() && ok; ++i) {
                    if (std::isdigit(static_cast<unsigned char>(ent[i])))
                        cp = cp * 10 + static_cast<std::uint32_t>(ent[i] - '0');
                    else ok = false;
                }
            }
            if (!ok || cp == 0 || cp > 0x10FFFF ||
                (cp >= 0xD800 && cp <= 0xDFFF)) {
                error("bad character reference &" + ent + ";");
                return;
            }
            // UTF-8 encode
            if (cp < 0x80) out += static_cast<char>(cp);
            else if (cp < 0x800) {
                out += static_cast<char>(0xC0 | (cp >> 6));
                out += static_cast<char>(0x80 | (cp & 0x3F));
            } else if (cp < 0x10000) {
                out += static_cast<char>(0xE0 | (cp >> 12));
                out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
                out += static_cast<char>(0x80 | (cp & 0x3F));
            } else {
                out += static_cast<char>(0xF0 | (cp >> 18));
                out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
                out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
                out += static_cast<char>(0x80 | (cp & 0x3F));
            }
        } else {
            error("unknown entity &" + ent + ";");
        }
    }

    bool skip_comment() {
        // positioned at "<!--"
        skip(4);
        while (!eof()) {
            if (starts_with("-->")) {
                skip(3);
                return true;
            }
            take();
        }
        error("unterminated comment");
        return false;
    }

    void skip_doctype() {
        // positioned at "<!DOCTYPE"
        int depth = 0;
        while (!eof()) {
            char c = take();
            if (c == '[') ++depth;
            else if (c == ']') --depth;
            else if (c == '>' && depth <= 0) return;
        }
        error("unterminated DOCTYPE");
    }

    std::optional<std::pair<std::string, std::string>> read_attr() {
        std::string name = read_name();
        if (failed) return std::nullopt;
        skip_ws();
        if (eof() || peek() != '=') {
            error("expected '=' after attribute name \"" + name + "\"");
            return std::nullopt;
        }
        take();
        skip_ws();
        if (eof() || (peek() != '"' && peek() != '\'')) {
            error("attribute value must be quoted");
            return std::nullopt;
        }
        const char quote = take();
        std::string value;
        while (!eof() && peek() != quote) {
            char c = take();
            if (c == '<') {
                error("'<' in attribute value");
                return std::nullopt;
            }
            if (c == '&') append_entity(value);
            else value += c;
            if (failed) return std::nullopt;
        }
        if (eof()) {
            error("unterminated attribute value");
            return std::nullopt;
        }
        take();
        return std::make_pair(std::move(name), std::move(value));
    }

    // Parses an element starting at '<'. Returns false on failure.
    bool read_element(Node& node) {
        node.line = line;
        take();  // '<'
        node.name = read_name();
        if (failed) return false;
        bool self_closing = false;
        while (true) {
            skip_ws();
            if (eof()) {
                error("unterminated start tag <" + node.name);
                return false;
            }
            if (peek() == '/') {
                take();
                if (eof() || peek() != '>') {
                    error("malformed empty-element tag");
                    return false;
                }
                take();
                self_closing = true;
                break;
            }
            if (peek() == '>') {
                take();
                break;
            }
            auto attr = read_attr();
            if (!attr) return false;
            for (const auto& [k, v] : node.attrs) {
                (void)v;
                if (k == attr->first) {
                    error("duplicate attribute \"" + k + "\"", node.line);
                    return false;
                }
            }
            node.attrs.push_back(std::move(*attr));
        }
        if (self_closing) return true;

        // content
        while (true) {
            if (eof()) {
                error("missing end tag </" + node.name + ">", node.line);
                return false;
            }
            if (starts_with("<!--")) {
                if (!skip_comment()) return false;
                continue;
            }
            if (starts_with("</")) {
                const int at = line;
                skip(2);
                std::string end = read_name();
                if (failed) return false;
                skip_ws();
                if (eof() || peek() != '>') {
                    error("malformed end tag </" + end);
                    return false;
                }
                take();
                if (end != node.name) {
                    error("end tag </" + end + "> does not match <" +
                              node.name + ">",
                          at);
                    return false;
                }
                return true;
            }
            if (peek() == '<') {
                if (in.size() - pos >= 2 && in[pos + 1] == '!') {
                    error("unsupported markup declaration inside element");
                    return false;
                }
                if (in.size() - pos >= 2 && in[pos + 1] == '?') {
                    error("processing instructions are not supported");
                    return false;
                }
                Node child;
                if (!read_element(child)) return false;
                node.children.push_back(std::move(child));
                continue;
            }
            char c = take();
            if (c == '&') append_entity(node.text);
            else node.text += c;
            if (failed) return false;
        }
    }
};

}  // namespace

ParseResult parse(std::string_view input) {
    ParseResult result;
    const long long bad = utf8_invalid_at(input);
    if (bad >= 0) {
        result.diagnostics.push_back(
            {Severity::error, codes::E_ENCODING, "input is not valid UTF-8",
             std::nullopt});
        return result;
    }

    Reader r{input, 0, 1, &result.diagnostics, false};

    // byte-order mark
    if (r.starts_with("\xEF\xBB\xBF")) r.skip(3);
    r.skip_ws();

    if (r.starts_with("<?xml")) {
        // declaration: require UTF-8 when an encoding is given
        std::size_t end = input.find("?>", r.pos);
        if (end == std::string_view::npos) {
            r.error("unterminated XML declaration");
            return result;
        }
        std::string decl(input.substr(r.pos, end - r.pos));
        for (auto& c : decl)
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        const std::size_t enc = decl.find("encoding");
        if (enc != std::string::npos &&
            decl.find("utf-8", enc) == std::string::npos) {
            result.diagnostics.push_back(
                {Severity::error, codes::E_ENCODING,
                 "declared encoding is not UTF-8", 1});
            return result;
        }
        while (r.pos < end + 2) r.take();
        r.skip_ws();
    }

    while (!r.eof() && (r.starts_with("<!--") || r.starts_with("<!DOCTYPE"))) {
        if (r.starts_with("<!--")) {
            if (!r.skip_comment()) return result;
        } else {
            r.skip_doctype();
            if (r.failed) return result;
        }
        r.skip_ws();
    }

    if (r.eof() || r.peek() != '<') {
        r.error("expected a root element");
        return result;
    }

    Node root;
    if (!r.read_element(root)) return result;

    r.skip_ws();
    while (!r.eof() && r.starts_with("<!--")) {
        if (!r.skip_comment()) return result;
        r.skip_ws();
    }
    if (!r.eof()) {
        r.error("content after the root element");
        return result;
    }
    result.root = std::move(root);
    return result;
}

std::string escape_text(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string escape_attr(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace lingarc::xmldom
