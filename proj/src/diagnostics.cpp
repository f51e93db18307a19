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

#include "lingarc/diagnostics.hpp"

#include <algorithm>

namespace lingarc {

std::string severity_name(Severity s) {
    switch (s) {
        case Severity::note: return "NOTE";
        case Severity::warning: return "WARNING";
        case Severity::error: return "ERROR";
    }
    return "ERROR";
}

std::string format_diagnostic(const Diagnostic& d) {
    std::string out = severity_name(d.severity) + " " + d.code;
    if (d.line) out += " line:" + std::to_string(*d.line);
    out += " " + d.message;
    return out;
}

bool has_errors(const std::vector<Diagnostic>& diags) {
    return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
        return d.severity == Severity::error;
    });
}

}  // namespace lingarc
