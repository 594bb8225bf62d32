// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "archivelink/catalog.hpp"

namespace archivelink {

/// Trigger vocabulary for the name-plus-term mention heuristic. Terms are
/// lowercase; `window` is the maximum token distance between a software name
/// and a trigger for the pair to count as a mention.
struct TriggerLexicon {
    std::set<std::string> terms;
    int window = 5;

    /// The built-in vocabulary (solver, program, software, package, library,
    /// tool, system, code) with window 5.
    static TriggerLexicon defaults();

    /// Loads {"terms": [...], "window": n} from a JSON file. Terms are
    /// lowercased on load. Throws ValidationError on an empty term set or a
    /// window < 1.
    static TriggerLexicon load(const std::string& path);
};

enum class MentionField { title, abstract, references };

std::string_view to_string(MentionField field);

/// One candidate software mention found in a publication text field.
struct Mention {
    std::string publication_id;
    std::string software_name;  // canonical name the matched alias maps to
    std::string matched_alias;  // token that matched, as written in the text
    MentionField field = MentionField::title;
    std::string trigger;
    std::size_t token_offset = 0;  // offset of the name token within the field

    bool operator==(const Mention&) const = default;
};

/// Splits on Unicode whitespace and strips punctuation from token edges.
/// Characters like '+' are symbols, not punctuation, so "C++" survives
/// intact while "solver." loses its dot; interior dots and hyphens are
/// always kept ("v2.0", "run-time"). Empty tokens are dropped and order is
/// preserved.
std::vector<std::string> tokenize(std::string_view text);

/// Scans title, abstract and references (in that order) for tokens equal,
/// case-insensitively, to a key of `names` with a trigger term within
/// `lex.window` tokens on either side. Emits one Mention per matching name
/// occurrence, left to right; the nearest trigger wins, ties going to the
/// one on the left. Reference lines are scanned independently (a window
/// never spans two lines) with token offsets cumulative across lines.
std::vector<Mention> find_mentions(const PublicationRecord& pub,
                                   const std::map<std::string, std::string>& names,
                                   const TriggerLexicon& lex);

/// Lowercased name/alias -> canonical name map over the whole catalog.
/// On collisions the software earliest in catalog order wins.
std::map<std::string, std::string> build_name_map(const CatalogIndex& index);

}  // namespace archivelink
