// SPDX-License-Identifier: Apache-2.0
#include "archivelink/mention_miner.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "archivelink/detail/text.hpp"
#include "archivelink/errors.hpp"

namespace archivelink {

using detail::decode_utf8;
using detail::is_edge_punctuation;
using detail::is_unicode_space;
using detail::to_lower_ascii;

TriggerLexicon TriggerLexicon::defaults() {
    TriggerLexicon lex;
    lex.terms = {"solver", "program", "software", "package",
                 "library", "tool", "system", "code"};
    lex.window = 5;
    return lex;
}

TriggerLexicon TriggerLexicon::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open lexicon file '" + path + "'");
    nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
        throw ParseError(path, 1, "lexicon is not a JSON object");
    }
    TriggerLexicon lex;
    if (doc.contains("terms")) {
        for (const auto& term : doc["terms"]) {
            lex.terms.insert(to_lower_ascii(term.get<std::string>()));
        }
    }
    if (doc.contains("window")) lex.window = doc["window"].get<int>();
    if (lex.terms.empty()) throw ValidationError("lexicon has no trigger terms");
    if (lex.window < 1) throw ValidationError("lexicon window must be >= 1");
    return lex;
}

std::string_view to_string(MentionField field) {
    switch (field) {
        case MentionField::title: return "title";
        case MentionField::abstract: return "abstract";
        case MentionField::references: return "references";
    }
    return "?";
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t pos = 0;
    while (pos < text.size()) {
        // skip whitespace
        std::size_t probe = pos;
        std::uint32_t cp = decode_utf8(text, probe);
        if (is_unicode_space(cp)) {
            pos = probe;
            continue;
        }
        // collect one whitespace-delimited chunk, remembering code point starts
        std::vector<std::size_t> starts;
        while (pos < text.size()) {
            probe = pos;
            cp = decode_utf8(text, probe);
            if (is_unicode_space(cp)) break;
            starts.push_back(pos);
            pos = probe;
        }
        std::size_t chunk_end = pos;
        starts.push_back(chunk_end);

        // strip punctuation code points from both edges
        std::size_t lo = 0, hi = starts.size() - 1;  // [lo, hi) in code points
        while (lo < hi) {
            std::size_t p = starts[lo];
            if (!is_edge_punctuation(decode_utf8(text, p))) break;
            ++lo;
        }
        while (hi > lo) {
            std::size_t p = starts[hi - 1];
            if (!is_edge_punctuation(decode_utf8(text, p))) break;
            --hi;
        }
        if (lo < hi) {
            tokens.emplace_back(text.substr(starts[lo], starts[hi] - starts[lo]));
        }
        pos = chunk_end;
    }
    return tokens;
}

namespace {

void scan_tokens(const std::vector<std::string>& tokens, std::size_t offset_base,
                 const PublicationRecord& pub, MentionField field,
                 const std::map<std::string, std::string>& names, const TriggerLexicon& lex,
                 std::vector<Mention>& out) {
    const std::size_t n = tokens.size();
    std::vector<std::string> lowered(n);
    std::vector<bool> is_trigger(n);
    for (std::size_t i = 0; i < n; ++i) {
        lowered[i] = to_lower_ascii(tokens[i]);
        is_trigger[i] = lex.terms.count(lowered[i]) > 0;
    }
    const std::size_t window = static_cast<std::size_t>(lex.window);
    for (std::size_t i = 0; i < n; ++i) {
        auto hit = names.find(lowered[i]);
        if (hit == names.end()) continue;
        // nearest trigger within the window; left side wins ties
        std::size_t best = n;
        for (std::size_t d = 1; d <= window; ++d) {
            if (d <= i && is_trigger[i - d]) {
                best = i - d;
                break;
            }
            if (i + d < n && is_trigger[i + d]) {
                best = i + d;
                break;
            }
        }
        if (best == n) continue;
        Mention m;
        m.publication_id = pub.id;
        m.software_name = hit->second;
        m.matched_alias = tokens[i];
        m.field = field;
        m.trigger = lowered[best];
        m.token_offset = offset_base + i;
        out.push_back(std::move(m));
    }
}

}  // namespace

std::vector<Mention> find_mentions(const PublicationRecord& pub,
                                   const std::map<std::string, std::string>& names,
                                   const TriggerLexicon& lex) {
    std::vector<Mention> out;
    scan_tokens(tokenize(pub.title), 0, pub, MentionField::title, names, lex, out);
    scan_tokens(tokenize(pub.abstract), 0, pub, MentionField::abstract, names, lex, out);
    std::size_t offset_base = 0;
    for (const std::string& line : pub.references) {
        std::vector<std::string> tokens = tokenize(line);
        scan_tokens(tokens, offset_base, pub, MentionField::references, names, lex, out);
        offset_base += tokens.size();
    }
    return out;
}

std::map<std::string, std::string> build_name_map(const CatalogIndex& index) {
    std::map<std::string, std::string> names;
    for (const SoftwareRecord& sw : index.softwares()) {
        names.emplace(to_lower_ascii(sw.name), sw.name);
        for (const std::string& alias : sw.aliases) {
            names.emplace(to_lower_ascii(alias), sw.name);
        }
    }
    return names;
}

}  // namespace archivelink
