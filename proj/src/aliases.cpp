#include "arena/aliases.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

#include "arena/errors.hpp"
#include "arena/util.hpp"

namespace arena {

using nlohmann::json;

namespace {

std::map<AlgorithmId, AliasEntry> load_table() {
    const auto path = data_dir() / "aliases.json";
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const std::exception& e) {
        throw ConfigError("cannot load alias table " + path.string() + ": " + e.what());
    }
    std::map<AlgorithmId, AliasEntry> table;
    for (AlgorithmId id : kAllAlgorithms) {
        const std::string key(algorithm_name(id));
        if (!j.contains(key)) throw ConfigError("alias table lacks entry for " + key);
        const auto& e = j[key];
        AliasEntry entry;
        entry.display = e.at("display").get<std::string>();
        entry.canonical = e.at("canonical").get<std::string>();
        for (const auto& t : e.at("scan_terms")) {
            entry.scan_terms.push_back(t.get<std::string>());
        }
        entry.coupled_display = e.at("coupled_display").get<std::string>();
        entry.mechanism_rule = e.at("mechanism_rule").get<std::string>();
        entry.misspelling_example = e.at("misspelling_example").get<std::string>();
        // Longest-first so multi-word terms win overlapping replacements.
        std::sort(entry.scan_terms.begin(), entry.scan_terms.end(),
                  [](const auto& a, const auto& b) { return a.size() > b.size(); });
        table.emplace(id, std::move(entry));
    }
    return table;
}

const std::map<AlgorithmId, AliasEntry>& table() {
    static const std::map<AlgorithmId, AliasEntry> t = load_table();
    return t;
}

bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

// Finds the next word-boundary occurrence of term in lower-cased haystack.
size_t find_word(const std::string& lower, const std::string& term, size_t from) {
    size_t pos = from;
    while ((pos = lower.find(term, pos)) != std::string::npos) {
        const bool left_ok = pos == 0 || !is_word_char(lower[pos - 1]);
        const size_t end = pos + term.size();
        const bool right_ok = end >= lower.size() || !is_word_char(lower[end]);
        if (left_ok && right_ok) return pos;
        ++pos;
    }
    return std::string::npos;
}

}  // namespace

const AliasEntry& alias_entry(AlgorithmId algo) {
    return table().at(algo);
}

bool mentions_target(const std::string& text, AlgorithmId algo) {
    const std::string lower = to_lower(text);
    for (const auto& term : alias_entry(algo).scan_terms) {
        if (find_word(lower, to_lower(term), 0) != std::string::npos) return true;
    }
    return false;
}

std::string replace_target_terms(const std::string& text, AlgorithmId algo,
                                 const std::string& replacement) {
    std::string result = text;
    for (const auto& term : alias_entry(algo).scan_terms) {
        const std::string t = to_lower(term);
        size_t from = 0;
        for (;;) {
            const std::string lower = to_lower(result);
            const size_t at = find_word(lower, t, from);
            if (at == std::string::npos) break;
            result = result.substr(0, at) + replacement + result.substr(at + t.size());
            from = at + replacement.size();
        }
    }
    return result;
}

}  // namespace arena
