#pragma once

#include <string>
#include <vector>

#include "arena/algorithms.hpp"

namespace arena {

// Per-algorithm name data backing the judge prompts and the lexical leak
// scans. Shipped as data/aliases.json; $ARENA_DATA_DIR overrides the lookup
// directory.
struct AliasEntry {
    std::string display;             // e.g. "Dijkstra Algorithm"
    std::string canonical;           // e.g. "Dijkstra"
    std::vector<std::string> scan_terms;
    std::string coupled_display;     // quoted coupled name for the judge prompt
    std::string mechanism_rule;      // algorithm-specific leak rule
    std::string misspelling_example;
};

const AliasEntry& alias_entry(AlgorithmId algo);

// Word-boundary, case-insensitive scan over the algorithm's name terms.
bool mentions_target(const std::string& text, AlgorithmId algo);

// Replaces every scan-term occurrence (case-insensitive, word-boundary) with
// the replacement token; longer terms win overlaps.
std::string replace_target_terms(const std::string& text, AlgorithmId algo,
                                 const std::string& replacement);

}  // namespace arena
