#pragma once

// Seeded random instance generators in each task's wire format, shared by the
// oracle-equivalence unit tests and the acceptance suite. Sizes stay inside
// the brute-force foils' documented ceilings.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "arena/algorithms.hpp"
#include "arena/util.hpp"

namespace arena::testgen {

inline std::string graph_instance(Rng& rng, int n_max, bool with_source, bool negative,
                                  bool ensure_connected = false) {
    const int n = static_cast<int>(rng.range(2, n_max));
    std::string in = std::to_string(n) + "\n";
    std::vector<std::string> edge_lines;
    if (ensure_connected) {
        std::vector<int> order(static_cast<size_t>(n));
        std::iota(order.begin(), order.end(), 1);
        for (int i = n - 1; i > 0; --i) {
            std::swap(order[static_cast<size_t>(i)], order[rng.below(static_cast<uint64_t>(i + 1))]);
        }
        for (int i = 1; i < n; ++i) {
            edge_lines.push_back(std::to_string(order[static_cast<size_t>(i - 1)]) + " " +
                                 std::to_string(order[static_cast<size_t>(i)]) + " " +
                                 std::to_string(rng.range(0, 9)));
        }
    }
    const int extra = static_cast<int>(rng.range(0, 10));
    for (int i = 0; i < extra; ++i) {
        const int u = static_cast<int>(rng.range(1, n));
        const int v = static_cast<int>(rng.range(1, n));
        int64_t w;
        if (!negative) {
            w = rng.range(0, 9);
        } else if (u < v) {
            w = rng.range(-3, 9);  // negative weights only forward: no negative cycles
        } else {
            w = rng.range(30, 39);
        }
        edge_lines.push_back(std::to_string(u) + " " + std::to_string(v) + " " + std::to_string(w));
    }
    in += std::to_string(edge_lines.size()) + "\n";
    for (const auto& l : edge_lines) in += l + "\n";
    if (with_source) in += std::to_string(rng.range(1, n)) + "\n";
    return in;
}

inline std::string euclid_instance(Rng& rng) {
    const int t = static_cast<int>(rng.range(1, 5));
    std::string in = std::to_string(t) + "\n";
    for (int i = 0; i < t; ++i) {
        int64_t a = rng.range(0, 1000000);
        int64_t b = rng.range(0, 1000000);
        if (rng.below(8) == 0) b = 0;
        if (rng.below(16) == 0) a = 0;
        in += std::to_string(a) + " " + std::to_string(b) + "\n";
    }
    return in;
}

inline std::string word(Rng& rng, size_t max_len, int alphabet) {
    const size_t len = 1 + rng.below(max_len);
    std::string s;
    for (size_t i = 0; i < len; ++i) {
        s += static_cast<char>('a' + rng.below(static_cast<uint64_t>(alphabet)));
    }
    return s;
}

inline std::string kmp_instance(Rng& rng) {
    return word(rng, 200, 2) + "\n" + word(rng, 6, 2) + "\n";
}

inline std::string manacher_instance(Rng& rng) { return word(rng, 120, 2) + "\n"; }

inline std::string moore_instance(Rng& rng) {
    const int n = 2 * static_cast<int>(rng.range(0, 49)) + 1;
    const int64_t majority = rng.range(-20, 20);
    const int maj_count = n / 2 + 1 + static_cast<int>(rng.below(static_cast<uint64_t>(n - n / 2)));
    std::vector<int64_t> vals;
    for (int i = 0; i < std::min(maj_count, n); ++i) vals.push_back(majority);
    while (static_cast<int>(vals.size()) < n) vals.push_back(rng.range(-20, 20));
    for (size_t i = vals.size() - 1; i > 0; --i) {
        std::swap(vals[i], vals[rng.below(i + 1)]);
    }
    std::string in = std::to_string(n) + "\n";
    for (size_t i = 0; i < vals.size(); ++i) {
        if (i) in += ' ';
        in += std::to_string(vals[i]);
    }
    in += "\n";
    return in;
}

inline std::string gray_instance(Rng& rng) {
    const int t = static_cast<int>(rng.range(1, 5));
    std::string in = std::to_string(t) + "\n";
    for (int i = 0; i < t; ++i) in += std::to_string(rng.range(0, 2000)) + "\n";
    return in;
}

inline std::string strassen_instance(Rng& rng) {
    static const int sizes[] = {1, 2, 4, 8, 16};
    const int n = sizes[rng.below(5)];
    std::string in = std::to_string(n) + "\n";
    for (int m = 0; m < 2; ++m) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (j) in += ' ';
                in += std::to_string(rng.range(-9, 9));
            }
            in += "\n";
        }
    }
    return in;
}

inline std::string instance_for(AlgorithmId algo, Rng& rng) {
    switch (algo) {
        case AlgorithmId::Dijkstra: return graph_instance(rng, 8, true, false);
        case AlgorithmId::FloydWarshall: return graph_instance(rng, 7, false, false);
        case AlgorithmId::BellmanFord: return graph_instance(rng, 8, true, true);
        case AlgorithmId::Prim: return graph_instance(rng, 7, false, false, true);
        case AlgorithmId::Euclidean: return euclid_instance(rng);
        case AlgorithmId::Kmp: return kmp_instance(rng);
        case AlgorithmId::Manacher: return manacher_instance(rng);
        case AlgorithmId::MooreVote: return moore_instance(rng);
        case AlgorithmId::Gray: return gray_instance(rng);
        case AlgorithmId::Strassen: return strassen_instance(rng);
    }
    return {};
}

}  // namespace arena::testgen
