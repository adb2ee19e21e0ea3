#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace arena {

// The ten target algorithms. Each id maps to one reference solver, one
// deliberately slower brute-force foil, and one complexity descriptor.
enum class AlgorithmId {
    Dijkstra,
    FloydWarshall,
    BellmanFord,
    Prim,
    Euclidean,
    Kmp,
    Manacher,
    MooreVote,
    Gray,
    Strassen,
};

inline constexpr std::array<AlgorithmId, 10> kAllAlgorithms = {
    AlgorithmId::Dijkstra,      AlgorithmId::FloydWarshall, AlgorithmId::BellmanFord,
    AlgorithmId::Prim,          AlgorithmId::Euclidean,     AlgorithmId::Kmp,
    AlgorithmId::Manacher,      AlgorithmId::MooreVote,     AlgorithmId::Gray,
    AlgorithmId::Strassen,
};

std::string_view algorithm_name(AlgorithmId id);     // "dijkstra", "floyd_warshall", ...
AlgorithmId algorithm_from_name(std::string_view s); // accepts '-' or '_' separators

struct ComplexityInfo {
    std::string_view reference;  // complexity class of the reference solver
    std::string_view naive;      // complexity class of the brute-force foil
};
ComplexityInfo algorithm_complexity(AlgorithmId id);

// Solves the task's stdin wire format at the algorithm's reference complexity.
// Throws MalformedInput on parse failure (message identifies the line).
std::string solve_reference(AlgorithmId algo, std::string_view input);

// Brute-force counterpart; agrees byte-exactly with solve_reference but at a
// strictly worse complexity class. Throws InstanceTooLarge past the ceiling
// documented per algorithm in algorithms.cpp.
std::string solve_naive(AlgorithmId algo, std::string_view input);

namespace bench {

// Raw row-major n*n multiplies without wire-format parsing, for runtime
// scaling measurements.
std::vector<long long> strassen_multiply(const std::vector<long long>& a,
                                         const std::vector<long long>& b, size_t n);
std::vector<long long> naive_multiply(const std::vector<long long>& a,
                                      const std::vector<long long>& b, size_t n);

}  // namespace bench

}  // namespace arena
