#include "arena/taskgen.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "arena/errors.hpp"
#include "arena/guest_programs.hpp"
#include "arena/util.hpp"

namespace arena {

using nlohmann::json;

// ---------------------------------------------------------------------------
// TaskSpec
// ---------------------------------------------------------------------------

std::string TaskSpec::id() const {
    return std::string(algorithm_name(algo)) + "-v" + std::to_string(variant);
}

void TaskSpec::validate() const {
    if (schema_version != kTaskBundleSchemaVersion) {
        throw MalformedInput(id() + ": unsupported schema version " +
                             std::to_string(schema_version));
    }
    if (cases.size() < 2) throw MalformedInput(id() + ": fewer than 2 cases");
    if (time_limit_s <= 0) throw MalformedInput(id() + ": non-positive time limit");
    if (mem_limit_bytes == 0) throw MalformedInput(id() + ": zero memory limit");
    if (hint_l1.empty() || hint_l2.size() <= hint_l1.size()) {
        throw MalformedInput(id() + ": hint_l2 must strictly extend hint_l1");
    }
    if (statement.find(complexity_bound) == std::string::npos) {
        throw MalformedInput(id() + ": statement lacks the complexity bound text");
    }
    if (scaffold.find("YOUR CODE IS HERE") == std::string::npos) {
        throw MalformedInput(id() + ": scaffold lacks the submission slot");
    }
    bool has_max = false;
    for (const auto& c : cases) has_max |= c.max_size_marker;
    if (!has_max) throw MalformedInput(id() + ": no case is marked max-size");
}

std::string task_spec_to_json(const TaskSpec& spec) {
    json j;
    j["schema_version"] = spec.schema_version;
    j["algo"] = std::string(algorithm_name(spec.algo));
    j["variant"] = spec.variant;
    j["statement"] = spec.statement;
    j["hint_l1"] = spec.hint_l1;
    j["hint_l2"] = spec.hint_l2;
    j["scaffold"] = spec.scaffold;
    j["time_limit_s"] = spec.time_limit_s;
    j["mem_limit_bytes"] = spec.mem_limit_bytes;
    j["complexity_bound"] = spec.complexity_bound;
    j["compare_rule"] = spec.compare_rule;
    j["variant_notes"] = spec.variant_notes;
    json cases = json::array();
    for (const auto& c : spec.cases) {
        cases.push_back({{"name", c.name},
                         {"stdin_b64", base64_encode(c.stdin_data)},
                         {"expected_b64", base64_encode(c.expected_stdout)},
                         {"max_size", c.max_size_marker}});
    }
    j["cases"] = std::move(cases);
    return j.dump();
}

TaskSpec task_spec_from_json(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& e) {
        throw MalformedInput(std::string("task spec parse failure: ") + e.what());
    }
    try {
        TaskSpec spec;
        spec.schema_version = j.at("schema_version").get<int>();
        spec.algo = algorithm_from_name(j.at("algo").get<std::string>());
        spec.variant = j.at("variant").get<int>();
        spec.statement = j.at("statement").get<std::string>();
        spec.hint_l1 = j.at("hint_l1").get<std::string>();
        spec.hint_l2 = j.at("hint_l2").get<std::string>();
        spec.scaffold = j.at("scaffold").get<std::string>();
        spec.time_limit_s = j.at("time_limit_s").get<double>();
        spec.mem_limit_bytes = j.at("mem_limit_bytes").get<uint64_t>();
        spec.complexity_bound = j.at("complexity_bound").get<std::string>();
        spec.compare_rule = j.at("compare_rule").get<std::string>();
        spec.variant_notes = j.at("variant_notes").get<std::string>();
        for (const auto& c : j.at("cases")) {
            TestCase tc;
            tc.name = c.at("name").get<std::string>();
            tc.stdin_data = base64_decode(c.at("stdin_b64").get<std::string>());
            tc.expected_stdout = base64_decode(c.at("expected_b64").get<std::string>());
            tc.max_size_marker = c.at("max_size").get<bool>();
            spec.cases.push_back(std::move(tc));
        }
        return spec;
    } catch (const json::exception& e) {
        throw MalformedInput(std::string("task spec field failure: ") + e.what());
    }
}

void write_bundle(const std::filesystem::path& path, const std::vector<TaskSpec>& specs) {
    std::string out;
    for (const auto& s : specs) {
        out += task_spec_to_json(s);
        out += '\n';
    }
    write_file(path, out);
}

std::vector<TaskSpec> read_bundle(const std::filesystem::path& path) {
    std::vector<TaskSpec> specs;
    for (const auto& line : split_lines(read_file(path))) {
        if (rstrip(line).empty()) continue;
        specs.push_back(task_spec_from_json(line));
        specs.back().validate();
    }
    if (specs.empty()) throw MalformedInput("bundle is empty: " + path.string());
    return specs;
}

// ---------------------------------------------------------------------------
// Task family text and surface-parameter tables
// ---------------------------------------------------------------------------

namespace {

std::string replace_all(std::string text, std::string_view from, std::string_view to) {
    size_t pos = 0;
    while ((pos = text.find(from, pos)) != std::string::npos) {
        text.replace(pos, from.size(), to);
        pos += to.size();
    }
    return text;
}

struct TaskFamily {
    const char* title;
    const char* bound_plain;  // stored as complexity_bound; substring of bound_latex
    const char* bound_latex;
    const char* bound_suffix;  // rider after "time complexity of {bound}"
    const char* input_desc;
    const char* output_desc;
    const char* example_in;
    const char* requirement_line1;  // complexity requirement wording
    std::array<const char*, 4> narratives;
    const char* constraints_template;  // {W} expands to the variant value cap
    const char* hint_l1;
    const char* hint_l2;
};

// Per-variant value caps. Sizes at the maximum generated instance stay fixed
// per algorithm (they anchor calibration); variants vary the value ranges and
// the narrative framing, both recorded in variant_notes.
const std::array<long long, 4>& value_caps(AlgorithmId algo) {
    static const std::array<long long, 4> weights = {9, 100, 1000, 1000000};
    static const std::array<long long, 4> euclid = {1000000000LL, 1000000000000LL,
                                                    1000000000000000LL, 999999937LL};
    static const std::array<long long, 4> alphabet = {2, 3, 4, 26};
    static const std::array<long long, 4> moore = {10000, 1000000, 100000000, 1000000000};
    static const std::array<long long, 4> gray = {1000, 1000000, 1000000000, 100000000000LL};
    static const std::array<long long, 4> entries = {9, 20, 50, 99};
    switch (algo) {
        case AlgorithmId::Dijkstra:
        case AlgorithmId::FloydWarshall:
        case AlgorithmId::BellmanFord:
        case AlgorithmId::Prim: return weights;
        case AlgorithmId::Euclidean: return euclid;
        case AlgorithmId::Kmp:
        case AlgorithmId::Manacher: return alphabet;
        case AlgorithmId::MooreVote: return moore;
        case AlgorithmId::Gray: return gray;
        case AlgorithmId::Strassen: return entries;
    }
    return weights;
}

const TaskFamily& task_family(AlgorithmId algo) {
    static const TaskFamily dijkstra = {
        "Single Source Shortest Path",
        "O(N^2)",
        "$O(N^2)$",
        ", where $N$ is the number of nodes",
        "The first line: an integer n, representing the number of nodes in the graph (nodes are "
        "numbered from 1 to n).\n"
        "The second line: An integer m, representing the number of edges in the graph.\n"
        "The following m lines, each containing three integers u, v, w, indicating a directed "
        "edge from node u to node v with weight w.\n"
        "The final line: an integer s, representing the source node's number.",
        "A single line containing n integers, in order of node numbers from 1 to n, outputting "
        "the shortest path length from source node s to each node. If a node cannot be reached "
        "from source node s, output -1.",
        "5\n6\n1 2 10\n1 3 5\n2 4 1\n3 2 2\n3 5 9\n5 4 4\n1\n",
        "Please use Python to code this, and the time complexity of the code should not exceed "
        "$O(N^2)$ even in the extreme worst case.",
        {"Given a weighted directed graph where all edge weights are non-negative, you need to "
         "compute the shortest path length from a given source node (starting node) to all "
         "other nodes in the graph.",
         "A courier company operates one-way routes between depots, each with a non-negative "
         "delivery cost. Starting from a dispatch depot, you need to compute the cheapest total "
         "cost of reaching every depot.",
         "Consider a data network of directed links, each with a non-negative latency. From a "
         "given origin server, you need to compute the minimum total latency required to reach "
         "every server.",
         "You are given a rail map of one-way connections with non-negative fares. From a "
         "starting station, you need to compute the cheapest total fare to every station."},
        "1 <= n <= 3000, 0 <= m <= 12000, 0 <= w <= {W}.",
        "Please design an algorithm based on the greedy algorithm concept. At each step, select "
        "the unvisited node that appears to be closest to the starting point and use it to "
        "update the distances to its neighbors.",
        "Here's an algorithm based on the greedy algorithm concept. At each step, select the "
        "unvisited node that appears to be closest to the starting point and use it to update "
        "the distances to its neighbors. Please following it and finish your code:\n\n"
        "Initialization:\n"
        "1. Set the distance to the starting point to 0.\n"
        "2. Set the distance to infinity for all other nodes in the graph.\n"
        "3. Mark all nodes as unvisited.\n\n"
        "Node Selection:\n"
        "1. Scan through all unvisited nodes to find the one with the smallest current "
        "distance, and set it as the current node.\n"
        "2. Relax/Update Distance\n"
        "3. For each unvisited neighbor node of the current node:\n"
        "4. Calculate the new distance to that neighbor node through the current node.\n"
        "5. If this new distance is shorter than the existing recorded distance of the neighbor "
        "node, update the distance of the neighbor node (this step is called 'relaxation').\n"
        "6. Mark the current node as visited (because its shortest path has been determined).\n\n"
        "Repeat:\n"
        "1. Repeat steps 2, 3, and 4 until all nodes have been visited (or the distances of all "
        "nodes have been determined).",
    };
    static const TaskFamily floyd = {
        "All Pairs Shortest Path",
        "O(N^3)",
        "$O(N^3)$",
        ", where $N$ is the number of nodes",
        "The first line: an integer n, the number of nodes (numbered from 1 to n).\n"
        "The second line: an integer m, the number of directed edges.\n"
        "The following m lines, each containing three integers u, v, w, indicating a directed "
        "edge from node u to node v with non-negative weight w. Parallel edges may appear; use "
        "the cheapest.",
        "n lines, each containing n integers. The j-th value on line i is the shortest path "
        "length from node i to node j (0 on the diagonal). If node j cannot be reached from "
        "node i, output -1 for that entry.",
        "4\n5\n1 2 3\n2 3 1\n1 3 7\n3 1 2\n2 4 5\n",
        "Please use Python to code this, and the time complexity of the code should not exceed "
        "$O(N^3)$ even in the extreme worst case.",
        {"Given a weighted directed graph where all edge weights are non-negative, you need to "
         "compute the shortest path length between every ordered pair of nodes.",
         "A freight alliance tracks one-way shipping legs between ports, each with a "
         "non-negative tariff. For every ordered pair of ports, compute the cheapest total "
         "tariff.",
         "A city's one-way street grid has non-negative travel times. For every ordered pair of "
         "intersections, compute the minimum total travel time.",
         "An airline publishes one-way segments with non-negative prices. For every ordered "
         "pair of airports, compute the cheapest total price."},
        "1 <= n <= 150, 0 <= m <= 3000, 0 <= w <= {W}.",
        "Think in terms of dynamic programming over intermediate nodes: a shortest path from i "
        "to j either avoids node k entirely or passes through it.",
        "Here is an algorithm based on dynamic programming over intermediate nodes: a shortest "
        "path from i to j either avoids node k entirely or passes through it. Please follow it "
        "and finish your code:\n\n"
        "Initialization:\n"
        "1. Build an n x n distance table; set dist[i][i] = 0.\n"
        "2. For every edge (u, v, w), set dist[u][v] = min(dist[u][v], w).\n"
        "3. Use a large sentinel value for pairs with no known path.\n\n"
        "Relaxation:\n"
        "1. For k = 1..n (the intermediate node), then for every pair (i, j):\n"
        "2. If dist[i][k] + dist[k][j] < dist[i][j], update dist[i][j].\n\n"
        "Output:\n"
        "1. After processing every k, dist[i][j] holds the shortest path length; print -1 for "
        "entries that kept the sentinel.",
    };
    static const TaskFamily bellman = {
        "Single Source Shortest Path with Negative Weights",
        "O(N*M)",
        "$O(N*M)$",
        ", where $N$ is the number of nodes and $M$ the number of edges",
        "The first line: an integer n, the number of nodes (numbered from 1 to n).\n"
        "The second line: an integer m, the number of directed edges.\n"
        "The following m lines, each containing three integers u, v, w, indicating a directed "
        "edge from node u to node v with weight w. Weights may be negative, but the graph "
        "contains no negative-weight cycle.\n"
        "The final line: an integer s, the source node.",
        "A single line containing n values, in order of node numbers from 1 to n: the shortest "
        "path length from s to each node, or INF when the node cannot be reached.",
        "5\n6\n1 2 4\n1 3 5\n2 4 -2\n3 4 1\n4 5 3\n2 3 -1\n1\n",
        "Please use Python to code this, and the time complexity of the code should not exceed "
        "$O(N*M)$ even in the extreme worst case.",
        {"Given a weighted directed graph that may contain negative edge weights but no "
         "negative cycles, you need to compute the shortest path length from a given source "
         "node to all other nodes.",
         "A trading network quotes one-way conversions whose costs may be negative (rebates) "
         "but admit no profitable cycle. From a starting venue, compute the minimum total cost "
         "to every venue.",
         "An energy grid has one-way transfer links whose losses may be negative (boosts), with "
         "no cycle of net gain. From a source substation, compute the minimum total loss to "
         "reach every substation.",
         "A logistics planner prices one-way hops that can carry negative surcharges, with no "
         "negative-total loop. From one hub, compute the cheapest total price to every hub."},
        "1 <= n <= 600, 0 <= m <= 2500, -50 <= w <= {W}.",
        "Relax every edge repeatedly: each full pass propagates shortest-path estimates one "
        "more hop away from the source.",
        "Here is an algorithm based on repeated edge relaxation: each full pass propagates "
        "shortest-path estimates one more hop away from the source. Please follow it and "
        "finish your code:\n\n"
        "Initialization:\n"
        "1. Set the source distance to 0 and every other node's distance to infinity.\n\n"
        "Relaxation Rounds:\n"
        "1. Repeat n-1 times:\n"
        "2. For every edge (u, v, w): if dist[u] + w < dist[v], set dist[v] = dist[u] + w.\n\n"
        "Output:\n"
        "1. Nodes that kept the infinite distance are unreachable; print INF for them.",
    };
    static const TaskFamily prim = {
        "Minimum Spanning Tree",
        "O(N^2)",
        "$O(N^2)$",
        ", where $N$ is the number of nodes",
        "The first line: an integer n, the number of nodes (numbered from 1 to n).\n"
        "The second line: an integer m, the number of undirected edges.\n"
        "The following m lines, each containing three integers u, v, w, indicating an "
        "undirected edge between u and v with non-negative weight w. The graph is connected.",
        "A single line containing one integer: the total weight of a minimum spanning tree.",
        "4\n5\n1 2 1\n2 3 2\n3 4 1\n4 1 3\n1 3 2\n",
        "Please use Python to code this, and the time complexity of the code should not exceed "
        "$O(N^2)$ even in the extreme worst case.",
        {"Given a connected weighted undirected graph, you need to compute the minimum total "
         "weight of a set of edges that connects all nodes.",
         "A utility company must wire up every town with bidirectional cables of non-negative "
         "cost. Compute the cheapest total cost that keeps all towns connected.",
         "A campus plans bidirectional fiber links between buildings, each with a non-negative "
         "price. Compute the minimum total price so that every building is reachable from any "
         "other.",
         "An irrigation project connects fields with two-way channels of non-negative digging "
         "cost. Compute the least total digging cost that leaves all fields connected."},
        "1 <= n <= 1500, n-1 <= m <= 20000, 0 <= w <= {W}.",
        "Grow a single tree greedily: at each step attach the cheapest edge that connects the "
        "tree to a node outside it.",
        "Here is an algorithm that grows a single tree greedily: at each step attach the "
        "cheapest edge that connects the tree to a node outside it. Please follow it and "
        "finish your code:\n\n"
        "Initialization:\n"
        "1. Start the tree at node 1.\n"
        "2. For every node keep the cheapest known edge weight connecting it to the tree "
        "(infinity initially, 0 for node 1).\n\n"
        "Grow:\n"
        "1. Scan all nodes outside the tree and pick the one with the smallest connection "
        "weight.\n"
        "2. Add it to the tree and add its connection weight to the total.\n"
        "3. Update the connection weights of the remaining outside nodes using the new node's "
        "edges.\n\n"
        "Repeat:\n"
        "1. Repeat until all n nodes are in the tree; the accumulated total is the answer.",
    };
    static const TaskFamily euclid = {
        "Greatest Common Divisor Queries",
        "O(log(min(a, b)))",
        "$O(log(min(a, b)))$",
        " per query",
        "The first line: an integer t, the number of queries.\n"
        "The following t lines, each containing two non-negative integers a and b.",
        "t lines; the i-th line contains the greatest common divisor of the i-th pair. By "
        "convention gcd(a, 0) = a and gcd(0, 0) = 0.",
        "3\n48 18\n42 0\n17 5\n",
        "Please use Python to code this, and the time complexity of the code should not exceed "
        "$O(log(min(a, b)))$ per query even in the extreme worst case.",
        {"For each query pair of non-negative integers, you need to compute the largest "
         "integer that divides both.",
         "A tiling workshop receives orders for rectangular floors a by b and must find the "
         "largest square tile size that fits both sides exactly, for many orders.",
         "A metronome calibrator needs, for many pairs of pulse intervals, the longest common "
         "subdivision that measures both intervals exactly.",
         "A packaging line must cut two ribbon rolls of lengths a and b into equal pieces with "
         "nothing left over, maximizing the piece length, for many roll pairs."},
        "1 <= t <= 60000, 0 <= a, b <= {W}.",
        "The greatest common divisor is preserved when the larger number is replaced by its "
        "remainder modulo the smaller one.",
        "Here is an algorithm based on the fact that the greatest common divisor is preserved "
        "when the larger number is replaced by its remainder modulo the smaller one. Please "
        "follow it and finish your code:\n\n"
        "Steps:\n"
        "1. Given a pair (a, b), if b is 0 the answer is a.\n"
        "2. Otherwise replace (a, b) by (b, a mod b) and repeat.\n"
        "3. The second component strictly shrinks, so the loop terminates after "
        "O(log(min(a, b))) iterations.\n"
        "4. Apply this independently to every query and print one result per line.",
    };
    static const TaskFamily kmp = {
        "Find All Pattern Occurrences",
        "O(n + m)",
        "$O(n + m)$",
        ", where $n$ is the text length and $m$ the pattern length",
        "The first line: the text, a non-empty string of lowercase letters.\n"
        "The second line: the pattern, a non-empty string of lowercase letters.",
        "All 1-based starting positions at which the pattern occurs in the text, in increasing "
        "order, separated by spaces. If the pattern does not occur, output -1.",
        "ababcababc\nabc\n",
        "Please use Python to code this, and the time complexity of the code should not exceed "
        "$O(n + m)$ even in the extreme worst case.",
        {"Given a text string and a pattern string, you need to report every position at which "
         "the pattern occurs in the text.",
         "A log auditor scans a long event stream for every occurrence of a fixed alert "
         "signature and must report all match positions.",
         "A genome browser needs every locus at which a short probe sequence occurs inside a "
         "long chromosome string.",
         "A plagiarism checker must list all positions where a fixed phrase appears inside a "
         "large document."},
        "1 <= |text| <= 1500000, 1 <= |pattern| <= 2000, alphabet of {W} lowercase letters.",
        "Preprocess the pattern itself: when a mismatch happens, the pattern's own structure "
        "tells you how far it can shift without re-reading text characters.",
        "Here is an algorithm that preprocesses the pattern so a mismatch never re-reads text "
        "characters. Please follow it and finish your code:\n\n"
        "Prefix table:\n"
        "1. For each pattern position i, compute the length of the longest proper prefix of "
        "the pattern that is also a suffix of pattern[0..i].\n"
        "2. Build it incrementally, reusing the table for shorter prefixes on mismatch.\n\n"
        "Scan:\n"
        "1. Walk the text once, keeping the length k of the currently matched pattern prefix.\n"
        "2. On mismatch, fall back with k = table[k-1] instead of moving the text index "
        "backwards.\n"
        "3. When k reaches the pattern length, record a match and fall back via the table.\n\n"
        "Output:\n"
        "1. Print all 1-based match positions separated by spaces, or -1 if there are none.",
    };
    static const TaskFamily manacher = {
        "Longest Palindromic Substring",
        "O(n)",
        "$O(n)$",
        ", where $n$ is the string length",
        "A single line: a non-empty string of lowercase letters.",
        "The longest palindromic substring. If several have the maximum length, output the "
        "leftmost one.",
        "babad\n",
        "Please use Python to code this, and the time complexity of the code should not exceed "
        "$O(n)$ even in the extreme worst case.",
        {"Given a string, you need to find its longest palindromic substring, preferring the "
         "leftmost among ties.",
         "A data-integrity probe looks for the longest mirror-symmetric window inside a byte "
         "stream and reports the earliest such window of maximum length.",
         "A melody analyzer searches a note sequence for the longest segment that reads the "
         "same forwards and backwards, earliest first among ties.",
         "A DNA screening tool reports the longest palindromic run in a nucleotide string, "
         "taking the leftmost when several runs tie."},
        "1 <= |s| <= 600000, alphabet of {W} lowercase letters.",
        "Palindromes already discovered can seed later centers: reuse the mirror center's "
        "radius inside the current rightmost palindrome instead of expanding from scratch.",
        "Here is an algorithm that reuses previously computed palindromes to avoid redundant "
        "expansion. Please follow it and finish your code:\n\n"
        "Transform:\n"
        "1. Insert a separator between characters (and sentinels at both ends) so even and odd "
        "palindromes are handled uniformly.\n\n"
        "Scan:\n"
        "1. Keep the palindrome with the rightmost known boundary and its center.\n"
        "2. For each position i inside that boundary, initialize its radius from the mirror "
        "position's radius, capped by the boundary.\n"
        "3. Expand around i one character at a time, then update the rightmost boundary when "
        "i's palindrome extends past it.\n\n"
        "Output:\n"
        "1. Track the longest radius seen (the earliest start wins ties) and print the "
        "corresponding substring of the original string.",
    };
    static const TaskFamily moore = {
        "Majority Element",
        "O(n)",
        "$O(n)$",
        " time and $O(1)$ extra space, where $n$ is the sequence length",
        "The first line: an integer n, the sequence length.\n"
        "The second line: n integers separated by spaces. One value is guaranteed to appear "
        "more than n/2 times.",
        "A single line containing the majority element.",
        "7\n3 1 3 2 3 3 4\n",
        "Please use Python to code this, and the solution must run in $O(n)$ time with $O(1)$ "
        "extra space even in the extreme worst case.",
        {"Given a sequence of integers in which one value appears more than half of the time, "
         "you need to identify that value.",
         "An election audit receives a long ballot stream where one candidate is known to hold "
         "an absolute majority; determine that candidate in a single pass.",
         "A sensor array emits readings where one calibration code dominates more than half of "
         "the samples; recover the dominating code.",
         "A network monitor sees a packet tag stream in which a single tag accounts for the "
         "absolute majority; find that tag."},
        "1 <= n <= 1500000, |value| <= {W}.",
        "A single counter suffices: pair off each element against the current candidate and "
        "the majority element is the one left standing.",
        "Here is an algorithm that pairs off elements against a single candidate so the "
        "majority element is the one left standing. Please follow it and finish your code:\n\n"
        "One pass:\n"
        "1. Keep a candidate and a counter starting at 0.\n"
        "2. For each element: if the counter is 0, adopt the element as the candidate with "
        "counter 1; otherwise increment the counter when the element equals the candidate and "
        "decrement it when it differs.\n\n"
        "Output:\n"
        "1. Since a majority element is guaranteed, the final candidate is the answer; print "
        "it.",
    };
    static const TaskFamily gray = {
        "Single-Bit-Change Code Queries",
        "O(1)",
        "$O(1)$",
        " per query",
        "The first line: an integer t, the number of queries.\n"
        "The following t lines, each containing one non-negative integer k.",
        "t lines; the i-th line contains the k-th codeword (as a decimal integer) of the "
        "canonical binary sequence that starts at 0 and changes exactly one bit between "
        "consecutive entries.",
        "5\n0\n1\n2\n3\n7\n",
        "Please use Python to code this, and the time complexity of the code should not exceed "
        "$O(1)$ per query even in the extreme worst case.",
        {"Enumerate binary codewords so that consecutive entries differ in exactly one bit, "
         "starting from 0; for each query k, output the k-th codeword directly.",
         "A rotary encoder emits positions encoded so neighbouring readings flip a single bit; "
         "given indices k, output the k-th reading of the canonical sequence without stepping "
         "through it.",
         "A test-pattern generator walks all bit strings changing one bit at a time, starting "
         "at 0; report the k-th pattern for many k efficiently.",
         "An error-resistant counter advances by flipping exactly one bit per tick from 0; "
         "compute its value after k ticks for many queries."},
        "1 <= t <= 60000, 0 <= k <= 200000000000; small cases keep k <= {W}.",
        "Consider the binary reflection construction: the k-th codeword can be produced "
        "directly from k with one bitwise operation against its own shift.",
        "Here is an algorithm based on binary reflection. Please follow it and finish your "
        "code:\n\n"
        "Derivation:\n"
        "1. Reflecting an (n-1)-bit sequence and prefixing 1 to the reflected half keeps "
        "consecutive entries one bit apart.\n"
        "2. Unfolding that construction shows bit i of the k-th codeword is the XOR of bits i "
        "and i+1 of k.\n\n"
        "Formula:\n"
        "1. Therefore the k-th codeword equals k XOR (k >> 1).\n"
        "2. Apply it to each query independently and print one value per line.",
    };
    static const TaskFamily strassen = {
        "Fast Matrix Multiplication",
        "O(n^{\\log_2 7})",
        "$O(n^{\\log_2 7})$",
        "",
        "The first line contains one integer n.\n"
        "Then follow n lines for matrix A (each line has n integers), and then n lines for "
        "matrix B.\n"
        "It is guaranteed that n is a power of two.",
        "Output matrix C = A x B with n lines, each containing n integers separated by spaces.",
        "2\n1 2\n3 4\n5 6\n7 8\n",
        "Please use Python to code this, and the worst-case time complexity should not exceed "
        "$O(n^{\\log_2 7})$, while extra space should be polynomially bounded.",
        {"Given two n x n integer matrices, compute their product.",
         "A graphics pipeline multiplies large square integer transform tables; compute the "
         "product table of two such tables.",
         "A spreadsheet engine composes two square integer weight grids by matrix product; "
         "compute the composed grid.",
         "A simulation kernel needs the product of two square integer coupling matrices; "
         "compute it."},
        "n is a power of two, 1 <= n <= 512; the largest instances use 0/1 entries, smaller ones satisfy |entry| <= {W}.",
        "Try a divide-and-conquer strategy on matrix quadrants, and think about reducing the "
        "number of recursive sub-matrix multiplications below 8.",
        "Here is an algorithm based on divide-and-conquer for reference:\n\n"
        "Initialization:\n"
        "1. Ensure both matrices are square and have the same size.\n"
        "2. If n is not a power of 2, pad A and B with zeros to size m x m, where m = 2^k >= "
        "n.\n"
        "3. Define a base-case threshold (for example, when n <= 64), and use standard matrix "
        "multiplication below this size.\n\n"
        "Recursive Split:\n"
        "1. Split each matrix into four submatrices of size n/2 x n/2.\n"
        "2. Instead of 8 recursive multiplications, compute only 7:\n\n"
        "M_1 = (A_{11}+A_{22})(B_{11}+B_{22})\n"
        "M_2 = (A_{21}+A_{22})B_{11}\n"
        "M_3 = A_{11}(B_{12}-B_{22})\n"
        "M_4 = A_{22}(B_{21}-B_{11})\n"
        "M_5 = (A_{11}+A_{12})B_{22}\n"
        "M_6 = (A_{21}-A_{11})(B_{11}+B_{12})\n"
        "M_7 = (A_{12}-A_{22})(B_{21}+B_{22})\n\n"
        "Combine Results:\n"
        "C_{11} = M_1 + M_4 - M_5 + M_7\n"
        "C_{12} = M_3 + M_5\n"
        "C_{21} = M_2 + M_4\n"
        "C_{22} = M_1 - M_2 + M_3 + M_6\n\n"
        "Then merge the four blocks into C. If padding was added, crop back to the original "
        "n x n.\n\n"
        "Repeat:\n"
        "1. Apply the same process recursively to every multiplication inside M_1 ... M_7.\n"
        "2. Stop recursion at the base case and use standard multiplication.\n\n"
        "Time Complexity:\n"
        "T(n) = 7T(n/2) + O(n^2), so T(n) = O(n^{\\log_2 7}), approximately O(n^2.807).",
    };
    switch (algo) {
        case AlgorithmId::Dijkstra: return dijkstra;
        case AlgorithmId::FloydWarshall: return floyd;
        case AlgorithmId::BellmanFord: return bellman;
        case AlgorithmId::Prim: return prim;
        case AlgorithmId::Euclidean: return euclid;
        case AlgorithmId::Kmp: return kmp;
        case AlgorithmId::Manacher: return manacher;
        case AlgorithmId::MooreVote: return moore;
        case AlgorithmId::Gray: return gray;
        case AlgorithmId::Strassen: return strassen;
    }
    throw ArenaError("unknown algorithm id");
}

struct SurfaceParams {
    int narrative = 0;
    int range_idx = 0;
};

SurfaceParams parse_surface(const TaskSpec& spec) {
    SurfaceParams p;
    const std::string& notes = spec.variant_notes;
    auto grab = [&](const std::string& key) -> int {
        const size_t at = notes.find(key + "=");
        if (at == std::string::npos) return 0;
        return std::atoi(notes.c_str() + at + key.size() + 1);
    };
    p.narrative = grab("narrative");
    p.range_idx = grab("value_range");
    return p;
}

}  // namespace

std::vector<TaskSpec> generate_variants(AlgorithmId algo, int count, uint64_t seed) {
    if (count < 1) throw ArenaError("generate_variants: count must be >= 1");
    const TaskFamily& fam = task_family(algo);
    const auto& caps = value_caps(algo);
    std::vector<TaskSpec> specs;
    specs.reserve(static_cast<size_t>(count));
    for (int v = 0; v < count; ++v) {
        Rng rng(Rng::derive(seed, static_cast<uint64_t>(algo), static_cast<uint64_t>(v), 0xA11));
        TaskSpec spec;
        spec.algo = algo;
        spec.variant = v;
        const int narrative = v % 4;
        // Variant 0 keeps the canonical value range; later variants draw one.
        const int range_idx = v == 0 ? 0 : static_cast<int>(rng.below(caps.size()));
        spec.variant_notes =
            "narrative=" + std::to_string(narrative) + "; value_range=" + std::to_string(range_idx);
        const std::string cap_text = std::to_string(caps[static_cast<size_t>(range_idx)]);

        std::string st;
        st += "Task: " + spec.id() + "\n\n";
        st += "Problem Description: " + std::string(fam.title) + "\n\n";
        st += std::string(fam.narratives[static_cast<size_t>(narrative)]);
        st += " Could you invent an algorithm for me with a worst-case time complexity of " +
              std::string(fam.bound_latex) + std::string(fam.bound_suffix) +
              "? Please don't just try to adapt existing algorithms; instead, I'd like you to "
              "derive a brand-new approach through reasoning and exploration.\n\n";
        st += "Input:\n" + std::string(fam.input_desc) + "\n\n";
        st += "Output:\n" + std::string(fam.output_desc) + "\n\n";
        st += "Example\n\nInput:\n" + std::string(fam.example_in) + "\nOutput:\n";
        st += solve_reference(algo, fam.example_in);
        st += "\nConstraints: " + replace_all(fam.constraints_template, "{W}", cap_text) + "\n\n";
        st += "Requirements:\n";
        st += "- " + std::string(fam.requirement_line1) + "\n";
        st += "- Print outputs exactly as described in Output\n";
        st += "- Do not include package import or asserts in code.\n";
        st +=
            "- Make sure you call the submit_final_answer tool to submit the final code "
            "explicitly, and the code should only contain the solve function\n";
        spec.statement = std::move(st);

        spec.hint_l1 = fam.hint_l1;
        spec.hint_l2 = fam.hint_l2;
        spec.scaffold = guest_scaffold(algo);
        spec.complexity_bound = fam.bound_plain;
        spec.time_limit_s = 5.0;
        spec.mem_limit_bytes = 256ULL << 20;
        specs.push_back(std::move(spec));
    }
    return specs;
}

// ---------------------------------------------------------------------------
// Case generation
// ---------------------------------------------------------------------------

namespace {

struct PlannedCase {
    std::string name;
    std::string input;
    bool max_marker = false;
};

struct CasePlan {
    std::vector<PlannedCase> cases;
    std::string twin_input;  // down-sampled twin of the max-size case
};

std::string graph_input(Rng& rng, int n, int m, long long w_lo, long long w_hi, bool with_source,
                        bool dag_only, bool ensure_connected) {
    std::vector<std::string> lines;
    if (ensure_connected && n > 1) {
        std::vector<int> order(static_cast<size_t>(n));
        std::iota(order.begin(), order.end(), 1);
        for (int i = n - 1; i > 0; --i) {
            std::swap(order[static_cast<size_t>(i)], order[rng.below(static_cast<uint64_t>(i + 1))]);
        }
        for (int i = 1; i < n; ++i) {
            lines.push_back(std::to_string(order[static_cast<size_t>(i - 1)]) + " " +
                            std::to_string(order[static_cast<size_t>(i)]) + " " +
                            std::to_string(rng.range(std::max(w_lo, 0LL), w_hi)));
        }
    }
    while (static_cast<int>(lines.size()) < m) {
        int u = static_cast<int>(rng.range(1, n));
        int v = static_cast<int>(rng.range(1, n));
        if (dag_only) {
            if (u == v) continue;
            if (u > v) std::swap(u, v);
        }
        lines.push_back(std::to_string(u) + " " + std::to_string(v) + " " +
                        std::to_string(rng.range(w_lo, w_hi)));
    }
    std::string in = std::to_string(n) + "\n" + std::to_string(lines.size()) + "\n";
    for (const auto& l : lines) in += l + "\n";
    if (with_source) in += std::to_string(rng.range(1, n)) + "\n";
    return in;
}

std::string random_word(Rng& rng, size_t len, int alphabet) {
    std::string s;
    s.reserve(len);
    for (size_t i = 0; i < len; ++i) {
        s += static_cast<char>('a' + rng.below(static_cast<uint64_t>(alphabet)));
    }
    return s;
}

CasePlan plan_cases(const TaskSpec& spec, Rng& rng) {
    const AlgorithmId algo = spec.algo;
    const auto& caps = value_caps(algo);
    const long long cap = caps[static_cast<size_t>(parse_surface(spec).range_idx)];
    const std::string example = task_family(algo).example_in;
    CasePlan plan;
    auto add = [&](std::string name, std::string input, bool max_marker = false) {
        plan.cases.push_back({std::move(name), std::move(input), max_marker});
    };
    add("example", example);

    switch (algo) {
        case AlgorithmId::Dijkstra: {
            for (int i = 0; i < 2; ++i) {
                const int n = static_cast<int>(rng.range(5, 40));
                add("small-" + std::to_string(i + 1),
                    graph_input(rng, n, 3 * n, 0, cap, true, false, false));
            }
            add("max-random", graph_input(rng, 3000, 12000, 0, cap, true, false, false), true);
            plan.twin_input = graph_input(rng, 7, 12, 0, std::min(cap, 9LL), true, false, false);
            break;
        }
        case AlgorithmId::FloydWarshall: {
            for (int i = 0; i < 2; ++i) {
                const int n = static_cast<int>(rng.range(4, 25));
                add("small-" + std::to_string(i + 1),
                    graph_input(rng, n, 3 * n, 0, cap, false, false, false));
            }
            add("max-random", graph_input(rng, 150, 3000, 0, cap, false, false, false), true);
            plan.twin_input = graph_input(rng, 6, 9, 0, std::min(cap, 9LL), false, false, false);
            break;
        }
        case AlgorithmId::BellmanFord: {
            const long long lo = -std::min(cap, 50LL);
            for (int i = 0; i < 2; ++i) {
                const int n = static_cast<int>(rng.range(5, 30));
                add("small-" + std::to_string(i + 1),
                    graph_input(rng, n, 3 * n, lo, cap, true, true, false));
            }
            add("max-random", graph_input(rng, 600, 2500, lo, cap, true, true, false), true);
            plan.twin_input = graph_input(rng, 7, 10, -3, std::min(cap, 9LL), true, true, false);
            break;
        }
        case AlgorithmId::Prim: {
            for (int i = 0; i < 2; ++i) {
                const int n = static_cast<int>(rng.range(4, 20));
                add("small-" + std::to_string(i + 1),
                    graph_input(rng, n, 2 * n, 0, cap, false, false, true));
            }
            add("max-random", graph_input(rng, 1500, 20000, 0, cap, false, false, true), true);
            plan.twin_input = graph_input(rng, 7, 12, 0, std::min(cap, 9LL), false, false, true);
            break;
        }
        case AlgorithmId::Euclidean: {
            auto pairs_input = [&](int t, long long hi, int planted_big) {
                std::string in = std::to_string(t) + "\n";
                for (int i = 0; i < t; ++i) {
                    if (i < planted_big) {
                        // Worst pairs for the subtraction foil: huge / tiny.
                        in += std::to_string(hi - static_cast<long long>(rng.below(1000))) + " " +
                              std::to_string(1 + static_cast<long long>(rng.below(2))) + "\n";
                    } else {
                        in += std::to_string(rng.range(0, hi)) + " " + std::to_string(rng.range(0, hi)) +
                              "\n";
                    }
                }
                return in;
            };
            add("small-1", pairs_input(static_cast<int>(rng.range(1, 50)), std::min(cap, 1000000LL), 0));
            add("small-2", pairs_input(static_cast<int>(rng.range(1, 50)), std::min(cap, 1000000LL), 0));
            add("max-random", pairs_input(60000, cap, 0), true);
            add("max-adversarial", pairs_input(60000, cap, 100), true);
            // Twin keeps min(a,b) within the trial-division foil guard.
            std::string twin = "20\n";
            for (int i = 0; i < 20; ++i) {
                twin += std::to_string(rng.range(0, 1000000)) + " " +
                        std::to_string(rng.range(0, 100000)) + "\n";
            }
            plan.twin_input = twin;
            break;
        }
        case AlgorithmId::Kmp: {
            const int alphabet = static_cast<int>(cap);
            for (int i = 0; i < 2; ++i) {
                add("small-" + std::to_string(i + 1),
                    random_word(rng, 1 + rng.below(500), alphabet) + "\n" +
                        random_word(rng, 1 + rng.below(8), alphabet) + "\n");
            }
            add("max-random",
                random_word(rng, 1500000, alphabet) + "\n" + random_word(rng, 8, alphabet) + "\n",
                true);
            // All-'a' text against an a...ab pattern forces the quadratic scan
            // to its worst case.
            add("max-adversarial",
                std::string(1500000, 'a') + "\n" + std::string(1999, 'a') + "b\n", true);
            plan.twin_input =
                random_word(rng, 200, alphabet) + "\n" + random_word(rng, 4, alphabet) + "\n";
            break;
        }
        case AlgorithmId::Manacher: {
            const int alphabet = static_cast<int>(cap);
            for (int i = 0; i < 2; ++i) {
                add("small-" + std::to_string(i + 1),
                    random_word(rng, 1 + rng.below(300), alphabet) + "\n");
            }
            add("max-random", random_word(rng, 600000, alphabet) + "\n", true);
            add("max-adversarial", std::string(600000, 'a') + "\n", true);
            plan.twin_input = random_word(rng, 150, alphabet) + "\n";
            break;
        }
        case AlgorithmId::MooreVote: {
            auto majority_input = [&](int n, int distinct_prefix) {
                // The majority value stays below the distinct-prefix band.
                const long long majority = rng.range(-cap, cap - 2 * distinct_prefix - 1);
                std::vector<long long> vals;
                vals.reserve(static_cast<size_t>(n));
                for (int i = 0; i < distinct_prefix; ++i) {
                    vals.push_back(cap - i);
                }
                const int maj_count = n - distinct_prefix;
                for (int i = 0; i < maj_count; ++i) vals.push_back(majority);
                if (distinct_prefix == 0) {
                    // Plain random case: majority scattered among random noise.
                    const int noise = n / 2 - 1;
                    for (int i = 0; i < noise && static_cast<int>(vals.size()) > n / 2 + 1; ++i) {
                        vals[vals.size() - 1 - static_cast<size_t>(i)] = rng.range(-cap, cap);
                    }
                    for (size_t i = vals.size() - 1; i > 0; --i) {
                        std::swap(vals[i], vals[rng.below(i + 1)]);
                    }
                }
                std::string in = std::to_string(n) + "\n";
                for (size_t i = 0; i < vals.size(); ++i) {
                    if (i) in += ' ';
                    in += std::to_string(vals[i]);
                }
                in += "\n";
                return in;
            };
            add("small-1", majority_input(2 * static_cast<int>(rng.range(1, 50)) + 1, 0));
            add("small-2", majority_input(2 * static_cast<int>(rng.range(1, 50)) + 1, 0));
            add("max-random", majority_input(1500001, 0), true);
            add("max-adversarial", majority_input(1500001, 1500), true);
            plan.twin_input = majority_input(101, 0);
            break;
        }
        case AlgorithmId::Gray: {
            auto queries_input = [&](int t, long long hi) {
                std::string in = std::to_string(t) + "\n";
                for (int i = 0; i < t; ++i) in += std::to_string(rng.range(0, hi)) + "\n";
                return in;
            };
            add("small-1", queries_input(static_cast<int>(rng.range(1, 40)), std::min(cap, 1000LL)));
            add("small-2", queries_input(static_cast<int>(rng.range(1, 40)), std::min(cap, 1000LL)));
            // Large indices make per-query stepping astronomically slow.
            std::string max_in = std::to_string(60000) + "\n";
            for (int i = 0; i < 60000; ++i) {
                max_in += std::to_string(100000000LL + rng.range(0, std::max(cap, 1000000LL))) + "\n";
            }
            add("max-random", std::move(max_in), true);
            plan.twin_input = queries_input(10, 2000);
            break;
        }
        case AlgorithmId::Strassen: {
            auto matrix_input = [&](int n) {
                std::string in = std::to_string(n) + "\n";
                for (int m = 0; m < 2; ++m) {
                    for (int i = 0; i < n; ++i) {
                        for (int j = 0; j < n; ++j) {
                            if (j) in += ' ';
                            in += std::to_string(rng.range(-cap, cap));
                        }
                        in += "\n";
                    }
                }
                return in;
            };
            auto sparse_input = [&](int n) {
                std::string in = std::to_string(n) + "\n";
                for (int m = 0; m < 2; ++m) {
                    for (int i = 0; i < n; ++i) {
                        for (int j = 0; j < n; ++j) {
                            if (j) in += ' ';
                            in += rng.below(4) == 0 ? '1' : '0';
                        }
                        in += "\n";
                    }
                }
                return in;
            };
            add("small-1", matrix_input(1 << rng.range(2, 4)));
            add("small-2", matrix_input(1 << rng.range(2, 5)));
            // 0/1 entries keep the 512x512 product under the stdout cap.
            add("max-random", sparse_input(512), true);
            plan.twin_input = sparse_input(8);
            break;
        }
    }
    return plan;
}

}  // namespace

std::vector<TestCase> generate_cases(const TaskSpec& spec, uint64_t seed) {
    Rng rng(Rng::derive(seed, static_cast<uint64_t>(spec.algo),
                        static_cast<uint64_t>(spec.variant), 0xCA5E));
    CasePlan plan = plan_cases(spec, rng);

    // Self-check: the down-sampled twin must agree across both solver routes.
    const std::string ref_out = solve_reference(spec.algo, plan.twin_input);
    const std::string naive_out = solve_naive(spec.algo, plan.twin_input);
    if (ref_out != naive_out) {
        throw OracleDisagreement(spec.id() + ": reference and foil disagree on the twin instance");
    }

    std::vector<TestCase> cases;
    cases.reserve(plan.cases.size());
    for (auto& pc : plan.cases) {
        TestCase tc;
        tc.name = std::move(pc.name);
        tc.expected_stdout = solve_reference(spec.algo, pc.input);
        tc.stdin_data = std::move(pc.input);
        tc.max_size_marker = pc.max_marker;
        cases.push_back(std::move(tc));
    }
    return cases;
}

std::vector<TaskSpec> generate_bundle(AlgorithmId algo, int count, uint64_t seed) {
    std::vector<TaskSpec> specs = generate_variants(algo, count, seed);
    for (auto& spec : specs) {
        spec.cases = generate_cases(spec, Rng::derive(seed, 0xB0Dull, static_cast<uint64_t>(spec.variant)));
        spec.validate();
        // Post-generation re-verification of every emitted case.
        for (const auto& tc : spec.cases) {
            if (solve_reference(algo, tc.stdin_data) != tc.expected_stdout) {
                throw OracleDisagreement(spec.id() + ": case " + tc.name +
                                         " fails post-generation re-verification");
            }
        }
    }
    return specs;
}

// ---------------------------------------------------------------------------
// Calibration
// ---------------------------------------------------------------------------

namespace {

const TestCase& max_size_case(const TaskSpec& spec) {
    const TestCase* found = nullptr;
    for (const auto& c : spec.cases) {
        if (c.max_size_marker) found = &c;
    }
    if (!found) throw MalformedInput(spec.id() + ": no max-size case");
    return *found;
}

}  // namespace

bool CalibrationReport::all_sound() const {
    if (rows.empty()) return false;
    for (const auto& r : rows) {
        if (!r.sound) return false;
    }
    return true;
}

std::string CalibrationReport::to_text() const {
    std::string out =
        "spec            median_ref  tau     headroom  ref_max  peak_mem_mb  mu_mb  foil     sound\n";
    for (const auto& r : rows) {
        char buf[256];
        std::snprintf(buf, sizeof(buf), "%-15s %-11.3f %-7.3f %-9.2f %-8.3f %-12.1f %-6.1f %-8s %s\n",
                      r.spec_id.c_str(), r.median_ref_s, r.tau_s, r.headroom, r.ref_all_cases_max_s,
                      static_cast<double>(r.peak_mem_bytes) / (1 << 20),
                      static_cast<double>(r.mu_bytes) / (1 << 20), r.foil_outcome.c_str(),
                      r.sound ? "yes" : "NO");
        out += buf;
    }
    return out;
}

std::string CalibrationReport::to_json() const {
    json j = json::array();
    for (const auto& r : rows) {
        j.push_back({{"spec", r.spec_id},
                     {"median_ref_s", r.median_ref_s},
                     {"tau_s", r.tau_s},
                     {"headroom", r.headroom},
                     {"ref_all_cases_max_s", r.ref_all_cases_max_s},
                     {"peak_mem_bytes", r.peak_mem_bytes},
                     {"mu_bytes", r.mu_bytes},
                     {"foil_outcome", r.foil_outcome},
                     {"sound", r.sound}});
    }
    return j.dump(2);
}

CalibrationRow calibrate_limits(TaskSpec& spec, const Sandbox& sandbox,
                                const CalibrationSettings& settings) {
    if (settings.trials < 1) {
        throw ArenaError("calibrate_limits: trials must be >= 1; no limits emitted");
    }
    const TestCase& max_case = max_size_case(spec);
    const GuestProgram& prog = guest_program(spec.algo);
    const std::string ref_script = splice_scaffold(spec.scaffold, prog.reference);
    const std::string foil_script = splice_scaffold(spec.scaffold, prog.foil);

    CalibrationRow row;
    row.spec_id = spec.id();

    // Timing runs are serialized (exclusive) on an otherwise idle worker.
    std::vector<double> times;
    uint64_t peak = 0;
    const SandboxLimits provisional{settings.provisional_time_s,
                                    std::max<uint64_t>(spec.mem_limit_bytes, 1ULL << 30)};
    for (int t = 0; t < settings.trials; ++t) {
        ExecResult res = sandbox.run_snippet(ref_script, max_case.stdin_data, provisional, true);
        if (res.exit != ExitKind::Completed) {
            throw CalibrationInversion(spec.id() + ": reference guest failed on the max-size case (" +
                                       std::string(res.exit == ExitKind::TimedOut ? "timeout"
                                                                                  : "crash") +
                                       ")");
        }
        if (normalize_output(res.stdout_data) != normalize_output(max_case.expected_stdout)) {
            throw OracleDisagreement(spec.id() + ": reference guest output mismatch during timing");
        }
        times.push_back(res.wall_time_s);
        peak = std::max(peak, res.peak_mem_bytes);
    }
    std::sort(times.begin(), times.end());
    const double median = times[times.size() / 2];
    const double tau = settings.safety_factor * median;
    const uint64_t mu = std::max<uint64_t>(
        static_cast<uint64_t>(settings.mem_factor * static_cast<double>(peak)),
        settings.min_mem_bytes);
    row.median_ref_s = median;
    row.tau_s = tau;
    row.headroom = tau / median;
    row.peak_mem_bytes = peak;
    row.mu_bytes = mu;

    spec.time_limit_s = tau;
    spec.mem_limit_bytes = mu;

    // The reference must clear every case under the limits it just earned.
    const Verdict ref_verdict = sandbox.run_submission(prog.reference, spec, true);
    if (!ref_verdict.accepted()) {
        throw CalibrationInversion(spec.id() + ": reference guest fails under calibrated limits: " +
                                   ref_verdict.message);
    }
    row.ref_all_cases_max_s = ref_verdict.max_time_s;

    // The foil must exceed tau on the max-size case.
    const ExecResult foil_res =
        sandbox.run_snippet(foil_script, max_case.stdin_data, {tau, mu}, true);
    switch (foil_res.exit) {
        case ExitKind::TimedOut:
            row.foil_outcome = "timeout";
            break;
        case ExitKind::Completed:
            if (normalize_output(foil_res.stdout_data) != normalize_output(max_case.expected_stdout)) {
                throw OracleDisagreement(spec.id() + ": foil completed with a wrong answer");
            }
            row.foil_outcome = "completed";
            throw CalibrationInversion(
                spec.id() + ": foil finished the max-size case within tau (" +
                format_seconds3(foil_res.wall_time_s) + "s <= " + format_seconds3(tau) +
                "s); instance sizes are too small");
        case ExitKind::MemoryKilled:
            row.foil_outcome = "memory";
            throw CalibrationInversion(spec.id() + ": foil exceeded mu before tau");
        case ExitKind::Crashed:
            row.foil_outcome = "crash";
            throw CalibrationInversion(spec.id() + ": foil crashed: " + foil_res.stderr_data);
    }

    row.sound = row.headroom >= 2.0 && ref_verdict.accepted() && row.foil_outcome == "timeout";
    return row;
}

CalibrationReport calibrate_bundle(std::vector<TaskSpec>& specs, const Sandbox& sandbox,
                                   const CalibrationSettings& settings) {
    CalibrationReport report;
    for (auto& spec : specs) {
        report.rows.push_back(calibrate_limits(spec, sandbox, settings));
    }
    return report;
}

}  // namespace arena
