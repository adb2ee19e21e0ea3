#include "arena/algorithms.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "arena/errors.hpp"
#include "arena/util.hpp"

namespace arena {

namespace {

constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

// ---------------------------------------------------------------------------
// Wire-format scanner. Token based, tracks the current line so parse errors
// can identify the offending line.
// ---------------------------------------------------------------------------

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    int line() const { return line_; }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    std::string_view next_token(const char* what) {
        skip_ws();
        if (pos_ >= text_.size()) fail(std::string("expected ") + what + ", got end of input");
        size_t start = pos_;
        while (pos_ < text_.size() && !is_ws(text_[pos_])) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    int64_t next_int(const char* what, int64_t lo, int64_t hi) {
        std::string_view tok = next_token(what);
        int64_t value = 0;
        bool neg = false;
        size_t i = 0;
        if (i < tok.size() && (tok[i] == '-' || tok[i] == '+')) {
            neg = tok[i] == '-';
            ++i;
        }
        if (i >= tok.size()) fail(std::string("expected integer for ") + what);
        for (; i < tok.size(); ++i) {
            char c = tok[i];
            if (c < '0' || c > '9') fail(std::string("expected integer for ") + what);
            if (value > (std::numeric_limits<int64_t>::max() - (c - '0')) / 10) {
                fail(std::string(what) + " overflows 64-bit range");
            }
            value = value * 10 + (c - '0');
        }
        if (neg) value = -value;
        if (value < lo || value > hi) {
            fail(std::string(what) + " = " + std::to_string(value) + " out of range [" +
                 std::to_string(lo) + ", " + std::to_string(hi) + "]");
        }
        return value;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw MalformedInput("line " + std::to_string(line_) + ": " + msg);
    }

private:
    static bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

    void skip_ws() {
        while (pos_ < text_.size() && is_ws(text_[pos_])) {
            if (text_[pos_] == '\n') ++line_;
            ++pos_;
        }
    }

    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 1;
};

struct Edge {
    int u;
    int v;
    int64_t w;
};

struct GraphInput {
    int n = 0;
    std::vector<Edge> edges;
    int source = 0;  // only for single-source formats
};

GraphInput parse_graph(Scanner& sc, bool with_source, int max_n, int64_t min_w, int64_t max_w) {
    GraphInput g;
    g.n = static_cast<int>(sc.next_int("n", 1, max_n));
    const int64_t m = sc.next_int("m", 0, 200000);
    g.edges.reserve(static_cast<size_t>(m));
    for (int64_t i = 0; i < m; ++i) {
        Edge e;
        e.u = static_cast<int>(sc.next_int("u", 1, g.n));
        e.v = static_cast<int>(sc.next_int("v", 1, g.n));
        e.w = sc.next_int("w", min_w, max_w);
        g.edges.push_back(e);
    }
    if (with_source) g.source = static_cast<int>(sc.next_int("s", 1, g.n));
    if (!sc.at_end()) sc.fail("trailing data after input");
    return g;
}

std::vector<std::vector<std::pair<int, int64_t>>> adjacency(const GraphInput& g) {
    std::vector<std::vector<std::pair<int, int64_t>>> adj(static_cast<size_t>(g.n) + 1);
    for (const Edge& e : g.edges) adj[static_cast<size_t>(e.u)].emplace_back(e.v, e.w);
    return adj;
}

std::string join_dists(const std::vector<int64_t>& dist, int n, std::string_view unreachable) {
    std::string out;
    for (int i = 1; i <= n; ++i) {
        if (i > 1) out += ' ';
        if (dist[static_cast<size_t>(i)] >= kInf) {
            out += unreachable;
        } else {
            out += std::to_string(dist[static_cast<size_t>(i)]);
        }
    }
    out += '\n';
    return out;
}

// ---------------------------------------------------------------------------
// Dijkstra. Reference: O(V^2) linear-scan selection, lowest-numbered node
// wins distance ties. Naive: exhaustive simple-path enumeration (n <= 10).
// ---------------------------------------------------------------------------

std::string dijkstra_reference(std::string_view input) {
    Scanner sc(input);
    GraphInput g = parse_graph(sc, true, 20000, 0, 1000000);
    auto adj = adjacency(g);
    std::vector<int64_t> dist(static_cast<size_t>(g.n) + 1, kInf);
    std::vector<char> done(static_cast<size_t>(g.n) + 1, 0);
    dist[static_cast<size_t>(g.source)] = 0;
    for (int round = 0; round < g.n; ++round) {
        int u = -1;
        int64_t best = kInf;
        for (int i = 1; i <= g.n; ++i) {
            if (!done[static_cast<size_t>(i)] && dist[static_cast<size_t>(i)] < best) {
                best = dist[static_cast<size_t>(i)];
                u = i;
            }
        }
        if (u < 0) break;
        done[static_cast<size_t>(u)] = 1;
        for (auto [v, w] : adj[static_cast<size_t>(u)]) {
            if (dist[static_cast<size_t>(u)] + w < dist[static_cast<size_t>(v)]) {
                dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + w;
            }
        }
    }
    return join_dists(dist, g.n, "-1");
}

void enumerate_paths(const std::vector<std::vector<std::pair<int, int64_t>>>& adj,
                     std::vector<char>& on_path, std::vector<int64_t>& best, int u,
                     int64_t cost) {
    if (cost < best[static_cast<size_t>(u)]) best[static_cast<size_t>(u)] = cost;
    on_path[static_cast<size_t>(u)] = 1;
    for (auto [v, w] : adj[static_cast<size_t>(u)]) {
        if (!on_path[static_cast<size_t>(v)]) {
            enumerate_paths(adj, on_path, best, v, cost + w);
        }
    }
    on_path[static_cast<size_t>(u)] = 0;
}

std::vector<int64_t> shortest_by_enumeration(const GraphInput& g, int source) {
    auto adj = adjacency(g);
    std::vector<int64_t> best(static_cast<size_t>(g.n) + 1, kInf);
    std::vector<char> on_path(static_cast<size_t>(g.n) + 1, 0);
    enumerate_paths(adj, on_path, best, source, 0);
    return best;
}

std::string dijkstra_naive(std::string_view input) {
    Scanner sc(input);
    GraphInput g = parse_graph(sc, true, 20000, 0, 1000000);
    if (g.n > 10) throw InstanceTooLarge("dijkstra foil: n > 10");
    auto best = shortest_by_enumeration(g, g.source);
    return join_dists(best, g.n, "-1");
}

// ---------------------------------------------------------------------------
// Floyd-Warshall. Reference: O(V^3) dynamic programming. Naive: per-source
// simple-path enumeration (n <= 8).
// ---------------------------------------------------------------------------

std::string render_matrix(const std::vector<std::vector<int64_t>>& dist, int n) {
    std::string out;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (j > 1) out += ' ';
            int64_t d = dist[static_cast<size_t>(i)][static_cast<size_t>(j)];
            out += d >= kInf ? "-1" : std::to_string(d);
        }
        out += '\n';
    }
    return out;
}

std::string floyd_warshall_reference(std::string_view input) {
    Scanner sc(input);
    GraphInput g = parse_graph(sc, false, 1024, 0, 1000000);
    const size_t n = static_cast<size_t>(g.n);
    std::vector<std::vector<int64_t>> dist(n + 1, std::vector<int64_t>(n + 1, kInf));
    for (size_t i = 1; i <= n; ++i) dist[i][i] = 0;
    for (const Edge& e : g.edges) {
        auto& cell = dist[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)];
        cell = std::min(cell, e.w);  // parallel edges keep the cheapest
    }
    for (size_t k = 1; k <= n; ++k) {
        for (size_t i = 1; i <= n; ++i) {
            const int64_t dik = dist[i][k];
            if (dik >= kInf) continue;
            for (size_t j = 1; j <= n; ++j) {
                if (dist[k][j] < kInf && dik + dist[k][j] < dist[i][j]) {
                    dist[i][j] = dik + dist[k][j];
                }
            }
        }
    }
    return render_matrix(dist, g.n);
}

std::string floyd_warshall_naive(std::string_view input) {
    Scanner sc(input);
    GraphInput g = parse_graph(sc, false, 1024, 0, 1000000);
    if (g.n > 8) throw InstanceTooLarge("floyd_warshall foil: n > 8");
    const size_t n = static_cast<size_t>(g.n);
    std::vector<std::vector<int64_t>> dist(n + 1);
    for (size_t s = 1; s <= n; ++s) dist[s] = shortest_by_enumeration(g, static_cast<int>(s));
    std::vector<std::vector<int64_t>> shaped(n + 1, std::vector<int64_t>(n + 1, kInf));
    for (size_t i = 1; i <= n; ++i) {
        for (size_t j = 1; j <= n; ++j) shaped[i][j] = dist[i][j];
    }
    return render_matrix(shaped, g.n);
}

// ---------------------------------------------------------------------------
// Bellman-Ford. Reference: O(V*E) edge relaxation with negative-cycle
// detection (tasks never generate one; detection reports it as malformed).
// Naive: simple-path enumeration, valid in the absence of negative cycles.
// Unreachable nodes print "INF" because -1 is a legal negative distance.
// ---------------------------------------------------------------------------

std::string bellman_ford_reference(std::string_view input) {
    Scanner sc(input);
    GraphInput g = parse_graph(sc, true, 20000, -1000000, 1000000);
    std::vector<int64_t> dist(static_cast<size_t>(g.n) + 1, kInf);
    dist[static_cast<size_t>(g.source)] = 0;
    for (int round = 0; round < g.n - 1; ++round) {
        bool changed = false;
        for (const Edge& e : g.edges) {
            if (dist[static_cast<size_t>(e.u)] < kInf &&
                dist[static_cast<size_t>(e.u)] + e.w < dist[static_cast<size_t>(e.v)]) {
                dist[static_cast<size_t>(e.v)] = dist[static_cast<size_t>(e.u)] + e.w;
                changed = true;
            }
        }
        if (!changed) break;
    }
    for (const Edge& e : g.edges) {
        if (dist[static_cast<size_t>(e.u)] < kInf &&
            dist[static_cast<size_t>(e.u)] + e.w < dist[static_cast<size_t>(e.v)]) {
            throw MalformedInput("graph contains a negative-weight cycle reachable from s");
        }
    }
    return join_dists(dist, g.n, "INF");
}

std::string bellman_ford_naive(std::string_view input) {
    Scanner sc(input);
    GraphInput g = parse_graph(sc, true, 20000, -1000000, 1000000);
    if (g.n > 10) throw InstanceTooLarge("bellman_ford foil: n > 10");
    auto best = shortest_by_enumeration(g, g.source);
    return join_dists(best, g.n, "INF");
}

// ---------------------------------------------------------------------------
// Prim. Reference: O(V^2) with a dense min-edge matrix, lowest-numbered node
// wins key ties. Naive: enumerate all (n-1)-edge subsets that span the graph.
// Output is the MST total weight, which is unique regardless of tie-breaks.
// ---------------------------------------------------------------------------

std::string prim_reference(std::string_view input) {
    Scanner sc(input);
    GraphInput g = parse_graph(sc, false, 3000, 0, 1000000);
    const size_t n = static_cast<size_t>(g.n);
    std::vector<std::vector<int64_t>> w(n + 1, std::vector<int64_t>(n + 1, kInf));
    for (const Edge& e : g.edges) {
        if (e.u == e.v) continue;
        auto& a = w[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)];
        auto& b = w[static_cast<size_t>(e.v)][static_cast<size_t>(e.u)];
        a = std::min(a, e.w);
        b = std::min(b, e.w);
    }
    std::vector<int64_t> key(n + 1, kInf);
    std::vector<char> in_tree(n + 1, 0);
    key[1] = 0;
    int64_t total = 0;
    for (size_t round = 0; round < n; ++round) {
        int u = -1;
        int64_t best = kInf;
        for (size_t i = 1; i <= n; ++i) {
            if (!in_tree[i] && key[i] < best) {
                best = key[i];
                u = static_cast<int>(i);
            }
        }
        if (u < 0) throw MalformedInput("graph is not connected");
        in_tree[static_cast<size_t>(u)] = 1;
        total += key[static_cast<size_t>(u)];
        for (size_t v = 1; v <= n; ++v) {
            if (!in_tree[v] && w[static_cast<size_t>(u)][v] < key[v]) {
                key[v] = w[static_cast<size_t>(u)][v];
            }
        }
    }
    return std::to_string(total) + "\n";
}

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(static_cast<size_t>(n) + 1) {
        for (int i = 0; i <= n; ++i) parent[static_cast<size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(a)] = b;
        return true;
    }
};

std::string prim_naive(std::string_view input) {
    Scanner sc(input);
    GraphInput g = parse_graph(sc, false, 3000, 0, 1000000);
    if (g.n > 8 || g.edges.size() > 24) {
        throw InstanceTooLarge("prim foil: n > 8 or m > 24");
    }
    const int n = g.n;
    const int m = static_cast<int>(g.edges.size());
    const int need = n - 1;
    int64_t best = -1;
    std::vector<int> pick(static_cast<size_t>(std::max(need, 0)));
    // Iterate combinations of edge indices of size n-1.
    auto consider = [&](const std::vector<int>& idx) {
        DisjointSet ds(n);
        int64_t total = 0;
        int joined = 0;
        for (int i : idx) {
            const Edge& e = g.edges[static_cast<size_t>(i)];
            if (e.u == e.v) return;
            if (!ds.unite(e.u, e.v)) return;
            total += e.w;
            ++joined;
        }
        if (joined == need && (best < 0 || total < best)) best = total;
    };
    if (need == 0) {
        best = 0;
    } else if (m >= need) {
        for (int i = 0; i < need; ++i) pick[static_cast<size_t>(i)] = i;
        for (;;) {
            consider(pick);
            int i = need - 1;
            while (i >= 0 && pick[static_cast<size_t>(i)] == m - need + i) --i;
            if (i < 0) break;
            ++pick[static_cast<size_t>(i)];
            for (int j = i + 1; j < need; ++j) {
                pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
            }
        }
    }
    if (best < 0) throw MalformedInput("graph is not connected");
    return std::to_string(best) + "\n";
}

// ---------------------------------------------------------------------------
// Euclidean gcd. Reference: O(log min(a,b)) remainder loop, gcd(a, 0) = a.
// Naive: trial division downward from min(a,b), min <= 1e6.
// ---------------------------------------------------------------------------

std::string euclidean_reference(std::string_view input) {
    Scanner sc(input);
    const int64_t t = sc.next_int("t", 1, 500000);
    std::string out;
    out.reserve(static_cast<size_t>(t) * 4);
    for (int64_t i = 0; i < t; ++i) {
        int64_t a = sc.next_int("a", 0, std::numeric_limits<int64_t>::max());
        int64_t b = sc.next_int("b", 0, std::numeric_limits<int64_t>::max());
        while (b != 0) {
            int64_t r = a % b;
            a = b;
            b = r;
        }
        out += std::to_string(a);
        out += '\n';
    }
    if (!sc.at_end()) sc.fail("trailing data after input");
    return out;
}

std::string euclidean_naive(std::string_view input) {
    Scanner sc(input);
    const int64_t t = sc.next_int("t", 1, 500000);
    if (t > 2000) throw InstanceTooLarge("euclidean foil: t > 2000");
    std::string out;
    for (int64_t i = 0; i < t; ++i) {
        int64_t a = sc.next_int("a", 0, std::numeric_limits<int64_t>::max());
        int64_t b = sc.next_int("b", 0, std::numeric_limits<int64_t>::max());
        int64_t gcd;
        if (a == 0) {
            gcd = b;
        } else if (b == 0) {
            gcd = a;
        } else {
            int64_t lo = std::min(a, b);
            if (lo > 1000000) throw InstanceTooLarge("euclidean foil: min(a,b) > 1e6");
            gcd = 1;
            for (int64_t d = lo; d >= 1; --d) {
                if (a % d == 0 && b % d == 0) {
                    gcd = d;
                    break;
                }
            }
        }
        out += std::to_string(gcd);
        out += '\n';
    }
    if (!sc.at_end()) sc.fail("trailing data after input");
    return out;
}

// ---------------------------------------------------------------------------
// KMP substring search. Reference: failure function + O(n+m) scan. Naive:
// position-by-position quadratic scan (|text|*|pattern| <= 1e8).
// Output: all 1-based match positions, or -1 when none.
// ---------------------------------------------------------------------------

std::string render_positions(const std::vector<size_t>& pos) {
    if (pos.empty()) return "-1\n";
    std::string out;
    for (size_t i = 0; i < pos.size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(pos[i] + 1);
    }
    out += '\n';
    return out;
}

std::pair<std::string, std::string> parse_text_pattern(Scanner& sc) {
    std::string text(sc.next_token("text"));
    std::string pattern(sc.next_token("pattern"));
    if (!sc.at_end()) sc.fail("trailing data after input");
    if (text.size() > 5000000 || pattern.size() > 5000000) {
        sc.fail("string longer than 5e6");
    }
    return {std::move(text), std::move(pattern)};
}

std::string kmp_reference(std::string_view input) {
    Scanner sc(input);
    auto [text, pattern] = parse_text_pattern(sc);
    std::vector<size_t> matches;
    const size_t n = text.size();
    const size_t m = pattern.size();
    if (m > 0 && m <= n) {
        std::vector<size_t> fail(m, 0);
        for (size_t i = 1; i < m; ++i) {
            size_t k = fail[i - 1];
            while (k > 0 && pattern[i] != pattern[k]) k = fail[k - 1];
            if (pattern[i] == pattern[k]) ++k;
            fail[i] = k;
        }
        size_t k = 0;
        for (size_t i = 0; i < n; ++i) {
            while (k > 0 && text[i] != pattern[k]) k = fail[k - 1];
            if (text[i] == pattern[k]) ++k;
            if (k == m) {
                matches.push_back(i + 1 - m);
                k = fail[k - 1];
            }
        }
    }
    return render_positions(matches);
}

std::string kmp_naive(std::string_view input) {
    Scanner sc(input);
    auto [text, pattern] = parse_text_pattern(sc);
    const size_t n = text.size();
    const size_t m = pattern.size();
    if (n * m > 100000000ULL) throw InstanceTooLarge("kmp foil: |text|*|pattern| > 1e8");
    std::vector<size_t> matches;
    if (m > 0 && m <= n) {
        for (size_t start = 0; start + m <= n; ++start) {
            size_t j = 0;
            while (j < m && text[start + j] == pattern[j]) ++j;
            if (j == m) matches.push_back(start);
        }
    }
    return render_positions(matches);
}

// ---------------------------------------------------------------------------
// Manacher. Reference: O(n) with sentinel transform; output is the leftmost
// longest palindromic substring. Naive: all-substrings scan, longest length
// first (n <= 300).
// ---------------------------------------------------------------------------

std::string manacher_reference(std::string_view input) {
    Scanner sc(input);
    std::string s(sc.next_token("s"));
    if (!sc.at_end()) sc.fail("trailing data after input");
    if (s.size() > 5000000) sc.fail("string longer than 5e6");
    // Transformed string ^#a#b#...#$ ; radius array over it.
    const size_t n = s.size();
    std::string t;
    t.reserve(2 * n + 3);
    t += '^';
    for (char c : s) {
        t += '#';
        t += c;
    }
    t += "#$";
    std::vector<size_t> radius(t.size(), 0);
    size_t center = 0;
    size_t right = 0;
    size_t best_len = 0;
    size_t best_start = 0;
    for (size_t i = 1; i + 1 < t.size(); ++i) {
        if (i < right) radius[i] = std::min(right - i, radius[2 * center - i]);
        while (t[i + radius[i] + 1] == t[i - radius[i] - 1]) ++radius[i];
        if (i + radius[i] > right) {
            center = i;
            right = i + radius[i];
        }
        const size_t len = radius[i];
        if (len > best_len) {
            best_len = len;
            best_start = (i - radius[i]) / 2;
        }
    }
    return s.substr(best_start, best_len) + "\n";
}

std::string manacher_naive(std::string_view input) {
    Scanner sc(input);
    std::string s(sc.next_token("s"));
    if (!sc.at_end()) sc.fail("trailing data after input");
    if (s.size() > 300) throw InstanceTooLarge("manacher foil: n > 300");
    const size_t n = s.size();
    auto is_pal = [&](size_t start, size_t len) {
        for (size_t i = 0; i < len / 2; ++i) {
            if (s[start + i] != s[start + len - 1 - i]) return false;
        }
        return true;
    };
    for (size_t len = n; len >= 1; --len) {
        for (size_t start = 0; start + len <= n; ++start) {
            if (is_pal(start, len)) return s.substr(start, len) + "\n";
        }
    }
    return "\n";
}

// ---------------------------------------------------------------------------
// Boyer-Moore majority vote. Reference: one-pass candidate + verify count.
// Naive: full count per prefix candidate (n <= 5000). A majority element is
// guaranteed by the task; its absence is malformed input.
// ---------------------------------------------------------------------------

std::vector<int64_t> parse_values(Scanner& sc, int64_t max_n) {
    const int64_t n = sc.next_int("n", 1, max_n);
    std::vector<int64_t> vals(static_cast<size_t>(n));
    for (int64_t i = 0; i < n; ++i) {
        vals[static_cast<size_t>(i)] = sc.next_int("value", -1000000000, 1000000000);
    }
    if (!sc.at_end()) sc.fail("trailing data after input");
    return vals;
}

std::string moore_vote_reference(std::string_view input) {
    Scanner sc(input);
    auto vals = parse_values(sc, 5000000);
    int64_t candidate = 0;
    size_t count = 0;
    for (int64_t x : vals) {
        if (count == 0) {
            candidate = x;
            count = 1;
        } else if (x == candidate) {
            ++count;
        } else {
            --count;
        }
    }
    size_t occurrences = 0;
    for (int64_t x : vals) {
        if (x == candidate) ++occurrences;
    }
    if (occurrences * 2 <= vals.size()) throw MalformedInput("no majority element present");
    return std::to_string(candidate) + "\n";
}

std::string moore_vote_naive(std::string_view input) {
    Scanner sc(input);
    auto vals = parse_values(sc, 5000000);
    if (vals.size() > 5000) throw InstanceTooLarge("moore_vote foil: n > 5000");
    for (int64_t candidate : vals) {
        size_t count = 0;
        for (int64_t x : vals) {
            if (x == candidate) ++count;
        }
        if (count * 2 > vals.size()) return std::to_string(candidate) + "\n";
    }
    throw MalformedInput("no majority element present");
}

// ---------------------------------------------------------------------------
// Gray code. Reference: O(1) formula k ^ (k >> 1) per query. Naive: step an
// incremental Gray counter k times (k <= 2e6, total steps <= 5e6).
// ---------------------------------------------------------------------------

constexpr int64_t kMaxGrayIndex = int64_t(1) << 62;

std::string gray_reference(std::string_view input) {
    Scanner sc(input);
    const int64_t t = sc.next_int("t", 1, 1000000);
    std::string out;
    out.reserve(static_cast<size_t>(t) * 8);
    for (int64_t i = 0; i < t; ++i) {
        const uint64_t k = static_cast<uint64_t>(sc.next_int("k", 0, kMaxGrayIndex - 1));
        out += std::to_string(k ^ (k >> 1));
        out += '\n';
    }
    if (!sc.at_end()) sc.fail("trailing data after input");
    return out;
}

std::string gray_naive(std::string_view input) {
    Scanner sc(input);
    const int64_t t = sc.next_int("t", 1, 1000000);
    if (t > 1000) throw InstanceTooLarge("gray foil: t > 1000");
    uint64_t total_steps = 0;
    std::string out;
    for (int64_t i = 0; i < t; ++i) {
        const uint64_t k = static_cast<uint64_t>(sc.next_int("k", 0, kMaxGrayIndex - 1));
        if (k > 2000000) throw InstanceTooLarge("gray foil: k > 2e6");
        total_steps += k;
        if (total_steps > 5000000) throw InstanceTooLarge("gray foil: total steps > 5e6");
        uint64_t g = 0;
        for (uint64_t step = 1; step <= k; ++step) {
            if (step % 2 == 1) {
                g ^= 1;
            } else {
                g ^= (g & (~g + 1)) << 1;  // flip the bit left of the lowest set bit
            }
        }
        out += std::to_string(g);
        out += '\n';
    }
    if (!sc.at_end()) sc.fail("trailing data after input");
    return out;
}

// ---------------------------------------------------------------------------
// Strassen. Reference: divide-and-conquer with 7 recursive products, naive
// base case below 32. Falls back to arbitrary-precision arithmetic when the
// worst-case intermediate bound does not fit in 64 bits, so grading never
// depends on machine word size. Naive: O(n^3) triple loop.
// ---------------------------------------------------------------------------

template <typename T>
using Mat = std::vector<T>;  // row-major n*n

template <typename T>
Mat<T> mat_add(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

template <typename T>
Mat<T> mat_sub(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

template <typename T>
Mat<T> mat_naive_mul(const Mat<T>& a, const Mat<T>& b, size_t n) {
    Mat<T> c(n * n, T(0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t k = 0; k < n; ++k) {
            const T& aik = a[i * n + k];
            for (size_t j = 0; j < n; ++j) {
                c[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    return c;
}

template <typename T>
Mat<T> quadrant(const Mat<T>& m, size_t n, size_t qi, size_t qj) {
    const size_t h = n / 2;
    Mat<T> q(h * h);
    for (size_t i = 0; i < h; ++i) {
        for (size_t j = 0; j < h; ++j) {
            q[i * h + j] = m[(qi * h + i) * n + (qj * h + j)];
        }
    }
    return q;
}

template <typename T>
void place(Mat<T>& m, size_t n, size_t qi, size_t qj, const Mat<T>& q) {
    const size_t h = n / 2;
    for (size_t i = 0; i < h; ++i) {
        for (size_t j = 0; j < h; ++j) {
            m[(qi * h + i) * n + (qj * h + j)] = q[i * h + j];
        }
    }
}

template <typename T>
Mat<T> strassen_mul(const Mat<T>& a, const Mat<T>& b, size_t n, size_t base) {
    if (n <= base) return mat_naive_mul(a, b, n);
    auto a11 = quadrant(a, n, 0, 0), a12 = quadrant(a, n, 0, 1);
    auto a21 = quadrant(a, n, 1, 0), a22 = quadrant(a, n, 1, 1);
    auto b11 = quadrant(b, n, 0, 0), b12 = quadrant(b, n, 0, 1);
    auto b21 = quadrant(b, n, 1, 0), b22 = quadrant(b, n, 1, 1);
    const size_t h = n / 2;
    auto m1 = strassen_mul(mat_add(a11, a22), mat_add(b11, b22), h, base);
    auto m2 = strassen_mul(mat_add(a21, a22), b11, h, base);
    auto m3 = strassen_mul(a11, mat_sub(b12, b22), h, base);
    auto m4 = strassen_mul(a22, mat_sub(b21, b11), h, base);
    auto m5 = strassen_mul(mat_add(a11, a12), b22, h, base);
    auto m6 = strassen_mul(mat_sub(a21, a11), mat_add(b11, b12), h, base);
    auto m7 = strassen_mul(mat_sub(a12, a22), mat_add(b21, b22), h, base);
    Mat<T> c(n * n, T(0));
    place(c, n, 0, 0, mat_add(mat_sub(mat_add(m1, m4), m5), m7));
    place(c, n, 0, 1, mat_add(m3, m5));
    place(c, n, 1, 0, mat_add(m2, m4));
    place(c, n, 1, 1, mat_add(mat_add(mat_sub(m1, m2), m3), m6));
    return c;
}

constexpr size_t kStrassenBase = 32;

struct StrassenInput {
    size_t n = 0;
    Mat<int64_t> a;
    Mat<int64_t> b;
};

StrassenInput parse_strassen(Scanner& sc) {
    StrassenInput in;
    const int64_t n = sc.next_int("n", 1, 1024);
    if ((n & (n - 1)) != 0) sc.fail("n must be a power of two");
    in.n = static_cast<size_t>(n);
    in.a.resize(in.n * in.n);
    in.b.resize(in.n * in.n);
    for (auto& x : in.a) {
        x = sc.next_int("A entry", std::numeric_limits<int64_t>::min() / 2,
                        std::numeric_limits<int64_t>::max() / 2);
    }
    for (auto& x : in.b) {
        x = sc.next_int("B entry", std::numeric_limits<int64_t>::min() / 2,
                        std::numeric_limits<int64_t>::max() / 2);
    }
    if (!sc.at_end()) sc.fail("trailing data after input");
    return in;
}

// Worst-case intermediate magnitude: pre-multiply sums double per level, the
// base product accumulates base_n terms, and combines add a factor <= 4 per
// level on the way back up -> 16^levels * base_n * maxA * maxB.
bool fits_int64(const StrassenInput& in, size_t base) {
    long double max_a = 0, max_b = 0;
    for (int64_t x : in.a) max_a = std::max(max_a, static_cast<long double>(std::abs(x)));
    for (int64_t x : in.b) max_b = std::max(max_b, static_cast<long double>(std::abs(x)));
    if (max_a == 0 || max_b == 0) return true;
    size_t levels = 0;
    size_t n = in.n;
    while (n > base) {
        n /= 2;
        ++levels;
    }
    const long double bound =
        std::pow(16.0L, static_cast<long double>(levels)) * static_cast<long double>(n) * max_a * max_b;
    return bound < 4.0e18L;
}

template <typename T>
std::string render_product(const Mat<T>& c, size_t n);

template <>
std::string render_product<int64_t>(const Mat<int64_t>& c, size_t n) {
    std::string out;
    out.reserve(n * n * 4);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (j > 0) out += ' ';
            out += std::to_string(c[i * n + j]);
        }
        out += '\n';
    }
    return out;
}

template <>
std::string render_product<mpz_class>(const Mat<mpz_class>& c, size_t n) {
    std::string out;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (j > 0) out += ' ';
            out += c[i * n + j].get_str();
        }
        out += '\n';
    }
    return out;
}

Mat<mpz_class> widen(const Mat<int64_t>& m) {
    Mat<mpz_class> out(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        out[i] = mpz_class(static_cast<long>(m[i]));
    }
    return out;
}

std::string strassen_reference(std::string_view input) {
    Scanner sc(input);
    StrassenInput in = parse_strassen(sc);
    if (fits_int64(in, kStrassenBase)) {
        return render_product(strassen_mul(in.a, in.b, in.n, kStrassenBase), in.n);
    }
    return render_product(strassen_mul(widen(in.a), widen(in.b), in.n, kStrassenBase), in.n);
}

std::string strassen_naive(std::string_view input) {
    Scanner sc(input);
    StrassenInput in = parse_strassen(sc);
    if (fits_int64(in, in.n)) {  // levels = 0: bound is n * maxA * maxB
        return render_product(mat_naive_mul(in.a, in.b, in.n), in.n);
    }
    return render_product(mat_naive_mul(widen(in.a), widen(in.b), in.n), in.n);
}

}  // namespace

std::string_view algorithm_name(AlgorithmId id) {
    switch (id) {
        case AlgorithmId::Dijkstra: return "dijkstra";
        case AlgorithmId::FloydWarshall: return "floyd_warshall";
        case AlgorithmId::BellmanFord: return "bellman_ford";
        case AlgorithmId::Prim: return "prim";
        case AlgorithmId::Euclidean: return "euclidean";
        case AlgorithmId::Kmp: return "kmp";
        case AlgorithmId::Manacher: return "manacher";
        case AlgorithmId::MooreVote: return "moore_vote";
        case AlgorithmId::Gray: return "gray";
        case AlgorithmId::Strassen: return "strassen";
    }
    throw ArenaError("unknown algorithm id");
}

AlgorithmId algorithm_from_name(std::string_view s) {
    std::string key = to_lower(s);
    for (auto& c : key) {
        if (c == '-' || c == ' ') c = '_';
    }
    for (AlgorithmId id : kAllAlgorithms) {
        if (key == algorithm_name(id)) return id;
    }
    throw ArenaError("unknown algorithm: " + std::string(s));
}

ComplexityInfo algorithm_complexity(AlgorithmId id) {
    switch (id) {
        case AlgorithmId::Dijkstra: return {"O(V^2)", "O(V!)"};
        case AlgorithmId::FloydWarshall: return {"O(V^3)", "O(V * V!)"};
        case AlgorithmId::BellmanFord: return {"O(V*E)", "O(V!)"};
        case AlgorithmId::Prim: return {"O(V^2)", "O(C(E, V-1))"};
        case AlgorithmId::Euclidean: return {"O(log min(a,b))", "O(min(a,b))"};
        case AlgorithmId::Kmp: return {"O(n + m)", "O(n * m)"};
        case AlgorithmId::Manacher: return {"O(n)", "O(n^3)"};
        case AlgorithmId::MooreVote: return {"O(n)", "O(n^2)"};
        case AlgorithmId::Gray: return {"O(1) per query", "O(k) per query"};
        case AlgorithmId::Strassen: return {"O(n^log2(7))", "O(n^3)"};
    }
    throw ArenaError("unknown algorithm id");
}

std::string solve_reference(AlgorithmId algo, std::string_view input) {
    switch (algo) {
        case AlgorithmId::Dijkstra: return dijkstra_reference(input);
        case AlgorithmId::FloydWarshall: return floyd_warshall_reference(input);
        case AlgorithmId::BellmanFord: return bellman_ford_reference(input);
        case AlgorithmId::Prim: return prim_reference(input);
        case AlgorithmId::Euclidean: return euclidean_reference(input);
        case AlgorithmId::Kmp: return kmp_reference(input);
        case AlgorithmId::Manacher: return manacher_reference(input);
        case AlgorithmId::MooreVote: return moore_vote_reference(input);
        case AlgorithmId::Gray: return gray_reference(input);
        case AlgorithmId::Strassen: return strassen_reference(input);
    }
    throw ArenaError("unknown algorithm id");
}

std::string solve_naive(AlgorithmId algo, std::string_view input) {
    switch (algo) {
        case AlgorithmId::Dijkstra: return dijkstra_naive(input);
        case AlgorithmId::FloydWarshall: return floyd_warshall_naive(input);
        case AlgorithmId::BellmanFord: return bellman_ford_naive(input);
        case AlgorithmId::Prim: return prim_naive(input);
        case AlgorithmId::Euclidean: return euclidean_naive(input);
        case AlgorithmId::Kmp: return kmp_naive(input);
        case AlgorithmId::Manacher: return manacher_naive(input);
        case AlgorithmId::MooreVote: return moore_vote_naive(input);
        case AlgorithmId::Gray: return gray_naive(input);
        case AlgorithmId::Strassen: return strassen_naive(input);
    }
    throw ArenaError("unknown algorithm id");
}

namespace bench {

// Raw multiply entry points for the empirical scaling check; no parsing cost.
std::vector<long long> strassen_multiply(const std::vector<long long>& a,
                                         const std::vector<long long>& b, size_t n) {
    return strassen_mul(a, b, n, kStrassenBase);
}

std::vector<long long> naive_multiply(const std::vector<long long>& a,
                                      const std::vector<long long>& b, size_t n) {
    return mat_naive_mul(a, b, n);
}

}  // namespace bench

}  // namespace arena
