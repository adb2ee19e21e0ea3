#include "arena/guest_programs.hpp"

#include <array>

#include "arena/errors.hpp"

namespace arena {

namespace {

// The shared import preamble of every submission running context.
const std::string kImportBlock = R"PY(import sys
import io
import collections
import heapq
import bisect
import math
import cmath
import random
import decimal
import fractions
import statistics
import operator
import itertools
import functools
import re
import string
import copy
import array
import time


sys.setrecursionlimit(200000)

'''
YOUR CODE IS HERE
'''

)PY";

std::string scaffold_dijkstra() {
    return kImportBlock + R"PY(def main():
    n = int(sys.stdin.readline())
    m = int(sys.stdin.readline())
    graph = [[] for _ in range(n + 1)]
    for _ in range(m):
        u, v, w = map(int, sys.stdin.readline().split())
        graph[int(u)].append((int(v), int(w)))
    s = int(sys.stdin.readline())
    solve(n, m, graph, s)

if __name__ == '__main__':
    main()
)PY";
}

std::string scaffold_edge_list(bool with_source) {
    std::string body = R"PY(def main():
    data = sys.stdin.buffer.read().split()
    ptr = 0
    n = int(data[ptr]); ptr += 1
    m = int(data[ptr]); ptr += 1
    edges = []
    for _ in range(m):
        u = int(data[ptr]); v = int(data[ptr + 1]); w = int(data[ptr + 2]); ptr += 3
        edges.append((u, v, w))
)PY";
    if (with_source) {
        body += R"PY(    s = int(data[ptr]); ptr += 1
    solve(n, m, edges, s)
)PY";
    } else {
        body += R"PY(    solve(n, m, edges)
)PY";
    }
    body += R"PY(
if __name__ == '__main__':
    main()
)PY";
    return kImportBlock + body;
}

std::string scaffold_euclidean() {
    return kImportBlock + R"PY(def main():
    data = sys.stdin.buffer.read().split()
    t = int(data[0])
    pairs = [(int(data[1 + 2 * i]), int(data[2 + 2 * i])) for i in range(t)]
    solve(t, pairs)

if __name__ == '__main__':
    main()
)PY";
}

std::string scaffold_kmp() {
    return kImportBlock + R"PY(def main():
    data = sys.stdin.buffer.read().split()
    text = data[0].decode()
    pattern = data[1].decode()
    solve(text, pattern)

if __name__ == '__main__':
    main()
)PY";
}

std::string scaffold_manacher() {
    return kImportBlock + R"PY(def main():
    s = sys.stdin.buffer.read().split()[0].decode()
    solve(s)

if __name__ == '__main__':
    main()
)PY";
}

std::string scaffold_moore() {
    return kImportBlock + R"PY(def main():
    data = sys.stdin.buffer.read().split()
    n = int(data[0])
    values = [int(x) for x in data[1:1 + n]]
    solve(n, values)

if __name__ == '__main__':
    main()
)PY";
}

std::string scaffold_gray() {
    return kImportBlock + R"PY(def main():
    data = sys.stdin.buffer.read().split()
    t = int(data[0])
    ks = [int(x) for x in data[1:1 + t]]
    solve(t, ks)

if __name__ == '__main__':
    main()
)PY";
}

// The matrix task additionally pins the import hook so guests cannot reach
// for numpy, and parses the flat integer stream.
std::string scaffold_strassen() {
    return R"PY(import sys
import io
import collections
import heapq
import bisect
import math
import cmath
import decimal
import fractions
import statistics
import operator
import itertools
import functools
import re
import string
import copy
import array
import time
import builtins

orig_import = builtins.__import__

def secure_import(name, *args, **kwargs):
    if name == 'numpy':
        raise ImportError("Forbidden: numpy is not allowed")
    return orig_import(name, *args, **kwargs)

builtins.__import__ = secure_import

sys.setrecursionlimit(200000)

'''
YOUR CODE IS HERE
'''

def main():
    data = list(map(int, sys.stdin.buffer.read().split()))
    if not data:
        return

    ptr = 0
    n = data[ptr]
    ptr += 1
    if n <= 0:
        return

    total = n * n
    if len(data) < 1 + total + total:
        return

    flat_a = data[ptr:ptr + total]
    ptr += total
    flat_b = data[ptr:ptr + total]

    a = [flat_a[i * n:(i + 1) * n] for i in range(n)]
    b = [flat_b[i * n:(i + 1) * n] for i in range(n)]

    solve(n, a, b)

if __name__ == '__main__':
    main()
)PY";
}

// --- Dijkstra -------------------------------------------------------------

const GuestProgram kDijkstra = {
    // O(V^2): linear scan over not-yet-finalized nodes.
    R"PY(def solve(n, m, graph, s):
    INF = 10**18
    dist = [INF] * (n + 1)
    dist[s] = 0
    not_finalized = list(range(1, n + 1))
    for _ in range(n):
        u = None
        min_dist = INF
        for node in not_finalized:
            if dist[node] < min_dist:
                min_dist = dist[node]
                u = node
        if u is None:
            break
        not_finalized.remove(u)
        for v, w in graph[u]:
            if dist[u] + w < dist[v]:
                dist[v] = dist[u] + w
    print(' '.join(str(dist[i]) if dist[i] < INF else '-1' for i in range(1, n + 1)))
)PY",
    // O(V*E): full relaxation, V-1 rounds, no early exit.
    R"PY(def solve(n, m, graph, s):
    INF = 10**18
    dist = [INF] * (n + 1)
    dist[s] = 0
    for _ in range(n - 1):
        for u in range(1, n + 1):
            du = dist[u]
            if du == INF:
                continue
            for v, w in graph[u]:
                if du + w < dist[v]:
                    dist[v] = du + w
    print(' '.join(str(dist[i]) if dist[i] < INF else '-1' for i in range(1, n + 1)))
)PY",
};

// --- Floyd-Warshall ---------------------------------------------------------

const GuestProgram kFloydWarshall = {
    R"PY(def solve(n, m, edges):
    INF = 10**18
    dist = [[INF] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        dist[i][i] = 0
    for u, v, w in edges:
        if w < dist[u][v]:
            dist[u][v] = w
    for k in range(1, n + 1):
        dk = dist[k]
        for i in range(1, n + 1):
            dik = dist[i][k]
            if dik >= INF:
                continue
            di = dist[i]
            for j in range(1, n + 1):
                nd = dik + dk[j]
                if nd < di[j]:
                    di[j] = nd
    out = []
    for i in range(1, n + 1):
        out.append(' '.join(str(dist[i][j]) if dist[i][j] < INF else '-1' for j in range(1, n + 1)))
    sys.stdout.write('\n'.join(out) + '\n')
)PY",
    // O(V^2 * E): an independent Bellman-Ford sweep from every source.
    R"PY(def solve(n, m, edges):
    INF = 10**18
    rows = []
    for s in range(1, n + 1):
        dist = [INF] * (n + 1)
        dist[s] = 0
        for _ in range(n - 1):
            for u, v, w in edges:
                du = dist[u]
                if du < INF and du + w < dist[v]:
                    dist[v] = du + w
        rows.append(' '.join(str(dist[j]) if dist[j] < INF else '-1' for j in range(1, n + 1)))
    sys.stdout.write('\n'.join(rows) + '\n')
)PY",
};

// --- Bellman-Ford -----------------------------------------------------------

const GuestProgram kBellmanFord = {
    R"PY(def solve(n, m, edges, s):
    INF = 10**18
    dist = [INF] * (n + 1)
    dist[s] = 0
    for _ in range(n - 1):
        for u, v, w in edges:
            du = dist[u]
            if du < INF and du + w < dist[v]:
                dist[v] = du + w
    print(' '.join(str(dist[i]) if dist[i] < INF else 'INF' for i in range(1, n + 1)))
)PY",
    // O(V^3): all-pairs dynamic programming just to read one row.
    R"PY(def solve(n, m, edges, s):
    INF = 10**18
    dist = [[INF] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        dist[i][i] = 0
    for u, v, w in edges:
        if w < dist[u][v]:
            dist[u][v] = w
    for k in range(1, n + 1):
        dk = dist[k]
        for i in range(1, n + 1):
            dik = dist[i][k]
            if dik >= INF:
                continue
            di = dist[i]
            for j in range(1, n + 1):
                nd = dik + dk[j]
                if nd < di[j]:
                    di[j] = nd
    print(' '.join(str(dist[s][i]) if dist[s][i] < INF else 'INF' for i in range(1, n + 1)))
)PY",
};

// --- Prim -------------------------------------------------------------------

const GuestProgram kPrim = {
    R"PY(def solve(n, m, edges):
    INF = 10**18
    w = [[INF] * (n + 1) for _ in range(n + 1)]
    for u, v, c in edges:
        if u != v and c < w[u][v]:
            w[u][v] = c
            w[v][u] = c
    key = [INF] * (n + 1)
    in_tree = [False] * (n + 1)
    key[1] = 0
    total = 0
    for _ in range(n):
        u = -1
        best = INF
        for i in range(1, n + 1):
            if not in_tree[i] and key[i] < best:
                best = key[i]
                u = i
        in_tree[u] = True
        total += key[u]
        wu = w[u]
        for v in range(1, n + 1):
            if not in_tree[v] and wu[v] < key[v]:
                key[v] = wu[v]
    print(total)
)PY",
    // O(V*E): rescan every edge for each tree extension.
    R"PY(def solve(n, m, edges):
    INF = 10**18
    in_tree = [False] * (n + 1)
    in_tree[1] = True
    count = 1
    total = 0
    while count < n:
        bw = INF
        bu = bv = -1
        for u, v, c in edges:
            if in_tree[u] != in_tree[v] and c < bw:
                bw = c
                bu, bv = u, v
        total += bw
        nxt = bu if not in_tree[bu] else bv
        in_tree[nxt] = True
        count += 1
    print(total)
)PY",
};

// --- Euclidean ---------------------------------------------------------------

const GuestProgram kEuclidean = {
    R"PY(def solve(t, pairs):
    out = []
    for a, b in pairs:
        while b:
            a, b = b, a % b
        out.append(str(a))
    sys.stdout.write('\n'.join(out) + '\n')
)PY",
    // O(min(a, b)) repeated subtraction.
    R"PY(def solve(t, pairs):
    out = []
    for a, b in pairs:
        if a == 0:
            out.append(str(b))
            continue
        if b == 0:
            out.append(str(a))
            continue
        while a != b:
            if a > b:
                a -= b
            else:
                b -= a
        out.append(str(a))
    sys.stdout.write('\n'.join(out) + '\n')
)PY",
};

// --- KMP ----------------------------------------------------------------------

const GuestProgram kKmp = {
    R"PY(def solve(text, pattern):
    n = len(text)
    mlen = len(pattern)
    res = []
    if 0 < mlen <= n:
        fail = [0] * mlen
        k = 0
        for i in range(1, mlen):
            while k and pattern[i] != pattern[k]:
                k = fail[k - 1]
            if pattern[i] == pattern[k]:
                k += 1
            fail[i] = k
        k = 0
        for i in range(n):
            c = text[i]
            while k and c != pattern[k]:
                k = fail[k - 1]
            if c == pattern[k]:
                k += 1
            if k == mlen:
                res.append(i + 2 - mlen)
                k = fail[k - 1]
    print(' '.join(map(str, res)) if res else -1)
)PY",
    R"PY(def solve(text, pattern):
    n = len(text)
    mlen = len(pattern)
    res = []
    if 0 < mlen <= n:
        for start in range(n - mlen + 1):
            j = 0
            while j < mlen and text[start + j] == pattern[j]:
                j += 1
            if j == mlen:
                res.append(start + 1)
    print(' '.join(map(str, res)) if res else -1)
)PY",
};

// --- Manacher -------------------------------------------------------------------

const GuestProgram kManacher = {
    R"PY(def solve(s):
    t = '^#' + '#'.join(s) + '#$'
    m = len(t)
    p = [0] * m
    c = r = 0
    best_len = 0
    best_start = 0
    for i in range(1, m - 1):
        if i < r:
            p[i] = min(r - i, p[2 * c - i])
        while t[i + p[i] + 1] == t[i - p[i] - 1]:
            p[i] += 1
        if i + p[i] > r:
            c, r = i, i + p[i]
        if p[i] > best_len:
            best_len = p[i]
            best_start = (i - p[i]) // 2
    print(s[best_start:best_start + best_len])
)PY",
    // O(n^2) center expansion.
    R"PY(def solve(s):
    n = len(s)
    best_start = 0
    best_len = 0
    for center in range(n):
        l = center
        r = center
        while l >= 0 and r < n and s[l] == s[r]:
            l -= 1
            r += 1
        if r - l - 1 > best_len:
            best_len = r - l - 1
            best_start = l + 1
        l = center
        r = center + 1
        while l >= 0 and r < n and s[l] == s[r]:
            l -= 1
            r += 1
        if r - l - 1 > best_len:
            best_len = r - l - 1
            best_start = l + 1
    print(s[best_start:best_start + best_len])
)PY",
};

// --- Moore vote -------------------------------------------------------------------

const GuestProgram kMooreVote = {
    R"PY(def solve(n, values):
    candidate = None
    count = 0
    for x in values:
        if count == 0:
            candidate = x
            count = 1
        elif x == candidate:
            count += 1
        else:
            count -= 1
    print(candidate)
)PY",
    // O(n^2): count each prefix candidate with a full scan.
    R"PY(def solve(n, values):
    half = n // 2
    for candidate in values:
        count = 0
        for x in values:
            if x == candidate:
                count += 1
        if count > half:
            print(candidate)
            return
)PY",
};

// --- Gray ---------------------------------------------------------------------------

const GuestProgram kGray = {
    R"PY(def solve(t, ks):
    sys.stdout.write('\n'.join(str(k ^ (k >> 1)) for k in ks) + '\n')
)PY",
    // O(k) per query: walk the code one reflection step at a time.
    R"PY(def solve(t, ks):
    out = []
    for k in ks:
        g = 0
        step = 1
        while step <= k:
            if step % 2 == 1:
                g ^= 1
            else:
                g ^= (g & (-g)) << 1
            step += 1
        out.append(str(g))
    sys.stdout.write('\n'.join(out) + '\n')
)PY",
};

// --- Strassen ------------------------------------------------------------------------

const GuestProgram kStrassen = {
    R"PY(def solve(n, a, b):
    from operator import mul as _mul, add as _add

    def addm(x, y):
        return [list(map(_add, rx, ry)) for rx, ry in zip(x, y)]

    def subm(x, y):
        return [[p - q for p, q in zip(rx, ry)] for rx, ry in zip(x, y)]

    def base_mul(x, y):
        cols = list(zip(*y))
        return [[sum(map(_mul, row, col)) for col in cols] for row in x]

    def mulr(x, y, size):
        if size <= 64:
            return base_mul(x, y)
        h = size // 2
        x11 = [r[:h] for r in x[:h]]
        x12 = [r[h:] for r in x[:h]]
        x21 = [r[:h] for r in x[h:]]
        x22 = [r[h:] for r in x[h:]]
        y11 = [r[:h] for r in y[:h]]
        y12 = [r[h:] for r in y[:h]]
        y21 = [r[:h] for r in y[h:]]
        y22 = [r[h:] for r in y[h:]]
        m1 = mulr(addm(x11, x22), addm(y11, y22), h)
        m2 = mulr(addm(x21, x22), y11, h)
        m3 = mulr(x11, subm(y12, y22), h)
        m4 = mulr(x22, subm(y21, y11), h)
        m5 = mulr(addm(x11, x12), y22, h)
        m6 = mulr(subm(x21, x11), addm(y11, y12), h)
        m7 = mulr(subm(x12, x22), addm(y21, y22), h)
        c11 = [[m1[i][j] + m4[i][j] - m5[i][j] + m7[i][j] for j in range(h)] for i in range(h)]
        c12 = addm(m3, m5)
        c21 = addm(m2, m4)
        c22 = [[m1[i][j] - m2[i][j] + m3[i][j] + m6[i][j] for j in range(h)] for i in range(h)]
        return [c11[i] + c12[i] for i in range(h)] + [c21[i] + c22[i] for i in range(h)]

    c = mulr(a, b, n)
    sys.stdout.write('\n'.join(' '.join(map(str, row)) for row in c) + '\n')
)PY",
    R"PY(def solve(n, a, b):
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            s = 0
            for k in range(n):
                s += a[i][k] * b[k][j]
            c[i][j] = s
    sys.stdout.write('\n'.join(' '.join(map(str, row)) for row in c) + '\n')
)PY",
};

}  // namespace

const GuestProgram& guest_program(AlgorithmId algo) {
    switch (algo) {
        case AlgorithmId::Dijkstra: return kDijkstra;
        case AlgorithmId::FloydWarshall: return kFloydWarshall;
        case AlgorithmId::BellmanFord: return kBellmanFord;
        case AlgorithmId::Prim: return kPrim;
        case AlgorithmId::Euclidean: return kEuclidean;
        case AlgorithmId::Kmp: return kKmp;
        case AlgorithmId::Manacher: return kManacher;
        case AlgorithmId::MooreVote: return kMooreVote;
        case AlgorithmId::Gray: return kGray;
        case AlgorithmId::Strassen: return kStrassen;
    }
    throw ArenaError("unknown algorithm id");
}

std::string guest_scaffold(AlgorithmId algo) {
    switch (algo) {
        case AlgorithmId::Dijkstra: return scaffold_dijkstra();
        case AlgorithmId::FloydWarshall: return scaffold_edge_list(false);
        case AlgorithmId::BellmanFord: return scaffold_edge_list(true);
        case AlgorithmId::Prim: return scaffold_edge_list(false);
        case AlgorithmId::Euclidean: return scaffold_euclidean();
        case AlgorithmId::Kmp: return scaffold_kmp();
        case AlgorithmId::Manacher: return scaffold_manacher();
        case AlgorithmId::MooreVote: return scaffold_moore();
        case AlgorithmId::Gray: return scaffold_gray();
        case AlgorithmId::Strassen: return scaffold_strassen();
    }
    throw ArenaError("unknown algorithm id");
}

}  // namespace arena
