#pragma once

#include <functional>
#include <optional>

#include "tptri/embedded_graph.hpp"
#include "tptri/graph.hpp"

namespace tptri {

enum class CertKind { K4, ODD_HOLE, C7BAR, LOOSE_ODD_WHEEL, NON_EULERIAN };

inline const char* cert_kind_name(CertKind k) {
    switch (k) {
        case CertKind::K4: return "K4";
        case CertKind::ODD_HOLE: return "ODD_HOLE";
        case CertKind::C7BAR: return "C7BAR";
        case CertKind::LOOSE_ODD_WHEEL: return "LOOSE_ODD_WHEEL";
        case CertKind::NON_EULERIAN: return "NON_EULERIAN";
    }
    return "?";
}

/// Replay-checkable witness. For LOOSE_ODD_WHEEL the cycle is stored in
/// `cycle` with the hub and the three odd neighbours alongside; other kinds
/// use `vertices` only.
struct Certificate {
    CertKind kind = CertKind::K4;
    std::vector<int> vertices;
    int hub = -1;
    std::vector<int> cycle;
    std::array<int, 3> odd_neighbours{-1, -1, -1};

    /// Single-line record for CLI output.
    std::string to_json() const {
        auto list = [](const std::vector<int>& xs) {
            std::string s = "[";
            for (size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
            return s + "]";
        };
        std::string s = "{\"kind\":\"" + std::string(cert_kind_name(kind)) + "\"";
        if (kind == CertKind::LOOSE_ODD_WHEEL) {
            s += ",\"hub\":" + std::to_string(hub);
            s += ",\"cycle\":" + list(cycle);
            s += ",\"odd_neighbours\":[" + std::to_string(odd_neighbours[0]) + "," +
                 std::to_string(odd_neighbours[1]) + "," + std::to_string(odd_neighbours[2]) + "]";
        } else {
            s += ",\"vertices\":" + list(vertices);
        }
        return s + "}";
    }
};

// ---------------------------------------------------------------------------
// Induced cycle enumeration, shared by the odd-hole detector, the TSTAB row
// builder and the loose-odd-wheel search. Cycles are visited with their
// minimum vertex first and the smaller of the two neighbours second; scan
// order is deterministic. Callback returns false to stop the enumeration.
// `avoid`, when non-negative, excludes one vertex from all cycles.
// ---------------------------------------------------------------------------

template <class F>
void for_each_induced_cycle(const Graph& g, int min_len, bool odd_only, F&& cb, int avoid = -1) {
    int n = g.num_vertices();
    std::vector<int> path;
    std::vector<char> in_path(n, 0);
    if (avoid >= 0) in_path[avoid] = 1;
    bool stop = false;

    auto extendable = [&](int w) {
        // w may touch only the current path tip
        for (size_t i = 0; i + 1 < path.size(); ++i)
            if (g.adjacent(w, path[i])) return false;
        return true;
    };

    std::function<void()> dfs = [&]() {
        if (stop) return;
        int s = path.front();
        int last = path.back();
        for (int w : g.neighbours(last)) {
            if (stop) return;
            if (w <= s || in_path[w]) continue;
            if (g.adjacent(w, s) && path.size() >= 2) {
                // candidate closure: w_adjacencies within path must be {last, s}
                bool ok = true;
                for (size_t i = 1; i + 1 < path.size(); ++i)
                    if (g.adjacent(w, path[i])) { ok = false; break; }
                if (ok && path[1] < w) {
                    int len = static_cast<int>(path.size()) + 1;
                    if (len >= min_len && (!odd_only || len % 2 == 1)) {
                        std::vector<int> cyc = path;
                        cyc.push_back(w);
                        if (!cb(cyc)) { stop = true; return; }
                    }
                }
                continue;  // a vertex adjacent to s can only close, never extend
            }
            if (!extendable(w)) continue;
            path.push_back(w);
            in_path[w] = 1;
            dfs();
            in_path[w] = 0;
            path.pop_back();
        }
    };

    for (int s = 0; s < n && !stop; ++s) {
        if (s == avoid) continue;
        path.assign(1, s);
        std::fill(in_path.begin(), in_path.end(), 0);
        if (avoid >= 0) in_path[avoid] = 1;
        in_path[s] = 1;
        dfs();
    }
}

// ---------------------------------------------------------------------------
// Detectors
// ---------------------------------------------------------------------------

inline std::optional<Certificate> find_k4(const Graph& g) {
    int n = g.num_vertices();
    for (int a = 0; a < n; ++a)
        for (int b : g.neighbours(a)) {
            if (b <= a) continue;
            for (int c : g.neighbours(a)) {
                if (c <= b || !g.adjacent(b, c)) continue;
                for (int d : g.neighbours(a)) {
                    if (d <= c || !g.adjacent(b, d) || !g.adjacent(c, d)) continue;
                    Certificate cert;
                    cert.kind = CertKind::K4;
                    cert.vertices = {a, b, c, d};
                    return cert;
                }
            }
        }
    return std::nullopt;
}

inline std::optional<Certificate> find_odd_hole(const Graph& g) {
    std::optional<Certificate> out;
    for_each_induced_cycle(g, 5, true, [&](const std::vector<int>& cyc) {
        Certificate cert;
        cert.kind = CertKind::ODD_HOLE;
        cert.vertices = cyc;
        out = std::move(cert);
        return false;
    });
    return out;
}

namespace detail {
inline bool c7bar_pattern(int i, int j) {
    int d = (i - j + 7) % 7;
    return d != 1 && d != 6;  // complement of the 7-cycle
}
}  // namespace detail

inline std::optional<Certificate> find_induced_c7bar(const Graph& g) {
    int n = g.num_vertices();
    if (n < 7) return std::nullopt;
    std::array<int, 7> img{};
    std::vector<char> used(n, 0);

    std::function<bool(int)> place = [&](int pos) -> bool {
        if (pos == 7) return true;
        for (int v = 0; v < n; ++v) {
            if (used[v] || g.degree(v) < 4) continue;
            if (pos > 0 && v <= img[0]) continue;        // position 0 gets the minimum
            if (pos == 6 && v <= img[1]) continue;       // kill the reflection
            bool ok = true;
            for (int q = 0; q < pos && ok; ++q)
                ok = g.adjacent(img[q], v) == detail::c7bar_pattern(q, pos);
            if (!ok) continue;
            img[pos] = v;
            used[v] = 1;
            if (place(pos + 1)) return true;
            used[v] = 0;
        }
        return false;
    };
    if (!place(0)) return std::nullopt;
    Certificate cert;
    cert.kind = CertKind::C7BAR;
    cert.vertices.assign(img.begin(), img.end());
    return cert;
}

namespace detail {

/// DFS over simple paths from `from` to `to` with odd edge count, avoiding
/// vertices marked in `blocked`. Interior vertices are recorded in `interior`.
/// Visits candidates in ascending order; `on_path` receives each found path's
/// interior and returns false to keep searching. States that cannot reach the
/// target with the needed parity (ignoring the visited set, a sound
/// over-approximation) are pruned.
template <class F>
bool for_each_odd_path(const Graph& g, int from, int to, std::vector<char>& blocked, F&& on_path) {
    int n = g.num_vertices();
    // reach[2v + p]: a walk of parity p from v to `to` avoiding the initially
    // blocked vertices exists
    std::vector<char> reach(2 * n, 0);
    {
        std::vector<int> queue{2 * to};
        reach[2 * to] = 1;
        for (size_t q = 0; q < queue.size(); ++q) {
            int v = queue[q] >> 1, p = queue[q] & 1;
            for (int w : g.neighbours(v)) {
                if (w != from && blocked[w]) continue;
                int st = 2 * w + (p ^ 1);
                if (!reach[st]) {
                    reach[st] = 1;
                    queue.push_back(st);
                }
            }
        }
    }
    if (!reach[2 * from + 1]) return false;

    std::vector<int> interior;
    bool done = false;
    std::function<void(int, int)> dfs = [&](int cur, int parity) {
        if (done) return;
        for (int w : g.neighbours(cur)) {
            if (done) return;
            if (w == to) {
                if (parity == 0) {  // adding the closing edge makes it odd
                    if (on_path(interior)) { done = true; return; }
                }
                continue;
            }
            if (blocked[w]) continue;
            if (!reach[2 * w + parity]) continue;  // remaining length must restore odd total
            blocked[w] = 1;
            interior.push_back(w);
            dfs(w, parity ^ 1);
            interior.pop_back();
            blocked[w] = 0;
        }
    };
    dfs(from, 0);  // parity counts edges used so far mod 2
    return done;
}

}  // namespace detail

/// Exhaustive search for an odd cycle C plus a hub with three odd neighbours
/// on C. The cycle need not be induced.
inline std::optional<Certificate> find_loose_odd_wheel(const Graph& g) {
    int n = g.num_vertices();
    std::vector<char> blocked(n, 0);
    for (int hub = 0; hub < n; ++hub) {
        const auto& nb = g.neighbours(hub);
        int d = static_cast<int>(nb.size());
        if (d < 3) continue;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                for (int k = j + 1; k < d; ++k) {
                    int v1 = nb[i], v2 = nb[j], v3 = nb[k];
                    std::optional<Certificate> found;
                    std::fill(blocked.begin(), blocked.end(), 0);
                    blocked[hub] = blocked[v1] = blocked[v2] = blocked[v3] = 1;
                    detail::for_each_odd_path(g, v1, v2, blocked, [&](const std::vector<int>& arc1) {
                        // arc1 interior is blocked while searching the next arc
                        for (int x : arc1) blocked[x] = 1;
                        bool hit = detail::for_each_odd_path(g, v2, v3, blocked, [&](const std::vector<int>& arc2) {
                            for (int x : arc2) blocked[x] = 1;
                            bool hit2 = detail::for_each_odd_path(g, v3, v1, blocked, [&](const std::vector<int>& arc3) {
                                Certificate cert;
                                cert.kind = CertKind::LOOSE_ODD_WHEEL;
                                cert.hub = hub;
                                cert.cycle.push_back(v1);
                                for (int x : arc1) cert.cycle.push_back(x);
                                cert.cycle.push_back(v2);
                                for (int x : arc2) cert.cycle.push_back(x);
                                cert.cycle.push_back(v3);
                                for (int x : arc3) cert.cycle.push_back(x);
                                cert.odd_neighbours = {v1, v2, v3};
                                found = std::move(cert);
                                return true;
                            });
                            for (int x : arc2) blocked[x] = 0;
                            return hit2;
                        });
                        for (int x : arc1) blocked[x] = 0;
                        return hit;
                    });
                    if (found) return found;
                }
    }
    return std::nullopt;
}

inline std::optional<Certificate> find_non_eulerian_vertex(const Graph& g) {
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) % 2 == 1) {
            Certificate cert;
            cert.kind = CertKind::NON_EULERIAN;
            cert.vertices = {v};
            return cert;
        }
    return std::nullopt;
}

inline bool is_eulerian(const Graph& g) { return !find_non_eulerian_vertex(g); }

// ---------------------------------------------------------------------------
// Certificate replay
// ---------------------------------------------------------------------------

inline bool verify(const Graph& g, const Certificate& cert) {
    int n = g.num_vertices();
    auto in_range = [&](int v) { return v >= 0 && v < n; };
    auto all_distinct = [](const std::vector<int>& xs) {
        std::set<int> s(xs.begin(), xs.end());
        return s.size() == xs.size();
    };
    switch (cert.kind) {
        case CertKind::K4: {
            if (cert.vertices.size() != 4) throw std::invalid_argument("K4 certificate needs 4 vertices");
            for (int v : cert.vertices)
                if (!in_range(v)) throw std::invalid_argument("certificate vertex out of range");
            if (!all_distinct(cert.vertices)) return false;
            for (size_t i = 0; i < 4; ++i)
                for (size_t j = i + 1; j < 4; ++j)
                    if (!g.adjacent(cert.vertices[i], cert.vertices[j])) return false;
            return true;
        }
        case CertKind::ODD_HOLE: {
            const auto& c = cert.vertices;
            if (c.size() < 5 || c.size() % 2 == 0) return false;
            for (int v : c)
                if (!in_range(v)) throw std::invalid_argument("certificate vertex out of range");
            if (!all_distinct(c)) return false;
            for (size_t i = 0; i < c.size(); ++i)
                for (size_t j = i + 1; j < c.size(); ++j) {
                    bool consecutive = (j == i + 1) || (i == 0 && j + 1 == c.size());
                    if (g.adjacent(c[i], c[j]) != consecutive) return false;
                }
            return true;
        }
        case CertKind::C7BAR: {
            const auto& c = cert.vertices;
            if (c.size() != 7) throw std::invalid_argument("C7BAR certificate needs 7 vertices");
            for (int v : c)
                if (!in_range(v)) throw std::invalid_argument("certificate vertex out of range");
            if (!all_distinct(c)) return false;
            for (int i = 0; i < 7; ++i)
                for (int j = i + 1; j < 7; ++j)
                    if (g.adjacent(c[i], c[j]) != detail::c7bar_pattern(i, j)) return false;
            return true;
        }
        case CertKind::LOOSE_ODD_WHEEL: {
            const auto& c = cert.cycle;
            if (c.size() < 3 || c.size() % 2 == 0) return false;
            if (!in_range(cert.hub)) throw std::invalid_argument("certificate hub out of range");
            for (int v : c)
                if (!in_range(v)) throw std::invalid_argument("certificate vertex out of range");
            if (!all_distinct(c)) return false;
            if (std::find(c.begin(), c.end(), cert.hub) != c.end()) return false;
            for (size_t i = 0; i < c.size(); ++i)
                if (!g.adjacent(c[i], c[(i + 1) % c.size()])) return false;
            std::array<int, 3> pos{-1, -1, -1};
            for (int t = 0; t < 3; ++t) {
                int v = cert.odd_neighbours[t];
                if (!in_range(v)) throw std::invalid_argument("certificate vertex out of range");
                if (!g.adjacent(cert.hub, v)) return false;
                for (size_t i = 0; i < c.size(); ++i)
                    if (c[i] == v) pos[t] = static_cast<int>(i);
                if (pos[t] < 0) return false;
            }
            if (pos[0] == pos[1] || pos[1] == pos[2] || pos[0] == pos[2]) return false;
            std::sort(pos.begin(), pos.end());
            int len = static_cast<int>(c.size());
            int a1 = pos[1] - pos[0], a2 = pos[2] - pos[1], a3 = len - a1 - a2;
            return a1 % 2 == 1 && a2 % 2 == 1 && a3 % 2 == 1;
        }
        case CertKind::NON_EULERIAN: {
            if (cert.vertices.size() != 1) throw std::invalid_argument("NON_EULERIAN certificate needs 1 vertex");
            if (!in_range(cert.vertices[0])) throw std::invalid_argument("certificate vertex out of range");
            return g.degree(cert.vertices[0]) % 2 == 1;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Perfection on embedded graphs and the Theorem-1 recogniser
// ---------------------------------------------------------------------------

/// On a projective-plane-embeddable graph, perfection reduces to odd holes and
/// the 7-vertex anti-hole: anti-holes on nine or more vertices violate the
/// Euler bound, and the 5-anti-hole is itself a 5-hole.
inline std::pair<bool, std::optional<Certificate>> is_perfect_embedded(const Graph& g) {
    if (auto hole = find_odd_hole(g)) return {false, hole};
    if (auto anti = find_induced_c7bar(g)) return {false, anti};
    return {true, std::nullopt};
}

struct ClassificationReport {
    bool input_valid = false;
    ValidationReport validation;

    bool eulerian = false;
    std::optional<Certificate> non_eulerian;
    bool nice = false;
    std::array<int, 3> non_nice_triangle{-1, -1, -1};

    std::optional<Certificate> k4;
    std::optional<Certificate> c7bar;
    std::optional<Certificate> loose_odd_wheel;
    std::optional<Certificate> odd_hole;

    bool perfect = false;

    // the four assertions of the characterisation; equal by the theorem
    bool t_perfect = false;
    bool strongly_t_perfect = false;
    bool perfect_without_k4 = false;
};

inline ClassificationReport classify(const EmbeddedGraph& g) {
    ClassificationReport rep;
    rep.validation = g.validate(true);
    rep.input_valid = rep.validation.ok;
    if (!rep.input_valid) return rep;

    const Graph& sk = g.skeleton();
    rep.non_eulerian = find_non_eulerian_vertex(sk);
    rep.eulerian = !rep.non_eulerian;
    auto niceness = g.is_nice();
    rep.nice = niceness.nice;
    rep.non_nice_triangle = niceness.triangle;

    rep.k4 = find_k4(sk);
    rep.c7bar = find_induced_c7bar(sk);
    rep.loose_odd_wheel = find_loose_odd_wheel(sk);
    rep.odd_hole = find_odd_hole(sk);

    rep.perfect = !rep.odd_hole && !rep.c7bar;
    rep.t_perfect = !rep.loose_odd_wheel && !rep.c7bar;
    rep.strongly_t_perfect = rep.t_perfect;
    rep.perfect_without_k4 = rep.t_perfect;
    return rep;
}

}  // namespace tptri
