#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>

#include "tptri/detectors.hpp"
#include "tptri/transforms.hpp"

namespace tptri {

// ---------------------------------------------------------------------------
// Pieces. The five building blocks are exposed as labelled fragments; the
// family constructors below use the same face patterns directly.
// ---------------------------------------------------------------------------

enum class PieceKind { D, E, H1, H2, H3 };

struct PieceFragment {
    PieceKind kind = PieceKind::D;
    Graph graph;
    std::map<std::string, int> labels;
    std::vector<std::vector<int>> interfaces;    // boundary paths from e1 to e2
    std::vector<std::pair<int, int>> spine_edges;  // the dotted witness edges
    std::vector<int> hexagon;                    // D, E: open region boundary
};

inline PieceFragment build_piece(PieceKind kind) {
    PieceFragment f;
    f.kind = kind;
    switch (kind) {
        case PieceKind::D: {
            // v 0, a 1, b 2, c 3, d 4, e1 5, e2 6
            f.labels = {{"v", 0}, {"a", 1}, {"b", 2}, {"c", 3}, {"d", 4}, {"e1", 5}, {"e2", 6}};
            f.graph = Graph::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {1, 4},
                                            {5, 1}, {5, 2}, {5, 3}, {5, 4}, {6, 1}, {6, 3}});
            f.hexagon = {5, 2, 3, 6, 1, 4};  // e1 b c e2 a d
            break;
        }
        case PieceKind::E: {
            // x 0, y 1, a1 2, b 3, c1 4, a2 5, d 6, c2 7
            f.labels = {{"x", 0}, {"y", 1}, {"a1", 2}, {"b", 3}, {"c1", 4}, {"a2", 5}, {"d", 6}, {"c2", 7}};
            f.graph = Graph::from_edges(8, {{0, 1}, {0, 5}, {5, 7}, {7, 1}, {0, 2}, {2, 4}, {4, 1},
                                            {1, 6}, {0, 6}, {4, 6}, {5, 6}, {0, 3}, {1, 3}, {2, 3}, {7, 3}});
            f.hexagon = {2, 3, 7, 5, 6, 4};  // a1 b c2 a2 d c1 in drawn cyclic order
            break;
        }
        case PieceKind::H1: {
            // e1 0, e2 1, top path u1 2 u2 3, bottom path w1 4 w2 5, centre m 6
            f.labels = {{"e1", 0}, {"e2", 1}, {"u1", 2}, {"u2", 3}, {"w1", 4}, {"w2", 5}, {"m", 6}};
            f.graph = Graph::from_edges(7, {{0, 2}, {0, 4}, {2, 4}, {2, 3}, {4, 5}, {3, 5}, {1, 3}, {1, 5},
                                            {6, 2}, {6, 3}, {6, 4}, {6, 5}});
            f.interfaces = {{0, 2, 3, 1}, {0, 4, 5, 1}};
            f.spine_edges = {{2, 4}};
            break;
        }
        case PieceKind::H2: {
            // e1 0, e2 1, midline u 2 w 3, pin p 4 (at the e2 end), fans f1 5, f2 6
            f.labels = {{"e1", 0}, {"e2", 1}, {"u", 2}, {"w", 3}, {"p", 4}, {"f1", 5}, {"f2", 6}};
            f.graph = Graph::from_edges(7, {{0, 2}, {2, 3}, {3, 4}, {4, 1}, {0, 5}, {5, 4}, {0, 6}, {6, 4},
                                            {2, 5}, {2, 6}, {3, 5}, {3, 6}});
            f.interfaces = {{0, 5, 4, 1}, {0, 6, 4, 1}};
            f.spine_edges = {{2, 5}, {2, 6}};
            break;
        }
        case PieceKind::H3: {
            // e1 0, e2 1, pin p 2 (at the e1 end), midline r 3 t 4, fans f1 5, f2 6
            f.labels = {{"e1", 0}, {"e2", 1}, {"p", 2}, {"r", 3}, {"t", 4}, {"f1", 5}, {"f2", 6}};
            f.graph = Graph::from_edges(7, {{0, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 5}, {5, 2}, {1, 6}, {6, 2},
                                            {3, 5}, {3, 6}, {4, 5}, {4, 6}});
            f.interfaces = {{0, 2, 5, 1}, {0, 2, 6, 1}};
            break;
        }
    }
    return f;
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

enum class Family { I16, I18, I19 };

struct FamilySpec {
    Family family = Family::I16;
    std::vector<int> params;  // I16: the s_i in {1,2,3}; I18/I19: single n or m
};

struct CatalogEntry {
    std::string name;
    EmbeddedGraph graph;
    std::optional<Certificate> known_certificate;  // loose odd wheel for the t-imperfect members
    std::optional<std::vector<int>> colouring;     // 3-colouring for the t-perfect members
};

namespace detail {

/// Simple odd-path witness search: first simple path of odd edge count from
/// `from` to `to` avoiding `avoid`, candidates ascending.
inline std::optional<std::vector<int>> find_odd_simple_path(const Graph& g, int from, int to,
                                                            const std::vector<int>& avoid) {
    std::vector<char> blocked(g.num_vertices(), 0);
    for (int v : avoid) blocked[v] = 1;
    blocked[from] = 1;
    std::vector<int> path{from};
    std::optional<std::vector<int>> out;
    std::function<bool(int, int)> dfs = [&](int cur, int parity) -> bool {
        for (int w : g.neighbours(cur)) {
            if (w == to) {
                if (parity == 0) {
                    path.push_back(to);
                    out = path;
                    return true;
                }
                continue;
            }
            if (blocked[w]) continue;
            blocked[w] = 1;
            path.push_back(w);
            if (dfs(w, parity ^ 1)) return true;
            path.pop_back();
            blocked[w] = 0;
        }
        return false;
    };
    dfs(from, 0);
    return out;
}

/// Loose-odd-wheel witness in the shape the irreducibility analysis gives:
/// an odd path between `from` and `to`, closed through `via`, with `hub`
/// adjacent to all three marked vertices.
inline Certificate family_witness(const Graph& g, int from, int to, int via, int hub) {
    auto path = find_odd_simple_path(g, from, to, {via, hub});
    if (!path) throw std::logic_error("family witness path not found");
    Certificate cert;
    cert.kind = CertKind::LOOSE_ODD_WHEEL;
    cert.hub = hub;
    cert.cycle = *path;
    cert.cycle.push_back(via);
    cert.odd_neighbours = {from, to, via};
    if (!verify(g, cert)) throw std::logic_error("family witness failed verification");
    return cert;
}

struct SlotAlgebra {
    // union-find over slot symbols; alpha_k = 2k, beta_k = 2k+1
    std::vector<int> parent;
    explicit SlotAlgebra(int npieces) : parent(2 * (npieces + 1)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    int alpha(int k) { return find(2 * k); }
    int beta(int k) { return find(2 * k + 1); }
};

}  // namespace detail

/// I16[s_1..s_n]: pieces stacked in the hexagon of D with e1 = e2. An h2
/// keeps the beta slot of the interface it consumes, an h3 keeps the alpha
/// slot, an h1 renews both; a kept chain that runs between the two hexagon
/// arcs would merge frame vertices or overload a frame edge. Pieces may be
/// inserted mirrored (pin side swapped); orientations are tried in
/// deterministic order and parameter vectors realisable by none are rejected.
inline CatalogEntry build_family_i16(const std::vector<int>& s) {
    int n = static_cast<int>(s.size());
    if (n == 0) throw std::invalid_argument("I16 needs at least one piece");
    for (int v : s)
        if (v < 1 || v > 3) throw std::invalid_argument("I16 parameters must lie in {1,2,3}");

    // frame: v 0, a 1, b 2, c 3, d 4, e 5; top arc (b, c), bottom arc (d, a)
    const int V = 0, A = 1, B = 2, C = 3, D4 = 4, E5 = 5;

    auto attempt = [&](unsigned mask) -> EmbeddedGraph {
        auto mirrored = [&](int k) { return (mask >> k) & 1u; };
        auto keeps_alpha = [&](int k) {
            return (s[k] == 3 && !mirrored(k)) || (s[k] == 2 && mirrored(k));
        };
        auto keeps_beta = [&](int k) {
            return (s[k] == 2 && !mirrored(k)) || (s[k] == 3 && mirrored(k));
        };

        detail::SlotAlgebra slots(n);
        for (int k = 0; k < n; ++k) {
            if (s[k] == 1) continue;
            if (keeps_alpha(k)) slots.unite(2 * k, 2 * (k + 1));
            if (keeps_beta(k)) slots.unite(2 * k + 1, 2 * (k + 1) + 1);
        }

        std::map<int, int> value;  // slot class -> vertex id
        auto bind = [&](int cls, int vertex) {
            auto [it, fresh] = value.emplace(cls, vertex);
            if (!fresh && it->second != vertex)
                throw std::invalid_argument("gluing would merge two frame vertices");
        };
        bind(slots.alpha(0), B);
        bind(slots.beta(0), C);
        bind(slots.alpha(n), D4);
        bind(slots.beta(n), A);

        int next_id = 6;
        std::vector<std::array<int, 2>> internals(n);
        std::vector<int> h1_centre(n, -1);
        for (int k = 0; k < n; ++k) {
            if (s[k] == 1) {
                h1_centre[k] = next_id++;
            } else {
                internals[k] = {next_id, next_id + 1};
                next_id += 2;
            }
            for (int cls : {slots.alpha(k + 1), slots.beta(k + 1)})
                if (!value.count(cls)) value[cls] = next_id++;
        }
        int total = next_id;

        std::vector<std::array<int, 3>> faces = {
            {V, A, B}, {V, B, C}, {A, B, E5}, {C, D4, E5}, {V, C, D4}, {V, A, D4}};
        for (int k = 0; k < n; ++k) {
            int pa = value.at(slots.alpha(k)), pb = value.at(slots.beta(k));
            int na = value.at(slots.alpha(k + 1)), nb = value.at(slots.beta(k + 1));
            if (s[k] == 1) {
                int m = h1_centre[k];
                faces.push_back({E5, pa, na});
                faces.push_back({m, pa, pb});
                faces.push_back({m, pb, nb});
                faces.push_back({m, nb, na});
                faces.push_back({m, na, pa});
                faces.push_back({E5, pb, nb});
            } else {
                auto [u, w] = std::pair(internals[k][0], internals[k][1]);
                int pin = keeps_beta(k) ? pb : pa;
                int fan_prev = keeps_beta(k) ? pa : pb;
                int fan_next = keeps_beta(k) ? na : nb;
                for (int fan : {fan_prev, fan_next}) {
                    faces.push_back({E5, u, fan});
                    faces.push_back({u, w, fan});
                    faces.push_back({w, pin, fan});
                }
            }
        }

        EmbeddedGraph g = EmbeddedGraph::from_triangles(total, faces);
        auto rep = g.validate(true);
        if (!rep.ok) throw std::invalid_argument("assembly does not close up");
        if (!is_eulerian(g.skeleton())) throw std::invalid_argument("assembly is not Eulerian");
        return g;
    };

    CatalogEntry entry;
    entry.name = "I16[";
    for (int k = 0; k < n; ++k) entry.name += (k ? "," : "") + std::to_string(s[k]);
    entry.name += "]";

    bool built = false;
    for (unsigned mask = 0; mask < (1u << n) && !built; ++mask) {
        try {
            entry.graph = attempt(mask);
            built = true;
        } catch (const std::exception&) {
        }
    }
    if (!built)
        throw std::invalid_argument(entry.name +
                                    " is degenerate: no piece orientation closes the hexagon without merging "
                                    "frame vertices or overloading a frame edge");

    bool odd_h1 = std::count(s.begin(), s.end(), 1) % 2 == 1;
    if (odd_h1) {
        entry.known_certificate = detail::family_witness(entry.graph.skeleton(), B, D4, V, A);
    } else {
        auto col = three_colour(entry.graph.skeleton());
        if (!col) throw std::logic_error("expected a 3-colouring for an even-h1 I16 instance");
        entry.colouring = col;
    }
    return entry;
}

/// I18[n]: the frame E with a1 = a2 and c1 = c2, and n alternating (h2, h3)
/// piece pairs glued between the hexagon arcs.
inline CatalogEntry build_family_i18(int n) {
    if (n < 1) throw std::invalid_argument("I18 needs n >= 1");
    int pieces = 2 * n;
    detail::SlotAlgebra slots(pieces);
    for (int k = 0; k < pieces; ++k) {
        if (k % 2 == 0) slots.unite(2 * k + 1, 2 * (k + 1) + 1);  // h2 keeps beta
        else slots.unite(2 * k, 2 * (k + 1));                      // h3 keeps alpha
    }

    // frame: x 0, y 1, a 2, b 3, c 4, d 5; top arc (a, b), bottom arc (d, a)
    const int X = 0, Y = 1, A = 2, B = 3, C = 4, D5 = 5;
    std::map<int, int> value;
    auto bind = [&](int cls, int vertex) {
        auto [it, fresh] = value.emplace(cls, vertex);
        if (!fresh && it->second != vertex) throw std::logic_error("I18 gluing conflict");
    };
    bind(slots.alpha(0), A);
    bind(slots.beta(0), B);
    bind(slots.alpha(pieces), D5);
    bind(slots.beta(pieces), A);

    int next_id = 6;
    std::vector<std::array<int, 2>> internals(pieces);
    for (int k = 0; k < pieces; ++k) {
        internals[k] = {next_id, next_id + 1};
        next_id += 2;
        for (int cls : {slots.alpha(k + 1), slots.beta(k + 1)})
            if (!value.count(cls)) value[cls] = next_id++;
    }
    int total = next_id;

    std::vector<std::array<int, 3>> faces = {
        {Y, X, D5}, {Y, C, D5}, {X, A, D5}, {Y, X, B}, {X, A, B}, {Y, C, B}};
    for (int k = 0; k < pieces; ++k) {
        int pa = value.at(slots.alpha(k)), pb = value.at(slots.beta(k));
        int na = value.at(slots.alpha(k + 1)), nb = value.at(slots.beta(k + 1));
        auto [u, w] = std::pair(internals[k][0], internals[k][1]);
        bool h2 = (k % 2 == 0);
        int pin = h2 ? pb : pa;
        int fan_prev = h2 ? pa : pb;
        int fan_next = h2 ? na : nb;
        for (int fan : {fan_prev, fan_next}) {
            faces.push_back({C, u, fan});
            faces.push_back({u, w, fan});
            faces.push_back({w, pin, fan});
        }
    }

    CatalogEntry entry;
    entry.name = "I18[" + std::to_string(n) + "]";
    entry.graph = EmbeddedGraph::from_triangles(total, faces);
    entry.known_certificate = detail::family_witness(entry.graph.skeleton(), B, D5, Y, X);
    return entry;
}

/// I19[m]: E with m alternating (h2, h3) pairs whose interface paths are NOT
/// identified; every gap is a hexagonal region closed by the unique diagonal
/// triangulation keeping all degrees even.
inline CatalogEntry build_family_i19(int m) {
    if (m < 1) throw std::invalid_argument("I19 needs m >= 1");
    int pieces = 2 * m;
    const int X = 0, Y = 1, A = 2, B = 3, C = 4, D5 = 5;

    struct PiecePaths {
        std::array<int, 2> upper;  // (alpha, beta) of the path facing the previous region
        std::array<int, 2> lower;
    };
    std::vector<PiecePaths> paths(pieces);
    std::vector<std::array<int, 3>> faces = {
        {Y, X, D5}, {Y, C, D5}, {X, A, D5}, {Y, X, B}, {X, A, B}, {Y, C, B}};
    int next_id = 6;
    for (int k = 0; k < pieces; ++k) {
        bool h2 = (k % 2 == 0);
        int u = next_id, w = next_id + 1, p = next_id + 2, f1 = next_id + 3, f2 = next_id + 4;
        next_id += 5;
        for (int fan : {f1, f2}) {
            if (h2) {
                faces.push_back({C, u, fan});
                faces.push_back({u, w, fan});
                faces.push_back({w, p, fan});
            } else {
                faces.push_back({p, u, fan});
                faces.push_back({u, w, fan});
                faces.push_back({w, C, fan});
            }
        }
        // h2 pins the beta (e2) end: paths (f, p). h3 pins alpha: paths (p, f).
        if (h2) paths[k] = {{f1, p}, {f2, p}};
        else paths[k] = {{p, f1}, {p, f2}};
    }
    int total = next_id;

    int regions = pieces + 1;
    auto region_corners = [&](int rg) -> std::array<int, 4> {
        std::array<int, 2> upper = (rg == 0) ? std::array<int, 2>{A, B} : paths[rg - 1].lower;
        std::array<int, 2> lower = (rg == regions - 1) ? std::array<int, 2>{D5, A} : paths[rg].upper;
        return {upper[0], upper[1], lower[0], lower[1]};  // ua, ub, la, lb
    };

    // two admissible diagonal sets per region (the c-corner diagonals always
    // duplicate existing edges); pick the combination making all degrees even.
    // Base degrees must count the region SIDE edges too: the pin antennas and
    // the a-c arc edge only appear in region faces.
    std::vector<int> degree(total, 0);
    {
        std::set<std::pair<int, int>> seen;
        auto add_edge = [&](int u, int v) {
            auto key = std::minmax(u, v);
            if (seen.insert(key).second) {
                ++degree[key.first];
                ++degree[key.second];
            }
        };
        for (auto& f : faces)
            for (int t = 0; t < 3; ++t) add_edge(f[t], f[(t + 1) % 3]);
        for (int rg = 0; rg < regions; ++rg) {
            auto [ua, ub, la, lb] = region_corners(rg);
            add_edge(C, ua);
            add_edge(ua, ub);
            add_edge(ub, C);
            add_edge(C, lb);
            add_edge(lb, la);
            add_edge(la, C);
        }
    }
    // option 0: diagonals {ua-la, ua-lb, ub-lb}; option 1: {ua-la, ub-la, ub-lb}
    std::vector<int> choice(regions, -1);
    std::vector<int> odd_count(total, 0);
    std::optional<std::vector<int>> solution;
    int solutions = 0;
    std::function<void(int)> solve = [&](int rg) {
        if (rg == regions) {
            for (int v = 0; v < total; ++v)
                if ((degree[v] + odd_count[v]) % 2 != 0) return;
            ++solutions;
            if (!solution) solution = choice;
            return;
        }
        auto [ua, ub, la, lb] = region_corners(rg);
        for (int opt = 0; opt < 2; ++opt) {
            // diagonal degree parity: option 0 leaves ua and lb odd, option 1 ub and la
            int o1 = opt == 0 ? ua : ub;
            int o2 = opt == 0 ? lb : la;
            choice[rg] = opt;
            odd_count[o1] ^= 1;
            odd_count[o2] ^= 1;
            solve(rg + 1);
            odd_count[o1] ^= 1;
            odd_count[o2] ^= 1;
            choice[rg] = -1;
        }
    };
    solve(0);
    if (solutions != 1) throw std::logic_error("I19 even-degree completion is not unique");

    for (int rg = 0; rg < regions; ++rg) {
        auto [ua, ub, la, lb] = region_corners(rg);
        if ((*solution)[rg] == 0) {
            faces.push_back({C, ua, la});
            faces.push_back({ua, ub, la});
            faces.push_back({ub, lb, la});
            faces.push_back({ub, C, lb});
        } else {
            faces.push_back({C, ua, la});
            faces.push_back({ua, lb, la});
            faces.push_back({ua, ub, lb});
            faces.push_back({ub, C, lb});
        }
    }

    CatalogEntry entry;
    entry.name = "I19[" + std::to_string(m) + "]";
    entry.graph = EmbeddedGraph::from_triangles(total, faces);
    entry.known_certificate = detail::family_witness(entry.graph.skeleton(), B, D5, Y, X);
    return entry;
}

inline CatalogEntry build_family(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::I16: return build_family_i16(spec.params);
        case Family::I18:
            if (spec.params.size() != 1) throw std::invalid_argument("I18 takes a single parameter");
            return build_family_i18(spec.params[0]);
        case Family::I19:
            if (spec.params.size() != 1) throw std::invalid_argument("I19 takes a single parameter");
            return build_family_i19(spec.params[0]);
    }
    throw std::invalid_argument("unknown family");
}

// ---------------------------------------------------------------------------
// Graph isomorphism (refinement-guided backtracking); used by the registry
// audit. Desk-scale sizes only.
// ---------------------------------------------------------------------------

inline bool isomorphic(const Graph& g1, const Graph& g2) {
    int n = g1.num_vertices();
    if (n != g2.num_vertices() || g1.num_edges() != g2.num_edges()) return false;

    // invariant: (degree, sorted neighbour degrees), refined once
    auto invariants = [](const Graph& g) {
        std::vector<std::pair<int, std::vector<int>>> inv(g.num_vertices());
        for (int v = 0; v < g.num_vertices(); ++v) {
            std::vector<int> nd;
            for (int u : g.neighbours(v)) nd.push_back(g.degree(u));
            std::sort(nd.begin(), nd.end());
            inv[v] = {g.degree(v), nd};
        }
        return inv;
    };
    auto inv1 = invariants(g1), inv2 = invariants(g2);
    {
        auto sorted1 = inv1, sorted2 = inv2;
        std::sort(sorted1.begin(), sorted1.end());
        std::sort(sorted2.begin(), sorted2.end());
        if (sorted1 != sorted2) return false;
    }

    std::vector<int> map(n, -1), used(n, 0);
    // match the rarest invariants first
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::map<std::pair<int, std::vector<int>>, int> freq;
    for (auto& i : inv1) ++freq[i];
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::tuple(freq[inv1[a]], inv1[a], a) < std::tuple(freq[inv1[b]], inv1[b], b);
    });

    std::function<bool(int)> match = [&](int idx) -> bool {
        if (idx == n) return true;
        int v = order[idx];
        for (int c = 0; c < n; ++c) {
            if (used[c] || inv2[c] != inv1[v]) continue;
            bool ok = true;
            for (int u : g1.neighbours(v))
                if (map[u] >= 0 && !g2.adjacent(map[u], c)) { ok = false; break; }
            if (ok)
                for (int u = 0; u < n && ok; ++u)
                    if (map[u] >= 0 && !g1.adjacent(v, u) && g2.adjacent(map[u], c)) ok = false;
            if (!ok) continue;
            map[v] = c;
            used[c] = 1;
            if (match(idx + 1)) return true;
            map[v] = -1;
            used[c] = 0;
        }
        return false;
    };
    return match(0);
}

// ---------------------------------------------------------------------------
// Registry of externally supplied irreducible triangulations (I1..I20).
// ---------------------------------------------------------------------------

struct RegistryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Loads a manifest of `<name> <pprs-file>` lines (paths relative to the
/// manifest). Every entry must be a validated Eulerian irreducible
/// triangulation; I5, I8, I11, I13, I15 and I20 must classify perfect without
/// K4, every other entry must yield a verified loose-odd-wheel certificate,
/// and an entry named I1 must be isomorphic to I16[1].
inline std::vector<CatalogEntry> registry_load(const std::filesystem::path& manifest) {
    std::ifstream in(manifest);
    if (!in) throw RegistryError("cannot open manifest " + manifest.string());
    static const std::set<std::string> perfect_names{"I5", "I8", "I11", "I13", "I15", "I20"};

    std::vector<CatalogEntry> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string name, file;
        if (!(ss >> name)) continue;
        if (!(ss >> file)) throw RegistryError("manifest line " + std::to_string(lineno) + ": missing file");
        bool known = false;
        for (int i = 1; i <= 20; ++i)
            if (name == "I" + std::to_string(i)) known = true;
        if (!known) throw RegistryError("manifest line " + std::to_string(lineno) + ": unknown entry '" + name + "'");

        std::ifstream gf(manifest.parent_path() / file);
        if (!gf) throw RegistryError("cannot open " + file);
        CatalogEntry entry;
        entry.name = name;
        entry.graph = parse_pprs(gf);

        auto rep = entry.graph.validate(true);
        if (!rep.ok)
            throw RegistryError(name + ": not a valid projective-plane triangulation (" +
                                rep.violations.front().rule + ")");
        if (!is_eulerian(entry.graph.skeleton())) throw RegistryError(name + ": not Eulerian");
        if (!is_irreducible(entry.graph)) throw RegistryError(name + ": not irreducible");

        auto low = find_loose_odd_wheel(entry.graph.skeleton());
        auto c7 = find_induced_c7bar(entry.graph.skeleton());
        bool t_perfect = !low && !c7;
        if (perfect_names.count(name)) {
            if (!t_perfect) throw RegistryError(name + ": expected perfect without K4");
        } else {
            if (!low) throw RegistryError(name + ": expected a loose odd wheel");
            if (!verify(entry.graph.skeleton(), *low)) throw RegistryError(name + ": witness failed verification");
            entry.known_certificate = low;
        }
        if (name == "I1" && !isomorphic(entry.graph.skeleton(), build_family_i16({1}).graph.skeleton()))
            throw RegistryError("I1: not isomorphic to I16[1]");
        entries.push_back(std::move(entry));
    }
    return entries;
}

}  // namespace tptri
