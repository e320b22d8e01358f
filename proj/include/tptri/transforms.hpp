#pragma once

#include <functional>
#include <optional>

#include "tptri/embedded_graph.hpp"

namespace tptri {

/// Degree-4 vertex x with link cycle (a, b, a', b'); contracting identifies
/// {x, b, b'} into one vertex. Stored with b < b' and a < a'.
struct EvenContractionSite {
    int x = -1;
    int b = -1, b_prime = -1;
    int a = -1, a_prime = -1;

    bool operator==(const EvenContractionSite&) const = default;
};

enum class StepKind { EVEN_CONTRACT, EVEN_SPLIT, OCTA_DELETE, OCTA_ATTACH };

struct TransformStep {
    StepKind kind = StepKind::EVEN_CONTRACT;
    std::array<int, 3> args{-1, -1, -1};  // contract: x b b' | split: y a a' | octa: u v w
    int old_n = 0, new_n = 0;
    // old id -> new id; for EVEN_CONTRACT this is the gamma map with the three
    // identified vertices all sent to the merged id
    std::vector<int> vertex_map;
    std::vector<int> created;  // ids added by EVEN_SPLIT / OCTA_ATTACH
};

struct TransformLog {
    std::vector<TransformStep> steps;

    std::string serialize() const {
        std::string out;
        for (const auto& s : steps) {
            switch (s.kind) {
                case StepKind::EVEN_CONTRACT: out += "contract"; break;
                case StepKind::EVEN_SPLIT: out += "split"; break;
                case StepKind::OCTA_DELETE: out += "octa-"; break;
                case StepKind::OCTA_ATTACH: out += "octa+"; break;
            }
            for (int a : s.args) out += " " + std::to_string(a);
            out += "\n";
        }
        return out;
    }
};

namespace detail {

inline std::vector<std::array<int, 3>> face_list(const EmbeddedGraph& g) {
    std::vector<std::array<int, 3>> out;
    for (const auto& w : g.trace_faces()) {
        if (w.size() != 3) throw std::invalid_argument("transform requires a triangulation");
        out.push_back({w[0], w[1], w[2]});
    }
    return out;
}

inline std::vector<int> compaction_map(int old_n, const std::vector<int>& removed) {
    std::vector<char> gone(old_n, 0);
    for (int v : removed) gone[v] = 1;
    std::vector<int> map(old_n, -1);
    int next = 0;
    for (int v = 0; v < old_n; ++v)
        if (!gone[v]) map[v] = next++;
    return map;
}

inline EmbeddedGraph rebuild(int n, const std::vector<std::array<int, 3>>& faces, const char* what) {
    EmbeddedGraph g = EmbeddedGraph::from_triangles(n, faces);
    auto rep = g.validate(true);
    if (!rep.ok)
        throw std::runtime_error(std::string(what) + ": surgery produced an invalid embedding (" +
                                 rep.violations.front().rule + ")");
    return g;
}

}  // namespace detail

/// All even-contraction sites, ascending by (x, b).
inline std::vector<EvenContractionSite> find_even_contractions(const EmbeddedGraph& g) {
    std::vector<EvenContractionSite> sites;
    const Graph& sk = g.skeleton();
    for (int x = 0; x < g.num_vertices(); ++x) {
        if (g.degree(x) != 4) continue;
        const auto& r = g.rotation(x);
        std::array<int, 4> link{r[0].to, r[1].to, r[2].to, r[3].to};
        for (int off = 0; off < 2; ++off) {
            int b = link[off], bp = link[off + 2];
            int a = link[(off + 1) % 4], ap = link[(off + 3) % 4];
            if (sk.adjacent(b, bp)) continue;
            // common neighbours of b and b' must be exactly {a, a', x}
            std::vector<int> common;
            for (int u : sk.neighbours(b))
                if (sk.adjacent(bp, u)) common.push_back(u);
            std::vector<int> want{a, ap, x};
            std::sort(want.begin(), want.end());
            if (common != want) continue;
            EvenContractionSite s;
            s.x = x;
            s.b = std::min(b, bp);
            s.b_prime = std::max(b, bp);
            s.a = std::min(a, ap);
            s.a_prime = std::max(a, ap);
            sites.push_back(s);
        }
    }
    std::sort(sites.begin(), sites.end(),
              [](const EvenContractionSite& l, const EvenContractionSite& r) {
                  return std::tie(l.x, l.b) < std::tie(r.x, r.b);
              });
    return sites;
}

inline std::optional<EvenContractionSite> site_at(const EmbeddedGraph& g, int x, int b, int b_prime) {
    for (const auto& s : find_even_contractions(g))
        if (s.x == x && s.b == std::min(b, b_prime) && s.b_prime == std::max(b, b_prime)) return s;
    return std::nullopt;
}

/// Identify {x, b, b'} into one vertex (the smallest of the three ids after
/// compaction). V drops by 2, E by 6, F by 4.
inline std::pair<EmbeddedGraph, TransformStep> even_contract(const EmbeddedGraph& g,
                                                             const EvenContractionSite& site) {
    auto live = site_at(g, site.x, site.b, site.b_prime);
    if (!live || !(*live == site)) throw std::invalid_argument("even_contract: site is stale");

    int old_n = g.num_vertices();
    int y0 = std::min({site.x, site.b, site.b_prime});
    std::vector<int> removed;
    for (int v : {site.x, site.b, site.b_prime})
        if (v != y0) removed.push_back(v);

    auto rename = [&](int v) { return (v == site.x || v == site.b || v == site.b_prime) ? y0 : v; };
    std::vector<std::array<int, 3>> faces;
    for (const auto& f : detail::face_list(g)) {
        if (f[0] == site.x || f[1] == site.x || f[2] == site.x) continue;
        faces.push_back({rename(f[0]), rename(f[1]), rename(f[2])});
    }
    auto cmap = detail::compaction_map(old_n, removed);
    for (auto& f : faces)
        for (int& v : f) v = cmap[v];

    TransformStep step;
    step.kind = StepKind::EVEN_CONTRACT;
    step.args = {site.x, site.b, site.b_prime};
    step.old_n = old_n;
    step.new_n = old_n - 2;
    step.vertex_map.assign(old_n, -1);
    for (int v = 0; v < old_n; ++v) step.vertex_map[v] = (cmap[v] >= 0) ? cmap[v] : cmap[y0];

    return {detail::rebuild(step.new_n, faces, "even_contract"), step};
}

/// Inverse of even_contract: replace y by x (same id), b (= old n) and
/// b' (= old n + 1), the gates a, a' staying fixed. The embedding determines
/// the neighbour partition; the stored rotation arc after a goes to b.
inline std::pair<EmbeddedGraph, TransformStep> even_split(const EmbeddedGraph& g, int y, int a, int a_prime) {
    if (y < 0 || y >= g.num_vertices()) throw std::invalid_argument("even_split: bad vertex");
    int ia = g.rotation_index(y, a), iap = g.rotation_index(y, a_prime);
    if (ia < 0 || iap < 0) throw std::invalid_argument("even_split: gate is not a neighbour of y");
    int d = g.degree(y);
    if ((ia + 1) % d == iap || (iap + 1) % d == ia)
        throw std::invalid_argument("even_split: degenerate arc (gates adjacent in rotation)");

    const auto& r = g.rotation(y);
    std::vector<int> arc_b, arc_bp;
    for (int i = (ia + 1) % d; i != iap; i = (i + 1) % d) arc_b.push_back(r[i].to);
    for (int i = (iap + 1) % d; i != ia; i = (i + 1) % d) arc_bp.push_back(r[i].to);
    // the split vertices get degree arc+3; even degrees need both arcs odd
    if (arc_b.size() % 2 == 0 || arc_bp.size() % 2 == 0)
        throw std::invalid_argument("even_split: gates split the rotation into even arcs");

    int old_n = g.num_vertices();
    int x = y, b = old_n, bp = old_n + 1;

    std::vector<std::array<int, 3>> faces;
    for (const auto& f : detail::face_list(g)) {
        if (f[0] == y || f[1] == y || f[2] == y) continue;
        faces.push_back(f);
    }
    auto fan = [&](int centre, int from, const std::vector<int>& arc, int to) {
        int prev = from;
        for (int v : arc) {
            faces.push_back({centre, prev, v});
            prev = v;
        }
        faces.push_back({centre, prev, to});
    };
    fan(b, a, arc_b, a_prime);
    fan(bp, a_prime, arc_bp, a);
    faces.push_back({x, a, b});
    faces.push_back({x, b, a_prime});
    faces.push_back({x, a_prime, bp});
    faces.push_back({x, bp, a});

    TransformStep step;
    step.kind = StepKind::EVEN_SPLIT;
    step.args = {y, a, a_prime};
    step.old_n = old_n;
    step.new_n = old_n + 2;
    step.vertex_map.resize(old_n);
    for (int v = 0; v < old_n; ++v) step.vertex_map[v] = v;
    step.created = {b, bp};

    return {detail::rebuild(step.new_n, faces, "even_split"), step};
}

struct OctahedronPattern {
    int u, v, w;  // bounding triangle
    int x, y, z;  // interior: x ~ u,w; y ~ u,v; z ~ v,w
};

/// Matches the deletable-octahedron pattern at the triangle {t0,t1,t2}:
/// contractible, interior exactly three vertices carrying only the nine
/// gadget edges.
inline std::optional<OctahedronPattern> match_octahedron(const EmbeddedGraph& g, int t0, int t1, int t2) {
    const Graph& sk = g.skeleton();
    std::array<int, 3> t{t0, t1, t2};
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) return std::nullopt;
    if (!sk.adjacent(t[0], t[1]) || !sk.adjacent(t[1], t[2]) || !sk.adjacent(t[0], t[2])) return std::nullopt;
    CycleWitness tri = g.make_cycle({t[0], t[1], t[2]});
    if (!g.is_contractible(tri)) return std::nullopt;
    auto interior = g.interior_vertices(tri);
    if (interior.size() != 3) return std::nullopt;
    for (int p : interior)
        if (g.degree(p) != 4) return std::nullopt;
    // interior triangle
    if (!sk.adjacent(interior[0], interior[1]) || !sk.adjacent(interior[1], interior[2]) ||
        !sk.adjacent(interior[0], interior[2]))
        return std::nullopt;

    // assign roles: u sees {x,y}, v sees {y,z}, w sees {x,z}
    int u = t[0];
    std::vector<int> iu;
    for (int p : interior)
        if (sk.adjacent(u, p)) iu.push_back(p);
    if (iu.size() != 2) return std::nullopt;
    for (int pick = 0; pick < 2; ++pick) {
        int y = iu[pick], x = iu[1 - pick];
        int v = -1, w = -1;
        for (int c : {t[1], t[2]}) {
            if (sk.adjacent(y, c)) v = c;
            if (sk.adjacent(x, c)) w = c;
        }
        if (v < 0 || w < 0 || v == w) continue;
        int z = -1;
        for (int p : interior)
            if (p != x && p != y) z = p;
        // exact neighbourhoods of the interior vertices
        auto nbrs_are = [&](int p, std::initializer_list<int> want) {
            std::vector<int> ws(want);
            std::sort(ws.begin(), ws.end());
            return sk.neighbours(p) == ws;
        };
        if (!nbrs_are(x, {y, z, u, w})) continue;
        if (!nbrs_are(y, {x, z, u, v})) continue;
        if (!nbrs_are(z, {x, y, v, w})) continue;
        return OctahedronPattern{u, v, w, x, y, z};
    }
    return std::nullopt;
}

inline std::pair<EmbeddedGraph, TransformStep> delete_octahedron(const EmbeddedGraph& g, int t0, int t1, int t2) {
    auto pat = match_octahedron(g, t0, t1, t2);
    if (!pat) throw std::invalid_argument("delete_octahedron: pattern does not match");
    int old_n = g.num_vertices();
    std::vector<int> removed{pat->x, pat->y, pat->z};
    std::sort(removed.begin(), removed.end());
    std::vector<std::array<int, 3>> faces;
    for (const auto& f : detail::face_list(g)) {
        bool keep = true;
        for (int v : f)
            if (v == pat->x || v == pat->y || v == pat->z) keep = false;
        if (keep) faces.push_back(f);
    }
    faces.push_back({pat->u, pat->v, pat->w});
    auto cmap = detail::compaction_map(old_n, removed);
    for (auto& f : faces)
        for (int& v : f) v = cmap[v];

    TransformStep step;
    step.kind = StepKind::OCTA_DELETE;
    step.args = {pat->u, pat->v, pat->w};
    step.old_n = old_n;
    step.new_n = old_n - 3;
    step.vertex_map = cmap;
    return {detail::rebuild(step.new_n, faces, "delete_octahedron"), step};
}

/// Insert the 3-vertex, 9-edge octahedral gadget into the face {f0,f1,f2}.
/// New vertices x = n, y = n+1, z = n+2; all three face degrees rise by 2.
inline std::pair<EmbeddedGraph, TransformStep> attach_octahedron(const EmbeddedGraph& g, int f0, int f1, int f2) {
    std::array<int, 3> want{f0, f1, f2};
    std::sort(want.begin(), want.end());
    std::optional<std::array<int, 3>> face;
    for (const auto& f : detail::face_list(g)) {
        std::array<int, 3> s = f;
        std::sort(s.begin(), s.end());
        if (s == want) {
            face = f;  // traced orientation, deterministic for the stored graph
            break;
        }
    }
    if (!face) throw std::invalid_argument("attach_octahedron: not a face of the graph");
    int old_n = g.num_vertices();
    int u = (*face)[0], v = (*face)[1], w = (*face)[2];
    int x = old_n, y = old_n + 1, z = old_n + 2;

    std::vector<std::array<int, 3>> faces;
    for (const auto& f : detail::face_list(g))
        if (f != *face) faces.push_back(f);
    faces.push_back({u, x, y});
    faces.push_back({u, v, y});
    faces.push_back({v, y, z});
    faces.push_back({v, z, w});
    faces.push_back({w, z, x});
    faces.push_back({w, x, u});
    faces.push_back({x, y, z});

    TransformStep step;
    step.kind = StepKind::OCTA_ATTACH;
    step.args = {u, v, w};
    step.old_n = old_n;
    step.new_n = old_n + 3;
    step.vertex_map.resize(old_n);
    for (int t = 0; t < old_n; ++t) step.vertex_map[t] = t;
    step.created = {x, y, z};
    return {detail::rebuild(step.new_n, faces, "attach_octahedron"), step};
}

/// First available octahedron deletion site in ascending triangle order.
inline std::optional<std::array<int, 3>> find_octahedron_deletion(const EmbeddedGraph& g) {
    const Graph& sk = g.skeleton();
    for (int u = 0; u < g.num_vertices(); ++u)
        for (int v : sk.neighbours(u)) {
            if (v <= u) continue;
            for (int w : sk.neighbours(v)) {
                if (w <= v || !sk.adjacent(u, w)) continue;
                if (match_octahedron(g, u, v, w)) return std::array<int, 3>{u, v, w};
            }
        }
    return std::nullopt;
}

/// Octahedron deletions first, then even-contractions, lowest site first,
/// until neither applies.
inline std::pair<EmbeddedGraph, TransformLog> reduce_to_irreducible(const EmbeddedGraph& g) {
    EmbeddedGraph cur = g;
    TransformLog log;
    while (true) {
        if (auto tri = find_octahedron_deletion(cur)) {
            auto [next, step] = delete_octahedron(cur, (*tri)[0], (*tri)[1], (*tri)[2]);
            cur = std::move(next);
            log.steps.push_back(std::move(step));
            continue;
        }
        auto sites = find_even_contractions(cur);
        if (!sites.empty()) {
            auto [next, step] = even_contract(cur, sites.front());
            cur = std::move(next);
            log.steps.push_back(std::move(step));
            continue;
        }
        break;
    }
    return {std::move(cur), std::move(log)};
}

inline bool is_irreducible(const EmbeddedGraph& g) {
    return find_even_contractions(g).empty() && !find_octahedron_deletion(g);
}

/// Exact 3-colouring by backtracking; lexicographically first colouring or
/// nullopt when chromatic number exceeds 3.
inline std::optional<std::vector<int>> three_colour(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> colour(n, -1);
    std::function<bool(int)> go = [&](int v) -> bool {
        if (v == n) return true;
        int maxc = 0;
        for (int u = 0; u < v; ++u) maxc = std::max(maxc, colour[u] + 1);
        for (int c = 0; c < std::min(3, maxc + 1); ++c) {
            bool ok = true;
            for (int u : g.neighbours(v))
                if (u < v && colour[u] == c) { ok = false; break; }
            if (!ok) continue;
            colour[v] = c;
            if (go(v + 1)) return true;
            colour[v] = -1;
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    return colour;
}

struct CliqueDecomposition {
    std::optional<std::vector<int>> cutset;       // absent when no clique cutset exists
    std::vector<std::vector<int>> piece_vertices; // original ids, sorted
    std::vector<Graph> pieces;                    // induced on piece_vertices
};

/// Splits at the (size, lex)-smallest clique cutset if one exists.
inline CliqueDecomposition clique_separator_components(const Graph& g) {
    int n = g.num_vertices();
    if (!g.is_connected()) throw std::invalid_argument("clique_separator_components: input disconnected");

    // all cliques grouped by size, in lexicographic vertex order
    std::vector<std::vector<std::vector<int>>> by_size(n + 1);
    std::vector<int> cur;
    std::function<void(int)> grow = [&](int start) {
        if (!cur.empty()) by_size[cur.size()].push_back(cur);
        for (int v = start; v < n; ++v) {
            bool ok = true;
            for (int u : cur)
                if (!g.adjacent(u, v)) { ok = false; break; }
            if (!ok) continue;
            cur.push_back(v);
            grow(v + 1);
            cur.pop_back();
        }
    };
    grow(0);

    auto components_without = [&](const std::vector<int>& cut) {
        std::vector<char> blocked(n, 0);
        for (int v : cut) blocked[v] = 1;
        std::vector<int> comp(n, -1);
        int nc = 0;
        for (int s = 0; s < n; ++s) {
            if (blocked[s] || comp[s] >= 0) continue;
            std::vector<int> stack{s};
            comp[s] = nc;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int w : g.neighbours(u))
                    if (!blocked[w] && comp[w] < 0) {
                        comp[w] = nc;
                        stack.push_back(w);
                    }
            }
            ++nc;
        }
        return std::make_pair(comp, nc);
    };

    CliqueDecomposition out;
    for (size_t size = 1; size < by_size.size(); ++size)
        for (const auto& cut : by_size[size]) {
            if (static_cast<int>(cut.size()) >= n) continue;
            auto [comp, nc] = components_without(cut);
            if (nc < 2) continue;
            out.cutset = cut;
            for (int c = 0; c < nc; ++c) {
                std::vector<int> verts = cut;
                for (int v = 0; v < n; ++v)
                    if (comp[v] == c) verts.push_back(v);
                std::sort(verts.begin(), verts.end());
                out.pieces.push_back(g.induced(verts));
                out.piece_vertices.push_back(std::move(verts));
            }
            return out;
        }
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    out.piece_vertices.push_back(all);
    out.pieces.push_back(g);
    return out;
}

// ---------------------------------------------------------------------------
// Log replay
// ---------------------------------------------------------------------------

inline TransformLog parse_transform_log(std::istream& in) {
    TransformLog log;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string op;
        if (!(ss >> op)) continue;
        TransformStep step;
        if (op == "contract") step.kind = StepKind::EVEN_CONTRACT;
        else if (op == "split") step.kind = StepKind::EVEN_SPLIT;
        else if (op == "octa-") step.kind = StepKind::OCTA_DELETE;
        else if (op == "octa+") step.kind = StepKind::OCTA_ATTACH;
        else throw std::invalid_argument("log line " + std::to_string(lineno) + ": unknown op '" + op + "'");
        if (!(ss >> step.args[0] >> step.args[1] >> step.args[2]))
            throw std::invalid_argument("log line " + std::to_string(lineno) + ": expected three vertex ids");
        log.steps.push_back(step);
    }
    return log;
}

/// Re-applies the operations of `log` to g in order; the recorded maps of the
/// returned log carry the exact relabelings.
inline std::pair<EmbeddedGraph, TransformLog> replay(const EmbeddedGraph& g, const TransformLog& log) {
    EmbeddedGraph cur = g;
    TransformLog out;
    for (const auto& s : log.steps) {
        switch (s.kind) {
            case StepKind::EVEN_CONTRACT: {
                auto site = site_at(cur, s.args[0], s.args[1], s.args[2]);
                if (!site) throw std::invalid_argument("replay: contract site not present");
                auto [next, step] = even_contract(cur, *site);
                cur = std::move(next);
                out.steps.push_back(std::move(step));
                break;
            }
            case StepKind::EVEN_SPLIT: {
                auto [next, step] = even_split(cur, s.args[0], s.args[1], s.args[2]);
                cur = std::move(next);
                out.steps.push_back(std::move(step));
                break;
            }
            case StepKind::OCTA_DELETE: {
                auto [next, step] = delete_octahedron(cur, s.args[0], s.args[1], s.args[2]);
                cur = std::move(next);
                out.steps.push_back(std::move(step));
                break;
            }
            case StepKind::OCTA_ATTACH: {
                auto [next, step] = attach_octahedron(cur, s.args[0], s.args[1], s.args[2]);
                cur = std::move(next);
                out.steps.push_back(std::move(step));
                break;
            }
        }
    }
    return {std::move(cur), std::move(out)};
}

}  // namespace tptri
