#pragma once

#include <array>
#include <cassert>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "tptri/graph.hpp"

namespace tptri {

/// One rotation entry: neighbour id plus the edge signature bit
/// (0 = orientation-preserving, 1 = reversing).
struct HalfEdge {
    int to = -1;
    int sign = 0;
    bool operator==(const HalfEdge&) const = default;
};

struct CycleWitness {
    std::vector<int> vertices;   // cyclic order, no repeats
    int length_parity = 0;       // |vertices| mod 2
    int signature_sum = 0;       // mod-2 sum of edge signatures along the cycle

    int length() const { return static_cast<int>(vertices.size()); }
};

struct Violation {
    std::string rule;
    std::string locus;
};

struct ValidationReport {
    bool ok = false;
    std::vector<Violation> violations;
    int faces = 0;
    int euler_characteristic = 0;
};

struct PprsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Simple graph with a signed rotation system (embedding scheme). Projective
/// planarity is a property checked by validate(), not enforced on construction.
class EmbeddedGraph {
public:
    EmbeddedGraph() = default;

    static EmbeddedGraph from_rotations(int n, std::vector<std::vector<HalfEdge>> rot) {
        EmbeddedGraph g;
        g.n_ = n;
        g.rot_ = std::move(rot);
        if (static_cast<int>(g.rot_.size()) != n) throw std::invalid_argument("rotation table size mismatch");
        g.rebuild_skeleton();
        return g;
    }

    /// Reconstruct an embedding scheme from a triangle list. Each edge must lie
    /// on exactly two faces and each vertex star must chain into a single cycle.
    static EmbeddedGraph from_triangles(int n, const std::vector<std::array<int, 3>>& faces);

    int num_vertices() const { return n_; }
    int num_edges() const { return skeleton_.num_edges(); }
    const Graph& skeleton() const { return skeleton_; }
    const std::vector<HalfEdge>& rotation(int v) const { return rot_[v]; }
    int degree(int v) const { return static_cast<int>(rot_[v].size()); }

    bool adjacent(int u, int v) const { return skeleton_.adjacent(u, v); }

    int rotation_index(int v, int u) const {
        const auto& r = rot_[v];
        for (size_t i = 0; i < r.size(); ++i)
            if (r[i].to == u) return static_cast<int>(i);
        return -1;
    }

    int edge_sign(int u, int v) const {
        int i = rotation_index(u, v);
        if (i < 0) throw std::invalid_argument("edge_sign: not an edge");
        return rot_[u][i].sign;
    }

    /// Face boundary walks. Each directed edge side lies on exactly one walk;
    /// the walk lengths sum to 2E.
    std::vector<std::vector<int>> trace_faces() const;

    ValidationReport validate(bool require_triangulation) const;

    CycleWitness make_cycle(const std::vector<int>& vertices) const {
        if (vertices.size() < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
        std::set<int> distinct(vertices.begin(), vertices.end());
        if (distinct.size() != vertices.size()) throw std::invalid_argument("cycle has repeated vertices");
        CycleWitness c;
        c.vertices = vertices;
        int sig = 0;
        for (size_t i = 0; i < vertices.size(); ++i) {
            int u = vertices[i], v = vertices[(i + 1) % vertices.size()];
            if (!adjacent(u, v)) throw std::invalid_argument("cycle vertices not consecutive-adjacent");
            sig ^= edge_sign(u, v);
        }
        c.signature_sum = sig;
        c.length_parity = static_cast<int>(vertices.size() % 2);
        return c;
    }

    /// HC(v): the neighbours of v in rotation order.
    CycleWitness link_cycle(int v) const {
        if (degree(v) < 3) throw std::invalid_argument("link_cycle: degree < 3");
        std::vector<int> vs;
        vs.reserve(rot_[v].size());
        for (const auto& he : rot_[v]) vs.push_back(he.to);
        return make_cycle(vs);
    }

    /// Trivial Z2-homology class on the projective plane is equivalent to
    /// bounding a disk.
    bool is_contractible(const CycleWitness& c) const { return c.signature_sum == 0; }

    /// Strict inside of the disk side of a contractible cycle. The disk side is
    /// the face region whose closure has Euler characteristic 1.
    std::vector<int> interior_vertices(const CycleWitness& c) const;

    struct NicenessResult {
        bool nice = true;
        std::array<int, 3> triangle { -1, -1, -1 };
        int interior_vertex = -1;
    };

    /// Scans every 3-cycle, not only faces.
    NicenessResult is_nice() const;

    EmbeddedGraph gauge_flipped(int v) const {
        EmbeddedGraph g = *this;
        std::reverse(g.rot_[v].begin(), g.rot_[v].end());
        for (auto& he : g.rot_[v]) he.sign ^= 1;
        for (int u = 0; u < g.n_; ++u) {
            if (u == v) continue;
            for (auto& he : g.rot_[u])
                if (he.to == v) he.sign ^= 1;
        }
        return g;
    }

private:
    void rebuild_skeleton() {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n_; ++u)
            for (const auto& he : rot_[u])
                if (u < he.to) es.emplace_back(u, he.to);
        // from_edges rejects loops and duplicates only when both endpoints list
        // them; structural problems are reported by validate() instead.
        try {
            skeleton_ = Graph::from_edges(n_, es);
        } catch (const std::invalid_argument&) {
            skeleton_ = Graph();
            skeleton_ok_ = false;
            return;
        }
        skeleton_ok_ = true;
    }

    int n_ = 0;
    std::vector<std::vector<HalfEdge>> rot_;
    Graph skeleton_;
    bool skeleton_ok_ = true;

    friend struct FaceTracer;
};

/// C[v1 v2 | v3]: the path from v1 to v2 along c avoiding v3.
struct SegmentPath {
    std::vector<int> vertices;
    int edge_count() const { return static_cast<int>(vertices.size()) - 1; }
    bool odd() const { return edge_count() % 2 == 1; }
};

inline SegmentPath segment(const CycleWitness& c, int v1, int v2, int v3) {
    auto find = [&](int x) {
        for (size_t i = 0; i < c.vertices.size(); ++i)
            if (c.vertices[i] == x) return static_cast<int>(i);
        throw std::invalid_argument("segment: vertex not on cycle");
    };
    int i1 = find(v1), i2 = find(v2), i3 = find(v3);
    if (v1 == v2 || v1 == v3 || v2 == v3) throw std::invalid_argument("segment: vertices not distinct");
    int len = static_cast<int>(c.vertices.size());
    // walk forward from v1; if v3 shows up first, walk backward instead
    SegmentPath path;
    for (int dir : {1, -1}) {
        path.vertices.clear();
        bool hit_v3 = false;
        for (int k = 0, i = i1;; i = (i + dir + len) % len, ++k) {
            if (i == i3) { hit_v3 = true; break; }
            path.vertices.push_back(c.vertices[i]);
            if (i == i2) break;
        }
        if (!hit_v3) return path;
    }
    (void)i2;
    throw std::logic_error("segment: no v3-free arc");
}

// ---------------------------------------------------------------------------
// Face tracing.
//
// States are (directed edge, orientation bit); 4E states in total. The
// transition follows the successor of the incoming edge in the rotation when
// the accumulated orientation is 0, the predecessor when it is 1. Orbits pair
// up under the reversal involution (v->u, 1 ^ s ^ sign(uv)); each pair is one
// face, so walk lengths over all faces sum to 2E.
// ---------------------------------------------------------------------------

struct FaceTracer {
    const EmbeddedGraph& g;
    // state id: ((u * maxdeg + idx) << 1) | s  -- use per-vertex offsets instead
    std::vector<int> offset;
    int total = 0;

    explicit FaceTracer(const EmbeddedGraph& gr) : g(gr) {
        offset.assign(g.num_vertices() + 1, 0);
        for (int v = 0; v < g.num_vertices(); ++v) offset[v + 1] = offset[v] + g.degree(v);
        total = offset[g.num_vertices()] * 2;
    }

    int encode(int u, int idx, int s) const { return ((offset[u] + idx) << 1) | s; }

    std::tuple<int, int, int> decode(int state) const {
        int s = state & 1;
        int pos = state >> 1;
        int u = static_cast<int>(std::upper_bound(offset.begin(), offset.end(), pos) - offset.begin()) - 1;
        return {u, pos - offset[u], s};
    }

    int next(int state) const {
        auto [u, idx, s] = decode(state);
        const HalfEdge& he = g.rotation(u)[idx];
        int v = he.to;
        int s2 = s ^ he.sign;
        int j = g.rotation_index(v, u);
        int d = g.degree(v);
        int j2 = (s2 == 0) ? (j + 1) % d : (j - 1 + d) % d;
        return encode(v, j2, s2);
    }

    int mirror(int state) const {
        auto [u, idx, s] = decode(state);
        const HalfEdge& he = g.rotation(u)[idx];
        int j = g.rotation_index(he.to, u);
        return encode(he.to, j, 1 ^ s ^ he.sign);
    }
};

inline std::vector<std::vector<int>> EmbeddedGraph::trace_faces() const {
    FaceTracer ft(*this);
    std::vector<int> orbit_of(ft.total, -1);
    std::vector<std::vector<int>> orbits;  // state lists
    for (int s0 = 0; s0 < ft.total; ++s0) {
        if (orbit_of[s0] >= 0) continue;
        int id = static_cast<int>(orbits.size());
        std::vector<int> orbit;
        int s = s0;
        do {
            if (orbit_of[s] >= 0) throw std::runtime_error("face tracing: rotation system inconsistent");
            orbit_of[s] = id;
            orbit.push_back(s);
            s = ft.next(s);
        } while (s != s0);
        orbits.push_back(std::move(orbit));
    }
    std::vector<std::vector<int>> walks;
    std::vector<char> emitted(orbits.size(), 0);
    for (size_t i = 0; i < orbits.size(); ++i) {
        if (emitted[i]) continue;
        int m = orbit_of[ft.mirror(orbits[i][0])];
        if (m == static_cast<int>(i)) throw std::runtime_error("face tracing: self-mirror orbit");
        emitted[i] = emitted[m] = 1;
        std::vector<int> walk;
        walk.reserve(orbits[i].size());
        for (int st : orbits[i]) {
            auto [u, idx, s] = ft.decode(st);
            (void)idx;
            (void)s;
            walk.push_back(u);
        }
        // canonical start: smallest vertex occurrence, then smaller successor
        int best = 0;
        for (size_t k = 1; k < walk.size(); ++k) {
            auto cmp = [&](int a, int b) {
                for (size_t t = 0; t < walk.size(); ++t) {
                    int xa = walk[(a + t) % walk.size()], xb = walk[(b + t) % walk.size()];
                    if (xa != xb) return xa < xb;
                }
                return false;
            };
            if (cmp(static_cast<int>(k), best)) best = static_cast<int>(k);
        }
        std::rotate(walk.begin(), walk.begin() + best, walk.end());
        walks.push_back(std::move(walk));
    }
    std::sort(walks.begin(), walks.end());
    return walks;
}

inline ValidationReport EmbeddedGraph::validate(bool require_triangulation) const {
    ValidationReport rep;
    auto bad = [&](const std::string& rule, const std::string& locus) {
        rep.violations.push_back({rule, locus});
    };

    for (int v = 0; v < n_; ++v) {
        std::set<int> seen;
        for (const auto& he : rot_[v]) {
            if (he.to == v) bad("simple", "loop at vertex " + std::to_string(v));
            else if (!seen.insert(he.to).second)
                bad("simple", "repeated neighbour " + std::to_string(he.to) + " at vertex " + std::to_string(v));
            if (he.to < 0 || he.to >= n_) bad("simple", "neighbour out of range at vertex " + std::to_string(v));
        }
    }
    if (!rep.violations.empty()) {
        rep.ok = false;
        return rep;
    }
    for (int v = 0; v < n_; ++v)
        for (const auto& he : rot_[v]) {
            int j = rotation_index(he.to, v);
            if (j < 0)
                bad("reciprocity", "edge " + std::to_string(v) + "-" + std::to_string(he.to) + " missing reverse entry");
            else if (rot_[he.to][j].sign != he.sign)
                bad("reciprocity", "edge " + std::to_string(v) + "-" + std::to_string(he.to) + " signature mismatch");
        }
    if (!rep.violations.empty()) {
        rep.ok = false;
        return rep;
    }
    if (!skeleton_.is_connected()) bad("connected", "graph is disconnected");
    if (!rep.violations.empty()) {
        rep.ok = false;
        return rep;
    }

    auto walks = trace_faces();
    rep.faces = static_cast<int>(walks.size());
    int e = num_edges();
    rep.euler_characteristic = n_ - e + rep.faces;
    if (rep.euler_characteristic != 1)
        bad("projective-plane", "chi = " + std::to_string(rep.euler_characteristic) + ", not 1");

    // a gauge-trivial signature would mean every cycle is orientation-preserving
    {
        std::vector<int> pot(n_, -1);
        bool orientable = true;
        for (int root = 0; root < n_ && orientable; ++root) {
            if (pot[root] >= 0) continue;
            pot[root] = 0;
            std::vector<int> stack{root};
            while (!stack.empty() && orientable) {
                int u = stack.back();
                stack.pop_back();
                for (const auto& he : rot_[u]) {
                    int want = pot[u] ^ he.sign;
                    if (pot[he.to] < 0) {
                        pot[he.to] = want;
                        stack.push_back(he.to);
                    } else if (pot[he.to] != want) {
                        orientable = false;
                        break;
                    }
                }
            }
        }
        if (orientable) bad("non-orientable", "all cycles have even signature sum");
    }

    if (require_triangulation) {
        for (const auto& w : walks)
            if (w.size() != 3) {
                std::string locus = "face of length " + std::to_string(w.size());
                bad("triangulation", locus);
                break;
            }
        if (2 * e != 3 * rep.faces)
            bad("triangulation", "2E = " + std::to_string(2 * e) + " != 3F = " + std::to_string(3 * rep.faces));
        // a traced face of a simple triangulation is a 3-cycle
        for (const auto& w : walks)
            if (w.size() == 3 && (w[0] == w[1] || w[1] == w[2] || w[0] == w[2])) {
                bad("triangulation", "degenerate face walk");
                break;
            }
    }

    rep.ok = rep.violations.empty();
    return rep;
}

inline std::vector<int> EmbeddedGraph::interior_vertices(const CycleWitness& c) const {
    if (!is_contractible(c)) throw std::invalid_argument("interior_vertices: cycle is non-contractible");
    auto walks = trace_faces();
    int f = static_cast<int>(walks.size());

    std::set<std::pair<int, int>> cycle_edges;
    for (size_t i = 0; i < c.vertices.size(); ++i) {
        int u = c.vertices[i], v = c.vertices[(i + 1) % c.vertices.size()];
        cycle_edges.insert(std::minmax(u, v));
    }

    // face ids sharing each non-cycle edge
    std::map<std::pair<int, int>, std::vector<int>> edge_faces;
    for (int i = 0; i < f; ++i)
        for (size_t k = 0; k < walks[i].size(); ++k) {
            auto key = std::minmax(walks[i][k], walks[i][(k + 1) % walks[i].size()]);
            edge_faces[key].push_back(i);
        }

    std::vector<int> comp(f, -1);
    int ncomp = 0;
    for (int i = 0; i < f; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<int> stack{i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (size_t k = 0; k < walks[cur].size(); ++k) {
                auto key = std::minmax(walks[cur][k], walks[cur][(k + 1) % walks[cur].size()]);
                if (cycle_edges.count(key)) continue;
                for (int other : edge_faces[key])
                    if (comp[other] < 0) {
                        comp[other] = ncomp;
                        stack.push_back(other);
                    }
            }
        }
        ++ncomp;
    }
    if (ncomp != 2) throw std::runtime_error("interior_vertices: cycle does not separate into two regions");

    // closed Euler characteristic of each side
    std::vector<int> result;
    int disk_sides = 0;
    for (int side = 0; side < 2; ++side) {
        std::set<int> vs;
        std::set<std::pair<int, int>> es;
        int fs = 0;
        for (int i = 0; i < f; ++i) {
            if (comp[i] != side) continue;
            ++fs;
            for (size_t k = 0; k < walks[i].size(); ++k) {
                vs.insert(walks[i][k]);
                es.insert(std::minmax(walks[i][k], walks[i][(k + 1) % walks[i].size()]));
            }
        }
        int chi = static_cast<int>(vs.size()) - static_cast<int>(es.size()) + fs;
        if (chi == 1) {
            ++disk_sides;
            for (int v : vs)
                if (std::find(c.vertices.begin(), c.vertices.end(), v) == c.vertices.end()) result.push_back(v);
        }
    }
    if (disk_sides != 1) throw std::runtime_error("interior_vertices: expected exactly one disk side");
    std::sort(result.begin(), result.end());
    return result;
}

inline EmbeddedGraph::NicenessResult EmbeddedGraph::is_nice() const {
    NicenessResult res;
    for (int u = 0; u < n_; ++u)
        for (int v : skeleton_.neighbours(u)) {
            if (v <= u) continue;
            for (int w : skeleton_.neighbours(v)) {
                if (w <= v || !adjacent(u, w)) continue;
                CycleWitness tri = make_cycle({u, v, w});
                if (!is_contractible(tri)) continue;
                auto inner = interior_vertices(tri);
                if (!inner.empty()) {
                    res.nice = false;
                    res.triangle = {u, v, w};
                    res.interior_vertex = inner.front();
                    return res;
                }
            }
        }
    return res;
}

inline EmbeddedGraph EmbeddedGraph::from_triangles(int n, const std::vector<std::array<int, 3>>& faces) {
    // two faces per edge
    std::map<std::pair<int, int>, std::vector<int>> edge_faces;
    for (size_t i = 0; i < faces.size(); ++i) {
        const auto& fc = faces[i];
        if (fc[0] == fc[1] || fc[1] == fc[2] || fc[0] == fc[2])
            throw std::invalid_argument("from_triangles: degenerate face");
        for (int k = 0; k < 3; ++k) {
            auto key = std::minmax(fc[k], fc[(k + 1) % 3]);
            edge_faces[key].push_back(static_cast<int>(i));
        }
    }
    for (const auto& [e, fs] : edge_faces)
        if (fs.size() != 2)
            throw std::invalid_argument("from_triangles: edge " + std::to_string(e.first) + "-" +
                                        std::to_string(e.second) + " lies on " + std::to_string(fs.size()) +
                                        " faces");

    auto third = [&](int face, int a, int b) {
        for (int x : faces[face])
            if (x != a && x != b) return x;
        throw std::logic_error("from_triangles: face misses edge endpoint");
    };

    // chain each vertex star into one neighbour cycle
    std::vector<std::vector<int>> order(n);
    for (int v = 0; v < n; ++v) {
        std::map<int, std::vector<int>> around;  // neighbour -> the two faces at edge (v, nb)
        for (size_t i = 0; i < faces.size(); ++i) {
            const auto& fc = faces[i];
            for (int k = 0; k < 3; ++k)
                if (fc[k] == v) {
                    around[fc[(k + 1) % 3]].push_back(static_cast<int>(i));
                    around[fc[(k + 2) % 3]].push_back(static_cast<int>(i));
                }
        }
        if (around.empty()) throw std::invalid_argument("from_triangles: isolated vertex " + std::to_string(v));
        for (const auto& [nb, fs] : around)
            if (fs.size() != 2) throw std::invalid_argument("from_triangles: vertex star not a disk at " + std::to_string(v));

        int start = around.begin()->first;
        int face = std::min(around[start][0], around[start][1]);
        std::vector<int> cyc{start};
        int prev_face = -1;
        int cur = start, cur_face = face;
        while (true) {
            int nxt = third(cur_face, v, cur);
            if (nxt == start) break;
            cyc.push_back(nxt);
            prev_face = cur_face;
            const auto& fs = around[nxt];
            cur_face = (fs[0] == prev_face) ? fs[1] : fs[0];
            cur = nxt;
            if (cyc.size() > around.size()) throw std::invalid_argument("from_triangles: vertex star not a single cycle");
        }
        if (cyc.size() != around.size())
            throw std::invalid_argument("from_triangles: vertex star splits at " + std::to_string(v));
        order[v] = std::move(cyc);
    }

    // signatures from local orientation compatibility across each edge
    std::vector<std::vector<HalfEdge>> rot(n);
    auto succ = [&](int v, int u) {
        const auto& cyc = order[v];
        for (size_t i = 0; i < cyc.size(); ++i)
            if (cyc[i] == u) return cyc[(i + 1) % cyc.size()];
        throw std::logic_error("from_triangles: successor lookup failed");
    };
    std::map<std::pair<int, int>, int> sign;
    for (const auto& [e, fs] : edge_faces) {
        auto [u, v] = e;
        int p = third(fs[0], u, v);
        int q = third(fs[1], u, v);
        int su = succ(u, v);  // in {p, q}
        int sv = succ(v, u);
        if ((su != p && su != q) || (sv != p && sv != q))
            throw std::logic_error("from_triangles: rotation and faces disagree");
        if (p == q) throw std::invalid_argument("from_triangles: doubled face pair");
        sign[e] = (su == sv) ? 1 : 0;
    }
    for (int v = 0; v < n; ++v) {
        rot[v].reserve(order[v].size());
        for (int u : order[v]) rot[v].push_back({u, sign[std::minmax(u, v)]});
    }
    return from_rotations(n, std::move(rot));
}

// ---------------------------------------------------------------------------
// .pprs text format
// ---------------------------------------------------------------------------

inline EmbeddedGraph parse_pprs(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw PprsError("line " + std::to_string(lineno) + ": " + msg);
    };
    auto next_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
            size_t i = line.find_first_not_of(" \t");
            if (i == std::string::npos) continue;
            out = line.substr(i);
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_line(header) || header != "pprs 1") fail("expected header 'pprs 1'");
    std::string vline;
    if (!next_line(vline)) fail("expected 'vertices <n>'");
    int n = -1;
    {
        std::istringstream ss(vline);
        std::string kw;
        ss >> kw >> n;
        if (kw != "vertices" || n < 0 || !ss) fail("expected 'vertices <n>'");
    }

    std::vector<std::vector<HalfEdge>> rot(n);
    std::vector<char> declared(n, 0);
    std::string rline;
    while (next_line(rline)) {
        std::istringstream ss(rline);
        std::string kw;
        ss >> kw;
        if (kw != "rot") fail("expected 'rot <v>: ...'");
        std::string vtok;
        ss >> vtok;
        if (vtok.empty() || vtok.back() != ':') fail("expected ':' after vertex id");
        vtok.pop_back();
        int v = -1;
        try {
            size_t used = 0;
            v = std::stoi(vtok, &used);
            if (used != vtok.size()) throw std::invalid_argument("");
        } catch (...) {
            fail("bad vertex id '" + vtok + "'");
        }
        if (v < 0 || v >= n) fail("vertex id out of range");
        if (declared[v]) fail("duplicate vertex id " + std::to_string(v));
        declared[v] = 1;
        std::string tok;
        while (ss >> tok) {
            if (tok.size() < 2 || (tok.back() != '+' && tok.back() != '-')) fail("bad entry '" + tok + "'");
            int s = tok.back() == '-' ? 1 : 0;
            tok.pop_back();
            int u = -1;
            try {
                size_t used = 0;
                u = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument("");
            } catch (...) {
                fail("bad neighbour id '" + tok + "'");
            }
            if (u < 0 || u >= n) fail("id out of range: " + std::to_string(u));
            rot[v].push_back({u, s});
        }
    }
    return EmbeddedGraph::from_rotations(n, std::move(rot));
}

inline EmbeddedGraph parse_pprs(const std::string& text) {
    std::istringstream ss(text);
    return parse_pprs(ss);
}

/// Canonical writer: vertices in increasing id, each rotation starting at its
/// smallest neighbour id (stored cyclic direction kept).
inline void write_pprs(const EmbeddedGraph& g, std::ostream& out) {
    out << "pprs 1\n";
    out << "vertices " << g.num_vertices() << "\n";
    for (int v = 0; v < g.num_vertices(); ++v) {
        const auto& r = g.rotation(v);
        out << "rot " << v << ":";
        if (!r.empty()) {
            size_t start = 0;
            for (size_t i = 1; i < r.size(); ++i)
                if (r[i].to < r[start].to) start = i;
            for (size_t k = 0; k < r.size(); ++k) {
                const auto& he = r[(start + k) % r.size()];
                out << ' ' << he.to << (he.sign ? '-' : '+');
            }
        }
        out << "\n";
    }
}

inline std::string write_pprs(const EmbeddedGraph& g) {
    std::ostringstream ss;
    write_pprs(g, ss);
    return ss.str();
}

}  // namespace tptri
