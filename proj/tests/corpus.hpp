#pragma once

// Deterministic test corpus: the oracle-sized catalog family instances plus
// derived graphs obtained by short pseudo-random sequences of even-splits and
// octahedron attachments (fixed seed, index-based choices only, so the corpus
// is identical across runs and platforms).

#include <map>
#include <random>
#include <set>

#include "tptri/catalog.hpp"
#include "tptri/detectors.hpp"
#include "tptri/transforms.hpp"

namespace tptri::corpus {

struct CorpusItem {
    std::string name;
    EmbeddedGraph graph;
};

constexpr int kMaxVertices = 14;
constexpr int kTargetSize = 220;

struct SplitOp {
    int y, a, a_prime;
};

inline std::vector<SplitOp> valid_splits(const EmbeddedGraph& g) {
    std::vector<SplitOp> ops;
    for (int y = 0; y < g.num_vertices(); ++y) {
        int d = g.degree(y);
        const auto& rot = g.rotation(y);
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                bool adjacent_positions = (j == i + 1) || (i == 0 && j == d - 1);
                if (adjacent_positions || (j - i) % 2 == 1) continue;
                ops.push_back({y, rot[i].to, rot[j].to});
            }
    }
    return ops;
}

inline const std::vector<CorpusItem>& all() {
    static const std::vector<CorpusItem> items = [] {
        std::vector<CorpusItem> out;
        std::set<std::string> seen;
        auto add = [&](const std::string& name, const EmbeddedGraph& g) {
            if (g.num_vertices() > kMaxVertices) return false;
            if (!seen.insert(write_pprs(g)).second) return false;
            out.push_back({name, g});
            return true;
        };

        // family bases
        std::vector<EmbeddedGraph> expandable;
        std::function<void(std::vector<int>&)> gen_i16 = [&](std::vector<int>& s) {
            if (!s.empty()) {
                try {
                    auto entry = build_family_i16(s);
                    add(entry.name, entry.graph);
                    if (entry.graph.num_vertices() <= 12) expandable.push_back(entry.graph);
                } catch (const std::invalid_argument&) {
                    // degenerate parameter vector
                }
            }
            if (s.size() == 3) return;
            for (int v = 1; v <= 3; ++v) {
                s.push_back(v);
                gen_i16(s);
                s.pop_back();
            }
        };
        std::vector<int> s;
        gen_i16(s);
        {
            auto i18 = build_family_i18(1);
            add(i18.name, i18.graph);
            expandable.push_back(i18.graph);
        }

        // derived instances: short walks of splits and attachments
        std::mt19937 rng(20240901u);
        int walk = 0;
        int stale = 0;
        while (static_cast<int>(out.size()) < kTargetSize && stale < 4000) {
            const EmbeddedGraph& base = expandable[walk % expandable.size()];
            ++walk;
            EmbeddedGraph cur = base;
            int len = 1 + static_cast<int>(rng() % 3);
            std::string trail;
            for (int step = 0; step < len; ++step) {
                auto splits = valid_splits(cur);
                auto faces = cur.trace_faces();
                size_t split_usable = (cur.num_vertices() + 2 <= kMaxVertices) ? splits.size() : 0;
                size_t attach_usable = (cur.num_vertices() + 3 <= kMaxVertices) ? faces.size() : 0;
                size_t total = split_usable + attach_usable;
                if (total == 0) break;
                size_t pick = rng() % total;
                if (pick < split_usable) {
                    auto op = splits[pick];
                    cur = even_split(cur, op.y, op.a, op.a_prime).first;
                    trail += "+split";
                } else {
                    auto f = faces[pick - split_usable];
                    cur = attach_octahedron(cur, f[0], f[1], f[2]).first;
                    trail += "+octa";
                }
            }
            if (trail.empty() || !add("walk" + std::to_string(walk) + trail, cur)) ++stale;
        }
        return out;
    }();
    return items;
}

}  // namespace tptri::corpus
