#pragma once

#include <bit>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "tptri/detectors.hpp"
#include "tptri/graph.hpp"

namespace tptri {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RationalPoint {
    std::vector<Rational> coords;

    bool integral() const {
        for (const auto& c : coords)
            if (c != 0 && c != 1) return false;
        return true;
    }
};

enum class RowTag { NONNEG, EDGE, ODD_CYCLE };

struct TstabRow {
    std::vector<Rational> coeffs;
    Rational rhs;
    RowTag tag;

    bool satisfied_by(const RationalPoint& p) const {
        Rational lhs = 0;
        for (size_t i = 0; i < coeffs.size(); ++i) lhs += coeffs[i] * p.coords[i];
        return lhs <= rhs;
    }
};

struct TstabSystem {
    int dimension = 0;
    std::vector<TstabRow> rows;

    bool satisfied_by(const RationalPoint& p) const {
        if (static_cast<int>(p.coords.size()) != dimension) throw std::invalid_argument("dimension mismatch");
        for (const auto& r : rows)
            if (!r.satisfied_by(p)) return false;
        return true;
    }

    int count(RowTag tag) const {
        int c = 0;
        for (const auto& r : rows)
            if (r.tag == tag) ++c;
        return c;
    }
};

/// All independent sets including the empty one, in lexicographic order of
/// their sorted vertex lists.
inline std::vector<std::vector<int>> enumerate_stable_sets(const Graph& g, int cap = 20) {
    int n = g.num_vertices();
    if (n > cap) throw CapExceededError("enumerate_stable_sets: n exceeds cap");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        out.push_back(cur);
        for (int v = start; v < n; ++v) {
            bool ok = true;
            for (int u : cur)
                if (g.adjacent(u, v)) { ok = false; break; }
            if (!ok) continue;
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

/// Non-negativity, edge, and induced-odd-cycle rows; odd cycles enumerated
/// exhaustively at lengths 3, 5, 7, ...
inline TstabSystem tstab_system(const Graph& g, int cap = 20) {
    int n = g.num_vertices();
    if (n > cap) throw CapExceededError("tstab_system: n exceeds cap");
    TstabSystem sys;
    sys.dimension = n;
    for (int v = 0; v < n; ++v) {
        TstabRow row;
        row.coeffs.assign(n, 0);
        row.coeffs[v] = -1;
        row.rhs = 0;
        row.tag = RowTag::NONNEG;
        sys.rows.push_back(std::move(row));
    }
    for (auto [u, v] : g.edges()) {
        TstabRow row;
        row.coeffs.assign(n, 0);
        row.coeffs[u] = row.coeffs[v] = 1;
        row.rhs = 1;
        row.tag = RowTag::EDGE;
        sys.rows.push_back(std::move(row));
    }
    for_each_induced_cycle(g, 3, true, [&](const std::vector<int>& cyc) {
        TstabRow row;
        row.coeffs.assign(n, 0);
        for (int v : cyc) row.coeffs[v] = 1;
        row.rhs = static_cast<int>(cyc.size()) / 2;
        row.tag = RowTag::ODD_CYCLE;
        sys.rows.push_back(std::move(row));
        return true;
    });
    return sys;
}

// ---------------------------------------------------------------------------
// Exact vertex enumeration by incremental double description.
//
// The system is homogenised to a pointed cone in R^{n+1} (coordinates
// (x0, x)); the non-negativity rows plus x0 >= 0 give the non-negative
// orthant as the initial cone, whose extreme rays are the unit vectors.
// Remaining halfspaces are added one at a time with the combinatorial
// adjacency test. Extreme rays with x0 > 0 scale to the polyhedron vertices.
// ---------------------------------------------------------------------------

namespace dd {

struct Ray {
    std::vector<BigInt> z;       // n+1 integer coordinates, gcd-normalised
    std::vector<uint64_t> tight; // bitset over all homogenised rows
};

inline void normalise(std::vector<BigInt>& z) {
    BigInt g = 0;
    for (const auto& c : z) g = boost::multiprecision::gcd(g, c);
    if (g > 1)
        for (auto& c : z) c /= g;
}

inline BigInt dot(const std::vector<BigInt>& a, const std::vector<BigInt>& z) {
    BigInt s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && z[i] != 0) s += a[i] * z[i];
    return s;
}

}  // namespace dd

/// All vertices of {x : rows}, exact. Recession rays are ignored (they carry
/// no integrality information).
inline std::vector<RationalPoint> polytope_vertices(const TstabSystem& sys) {
    int n = sys.dimension;
    int dim = n + 1;

    // homogenised rows a.z <= 0; row 0 is x0 >= 0, rows 1..n the nonneg rows
    std::vector<std::vector<BigInt>> rows;
    {
        std::vector<BigInt> r0(dim, 0);
        r0[0] = -1;
        rows.push_back(std::move(r0));
    }
    std::vector<const TstabRow*> ordered;
    for (const auto& r : sys.rows)
        if (r.tag == RowTag::NONNEG) ordered.push_back(&r);
    for (const auto& r : sys.rows)
        if (r.tag != RowTag::NONNEG) ordered.push_back(&r);
    for (const TstabRow* r : ordered) {
        std::vector<BigInt> row(dim, 0);
        // clear denominators
        BigInt denom_lcm = boost::multiprecision::denominator(r->rhs);
        for (const auto& c : r->coeffs) {
            BigInt d = boost::multiprecision::denominator(c);
            denom_lcm = denom_lcm / boost::multiprecision::gcd(denom_lcm, d) * d;
        }
        row[0] = -boost::multiprecision::numerator(r->rhs) * (denom_lcm / boost::multiprecision::denominator(r->rhs));
        for (int i = 0; i < n; ++i)
            row[i + 1] = boost::multiprecision::numerator(r->coeffs[i]) *
                         (denom_lcm / boost::multiprecision::denominator(r->coeffs[i]));
        rows.push_back(std::move(row));
    }

    int m = static_cast<int>(rows.size());
    int words = (m + 63) / 64;
    auto tight_of = [&](const std::vector<BigInt>& z, int upto) {
        std::vector<uint64_t> t(words, 0);
        for (int i = 0; i < upto; ++i)
            if (dd::dot(rows[i], z) == 0) t[i / 64] |= (uint64_t{1} << (i % 64));
        return t;
    };

    // initial orthant rays; the first n+1 homogenised rows are its facets
    if (sys.count(RowTag::NONNEG) != n)
        throw std::invalid_argument("polytope_vertices: system lacks non-negativity rows");
    int processed = n + 1;
    std::vector<dd::Ray> rays;
    for (int i = 0; i < dim; ++i) {
        dd::Ray r;
        r.z.assign(dim, 0);
        r.z[i] = 1;
        r.tight = tight_of(r.z, m);
        rays.push_back(std::move(r));
    }

    for (int h = processed; h < m; ++h) {
        std::vector<BigInt> val(rays.size());
        bool any_pos = false;
        for (size_t i = 0; i < rays.size(); ++i) {
            val[i] = dd::dot(rows[h], rays[i].z);
            if (val[i] > 0) any_pos = true;
        }
        if (!any_pos) continue;

        uint64_t processed_mask_last = (h % 64 == 63) ? ~uint64_t{0} : ((uint64_t{1} << ((h % 64) + 1)) - 1);
        int hword = h / 64;
        auto subset_processed = [&](const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
            // a restricted to rows 0..h is a subset of b?
            for (int w = 0; w <= hword; ++w) {
                uint64_t mask = (w == hword) ? processed_mask_last : ~uint64_t{0};
                if ((a[w] & mask & ~b[w]) != 0) return false;
            }
            return true;
        };

        std::vector<dd::Ray> next;
        for (size_t i = 0; i < rays.size(); ++i)
            if (val[i] <= 0) next.push_back(rays[i]);

        for (size_t i = 0; i < rays.size(); ++i) {
            if (val[i] <= 0) continue;
            for (size_t j = 0; j < rays.size(); ++j) {
                if (val[j] >= 0) continue;
                // adjacency: no third ray's tight set contains tight(i) & tight(j)
                std::vector<uint64_t> common(words);
                for (int w = 0; w < words; ++w) common[w] = rays[i].tight[w] & rays[j].tight[w];
                bool adjacent = true;
                for (size_t k = 0; k < rays.size() && adjacent; ++k) {
                    if (k == i || k == j) continue;
                    if (subset_processed(common, rays[k].tight)) adjacent = false;
                }
                if (!adjacent) continue;
                dd::Ray w;
                w.z.assign(dim, 0);
                for (int t = 0; t < dim; ++t) w.z[t] = val[i] * rays[j].z[t] - val[j] * rays[i].z[t];
                dd::normalise(w.z);
                w.tight = tight_of(w.z, m);
                next.push_back(std::move(w));
            }
        }
        rays = std::move(next);
    }

    std::vector<RationalPoint> verts;
    for (const auto& r : rays) {
        if (r.z[0] == 0) continue;
        RationalPoint p;
        p.coords.reserve(n);
        for (int i = 0; i < n; ++i) p.coords.emplace_back(Rational(r.z[i + 1], r.z[0]));
        verts.push_back(std::move(p));
    }
    std::sort(verts.begin(), verts.end(),
              [](const RationalPoint& a, const RationalPoint& b) { return a.coords < b.coords; });
    return verts;
}

struct TPerfectResult {
    bool t_perfect = false;
    std::optional<RationalPoint> fractional_vertex;
};

/// TSTAB(G) integrality by exact vertex enumeration.
inline TPerfectResult is_t_perfect_bruteforce(const Graph& g, int cap = 14) {
    if (g.num_vertices() > cap) throw CapExceededError("is_t_perfect_bruteforce: n exceeds cap");
    auto sys = tstab_system(g, std::max(cap, g.num_vertices()));
    auto verts = polytope_vertices(sys);
    TPerfectResult res;
    res.t_perfect = true;
    for (const auto& v : verts)
        if (!v.integral()) {
            res.t_perfect = false;
            res.fractional_vertex = v;
            break;
        }
    return res;
}

// ---------------------------------------------------------------------------
// SSP membership: exact phase-1 simplex with Bland's rule.
// ---------------------------------------------------------------------------

inline bool ssp_membership(const Graph& g, const RationalPoint& p, int cap = 20) {
    int n = g.num_vertices();
    if (static_cast<int>(p.coords.size()) != n) throw std::invalid_argument("ssp_membership: dimension mismatch");
    auto stables = enumerate_stable_sets(g, cap);
    int cols = static_cast<int>(stables.size());
    int m = n + 1;  // coordinate equalities plus the convexity row

    // tableau columns: structural lambdas, then m artificials; rows carry b last
    std::vector<std::vector<Rational>> A(m, std::vector<Rational>(cols + m + 1, 0));
    for (int j = 0; j < cols; ++j) {
        for (int v : stables[j]) A[v][j] = 1;
        A[n][j] = 1;
    }
    for (int i = 0; i < m; ++i) A[i][cols + i] = 1;
    for (int i = 0; i < n; ++i) A[i][cols + m] = p.coords[i];
    A[n][cols + m] = 1;
    for (int i = 0; i < m; ++i)
        if (A[i][cols + m] < 0)
            for (auto& x : A[i]) x = -x;

    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = cols + i;

    // objective: minimise the sum of artificials; reduced cost of column j is
    // c_j - sum over rows of A[i][j] (artificials have c = 1, structurals 0)
    auto reduced_cost = [&](int j) {
        Rational r = (j >= cols) ? 1 : 0;
        for (int i = 0; i < m; ++i)
            if (basis[i] >= cols) r -= A[i][j];
        return r;
    };

    while (true) {
        int enter = -1;
        for (int j = 0; j < cols + m; ++j) {
            bool basic = false;
            for (int i = 0; i < m; ++i)
                if (basis[i] == j) basic = true;
            if (basic) continue;
            if (reduced_cost(j) < 0) { enter = j; break; }  // Bland: smallest index
        }
        if (enter < 0) break;
        int leave = -1;
        Rational best;
        for (int i = 0; i < m; ++i) {
            if (A[i][enter] <= 0) continue;
            Rational ratio = A[i][cols + m] / A[i][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave < 0) return false;  // unbounded phase-1 cannot happen; treat as infeasible
        Rational piv = A[leave][enter];
        for (auto& x : A[leave]) x /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || A[i][enter] == 0) continue;
            Rational f = A[i][enter];
            for (int j = 0; j <= cols + m; ++j) A[i][j] -= f * A[leave][j];
        }
        basis[leave] = enter;
    }

    Rational objective = 0;
    for (int i = 0; i < m; ++i)
        if (basis[i] >= cols) objective += A[i][cols + m];
    return objective == 0;
}

// ---------------------------------------------------------------------------
// Brute-force perfection.
// ---------------------------------------------------------------------------

/// chi(H) == omega(H) for every induced subgraph, by subset dynamic programs.
inline bool is_perfect_chi_omega(const Graph& g, int cap = 12) {
    int n = g.num_vertices();
    if (n > cap) throw CapExceededError("is_perfect_chi_omega: n exceeds cap");
    if (n == 0) return true;
    int full = 1 << n;
    std::vector<int> nbr_mask(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbours(v)) nbr_mask[v] |= 1 << u;

    std::vector<int8_t> omega(full, 0), chi(full, 0);
    std::vector<char> indep(full, 0);
    indep[0] = 1;
    for (int mask = 1; mask < full; ++mask) {
        int v = std::countr_zero(static_cast<unsigned>(mask));
        int rest = mask & (mask - 1);
        indep[mask] = indep[rest] && (nbr_mask[v] & rest) == 0;
        omega[mask] = std::max<int8_t>(omega[rest],
                                       static_cast<int8_t>(1 + omega[mask & nbr_mask[v]]));
    }
    for (int mask = 1; mask < full; ++mask) {
        int v = std::countr_zero(static_cast<unsigned>(mask));
        int8_t best = std::numeric_limits<int8_t>::max();
        // colour classes are independent submasks containing the lowest vertex
        for (int s = mask; s > 0; s = (s - 1) & mask) {
            if (!(s & (1 << v)) || !indep[s]) continue;
            best = std::min<int8_t>(best, static_cast<int8_t>(1 + chi[mask & ~s]));
        }
        chi[mask] = best;
        if (chi[mask] != omega[mask]) return false;
    }
    return true;
}

/// Perfection via the strong perfect graph theorem: no odd hole in the graph
/// or its complement.
inline bool is_perfect_spgt(const Graph& g, int cap = 20) {
    if (g.num_vertices() > cap) throw CapExceededError("is_perfect_spgt: n exceeds cap");
    if (find_odd_hole(g)) return false;
    if (find_odd_hole(g.complement())) return false;
    return true;
}

inline bool is_perfect_bruteforce(const Graph& g, int sweep_cap = 12, int spgt_cap = 20) {
    if (g.num_vertices() <= sweep_cap) return is_perfect_chi_omega(g, sweep_cap);
    return is_perfect_spgt(g, spgt_cap);
}

}  // namespace tptri
