#include "esgeo/hull.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "esgeo/grid.hpp"
#include "esgeo/predicates.hpp"

namespace esgeo {

std::vector<std::vector<int>> Polytope::facet_adjacency() const {
    std::vector<std::vector<int>> adj(facets.size());
    for (size_t f = 0; f < facets.size(); ++f)
        for (int k = 0; k < 3; ++k) adj[f].push_back(facets[f].neighbors[static_cast<size_t>(k)]);
    return adj;
}

std::vector<std::vector<int>> Polytope::vertex_adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<size_t>(vertices.size()));
    for (const auto& e : edges) {
        adj[static_cast<size_t>(e.first)].push_back(e.second);
        adj[static_cast<size_t>(e.second)].push_back(e.first);
    }
    return adj;
}

HalfSpaceSystem Polytope::inward_halfspaces() const {
    HalfSpaceSystem hs;
    hs.dim = 3;
    for (const Facet& f : facets) hs.planes.push_back(f.plane.flipped());
    return hs;
}

bool Polytope::contains(const Point& p) const {
    for (const Facet& f : facets)
        if (f.plane.side(p) > 0) return false;
    return true;
}

bool Polytope::strictly_contains(const Point& p) const {
    for (const Facet& f : facets)
        if (f.plane.side(p) >= 0) return false;
    return true;
}

void Polytope::verify(const PointSet& original) const {
    for (const Facet& f : facets) {
        for (int k = 0; k < 3; ++k)
            if (f.plane.side(vertices[f.verts[static_cast<size_t>(k)]]) != 0)
                fail(ErrKind::Invalid, "facet plane misses its vertex");
        for (int v = 0; v < vertices.size(); ++v) {
            if (v == f.verts[0] || v == f.verts[1] || v == f.verts[2]) continue;
            if (f.plane.side(vertices[v]) >= 0) fail(ErrKind::Invalid, "vertex not strictly inside facet plane");
        }
    }
    for (const Point& p : original.pts) {
        bool is_vertex = false;
        for (const Point& v : vertices.pts)
            if (v == p) is_vertex = true;
        if (!is_vertex && !contains(p)) fail(ErrKind::Invalid, "input point outside hull");
    }
    std::map<std::pair<int, int>, int> edge_count;
    for (const Facet& f : facets)
        for (int k = 0; k < 3; ++k) {
            int u = f.verts[static_cast<size_t>(k)], v = f.verts[static_cast<size_t>((k + 1) % 3)];
            edge_count[{std::min(u, v), std::max(u, v)}]++;
        }
    for (const auto& [e, cnt] : edge_count)
        if (cnt != 2) fail(ErrKind::Invalid, "edge not shared by exactly two facets");
    if (static_cast<int>(edge_count.size()) != f1()) fail(ErrKind::Invalid, "edge list mismatch");
    if (f0() - f1() + f2() != 2) fail(ErrKind::Invalid, "Euler relation violated");
}

namespace {

struct WorkFacet {
    std::array<int, 3> v{};   // input indices
    std::array<int, 3> nb{};  // work-facet index across edge (v[i], v[i+1])
    bool alive = true;
};

Polytope assemble(const PointSet& X, std::vector<WorkFacet>& work) {
    // Compact alive facets, reindex vertices, build edges and planes.
    std::vector<int> facet_id(work.size(), -1);
    std::vector<int> live;
    for (size_t f = 0; f < work.size(); ++f)
        if (work[f].alive) {
            facet_id[f] = static_cast<int>(live.size());
            live.push_back(static_cast<int>(f));
        }
    Polytope P;
    P.vertices.dim = 3;
    std::map<int, int> vid;
    for (int f : live)
        for (int k = 0; k < 3; ++k) {
            int u = work[static_cast<size_t>(f)].v[static_cast<size_t>(k)];
            if (!vid.count(u)) {
                vid[u] = static_cast<int>(P.vertices.size());
                P.vertices.pts.push_back(X[u]);
                P.original_index.push_back(u);
            }
        }
    std::set<std::pair<int, int>> eset;
    for (int f : live) {
        const WorkFacet& wf = work[static_cast<size_t>(f)];
        Facet out;
        out.plane = plane_through(X[wf.v[0]], X[wf.v[1]], X[wf.v[2]]);
        for (int k = 0; k < 3; ++k) {
            out.verts[static_cast<size_t>(k)] = vid[wf.v[static_cast<size_t>(k)]];
            out.neighbors[static_cast<size_t>(k)] = facet_id[static_cast<size_t>(wf.nb[static_cast<size_t>(k)])];
            int a = vid[wf.v[static_cast<size_t>(k)]], b = vid[wf.v[static_cast<size_t>((k + 1) % 3)]];
            eset.insert({std::min(a, b), std::max(a, b)});
        }
        P.facets.push_back(out);
    }
    P.edges.assign(eset.begin(), eset.end());
    return P;
}

}  // namespace

Polytope convex_hull3(const PointSet& X) {
    if (X.dim != 3) fail(ErrKind::DimensionMismatch, "convex_hull3 needs 3D points");
    int n = X.size();
    if (n < 4) fail(ErrKind::Degenerate, "hull needs at least 4 points");
    IntGrid grid(X);

    // Initial tetrahedron from the first affinely independent quadruple.
    int p0 = 0, p1 = -1, p2 = -1, p3 = -1;
    for (int i = 1; i < n && p1 < 0; ++i)
        if (!(X[i] == X[p0])) p1 = i;
    if (p1 < 0) fail(ErrKind::Degenerate, "all points equal");
    for (int i = p1 + 1; i < n && p2 < 0; ++i) {
        Point c = cross(X[p1] - X[p0], X[i] - X[p0]);
        if (sign(c.c[0]) != 0 || sign(c.c[1]) != 0 || sign(c.c[2]) != 0) p2 = i;
    }
    if (p2 < 0) fail(ErrKind::Degenerate, "input is collinear");
    for (int i = p2 + 1; i < n && p3 < 0; ++i)
        if (grid.orient3(p0, p1, p2, i) != 0) p3 = i;
    if (p3 < 0) fail(ErrKind::Degenerate, "input is not full-dimensional");
    if (grid.orient3(p0, p1, p2, p3) < 0) std::swap(p1, p2);

    std::vector<WorkFacet> work;
    auto add_facet = [&](int a, int b, int c) {
        WorkFacet f;
        f.v = {a, b, c};
        work.push_back(f);
        return static_cast<int>(work.size()) - 1;
    };
    int f0 = add_facet(p0, p2, p1);
    int f1 = add_facet(p0, p1, p3);
    int f2 = add_facet(p1, p2, p3);
    int f3 = add_facet(p0, p3, p2);
    auto link = [&](int f, int k, int g, int l) {
        work[static_cast<size_t>(f)].nb[static_cast<size_t>(k)] = g;
        work[static_cast<size_t>(g)].nb[static_cast<size_t>(l)] = f;
    };
    // edges of f0: (p0,p2),(p2,p1),(p1,p0); f1: (p0,p1),(p1,p3),(p3,p0);
    // f2: (p1,p2),(p2,p3),(p3,p1); f3: (p0,p3),(p3,p2),(p2,p0)
    link(f0, 2, f1, 0);
    link(f0, 1, f2, 0);
    link(f0, 0, f3, 2);
    link(f1, 1, f2, 2);
    link(f1, 2, f3, 0);
    link(f2, 1, f3, 1);

    std::vector<int> order;
    for (int i = 0; i < n; ++i)
        if (i != p0 && i != p1 && i != p2 && i != p3) order.push_back(i);

    std::vector<int> visible;
    for (int p : order) {
        visible.clear();
        for (size_t f = 0; f < work.size(); ++f) {
            if (!work[f].alive) continue;
            int s = grid.orient3(work[f].v[0], work[f].v[1], work[f].v[2], p);
            if (s == 0)
                fail(ErrKind::Degenerate, "point on a hull facet plane (coplanar quadruple) at index " +
                                              std::to_string(p));
            if (s > 0) visible.push_back(static_cast<int>(f));
        }
        if (visible.empty()) continue;  // interior point
        for (int f : visible) work[static_cast<size_t>(f)].alive = false;
        // Horizon: directed edges of visible facets bordering live facets.
        std::map<int, std::pair<int, int>> from;  // start vertex -> (end vertex, outside facet)
        for (int f : visible) {
            const WorkFacet& wf = work[static_cast<size_t>(f)];
            for (int k = 0; k < 3; ++k) {
                int g = wf.nb[static_cast<size_t>(k)];
                if (work[static_cast<size_t>(g)].alive) {
                    bool fresh =
                        from.emplace(wf.v[static_cast<size_t>(k)],
                                     std::make_pair(wf.v[static_cast<size_t>((k + 1) % 3)], g))
                            .second;
                    if (!fresh) fail(ErrKind::Degenerate, "pinched horizon while inserting point");
                }
            }
        }
        std::map<int, int> new_at_start;
        for (const auto& [u, rest] : from) {
            int nf = add_facet(u, rest.first, p);
            new_at_start[u] = nf;
            // Re-link the outside facet to the replacement across (u, v).
            WorkFacet& g = work[static_cast<size_t>(rest.second)];
            for (int k = 0; k < 3; ++k)
                if (g.v[static_cast<size_t>(k)] == rest.first && g.v[static_cast<size_t>((k + 1) % 3)] == u) {
                    g.nb[static_cast<size_t>(k)] = nf;
                    work[static_cast<size_t>(nf)].nb[0] = rest.second;
                }
        }
        for (const auto& [u, rest] : from) {
            int nf = new_at_start[u];
            work[static_cast<size_t>(nf)].nb[1] = new_at_start[rest.first];  // across (v, p)
            // across (p, u): the new facet ending at u, i.e. the one whose
            // horizon edge ends at u; find via the cycle: predecessor of u.
        }
        // Second pass for (p, u) links: edge (p,u) of facet (u,v,p) pairs
        // with edge (w,u)'s facet (w,u,p) across its (u,p) side.
        std::map<int, int> new_at_end;
        for (const auto& [u, rest] : from) new_at_end[rest.first] = new_at_start[u];
        for (const auto& [u, rest] : from) {
            (void)rest;
            work[static_cast<size_t>(new_at_start[u])].nb[2] = new_at_end[u];
        }
    }
    return assemble(X, work);
}

Polytope hull3_bruteforce(const PointSet& X) {
    if (X.dim != 3) fail(ErrKind::DimensionMismatch, "hull3_bruteforce needs 3D points");
    int n = X.size();
    if (n < 4) fail(ErrKind::Degenerate, "hull needs at least 4 points");
    if (n > 64) fail(ErrKind::GuardExceeded, "brute-force hull guarded to 64 points");
    IntGrid grid(X);
    std::vector<WorkFacet> work;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                int pos = 0, neg = 0, zero = 0;
                for (int l = 0; l < n; ++l) {
                    if (l == i || l == j || l == k) continue;
                    int s = grid.orient3(i, j, k, l);
                    if (s > 0)
                        ++pos;
                    else if (s < 0)
                        ++neg;
                    else
                        ++zero;
                }
                if (pos > 0 && neg > 0) continue;  // not a supporting plane
                if (zero > 0) fail(ErrKind::Degenerate, "hull has a non-simplicial facet");
                WorkFacet f;
                f.v = pos == 0 ? std::array<int, 3>{i, j, k} : std::array<int, 3>{i, k, j};
                f.alive = true;
                work.push_back(f);
            }
    // Stitch neighbors by directed edges.
    std::map<std::pair<int, int>, int> dir_edge;
    for (size_t f = 0; f < work.size(); ++f)
        for (int k = 0; k < 3; ++k)
            dir_edge[{work[f].v[static_cast<size_t>(k)], work[f].v[static_cast<size_t>((k + 1) % 3)]}] =
                static_cast<int>(f);
    for (size_t f = 0; f < work.size(); ++f)
        for (int k = 0; k < 3; ++k) {
            auto it = dir_edge.find({work[f].v[static_cast<size_t>((k + 1) % 3)], work[f].v[static_cast<size_t>(k)]});
            if (it == dir_edge.end()) fail(ErrKind::Degenerate, "open edge in brute-force hull");
            work[f].nb[static_cast<size_t>(k)] = it->second;
        }
    return assemble(X, work);
}

std::vector<int> convex_hull2(const PointSet& X) {
    if (X.dim != 2) fail(ErrKind::DimensionMismatch, "convex_hull2 needs 2D points");
    int n = X.size();
    std::vector<int> idx(static_cast<size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return lex_less(X[a], X[b]); });
    if (n <= 2) return idx;
    IntGrid grid(X);
    auto build = [&](std::vector<int>& chain, int from, int to, int step) {
        for (int t = from; t != to + step; t += step) {
            int p = idx[static_cast<size_t>(t)];
            while (chain.size() >= 2 &&
                   grid.orient2(chain[chain.size() - 2], chain[chain.size() - 1], p) <= 0)
                chain.pop_back();
            chain.push_back(p);
        }
    };
    std::vector<int> lower, upper;
    build(lower, 0, n - 1, 1);
    build(upper, n - 1, 0, -1);
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
}

}  // namespace esgeo
