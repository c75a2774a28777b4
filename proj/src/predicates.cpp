#include "esgeo/predicates.hpp"

#include <algorithm>

#include "esgeo/parallel.hpp"

namespace esgeo {

int orientation2(const Point& a, const Point& b, const Point& c) {
    Rat det = (b.c[0] - a.c[0]) * (c.c[1] - a.c[1]) - (b.c[1] - a.c[1]) * (c.c[0] - a.c[0]);
    return sign(det);
}

int orientation3(const Point& a, const Point& b, const Point& c, const Point& d) {
    Point u = b - a, v = c - a, w = d - a;
    Rat det = u.c[0] * (v.c[1] * w.c[2] - v.c[2] * w.c[1]) - u.c[1] * (v.c[0] * w.c[2] - v.c[2] * w.c[0]) +
              u.c[2] * (v.c[0] * w.c[1] - v.c[1] * w.c[0]);
    return sign(det);
}

int orientation(const std::vector<Point>& simplex) {
    if (simplex.empty()) fail(ErrKind::Invalid, "empty simplex");
    int d = simplex[0].dim;
    for (const Point& p : simplex)
        if (p.dim != d) fail(ErrKind::DimensionMismatch, "mixed dimensions in simplex");
    if (static_cast<int>(simplex.size()) != d + 1) fail(ErrKind::DimensionMismatch, "simplex needs d+1 points");
    if (d == 2) return orientation2(simplex[0], simplex[1], simplex[2]);
    return orientation3(simplex[0], simplex[1], simplex[2], simplex[3]);
}

namespace {

// Unranks combination index t into the lexicographically t-th k-subset.
void unrank_subset(std::int64_t t, int n, int k, int* out) {
    int cur = 0;
    for (int slot = 0; slot < k; ++slot) {
        for (int v = cur;; ++v) {
            Int c = binomial(n - 1 - v, k - 1 - slot);
            if (!c.fits_slong_p()) {
                // Counts this large never happen under the scan guards.
                out[slot] = v;
                cur = v + 1;
                break;
            }
            std::int64_t cnt = c.get_si();
            if (t < cnt) {
                out[slot] = v;
                cur = v + 1;
                break;
            }
            t -= cnt;
        }
    }
}

GeneralPositionReport gp_scan(const PointSet& ps, bool parallel) {
    int n = ps.size();
    int k = ps.dim + 1;
    if (n < k) fail(ErrKind::Invalid, "too few points for a general-position check");
    IntGrid grid(ps);
    Int total_b = binomial(n, k);
    if (!total_b.fits_slong_p()) fail(ErrKind::GuardExceeded, "general-position scan too large");
    std::int64_t total = total_b.get_si();
    auto degenerate = [&](std::int64_t t) {
        int idx[4];
        unrank_subset(t, n, k, idx);
        if (k == 3) return grid.orient2(idx[0], idx[1], idx[2]) == 0;
        return grid.orient3(idx[0], idx[1], idx[2], idx[3]) == 0;
    };
    std::int64_t hit = parallel ? find_first_parallel(total, degenerate) : find_first_serial(total, degenerate);
    GeneralPositionReport rep;
    if (hit >= 0) {
        rep.ok = false;
        int idx[4];
        unrank_subset(hit, n, k, idx);
        rep.witness.assign(idx, idx + k);
    }
    return rep;
}

}  // namespace

GeneralPositionReport is_general_position(const PointSet& ps) { return gp_scan(ps, true); }

GeneralPositionReport is_general_position_serial(const PointSet& ps) { return gp_scan(ps, false); }

GeneralPositionReport collinear_triple_2d(const PointSet& ps) {
    int n = ps.size();
    GeneralPositionReport rep;
    if (n < 3) return rep;
    IntGrid grid(ps);
    // Two points seen from a common anchor under the same slope are
    // collinear with it; points on opposite sides of the anchor share the
    // slope, so normalizing directions to dx > 0 catches both.
    for (int a = 0; a < n; ++a) {
        struct Dir {
            int idx;
            Int dx, dy;
            bool vertical;
        };
        std::vector<Dir> dirs;
        dirs.reserve(static_cast<size_t>(n - a - 1));
        for (int i = a + 1; i < n; ++i) {
            Dir d;
            d.idx = i;
            d.dx = grid.z(i, 0) - grid.z(a, 0);
            d.dy = grid.z(i, 1) - grid.z(a, 1);
            if (sign(d.dx) < 0 || (sign(d.dx) == 0 && sign(d.dy) < 0)) {
                d.dx = -d.dx;
                d.dy = -d.dy;
            }
            d.vertical = sign(d.dx) == 0;
            dirs.push_back(std::move(d));
        }
        auto slope_cmp3 = [](const Dir& u, const Dir& v) -> int {
            if (u.vertical != v.vertical) return u.vertical ? 1 : -1;
            if (u.vertical) return 0;
            return sign(Int(u.dy * v.dx - v.dy * u.dx));
        };
        std::sort(dirs.begin(), dirs.end(), [&](const Dir& u, const Dir& v) {
            int c = slope_cmp3(u, v);
            if (c != 0) return c < 0;
            return u.idx < v.idx;
        });
        for (size_t s = 1; s < dirs.size(); ++s) {
            if (slope_cmp3(dirs[s - 1], dirs[s]) == 0) {
                rep.ok = false;
                rep.witness = {a, dirs[s - 1].idx, dirs[s].idx};
                std::sort(rep.witness.begin(), rep.witness.end());
                return rep;
            }
        }
    }
    return rep;
}

std::optional<std::pair<int, int>> x_tie_2d(const PointSet& ps) {
    int n = ps.size();
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int i, int j) { return cmp(ps[i].c[0], ps[j].c[0]) < 0; });
    for (int i = 1; i < n; ++i)
        if (cmp(ps[order[i - 1]].c[0], ps[order[i]].c[0]) == 0) return std::make_pair(order[i - 1], order[i]);
    return std::nullopt;
}

}  // namespace esgeo
