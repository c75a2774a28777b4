#include "esgeo/grid.hpp"

namespace esgeo {

namespace {

using i128 = __int128;

inline int sgn128(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

IntGrid::IntGrid(const PointSet& ps) : dim_(ps.dim), n_(ps.size()) {
    zc_.assign(static_cast<size_t>(n_) * 3, Int(0));
    // Per-axis common denominator; positive scaling only.
    for (int axis = 0; axis < 3; ++axis) {
        Int lcm = 1;
        for (int i = 0; i < n_; ++i) {
            const Int& den = ps[i].c[axis].get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (int i = 0; i < n_; ++i) {
            const Rat& q = ps[i].c[axis];
            Int scale = lcm / q.get_den();
            zc_[static_cast<size_t>(i) * 3 + axis] = q.get_num() * scale;
        }
    }
    small_ = true;
    for (const Int& v : zc_) {
        if (mpz_sizeinbase(v.get_mpz_t(), 2) > 19) {
            small_ = false;
            break;
        }
    }
    if (small_) {
        sc_.resize(zc_.size());
        for (size_t i = 0; i < zc_.size(); ++i) sc_[i] = zc_[i].get_si();
    }
}

int IntGrid::orient2(int a, int b, int c) const {
    if (small_) {
        i128 ux = sc_[b * 3] - sc_[a * 3], uy = sc_[b * 3 + 1] - sc_[a * 3 + 1];
        i128 vx = sc_[c * 3] - sc_[a * 3], vy = sc_[c * 3 + 1] - sc_[a * 3 + 1];
        return sgn128(ux * vy - uy * vx);
    }
    Int ux = z(b, 0) - z(a, 0), uy = z(b, 1) - z(a, 1);
    Int vx = z(c, 0) - z(a, 0), vy = z(c, 1) - z(a, 1);
    return sign(Int(ux * vy - uy * vx));
}

int IntGrid::orient3(int a, int b, int c, int d) const {
    if (small_) {
        i128 u[3], v[3], w[3];
        for (int k = 0; k < 3; ++k) {
            u[k] = sc_[b * 3 + k] - sc_[a * 3 + k];
            v[k] = sc_[c * 3 + k] - sc_[a * 3 + k];
            w[k] = sc_[d * 3 + k] - sc_[a * 3 + k];
        }
        i128 det = u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
                   u[2] * (v[0] * w[1] - v[1] * w[0]);
        return sgn128(det);
    }
    Int u[3], v[3], w[3];
    for (int k = 0; k < 3; ++k) {
        u[k] = z(b, k) - z(a, k);
        v[k] = z(c, k) - z(a, k);
        w[k] = z(d, k) - z(a, k);
    }
    Int det = u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
              u[2] * (v[0] * w[1] - v[1] * w[0]);
    return sign(det);
}

int IntGrid::slope_cmp(int a, int b, int c, int d) const {
    if (small_) {
        i128 dy1 = sc_[b * 3 + 1] - sc_[a * 3 + 1], dx1 = sc_[b * 3] - sc_[a * 3];
        i128 dy2 = sc_[d * 3 + 1] - sc_[c * 3 + 1], dx2 = sc_[d * 3] - sc_[c * 3];
        return sgn128(dy1 * dx2 - dy2 * dx1);
    }
    Int dy1 = z(b, 1) - z(a, 1), dx1 = z(b, 0) - z(a, 0);
    Int dy2 = z(d, 1) - z(c, 1), dx2 = z(d, 0) - z(c, 0);
    return sign(Int(dy1 * dx2 - dy2 * dx1));
}

int IntGrid::x_cmp(int a, int b) const {
    if (small_) {
        return sc_[a * 3] < sc_[b * 3] ? -1 : (sc_[a * 3] > sc_[b * 3] ? 1 : 0);
    }
    return cmp(z(a, 0), z(b, 0));
}

}  // namespace esgeo
