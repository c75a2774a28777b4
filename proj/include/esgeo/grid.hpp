// Scaled integer view of a point set for fast exact sign predicates.
//
// Positive per-axis scaling preserves every orientation sign, slope order,
// and incidence the library cares about, so hot loops run on integers:
// int64/int128 when magnitudes allow, arbitrary precision otherwise.
#pragma once

#include "esgeo/core.hpp"

namespace esgeo {

class IntGrid {
  public:
    explicit IntGrid(const PointSet& ps);

    int dim() const { return dim_; }
    int size() const { return n_; }
    bool small() const { return small_; }

    const Int& z(int p, int axis) const { return zc_[static_cast<size_t>(p) * 3 + axis]; }
    std::int64_t s(int p, int axis) const { return sc_[static_cast<size_t>(p) * 3 + axis]; }

    // Sign of the 2D orientation determinant of points (a,b,c).
    int orient2(int a, int b, int c) const;
    // Sign of the 3D orientation determinant of points (a,b,c,d).
    int orient3(int a, int b, int c, int d) const;
    // Compares slopes of segments (a,b) and (c,d); requires increasing x.
    int slope_cmp(int a, int b, int c, int d) const;
    int x_cmp(int a, int b) const;

  private:
    int dim_;
    int n_;
    bool small_ = false;  // all |coords| < 2^19 so dets fit in int128
    std::vector<Int> zc_;
    std::vector<std::int64_t> sc_;
};

}  // namespace esgeo
