// Orientation and general-position predicates, decided exactly.
#pragma once

#include <optional>

#include "esgeo/core.hpp"
#include "esgeo/grid.hpp"

namespace esgeo {

// Sign of the (d+1)x(d+1) homogeneous determinant of d+1 points in R^d.
// +1 for the counterclockwise unit triangle / the standard 3-simplex.
int orientation(const std::vector<Point>& simplex);
int orientation2(const Point& a, const Point& b, const Point& c);
int orientation3(const Point& a, const Point& b, const Point& c, const Point& d);

struct GeneralPositionReport {
    bool ok = true;
    std::vector<int> witness;  // one degenerate (dim+1)-subset when !ok
};

// Exhaustive scan over all (dim+1)-subsets, returning the lexicographically
// least degenerate one. The scan is a data-parallel kernel; the serial
// variant exists as the reference for tests and benchmarks.
GeneralPositionReport is_general_position(const PointSet& ps);
GeneralPositionReport is_general_position_serial(const PointSet& ps);

// Least collinear triple of a 2D set, found in O(n^2 log n) by sorting
// slopes around each anchor. Empty witness means none.
GeneralPositionReport collinear_triple_2d(const PointSet& ps);

// True when some pair shares an x-coordinate (2D).
std::optional<std::pair<int, int>> x_tie_2d(const PointSet& ps);

}  // namespace esgeo
