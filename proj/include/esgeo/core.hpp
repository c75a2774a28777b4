// Core exact-arithmetic types: rationals, points, planes, half-space systems.
#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace esgeo {

// All geometry in this library is computed over exact rationals. No
// floating point ever enters a predicate.
using Rat = mpq_class;
using Int = mpz_class;

enum class ErrKind {
    DimensionMismatch,
    Degenerate,
    TiesInX,
    NonGenericDirection,
    NotPFree,
    ThresholdNotMet,
    NoPolygonOfRequestedSize,
    EmptySetProduced,
    SeparationFailed,
    SearchExhausted,
    GuardExceeded,
    NotFound,
    AssemblyFailed,
    PlaneConstructionFailed,
    HullsDisjoint,
    Parse,
    Invalid,
};

class Error : public std::runtime_error {
  public:
    Error(ErrKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrKind kind() const { return kind_; }

  private:
    ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind k, const std::string& msg) { throw Error(k, msg); }

inline int sign(const Rat& q) { return sgn(q); }
inline int sign(const Int& z) { return sgn(z); }

// Parses "p/q", integer, or decimal literals ("-1.25", "3e2") exactly.
Rat rat_parse(const std::string& s);
std::string rat_str(const Rat& q);

// Binomial coefficient as an exact integer; zero for k < 0 or k > n.
Int binomial(long n, long k);

struct Point {
    std::array<Rat, 3> c{};  // c[2] stays 0 for 2D points
    int dim = 3;

    Point() = default;
    Point(Rat x, Rat y) : c{std::move(x), std::move(y), Rat(0)}, dim(2) {}
    Point(Rat x, Rat y, Rat z) : c{std::move(x), std::move(y), std::move(z)}, dim(3) {}

    const Rat& operator[](int i) const { return c[i]; }
    Rat& operator[](int i) { return c[i]; }
    bool operator==(const Point& o) const { return dim == o.dim && c == o.c; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

Point operator-(const Point& a, const Point& b);
Point operator+(const Point& a, const Point& b);
Rat dot(const Point& a, const Point& b);
Point cross(const Point& a, const Point& b);  // 3D only
bool lex_less(const Point& a, const Point& b);

struct PointSet {
    int dim = 3;
    std::vector<Point> pts;
    std::vector<std::string> labels;  // empty or one per point

    PointSet() = default;
    explicit PointSet(int d) : dim(d) {}
    PointSet(int d, std::vector<Point> p) : dim(d), pts(std::move(p)) { check(); }

    int size() const { return static_cast<int>(pts.size()); }
    const Point& operator[](int i) const { return pts[static_cast<size_t>(i)]; }
    Point& operator[](int i) { return pts[static_cast<size_t>(i)]; }
    void push(Point p);
    // Verifies the shared-dimension and no-duplicates invariants.
    void check() const;
    PointSet subset(const std::vector<int>& idx) const;
};

// Oriented plane (3D) or line (2D): H+ = {x : normal.x >= offset},
// H- = {x : normal.x <= offset}.
struct OrientedPlane {
    std::array<Rat, 3> normal{};
    Rat offset;
    int dim = 3;

    OrientedPlane() = default;
    OrientedPlane(std::array<Rat, 3> n, Rat off, int d) : normal(std::move(n)), offset(std::move(off)), dim(d) {}

    Rat eval(const Point& p) const;
    int side(const Point& p) const { return sign(eval(p)); }
    OrientedPlane flipped() const;
};

// Plane through three 3D points, oriented so eval(x) > 0 iff
// orientation(a,b,c,x) > 0.
OrientedPlane plane_through(const Point& a, const Point& b, const Point& c);
// Line through two 2D points, oriented so eval(x) > 0 iff the triple
// (a,b,x) turns counterclockwise.
OrientedPlane line_through(const Point& a, const Point& b);

struct Segment {
    Point a, b;
    Segment(Point a_, Point b_) : a(std::move(a_)), b(std::move(b_)) {
        if (a == b) fail(ErrKind::Degenerate, "segment endpoints coincide");
    }
};

// Intersection of half-spaces {x : n.x >= c}, possibly unbounded or empty.
struct HalfSpaceSystem {
    int dim = 3;
    std::vector<OrientedPlane> planes;

    bool contains(const Point& p) const;
    bool strictly_contains(const Point& p) const;
};

// Deterministic 64-bit PRNG (splitmix64 stream) for reproducible jitters
// and test data; never feeds a predicate.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // Uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound);
    // Rational in [0,1) with the given power-of-two denominator exponent.
    Rat unit(int bits = 16);

  private:
    std::uint64_t state_;
};

}  // namespace esgeo
