#include "esgeo/core.hpp"

#include <algorithm>
#include <cctype>

namespace esgeo {

Rat rat_parse(const std::string& s) {
    if (s.empty()) fail(ErrKind::Parse, "empty rational literal");
    if (s.find('/') != std::string::npos) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) fail(ErrKind::Parse, "bad rational literal: " + s);
        if (sgn(q.get_den()) == 0) fail(ErrKind::Parse, "zero denominator: " + s);
        q.canonicalize();
        if (sgn(q.get_den()) < 0) {
            q.get_num() = -q.get_num();
            q.get_den() = -q.get_den();
        }
        return q;
    }
    // Decimal or integer, optional exponent. Parsed digit-exactly.
    size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < s.size(); ++i) {
        char ch = s[i];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits += ch;
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else if (ch == '.' && !seen_dot) {
            seen_dot = true;
        } else if ((ch == 'e' || ch == 'E') && seen_digit) {
            break;
        } else {
            fail(ErrKind::Parse, "bad numeric literal: " + s);
        }
    }
    long exp10 = 0;
    if (i < s.size()) {
        try {
            exp10 = std::stol(s.substr(i + 1));
        } catch (const std::exception&) {
            fail(ErrKind::Parse, "bad exponent in literal: " + s);
        }
    }
    if (!seen_digit) fail(ErrKind::Parse, "bad numeric literal: " + s);
    Int num(digits.empty() ? "0" : digits);
    if (neg) num = -num;
    long shift = exp10 - frac_digits;
    Int den = 1;
    if (shift >= 0) {
        Int pow10;
        mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift));
        num *= pow10;
    } else {
        mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
    }
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Point operator-(const Point& a, const Point& b) {
    Point r;
    r.dim = a.dim;
    for (int i = 0; i < 3; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

Point operator+(const Point& a, const Point& b) {
    Point r;
    r.dim = a.dim;
    for (int i = 0; i < 3; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

Rat dot(const Point& a, const Point& b) { return a.c[0] * b.c[0] + a.c[1] * b.c[1] + a.c[2] * b.c[2]; }

Point cross(const Point& a, const Point& b) {
    Point r;
    r.dim = 3;
    r.c[0] = a.c[1] * b.c[2] - a.c[2] * b.c[1];
    r.c[1] = a.c[2] * b.c[0] - a.c[0] * b.c[2];
    r.c[2] = a.c[0] * b.c[1] - a.c[1] * b.c[0];
    return r;
}

bool lex_less(const Point& a, const Point& b) {
    for (int i = 0; i < 3; ++i) {
        int c = cmp(a.c[i], b.c[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

void PointSet::push(Point p) {
    if (p.dim != dim) fail(ErrKind::DimensionMismatch, "point dimension does not match set");
    pts.push_back(std::move(p));
}

void PointSet::check() const {
    if (dim != 2 && dim != 3) fail(ErrKind::Invalid, "dimension must be 2 or 3");
    for (const Point& p : pts)
        if (p.dim != dim) fail(ErrKind::DimensionMismatch, "mixed point dimensions");
    std::vector<const Point*> order;
    order.reserve(pts.size());
    for (const Point& p : pts) order.push_back(&p);
    std::sort(order.begin(), order.end(), [](const Point* a, const Point* b) { return lex_less(*a, *b); });
    for (size_t i = 1; i < order.size(); ++i)
        if (*order[i] == *order[i - 1]) fail(ErrKind::Invalid, "duplicate point in set");
    if (!labels.empty() && labels.size() != pts.size()) fail(ErrKind::Invalid, "label count mismatch");
}

PointSet PointSet::subset(const std::vector<int>& idx) const {
    PointSet r(dim);
    for (int i : idx) {
        r.pts.push_back(pts[static_cast<size_t>(i)]);
        if (!labels.empty()) r.labels.push_back(labels[static_cast<size_t>(i)]);
    }
    return r;
}

Rat OrientedPlane::eval(const Point& p) const {
    return normal[0] * p.c[0] + normal[1] * p.c[1] + normal[2] * p.c[2] - offset;
}

OrientedPlane OrientedPlane::flipped() const {
    OrientedPlane f = *this;
    for (auto& n : f.normal) n = -n;
    f.offset = -offset;
    return f;
}

OrientedPlane plane_through(const Point& a, const Point& b, const Point& c) {
    Point n = cross(b - a, c - a);
    if (sign(n.c[0]) == 0 && sign(n.c[1]) == 0 && sign(n.c[2]) == 0)
        fail(ErrKind::Degenerate, "plane through collinear points");
    return OrientedPlane({n.c[0], n.c[1], n.c[2]}, dot(n, a), 3);
}

OrientedPlane line_through(const Point& a, const Point& b) {
    // (b-a) rotated by +90 degrees.
    Rat nx = a.c[1] - b.c[1];
    Rat ny = b.c[0] - a.c[0];
    if (sign(nx) == 0 && sign(ny) == 0) fail(ErrKind::Degenerate, "line through equal points");
    Rat off = nx * a.c[0] + ny * a.c[1];
    return OrientedPlane({nx, ny, Rat(0)}, off, 2);
}

bool HalfSpaceSystem::contains(const Point& p) const {
    for (const auto& pl : planes)
        if (pl.side(p) < 0) return false;
    return true;
}

bool HalfSpaceSystem::strictly_contains(const Point& p) const {
    for (const auto& pl : planes)
        if (pl.side(p) <= 0) return false;
    return true;
}

std::uint64_t Rng::next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    // Rejection keeps the distribution uniform and the stream deterministic.
    std::uint64_t limit = bound * ((~0ull) / bound);
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % bound;
}

Rat Rng::unit(int bits) {
    std::uint64_t den = 1ull << bits;
    Rat q(static_cast<unsigned long>(below(den)), static_cast<unsigned long>(den));
    q.canonicalize();
    return q;
}

}  // namespace esgeo
