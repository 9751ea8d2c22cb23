#pragma once

#include <cassert>
#include <cstdint>
#include <cstdlib>
#include <numeric>

namespace hexmosaic {

// Exact rational arithmetic.  Every coordinate in this project lives on a
// small lattice (board radius <= 10, denominators <= 64 after reduction),
// so int64 has a huge safety margin.
struct Frac {
    long long num = 0;
    long long den = 1;

    Frac() = default;
    Frac(long long n) : num(n), den(1) {}
    Frac(long long n, long long d) : num(n), den(d) { reduce(); }

    void reduce() {
        assert(den != 0);
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    friend Frac operator+(Frac a, Frac b) { return Frac(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Frac operator-(Frac a, Frac b) { return Frac(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Frac operator*(Frac a, Frac b) { return Frac(a.num * b.num, a.den * b.den); }
    friend Frac operator/(Frac a, Frac b) { assert(b.num != 0); return Frac(a.num * b.den, a.den * b.num); }
    Frac operator-() const { Frac r; r.num = -num; r.den = den; return r; }

    friend bool operator==(const Frac& a, const Frac& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }
    friend bool operator<(const Frac& a, const Frac& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator>(const Frac& a, const Frac& b) { return b < a; }
    friend bool operator<=(const Frac& a, const Frac& b) { return !(b < a); }
    friend bool operator>=(const Frac& a, const Frac& b) { return !(a < b); }

    int sign() const { return num > 0 ? 1 : num < 0 ? -1 : 0; }
};

// A lattice point (u, v) stands for the plane point (u*sqrt(3), v).  Cross
// products of lattice vectors come out as integer multiples of sqrt(3), so
// orientation tests are exact integer arithmetic.
struct RPt {
    Frac u, v;

    RPt() = default;
    RPt(Frac uu, Frac vv) : u(uu), v(vv) {}
    RPt(long long uu, long long vv) : u(uu), v(vv) {}

    friend RPt operator+(const RPt& a, const RPt& b) { return {a.u + b.u, a.v + b.v}; }
    friend RPt operator-(const RPt& a, const RPt& b) { return {a.u - b.u, a.v - b.v}; }
    friend bool operator==(const RPt& a, const RPt& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator!=(const RPt& a, const RPt& b) { return !(a == b); }
    friend bool operator<(const RPt& a, const RPt& b) {
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    }
};

// sign of the z-component of (a x b), both interpreted as plane vectors
inline int cross_sign(const RPt& a, const RPt& b) {
    return (a.u * b.v - a.v * b.u).sign();
}

inline Frac cross_val(const RPt& a, const RPt& b) { return a.u * b.v - a.v * b.u; }

inline int orient(const RPt& a, const RPt& b, const RPt& c) {
    return cross_sign(b - a, c - a);
}

// Intersection of open segments (a,b) and (c,d); proper crossings only.
// Returns false when the segments do not cross in their interiors.
inline bool segment_intersection(const RPt& a, const RPt& b, const RPt& c, const RPt& d, RPt& out) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 * o2 >= 0 || o3 * o4 >= 0) return false;
    Frac denom = cross_val(b - a, d - c);
    assert(denom.sign() != 0);
    Frac t = cross_val(c - a, d - c) / denom;
    out = {a.u + t * (b.u - a.u), a.v + t * (b.v - a.v)};
    return true;
}

// CCW comparison of direction vectors around a common origin.
// Total order: half plane (angle in [0,pi) before [pi,2pi)), then angle.
inline bool dir_less(const RPt& a, const RPt& b) {
    auto half = [](const RPt& p) {
        // 0 for angle in [0, 180), 1 for [180, 360)
        if (p.v.sign() > 0) return 0;
        if (p.v.sign() < 0) return 1;
        return p.u.sign() > 0 ? 0 : 1;
    };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return cross_sign(a, b) > 0;
}

} // namespace hexmosaic
