#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "rigikit/core.hpp"

namespace rigikit {

using Rational = boost::multiprecision::cpp_rational;

// Real subfield element a + b*sqrt(5). Closed under +,-,* and ordered
// exactly, which is all the grid index computations need.
struct Real5 {
    Rational a{0};
    Rational b{0};

    Real5() = default;
    Real5(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}
    explicit Real5(long long n) : a(n) {}

    Real5 operator+(const Real5& o) const { return {a + o.a, b + o.b}; }
    Real5 operator-(const Real5& o) const { return {a - o.a, b - o.b}; }
    Real5 operator-() const { return {-a, -b}; }
    Real5 operator*(const Real5& o) const {
        return {a * o.a + 5 * b * o.b, a * o.b + b * o.a};
    }
    bool operator==(const Real5& o) const { return a == o.a && b == o.b; }

    // sqrt(5) is irrational, so a + b*sqrt(5) = 0 only at a = b = 0 and the
    // squared comparison below is never a tie.
    int sign() const {
        int sa = a.sign(), sb = b.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        return (a * a > 5 * b * b) ? sa : sb;
    }

    bool operator<(const Real5& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const Real5& o) const { return (*this - o).sign() <= 0; }

    bool is_integer() const {
        return b == 0 && boost::multiprecision::denominator(a) == 1;
    }

    double to_double() const {
        return a.convert_to<double>() + b.convert_to<double>() * std::sqrt(5.0);
    }

    long long floor() const {
        long long guess = static_cast<long long>(std::floor(to_double()));
        for (long long n = guess - 2; n <= guess + 2; ++n) {
            if ((*this - Real5(n)).sign() >= 0 && (*this - Real5(n + 1)).sign() < 0)
                return n;
        }
        throw DomainError("floor: approximation out of range");
    }

    long long ceil() const { return -((-*this).floor()); }
};

// Element of the cyclotomic field Q(zeta_5) on the basis 1, z, z^2, z^3
// with z = exp(2*pi*i/5); z^4 = -(1 + z + z^2 + z^3).
struct Cyclotomic5 {
    std::array<Rational, 4> c{};

    Cyclotomic5() = default;
    explicit Cyclotomic5(Rational r) { c[0] = std::move(r); }
    explicit Cyclotomic5(long long n) { c[0] = n; }

    static Cyclotomic5 zeta_pow(int m) {
        m = ((m % 5) + 5) % 5;
        Cyclotomic5 x;
        if (m == 4) {
            for (auto& v : x.c) v = -1;
        } else {
            x.c[m] = 1;
        }
        return x;
    }

    bool is_zero() const {
        for (const auto& v : c)
            if (v != 0) return false;
        return true;
    }

    bool operator==(const Cyclotomic5& o) const { return c == o.c; }
    bool operator!=(const Cyclotomic5& o) const { return !(*this == o); }

    Cyclotomic5 operator+(const Cyclotomic5& o) const {
        Cyclotomic5 r;
        for (int i = 0; i < 4; ++i) r.c[i] = c[i] + o.c[i];
        return r;
    }
    Cyclotomic5 operator-(const Cyclotomic5& o) const {
        Cyclotomic5 r;
        for (int i = 0; i < 4; ++i) r.c[i] = c[i] - o.c[i];
        return r;
    }
    Cyclotomic5 operator-() const {
        Cyclotomic5 r;
        for (int i = 0; i < 4; ++i) r.c[i] = -c[i];
        return r;
    }

    Cyclotomic5 operator*(const Cyclotomic5& o) const {
        std::array<Rational, 7> conv{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) conv[i + j] += c[i] * o.c[j];
        Cyclotomic5 r;
        for (int i = 0; i < 4; ++i) r.c[i] = conv[i];
        for (int i = 0; i < 4; ++i) r.c[i] -= conv[4];  // z^4
        r.c[0] += conv[5];                              // z^5 = 1
        r.c[1] += conv[6];                              // z^6 = z
        return r;
    }

    // Field automorphism z -> z^a for a in {1,2,3,4}.
    Cyclotomic5 galois(int a) const {
        Cyclotomic5 r;
        for (int m = 0; m < 4; ++m) {
            int e = (a * m) % 5;
            if (e == 4) {
                for (int i = 0; i < 4; ++i) r.c[i] -= c[m];
            } else {
                r.c[e] += c[m];
            }
        }
        return r;
    }

    Cyclotomic5 conj() const { return galois(4); }

    Cyclotomic5 inverse() const {
        if (is_zero()) throw DomainError("division by zero in Q(zeta_5)");
        Cyclotomic5 p = galois(2) * galois(3) * galois(4);
        Cyclotomic5 n = *this * p;  // the norm, a rational
        Cyclotomic5 r;
        for (int i = 0; i < 4; ++i) r.c[i] = p.c[i] / n.c[0];
        return r;
    }

    Cyclotomic5 operator/(const Cyclotomic5& o) const { return *this * o.inverse(); }

    // x is real iff x equals its own conjugate.
    bool is_real() const { return c[1] == 0 && c[2] == c[3]; }

    // For real x = c0 + c2 (z^2 + z^3) the value is c0 - c2 (1 + sqrt 5)/2.
    Real5 to_real5() const {
        if (!is_real()) throw DomainError("cyclotomic value is not real");
        return {c[0] - c[2] / 2, -c[2] / 2};
    }

    Real5 real_part() const {
        Cyclotomic5 twice = *this + conj();
        Real5 r = twice.to_real5();
        return {r.a / 2, r.b / 2};
    }

    Vec2 to_vec2() const {
        double x = 0, y = 0;
        for (int m = 0; m < 4; ++m) {
            double v = c[m].convert_to<double>();
            x += v * std::cos(2 * kPi * m / 5);
            y += v * std::sin(2 * kPi * m / 5);
        }
        return {x, y};
    }

   private:
    static constexpr double kPi = 3.14159265358979323846;
};

// Re(x * conj(y)), the plane dot product of two field elements.
inline Real5 dot(const Cyclotomic5& x, const Cyclotomic5& y) {
    return (x * y.conj()).real_part();
}

inline Real5 norm_squared(const Cyclotomic5& x) { return (x * x.conj()).to_real5(); }

// Integer coordinate in the ring Z[zeta_5], stored as a 5-tuple over the
// unit vectors e_m = zeta^m. The relation sum e_m = 0 makes tuples
// non-unique; the canonical form fixes k[4] = 0.
struct ZTuple {
    std::array<long long, 5> k{};

    ZTuple() = default;
    explicit ZTuple(const std::array<long long, 5>& raw) {
        for (int m = 0; m < 5; ++m) k[m] = raw[m] - raw[4];
    }

    static ZTuple unit(int m) {
        std::array<long long, 5> raw{};
        raw[((m % 5) + 5) % 5] = 1;
        return ZTuple(raw);
    }

    bool operator==(const ZTuple& o) const { return k == o.k; }
    bool operator!=(const ZTuple& o) const { return k != o.k; }
    bool operator<(const ZTuple& o) const { return k < o.k; }

    ZTuple operator+(const ZTuple& o) const {
        std::array<long long, 5> raw;
        for (int m = 0; m < 5; ++m) raw[m] = k[m] + o.k[m];
        return ZTuple(raw);
    }
    ZTuple operator-(const ZTuple& o) const {
        std::array<long long, 5> raw;
        for (int m = 0; m < 5; ++m) raw[m] = k[m] - o.k[m];
        return ZTuple(raw);
    }

    bool is_zero() const {
        for (long long v : k)
            if (v != 0) return false;
        return true;
    }

    // Multiplication by zeta^{-1}, a clockwise rotation by 72 degrees:
    // e_m maps to e_{m-1}.
    ZTuple rotated_cw() const {
        std::array<long long, 5> raw;
        for (int m = 0; m < 5; ++m) raw[m] = k[(m + 1) % 5];
        return ZTuple(raw);
    }

    // Multiplication by zeta, a counter-clockwise rotation by 72 degrees.
    ZTuple rotated_ccw() const {
        std::array<long long, 5> raw;
        for (int m = 0; m < 5; ++m) raw[m] = k[(m + 4) % 5];
        return ZTuple(raw);
    }

    Cyclotomic5 to_cyclotomic() const {
        Cyclotomic5 x;
        for (int m = 0; m < 4; ++m) x.c[m] = k[m];
        return x;
    }

    Vec2 to_vec2() const {
        double x = 0, y = 0;
        for (int m = 0; m < 5; ++m) {
            x += static_cast<double>(k[m]) * std::cos(2 * 3.14159265358979323846 * m / 5);
            y += static_cast<double>(k[m]) * std::sin(2 * 3.14159265358979323846 * m / 5);
        }
        return {x, y};
    }
};

inline std::string to_string(const ZTuple& t) {
    std::string s = "(";
    for (int m = 0; m < 5; ++m) s += std::to_string(t.k[m]) + (m < 4 ? "," : ")");
    return s;
}

}  // namespace rigikit
