#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace sl3web {

// Exact rational on int64. Values stay tiny (coordinates and crossing
// abscissas of desk-scale diagrams), so no overflow guards beyond asserts.
struct rat64 {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr rat64() = default;
    constexpr rat64(std::int64_t n) : num(n), den(1) {}
    rat64(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        assert(den != 0);
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    friend rat64 operator+(rat64 a, rat64 b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
    friend rat64 operator-(rat64 a, rat64 b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
    friend rat64 operator*(rat64 a, rat64 b) { return {a.num * b.num, a.den * b.den}; }
    friend rat64 operator/(rat64 a, rat64 b) { assert(b.num != 0); return {a.num * b.den, a.den * b.num}; }
    friend rat64 operator-(rat64 a) { rat64 r; r.num = -a.num; r.den = a.den; return r; }

    friend bool operator==(const rat64&, const rat64&) = default;
    friend std::strong_ordering operator<=>(rat64 a, rat64 b) {
        return a.num * b.den <=> b.num * a.den;
    }

    // "7/2", or just "7" for integers
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
    double approx() const { return double(num) / double(den); }  // render emission only
};

}  // namespace sl3web
