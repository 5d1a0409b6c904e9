#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>

namespace spanlab {

// Integer lattice vector in Z^3. All coordinate arithmetic in the library is
// exact; nothing in this header (or anywhere else touching geometry) goes
// through floating point.
struct Vec3 {
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t z = 0;

    friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend constexpr Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
    friend constexpr Vec3 operator*(std::int64_t k, Vec3 a) { return {k * a.x, k * a.y, k * a.z}; }
    friend constexpr bool operator==(Vec3 a, Vec3 b) = default;
    friend constexpr auto operator<=>(Vec3 a, Vec3 b) = default;
};

constexpr std::int64_t dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline std::ostream& operator<<(std::ostream& os, Vec3 v) {
    return os << '(' << v.x << ',' << v.y << ',' << v.z << ')';
}

// 2D lattice vector, used by the sourcewise inner graph.
struct Vec2 {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Vec2 operator*(std::int64_t k, Vec2 a) { return {k * a.x, k * a.y}; }
    friend constexpr bool operator==(Vec2 a, Vec2 b) = default;
    friend constexpr auto operator<=>(Vec2 a, Vec2 b) = default;
};

constexpr std::int64_t dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

inline std::ostream& operator<<(std::ostream& os, Vec2 v) {
    return os << '(' << v.x << ',' << v.y << ')';
}

}  // namespace spanlab

template <>
struct std::hash<spanlab::Vec3> {
    std::size_t operator()(const spanlab::Vec3& v) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (std::int64_t c : {v.x, v.y, v.z}) {
            h ^= static_cast<std::uint64_t>(c);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

template <>
struct std::hash<spanlab::Vec2> {
    std::size_t operator()(const spanlab::Vec2& v) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (std::int64_t c : {v.x, v.y}) {
            h ^= static_cast<std::uint64_t>(c);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};
