#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace rigikit {

// Raised for semantically invalid inputs (violated preconditions, malformed
// data, size guards). The CLI maps it to exit code 2.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Vertex labels are either integers or strings. std::variant ordering gives
// the canonical order used everywhere: integers first (numeric), then
// strings (lexicographic).
using VertexId = std::variant<long long, std::string>;

inline std::string to_string(const VertexId& v) {
    if (std::holds_alternative<long long>(v)) return std::to_string(std::get<long long>(v));
    return std::get<std::string>(v);
}

// Undirected edge, endpoints stored in canonical order.
struct Edge {
    VertexId a, b;

    Edge() = default;
    Edge(VertexId x, VertexId y) {
        if (y < x) std::swap(x, y);
        a = std::move(x);
        b = std::move(y);
    }

    bool operator==(const Edge& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Edge& o) const { return !(*this == o); }
    bool operator<(const Edge& o) const {
        if (a != o.a) return a < o.a;
        return b < o.b;
    }

    bool touches(const VertexId& v) const { return a == v || b == v; }
    VertexId other(const VertexId& v) const { return a == v ? b : a; }
};

inline std::string to_string(const Edge& e) {
    return "{" + to_string(e.a) + "," + to_string(e.b) + "}";
}

struct Vec2 {
    double x = 0.0, y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
};

inline double dot(Vec2 p, Vec2 q) { return p.x * q.x + p.y * q.y; }
inline double cross(Vec2 p, Vec2 q) { return p.x * q.y - p.y * q.x; }

}  // namespace rigikit
