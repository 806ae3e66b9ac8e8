#ifndef FIREGRID_VERTEX_HPP
#define FIREGRID_VERTEX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace firegrid {

// Coordinates are an integer pair for every lattice kind.
// Trees use (depth, index within level).
struct Vertex {
    int a = 0;
    int b = 0;
    friend constexpr bool operator==(const Vertex&, const Vertex&) = default;
    friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline constexpr Vertex operator+(Vertex u, Vertex v) { return {u.a + v.a, u.b + v.b}; }
inline constexpr Vertex operator-(Vertex u, Vertex v) { return {u.a - v.a, u.b - v.b}; }
inline constexpr Vertex operator-(Vertex u) { return {-u.a, -u.b}; }

inline std::string toString(Vertex v) {
    return "(" + std::to_string(v.a) + "," + std::to_string(v.b) + ")";
}

struct VertexHash {
    std::size_t operator()(Vertex v) const noexcept {
        auto x = static_cast<std::uint64_t>(static_cast<std::uint32_t>(v.a)) << 32 |
                 static_cast<std::uint32_t>(v.b);
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        return static_cast<std::size_t>(x);
    }
};

class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& detail)
        : std::runtime_error(detail), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

}  // namespace firegrid

#endif
