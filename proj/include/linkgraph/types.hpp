#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace linkgraph {

using Dart = int;
using EdgeId = int;

enum class Sign : std::int8_t { Minus = -1, Plus = 1 };

inline Sign negate(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }
inline int sign_int(Sign s) { return static_cast<int>(s); }

enum class CdLabel : std::uint8_t { C, D };

inline char cd_char(CdLabel l) { return l == CdLabel::C ? 'c' : 'd'; }

struct Weight {
    Sign tait = Sign::Plus;
    std::optional<Sign> oriented;
    std::optional<CdLabel> cd;

    bool operator==(const Weight&) const = default;
};

// Every failure raised by the library carries a short machine-readable kind
// ("NotPermutation", "ArcCount", ...) next to the human message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

// Raised by reconstruction when a labeling is not admissible.
class NotEulerian : public Error {
public:
    NotEulerian(std::vector<int> tait_vertices, std::vector<int> dual_vertices)
        : Error("NotEulerian", describe(tait_vertices, dual_vertices)),
          tait_vertices(std::move(tait_vertices)), dual_vertices(std::move(dual_vertices)) {}

    std::vector<int> tait_vertices;  // vertices of T with odd c-degree
    std::vector<int> dual_vertices;  // vertices of T* (faces of T) with odd c-degree

private:
    static std::string describe(const std::vector<int>& a, const std::vector<int>& b);
};

}  // namespace linkgraph
