#ifndef DDCAT_CORE_HPP
#define DDCAT_CORE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace ddcat {

using Int = std::int64_t;

struct InvalidParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidCoord : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotApplicable : std::logic_error {
    using std::logic_error::logic_error;
};
struct NotZComponent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
inline Int floor_mod(Int a, Int b) { return a - floor_div(a, b) * b; }

struct Params {
    int r = 0;
    int n = 0;
    int m = 0;

    int rank() const { return n + m; }
    friend bool operator==(const Params&, const Params&) = default;
};

inline Params make_params(int r, int n, int m) {
    if (r < 1) throw InvalidParams("r must be at least 1");
    if (n <= r) throw InvalidParams("n must exceed r");
    if (m < 0) throw InvalidParams("m must be nonnegative");
    return Params{r, n, m};
}

enum class Kind { X = 0, Y = 1, Z = 2 };

inline char kind_char(Kind k) { return k == Kind::X ? 'X' : (k == Kind::Y ? 'Y' : 'Z'); }

// Indecomposable object: component kind, component index k, coordinates (i,j).
struct Obj {
    Kind kind = Kind::Z;
    int k = 0;
    Int i = 0;
    Int j = 0;

    friend bool operator==(const Obj&, const Obj&) = default;
    friend bool operator<(const Obj& a, const Obj& b) {
        return std::tuple(int(a.kind), a.k, a.i, a.j) < std::tuple(int(b.kind), b.k, b.i, b.j);
    }
};

inline Obj X(int k, Int i, Int j) { return {Kind::X, k, i, j}; }
inline Obj Y(int k, Int i, Int j) { return {Kind::Y, k, i, j}; }
inline Obj Z(int k, Int i, Int j) { return {Kind::Z, k, i, j}; }

inline bool is_valid(const Params& P, const Obj& A) {
    if (A.k < 0 || A.k >= P.r) return false;
    if (A.kind == Kind::X) return A.j >= A.i;
    if (A.kind == Kind::Y) return A.i >= A.j;
    return true;
}

inline void require_valid(const Params& P, const Obj& A) {
    if (!is_valid(P, A)) throw InvalidCoord("invalid coordinate for these parameters");
}

inline Int height(const Obj& A) {
    if (A.kind == Kind::X) return A.j - A.i;
    if (A.kind == Kind::Y) return A.i - A.j;
    throw NotApplicable("Z components have no mouth");
}

inline bool at_mouth(const Obj& A) { return A.kind != Kind::Z && A.i == A.j; }

inline Obj tau(const Obj& A, Int power = 1) { return {A.kind, A.k, A.i - power, A.j - power}; }

// Coordinate shift picked up when wrapping from component r-1 to component 0.
inline std::array<Int, 2> wrap_shift(const Params& P, Kind kind) {
    switch (kind) {
    case Kind::X: return {P.r + P.m, P.r + P.m};
    case Kind::Y: return {P.r - P.n, P.r - P.n};
    default: return {P.r + P.m, P.r - P.n};
    }
}

inline Obj sigma(const Params& P, const Obj& A, Int power = 1) {
    Int total = A.k + power;
    Int q = floor_div(total, P.r);
    auto s = wrap_shift(P, A.kind);
    return {A.kind, int(total - q * P.r), A.i + q * s[0], A.j + q * s[1]};
}

inline Obj serre(const Params& P, const Obj& A, Int power = 1) { return sigma(P, tau(A, power), power); }

enum class Direction { ray_step, coray_step };

// Irreducible-map directions: ray_step moves j, coray_step moves i.
inline std::optional<Obj> mesh_move(const Obj& A, Direction dir, int sign) {
    Obj B = A;
    if (dir == Direction::ray_step) B.j += sign;
    else B.i += sign;
    if (B.kind == Kind::X && B.j < B.i) return std::nullopt;
    if (B.kind == Kind::Y && B.i < B.j) return std::nullopt;
    return B;
}

enum class Mouth { ray_mouth, coray_mouth };

// X: ray_mouth = X_ii, coray_mouth = X_jj.
// Y: coray_mouth = Y_ii, ray_mouth = Y_jj (symbol convention, see README).
// Z^k_ij: ray_mouth = S X^k_ii in X^{k+1}, coray_mouth = S Y^k_jj in Y^{k+1}.
inline Obj mouth_projection(const Params& P, const Obj& A, Mouth which) {
    switch (A.kind) {
    case Kind::X:
        return which == Mouth::ray_mouth ? X(A.k, A.i, A.i) : X(A.k, A.j, A.j);
    case Kind::Y:
        return which == Mouth::coray_mouth ? Y(A.k, A.i, A.i) : Y(A.k, A.j, A.j);
    default:
        return which == Mouth::ray_mouth ? serre(P, X(A.k, A.i, A.i)) : serre(P, Y(A.k, A.j, A.j));
    }
}

enum class TriangleKind { ray, coray };

inline std::array<Obj, 3> special_triangle(TriangleKind kind, int k, Int i, Int j, Int d) {
    if (d < 0) throw std::invalid_argument("d must be nonnegative");
    if (kind == TriangleKind::ray) return {X(k, i, i + d), Z(k, i, j), Z(k, i + d + 1, j)};
    return {Y(k, j + d, j), Z(k, i, j), Z(k, i, j + d + 1)};
}

// Segment between two objects on a common ray or coray, endpoints inclusive.
struct Segment {
    Obj from;
    Obj to;
    std::vector<Obj> members;
};

inline Segment make_segment(const Obj& a, const Obj& b) {
    if (a.kind != b.kind || a.k != b.k || (a.i != b.i && a.j != b.j))
        throw InvalidCoord("segment endpoints must share a ray or coray");
    Segment s{a, b, {}};
    Int len = (a.i == b.i) ? b.j - a.j : b.i - a.i;
    Int step = len >= 0 ? 1 : -1;
    for (Int t = 0; t != len + step; t += step) {
        Obj o = a;
        if (a.i == b.i) o.j += t;
        else o.i += t;
        s.members.push_back(o);
    }
    return s;
}

inline std::string to_string(const Obj& A) {
    return std::string(1, kind_char(A.kind)) + ":" + std::to_string(A.k) + ":" + std::to_string(A.i) + ":" +
           std::to_string(A.j);
}

struct ParseError : std::invalid_argument {
    std::size_t pos;
    ParseError(const std::string& what, std::size_t p) : std::invalid_argument(what), pos(p) {}
};

namespace detail {
inline Int parse_int(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        neg = s[pos] == '-';
        ++pos;
    }
    if (pos >= s.size() || s[pos] < '0' || s[pos] > '9') throw ParseError("expected integer", start);
    Int v = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
        if (v > (INT64_MAX - 9) / 10) throw ParseError("integer out of range", start);
        v = v * 10 + (s[pos] - '0');
        ++pos;
    }
    return neg ? -v : v;
}
inline void expect(const std::string& s, std::size_t& pos, char c) {
    if (pos >= s.size() || s[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
}
} // namespace detail

// Strict parser for KIND:k:i:j.
inline Obj parse_obj(const std::string& s, const Params* P = nullptr) {
    if (s.empty()) throw ParseError("empty coordinate", 0);
    Obj A;
    switch (s[0]) {
    case 'X': A.kind = Kind::X; break;
    case 'Y': A.kind = Kind::Y; break;
    case 'Z': A.kind = Kind::Z; break;
    default: throw ParseError("kind must be X, Y or Z", 0);
    }
    std::size_t pos = 1;
    detail::expect(s, pos, ':');
    std::size_t kpos = pos;
    Int k = detail::parse_int(s, pos);
    detail::expect(s, pos, ':');
    std::size_t ipos = pos;
    A.i = detail::parse_int(s, pos);
    detail::expect(s, pos, ':');
    A.j = detail::parse_int(s, pos);
    if (pos != s.size()) throw ParseError("trailing characters", pos);
    if (k < 0 || (P && k >= P->r)) throw ParseError("component index out of range", kpos);
    A.k = int(k);
    if (A.kind == Kind::X && A.j < A.i) throw ParseError("X coordinates need j >= i", ipos);
    if (A.kind == Kind::Y && A.i < A.j) throw ParseError("Y coordinates need i >= j", ipos);
    return A;
}

inline Params parse_params(const std::string& s) {
    std::size_t pos = 0;
    Int r = detail::parse_int(s, pos);
    detail::expect(s, pos, ',');
    Int n = detail::parse_int(s, pos);
    detail::expect(s, pos, ',');
    Int m = detail::parse_int(s, pos);
    if (pos != s.size()) throw ParseError("trailing characters", pos);
    return make_params(int(r), int(n), int(m));
}

// All valid objects with |i|,|j| <= w.
inline std::vector<Obj> window_objects(const Params& P, Int w) {
    std::vector<Obj> out;
    for (Kind kind : {Kind::X, Kind::Y, Kind::Z})
        for (int k = 0; k < P.r; ++k)
            for (Int i = -w; i <= w; ++i)
                for (Int j = -w; j <= w; ++j) {
                    Obj A{kind, k, i, j};
                    if (is_valid(P, A)) out.push_back(A);
                }
    return out;
}

} // namespace ddcat

#endif
