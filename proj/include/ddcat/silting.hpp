#ifndef DDCAT_SILTING_HPP
#define DDCAT_SILTING_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "autoequiv.hpp"
#include "core.hpp"
#include "dynkin.hpp"
#include "hammocks.hpp"

namespace ddcat {

struct NotOrthogonal : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline void require_Z(const Obj& A) {
    if (A.kind != Kind::Z) throw NotZComponent("expected a Z-component object, got " + to_string(A));
}

inline Obj base_Z() { return Z(0, 0, 0); }

// ---------------------------------------------------------------------------
// Total order on ind Z

inline bool order_leq(const Params& P, const Obj& A, const Obj& B) {
    require_Z(A);
    require_Z(B);
    if (A.k < B.k) return sigma(P, A, B.k - A.k).i <= B.i;
    if (A.k > B.k) return tau(sigma(P, A, B.k - A.k), -1).i <= B.i;
    if (A.i == B.i) return A.j <= B.j;
    return A.i < B.i;
}

inline bool order_less(const Params& P, const Obj& A, const Obj& B) { return !(A == B) && order_leq(P, A, B); }

// ---------------------------------------------------------------------------
// Z^perp for Z = Z^0_{0,0}.  It splits into blocks indexed by (k,q); block (k,q) is
// Sigma^{qr+k} of block (0,0), which is a copy of mod kA_t, t = n+m-1.  With
// M = m+r, N = n-r the block (k,q) consists of
//   X^k_{cd}, qM <= c <= d <= qM+M-2
//   Sigma Y^k_{cd}, -(q+1)N <= d <= c <= -qN-2
//   Z^k_{cd}, qM <= c <= qM+M-1, -(q+1)N <= d <= -qN-1

namespace detail {

inline Int blockM(const Params& P) { return P.m + P.r; }
inline Int blockN(const Params& P) { return P.n - P.r; }

// block index q of U, or nullopt if U is not in Z^perp
inline std::optional<Int> zperp_block(const Params& P, const Obj& U) {
    const Int M = blockM(P), N = blockN(P);
    switch (U.kind) {
    case Kind::X: {
        Int q = floor_div(U.i, M);
        if (U.j <= q * M + M - 2) return q;
        return std::nullopt;
    }
    case Kind::Y: {
        Int q = floor_div(-U.j - 1, N);
        if (U.i <= -q * N - 2) return q;
        return std::nullopt;
    }
    default: {
        Int q = floor_div(U.i, M);
        if (-(q + 1) * N <= U.j && U.j <= -q * N - 1) return q;
        return std::nullopt;
    }
    }
}

inline Obj heart_to_ambient(const Params& P, const APos& x) {
    const Int M = blockM(P), N = blockN(P);
    Int a = x.ray(), b = x.coray();
    if (b <= M - 1) return X(0, a, b - 1);
    if (a <= M - 1) return Z(0, a, b - M - N);
    return sigma(P, Y(0, b - M - N - 1, a - M - N), 1);
}

inline APos heart_from_ambient(const Params& P, const Obj& U) {
    const Int M = blockM(P), N = blockN(P);
    switch (U.kind) {
    case Kind::X: return at_from_rays(U.i, U.j + 1);
    case Kind::Z: return at_from_rays(U.i, U.j + M + N);
    default: {
        Obj V = sigma(P, U, -1);
        return at_from_rays(V.j + M + N, V.i + M + N + 1);
    }
    }
}

} // namespace detail

inline int chart_rank(const Params& P) { return P.n + P.m - 1; }

inline bool in_zperp(const Params& P, const Obj& Zb, const Obj& U) { return graded_hom(P, Zb, U).empty(); }

// Chart relative to Z^0_{0,0}; block (0,0) is the heart with P(1) = X^0_{0,0}.
inline Obj chart_to_ambient00(const Params& P, const APos& p) {
    auto [e, x] = at_heart_decompose(chart_rank(P), p);
    return sigma(P, detail::heart_to_ambient(P, x), e);
}

inline std::optional<APos> ambient_to_chart00(const Params& P, const Obj& U) {
    auto q = detail::zperp_block(P, U);
    if (!q) return std::nullopt;
    Int e = *q * P.r + U.k + (U.kind == Kind::Y ? -1 : 0);
    Obj base = sigma(P, U, -e);
    return at_sigma(chart_rank(P), detail::heart_from_ambient(P, base), e);
}

// Transport along the twist taking Z^0_{0,0} to Zb.
inline AutoEq to_base(const Params& P, const Obj& Zb) { return transitive_witness(P, base_Z(), Zb); }

inline Obj chart_to_ambient(const Params& P, const Obj& Zb, const APos& p) {
    return apply(P, to_base(P, Zb), chart_to_ambient00(P, p));
}

inline std::optional<APos> ambient_to_chart(const Params& P, const Obj& Zb, const Obj& U) {
    return ambient_to_chart00(P, apply(P, invert(P, to_base(P, Zb)), U));
}

struct ZperpEntry {
    Obj obj;
    APos pos;
};

struct ZperpChart {
    std::vector<ZperpEntry> entries;
    // irreducible maps of the embedded D^b(kA_t), as index pairs into entries
    std::vector<std::pair<std::size_t, std::size_t>> arrows;
};

inline ZperpChart zperp_objects(const Params& P, const Obj& Zb, Int window) {
    require_Z(Zb);
    ZperpChart out;
    for (const Obj& U : window_objects(P, window)) {
        auto pos = ambient_to_chart(P, Zb, U);
        if (pos) out.entries.push_back({U, *pos});
    }
    for (std::size_t s = 0; s < out.entries.size(); ++s)
        for (std::size_t d = 0; d < out.entries.size(); ++d) {
            const APos &x = out.entries[s].pos, &y = out.entries[d].pos;
            if ((y.g == x.g && y.h == x.h + 1) || (y.g == x.g + 1 && y.h == x.h - 1)) out.arrows.push_back({s, d});
        }
    return out;
}

// ---------------------------------------------------------------------------
// G: cocone of the minimal left add{Sigma^i Z : i >= 1}-approximation

namespace detail {

// Cone of a non-zero map U -> W between objects of one component, W in Z.
inline std::optional<Obj> cone_into_Z(const Params& P, const Obj& U, const Obj& W) {
    if (U.k != W.k) return std::nullopt;
    if (U.kind == Kind::X && W.i == U.i) return Z(U.k, U.j + 1, W.j);
    if (U.kind == Kind::Y && W.j == U.j) return Z(U.k, W.i, U.i + 1);
    if (U.kind == Kind::Z && W.i == U.i && W.j > U.j) return sigma(P, Y(U.k, W.j - 1, U.j));
    if (U.kind == Kind::Z && W.j == U.j && W.i > U.i) return sigma(P, X(U.k, U.i, W.i - 1));
    return std::nullopt;
}

} // namespace detail

struct Approximation {
    std::vector<Obj> targets; // summands Sigma^i Z of B_U, i >= 1
    Obj cocone;
};

inline Approximation approximate00(const Params& P, const Obj& U) {
    const Obj Z0 = base_Z();
    if (!in_zperp(P, Z0, U)) throw NotOrthogonal(to_string(U) + " is not in the right orthogonal of " + to_string(Z0));
    Approximation ap{{}, U};
    for (auto& [d, v] : graded_hom(P, U, Z0).entries) {
        if (d < 1 || !v) continue;
        if (v != 1) throw std::logic_error("approximation with a two-dimensional hom space at " + to_string(U));
        ap.targets.push_back(sigma(P, Z0, d));
    }
    std::optional<Obj> cone;
    if (ap.targets.empty()) return ap;
    if (ap.targets.size() == 1) {
        cone = detail::cone_into_Z(P, U, ap.targets[0]);
    } else if (ap.targets.size() == 2 && U.kind == Kind::Z) {
        // Z_{ab} -> Z_{ab'} + Z_{a'b} has cone Z_{a'b'}
        const Obj &A = ap.targets[0], &B = ap.targets[1];
        if (A.k == U.k && B.k == U.k) {
            if (A.i == U.i && B.j == U.j) cone = Z(U.k, B.i, A.j);
            else if (B.i == U.i && A.j == U.j) cone = Z(U.k, A.i, B.j);
        }
    }
    if (!cone) throw std::logic_error("unexpected approximation shape at " + to_string(U));
    ap.cocone = sigma(P, *cone, -1);
    return ap;
}

inline Obj lift_G(const Params& P, const Obj& Zb, const Obj& U) {
    require_Z(Zb);
    AutoEq f = to_base(P, Zb);
    Obj V = apply(P, invert(P, f), U);
    return apply(P, f, approximate00(P, V).cocone);
}

// ---------------------------------------------------------------------------
// Forbidden region Z^perp_< = {U : G(U) in Z, G(U) < Z}

inline bool is_forbidden(const Params& P, const Obj& Zb, const Obj& U) {
    Obj G = lift_G(P, Zb, U);
    return G.kind == Kind::Z && order_less(P, G, Zb);
}

// The same set through the chart: Sigma^i A (i <= -r), Sigma^i B (1-r <= i < 0), C, where A, B
// are the modules supported at vertex m+r (resp. m+r and m+r+1) and C = {P(m+r+1), ..., P(t)}.
inline bool is_forbidden_chart(const Params& P, const APos& p) {
    const int t = chart_rank(P);
    const Int M = detail::blockM(P), N = detail::blockN(P);
    auto [e, x] = at_heart_decompose(t, p);
    auto supported = [&](Int v) { return x.ray() + 1 <= v && v <= x.coray(); };
    bool inA = supported(M);
    bool inB = N > 1 && inA && supported(M + 1);
    bool inC = N > 1 && x.g == 0 && x.h >= M + 1;
    return (inA && e <= -P.r) || (inB && 1 - P.r <= e && e < 0) || (inC && e == 0);
}

inline std::vector<Obj> forbidden_region(const Params& P, const Obj& Zb, Int window) {
    std::vector<Obj> out;
    for (auto& en : zperp_objects(P, Zb, window).entries)
        if (is_forbidden_chart(P, en.pos)) out.push_back(en.obj);
    return out;
}

inline std::vector<Obj> forbidden_region_by_definition(const Params& P, const Obj& Zb, Int window) {
    std::vector<Obj> out;
    for (auto& en : zperp_objects(P, Zb, window).entries)
        if (is_forbidden(P, Zb, en.obj)) out.push_back(en.obj);
    return out;
}

// ---------------------------------------------------------------------------
// Silting checks and aisles

using ObjSet = std::vector<Obj>;

inline ObjSet sorted_set(ObjSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline bool is_partial_silting(const Params& P, const ObjSet& S) {
    for (auto& A : S)
        for (auto& B : S)
            for (auto& [d, v] : graded_hom(P, A, B).entries)
                if (d > 0 && v) return false;
    return true;
}

inline bool is_tilting(const Params& P, const ObjSet& S) {
    for (auto& A : S)
        for (auto& B : S)
            for (auto& [d, v] : graded_hom(P, A, B).entries)
                if (d != 0 && v) return false;
    return true;
}

struct AisleMembership {
    bool in_X = true;
    bool in_Y = true;
};

inline AisleMembership aisle_membership(const Params& P, const ObjSet& Msum, const Obj& D) {
    AisleMembership a;
    for (auto& Ms : Msum)
        for (auto& [d, v] : graded_hom(P, Ms, D).entries) {
            if (!v) continue;
            if (d >= 1) a.in_X = false;
            if (d <= 0) a.in_Y = false;
        }
    return a;
}

// ---------------------------------------------------------------------------
// Families

struct ShiftConstraint {
    // p[hi] >= p[lo]
    std::vector<std::pair<int, int>> order;
    // p[x] >= bound
    std::vector<std::pair<int, Int>> lower;
    // p[x] != value
    std::vector<std::pair<int, Int>> excluded;
};

struct SiltingFamily {
    Obj base;
    AtObject tilting;          // exceptional order
    std::vector<std::string> names;
    ShiftConstraint raw;       // full relation set used for instance checks
    ShiftConstraint display;   // reduced form
};

inline std::string shift_variable(std::size_t x) {
    static const char* letters = "ijklmnopqrsuvw";
    if (x < 14) return std::string(1, letters[x]);
    return "p" + std::to_string(x + 1);
}

inline std::vector<std::string> constraint_strings(const SiltingFamily& F) {
    std::vector<std::string> out;
    for (auto& [lo, hi] : F.display.order) out.push_back(shift_variable(hi) + " >= " + shift_variable(lo));
    for (auto& [x, b] : F.display.lower) out.push_back(shift_variable(x) + " >= " + std::to_string(b));
    for (auto& [x, v] : F.display.excluded) out.push_back(shift_variable(x) + " != " + std::to_string(v));
    return out;
}

namespace detail {

inline Int forbidden_scan_span(const Params& P) { return 4 * P.r + 2 * chart_rank(P) + 6; }

inline bool chart_summand_forbidden(const Params& P, const APos& p, Int s) {
    return is_forbidden_chart(P, at_sigma(chart_rank(P), p, s));
}

inline ShiftConstraint family_constraints(const Params& P, const AtObject& T, bool avoid_forbidden) {
    const int t = chart_rank(P);
    const std::size_t n = T.size();
    ShiftConstraint c;
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (x != y && !at_graded_hom(t, T[x], T[y]).empty()) {
                c.order.push_back({int(x), int(y)});
                reach[x][y] = true;
            }
    if (!avoid_forbidden) return c;
    const Int S = forbidden_scan_span(P);
    for (std::size_t x = 0; x < n; ++x) {
        Int s = -S;
        while (s <= S && chart_summand_forbidden(P, T[x], s)) ++s;
        if (s > -S) c.lower.push_back({int(x), s});
        for (; s <= S; ++s)
            if (chart_summand_forbidden(P, T[x], s)) c.excluded.push_back({int(x), s});
    }
    return c;
}

inline ShiftConstraint reduce(const ShiftConstraint& c, std::size_t n) {
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (auto& [lo, hi] : c.order) reach[lo][hi] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (reach[a][k] && reach[k][b]) reach[a][b] = true;
    ShiftConstraint out;
    for (auto& [lo, hi] : c.order) {
        bool implied = false;
        for (std::size_t k = 0; k < n; ++k)
            if (int(k) != lo && int(k) != hi && reach[lo][k] && reach[k][hi]) implied = true;
        if (!implied) out.order.push_back({lo, hi});
    }
    for (auto& [x, b] : c.lower) {
        bool implied = false;
        for (auto& [y, b2] : c.lower)
            if (y != x && reach[y][x] && b2 >= b) implied = true;
        if (!implied) out.lower.push_back({x, b});
    }
    out.excluded = c.excluded;
    auto by_hi = [](auto& u, auto& v) { return std::pair(u.second, u.first) < std::pair(v.second, v.first); };
    std::sort(out.order.begin(), out.order.end(), by_hi);
    std::sort(out.lower.begin(), out.lower.end());
    return out;
}

inline bool satisfies(const Params& P, const AtObject& T, const ShiftConstraint& c, const std::vector<Int>& p,
                      bool avoid_forbidden) {
    for (auto& [lo, hi] : c.order)
        if (p[hi] < p[lo]) return false;
    if (avoid_forbidden)
        for (std::size_t x = 0; x < T.size(); ++x)
            if (chart_summand_forbidden(P, T[x], p[x])) return false;
    return true;
}

} // namespace detail

inline std::vector<SiltingFamily> silting_families(const Params& P, const Obj& Zb, bool avoid_forbidden = true) {
    require_Z(Zb);
    const int t = chart_rank(P);
    std::vector<SiltingFamily> out;
    for (auto& T : at_tilting_objects(t)) {
        SiltingFamily F;
        F.base = Zb;
        F.tilting = T;
        for (auto& p : T) F.names.push_back(at_module_name(t, p));
        F.raw = detail::family_constraints(P, T, avoid_forbidden);
        F.display = detail::reduce(F.raw, T.size());
        out.push_back(F);
    }
    return out;
}

// Sigma^{p_x} T_x lifted along G and completed by Zb.
inline ObjSet family_instance(const Params& P, const SiltingFamily& F, const std::vector<Int>& p) {
    const int t = chart_rank(P);
    ObjSet M{F.base};
    for (std::size_t x = 0; x < F.tilting.size(); ++x) {
        Obj U = chart_to_ambient(P, F.base, at_sigma(t, F.tilting[x], p[x]));
        M.push_back(lift_G(P, F.base, U));
    }
    return sorted_set(M);
}

inline void for_each_shift(std::size_t n, Int lo, Int hi, const std::function<void(const std::vector<Int>&)>& fn) {
    std::vector<Int> p(n, lo);
    if (n == 0 || lo > hi) {
        if (n == 0) fn(p);
        return;
    }
    for (;;) {
        fn(p);
        std::size_t x = 0;
        while (x < n && p[x] == hi) p[x++] = lo;
        if (x == n) return;
        ++p[x];
    }
}

struct SiltingEnumeration {
    std::vector<SiltingFamily> families;
    std::vector<ObjSet> instances;
};

inline SiltingEnumeration enumerate_silting(const Params& P, const Obj& Zb, Int lo, Int hi) {
    SiltingEnumeration out;
    out.families = silting_families(P, Zb, true);
    std::set<ObjSet> seen;
    for (auto& F : out.families)
        for_each_shift(F.tilting.size(), lo, hi, [&](const std::vector<Int>& p) {
            if (!detail::satisfies(P, F.tilting, F.raw, p, true)) return;
            ObjSet M = family_instance(P, F, p);
            if (seen.insert(M).second) out.instances.push_back(M);
        });
    std::sort(out.instances.begin(), out.instances.end());
    return out;
}

// Every tilting object containing Zb, from all families with shifts in [-window, window].
inline std::vector<ObjSet> tilting_with(const Params& P, const Obj& Zb, Int window) {
    std::set<ObjSet> seen;
    for (auto& F : silting_families(P, Zb, false))
        for_each_shift(F.tilting.size(), -window, window, [&](const std::vector<Int>& p) {
            if (!detail::satisfies(P, F.tilting, F.raw, p, false)) return;
            ObjSet M = family_instance(P, F, p);
            if (is_tilting(P, M)) seen.insert(M);
        });
    return {seen.begin(), seen.end()};
}

} // namespace ddcat

#endif
