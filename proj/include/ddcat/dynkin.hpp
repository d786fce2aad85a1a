#ifndef DDCAT_DYNKIN_HPP
#define DDCAT_DYNKIN_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "core.hpp"

namespace ddcat {

// Indecomposable of D^b(kA_t) at AR coordinate (g,h), 1 <= h <= t.
// Arrows (g,h) -> (g,h+1) and (g,h) -> (g+1,h-1); tau lowers g by one.
struct APos {
    Int g = 0;
    Int h = 1;

    Int ray() const { return g; }
    Int coray() const { return g + h; }
    friend bool operator==(const APos&, const APos&) = default;
    friend bool operator<(const APos& a, const APos& b) { return std::pair(a.g, a.h) < std::pair(b.g, b.h); }
};

inline std::string to_string(const APos& p) { return "(" + std::to_string(p.g) + "," + std::to_string(p.h) + ")"; }

inline APos at_from_rays(Int a, Int b) { return {a, b - a}; }

inline APos at_tau(const APos& p, Int power = 1) { return {p.g - power, p.h}; }

inline APos at_sigma(int t, APos p, Int power = 1) {
    Int a = p.ray(), b = p.coray();
    for (; power > 0; --power) {
        Int na = b, nb = a + t + 1;
        a = na;
        b = nb;
    }
    for (; power < 0; ++power) {
        Int na = b - t - 1, nb = a;
        a = na;
        b = nb;
    }
    return at_from_rays(a, b);
}

// Degree-0 hom: the rectangle spanned by p and its Serre image.
inline int at_hom(int t, const APos& p, const APos& q) {
    return p.ray() <= q.ray() && q.ray() <= p.coray() - 1 && p.coray() <= q.coray() && q.coray() <= p.ray() + t;
}

inline std::map<Int, int> at_graded_hom(int t, const APos& p, const APos& q) {
    std::map<Int, int> out;
    // Sigma^2 = tau^{-(t+1)}, so a few periods either side cover the support
    Int span = (std::llabs(p.g - q.g) + 2 * t + 2) / (t + 1) * 2 + 4;
    for (Int d = -span; d <= span; ++d)
        if (at_hom(t, p, at_sigma(t, q, d))) out[d] = 1;
    return out;
}

// Heart of the linear orientation 1 <- 2 <- ... <- t.
inline bool at_in_heart(int t, const APos& p) { return p.g >= 0 && p.g + p.h <= t; }

// Writes p = Sigma^e x with x in the heart.
inline std::pair<Int, APos> at_heart_decompose(int t, APos p) {
    Int a = p.ray(), b = p.coray(), e = 0;
    while (a < 0) {
        Int na = b, nb = a + t + 1;
        a = na;
        b = nb;
        --e;
    }
    while (b > t) {
        Int na = b - t - 1, nb = a;
        a = na;
        b = nb;
        ++e;
    }
    return {e, at_from_rays(a, b)};
}

inline APos at_projective(int i) { return {0, i}; }

inline std::string at_module_name(int t, const APos& p) {
    auto [e, x] = at_heart_decompose(t, p);
    std::string base;
    Int lo = x.ray() + 1, hi = x.coray();
    if (x.g == 0) base = "P(" + std::to_string(hi) + ")";
    else if (lo == hi) base = "S(" + std::to_string(lo) + ")";
    else if (hi == t) base = "I(" + std::to_string(lo) + ")";
    else base = "M(" + std::to_string(lo) + ".." + std::to_string(hi) + ")";
    if (e == 0) return base;
    if (e == 1) return "S" + base;
    return "S^" + std::to_string(e) + base;
}

enum class Color { alpha, beta };

struct AtEdge {
    int from;
    int to;
    Color color;
    friend bool operator==(const AtEdge&, const AtEdge&) = default;
};

struct AtQuiver {
    int t = 1;
    std::vector<AtEdge> edges;
};

inline bool at_quiver_valid(const AtQuiver& Q) {
    if (int(Q.edges.size()) != Q.t - 1) return false;
    std::vector<int> out_a(Q.t), in_a(Q.t), out_b(Q.t), in_b(Q.t);
    std::vector<int> parent(Q.t);
    for (int v = 0; v < Q.t; ++v) parent[v] = v;
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    for (auto& e : Q.edges) {
        if (e.from < 0 || e.to < 0 || e.from >= Q.t || e.to >= Q.t) return false;
        int a = find(e.from), b = find(e.to);
        if (a == b) return false;
        parent[a] = b;
        auto& o = e.color == Color::alpha ? out_a : out_b;
        auto& i = e.color == Color::alpha ? in_a : in_b;
        if (++o[e.from] > 1 || ++i[e.to] > 1) return false;
    }
    return true;
}

namespace detail {

inline std::string canon_rooted(const AtQuiver& Q, int v, int parent) {
    std::vector<std::string> parts;
    for (auto& e : Q.edges) {
        int w = -1;
        char tag = 0;
        if (e.from == v && e.to != parent) {
            w = e.to;
            tag = e.color == Color::alpha ? 'a' : 'b';
        } else if (e.to == v && e.from != parent) {
            w = e.from;
            tag = e.color == Color::alpha ? 'A' : 'B';
        }
        if (w >= 0) parts.push_back(std::string(1, tag) + canon_rooted(Q, w, v));
    }
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (auto& p : parts) s += p;
    return s + ")";
}

// size of the part of the tree containing w after removing the edge v-w
inline int side_size(const AtQuiver& Q, int w, int v) {
    int n = 1;
    for (auto& e : Q.edges) {
        if (e.from == w && e.to != v) n += side_size(Q, e.to, w);
        else if (e.to == w && e.from != v) n += side_size(Q, e.from, w);
    }
    return n;
}

} // namespace detail

inline std::string canonical_form(const AtQuiver& Q) {
    std::string best;
    for (int v = 0; v < Q.t; ++v) {
        std::string s = detail::canon_rooted(Q, v, -1);
        if (v == 0 || s < best) best = s;
    }
    return best;
}

// Isomorphism classes, grown leaf by leaf.
inline std::vector<AtQuiver> at_quivers(int t) {
    if (t < 1) return {};
    std::map<std::string, AtQuiver> level;
    AtQuiver one;
    one.t = 1;
    level[canonical_form(one)] = one;
    for (int s = 2; s <= t; ++s) {
        std::map<std::string, AtQuiver> next;
        for (auto& [key, Q] : level)
            for (int v = 0; v < Q.t; ++v)
                for (Color c : {Color::alpha, Color::beta})
                    for (bool outward : {true, false}) {
                        AtQuiver R = Q;
                        R.t = s;
                        R.edges.push_back(outward ? AtEdge{v, s - 1, c} : AtEdge{s - 1, v, c});
                        if (!at_quiver_valid(R)) continue;
                        next.emplace(canonical_form(R), R);
                    }
        level = std::move(next);
    }
    std::vector<AtQuiver> out;
    for (auto& [key, Q] : level) out.push_back(Q);
    return out;
}

struct StringFunctions {
    std::vector<int> s_alpha, e_alpha, s_beta, e_beta;
};

inline StringFunctions string_functions(const AtQuiver& Q) {
    StringFunctions f{std::vector<int>(Q.t), std::vector<int>(Q.t), std::vector<int>(Q.t), std::vector<int>(Q.t)};
    for (auto& e : Q.edges) {
        int beyond_to = detail::side_size(Q, e.to, e.from);
        int beyond_from = detail::side_size(Q, e.from, e.to);
        if (e.color == Color::alpha) {
            f.s_alpha[e.from] = beyond_to;
            f.e_alpha[e.to] = beyond_from;
        } else {
            f.s_beta[e.from] = beyond_to;
            f.e_beta[e.to] = beyond_from;
        }
    }
    return f;
}

// h = 1 + e_alpha + s_beta; alpha arrows keep g, beta arrows x -> y keep the coray g + h,
// i.e. g(y) = g(x) + e_alpha(x) + s_alpha(y) + 1.
inline std::vector<APos> phi_Q(const AtQuiver& Q) {
    auto f = string_functions(Q);
    std::vector<APos> pos(Q.t);
    std::vector<bool> seen(Q.t, false);
    for (int v = 0; v < Q.t; ++v) pos[v].h = 1 + f.e_alpha[v] + f.s_beta[v];
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto& e : Q.edges) {
            int w = e.from == v ? e.to : (e.to == v ? e.from : -1);
            if (w < 0 || seen[w]) continue;
            Int step = e.color == Color::alpha ? 0 : f.e_alpha[e.from] + f.s_alpha[e.to] + 1;
            pos[w].g = e.from == v ? pos[v].g + step : pos[v].g - step;
            seen[w] = true;
            stack.push_back(w);
        }
    }
    Int mn = pos[0].g;
    for (auto& p : pos) mn = std::min(mn, p.g);
    for (auto& p : pos) p.g -= mn;
    return pos;
}

inline std::string to_string(const AtQuiver& Q) {
    std::string s;
    for (auto& e : Q.edges) {
        if (!s.empty()) s += ", ";
        s += std::to_string(e.from + 1) + (e.color == Color::alpha ? " -a-> " : " -b-> ") + std::to_string(e.to + 1);
    }
    return s.empty() ? "1" : s;
}

using AtObject = std::vector<APos>;

inline bool at_is_tilting(int t, const AtObject& T) {
    for (auto& x : T)
        for (auto& y : T)
            for (auto& [d, v] : at_graded_hom(t, x, y))
                if (d != 0 && v) return false;
    return true;
}

inline AtObject at_sorted(AtObject T) {
    std::sort(T.begin(), T.end());
    return T;
}

// Representative of the suspension orbit whose smallest g is as small as possible while >= 0.
inline AtObject at_suspension_normal(int t, const AtObject& T) {
    AtObject cur = T;
    auto min_g = [](const AtObject& o) {
        Int m = o[0].g;
        for (auto& p : o) m = std::min(m, p.g);
        return m;
    };
    auto shift = [&](const AtObject& o, Int e) {
        AtObject r;
        for (auto& p : o) r.push_back(at_sigma(t, p, e));
        return r;
    };
    while (min_g(cur) < 0) cur = shift(cur, 1);
    for (;;) {
        AtObject down = shift(cur, -1);
        if (min_g(down) < 0) break;
        cur = down;
    }
    return at_sorted(cur);
}

// Exceptional order: U before V whenever Hom^*(U,V) != 0, ties by (g,h).
inline AtObject at_exceptional_order(int t, const AtObject& T) {
    const std::size_t n = T.size();
    std::vector<std::vector<bool>> before(n, std::vector<bool>(n, false));
    std::vector<int> indeg(n, 0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (x != y && !at_graded_hom(t, T[x], T[y]).empty()) {
                before[x][y] = true;
                ++indeg[y];
            }
    auto cmp = [&](std::size_t a, std::size_t b) { return T[b] < T[a]; };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(cmp)> ready(cmp);
    for (std::size_t x = 0; x < n; ++x)
        if (!indeg[x]) ready.push(x);
    AtObject out;
    while (!ready.empty()) {
        std::size_t x = ready.top();
        ready.pop();
        out.push_back(T[x]);
        for (std::size_t y = 0; y < n; ++y)
            if (before[x][y] && --indeg[y] == 0) ready.push(y);
    }
    if (out.size() != n) throw std::logic_error("summands do not form an exceptional collection");
    return out;
}

// All tilting objects of D^b(kA_t) up to suspension: tau^{-g} T_Q for g = 0..t, first representative kept.
inline std::vector<AtObject> at_tilting_objects(int t) {
    auto quivers = at_quivers(t);
    std::vector<AtObject> out;
    std::set<AtObject> seen;
    for (Int g = 0; g <= t; ++g)
        for (auto& Q : quivers) {
            AtObject T;
            for (auto& p : phi_Q(Q)) T.push_back(at_tau(p, -g));
            AtObject key = at_suspension_normal(t, T);
            if (!seen.insert(key).second) continue;
            out.push_back(at_exceptional_order(t, T));
        }
    return out;
}

} // namespace ddcat

#endif
