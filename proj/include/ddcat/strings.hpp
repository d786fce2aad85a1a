#ifndef DDCAT_STRINGS_HPP
#define DDCAT_STRINGS_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"

namespace ddcat::oracle {

struct UndefinedComposition : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotComparable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct WindowEscape : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CalibrationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vertex (level, x) of the repetitive quiver, -m <= x <= n-1.
struct Vertex {
    Int level = 0;
    int x = 0;
    auto operator<=>(const Vertex&) const = default;
};

// Label order a < b < c < x < y is the enum order.
enum class ArrowKind { a = 0, b = 1, c = 2, x = 3, y = 4 };

struct Arrow {
    Int level = 0;
    ArrowKind kind = ArrowKind::a;
    int j = 0;
    auto operator<=>(const Arrow&) const = default;
};

struct Letter {
    Arrow arrow;
    bool inverse = false;
    auto operator<=>(const Letter&) const = default;
};

using Path = std::vector<Arrow>;

struct Relation {
    std::vector<Arrow> lhs;
    std::vector<Arrow> rhs; // empty for zero relations
    bool commutativity = false;
};

// The repetitive quiver with relations, materialized over levels [-W, W].
class RepQuiver {
public:
    RepQuiver(const Params& P, Int window) : P_(P), W_(window) {
        if (window < 1) throw std::invalid_argument("window must be at least 1");
        build_threads();
    }

    const Params& params() const { return P_; }
    Int window() const { return W_; }
    bool in_window(const Vertex& v) const { return v.level >= -W_ && v.level <= W_; }

    int norm(int x) const { return x == P_.n ? 0 : x; }

    bool valid(const Arrow& a) const {
        const int n = P_.n, r = P_.r, m = P_.m;
        switch (a.kind) {
        case ArrowKind::a: return a.j >= -m && a.j <= -1;
        case ArrowKind::b: return a.j >= 0 && a.j <= n - r;
        case ArrowKind::c: return a.j >= n - r + 1 && a.j <= n - 1;
        case ArrowKind::x: return a.j >= n - r + 1 && a.j <= n - 1;
        case ArrowKind::y: return a.j == 0;
        }
        return false;
    }

    Vertex source(const Arrow& a) const {
        switch (a.kind) {
        case ArrowKind::x: return {a.level, norm(a.j + 1)};
        case ArrowKind::y: return {a.level, norm(P_.n - P_.r + 1)};
        default: return {a.level, a.j};
        }
    }
    Vertex target(const Arrow& a) const {
        switch (a.kind) {
        case ArrowKind::x: return {a.level + 1, a.j};
        case ArrowKind::y: return {a.level + 1, -P_.m};
        default: return {a.level, norm(a.j + 1)};
        }
    }

    std::vector<Arrow> arrows_at_level(Int level) const {
        std::vector<Arrow> out;
        for (int j = -P_.m; j <= -1; ++j) out.push_back({level, ArrowKind::a, j});
        for (int j = 0; j <= P_.n - P_.r; ++j) out.push_back({level, ArrowKind::b, j});
        for (int j = P_.n - P_.r + 1; j <= P_.n - 1; ++j) out.push_back({level, ArrowKind::c, j});
        for (int j = P_.n - P_.r + 1; j <= P_.n - 1; ++j) out.push_back({level, ArrowKind::x, j});
        out.push_back({level, ArrowKind::y, 0});
        return out;
    }

    std::vector<Vertex> vertices_at_level(Int level) const {
        std::vector<Vertex> out;
        for (int x = -P_.m; x <= P_.n - 1; ++x) out.push_back({level, x});
        return out;
    }

    std::vector<Arrow> out_arrows(const Vertex& v) const {
        std::vector<Arrow> out;
        for (const auto& a : arrows_at_level(v.level))
            if (source(a) == v) out.push_back(a);
        return out;
    }
    std::vector<Arrow> in_arrows(const Vertex& v) const {
        std::vector<Arrow> out;
        for (Int l : {v.level - 1, v.level})
            for (const auto& a : arrows_at_level(l))
                if (target(a) == v) out.push_back(a);
        return out;
    }

    // Full paths starting at v: (i,p2) p^ (i+1,p1) for each maximal path p = p1 p2 through v.
    std::vector<Path> full_paths(const Vertex& v) const {
        std::vector<Path> out;
        for (const auto& th : threads_) {
            for (std::size_t t = 0; t < th.verts.size(); ++t) {
                if (th.verts[t] != v.x) continue;
                Path p;
                for (std::size_t u = t; u < th.arrows.size(); ++u) p.push_back(at(th.arrows[u], v.level));
                p.push_back(at(th.connecting, v.level));
                for (std::size_t u = 0; u < t; ++u) p.push_back(at(th.arrows[u], v.level + 1));
                out.push_back(std::move(p));
            }
        }
        return out;
    }

    // Nonzero in the repetitive algebra: a prefix of a full path from its start.
    bool nonzero_path(const Path& p) const { return prefix_kind(p) >= 1; }
    // Nonzero and not a socle element, i.e. may occur inside a string.
    bool allowed_path(const Path& p) const { return prefix_kind(p) == 2; }

    // Relations in the form they are read off for the repetitive algebra, one level.
    std::vector<Relation> relations(Int i) const {
        const int n = P_.n, r = P_.r, m = P_.m;
        std::vector<Relation> out;
        auto cc = [&](int k, Int lvl) -> Arrow {
            if (k == n - r) return {lvl, ArrowKind::b, n - r};
            if (k == n) return {lvl, ArrowKind::b, 0};
            return {lvl, ArrowKind::c, k};
        };
        for (int k = n - r; k <= n - 1; ++k) out.push_back({{cc(k, i), cc(k + 1, i)}, {}, false});
        for (int k = n - r + 2; k <= n - 1; ++k)
            out.push_back({{{i, ArrowKind::x, k}, {i + 1, ArrowKind::x, k - 1}}, {}, false});
        if (r > 1) {
            if (m == 0) out.push_back({{{i, ArrowKind::y, 0}, {i + 1, ArrowKind::x, n - 1}}, {}, false});
            else out.push_back({{{i, ArrowKind::a, -1}, {i, ArrowKind::x, n - 1}}, {}, false});
        }
        const Path m1 = main_thread(i + 1);
        if (r > 1) {
            Path rhs{{i, ArrowKind::y, 0}};
            rhs.insert(rhs.end(), m1.begin(), m1.end());
            out.push_back({{{i, ArrowKind::c, n - r + 1}, {i, ArrowKind::x, n - r + 1}}, rhs, true});
            for (int k = n - r + 2; k <= n - 1; ++k)
                out.push_back({{{i, ArrowKind::c, k}, {i, ArrowKind::x, k}},
                               {{i, ArrowKind::x, k - 1}, {i + 1, ArrowKind::c, k - 1}},
                               true});
            Path lhs2{{i, ArrowKind::x, n - 1}, {i + 1, ArrowKind::c, n - 1}};
            Path rhs2;
            for (int j = 0; j <= n - r; ++j) rhs2.push_back({i, ArrowKind::b, j});
            rhs2.push_back({i, ArrowKind::y, 0});
            for (int j = -m; j <= -1; ++j) rhs2.push_back({i + 1, ArrowKind::a, j});
            out.push_back({lhs2, rhs2, true});
        } else {
            Path lhs{{i, ArrowKind::y, 0}};
            lhs.insert(lhs.end(), m1.begin(), m1.end());
            Path rhs;
            for (int j = 0; j <= n - 1; ++j) rhs.push_back({i, ArrowKind::b, j});
            rhs.push_back({i, ArrowKind::y, 0});
            for (int j = -m; j <= -1; ++j) rhs.push_back({i + 1, ArrowKind::a, j});
            out.push_back({lhs, rhs, true});
        }
        // paths (i,k) -> (i+1,k+1) through y, k != 0
        const Path m0 = main_thread(i);
        for (int k = -m; k <= n - r; ++k) {
            if (k == 0) continue;
            Path p(m0.begin() + (k + m), m0.end());
            p.push_back({i, ArrowKind::y, 0});
            p.insert(p.end(), m1.begin(), m1.begin() + (k + 1 + m));
            out.push_back({p, {}, false});
        }
        return out;
    }

    // String functions: greedy, vertex by vertex, half-edges in (level, label, index) order.
    int sigma(const Arrow& a) const { return vertex_signs(source(a)).at({a, true}); }
    int epsilon(const Arrow& a) const { return vertex_signs(target(a)).at({a, false}); }

    std::string arrow_name(const Arrow& a) const {
        if (P_ == Params{2, 3, 1}) {
            switch (a.kind) {
            case ArrowKind::a: return "a";
            case ArrowKind::b: return a.j == 0 ? "b" : "c";
            case ArrowKind::c: return "d";
            case ArrowKind::x: return "x";
            case ArrowKind::y: return "y";
            }
        }
        static const char* base[] = {"a", "b", "c", "x", "y"};
        if (a.kind == ArrowKind::y) return "y";
        return std::string(base[int(a.kind)]) + std::to_string(a.j);
    }

    std::optional<Arrow> arrow_by_name(const std::string& name, Int level) const {
        for (const auto& a : arrows_at_level(level))
            if (arrow_name(a) == name) return a;
        return std::nullopt;
    }

private:
    struct Thread {
        std::vector<Arrow> arrows; // level 0
        std::vector<int> verts;    // arrows.size()+1 vertices
        Arrow connecting;
    };

    Params P_;
    Int W_;
    std::vector<Thread> threads_;

    static Arrow at(Arrow a, Int level) {
        a.level += level;
        return a;
    }

    Path main_thread(Int level) const {
        Path p;
        for (const auto& a : threads_.front().arrows) p.push_back(at(a, level));
        return p;
    }

    // Maximal paths of the underlying gentle quiver and their connecting arrows.
    void build_threads() {
        const int n = P_.n, r = P_.r, m = P_.m;
        Thread t1;
        for (int j = -m; j <= -1; ++j) t1.arrows.push_back({0, ArrowKind::a, j});
        for (int j = 0; j <= n - r; ++j) t1.arrows.push_back({0, ArrowKind::b, j});
        t1.verts.push_back(-m);
        for (const auto& a : t1.arrows) t1.verts.push_back(target(a).x);
        t1.connecting = {0, ArrowKind::y, 0};
        threads_.push_back(t1);
        for (int k = n - r + 1; k <= n - 1; ++k) {
            Thread t;
            t.arrows = {{0, ArrowKind::c, k}};
            t.verts = {k, norm(k + 1)};
            t.connecting = {0, ArrowKind::x, k};
            threads_.push_back(t);
        }
    }

    // 0: zero, 1: full path (socle), 2: proper nonempty prefix
    int prefix_kind(const Path& p) const {
        if (p.empty()) return 2;
        for (const auto& f : full_paths(source(p.front()))) {
            if (p.size() > f.size()) continue;
            if (std::equal(p.begin(), p.end(), f.begin())) return p.size() == f.size() ? 1 : 2;
        }
        return 0;
    }

    std::map<std::pair<Arrow, bool>, int> vertex_signs(const Vertex& v) const {
        // half-edge (arrow, true) = sigma at source, (arrow, false) = epsilon at target
        std::vector<std::pair<Arrow, bool>> half;
        for (const auto& a : in_arrows(v)) half.push_back({a, false});
        for (const auto& a : out_arrows(v)) half.push_back({a, true});
        std::sort(half.begin(), half.end(), [](const auto& u, const auto& w) {
            return std::tuple(u.first, !u.second) < std::tuple(w.first, !w.second);
        });
        // constraints: all are "opposite sign"
        std::vector<std::pair<int, int>> opp;
        for (std::size_t s = 0; s < half.size(); ++s)
            for (std::size_t t = s + 1; t < half.size(); ++t) {
                const auto& [a1, o1] = half[s];
                const auto& [a2, o2] = half[t];
                bool linked = false;
                if (o1 == o2) linked = true;
                else {
                    const Arrow& in = o1 ? a2 : a1;
                    const Arrow& out = o1 ? a1 : a2;
                    linked = nonzero_path({in, out});
                }
                if (linked) opp.push_back({int(s), int(t)});
            }
        std::vector<int> val(half.size(), 0);
        for (std::size_t s = 0; s < half.size(); ++s) {
            if (val[s]) continue;
            val[s] = 1;
            std::vector<int> stack{int(s)};
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (auto [p, q] : opp) {
                    int w = p == u ? q : (q == u ? p : -1);
                    if (w < 0) continue;
                    if (!val[w]) {
                        val[w] = -val[u];
                        stack.push_back(w);
                    } else if (val[w] == val[u]) {
                        throw std::logic_error("string functions: inconsistent sign constraints");
                    }
                }
            }
        }
        std::map<std::pair<Arrow, bool>, int> out;
        for (std::size_t s = 0; s < half.size(); ++s) out[half[s]] = val[s];
        return out;
    }
};

inline RepQuiver build_repetitive(const Params& P, Int W) { return RepQuiver(P, W); }

// ---------------------------------------------------------------------------
// Strings

// A string; trivial strings carry their vertex and sign (1^+ or 1^-).
struct StringWord {
    std::vector<Letter> letters;
    Vertex base;
    int sign = 0;

    bool trivial() const { return letters.empty(); }
    std::size_t length() const { return letters.size(); }
    friend bool operator==(const StringWord& u, const StringWord& v) {
        if (u.trivial() != v.trivial()) return false;
        if (u.trivial()) return u.base == v.base && u.sign == v.sign;
        return u.letters == v.letters;
    }
};

inline StringWord trivial_string(Vertex v, int sign) { return {{}, v, sign}; }

inline Vertex letter_source(const RepQuiver& Q, const Letter& l) {
    return l.inverse ? Q.target(l.arrow) : Q.source(l.arrow);
}
inline Vertex letter_target(const RepQuiver& Q, const Letter& l) {
    return l.inverse ? Q.source(l.arrow) : Q.target(l.arrow);
}

inline Vertex start_vertex(const RepQuiver& Q, const StringWord& w) {
    return w.trivial() ? w.base : letter_source(Q, w.letters.front());
}
inline Vertex end_vertex(const RepQuiver& Q, const StringWord& w) {
    return w.trivial() ? w.base : letter_target(Q, w.letters.back());
}

inline int sigma_of(const RepQuiver& Q, const Letter& l) {
    return l.inverse ? Q.epsilon(l.arrow) : Q.sigma(l.arrow);
}
inline int epsilon_of(const RepQuiver& Q, const Letter& l) {
    return l.inverse ? Q.sigma(l.arrow) : Q.epsilon(l.arrow);
}
inline int sigma_of(const RepQuiver& Q, const StringWord& w) {
    return w.trivial() ? -w.sign : sigma_of(Q, w.letters.front());
}
inline int epsilon_of(const RepQuiver& Q, const StringWord& w) {
    return w.trivial() ? w.sign : epsilon_of(Q, w.letters.back());
}

inline StringWord invert(const StringWord& w) {
    if (w.trivial()) return trivial_string(w.base, -w.sign);
    StringWord out;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back({it->arrow, !it->inverse});
    return out;
}

// Every vertex touched by the walk, in order.
inline std::vector<Vertex> walk_vertices(const RepQuiver& Q, const StringWord& w) {
    std::vector<Vertex> vs{start_vertex(Q, w)};
    for (const auto& l : w.letters) vs.push_back(letter_target(Q, l));
    return vs;
}

inline bool is_string(const RepQuiver& Q, const StringWord& w) {
    if (w.trivial()) return (w.sign == 1 || w.sign == -1) && w.base.x >= -Q.params().m && w.base.x < Q.params().n;
    for (const auto& l : w.letters)
        if (!Q.valid(l.arrow)) return false;
    for (std::size_t t = 0; t + 1 < w.letters.size(); ++t) {
        const auto& u = w.letters[t];
        const auto& v = w.letters[t + 1];
        if (letter_target(Q, u) != letter_source(Q, v)) return false;
        if (u.arrow == v.arrow && u.inverse != v.inverse) return false;
    }
    // maximal runs of one direction must be allowed paths
    std::size_t t = 0;
    while (t < w.letters.size()) {
        std::size_t e = t;
        while (e < w.letters.size() && w.letters[e].inverse == w.letters[t].inverse) ++e;
        Path p;
        for (std::size_t u = t; u < e; ++u) p.push_back(w.letters[u].arrow);
        if (w.letters[t].inverse) std::reverse(p.begin(), p.end());
        if (!Q.allowed_path(p)) return false;
        t = e;
    }
    return true;
}

inline std::optional<StringWord> try_compose(const RepQuiver& Q, const StringWord& v, const StringWord& w) {
    if (v.trivial() && w.trivial()) {
        if (v == w) return v;
        return std::nullopt;
    }
    if (w.trivial()) {
        if (end_vertex(Q, v) == w.base && epsilon_of(Q, v) == w.sign) return v;
        return std::nullopt;
    }
    if (v.trivial()) {
        if (start_vertex(Q, w) == v.base && sigma_of(Q, w) == -v.sign) return w;
        return std::nullopt;
    }
    StringWord c = v;
    c.letters.insert(c.letters.end(), w.letters.begin(), w.letters.end());
    if (!is_string(Q, c)) return std::nullopt;
    return c;
}

inline StringWord compose(const RepQuiver& Q, const StringWord& v, const StringWord& w) {
    auto c = try_compose(Q, v, w);
    if (!c) throw UndefinedComposition("composition of strings is not defined");
    return *c;
}

// Canonical representative of {w, w^-1}.
inline std::string serialize(const RepQuiver& Q, const StringWord& w) {
    if (w.trivial()) {
        std::ostringstream os;
        os << "1" << (w.sign > 0 ? "+" : "-") << "(" << w.base.level << "," << w.base.x << ")";
        return os.str();
    }
    std::string out;
    for (std::size_t t = 0; t < w.letters.size(); ++t) {
        const auto& l = w.letters[t];
        if (t) out += " . ";
        out += Q.arrow_name(l.arrow);
        if (l.inverse) out += "~";
        out += "@" + std::to_string(l.arrow.level);
    }
    return out;
}

inline StringWord canonical(const StringWord& w) {
    if (w.trivial()) return trivial_string(w.base, 1);
    StringWord v = invert(w);
    return v.letters < w.letters ? v : w;
}

inline std::string module_key(const RepQuiver& Q, const StringWord& w) { return serialize(Q, canonical(w)); }

inline StringWord parse_string(const RepQuiver& Q, const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (!s.empty() && s[0] == '1') {
        int sign = s.size() > 1 && s[1] == '-' ? -1 : 1;
        auto lp = s.find('('), cm = s.find(','), rp = s.find(')');
        if (lp == std::string::npos || cm == std::string::npos || rp == std::string::npos)
            throw ParseError("bad trivial string", 0);
        return trivial_string({std::stoll(s.substr(lp + 1, cm - lp - 1)), std::stoi(s.substr(cm + 1, rp - cm - 1))},
                              sign);
    }
    StringWord w;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find('.', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        auto at = tok.find('@');
        if (at == std::string::npos) throw ParseError("letter without level: " + tok, pos);
        std::string name = tok.substr(0, at);
        bool inv = !name.empty() && name.back() == '~';
        if (inv) name.pop_back();
        Int level = std::stoll(tok.substr(at + 1));
        auto a = Q.arrow_by_name(name, level);
        if (!a) throw ParseError("unknown arrow " + name, pos);
        w.letters.push_back({*a, inv});
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (!is_string(Q, w)) throw ParseError("not a string: " + text, 0);
    return w;
}

// ---------------------------------------------------------------------------
// Hooks and cohooks

// Outcome of w -> w[1]; piece is the hook tail (cokernel of the inclusion)
// or the cohook part (kernel of the projection).  Inverse moves only fill word.
struct Move {
    std::optional<StringWord> word;
    bool added_hook = false;
    StringWord piece;
};

namespace detail {

inline std::optional<Letter> prepend_candidate(const RepQuiver& Q, const StringWord& w, bool inverse_letter) {
    const Vertex s = start_vertex(Q, w);
    const auto arrows = inverse_letter ? Q.out_arrows(s) : Q.in_arrows(s);
    for (const auto& a : arrows) {
        Letter l{a, inverse_letter};
        if (w.trivial()) {
            if (epsilon_of(Q, l) == w.sign) return l;
            continue;
        }
        StringWord c{{l}, {}, 0};
        c.letters.insert(c.letters.end(), w.letters.begin(), w.letters.end());
        if (is_string(Q, c)) return l;
    }
    return std::nullopt;
}

// Maximal allowed direct path starting (forward) or ending (backward) at v, avoiding `skip` as first step.
inline Path maximal_direct(const RepQuiver& Q, Vertex v, const Arrow& skip, bool forward) {
    Path p;
    for (const auto& a : forward ? Q.out_arrows(v) : Q.in_arrows(v))
        if (!(a == skip)) {
            p.push_back(a);
            break;
        }
    if (p.empty()) return p;
    for (;;) {
        bool grown = false;
        Vertex e = forward ? Q.target(p.back()) : Q.source(p.front());
        for (const auto& a : forward ? Q.out_arrows(e) : Q.in_arrows(e)) {
            Path q = p;
            if (forward) q.push_back(a);
            else q.insert(q.begin(), a);
            if (Q.allowed_path(q)) {
                p = std::move(q);
                grown = true;
                break;
            }
        }
        if (!grown) return p;
    }
}

inline StringWord direct_string(const Path& p, bool inverse) {
    StringWord w;
    if (inverse)
        for (auto it = p.rbegin(); it != p.rend(); ++it) w.letters.push_back({*it, true});
    else
        for (const auto& a : p) w.letters.push_back({a, false});
    return w;
}

} // namespace detail

// w[1]: add a hook on the left, or remove a cohook on the left.
inline Move shift_right_move(const RepQuiver& Q, const StringWord& w) {
    Move mv;
    if (auto a0 = detail::prepend_candidate(Q, w, false)) {
        const Vertex s = Q.source(a0->arrow);
        Path tail = detail::maximal_direct(Q, s, a0->arrow, true);
        StringWord out = detail::direct_string(tail, true);
        out.letters.push_back(*a0);
        out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
        mv.word = out;
        mv.added_hook = true;
        mv.piece = tail.empty() ? trivial_string(s, 1) : detail::direct_string(tail, false);
        return mv;
    }
    if (w.trivial()) return mv;
    std::size_t t = 0;
    while (t < w.letters.size() && !w.letters[t].inverse) ++t;
    if (t == w.letters.size()) return mv;
    StringWord rest;
    rest.letters.assign(w.letters.begin() + t + 1, w.letters.end());
    if (rest.trivial()) rest = trivial_string(letter_target(Q, w.letters[t]), epsilon_of(Q, w.letters[t]));
    mv.word = rest;
    Path head;
    for (std::size_t u = 0; u < t; ++u) head.push_back(w.letters[u].arrow);
    mv.piece = head.empty() ? trivial_string(start_vertex(Q, w), 1) : detail::direct_string(head, false);
    return mv;
}

// w[-1]: remove a hook on the left, or add a cohook on the left.
inline Move shift_right_inverse_move(const RepQuiver& Q, const StringWord& w) {
    Move mv;
    if (auto a0 = detail::prepend_candidate(Q, w, true)) {
        const Vertex u = Q.target(a0->arrow);
        Path head = detail::maximal_direct(Q, u, a0->arrow, false);
        StringWord out = detail::direct_string(head, false);
        out.letters.push_back(*a0);
        out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
        mv.word = out;
        return mv;
    }
    if (w.trivial()) return mv;
    std::size_t t = 0;
    while (t < w.letters.size() && w.letters[t].inverse) ++t;
    if (t == w.letters.size()) return mv;
    StringWord rest;
    rest.letters.assign(w.letters.begin() + t + 1, w.letters.end());
    if (rest.trivial()) rest = trivial_string(letter_target(Q, w.letters[t]), epsilon_of(Q, w.letters[t]));
    mv.word = rest;
    return mv;
}

inline std::optional<StringWord> shift_right(const RepQuiver& Q, const StringWord& w, int k = 1) {
    std::optional<StringWord> cur = w;
    for (int s = 0; s < std::abs(k) && cur; ++s)
        cur = (k > 0 ? shift_right_move(Q, *cur) : shift_right_inverse_move(Q, *cur)).word;
    return cur;
}

// [k]w, computed by inverting, shifting on the left, inverting back.
inline std::optional<StringWord> shift_left(const RepQuiver& Q, const StringWord& w, int k = 1) {
    auto r = shift_right(Q, invert(w), k);
    if (!r) return std::nullopt;
    return invert(*r);
}

inline Move shift_left_move(const RepQuiver& Q, const StringWord& w) {
    Move mv = shift_right_move(Q, invert(w));
    if (mv.word) mv.word = invert(*mv.word);
    return mv;
}

inline std::optional<StringWord> right_hook(const RepQuiver& Q, const StringWord& w) { return shift_right(Q, w, 1); }
inline std::optional<StringWord> left_hook(const RepQuiver& Q, const StringWord& w) { return shift_left(Q, w, 1); }

// [1]w[1], the inverse AR translate.  At a mouth only one of the two orders is defined.
inline std::optional<StringWord> ar_translate_inv(const RepQuiver& Q, const StringWord& w) {
    if (auto r = shift_right(Q, w, 1))
        if (auto t = shift_left(Q, *r, 1)) return t;
    if (auto l = shift_left(Q, w, 1)) return shift_right(Q, *l, 1);
    return std::nullopt;
}
inline std::optional<StringWord> ar_translate(const RepQuiver& Q, const StringWord& w) {
    if (auto r = shift_right(Q, w, -1))
        if (auto t = shift_left(Q, *r, -1)) return t;
    if (auto l = shift_left(Q, w, -1)) return shift_right(Q, *l, -1);
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Geiss total order

inline int geiss_compare(const RepQuiver& Q, const StringWord& v, const StringWord& w) {
    if (end_vertex(Q, v) != end_vertex(Q, w) || epsilon_of(Q, v) != epsilon_of(Q, w))
        throw NotComparable("strings differ in end vertex or sign");
    const std::size_t lv = v.length(), lw = w.length();
    std::size_t c = 0;
    while (c < lv && c < lw && v.letters[lv - 1 - c] == w.letters[lw - 1 - c]) ++c;
    if (c == lv && c == lw) return 0;
    if (c == lv) return w.letters[lw - 1 - c].inverse ? 1 : -1;
    if (c == lw) return v.letters[lv - 1 - c].inverse ? -1 : 1;
    const bool vdir = !v.letters[lv - 1 - c].inverse, wdir = !w.letters[lw - 1 - c].inverse;
    if (wdir && !vdir) return -1;
    if (vdir && !wdir) return 1;
    throw std::logic_error("geiss_compare: two letters of one orientation precede a common suffix");
}

inline bool geiss_leq(const RepQuiver& Q, const StringWord& v, const StringWord& w) {
    return geiss_compare(Q, v, w) <= 0;
}

// ---------------------------------------------------------------------------
// Morphisms between string modules by admissible pairs

inline int hom_count_combinatorial(const RepQuiver& Q, const StringWord& v, const StringWord& w) {
    const auto vv = walk_vertices(Q, v), wv = walk_vertices(Q, w);
    const std::size_t lv = v.length(), lw = w.length();
    auto fac = [&](std::size_t p, std::size_t q) {
        return (p == 0 || v.letters[p - 1].inverse) && (q == lv || !v.letters[q].inverse);
    };
    auto sub = [&](std::size_t p, std::size_t q) {
        return (p == 0 || !w.letters[p - 1].inverse) && (q == lw || w.letters[q].inverse);
    };
    int count = 0;
    for (std::size_t p1 = 0; p1 <= lv; ++p1)
        for (std::size_t q1 = p1; q1 <= lv; ++q1) {
            if (!fac(p1, q1)) continue;
            const std::size_t len = q1 - p1;
            for (std::size_t p2 = 0; p2 + len <= lw; ++p2) {
                const std::size_t q2 = p2 + len;
                if (!sub(p2, q2)) continue;
                bool match;
                if (len == 0) {
                    match = vv[p1] == wv[p2];
                } else {
                    bool same = true, opposite = true;
                    for (std::size_t t = 0; t < len; ++t) {
                        const auto& a = v.letters[p1 + t];
                        const auto& b = w.letters[p2 + t];
                        const auto& c = w.letters[q2 - 1 - t];
                        if (!(a == b)) same = false;
                        if (!(a.arrow == c.arrow && a.inverse != c.inverse)) opposite = false;
                    }
                    match = same || opposite;
                }
                if (match) ++count;
            }
        }
    return count;
}

} // namespace ddcat::oracle

#endif
