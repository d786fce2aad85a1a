#ifndef DDCAT_DICTIONARY_HPP
#define DDCAT_DICTIONARY_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ddcat/core.hpp"
#include "ddcat/hammocks.hpp"
#include "ddcat/modules.hpp"

namespace ddcat::oracle {

// Partial bijection between coordinates and strings whose modules lie in the levels [-W+1, W-1].
struct Dictionary {
    Params params;
    Int window = 0;
    std::map<Obj, StringWord> word;
    std::map<std::string, Obj> coord; // keyed by module_key
    int tau_checked = 0;

    std::optional<StringWord> find(const Obj& A) const {
        auto it = word.find(A);
        if (it == word.end()) return std::nullopt;
        return it->second;
    }
    std::optional<Obj> find(const RepQuiver& Q, const StringWord& w) const {
        auto it = coord.find(module_key(Q, w));
        if (it == coord.end()) return std::nullopt;
        return it->second;
    }
};

namespace detail {

// Repeated w[1] / w[-1] (right = true) or [1]w / [-1]w.
inline std::optional<StringWord> move(const RepQuiver& Q, const StringWord& w, bool right, Int k) {
    if (k == 0) return w;
    return right ? shift_right(Q, w, int(k)) : shift_left(Q, w, int(k));
}

inline std::optional<StringWord> tau_power(const RepQuiver& Q, std::optional<StringWord> w, Int k) {
    for (Int s = 0; s < std::llabs(k) && w; ++s) w = k < 0 ? ar_translate_inv(Q, *w) : ar_translate(Q, *w);
    return w;
}

inline bool levels_inside(const RepQuiver& Q, const StringWord& w, Int W) {
    for (const auto& v : walk_vertices(Q, w))
        if (v.level < -W + 1 || v.level > W - 1) return false;
    (void)Q;
    return true;
}

inline StringWord recognize_or_fail(const RepQuiver& Q, const Rep& M, const std::string& what) {
    auto w = recognize_string(Q, M);
    if (!w) throw CalibrationFailure("no string module matches " + what);
    return *w;
}

// Cocone of the irreducible map M(w) -> M(w[1]) (right) or M(w) -> M([1]w).
inline Rep move_cocone(const RepQuiver& Q, const StringWord& w, bool right) {
    Move mv = right ? shift_right_move(Q, w) : shift_right_move(Q, invert(w));
    if (!mv.word) throw CalibrationFailure("irreducible map undefined at a Z object");
    Rep piece = string_rep(Q, mv.piece);
    return mv.added_hook ? syzygy(Q, piece, -1) : piece;
}

} // namespace detail

// Anchors Z^0_{0,0} at the simple S(0); the i and j moves of Z components are w[1] and [1]w with
// the orientation forced by the drift of Sigma^r, and higher components come from Omega^{-k}.
// X and Y mouths are the cocones of the irreducible maps out of Z^k_{0,0}.
inline Dictionary build_dictionary(const Params& P, Int W, Int box = 0) {
    if (W < 2) throw std::invalid_argument("dictionary window must be at least 2");
    const int r = P.r;
    // calibration needs room for r cosyzygies of small modules
    RepQuiver Qc(P, W + 2 * r + 4);
    Dictionary D;
    D.params = P;
    D.window = W;
    if (box == 0) box = 8 * W * (P.n + P.m + r);

    auto grid_word = [&](const StringWord& A, Int i, Int j) -> std::optional<StringWord> {
        auto u = detail::move(Qc, A, true, i);
        if (!u) return std::nullopt;
        return detail::move(Qc, *u, false, j);
    };

    // Z^0 orientation from Sigma^r Z^0_{0,0} = Z^0_{r+m, r-n}
    const Rep S0 = string_rep(Qc, trivial_string({0, 0}, 1));
    const Rep target = syzygy_power(Qc, S0, -r);
    std::vector<StringWord> anchors;
    for (int s : {1, -1}) {
        auto g = grid_word(trivial_string({0, 0}, s), r + P.m, r - P.n);
        if (g && isomorphic(Qc, string_rep(Qc, *g), target)) anchors.push_back(trivial_string({0, 0}, s));
    }
    if (anchors.size() != 1) throw CalibrationFailure("Sigma^r drift does not fix the orientation of Z^0");

    // anchors of Z^k, oriented so that w[1] is the i-move
    auto Z10 = grid_word(anchors[0], 1, 0);
    for (int k = 1; k < r; ++k) {
        StringWord A = detail::recognize_or_fail(Qc, syzygy_power(Qc, S0, -k), "Sigma^k S(0)");
        Rep want = syzygy_power(Qc, string_rep(Qc, *Z10), -k);
        bool ok = false;
        for (const StringWord& cand : {A, invert(A)}) {
            auto g = grid_word(cand, 1, 0);
            if (g && isomorphic(Qc, string_rep(Qc, *g), want)) {
                anchors.push_back(cand);
                ok = true;
                break;
            }
        }
        if (!ok) throw CalibrationFailure("Sigma does not preserve the i-direction of Z");
    }

    auto insert = [&](const Obj& A, const StringWord& w) {
        if (!detail::levels_inside(Qc, w, W)) return;
        auto key = module_key(Qc, w);
        auto it = D.coord.find(key);
        if (it != D.coord.end() && !(it->second == A))
            throw CalibrationFailure("two coordinates share a string: " + to_string(A) + ", " + to_string(it->second));
        D.coord[key] = A;
        D.word[A] = w;
    };

    // walk w, step(w), step(step(w)), ... until `patience` consecutive words fall outside the window
    const Int patience = 2 * (P.n + P.m + r) + 4;
    using Step = std::function<std::optional<StringWord>(const StringWord&)>;
    auto walk = [&](StringWord w, const Step& step,
                    const std::function<void(Int, const StringWord&)>& visit) {
        Int misses = 0;
        for (Int t = 0; t <= box && misses < patience; ++t) {
            if (t > 0) {
                auto n = step(w);
                if (!n) throw CalibrationFailure("irreducible map undefined inside a component");
                w = *n;
            }
            visit(t, w);
            misses = detail::levels_inside(Qc, w, W) ? 0 : misses + 1;
        }
    };
    auto R = [&](int sgn) -> Step { return [&, sgn](const StringWord& w) { return shift_right(Qc, w, sgn); }; };
    auto L = [&](int sgn) -> Step { return [&, sgn](const StringWord& w) { return shift_left(Qc, w, sgn); }; };
    auto T = [&](int sgn) -> Step {
        return [&, sgn](const StringWord& w) { return sgn > 0 ? ar_translate_inv(Qc, w) : ar_translate(Qc, w); };
    };

    for (int k = 0; k < r; ++k) {
        // Z grid: anti-diagonals i - j = const are tau-orbits; walk the i-axis, then tau both ways
        for (int sgn : {1, -1})
            walk(anchors[k], R(sgn), [&](Int i, const StringWord& base) {
                for (int tsgn : {1, -1})
                    walk(base, T(tsgn), [&](Int t, const StringWord& w) { insert(Z(k, sgn * i + tsgn * t, tsgn * t), w); });
            });
        for (int sgn : {1, -1})
            walk(anchors[k], L(sgn), [&](Int j, const StringWord& base) {
                for (int tsgn : {1, -1})
                    walk(base, T(tsgn), [&](Int t, const StringWord& w) { insert(Z(k, tsgn * t, sgn * j + tsgn * t), w); });
            });
        // X and Y mouths
        for (Kind kind : {Kind::X, Kind::Y}) {
            const bool right = kind == Kind::X;
            StringWord mouth =
                detail::recognize_or_fail(Qc, detail::move_cocone(Qc, anchors[k], right), "a mouth cocone");
            const bool r_ok = shift_right(Qc, mouth, 1).has_value(), l_ok = shift_left(Qc, mouth, 1).has_value();
            if (r_ok == l_ok) throw CalibrationFailure("mouth object with two or no successors");
            for (int tsgn : {1, -1})
                walk(mouth, T(tsgn), [&](Int t, const StringWord& m0) {
                    const Int c = tsgn * t;
                    walk(m0, r_ok ? R(1) : L(1), [&](Int h, const StringWord& w) {
                        insert(kind == Kind::X ? X(k, c, c + h) : Y(k, c + h, c), w);
                    });
                });
        }
    }

    // anchors: simples and the projective position
    const StringWord s0 = trivial_string({0, 0}, 1);
    if (!(D.find(Qc, s0) == std::optional<Obj>(Z(0, 0, 0)))) throw CalibrationFailure("S(0) is not Z^0_{0,0}");
    if (P.m > 0) {
        const Obj X1 = sigma(P, X(0, 0, 0), 1);
        if (!(D.find(Qc, trivial_string({0, -1}, 1)) == std::optional<Obj>(X1)))
            throw CalibrationFailure("S(-1) is not " + to_string(X1));
    }
    {
        StringWord bb{{{{0, ArrowKind::b, P.n - r}, true}}, {}, 0};
        auto c = D.find(Qc, bb);
        if (!c || c->kind != Kind::Z) throw CalibrationFailure("the string of P(n-r) does not lie in a Z component");
    }
    // tau-equivariance on Z entries
    for (const auto& [A, w] : D.word) {
        if (A.kind != Kind::Z) continue;
        auto t = ar_translate_inv(Qc, w);
        auto B = t ? D.find(Qc, *t) : std::nullopt;
        if (!t || (D.word.count(tau(A, -1)) && !(B == std::optional<Obj>(tau(A, -1)))))
            throw CalibrationFailure("tau^{-1} mismatch at " + to_string(A));
        if (B) ++D.tau_checked;
    }
    return D;
}

// ---------------------------------------------------------------------------
// Engine versus oracle cross-check

struct OracleMismatch {
    Obj from;
    Obj to;
    int degree = 0;
    int engine = 0;
    int oracle = 0;
    std::string what;
};

struct OracleReport {
    int samples = 0;
    int stable_agree = 0;
    int count_agree = 0;
    int nonzero = 0;
    int degree1_checked = 0;
    int degree1_agree = 0;
    int dictionary_size = 0;
    std::vector<OracleMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

inline OracleReport oracle_check(const Params& P, Int W, int samples, unsigned seed, bool perturb = false) {
    const Dictionary D = build_dictionary(P, W);
    RepQuiver Q(P, W);
    std::vector<Obj> objs;
    for (const auto& [A, w] : D.word) objs.push_back(A);
    OracleReport rep;
    rep.dictionary_size = int(objs.size());
    if (objs.empty()) return rep;
    std::mt19937 rng(seed);
    for (int s = 0; s < samples; ++s) {
        const Obj A = objs[rng() % objs.size()];
        Obj B = objs[rng() % objs.size()];
        if (s % 2 == 1) {
            std::vector<Obj> targets;
            for (const auto& C : objs)
                if (hom_dim(P, A, C)) targets.push_back(C);
            if (!targets.empty()) B = targets[rng() % targets.size()];
        }
        const StringWord &v = D.word.at(A), &w = D.word.at(B);
        const Rep M = string_rep(Q, v), N = string_rep(Q, w);
        int engine = hom_dim(P, A, B);
        if (perturb && s == 0) engine += 1;
        const int st = stable_hom_dim(Q, M, N);
        ++rep.samples;
        if (engine) ++rep.nonzero;
        if (engine == st) ++rep.stable_agree;
        else rep.mismatches.push_back({A, B, 0, engine, st, "stable hom"});
        const int comb = hom_count_combinatorial(Q, v, w), lin = hom_dim_linear(Q, M, N);
        if (comb == lin) ++rep.count_agree;
        else rep.mismatches.push_back({A, B, 0, comb, lin, "admissible pairs"});
        if (s % 4 == 0) {
            // degree 1 through the cosyzygy
            try {
                const int e1 = hom_dim(P, A, sigma(P, B, 1));
                const int o1 = stable_hom_dim(Q, M, syzygy(Q, N, 1));
                ++rep.degree1_checked;
                if (e1 == o1) ++rep.degree1_agree;
                else rep.mismatches.push_back({A, B, 1, e1, o1, "degree 1"});
            } catch (const WindowEscape&) {
            }
        }
    }
    return rep;
}

} // namespace ddcat::oracle

#endif
