#ifndef DDCAT_MODULES_HPP
#define DDCAT_MODULES_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ddcat/gf.hpp"
#include "ddcat/strings.hpp"

namespace ddcat::oracle {

using gf::Mat;

// Finite-dimensional representation of the windowed repetitive quiver.
// mat[a] has shape dim(target) x dim(source); missing arrows act as zero.
struct Rep {
    std::map<Vertex, int> dim;
    std::map<Arrow, Mat> mat;

    int at(const Vertex& v) const {
        auto it = dim.find(v);
        return it == dim.end() ? 0 : it->second;
    }
    int total() const {
        int t = 0;
        for (const auto& [v, d] : dim) t += d;
        return t;
    }
    std::map<Vertex, int> dim_vector() const {
        std::map<Vertex, int> out;
        for (const auto& [v, d] : dim)
            if (d) out[v] = d;
        return out;
    }
};

// Morphism as one matrix per vertex, shape dim_N(v) x dim_M(v).
using Morphism = std::map<Vertex, Mat>;

inline Mat arrow_matrix(const RepQuiver& Q, const Rep& M, const Arrow& a) {
    auto it = M.mat.find(a);
    if (it != M.mat.end()) return it->second;
    return Mat(M.at(Q.target(a)), M.at(Q.source(a)));
}

inline Mat path_matrix(const RepQuiver& Q, const Rep& M, const Path& p) {
    if (p.empty()) throw std::invalid_argument("path_matrix: empty path");
    Mat R = arrow_matrix(Q, M, p.front());
    for (std::size_t t = 1; t < p.size(); ++t) R = arrow_matrix(Q, M, p[t]) * R;
    return R;
}

inline Mat component(const Morphism& f, const Vertex& v, int rows, int cols) {
    auto it = f.find(v);
    return it == f.end() ? Mat(rows, cols) : it->second;
}

inline void require_window(const RepQuiver& Q, const Vertex& v) {
    if (!Q.in_window(v))
        throw WindowEscape("vertex (" + std::to_string(v.level) + "," + std::to_string(v.x) + ") outside the window");
}

// ---------------------------------------------------------------------------
// String modules and projectives

inline Rep string_rep(const RepQuiver& Q, const StringWord& w) {
    const auto vs = walk_vertices(Q, w);
    Rep M;
    std::vector<int> idx;
    for (const auto& v : vs) {
        require_window(Q, v);
        idx.push_back(M.dim[v]++);
    }
    for (const auto& l : w.letters)
        if (!M.mat.count(l.arrow))
            M.mat[l.arrow] = Mat(M.dim[Q.target(l.arrow)], M.dim[Q.source(l.arrow)]);
    for (std::size_t k = 1; k <= w.letters.size(); ++k) {
        const auto& l = w.letters[k - 1];
        Mat& A = M.mat[l.arrow];
        if (l.inverse) A(idx[k - 1], idx[k]) = gf::add(A(idx[k - 1], idx[k]), 1);
        else A(idx[k], idx[k - 1]) = gf::add(A(idx[k], idx[k - 1]), 1);
    }
    return M;
}

// Indecomposable projective-injective at v: basis the nonzero paths from v, full paths identified.
struct Projective {
    Rep rep;
    std::vector<Path> basis; // basis[b] is the path ending at basis element b; the socle uses the first full path
    std::vector<Vertex> where;
    std::vector<int> local;
};

inline Projective projective(const RepQuiver& Q, const Vertex& v) {
    Projective P;
    const auto F = Q.full_paths(v);
    auto add = [&](const Path& p) {
        Vertex u = p.empty() ? v : Q.target(p.back());
        require_window(Q, u);
        P.basis.push_back(p);
        P.where.push_back(u);
        P.local.push_back(P.rep.dim[u]++);
        return int(P.basis.size()) - 1;
    };
    add({});
    std::vector<std::vector<int>> chain;
    for (const auto& f : F) {
        std::vector<int> ids{0};
        for (std::size_t t = 1; t < f.size(); ++t) ids.push_back(add(Path(f.begin(), f.begin() + t)));
        chain.push_back(ids);
    }
    const int soc = add(F.front());
    for (std::size_t c = 0; c < F.size(); ++c) chain[c].push_back(soc);
    for (std::size_t c = 0; c < F.size(); ++c)
        for (std::size_t t = 0; t < F[c].size(); ++t) {
            const Arrow& a = F[c][t];
            if (!P.rep.mat.count(a)) P.rep.mat[a] = Mat(P.rep.dim[Q.target(a)], P.rep.dim[Q.source(a)]);
            const int s = chain[c][t], e = chain[c][t + 1];
            P.rep.mat[a](P.local[e], P.local[s]) = 1;
        }
    return P;
}

// Zero paths of minimal length and the commutativity of full paths, plus the listed relations.
inline bool satisfies_relations(const RepQuiver& Q, const Rep& M) {
    for (const auto& [a, A] : M.mat)
        if (A.rows != M.at(Q.target(a)) || A.cols != M.at(Q.source(a))) return false;
    std::set<Int> levels;
    for (const auto& [v, d] : M.dim) {
        if (!d) continue;
        levels.insert(v.level);
        levels.insert(v.level - 1);
        const auto F = Q.full_paths(v);
        for (const auto& f : F)
            for (std::size_t t = 0; t < f.size(); ++t) {
                Path pre(f.begin(), f.begin() + t);
                Vertex e = pre.empty() ? v : Q.target(pre.back());
                for (const auto& b : Q.out_arrows(e)) {
                    Path q = pre;
                    q.push_back(b);
                    if (Q.nonzero_path(q)) continue;
                    if (!path_matrix(Q, M, q).is_zero()) return false;
                }
            }
        for (const auto& f : F)
            for (const auto& b : Q.out_arrows(Q.target(f.back()))) {
                Path q = f;
                q.push_back(b);
                if (!path_matrix(Q, M, q).is_zero()) return false;
            }
        if (F.size() == 2 && !(path_matrix(Q, M, F[0]) == path_matrix(Q, M, F[1]))) return false;
    }
    for (Int l : levels)
        for (const auto& rel : Q.relations(l)) {
            Mat L = path_matrix(Q, M, rel.lhs);
            if (rel.commutativity) {
                if (!(L == path_matrix(Q, M, rel.rhs))) return false;
            } else if (!L.is_zero()) {
                return false;
            }
        }
    return true;
}

// ---------------------------------------------------------------------------
// Homomorphisms

inline std::vector<Morphism> hom_basis(const RepQuiver& Q, const Rep& M, const Rep& N) {
    // unknown blocks f_v for vertices with both dimensions positive
    std::map<Vertex, int> off;
    int nvar = 0;
    for (const auto& [v, d] : M.dim) {
        int e = N.at(v);
        if (!d || !e) continue;
        off[v] = nvar;
        nvar += d * e;
    }
    if (nvar == 0) return {};
    auto var = [&](const Vertex& v, int row, int col) { return off.at(v) + row * M.at(v) + col; };
    std::vector<std::vector<gf::Elem>> rows;
    std::set<Arrow> arrows;
    for (const auto& [a, A] : M.mat) arrows.insert(a);
    for (const auto& [a, A] : N.mat) arrows.insert(a);
    for (const auto& a : arrows) {
        const Vertex s = Q.source(a), t = Q.target(a);
        const int ms = M.at(s), mt = M.at(t), ns = N.at(s), nt = N.at(t);
        if (!nt || !ms) continue;
        const Mat Ma = arrow_matrix(Q, M, a), Na = arrow_matrix(Q, N, a);
        // (N_a f_s - f_t M_a)(p, q) = 0 for p < nt, q < ms
        for (int p = 0; p < nt; ++p)
            for (int q = 0; q < ms; ++q) {
                std::vector<gf::Elem> row(nvar, 0);
                bool any = false;
                if (off.count(s))
                    for (int u = 0; u < ns; ++u)
                        if (Na(p, u)) {
                            auto& c = row[var(s, u, q)];
                            c = gf::add(c, Na(p, u));
                            any = true;
                        }
                if (off.count(t))
                    for (int u = 0; u < mt; ++u)
                        if (Ma(u, q)) {
                            auto& c = row[var(t, p, u)];
                            c = gf::sub(c, Ma(u, q));
                            any = true;
                        }
                if (any) rows.push_back(std::move(row));
            }
    }
    Mat A(int(rows.size()), nvar);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < nvar; ++j) A(int(i), j) = rows[i][j];
    std::vector<Morphism> out;
    for (const auto& x : gf::nullspace(A)) {
        Morphism f;
        for (const auto& [v, o] : off) {
            Mat B(N.at(v), M.at(v));
            for (int p = 0; p < B.rows; ++p)
                for (int q = 0; q < B.cols; ++q) B(p, q) = x[var(v, p, q)];
            f[v] = B;
        }
        out.push_back(std::move(f));
    }
    return out;
}

inline int hom_dim_linear(const RepQuiver& Q, const Rep& M, const Rep& N) { return int(hom_basis(Q, M, N).size()); }

inline Morphism compose(const Rep& M, const Rep& N, const Rep& L, const Morphism& g, const Morphism& f) {
    // g: N -> L after f: M -> N
    Morphism h;
    for (const auto& [v, d] : M.dim) {
        if (!d || !L.at(v) || !N.at(v)) continue;
        h[v] = component(g, v, L.at(v), N.at(v)) * component(f, v, N.at(v), d);
    }
    return h;
}

inline std::vector<gf::Elem> flatten(const Rep& M, const Rep& N, const Morphism& f) {
    std::vector<gf::Elem> out;
    for (const auto& [v, d] : M.dim) {
        const int e = N.at(v);
        if (!d || !e) continue;
        Mat B = component(f, v, e, d);
        out.insert(out.end(), B.a.begin(), B.a.end());
    }
    return out;
}

inline bool is_morphism(const RepQuiver& Q, const Rep& M, const Rep& N, const Morphism& f) {
    std::set<Arrow> arrows;
    for (const auto& [a, A] : M.mat) arrows.insert(a);
    for (const auto& [a, A] : N.mat) arrows.insert(a);
    for (const auto& a : arrows) {
        const Vertex s = Q.source(a), t = Q.target(a);
        Mat lhs = arrow_matrix(Q, N, a) * component(f, s, N.at(s), M.at(s));
        Mat rhs = component(f, t, N.at(t), M.at(t)) * arrow_matrix(Q, M, a);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Direct sums, kernels, cokernels

// offsets[p][v] is where part p starts inside the sum at vertex v.
inline Rep direct_sum(const RepQuiver& Q, const std::vector<const Rep*>& parts,
                      std::vector<std::map<Vertex, int>>& offsets) {
    Rep S;
    offsets.assign(parts.size(), {});
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (const auto& [v, d] : parts[p]->dim) {
            offsets[p][v] = S.dim[v];
            S.dim[v] += d;
        }
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (const auto& [a, A] : parts[p]->mat) {
            const Vertex s = Q.source(a), t = Q.target(a);
            auto it = S.mat.find(a);
            if (it == S.mat.end()) it = S.mat.emplace(a, Mat(S.at(t), S.at(s))).first;
            const int rt = offsets[p].count(t) ? offsets[p][t] : 0, cs = offsets[p].count(s) ? offsets[p][s] : 0;
            for (int i = 0; i < A.rows; ++i)
                for (int j = 0; j < A.cols; ++j) it->second(rt + i, cs + j) = A(i, j);
        }
    return S;
}

struct Embedded {
    Rep rep;
    Morphism map; // kernel inclusion or cokernel projection
};

inline Embedded kernel(const RepQuiver& Q, const Rep& M, const Rep& N, const Morphism& f) {
    Embedded K;
    std::map<Vertex, Mat> basis;
    for (const auto& [v, d] : M.dim) {
        if (!d) continue;
        Mat B = N.at(v) ? gf::kernel_matrix(component(f, v, N.at(v), d)) : Mat::identity(d);
        if (!B.cols) continue;
        K.rep.dim[v] = B.cols;
        basis[v] = B;
        K.map[v] = B;
    }
    for (const auto& [a, A] : M.mat) {
        const Vertex s = Q.source(a), t = Q.target(a);
        if (!basis.count(s) || !basis.count(t)) continue;
        auto X = gf::solve(basis[t], A * basis[s]);
        if (!X) throw std::logic_error("kernel: arrow leaves the kernel");
        K.rep.mat[a] = *X;
    }
    return K;
}

inline Embedded cokernel(const RepQuiver& Q, const Rep& M, const Rep& N, const Morphism& f) {
    Embedded C;
    std::map<Vertex, gf::Quotient> quo;
    for (const auto& [v, e] : N.dim) {
        if (!e) continue;
        Mat U = M.at(v) ? gf::column_basis(component(f, v, e, M.at(v))) : Mat(e, 0);
        auto qs = gf::quotient(U, e);
        if (!qs.q.rows) continue;
        C.rep.dim[v] = qs.q.rows;
        C.map[v] = qs.q;
        quo.emplace(v, std::move(qs));
    }
    for (const auto& [a, A] : N.mat) {
        const Vertex s = Q.source(a), t = Q.target(a);
        if (!quo.count(s) || !quo.count(t)) continue;
        C.rep.mat[a] = quo.at(t).q * A * quo.at(s).s;
    }
    return C;
}

// ---------------------------------------------------------------------------
// Projective covers and injective envelopes

struct Cover {
    Rep P;       // direct sum of indecomposable projective-injectives
    Morphism pi; // P -> N for a cover, N -> P for an envelope
    std::vector<Vertex> summands;
};

inline Cover projective_cover(const RepQuiver& Q, const Rep& N) {
    std::vector<Projective> projs;
    std::vector<std::vector<gf::Elem>> gens;
    for (const auto& [v, d] : N.dim) {
        if (!d) continue;
        std::vector<Mat> imgs;
        int cols = 0;
        for (const auto& a : Q.in_arrows(v)) {
            Mat A = arrow_matrix(Q, N, a);
            if (A.cols) {
                imgs.push_back(A);
                cols += A.cols;
            }
        }
        Mat U(d, cols);
        int c0 = 0;
        for (const auto& A : imgs) {
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < A.cols; ++j) U(i, c0 + j) = A(i, j);
            c0 += A.cols;
        }
        auto qs = gf::quotient(gf::column_basis(U), d);
        for (int t = 0; t < qs.s.cols; ++t) {
            std::vector<gf::Elem> g(d);
            for (int i = 0; i < d; ++i) g[i] = qs.s(i, t);
            projs.push_back(projective(Q, v));
            gens.push_back(std::move(g));
        }
    }
    Cover C;
    std::vector<const Rep*> parts;
    for (const auto& p : projs) parts.push_back(&p.rep);
    std::vector<std::map<Vertex, int>> off;
    C.P = direct_sum(Q, parts, off);
    for (const auto& [v, d] : C.P.dim) C.pi[v] = Mat(N.at(v), d);
    for (std::size_t p = 0; p < projs.size(); ++p) {
        const auto& pr = projs[p];
        const Vertex top = pr.where[0];
        C.summands.push_back(top);
        Mat g(N.at(top), 1);
        for (int i = 0; i < g.rows; ++i) g(i, 0) = gens[p][i];
        for (std::size_t b = 0; b < pr.basis.size(); ++b) {
            const Vertex u = pr.where[b];
            Mat img = pr.basis[b].empty() ? g : path_matrix(Q, N, pr.basis[b]) * g;
            Mat& target = C.pi[u];
            const int col = off[p][u] + pr.local[b];
            for (int i = 0; i < img.rows; ++i) target(i, col) = img(i, 0);
        }
    }
    return C;
}

inline Cover injective_envelope(const RepQuiver& Q, const Rep& N) {
    struct Piece {
        Projective inj;
        Morphism phi;
    };
    std::vector<Piece> pieces;
    for (const auto& [v, d] : N.dim) {
        if (!d) continue;
        std::vector<Mat> outs;
        int rows = 0;
        for (const auto& a : Q.out_arrows(v)) {
            Mat A = arrow_matrix(Q, N, a);
            if (A.rows) {
                outs.push_back(A);
                rows += A.rows;
            }
        }
        Mat S(rows, d);
        int r0 = 0;
        for (const auto& A : outs) {
            for (int i = 0; i < A.rows; ++i)
                for (int j = 0; j < d; ++j) S(r0 + i, j) = A(i, j);
            r0 += A.rows;
        }
        Mat soc = rows ? gf::kernel_matrix(S) : Mat::identity(d);
        if (!soc.cols) continue;
        Projective I = projective(Q, {v.level - 1, v.x});
        const int socle_local = I.local.back();
        std::vector<std::vector<gf::Elem>> chosen;
        for (const auto& phi : hom_basis(Q, N, I.rep)) {
            if (int(chosen.size()) == soc.cols) break;
            Mat row = component(phi, v, I.rep.at(v), d) * soc;
            std::vector<gf::Elem> fn(soc.cols);
            for (int j = 0; j < soc.cols; ++j) fn[j] = row(socle_local, j);
            auto trial = chosen;
            trial.push_back(fn);
            if (gf::rank_of_vectors(trial, soc.cols) == int(trial.size())) {
                chosen = trial;
                pieces.push_back({I, phi});
            }
        }
        if (int(chosen.size()) != soc.cols) throw std::logic_error("injective_envelope: socle not embedded");
    }
    Cover C;
    std::vector<const Rep*> parts;
    for (const auto& p : pieces) parts.push_back(&p.inj.rep);
    std::vector<std::map<Vertex, int>> off;
    C.P = direct_sum(Q, parts, off);
    for (const auto& [v, d] : N.dim)
        if (d && C.P.at(v)) C.pi[v] = Mat(C.P.at(v), d);
    for (std::size_t p = 0; p < pieces.size(); ++p) {
        C.summands.push_back(pieces[p].inj.where[0]);
        for (const auto& [v, B] : pieces[p].phi) {
            Mat& target = C.pi[v];
            for (int i = 0; i < B.rows; ++i)
                for (int j = 0; j < B.cols; ++j) target(off[p][v] + i, j) = B(i, j);
        }
    }
    return C;
}

// Dimension of Hom(M,N) modulo maps factoring through a projective-injective.
inline int stable_hom_dim(const RepQuiver& Q, const Rep& M, const Rep& N) {
    const int h = hom_dim_linear(Q, M, N);
    if (!h) return 0;
    const Cover C = projective_cover(Q, N);
    std::vector<std::vector<gf::Elem>> imgs;
    for (const auto& f : hom_basis(Q, M, C.P)) imgs.push_back(flatten(M, N, compose(M, C.P, N, C.pi, f)));
    std::size_t len = 0;
    for (const auto& [v, d] : M.dim) len += std::size_t(d) * N.at(v);
    return h - (imgs.empty() ? 0 : gf::rank_of_vectors(imgs, int(len)));
}

// Omega (sign -1, kernel of the projective cover) or Omega^{-1} (sign +1, cokernel of the injective envelope).
inline Rep syzygy(const RepQuiver& Q, const Rep& M, int sign) {
    if (sign < 0) {
        Cover C = projective_cover(Q, M);
        return kernel(Q, C.P, M, C.pi).rep;
    }
    Cover C = injective_envelope(Q, M);
    return cokernel(Q, M, C.P, C.pi).rep;
}

inline Rep syzygy_power(const RepQuiver& Q, Rep M, int k) {
    for (int s = 0; s < std::abs(k); ++s) M = syzygy(Q, M, k > 0 ? -1 : 1);
    return M;
}

// ---------------------------------------------------------------------------
// Isomorphism and string recognition

inline bool isomorphic(const RepQuiver& Q, const Rep& M, const Rep& N) {
    if (M.dim_vector() != N.dim_vector()) return false;
    const auto B = hom_basis(Q, M, N);
    if (B.empty()) return M.total() == 0;
    std::mt19937 rng(12345);
    for (int attempt = 0; attempt < 6; ++attempt) {
        std::vector<gf::Elem> c(B.size());
        for (auto& x : c) x = gf::from_int(std::int64_t(rng() % (gf::prime() - 1)) + 1);
        bool ok = true;
        for (const auto& [v, d] : M.dim) {
            if (!d) continue;
            Mat S(d, d);
            for (std::size_t t = 0; t < B.size(); ++t) {
                Mat F = component(B[t], v, d, d);
                for (std::size_t e = 0; e < S.a.size(); ++e) S.a[e] = gf::add(S.a[e], gf::mul(c[t], F.a[e]));
            }
            if (gf::rank(S) != d) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

// A string whose module is isomorphic to M, if any; M is assumed indecomposable.
inline std::optional<StringWord> recognize_string(const RepQuiver& Q, const Rep& M) {
    const auto dv = M.dim_vector();
    int total = 0;
    for (const auto& [v, d] : dv) total += d;
    if (total == 0) return std::nullopt;
    if (total == 1) {
        auto w = trivial_string(dv.begin()->first, 1);
        return w;
    }
    std::set<std::string> seen;
    std::optional<StringWord> found;
    std::map<Vertex, int> left = dv;
    std::function<void(StringWord&)> grow = [&](StringWord& w) {
        if (found) return;
        if (int(w.length()) + 1 == total) {
            auto key = module_key(Q, w);
            if (!seen.insert(key).second) return;
            if (isomorphic(Q, string_rep(Q, w), M)) found = w;
            return;
        }
        const Vertex e = end_vertex(Q, w);
        for (int inv = 0; inv < 2 && !found; ++inv)
            for (const auto& a : inv ? Q.in_arrows(e) : Q.out_arrows(e)) {
                const Vertex u = inv ? Q.source(a) : Q.target(a);
                auto it = left.find(u);
                if (it == left.end() || !it->second) continue;
                if (arrow_matrix(Q, M, a).is_zero()) continue;
                w.letters.push_back({a, inv == 1});
                if (is_string(Q, w)) {
                    --it->second;
                    grow(w);
                    ++it->second;
                }
                w.letters.pop_back();
                if (found) return;
            }
    };
    for (const auto& [v, d] : dv) {
        StringWord w;
        w.base = v;
        --left[v];
        grow(w);
        ++left[v];
        if (found) break;
    }
    return found;
}

} // namespace ddcat::oracle

#endif
