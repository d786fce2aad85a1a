#ifndef DDCAT_HAMMOCKS_HPP
#define DDCAT_HAMMOCKS_HPP

#include <cstdlib>
#include <map>
#include <string>

#include "core.hpp"

namespace ddcat {

// Dimension profile of Hom(A, Sigma^d B), nonzero entries only.
struct GradedDim {
    std::map<Int, int> entries;

    int at(Int d) const {
        auto it = entries.find(d);
        return it == entries.end() ? 0 : it->second;
    }
    void add(Int d, int v) {
        if (v == 0) return;
        entries[d] += v;
    }
    int total() const {
        int s = 0;
        for (auto& [d, v] : entries) s += v;
        return s;
    }
    bool empty() const { return entries.empty(); }
    friend bool operator==(const GradedDim&, const GradedDim&) = default;
};

inline std::string to_string(const GradedDim& g) {
    std::string s = "{";
    bool first = true;
    for (auto& [d, v] : g.entries) {
        if (!first) s += ", ";
        first = false;
        s += std::to_string(d) + ":" + std::to_string(v);
    }
    return s + "}";
}

namespace detail {

inline bool in_box(Int a, Int lo, Int hi) { return lo <= a && a <= hi; }

inline int next_comp(const Params& P, int k) { return (k + 1) % P.r; }

inline int hom_from_X(const Params& P, const Obj& A, const Obj& B) {
    const Int i = A.i, j = A.j;
    int d = 0;
    if (B.kind == Kind::X) {
        // rays from the coray segment A .. X_jj
        if (B.k == A.k && in_box(B.i, i, j) && B.j >= j) ++d;
        // corays into the ray segment X_ss .. SA
        if (B.k == next_comp(P, A.k)) {
            Obj SA = serre(P, A);
            if (B.i <= SA.i && in_box(B.j, SA.i, SA.j)) ++d;
        }
    } else if (B.kind == Kind::Z) {
        if (B.k == A.k && in_box(B.i, i, j)) ++d;
    }
    return d;
}

inline int hom_from_Y(const Params& P, const Obj& A, const Obj& B) {
    const Int i = A.i, j = A.j;
    int d = 0;
    if (B.kind == Kind::Y) {
        // corays from the ray segment A .. Y_ii
        if (B.k == A.k && B.i >= i && in_box(B.j, j, i)) ++d;
        // rays into the coray segment Y_tt .. SA
        if (B.k == next_comp(P, A.k)) {
            Obj SA = serre(P, A);
            if (in_box(B.i, SA.j, SA.i) && B.j <= SA.j) ++d;
        }
    } else if (B.kind == Kind::Z) {
        if (B.k == A.k && in_box(B.j, j, i)) ++d;
    }
    return d;
}

inline int hom_from_Z(const Params& P, const Obj& A, const Obj& B) {
    int d = 0;
    const int k1 = next_comp(P, A.k);
    if (B.kind == Kind::X) {
        if (B.k == k1) {
            Int p = mouth_projection(P, A, Mouth::ray_mouth).i;
            if (B.i <= p && p <= B.j) ++d;
        }
    } else if (B.kind == Kind::Y) {
        if (B.k == k1) {
            Int q = mouth_projection(P, A, Mouth::coray_mouth).i;
            if (B.j <= q && q <= B.i) ++d;
        }
    } else {
        if (B.k == A.k && B.i >= A.i && B.j >= A.j) ++d;
        if (B.k == k1) {
            Obj SA = serre(P, A);
            if (B.i <= SA.i && B.j <= SA.j) ++d;
        }
    }
    return d;
}

} // namespace detail

// dim Hom(A,B) from the hammock regions. For r = 1 the clauses for components k and k+1
// refer to the same component and their multiplicities add.
inline int hom_dim(const Params& P, const Obj& A, const Obj& B) {
    require_valid(P, A);
    require_valid(P, B);
    switch (A.kind) {
    case Kind::X: return detail::hom_from_X(P, A, B);
    case Kind::Y: return detail::hom_from_Y(P, A, B);
    default: return detail::hom_from_Z(P, A, B);
    }
}

// Number of Sigma^r periods after which Sigma^d B has drifted past every hammock band of A.
inline Int scan_periods(const Params& P, const Obj& A, const Obj& B) {
    return std::llabs(A.i) + std::llabs(A.j) + std::llabs(B.i) + std::llabs(B.j) + 2 * (P.n + P.m + P.r) + 2;
}

// Degree scan: walk outward from 0 and stop once r consecutive degrees vanish beyond the drift bound.
inline GradedDim graded_hom(const Params& P, const Obj& A, const Obj& B) {
    require_valid(P, A);
    require_valid(P, B);
    GradedDim g;
    const Int bound = P.r * scan_periods(P, A, B);
    for (int dir : {1, -1}) {
        int zeros = 0;
        for (Int d = (dir == 1 ? 0 : -1);; d += dir) {
            int v = hom_dim(P, A, sigma(P, B, d));
            g.add(d, v);
            zeros = v ? 0 : zeros + 1;
            if (std::llabs(d) > bound && zeros >= P.r) break;
        }
    }
    return g;
}

inline GradedDim endo_complex(const Params& P, const Obj& A) {
    require_valid(P, A);
    GradedDim g;
    if (A.kind == Kind::Z) {
        g.add(0, 1);
        return g;
    }
    const Int h = height(A), r = P.r;
    if (A.kind == Kind::X) {
        const Int lp = h / (P.m + r), lm = (h + 1) / (P.m + r);
        for (Int l = 0; l <= lp; ++l) g.add(l * r, 1);
        for (Int l = 1; l <= lm; ++l) g.add(1 - l * r, 1);
    } else {
        const Int lp = (h + 1) / (P.n - r), lm = h / (P.n - r);
        for (Int l = 0; l <= lm; ++l) g.add(-l * r, 1);
        for (Int l = 1; l <= lp; ++l) g.add(l * r + 1, 1);
    }
    return g;
}

struct ObjectClass {
    enum class Tag { Exceptional, Spherelike, Big };
    Tag tag = Tag::Exceptional;
    int d = 0;               // spherelike degree
    bool spherical = false;  // S A = Sigma^d A

    friend bool operator==(const ObjectClass&, const ObjectClass&) = default;
};

inline ObjectClass classify(const Params& P, const Obj& A) {
    require_valid(P, A);
    ObjectClass c;
    if (A.kind == Kind::Z) return c;
    const Int h = height(A);
    const Int edge = A.kind == Kind::X ? P.m + P.r - 1 : P.n - P.r - 1;
    if (h < edge) return c;
    if (h > edge) {
        c.tag = ObjectClass::Tag::Big;
        return c;
    }
    c.tag = ObjectClass::Tag::Spherelike;
    c.d = A.kind == Kind::X ? 1 - P.r : 1 + P.r;
    c.spherical = serre(P, A) == sigma(P, A, c.d);
    return c;
}

inline std::string to_string(const ObjectClass& c) {
    switch (c.tag) {
    case ObjectClass::Tag::Exceptional: return "Exceptional";
    case ObjectClass::Tag::Big: return "Big";
    default: return std::string(c.spherical ? "Spherical(" : "Spherelike(") + std::to_string(c.d) + ")";
    }
}

inline Int euler_char(const Params& P, const Obj& T, const Obj& A) {
    Int chi = 0;
    for (auto& [d, v] : graded_hom(P, T, A).entries) chi += (d % 2 == 0 ? 1 : -1) * v;
    return chi;
}

} // namespace ddcat

#endif
