#ifndef DDCAT_AUTOEQUIV_HPP
#define DDCAT_AUTOEQUIV_HPP

#include <string>

#include "core.hpp"
#include "snf.hpp"

namespace ddcat {

// Sigma^a T_X^b T_Y^c acting on objects.
struct AutoEq {
    Int a = 0;
    Int b = 0;
    Int c = 0;

    friend bool operator==(const AutoEq&, const AutoEq&) = default;
};

// Sigma^r = T_X^{m+r} T_Y^{r-n} on objects.
inline std::array<Int, 3> relation_vector(const Params& P) { return {P.r, P.m + P.r, P.r - P.n}; }

// Exponent triples acting trivially on objects are multiples of this vector.
inline std::array<Int, 3> kernel_vector(const Params& P) {
    auto rel = relation_vector(P);
    return {rel[0], -rel[1], -rel[2]};
}

// a reduced into [0,r), quotient folded into the twist exponents.
inline AutoEq normal_form(const Params& P, AutoEq f) {
    auto ker = kernel_vector(P);
    Int q = floor_div(f.a, P.r);
    return {f.a - q * ker[0], f.b - q * ker[1], f.c - q * ker[2]};
}

inline Obj twist_X(const Obj& A, Int b) {
    switch (A.kind) {
    case Kind::X: return tau(A, -b);
    case Kind::Y: return A;
    default: return {A.kind, A.k, A.i + b, A.j};
    }
}

inline Obj twist_Y(const Obj& A, Int c) {
    switch (A.kind) {
    case Kind::X: return A;
    case Kind::Y: return tau(A, -c);
    default: return {A.kind, A.k, A.i, A.j + c};
    }
}

inline Obj apply(const Params& P, const AutoEq& f, const Obj& A) {
    return twist_Y(twist_X(sigma(P, A, f.a), f.b), f.c);
}

inline AutoEq compose(const Params& P, const AutoEq& f, const AutoEq& g) {
    return normal_form(P, {f.a + g.a, f.b + g.b, f.c + g.c});
}

inline AutoEq invert(const Params& P, const AutoEq& f) { return normal_form(P, {-f.a, -f.b, -f.c}); }

inline bool equal(const Params& P, const AutoEq& f, const AutoEq& g) {
    return normal_form(P, f) == normal_form(P, g);
}

inline AbelianGroup group_structure(const Params& P) {
    auto ker = kernel_vector(P);
    return cokernel({{ker[0], ker[1], ker[2]}});
}

inline Int torsion_order(const AbelianGroup& g) {
    Int t = 1;
    for (Int x : g.torsion) t *= x;
    return t;
}

inline AutoEq transitive_witness(const Params& P, const Obj& Z1, const Obj& Z2) {
    if (Z1.kind != Kind::Z || Z2.kind != Kind::Z) throw NotZComponent("transitive_witness needs Z objects");
    Int a = Z2.k - Z1.k;
    Obj S = sigma(P, Z1, a);
    return normal_form(P, {a, Z2.i - S.i, Z2.j - S.j});
}

inline std::string to_string(const AutoEq& f) {
    return "S^" + std::to_string(f.a) + " TX^" + std::to_string(f.b) + " TY^" + std::to_string(f.c);
}

} // namespace ddcat

#endif
