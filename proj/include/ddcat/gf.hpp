#ifndef DDCAT_GF_HPP
#define DDCAT_GF_HPP

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ddcat::gf {

using Elem = std::uint32_t;

inline constexpr Elem primary_prime = 32003;
inline constexpr Elem second_prime = 65537;

inline Elem& prime_slot() {
    static thread_local Elem p = primary_prime;
    return p;
}
inline Elem prime() { return prime_slot(); }

// Switches the working prime for the lifetime of the scope.
class PrimeScope {
public:
    explicit PrimeScope(Elem p) : saved_(prime_slot()) { prime_slot() = p; }
    ~PrimeScope() { prime_slot() = saved_; }
    PrimeScope(const PrimeScope&) = delete;
    PrimeScope& operator=(const PrimeScope&) = delete;

private:
    Elem saved_;
};

inline bool second_prime_enabled() {
    const char* v = std::getenv("DDCAT_SECOND_PRIME");
    return v && std::string(v) == "1";
}

inline std::vector<Elem> working_primes() {
    std::vector<Elem> ps{primary_prime};
    if (second_prime_enabled()) ps.push_back(second_prime);
    return ps;
}

inline Elem add(Elem a, Elem b) {
    std::uint64_t s = std::uint64_t(a) + b;
    return Elem(s >= prime() ? s - prime() : s);
}
inline Elem sub(Elem a, Elem b) { return a >= b ? a - b : Elem(std::uint64_t(a) + prime() - b); }
inline Elem mul(Elem a, Elem b) { return Elem(std::uint64_t(a) * b % prime()); }
inline Elem neg(Elem a) { return a == 0 ? 0 : prime() - a; }

inline Elem power(Elem a, std::uint64_t e) {
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}
inline Elem inv(Elem a) {
    if (a == 0) throw std::domain_error("inverse of zero");
    return power(a, prime() - 2);
}

inline Elem from_int(long long v) {
    long long p = prime();
    long long r = v % p;
    return Elem(r < 0 ? r + p : r);
}

struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Elem> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}

    Elem& operator()(int i, int j) { return a[std::size_t(i) * cols + j]; }
    Elem operator()(int i, int j) const { return a[std::size_t(i) * cols + j]; }

    static Mat identity(int n) {
        Mat I(n, n);
        for (int i = 0; i < n; ++i) I(i, i) = 1;
        return I;
    }
    bool is_zero() const {
        for (Elem x : a)
            if (x) return false;
        return true;
    }
    friend bool operator==(const Mat&, const Mat&) = default;
};

inline Mat operator*(const Mat& A, const Mat& B) {
    if (A.cols != B.rows) throw std::invalid_argument("matrix shape mismatch");
    Mat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int t = 0; t < A.cols; ++t) {
            Elem x = A(i, t);
            if (!x) continue;
            for (int j = 0; j < B.cols; ++j) C(i, j) = add(C(i, j), mul(x, B(t, j)));
        }
    return C;
}

inline Mat operator-(const Mat& A, const Mat& B) {
    Mat C(A.rows, A.cols);
    for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = sub(A.a[i], B.a[i]);
    return C;
}

// In-place reduced row echelon form; returns pivot columns.
inline std::vector<int> rref(Mat& M) {
    std::vector<int> piv;
    int row = 0;
    for (int c = 0; c < M.cols && row < M.rows; ++c) {
        int p = -1;
        for (int i = row; i < M.rows; ++i)
            if (M(i, c)) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < M.cols; ++j) std::swap(M(p, j), M(row, j));
        Elem s = inv(M(row, c));
        for (int j = c; j < M.cols; ++j) M(row, j) = mul(M(row, j), s);
        for (int i = 0; i < M.rows; ++i) {
            if (i == row || !M(i, c)) continue;
            Elem f = M(i, c);
            for (int j = c; j < M.cols; ++j) M(i, j) = sub(M(i, j), mul(f, M(row, j)));
        }
        piv.push_back(c);
        ++row;
    }
    return piv;
}

inline int rank(Mat M) { return int(rref(M).size()); }

inline int rank_of_vectors(const std::vector<std::vector<Elem>>& vs, int len) {
    Mat M(int(vs.size()), len);
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (int j = 0; j < len; ++j) M(int(i), j) = vs[i][j];
    return rank(M);
}

// Basis of {x : A x = 0}.
inline std::vector<std::vector<Elem>> nullspace(Mat A) {
    auto piv = rref(A);
    std::vector<char> is_piv(A.cols, 0);
    for (int c : piv) is_piv[c] = 1;
    std::vector<std::vector<Elem>> basis;
    for (int f = 0; f < A.cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Elem> v(A.cols, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = neg(A(int(r), f));
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves A X = B; nullopt if inconsistent.  A need not be square.
inline std::optional<Mat> solve(const Mat& A, const Mat& B) {
    Mat aug(A.rows, A.cols + B.cols);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) aug(i, j) = A(i, j);
        for (int j = 0; j < B.cols; ++j) aug(i, A.cols + j) = B(i, j);
    }
    auto piv = rref(aug);
    for (int c : piv)
        if (c >= A.cols) return std::nullopt;
    Mat X(A.cols, B.cols);
    for (std::size_t r = 0; r < piv.size(); ++r)
        for (int j = 0; j < B.cols; ++j) X(piv[r], j) = aug(int(r), A.cols + j);
    return X;
}

// Columns spanning the column space of A, chosen among A's columns.
inline Mat column_basis(const Mat& A) {
    Mat R = A;
    auto piv = rref(R);
    Mat C(A.rows, int(piv.size()));
    for (std::size_t t = 0; t < piv.size(); ++t)
        for (int i = 0; i < A.rows; ++i) C(i, int(t)) = A(i, piv[t]);
    return C;
}

// Kernel of A as the columns of a matrix.
inline Mat kernel_matrix(const Mat& A) {
    auto ns = nullspace(A);
    Mat K(A.cols, int(ns.size()));
    for (std::size_t t = 0; t < ns.size(); ++t)
        for (int i = 0; i < A.cols; ++i) K(i, int(t)) = ns[t][i];
    return K;
}

// For a subspace U (columns, independent) of k^d: a quotient map q (c x d) with q U = 0
// and a section s (d x c) with q s = 1.
struct Quotient {
    Mat q;
    Mat s;
};

inline Quotient quotient(const Mat& U, int d) {
    Mat R(U.cols, d);
    for (int i = 0; i < U.cols; ++i)
        for (int j = 0; j < d; ++j) R(i, j) = U(j, i);
    auto piv = rref(R);
    std::vector<char> used(d, 0);
    for (int c : piv) used[c] = 1;
    std::vector<int> extra;
    for (int j = 0; j < d; ++j)
        if (!used[j]) extra.push_back(j);
    const int c = int(extra.size());
    // basis B = [U | e_extra]; q = last c rows of B^{-1}
    Mat B(d, int(piv.size()) + c);
    int u = 0;
    Mat Ub = column_basis(U);
    for (; u < Ub.cols; ++u)
        for (int i = 0; i < d; ++i) B(i, u) = Ub(i, u);
    for (int t = 0; t < c; ++t) B(extra[t], u + t) = 1;
    auto Binv = solve(B, Mat::identity(d));
    if (!Binv) throw std::logic_error("quotient: basis extension failed");
    Quotient out{Mat(c, d), Mat(d, c)};
    for (int t = 0; t < c; ++t) {
        for (int j = 0; j < d; ++j) out.q(t, j) = (*Binv)(u + t, j);
        out.s(extra[t], t) = 1;
    }
    return out;
}

} // namespace ddcat::gf

#endif
