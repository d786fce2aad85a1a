#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ddcat/autoequiv.hpp"
#include "ddcat/dictionary.hpp"
#include "ddcat/dynkin.hpp"
#include "ddcat/hammocks.hpp"
#include "ddcat/report.hpp"
#include "ddcat/silting.hpp"

#ifndef DDCAT_GOLDEN_TABLE231
#define DDCAT_GOLDEN_TABLE231 "tests/golden/table231.json"
#endif

using nlohmann::json;
using namespace ddcat;

namespace {

const std::vector<Params> kGrid = {{1, 2, 0}, {1, 2, 1}, {2, 3, 1}, {2, 5, 2}, {3, 4, 2}};
const Params P231{2, 3, 1};

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::vector<Obj> box_objects(const Params& P, Int w) {
    std::vector<Obj> out;
    for (int k = 0; k < P.r; ++k)
        for (Int i = -w; i <= w; ++i)
            for (Int j = -w; j <= w; ++j)
                for (Kind kind : {Kind::X, Kind::Y, Kind::Z}) {
                    Obj A{kind, k, i, j};
                    if (is_valid(P, A)) out.push_back(A);
                }
    return out;
}

// Locus where two hammock regions of A overlap when r = 1.
bool two_dim_locus(const Params& P, const Obj& A, const Obj& B) {
    if (P.r != 1 || A.kind != B.kind || A.kind == Kind::Z) return false;
    const Obj SA = serre(P, A);
    auto in = [](Int a, Int lo, Int hi) { return lo <= a && a <= hi; };
    if (A.kind == Kind::X) {
        bool square = in(B.i, A.i, A.j) && B.j >= A.j && B.i <= SA.i && in(B.j, SA.i, SA.j);
        bool mouth = at_mouth(A) && B == X(0, A.i, A.i + P.m);
        return square || mouth;
    }
    return B.i >= A.i && in(B.j, A.j, A.i) && in(B.i, SA.j, SA.i) && B.j <= SA.j;
}

Outcome c1_bound() {
    Outcome o;
    long pairs = 0, twos = 0;
    for (const auto& P : kGrid) {
        auto objs = box_objects(P, 8);
        const int cap = P.r == 1 ? 2 : 1;
        for (const auto& A : objs)
            for (const auto& B : objs) {
                ++pairs;
                for (const auto& [d, v] : graded_hom(P, A, B).entries) {
                    if (v == 0) continue;
                    Obj Bd = sigma(P, B, d);
                    if (v > cap || (v == 2 && !two_dim_locus(P, A, Bd))) {
                        if (o.pass) o.detail = "violation at " + to_string(A) + " -> " + to_string(Bd) + " dim " + std::to_string(v) + "; ";
                        o.pass = false;
                    }
                    if (v == 2) ++twos;
                }
            }
    }
    o.detail += std::to_string(pairs) + " pairs, " + std::to_string(twos) + " two-dimensional graded pieces";
    return o;
}

Outcome c2_serre() {
    Outcome o;
    long n = 0;
    for (const auto& P : kGrid) {
        auto objs = box_objects(P, 8);
        for (const auto& A : objs) {
            const Obj SA = serre(P, A);
            for (const auto& B : objs) {
                ++n;
                if (hom_dim(P, A, B) != hom_dim(P, B, SA)) {
                    if (o.pass) o.detail = "fails at " + to_string(A) + ", " + to_string(B) + "; ";
                    o.pass = false;
                }
            }
        }
    }
    o.detail += std::to_string(n) + " pairs";
    return o;
}

Outcome c3_relations() {
    Outcome o;
    long n = 0;
    for (const auto& P : kGrid)
        for (const auto& A : box_objects(P, 8)) {
            ++n;
            const Obj S = sigma(P, A, P.r);
            bool ok = twist_X(twist_Y(A, 1), 1) == tau(A, -1) && twist_Y(twist_X(A, 1), 1) == tau(A, -1);
            if (A.kind == Kind::X) ok &= S == tau(A, -(P.m + P.r));
            if (A.kind == Kind::Y) ok &= S == tau(A, P.n - P.r);
            ok &= S == twist_X(twist_Y(A, P.r - P.n), P.m + P.r);
            if (!ok) {
                if (o.pass) o.detail = "fails at " + to_string(A) + "; ";
                o.pass = false;
            }
        }
    o.detail += std::to_string(n) + " objects";
    return o;
}

Outcome c4_endo() {
    Outcome o;
    int n = 0;
    for (const auto& P : kGrid)
        for (int k = 0; k < P.r; ++k)
            for (int h = 0; h <= 12; ++h)
                for (Obj A : {X(k, -3, h - 3), Y(k, h + 2, 2)}) {
                    ++n;
                    if (endo_complex(P, A) != graded_hom(P, A, A)) {
                        if (o.pass) o.detail = "fails at " + to_string(A) + "; ";
                        o.pass = false;
                    }
                }
    o.detail += std::to_string(n) + " objects";
    return o;
}

Outcome c5_group() {
    Outcome o;
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> R(1, 12), D(1, 15), M(0, 20);
    for (int t = 0; t < 20; ++t) {
        int r = R(rng), n = r + D(rng), m = M(rng);
        Int tor = torsion_order(group_structure({r, n, m}));
        Int g = std::gcd(std::gcd(r, n), m);
        if (tor != g) {
            o.pass = false;
            o.detail += "(" + std::to_string(r) + "," + std::to_string(n) + "," + std::to_string(m) + ") torsion " +
                        std::to_string(tor) + " vs gcd " + std::to_string(g) + "; ";
        }
    }
    o.detail += "20 triples";
    return o;
}

json load_golden() {
    std::ifstream in(DDCAT_GOLDEN_TABLE231);
    if (!in) throw std::runtime_error(std::string("cannot read ") + DDCAT_GOLDEN_TABLE231);
    return json::parse(in);
}

Outcome c6_table(const json& golden) {
    Outcome o;
    auto fams = silting_families(P231, base_Z());
    json got = families_json(fams);
    if (fams.size() != 12) {
        o.pass = false;
        o.detail += std::to_string(fams.size()) + " families; ";
    }
    if (got != golden.at("families")) {
        o.pass = false;
        o.detail += "family constraints differ from golden; ";
    }
    auto en = enumerate_silting(P231, base_Z(), -2, 3);
    for (const auto& M : en.instances)
        if (M.size() != 4 || !is_partial_silting(P231, M)) {
            if (o.pass) o.detail += "bad instance " + coords(M).dump() + "; ";
            o.pass = false;
        }
    o.detail += std::to_string(fams.size()) + " families, " + std::to_string(en.instances.size()) + " boxed instances";
    return o;
}

Outcome c7_six(const json& golden) {
    Outcome o;
    std::set<json> printed(golden.at("tilting").begin(), golden.at("tilting").end());
    json got_j = tilting_json(P231, base_Z(), 3);
    std::set<json> got(got_j.begin(), got_j.end());
    for (const auto& T : printed)
        if (!got.count(T)) {
            o.pass = false;
            ObjSet S;
            for (const auto& c : T) S.push_back(parse_obj(c.get<std::string>(), &P231));
            o.detail += "listed " + T.dump() + " not produced (" +
                        (is_partial_silting(P231, S) ? "silting" : "not silting") + "); ";
        }
    for (const auto& T : got)
        if (!printed.count(T)) {
            o.pass = false;
            o.detail += "produced " + T.dump() + " not listed; ";
        }
    ObjSet M = sorted_set({Z(0, 0, 0), X(0, -2, -2), X(0, 0, 0), Z(0, 6, -1)});
    auto en = enumerate_silting(P231, base_Z(), -2, 3);
    bool emitted = std::count(en.instances.begin(), en.instances.end(), M) == 1;
    if (!emitted) o.pass = false;
    o.detail += std::to_string(got.size()) + " tilting objects; silting instance M " + (emitted ? "emitted" : "missing");
    return o;
}

Outcome c8_a3() {
    Outcome o;
    auto qs = at_quivers(3);
    std::set<std::vector<APos>> phis;
    for (const auto& Q : qs) {
        auto v = phi_Q(Q);
        std::sort(v.begin(), v.end(), [](const APos& a, const APos& b) { return std::tuple(a.g, a.h) < std::tuple(b.g, b.h); });
        phis.insert(v);
    }
    std::set<std::vector<APos>> listed = {{{0, 1}, {0, 2}, {0, 3}}, {{0, 1}, {0, 3}, {2, 1}}, {{0, 3}, {1, 1}, {1, 2}},
                                          {{0, 2}, {0, 3}, {1, 1}}, {{0, 3}, {1, 2}, {2, 1}}, {{0, 3}, {2, 1}, {2, 3}}};
    auto til = at_tilting_objects(3);
    o.pass = qs.size() == 6 && phis == listed && til.size() == 12;
    o.detail = std::to_string(qs.size()) + " quivers, phi values " + (phis == listed ? "match" : "differ") + ", " +
               std::to_string(til.size()) + " tilting objects";
    return o;
}

Outcome c9_oracle() {
    auto rep = oracle::oracle_check(P231, 4, 200, 42);
    Outcome o;
    o.pass = rep.samples == 200 && rep.stable_agree == 200 && rep.count_agree == 200 && rep.mismatches.empty();
    o.detail = "stable " + std::to_string(rep.stable_agree) + "/200, counts " + std::to_string(rep.count_agree) +
               "/200, " + std::to_string(rep.mismatches.size()) + " mismatches";
    return o;
}

Outcome c10_euler() {
    Outcome o;
    std::mt19937 rng(77);
    long checks = 0;
    for (int t = 0; t < 500; ++t) {
        const Params& P = kGrid[t % kGrid.size()];
        auto objs = box_objects(P, 6);
        std::uniform_int_distribution<std::size_t> pick(0, objs.size() - 1);
        std::uniform_int_distribution<int> c(-5, 5), dd(0, 6), kk(0, P.r - 1), kind(0, 1);
        auto tri = special_triangle(kind(rng) ? TriangleKind::ray : TriangleKind::coray, kk(rng), c(rng), c(rng), dd(rng));
        for (int s = 0; s < 20; ++s) {
            const Obj& T = objs[pick(rng)];
            ++checks;
            if (euler_char(P, T, tri[1]) != euler_char(P, T, tri[0]) + euler_char(P, T, tri[2])) {
                if (o.pass) o.detail = "fails for " + to_string(T) + " against " + to_string(tri[1]) + "; ";
                o.pass = false;
            }
        }
    }
    o.detail += "500 triangles, " + std::to_string(checks) + " checks";
    return o;
}

oracle::StringWord random_string(const oracle::RepQuiver& Q, std::mt19937& rng, int max_len) {
    using namespace oracle;
    auto vs = Q.vertices_at_level(0);
    StringWord w = trivial_string(vs[rng() % vs.size()], rng() % 2 ? 1 : -1);
    int len = int(rng() % (max_len + 1));
    for (int t = 0; t < len; ++t) {
        std::vector<StringWord> options;
        Vertex e = end_vertex(Q, w);
        for (int inv = 0; inv < 2; ++inv)
            for (const auto& a : inv ? Q.in_arrows(e) : Q.out_arrows(e)) {
                StringWord c = w;
                c.letters.push_back({a, inv == 1});
                if (is_string(Q, c)) options.push_back(c);
            }
        if (options.empty()) break;
        w = options[rng() % options.size()];
    }
    return w;
}

Outcome c11_strings() {
    using namespace oracle;
    Outcome o;
    RepQuiver Q(P231, 4);
    std::mt19937 rng(31);
    int tested = 0;
    for (int t = 0; t < 20000 && tested < 200; ++t) {
        auto w = random_string(Q, rng, 8);
        auto r = shift_right(Q, w, 1), l = shift_left(Q, w, 1);
        if (!r || !l) continue;
        auto a = shift_left(Q, *r, 1), b = shift_right(Q, *l, 1);
        ++tested;
        if (!a || !b || module_key(Q, *a) != module_key(Q, *b)) {
            if (o.pass) o.detail = "mesh fails at " + serialize(Q, w) + "; ";
            o.pass = false;
        }
    }
    if (tested < 200) o.pass = false;

    auto S = [&](const char* s) { return parse_string(Q, s); };
    auto ser = [&](const std::optional<StringWord>& w) { return w ? serialize(Q, *w) : std::string("0"); };
    const auto cy = S("c@-1 . y@-1");
    bool tri = ser(right_hook(Q, cy)) == "x~@-1 . b@-1 . c@-1 . y@-1" && ser(left_hook(Q, cy)) == "c@-1" &&
               ser(ar_translate_inv(Q, cy)) == "x~@-1 . b@-1 . c@-1";
    if (!tri) {
        o.pass = false;
        o.detail += "AR triangle differs; ";
    }

    const auto y = S("y@-1");
    std::vector<StringWord> chain = {trivial_string({0, -1}, epsilon_of(Q, y)),
                                     S("d~@-1 . y@-1"),
                                     S("a@-1 . d~@-1 . y@-1"),
                                     S("c@-2 . y@-2 . a@-1 . d~@-1 . y@-1"),
                                     y,
                                     S("c@-1 . y@-1"),
                                     S("x~@-1 . b@-1 . c@-1 . y@-1"),
                                     S("a@0 . b@0 . c@0 . x~@-1 . b@-1 . c@-1 . y@-1"),
                                     S("b@-1 . c@-1 . y@-1")};
    bool ordered = true;
    for (std::size_t s = 0; s + 1 < chain.size(); ++s) ordered &= geiss_compare(Q, chain[s], chain[s + 1]) < 0;
    for (std::size_t s : {0u, 1u, 3u, 4u, 5u, 7u}) ordered &= shift_right_move(Q, chain[s]).word == chain[s + 1];
    if (!ordered) {
        o.pass = false;
        o.detail += "chain differs; ";
    }
    o.detail += std::to_string(tested) + " mesh strings, AR triangle " + (tri ? "ok" : "differs") + ", chain of " +
                std::to_string(chain.size()) + (ordered ? " ok" : " differs");
    return o;
}

} // namespace

int main() {
    json golden;
    std::string golden_error;
    try {
        golden = load_golden();
    } catch (const std::exception& e) {
        golden_error = e.what();
    }
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    auto needs_golden = [&](std::function<Outcome(const json&)> f) {
        return [&golden, &golden_error, f] {
            if (!golden_error.empty()) return Outcome{false, golden_error};
            return f(golden);
        };
    };
    std::vector<Criterion> all = {
        {1, "hom dimension bound", c1_bound},
        {2, "Serre duality", c2_serre},
        {3, "functor relations", c3_relations},
        {4, "graded endomorphisms", c4_endo},
        {5, "group torsion", c5_group},
        {6, "silting families for (2,3,1)", needs_golden(c6_table)},
        {7, "six tilting objects", needs_golden(c7_six)},
        {8, "A3 quivers and tilting", c8_a3},
        {9, "module oracle", c9_oracle},
        {10, "Euler additivity", c10_euler},
        {11, "string mesh and Geiss chain", c11_strings},
    };
    int failed = 0;
    for (const auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!o.pass) ++failed;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "criterion " << c.id << " " << (o.pass ? "PASS" : "FAIL") << " " << c.name << ": " << o.detail << " ("
             << secs << " s)";
        std::cout << line.str() << std::endl;
    }
    std::cout << (11 - failed) << "/11 criteria pass" << std::endl;
    return failed ? 1 : 0;
}
