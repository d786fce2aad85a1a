#include <doctest.h>

#include <set>

#include "ddcat/dynkin.hpp"

using namespace ddcat;

namespace {

AtQuiver linear3(Color c1, bool fwd1, Color c2, bool fwd2) {
    AtQuiver Q;
    Q.t = 3;
    Q.edges.push_back(fwd1 ? AtEdge{0, 1, c1} : AtEdge{1, 0, c1});
    Q.edges.push_back(fwd2 ? AtEdge{1, 2, c2} : AtEdge{2, 1, c2});
    return Q;
}

const Color a = Color::alpha, b = Color::beta;

} // namespace

TEST_CASE("A3 quivers and phi_Q") {
    struct Case {
        AtQuiver Q;
        std::vector<APos> phi;
    };
    std::vector<Case> cases = {
        {linear3(a, true, a, true), {{0, 1}, {0, 2}, {0, 3}}},
        {linear3(a, true, b, true), {{0, 1}, {0, 3}, {2, 1}}},
        {linear3(a, true, b, false), {{1, 1}, {1, 2}, {0, 3}}},
        {linear3(a, false, b, true), {{0, 3}, {0, 2}, {1, 1}}},
        {linear3(b, true, b, true), {{0, 3}, {1, 2}, {2, 1}}},
        {linear3(b, true, a, true), {{0, 3}, {2, 1}, {2, 3}}},
    };
    std::set<std::string> forms;
    for (auto& c : cases) {
        CHECK(at_quiver_valid(c.Q));
        CHECK(phi_Q(c.Q) == c.phi);
        CHECK(at_is_tilting(3, c.phi));
        forms.insert(canonical_form(c.Q));
    }
    CHECK(forms.size() == 6);
    auto all = at_quivers(3);
    CHECK(all.size() == 6);
    for (auto& Q : all) CHECK(forms.count(canonical_form(Q)));
}

TEST_CASE("small A_t quiver counts") {
    CHECK(at_quivers(1).size() == 1);
    AtQuiver one;
    CHECK(phi_Q(one) == std::vector<APos>{{0, 1}});
    // two vertices: one arrow, two colours, direction irrelevant up to relabelling
    CHECK(at_quivers(2).size() == 2);
    for (int t = 1; t <= 5; ++t)
        for (auto& Q : at_quivers(t)) {
            CHECK(at_quiver_valid(Q));
            auto T = phi_Q(Q);
            CHECK(at_is_tilting(t, T));
            for (auto& p : T) CHECK((p.h >= 1 && p.h <= t));
        }
}

TEST_CASE("invalid quivers rejected") {
    AtQuiver Q;
    Q.t = 3;
    Q.edges = {{0, 1, a}, {2, 1, a}};
    CHECK_FALSE(at_quiver_valid(Q));
    Q.edges = {{0, 1, a}, {1, 0, b}};
    CHECK_FALSE(at_quiver_valid(Q));
}

TEST_CASE("A_t suspension and hom") {
    const int t = 3;
    CHECK(at_sigma(t, {0, 1}) == APos{1, 3});
    CHECK(at_sigma(t, {0, 3}) == APos{3, 1});
    for (Int g = -4; g <= 4; ++g)
        for (Int h = 1; h <= t; ++h) {
            APos p{g, h};
            CHECK(at_sigma(t, at_sigma(t, p), -1) == p);
            CHECK(at_sigma(t, p, 2) == at_tau(p, -(t + 1)));
            CHECK(at_hom(t, p, p) == 1);
        }
    CHECK(at_hom(t, {0, 1}, {0, 3}) == 1);
    CHECK(at_hom(t, {0, 3}, {0, 1}) == 0);
    CHECK(at_hom(t, {0, 2}, {1, 1}) == 1);
    CHECK(at_module_name(t, {0, 2}) == "P(2)");
    CHECK(at_module_name(t, {1, 2}) == "I(2)");
    CHECK(at_module_name(t, {2, 1}) == "S(3)");
    CHECK(at_module_name(t, {2, 3}) == "SS(2)");
    CHECK(at_module_name(t, {3, 3}) == "SS(3)");
    CHECK(at_module_name(t, {4, 1}) == "S^2P(1)");
}

TEST_CASE("twelve A3 tilting objects up to suspension") {
    const int t = 3;
    auto all = at_tilting_objects(t);
    CHECK(all.size() == 12);
    std::set<std::set<std::string>> got;
    for (auto& T : all) {
        CHECK(at_is_tilting(t, T));
        std::set<std::string> names;
        for (auto& p : T) names.insert(at_module_name(t, p));
        got.insert(names);
    }
    std::set<std::set<std::string>> expected = {
        {"P(1)", "P(2)", "P(3)"},   {"P(1)", "P(3)", "S(3)"},   {"P(3)", "I(2)", "S(2)"},
        {"P(2)", "P(3)", "S(2)"},   {"P(3)", "I(2)", "S(3)"},   {"P(3)", "S(3)", "SS(2)"},
        {"S(2)", "I(2)", "SP(1)"},  {"S(2)", "SP(1)", "SP(3)"}, {"SP(1)", "SP(2)", "S(3)"},
        {"I(2)", "SP(1)", "S(3)"},  {"S(3)", "SP(2)", "SS(2)"}, {"S(3)", "SS(2)", "S^2P(1)"},
    };
    CHECK(got == expected);
}

TEST_CASE("exceptional order") {
    const int t = 3;
    auto T = at_exceptional_order(t, {{1, 1}, {0, 3}, {0, 2}});
    CHECK(T == AtObject{{0, 2}, {0, 3}, {1, 1}});
    for (auto& S : at_tilting_objects(4))
        for (std::size_t x = 0; x < S.size(); ++x)
            for (std::size_t y = x + 1; y < S.size(); ++y) CHECK(at_graded_hom(4, S[y], S[x]).empty());
}
