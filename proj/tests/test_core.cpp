#include <doctest.h>

#include <random>

#include "ddcat/core.hpp"
#include "ddcat/hammocks.hpp"

using namespace ddcat;

TEST_CASE("make_params validity") {
    CHECK(make_params(2, 3, 1) == Params{2, 3, 1});
    CHECK(make_params(1, 2, 0) == Params{1, 2, 0});
    CHECK(make_params(1, 2, 0).rank() == 2);
    CHECK_THROWS_AS(make_params(2, 2, 1), InvalidParams);
    CHECK_THROWS_AS(make_params(0, 2, 1), InvalidParams);
    CHECK_THROWS_AS(make_params(1, 2, -1), InvalidParams);
}

TEST_CASE("height") {
    CHECK(height(X(0, 2, 5)) == 3);
    CHECK(height(Y(1, 4, 4)) == 0);
    CHECK(at_mouth(Y(1, 4, 4)));
    CHECK_THROWS_AS(height(Z(0, 0, 0)), NotApplicable);
}

TEST_CASE("tau") {
    CHECK(tau(X(0, 2, 5)) == X(0, 1, 4));
    CHECK(tau(Z(1, 7, -2), 0) == Z(1, 7, -2));
    CHECK(tau(Z(1, 0, 0), -3) == Z(1, 3, 3));
}

TEST_CASE("sigma") {
    Params P{2, 5, 2};
    CHECK(sigma(P, X(1, 3, 7)) == X(0, 7, 11));
    CHECK(sigma(P, Z(1, 0, 0)) == Z(0, 4, -3));
    CHECK(sigma(P, Y(0, 3, 1)) == Y(1, 3, 1));
    CHECK(sigma(P, Y(1, 3, 1)) == Y(0, 0, -2));

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coord(-20, 20), comp(0, 1), kind(0, 2), pw(-9, 9);
    for (int t = 0; t < 50; ++t) {
        Obj A{Kind(kind(rng)), comp(rng), coord(rng), coord(rng)};
        if (!is_valid(P, A)) std::swap(A.i, A.j);
        Int p = pw(rng);
        CHECK(sigma(P, sigma(P, A, p), -p) == A);
        CHECK(sigma(P, sigma(P, A), -1) == A);
    }
}

TEST_CASE("sigma power matches repeated single steps") {
    Params P{3, 4, 2};
    Obj A = Z(2, 1, -3);
    Obj B = A;
    for (int t = 0; t < 11; ++t) B = sigma(P, B);
    CHECK(sigma(P, A, 11) == B);
}

TEST_CASE("serre") {
    CHECK(serre(Params{2, 5, 2}, X(0, 1, 1)) == X(1, 0, 0));
    CHECK(serre(Params{2, 3, 1}, Z(0, 0, 0)) == Z(1, -1, -1));
    Params P{3, 4, 2};
    Obj A = Y(2, 5, -1);
    CHECK(serre(P, serre(P, A), -1) == A);
    CHECK(serre(P, A, 4) == sigma(P, tau(A, 4), 4));
}

TEST_CASE("sigma^r is a translation on X and Y") {
    for (Params P : {Params{1, 2, 0}, Params{2, 3, 1}, Params{2, 5, 2}, Params{3, 4, 2}}) {
        for (const Obj& A : window_objects(P, 4)) {
            if (A.kind == Kind::X) CHECK(sigma(P, A, P.r) == tau(A, -(P.m + P.r)));
            if (A.kind == Kind::Y) CHECK(sigma(P, A, P.r) == tau(A, P.n - P.r));
            CHECK(sigma(P, tau(A, 3), 2) == tau(sigma(P, A, 2), 3));
            if (A.kind != Kind::Z) CHECK(height(tau(A, 5)) == height(A));
        }
    }
}

TEST_CASE("mesh_move") {
    CHECK(mesh_move(X(0, 1, 1), Direction::ray_step, 1) == X(0, 1, 2));
    CHECK_FALSE(mesh_move(X(0, 1, 1), Direction::ray_step, -1).has_value());
    CHECK(mesh_move(Z(0, 0, 0), Direction::coray_step, -1) == Z(0, -1, 0));
    CHECK_FALSE(mesh_move(Y(0, 2, 2), Direction::coray_step, -1).has_value());
    // the two directions commute where defined
    Obj A = X(0, 0, 3);
    auto ab = mesh_move(*mesh_move(A, Direction::ray_step, 1), Direction::coray_step, 1);
    auto ba = mesh_move(*mesh_move(A, Direction::coray_step, 1), Direction::ray_step, 1);
    CHECK(*ab == *ba);
}

TEST_CASE("mouth_projection") {
    Params P{2, 3, 1};
    CHECK(mouth_projection(P, X(0, 2, 5), Mouth::ray_mouth) == X(0, 2, 2));
    CHECK(mouth_projection(P, X(0, 2, 5), Mouth::coray_mouth) == X(0, 5, 5));
    CHECK(mouth_projection(P, Y(1, 4, 1), Mouth::coray_mouth) == Y(1, 4, 4));
    CHECK(mouth_projection(P, Y(1, 4, 1), Mouth::ray_mouth) == Y(1, 1, 1));
}

TEST_CASE("Z mouth projections are the unique mouth objects in the hammock") {
    for (Params P : {Params{1, 2, 1}, Params{2, 3, 1}, Params{2, 5, 2}, Params{3, 4, 2}}) {
        for (Obj A : {Z(0, 0, 0), Z(P.r - 1, 3, -2), Z(0, -4, 5)}) {
            std::vector<Obj> xs, ys;
            for (int k = 0; k < P.r; ++k)
                for (Int i = -30; i <= 30; ++i) {
                    if (hom_dim(P, A, X(k, i, i))) xs.push_back(X(k, i, i));
                    if (hom_dim(P, A, Y(k, i, i))) ys.push_back(Y(k, i, i));
                }
            REQUIRE(xs.size() == 1);
            REQUIRE(ys.size() == 1);
            CHECK(xs[0] == mouth_projection(P, A, Mouth::ray_mouth));
            CHECK(ys[0] == mouth_projection(P, A, Mouth::coray_mouth));
            CHECK(xs[0].k == (A.k + 1) % P.r);
        }
    }
}

TEST_CASE("special_triangle") {
    auto t = special_triangle(TriangleKind::ray, 0, 0, 0, 0);
    CHECK(t[0] == X(0, 0, 0));
    CHECK(t[1] == Z(0, 0, 0));
    CHECK(t[2] == Z(0, 1, 0));
    auto u = special_triangle(TriangleKind::coray, 0, 0, 0, 1);
    CHECK(u[0] == Y(0, 1, 0));
    CHECK(u[1] == Z(0, 0, 0));
    CHECK(u[2] == Z(0, 0, 2));
    CHECK_THROWS(special_triangle(TriangleKind::ray, 0, 0, 0, -1));
}

TEST_CASE("segments") {
    auto s = make_segment(X(0, 1, 4), X(0, 4, 4));
    CHECK(s.members.size() == 4);
    CHECK(s.members[1] == X(0, 2, 4));
    auto t = make_segment(Z(0, 2, 3), Z(0, 2, 0));
    CHECK(t.members.size() == 4);
    CHECK(t.members.back() == Z(0, 2, 0));
    CHECK_THROWS_AS(make_segment(X(0, 1, 4), X(0, 2, 5)), InvalidCoord);
}

TEST_CASE("parse and print coordinates") {
    Params P{2, 3, 1};
    CHECK(parse_obj("X:0:2:5", &P) == X(0, 2, 5));
    CHECK(parse_obj("Z:1:-3:7", &P) == Z(1, -3, 7));
    CHECK(to_string(Z(1, -3, 7)) == "Z:1:-3:7");
    CHECK_THROWS_AS(parse_obj("X:2:0:0", &P), ParseError);
    CHECK_THROWS_AS(parse_obj("X:0:3:1", &P), ParseError);
    CHECK_THROWS_AS(parse_obj("W:0:0:0", &P), ParseError);
    CHECK_THROWS_AS(parse_obj("X:0:0:0x", &P), ParseError);
    CHECK_THROWS_AS(parse_obj("X:0:0", &P), ParseError);
    CHECK(parse_params("2,5,2") == Params{2, 5, 2});
    CHECK_THROWS_AS(parse_params("2,2,1"), InvalidParams);
}
