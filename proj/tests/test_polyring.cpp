#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superfat/polyring.hpp"

using namespace superfat;

namespace {

FormVec random_form(ScalarStream& s, int d) {
    FormVec f = FormVec::zero(d);
    for (Eigen::Index i = 0; i < f.coeffs.size(); ++i) f.coeffs[i] = s.next();
    return f;
}

ProjChange random_change(ScalarStream& s) {
    for (;;) {
        ProjChange phi;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) phi.a(i, j) = s.next();
        if (determinant(s.field(), phi) != 0) return phi;
    }
}

FormVec var(int v) {
    Monomial m;
    (v == 0 ? m.x : v == 1 ? m.y : m.z) = 1;
    return FormVec::monomial(1, m);
}

// Test ideals written out as forms in x, y, z.
std::vector<FormVec> square_ideal(const PrimeField& f) {
    return {make_form(f, 2, {{1, {2, 0, 0}}}), make_form(f, 2, {{1, {0, 2, 0}}})};
}

std::vector<FormVec> rotated_square_ideal(const PrimeField& f) {
    return {make_form(f, 2, {{1, {2, 0, 0}}, {-2, {1, 1, 0}}, {1, {0, 2, 0}}}),
            make_form(f, 2, {{1, {2, 0, 0}}, {2, {1, 1, 0}}, {1, {0, 2, 0}}})};
}

std::vector<FormVec> collision_ideal(const PrimeField& f) {
    return {make_form(f, 3, {{1, {2, 1, 0}}, {-1, {1, 2, 0}}}),
            make_form(f, 3, {{1, {3, 0, 0}}, {-1, {0, 3, 0}}}),
            make_form(f, 4, {{1, {0, 4, 0}}})};
}

std::vector<FormVec> colon_by(const PrimeField& f, const std::vector<FormVec>& gens, const LinearForm& l, int e) {
    return colon_piece(f, ideal_piece(f, gens, e + 1), l, e);
}

}  // namespace

TEST_CASE("monomial basis sizes and order") {
    CHECK(monomial_basis(0).size() == 1);
    CHECK(monomial_basis(0)[0] == Monomial{0, 0, 0});
    CHECK(monomial_basis(2).size() == 6);
    CHECK(monomial_basis(6).size() == 28);
    CHECK(form_dim(20) == 231);

    const auto b2 = monomial_basis(2);
    const std::vector<Monomial> lex{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
    CHECK(b2 == lex);

    for (int d = 0; d <= 12; ++d) {
        const auto b = monomial_basis(d);
        for (std::size_t i = 0; i < b.size(); ++i) CHECK(monomial_index(b[i]) == i);
    }
}

TEST_CASE("pullback fixed examples") {
    const PrimeField f;
    const FormVec x2 = make_form(f, 2, {{1, {2, 0, 0}}});
    CHECK(pullback(f, x2, ProjChange::identity()) == x2);

    const ProjChange swap = ProjChange::from_images(make_line(f, 0, 1, 0), make_line(f, 1, 0, 0), make_line(f, 0, 0, 1));
    CHECK(pullback(f, x2, swap) == make_form(f, 2, {{1, {0, 2, 0}}}));

    const ProjChange rot = ProjChange::from_images(make_line(f, 1, -1, 0), make_line(f, 1, 1, 0), make_line(f, 0, 0, 1));
    CHECK(pullback(f, x2, rot) == make_form(f, 2, {{1, {2, 0, 0}}, {-2, {1, 1, 0}}, {1, {0, 2, 0}}}));
    const FormVec x2z = make_form(f, 3, {{1, {2, 0, 1}}});
    CHECK(pullback(f, x2z, rot) == make_form(f, 3, {{1, {2, 0, 1}}, {-2, {1, 1, 1}}, {1, {0, 2, 1}}}));
    CHECK(to_string(f, pullback(f, x2, rot)) == "x^2 - 2xy + y^2");
}

TEST_CASE("pullback is an invertible ring automorphism") {
    const PrimeField f;
    ScalarStream s(f, 99);
    for (int trial = 0; trial < 10; ++trial) {
        const ProjChange phi = random_change(s);
        const ProjChange inv = inverse(f, phi);
        const int d = 1 + trial % 5;
        const FormVec a = random_form(s, d);
        const FormVec b = random_form(s, 2);
        CHECK(pullback(f, pullback(f, a, phi), inv) == a);
        CHECK(pullback(f, multiply(f, a, b), phi) == multiply(f, pullback(f, a, phi), pullback(f, b, phi)));
        const ProjChange psi = random_change(s);
        CHECK(pullback(f, a, compose(f, phi, psi)) == pullback(f, pullback(f, a, phi), psi));

        // transport: pullback(g)(transport(P)) == g(P)
        const ProjPoint pt{{s.next(), s.next(), s.next()}};
        CHECK(evaluate(f, pullback(f, a, phi), transport(f, pt, phi)) == evaluate(f, a, pt));
    }
}

TEST_CASE("multiplication by a linear form") {
    const PrimeField f;
    const Matrix mx = mult_by_linear(f, make_line(f, 1, 0, 0), 0);
    CHECK(mx.rows() == 3);
    CHECK(mx.cols() == 1);
    CHECK(mx(0, 0) == 1);
    CHECK(mx(1, 0) == 0);
    CHECK(mx(2, 0) == 0);

    const Matrix my = mult_by_linear(f, make_line(f, 0, 1, 0), 1);
    const std::vector<Monomial> images{{1, 1, 0}, {0, 2, 0}, {0, 1, 1}};
    for (int j = 0; j < 3; ++j) {
        FormVec col{2, my.col(j)};
        CHECK(col == FormVec::monomial(2, images[static_cast<std::size_t>(j)]));
    }

    ScalarStream s(f, 5);
    for (int e = 0; e <= 8; ++e) {
        const LinearForm l{{s.next(), s.next(), s.next()}};
        CHECK(rank(f, mult_by_linear(f, l, e)) == form_dim(e));
        const FormVec g = random_form(s, e);
        CHECK(FormVec{e + 1, multiply(f, mult_by_linear(f, l, e), g.coeffs)} == multiply(f, l.as_form(), g));
    }
}

TEST_CASE("colon by y of the 2-square ideal (x^2, y^2) is (x^2, y)") {
    const PrimeField f;
    const LinearForm y = make_line(f, 0, 1, 0);
    const auto gens = square_ideal(f);

    const auto deg2 = colon_by(f, gens, y, 2);
    CHECK(deg2.size() == 4);
    const std::vector<FormVec> expected2{make_form(f, 2, {{1, {2, 0, 0}}}), make_form(f, 2, {{1, {1, 1, 0}}}),
                                         make_form(f, 2, {{1, {0, 2, 0}}}), make_form(f, 2, {{1, {0, 1, 1}}})};
    CHECK(same_span(f, deg2, expected2, 2));

    const std::vector<FormVec> target{make_form(f, 2, {{1, {2, 0, 0}}}), var(1)};
    for (int e = 0; e <= 8; ++e) CHECK(same_span(f, colon_by(f, gens, y, e), ideal_piece(f, target, e), e));
}

TEST_CASE("colon by y of ((x-y)^2, (x+y)^2) is (x, y^2)") {
    const PrimeField f;
    const LinearForm y = make_line(f, 0, 1, 0);
    const std::vector<FormVec> target{var(0), make_form(f, 2, {{1, {0, 2, 0}}})};
    for (int e = 0; e <= 8; ++e)
        CHECK(same_span(f, colon_by(f, rotated_square_ideal(f), y, e), ideal_piece(f, target, e), e));
}

TEST_CASE("colon chain of the collision ideal") {
    const PrimeField f;
    const LinearForm y = make_line(f, 0, 1, 0);
    const std::vector<FormVec> residue{make_form(f, 2, {{1, {2, 0, 0}}, {-1, {1, 1, 0}}}),
                                       make_form(f, 3, {{1, {1, 2, 0}}}), make_form(f, 3, {{1, {0, 3, 0}}})};
    const std::vector<FormVec> fat2{make_form(f, 2, {{1, {2, 0, 0}}}), make_form(f, 2, {{1, {1, 1, 0}}}),
                                    make_form(f, 2, {{1, {0, 2, 0}}})};
    for (int e = 0; e <= 8; ++e) {
        CHECK(same_span(f, colon_by(f, collision_ideal(f), y, e), ideal_piece(f, residue, e), e));
        CHECK(same_span(f, colon_by(f, residue, y, e), ideal_piece(f, fat2, e), e));
    }
}

TEST_CASE("colon piece members multiply into the ideal, and dimension bound") {
    const PrimeField f;
    ScalarStream s(f, 17);
    for (const auto& gens : {square_ideal(f), rotated_square_ideal(f), collision_ideal(f)}) {
        for (int e = 0; e <= 7; ++e) {
            const LinearForm l{{s.next(), s.next(), s.next()}};
            const auto piece = ideal_piece(f, gens, e + 1);
            const auto colon = colon_piece(f, piece, l, e);
            for (const FormVec& g : colon) {
                std::vector<FormVec> with = piece;
                with.push_back(multiply(f, l.as_form(), g));
                CHECK(span_dim(f, with, e + 1) == piece.size());
            }
            // a line carries at most e + 2 conditions in degree e + 1
            CHECK(static_cast<long>(colon.size()) >= static_cast<long>(piece.size()) - (e + 2));
        }
    }
}

TEST_CASE("form printing") {
    const PrimeField f;
    CHECK(to_string(f, FormVec::zero(3)) == "0");
    CHECK(to_string(f, make_form(f, 3, {{1, {3, 0, 0}}, {-1, {0, 3, 0}}})) == "x^3 - y^3");
    CHECK(to_string(f, make_form(f, 0, {{5, {0, 0, 0}}})) == "5");
}
