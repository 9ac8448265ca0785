#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"

#include <grasschar/grassmann.hpp>
#include <grasschar/groebner.hpp>

#include <algorithm>
#include <random>

using namespace grasschar;

namespace {

GroebnerBasis image_gb(int n) {
    return buchberger_reduced({g_poly(n - 2), g_poly(n - 1), g_poly(n)}, image_table());
}

PolyGF2 rand_combination(std::mt19937& rng, const GroebnerBasis& gb, int max_exp) {
    PolyGF2 acc(gb.table_ptr());
    for (const auto& e : gb.elements())
        acc += testoracle::random_poly(rng, gb.table_ptr(), max_exp, 4) * e;
    return acc;
}

}  // namespace

TEST_CASE("s_polynomial") {
    auto t = image_table();
    const PolyGF2 f = parse_poly("w2^3 + w3^2", t);
    const PolyGF2 g = parse_poly("w2^2*w3", t);
    CHECK(s_polynomial(f, f).is_zero());
    CHECK(s_polynomial(f, g) == parse_poly("w3^3", t));
    CHECK_THROWS_AS(s_polynomial(f, PolyGF2::zero(t)), std::invalid_argument);

    // coprime leading monomials: the S-polynomial reduces to zero by the pair
    const PolyGF2 p = parse_poly("w2^3 + w3^2", t);
    const PolyGF2 q = parse_poly("w3^5", t);
    const GroebnerBasis pair = buchberger_reduced({p, q}, t);
    CHECK(pair.elements().size() == 2);
    CHECK(normal_form(s_polynomial(p, q), pair).is_zero());
}

TEST_CASE("buchberger on the t=3 image ideal") {
    const GroebnerBasis gb = image_gb(7);
    REQUIRE(gb.elements().size() == 3);
    CHECK(print_poly(gb.elements()[0]) == "w3^3");
    CHECK(print_poly(gb.elements()[1]) == "w2^2*w3");
    CHECK(print_poly(gb.elements()[2]) == "w2^3 + w3^2");
    CHECK(is_closed_under_s_polynomials(gb));

    // same ideal from the two-element generating set
    const GroebnerBasis gb2 = buchberger_reduced({g_poly(6), g_poly(7)}, image_table());
    CHECK(ideals_equal(gb, gb2));
}

TEST_CASE("buchberger edge cases") {
    auto t = image_table();
    const PolyGF2 p = parse_poly("w2^3*w3 + w3^3", t);
    const GroebnerBasis single = buchberger_reduced({p}, t);
    REQUIRE(single.elements().size() == 1);
    CHECK(single.elements()[0] == p);

    const GroebnerBasis absorbed = buchberger_reduced({parse_poly("w3^2", t), parse_poly("w3^3", t)}, t);
    REQUIRE(absorbed.elements().size() == 1);
    CHECK(print_poly(absorbed.elements()[0]) == "w3^2");

    CHECK(buchberger_reduced({}, t).elements().empty());
    CHECK(buchberger_reduced({PolyGF2::zero(t)}, t).elements().empty());
    CHECK_THROWS_AS(buchberger_reduced({parse_poly("w2 + w3", t)}, t), std::invalid_argument);
}

TEST_CASE("reduced basis is independent of generator order") {
    auto t = image_table();
    std::vector<PolyGF2> gens{g_poly(5), g_poly(6), g_poly(7)};
    const GroebnerBasis reference = buchberger_reduced(gens, t);
    std::sort(gens.begin(), gens.end(),
              [](const PolyGF2& a, const PolyGF2& b) { return print_poly(a) < print_poly(b); });
    do {
        CHECK(buchberger_reduced(gens, t) == reference);
    } while (std::next_permutation(gens.begin(), gens.end(), [](const PolyGF2& a, const PolyGF2& b) {
        return print_poly(a) < print_poly(b);
    }));

    auto bt = borel_table(3);
    auto seq = wbar_sequence(7, 3);
    std::vector<PolyGF2> bgens{seq[5], seq[6], seq[7]};
    const GroebnerBasis bref = buchberger_reduced(bgens, bt);
    std::reverse(bgens.begin(), bgens.end());
    CHECK(buchberger_reduced(bgens, bt) == bref);
}

TEST_CASE("normal form anchors") {
    const GroebnerBasis gb = image_gb(7);
    auto t = gb.table_ptr();
    CHECK(print_poly(normal_form(parse_poly("w2^4", t), gb)) == "w2*w3^2");
    CHECK(normal_form(PolyGF2::one(t), gb) == PolyGF2::one(t));
    CHECK(normal_form(g_poly(9), gb).is_zero());
}

TEST_CASE("normal form is linear and idempotent") {
    const GroebnerBasis gb = image_gb(7);
    std::mt19937 rng(4242);
    for (int i = 0; i < 60; ++i) {
        const PolyGF2 p = testoracle::random_poly(rng, gb.table_ptr(), 6, 10);
        const PolyGF2 q = testoracle::random_poly(rng, gb.table_ptr(), 6, 10);
        CHECK(normal_form(normal_form(p, gb), gb) == normal_form(p, gb));
        CHECK(normal_form(p + q, gb) == normal_form(p, gb) + normal_form(q, gb));
    }
}

TEST_CASE("ideal membership") {
    auto t = image_table();
    // (g_4, g_6) at t=3, i.e. (w2^2, w2^3 + w3^2)
    const GroebnerBasis gb46 = buchberger_reduced({g_poly(4), g_poly(6)}, t);
    CHECK(ideal_member(parse_poly("w2^4", t), gb46));

    const GroebnerBasis j7 = image_gb(7);
    CHECK(!ideal_member(PolyGF2::one(t), j7));
    CHECK(ideal_member(PolyGF2::zero(t), j7));  // g_{2^t-3} = 0, vacuous member
    for (int tt = 3; tt <= 8; ++tt) CHECK(g_poly((1 << tt) - 3).is_zero());

    // members stay members under multiplication
    std::mt19937 rng(5);
    for (int i = 0; i < 40; ++i) {
        const PolyGF2 member = rand_combination(rng, j7, 4);
        REQUIRE(ideal_member(member, j7));
        const PolyGF2 q = testoracle::random_poly(rng, t, 5, 6);
        CHECK(ideal_member(member * q, j7));
    }
}

TEST_CASE("ideals_equal") {
    auto t = image_table();
    const GroebnerBasis a = image_gb(7);
    const GroebnerBasis b = image_gb(8);
    CHECK(ideals_equal(a, b));
    CHECK(ideals_equal(a, a));
    CHECK(!ideals_equal(buchberger_reduced({parse_poly("w2", t)}, t),
                        buchberger_reduced({parse_poly("w3", t)}, t)));
    const GroebnerBasis other = buchberger_reduced({wbar(5, 3)}, borel_table(3));
    CHECK_THROWS_AS(ideals_equal(a, other), std::invalid_argument);
}

TEST_CASE("groebner basis constructor validates reducedness") {
    auto t = image_table();
    const PolyGF2 f = parse_poly("w2^2", t);
    const PolyGF2 g = parse_poly("w2^3", t);  // divisible leading monomial
    CHECK_THROWS_AS(GroebnerBasis(t, {f, g}), std::invalid_argument);
    CHECK_THROWS_AS(GroebnerBasis(t, {parse_poly("w2", t), parse_poly("w3^2", t)}),
                    std::invalid_argument);  // not ascending by leading monomial
    CHECK_THROWS_AS(GroebnerBasis(t, {PolyGF2::zero(t)}), std::invalid_argument);
}

TEST_CASE("standard monomials") {
    GradedQuotient q(image_gb(7));
    const auto& deg0 = q.standard_monomials(0);
    REQUIRE(deg0.size() == 1);
    CHECK(deg0[0].is_one());
    const auto& deg8 = q.standard_monomials(8);
    REQUIRE(deg8.size() == 1);
    CHECK(deg8[0] == Monomial(q.table(), {1, 2}));
    CHECK(q.standard_monomials(1).empty());

    // descending lex within a degree
    GradedQuotient free_ring(GroebnerBasis::empty(image_table()));
    const auto& deg12 = free_ring.standard_monomials(12);
    REQUIRE(deg12.size() == 3);
    CHECK(deg12[0] == Monomial(free_ring.table(), {6, 0}));
    CHECK(deg12[1] == Monomial(free_ring.table(), {3, 2}));
    CHECK(deg12[2] == Monomial(free_ring.table(), {0, 4}));
    CHECK(free_ring.standard_monomials(6).size() == 2);
}

TEST_CASE("hilbert function against the row-reduction oracle") {
    // Borel ring of G_{7,3}: frozen oracle dims, total 35
    {
        auto seq = wbar_sequence(7, 3);
        const std::vector<PolyGF2> gens(seq.begin() + 5, seq.end());
        GradedQuotient q(buchberger_reduced(gens, borel_table(3)));
        const auto h = hilbert_function(q, 14);
        const std::vector<std::size_t> expected{1, 1, 2, 3, 4, 4, 5, 4, 4, 3, 2, 1, 1, 0, 0};
        CHECK(h == expected);
        CHECK(h == testoracle::quotient_dims(borel_table(3), gens, 14));
    }
    // Borel ring of G_{6,2}: the degree-4 slice of the ideal is empty, so the
    // dimension there is the full monomial count 3
    {
        auto seq = wbar_sequence(6, 2);
        const std::vector<PolyGF2> gens(seq.begin() + 5, seq.end());
        GradedQuotient q(buchberger_reduced(gens, borel_table(2)));
        const auto h = hilbert_function(q, 10);
        CHECK(h == testoracle::quotient_dims(borel_table(2), gens, 10));
        CHECK(h[4] == 3);
        std::size_t total = 0;
        for (auto d : h) total += d;
        CHECK(total == 15);
    }
    // image rings at t=3 and t=4
    for (int n : {7, 15}) {
        const std::vector<PolyGF2> gens{g_poly(n - 2), g_poly(n - 1), g_poly(n)};
        GradedQuotient q(buchberger_reduced(gens, image_table()));
        const int top = 2 * n - 2;
        CHECK(hilbert_function(q, top) == testoracle::quotient_dims(image_table(), gens, top));
    }
    // Borel ring of G_{15,3}, low degrees
    {
        auto seq = wbar_sequence(15, 3);
        const std::vector<PolyGF2> gens(seq.begin() + 13, seq.end());
        GradedQuotient q(buchberger_reduced(gens, borel_table(3)));
        CHECK(hilbert_function(q, 20) == testoracle::quotient_dims(borel_table(3), gens, 20));
    }
    // free polynomial ring
    GradedQuotient free_ring(GroebnerBasis::empty(image_table()));
    CHECK(free_ring.standard_monomials(6).size() == 2);
}

TEST_CASE("standard monomials are their own normal forms") {
    GradedQuotient q(image_gb(7));
    for (int d = 0; d <= 10; ++d)
        for (const auto& m : q.standard_monomials(d)) {
            const PolyGF2 p = PolyGF2::from_monomial(q.table_ptr(), m);
            CHECK(q.normal_form(p) == p);
        }
}

TEST_CASE("sealing freezes the quotient") {
    GradedQuotient q(image_gb(7));
    q.seal(8);
    CHECK(q.is_sealed());
    CHECK(q.sealed_to() == 8);
    CHECK(q.standard_monomials(8).size() == 1);
    CHECK_THROWS_AS(q.standard_monomials(9), std::out_of_range);
    q.seal(5);  // lowering is a no-op
    CHECK(q.sealed_to() == 8);
    CHECK_THROWS_AS(q.seal(20), std::logic_error);
}

TEST_CASE("random homogeneous ideals: output is certified reduced and closed") {
    auto t = image_table();
    std::mt19937 rng(20270101);
    std::uniform_int_distribution<int> degree(4, 14);
    std::uniform_int_distribution<int> ngens(1, 4);
    auto random_homogeneous = [&](int d) {
        std::vector<Monomial> picked;
        for (const auto& m : monomials_of_degree(*t, d))
            if (rng() & 1) picked.push_back(m);
        return PolyGF2::from_terms(t, std::move(picked));
    };
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<PolyGF2> gens;
        const int n = ngens(rng);
        for (int i = 0; i < n; ++i) gens.push_back(random_homogeneous(degree(rng)));
        const GroebnerBasis gb = buchberger_reduced(gens, t);
        CHECK(is_closed_under_s_polynomials(gb));
        for (const auto& g : gens) CHECK(ideal_member(g, gb));
        CHECK(parse_groebner(serialize(gb)) == gb);
        // generator order cannot matter
        std::reverse(gens.begin(), gens.end());
        CHECK(buchberger_reduced(gens, t) == gb);
    }
}

TEST_CASE("serialization round-trips bit-exactly") {
    for (const auto& gb :
         {image_gb(7), image_gb(15), buchberger_reduced(wbar_sequence(8, 3), borel_table(3))}) {
        const std::string text = serialize(gb);
        const GroebnerBasis back = parse_groebner(text);
        CHECK(back == gb);
        CHECK(serialize(back) == text);
    }
    const std::string expected = "# order: w2:2 w3:3\nw3^3\nw2^2*w3\nw2^3 + w3^2\n";
    CHECK(serialize(image_gb(7)) == expected);
    CHECK_THROWS_AS(parse_groebner("w3^3\n"), parse_error);
    CHECK_THROWS_AS(parse_groebner("# order: w2:2 w3:3\nw2\nw2^2\n"), std::invalid_argument);
}
