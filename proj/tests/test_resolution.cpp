// Minimal graded free resolutions, Betti tables, regularity, depth.

#include <catch_amalgamated.hpp>

#include "cmreg/cmreg.hpp"

using namespace cmreg;

namespace {
template <class K>
std::vector<Polynomial<K>> parse_all(const RingPtr& R, const MonomialOrder& ord,
                                     const std::vector<std::string>& ss) {
    std::vector<Polynomial<K>> out;
    for (const auto& s : ss) out.push_back(parse_polynomial<K>(R, ord, s));
    return out;
}
}  // namespace

TEST_CASE("Koszul complex of a complete intersection") {
    RingPtr R = make_ring({"x", "y"});
    MonomialOrder ord = MonomialOrder::grevlex();
    auto gens = parse_all<QQ>(R, ord, {"x^2", "y^3"});
    GradedComplex<QQ> res = resolve_quotient<QQ>(R, ord, gens);
    BettiTable b = betti_table(res);

    REQUIRE(b.by_level.size() == 3);
    CHECK(b.by_level[0] == std::map<int, int>{{0, 1}});
    CHECK(b.by_level[1] == std::map<int, int>{{2, 1}, {3, 1}});
    CHECK(b.by_level[2] == std::map<int, int>{{5, 1}});
    CHECK(b.regularity() == 3);
    CHECK(projective_dimension(res) == 2);
    CHECK(depth_of_quotient<QQ>(R, ord, gens) == 0);
    CHECK(check_composition_zero(res));
    CHECK(buchsbaum_eisenbud(res).exact);
}

TEST_CASE("pinned Betti tables of the colon-chain quotients") {
    auto E = example21<QQ>();
    GradedComplex<QQ> resJ = resolve_quotient<QQ>(E.ring, E.ord, E.J.generators());
    BettiTable bJ = betti_table(resJ);
    REQUIRE(bJ.by_level.size() == 3);
    CHECK(bJ.by_level[1] == std::map<int, int>{{3, 1}, {4, 1}, {5, 1}});
    CHECK(bJ.by_level[2] == std::map<int, int>{{6, 2}});

    GradedComplex<QQ> resK = resolve_quotient<QQ>(E.ring, E.ord, E.Kid.generators());
    BettiTable bK = betti_table(resK);
    REQUIRE(bK.by_level.size() == 4);
    CHECK(bK.by_level[1] == std::map<int, int>{{3, 1}, {4, 1}, {5, 1}, {6, 1}});
    CHECK(bK.by_level[2] == std::map<int, int>{{6, 2}, {7, 2}});
    CHECK(bK.by_level[3] == std::map<int, int>{{8, 1}});

    // reg(R/J) = 4, so reg(J) = 5; likewise reg(K) = 6.
    CHECK(regularity_of_quotient<QQ>(E.ring, E.ord, E.J.generators()) == 4);
    CHECK(regularity_of_ideal<QQ>(E.ring, E.ord, E.J.generators()) == 5);
    CHECK(regularity_of_ideal<QQ>(E.ring, E.ord, E.Kid.generators()) == 6);
    CHECK(regularity_of_ideal<QQ>(E.ring, E.ord, E.I.generators()) == 6);
}

TEST_CASE("resolving the ideal is the quotient resolution shifted") {
    auto E = example21<QQ>();
    GradedComplex<QQ> rq = resolve_quotient<QQ>(E.ring, E.ord, E.J.generators());
    GradedComplex<QQ> ri = resolution_of_ideal<QQ>(E.ring, E.ord, E.J.generators());
    BettiTable bq = betti_table(rq);
    BettiTable bi = betti_table(ri);
    REQUIRE(bi.by_level.size() + 1 == bq.by_level.size());
    for (std::size_t j = 0; j < bi.by_level.size(); ++j)
        CHECK(bi.by_level[j] == bq.by_level[j + 1]);
}

TEST_CASE("computed resolutions verify as exact graded complexes") {
    auto E22 = example22<QQ>();
    GradedComplex<QQ> res = resolve_quotient<QQ>(E22.ring, E22.ord, E22.b.generators());
    res.validate_graded();
    CHECK(check_composition_zero(res));
    BEReport rep = buchsbaum_eisenbud(res);
    CHECK(rep.exact);
    // Resolution of the non-arithmetically-Cohen-Macaulay curve has length 3.
    CHECK(projective_dimension(res) == 3);
    CHECK(depth_of_quotient<QQ>(E22.ring, E22.ord, E22.b.generators()) == 1);
}

TEST_CASE("Auslander-Buchsbaum on samples") {
    auto E = example21<QQ>();
    int n = E.ring->nvars();
    for (const Ideal<QQ>* I : {&E.I, &E.J, &E.Kid}) {
        GradedComplex<QQ> res = resolve_quotient<QQ>(E.ring, E.ord, I->generators());
        CHECK(projective_dimension(res) +
                  depth_of_quotient<QQ>(E.ring, E.ord, I->generators()) ==
              n);
    }
}

TEST_CASE("Betti table text form is stable") {
    auto E = example21<QQ>();
    BettiTable b = betti_table(resolve_quotient<QQ>(E.ring, E.ord, E.J.generators()));
    CHECK(b.to_string() == "0: {0: 1}\n1: {3: 1, 4: 1, 5: 1}\n2: {6: 2}\n");
}

TEST_CASE("zero ideal resolves to the free module") {
    RingPtr R = make_ring({"x", "y"});
    MonomialOrder ord = MonomialOrder::grevlex();
    GradedComplex<QQ> res = resolve_quotient<QQ>(R, ord, {});
    BettiTable b = betti_table(res);
    REQUIRE(b.by_level.size() == 1);
    CHECK(b.by_level[0] == std::map<int, int>{{0, 1}});
    CHECK(projective_dimension(res) == 0);
    CHECK(depth_of_quotient<QQ>(R, ord, {}) == 2);
}
