#include "doctest.h"
#include "lidx/gen.hpp"
#include "lidx/lattice.hpp"

#include <numeric>

using namespace lidx;

namespace {

const RingConfig S2{2, RingKind::PowerSeries, 24};
const RingConfig S5{5, RingKind::PowerSeries, 24};
const RingConfig P3{3, RingKind::PAdic, 24};

MatrixF mx(const RingConfig& cfg, const std::string& s) { return parse_matrix(cfg, s); }
Lattice lat(const RingConfig& cfg, const std::string& s) {
    return Lattice::from_basis(parse_matrix(cfg, s));
}

}  // namespace

TEST_CASE("standard lattice and canonical form") {
    auto O2 = Lattice::standard(S2, 2);
    CHECK(O2.hermite().is_identity());
    CHECK(O2.shift() == 0);
    CHECK(O2.det_valuation() == 0);
    CHECK(act(MatrixF::identity(S2, 2), O2).equals(O2));

    // canonicalization is stable and basis-independent
    auto L1 = lat(S5, "t, 1 + t; 0, t^-2");
    auto L2 = Lattice::from_basis(L1.basis());
    CHECK(L1.equals(L2));
}

TEST_CASE("act basics") {
    auto O = Lattice::standard(S2, 1);
    auto tO = act(mx(S2, "t"), O);
    CHECK(tO.shift() == 1);
    CHECK(tO.hermite().is_identity());
    CHECK(leq(tO, O));
    CHECK_FALSE(leq(O, tO));

    Rng rng(1);
    for (int c = 0; c < 50; ++c) {
        int n = static_cast<int>(rng.uniform(1, 3));
        auto L = random_lattice(rng, S2, n, 2);
        auto g = random_gl(rng, S2, n, 2);
        auto h = random_gl(rng, S2, n, 2);
        CHECK(act(g.mul(h), L).equals(act(g, act(h, L))));
        CHECK(act(g.inverse(), act(g, L)).equals(L));
    }
}

TEST_CASE("leq pinned examples") {
    auto O2 = Lattice::standard(S2, 2);
    auto Ldiag = lat(S2, "t, 0; 0, t^-1");
    CHECK(compare(O2, Ldiag) == LatticeRel::Incomparable);
    CHECK(compare(O2, O2) == LatticeRel::Equal);
    CHECK(compare(act(mx(S2, "t, 0; 0, t"), O2), O2) == LatticeRel::Leq);
}

TEST_CASE("sup/inf pinned examples") {
    auto O = Lattice::standard(S2, 1);
    auto Lm2 = lat(S2, "t^-2");
    CHECK(sup(O, Lm2).equals(Lm2));
    CHECK(inf(O, Lm2).equals(O));

    auto O2 = Lattice::standard(S2, 2);
    auto Ld = lat(S2, "t^-1, 0; 0, t");
    CHECK(sup(Ld, O2).equals(lat(S2, "t^-1, 0; 0, 1")));
    CHECK(inf(Ld, O2).equals(lat(S2, "1, 0; 0, t")));
    CHECK(sup(Ld, Ld).equals(Ld));
    CHECK(inf(Ld, Ld).equals(Ld));
}

TEST_CASE("lattice order laws and bounds on random pairs") {
    Rng rng(42);
    for (const RingConfig* cfg : {&S2, &S5, &P3}) {
        for (int c = 0; c < 60; ++c) {
            int n = static_cast<int>(rng.uniform(1, 3));
            auto A = random_lattice(rng, *cfg, n, 2);
            auto B = random_lattice(rng, *cfg, n, 2);
            auto C = random_lattice(rng, *cfg, n, 2);
            CHECK(leq(A, A));
            if (leq(A, B) && leq(B, A)) CHECK(A.equals(B));
            if (leq(A, B) && leq(B, C)) CHECK(leq(A, C));
            auto s = sup(A, B), i = inf(A, B);
            CHECK(leq(A, s));
            CHECK(leq(B, s));
            CHECK(leq(i, A));
            CHECK(leq(i, B));
            // least upper bound: any common over-lattice dominates sup
            auto N = random_over_lattice(rng, {A, B}, 2);
            CHECK(leq(A, N));
            CHECK(leq(B, N));
            CHECK(leq(s, N));
            // dual is involutive
            CHECK(dual(dual(A)).equals(A));
        }
    }
}

TEST_CASE("quotient pinned examples") {
    auto O = Lattice::standard(S2, 1);
    auto tO = act(mx(S2, "t"), O);
    CHECK(quotient_exponents(tO, O) == std::vector<long>{1});
    CHECK(quotient_exponents(O, O).empty());

    auto O2 = Lattice::standard(S2, 2);
    auto Lsub = lat(S2, "t^2, 0; 0, t");
    CHECK(quotient_exponents(Lsub, O2) == std::vector<long>{1, 2});
    CHECK_THROWS_AS(quotient_exponents(O2, Lsub), NotContained);
}

TEST_CASE("rel_index: oracle cross-checks") {
    auto O = Lattice::standard(S2, 1);
    CHECK(rel_index(O, lat(S2, "t^-2")) == 2);
    CHECK(rel_index(O, O) == 0);

    Rng rng(7);
    for (const RingConfig* cfg : {&S2, &S5}) {
        for (int c = 0; c < 100; ++c) {
            int n = static_cast<int>(rng.uniform(1, 3));
            auto chain = random_chain(rng, *cfg, n, 1, 2);
            const auto& L0 = chain[0];
            const auto& L1 = chain[1];
            REQUIRE(leq(L0, L1));
            auto q = quotient_exponents(L0, L1);
            long len = std::accumulate(q.begin(), q.end(), 0L);
            CHECK(rel_index(L0, L1) == len);
        }
    }
}

TEST_CASE("rel_index cocycle, GL-invariance, sup-oracle") {
    Rng rng(8);
    for (int c = 0; c < 100; ++c) {
        int n = static_cast<int>(rng.uniform(1, 3));
        auto A = random_lattice(rng, S2, n, 3);
        auto B = random_lattice(rng, S2, n, 3);
        auto C = random_lattice(rng, S2, n, 3);
        CHECK(rel_index(A, B) + rel_index(B, C) == rel_index(A, C));
        auto g = random_gl(rng, S2, n, 3);
        CHECK(rel_index(act(g, A), act(g, B)) == rel_index(A, B));
        // [N/A] - [N/B] with N = sup, via smith quotients
        auto N = sup(A, B);
        auto qa = quotient_exponents(A, N), qb = quotient_exponents(B, N);
        long la = std::accumulate(qa.begin(), qa.end(), 0L);
        long lb = std::accumulate(qb.begin(), qb.end(), 0L);
        CHECK(rel_index(A, B) == la - lb);
    }
}

TEST_CASE("index of automorphism") {
    CHECK(index_of_automorphism(mx(S2, "t")) == 1);
    CHECK(index_of_automorphism(mx(S2, "1 + t")) == 0);
    CHECK(index_of_automorphism(mx(S2, "t^2")) == 2);
    CHECK(index_of_automorphism(mx(S2, "t^-1")) == -1);
    CHECK(index_of_automorphism(mx(S2, "t^2").mul(mx(S2, "t^-1"))) == 1);
    CHECK_THROWS_AS(index_of_automorphism(mx(S2, "0")), SingularMatrix);

    // additivity over random pairs (the pi_0 coherence)
    Rng rng(9);
    for (int c = 0; c < 100; ++c) {
        int n = static_cast<int>(rng.uniform(1, 3));
        auto g1 = random_gl(rng, S5, n, 3), g2 = random_gl(rng, S5, n, 3);
        CHECK(index_of_automorphism(g1) + index_of_automorphism(g2) ==
              index_of_automorphism(g1.mul(g2)));
    }
    // n=1 integral f: index = length(O/fO)
    for (int c = 0; c < 50; ++c) {
        auto f = random_element(rng, S2, 3, 0, 4);
        if (f.is_zero()) continue;
        MatrixF m(S2, 1, 1);
        m.at(0, 0) = f;
        auto O = Lattice::standard(S2, 1);
        auto q = quotient_exponents(act(m, O), O);
        CHECK(index_of_automorphism(m) == std::accumulate(q.begin(), q.end(), 0L));
    }
}
