#include "doctest.h"
#include "lidx/schain.hpp"

#include <numeric>

using namespace lidx;

namespace {

const RingConfig S2{2, RingKind::PowerSeries, 24};
const RingConfig S5{5, RingKind::PowerSeries, 24};
const RingConfig P3{3, RingKind::PAdic, 24};

MatrixF mx(const RingConfig& cfg, const std::string& s) { return parse_matrix(cfg, s); }

LatticeChain chain_of(const RingConfig& cfg, const std::vector<std::string>& bases) {
    std::vector<Lattice> ls;
    for (const auto& b : bases) ls.push_back(Lattice::from_basis(parse_matrix(cfg, b)));
    return LatticeChain(std::move(ls));
}

bool chains_equal(const LatticeChain& a, const LatticeChain& b) {
    if (a.lattices.size() != b.lattices.size()) return false;
    for (std::size_t i = 0; i < a.lattices.size(); ++i)
        if (!a.lattices[i].equals(b.lattices[i])) return false;
    return true;
}

LatticeChain random_lattice_chain(Rng& rng, const RingConfig& cfg, int n, int m, long bound) {
    return LatticeChain(random_chain(rng, cfg, n, m, bound));
}

// the six 3x3 permutation matrices
std::vector<MatrixF> perm_matrices(const RingConfig& cfg) {
    std::vector<std::vector<int>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    std::vector<MatrixF> out;
    for (const auto& p : perms) {
        MatrixF m(cfg, 3, 3);
        for (int j = 0; j < 3; ++j) m.at(p[static_cast<std::size_t>(j)], j) = FieldElement::one(cfg);
        out.push_back(std::move(m));
    }
    return out;
}

long vec_sum(const std::vector<long>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

}  // namespace

TEST_CASE("index of a chain: pinned values and GL-invariance") {
    auto triv = index_of_chain(chain_of(S2, {"1", "1"}));
    CHECK(triv.classes() == std::vector<long>{0});
    CHECK(triv.term(1).is_zero());

    auto c = chain_of(S2, {"t^2", "t", "1"});
    auto x = index_of_chain(c);
    CHECK(x.classes() == std::vector<long>{1, 1});
    CHECK(x.term(1).exponents() == std::vector<long>{1});
    CHECK(x.term(2).exponents() == std::vector<long>{2});

    Rng rng(30);
    for (int i = 0; i < 20; ++i) {
        int n = static_cast<int>(rng.uniform(1, 3));
        auto ch = random_lattice_chain(rng, S2, n, 2, 2);
        auto g = random_gl(rng, S2, n, 2);
        std::vector<Lattice> moved;
        for (const auto& L : ch.lattices) moved.push_back(act(g, L));
        CHECK(index_of_chain(LatticeChain(moved)).classes() == index_of_chain(ch).classes());
    }

    CHECK_THROWS_AS(chain_of(S2, {"1", "t"}), NotContained);
}

TEST_CASE("chain faces and degeneracies satisfy the simplicial identities") {
    Rng rng(31);
    for (int rep = 0; rep < 8; ++rep) {
        int m = static_cast<int>(rng.uniform(2, 4));
        auto c = random_lattice_chain(rng, S5, 2, m, 2);
        // d_1 drops the middle lattice
        if (m == 2) CHECK(chains_equal(face(c, 1), LatticeChain({c.lattices[0], c.lattices[2]})));
        for (int i = 0; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j)
                CHECK(chains_equal(face(face(c, j), i), face(face(c, i), j - 1)));
        for (int i = 0; i <= m; ++i) {
            CHECK(chains_equal(face(degeneracy(c, i), i), c));
            CHECK(chains_equal(face(degeneracy(c, i), i + 1), c));
        }
    }
}

TEST_CASE("faces of chain objects and the simplicial property of the index") {
    // d_0 of (O/t -> O/t^2) is (O/t), the quotient of quotients
    auto x = index_of_chain(chain_of(S2, {"t^2", "t", "1"}));
    auto d0 = sface(x, 0);
    CHECK(d0.length() == 1);
    CHECK(d0.classes() == std::vector<long>{1});
    CHECK(d0.term(1).exponents() == std::vector<long>{1});
    // d_m drops the top
    auto d2 = sface(x, 2);
    CHECK(d2.classes() == std::vector<long>{1});
    CHECK(d2.term(1).exponents() == std::vector<long>{1});

    // index is a simplicial map at the invariant level
    Rng rng(32);
    for (int rep = 0; rep < 25; ++rep) {
        const RingConfig& cfg = rep % 2 ? P3 : S2;
        int n = static_cast<int>(rng.uniform(1, 2));
        int m = static_cast<int>(rng.uniform(1, 3));
        auto c = random_lattice_chain(rng, cfg, n, m, 2);
        auto ic = index_of_chain(c);
        for (int i = 0; i <= m; ++i)
            CHECK(index_of_chain(face(c, i)).profile() == sface(ic, i).profile());
    }
}

TEST_CASE("l_map commutes with the simplicial structure away from d_0") {
    auto O = Lattice::standard(S2, 1);
    GroupTuple idid({mx(S2, "1"), mx(S2, "1")});
    CHECK(tuple_equal(l_map(idid, O),
                      LatticeTuple({O, O, O})));
    GroupTuple tg({mx(S2, "t")});
    CHECK(tuple_equal(l_map(tg, O), LatticeTuple({O, act(mx(S2, "t"), O)})));

    Rng rng(33);
    for (int rep = 0; rep < 15; ++rep) {
        int n = static_cast<int>(rng.uniform(1, 2));
        GroupTuple g(random_group_tuple(rng, S2, n, 3, 2));
        auto L = random_lattice(rng, S2, n, 2);
        auto t = l_map(g, L);
        for (int i = 1; i <= 3; ++i)
            CHECK(tuple_equal(tuple_face(t, i), l_map(bar_face(g, i), L)));
        for (int i = 0; i <= 3; ++i)
            CHECK(tuple_equal(tuple_degeneracy(t, i), l_map(bar_degeneracy(g, i), L)));
        // pinned shape of the inner face: (L, g2 g1 L)
        GroupTuple two({g.gs[0], g.gs[1]});
        CHECK(tuple_equal(l_map(bar_face(two, 1), L),
                          LatticeTuple({L, act(g.gs[1].mul(g.gs[0]), L)})));
    }
}

TEST_CASE("alpha transports the d_0 defect of l_map") {
    // length 1: alpha is the tuple itself
    GroupTuple one({mx(S2, "t")});
    CHECK(alpha(one).gs[0].exact_equal(mx(S2, "t")));

    // commuting entries collapse the conjugation
    GroupTuple diag({mx(S2, "t, 0; 0, 1"), mx(S2, "t^2, 0; 0, t"), mx(S2, "1, 0; 0, t")});
    auto ad = alpha(diag);
    for (const auto& m : ad.gs) CHECK(m.same_value(diag.gs[0]));

    Rng rng(34);
    for (int rep = 0; rep < 40; ++rep) {
        int n = static_cast<int>(rng.uniform(1, 2));
        GroupTuple g(random_group_tuple(rng, S2, n, 3, 2));
        auto L = random_lattice(rng, S2, n, 2);
        auto a = alpha(g);
        auto lhs = l_map(bar_face(g, 0), L);       // (L, g2 L, g3 g2 L)
        auto rhs = tuple_face(l_map(g, L), 0);     // (g1 L, g2 g1 L, g3 g2 g1 L)
        REQUIRE(a.length() == 3);
        for (int i = 0; i < 3; ++i)
            CHECK(act(a.gs[static_cast<std::size_t>(i)],
                      lhs.lattices[static_cast<std::size_t>(i)])
                      .equals(rhs.lattices[static_cast<std::size_t>(i)]));
    }
}

TEST_CASE("cocycle identity for alpha") {
    // exhaustive over all 216 triples of 3x3 permutation matrices
    auto perms = perm_matrices(S2);
    for (const auto& a : perms)
        for (const auto& b : perms)
            for (const auto& c : perms) CHECK(cocycle_check(GroupTuple({a, b, c})));

    // random invertible triples
    Rng rng(35);
    for (int rep = 0; rep < 50; ++rep) {
        GroupTuple g(random_group_tuple(rng, S5, 2, 3, 2));
        CHECK(cocycle_check(g));
    }
    CHECK_THROWS_AS(cocycle_check(GroupTuple({mx(S2, "t")})), Error);
}

TEST_CASE("index of tuples") {
    // nested tuples match the chain classes
    Rng rng(36);
    for (int rep = 0; rep < 20; ++rep) {
        int n = static_cast<int>(rng.uniform(1, 3));
        auto c = random_lattice_chain(rng, S2, n, 2, 2);
        CHECK(index_of_tuple(LatticeTuple(c.lattices)) == index_of_chain(c).classes());
    }

    // orbit tuples: components are -Index(g_i), sums telescope
    auto O2 = Lattice::standard(S2, 2);
    auto g = mx(S2, "t, 0; 0, 1");
    auto orbit = l_map(GroupTuple({g, g}), O2);
    CHECK(index_of_tuple(orbit) ==
          std::vector<long>{-index_of_automorphism(g), -index_of_automorphism(g)});
    CHECK(vec_sum(index_of_tuple(orbit)) == -index_of_automorphism(g.mul(g)));

    for (int rep = 0; rep < 20; ++rep) {
        int n = static_cast<int>(rng.uniform(1, 2));
        int m = static_cast<int>(rng.uniform(1, 3));
        GroupTuple gs(random_group_tuple(rng, S2, n, m, 2));
        auto L = random_lattice(rng, S2, n, 2);
        auto v = index_of_tuple(l_map(gs, L));
        long total = 0;
        MatrixF prod = MatrixF::identity(S2, n);
        for (int i = 0; i < m; ++i) {
            CHECK(v[static_cast<std::size_t>(i)] ==
                  -index_of_automorphism(gs.gs[static_cast<std::size_t>(i)]));
            prod = gs.gs[static_cast<std::size_t>(i)].mul(prod);
            total += v[static_cast<std::size_t>(i)];
        }
        CHECK(total == -index_of_automorphism(prod));
    }

    // constant tuple
    CHECK(index_of_tuple(LatticeTuple({O2, O2, O2})) == std::vector<long>{0, 0});
}

TEST_CASE("tuple index agrees with the diagram computation on the sup closure") {
    Rng rng(37);
    for (int rep = 0; rep < 15; ++rep) {
        int n = static_cast<int>(rng.uniform(1, 2));
        std::vector<Lattice> ls;
        int m = static_cast<int>(rng.uniform(1, 3));
        for (int i = 0; i <= m; ++i) ls.push_back(random_lattice(rng, S2, n, 2));
        LatticeTuple t(ls);
        CHECK(index_of_tuple_via_diagram(t) == index_of_tuple(t));
    }
}

TEST_CASE("triangular comparison of the tautological and quotient diagrams") {
    // constant chain: both indices vanish
    auto O = Lattice::standard(S2, 1);
    CHECK(a_n_comparison(LatticeChain({O, O, O})));
    // pinned: t^2 O <= t O <= O
    CHECK(a_n_comparison(chain_of(S2, {"t^2", "t", "1"})));

    Rng rng(38);
    for (int rep = 0; rep < 20; ++rep) {
        const RingConfig& cfg = rep % 2 ? P3 : S2;
        int n = static_cast<int>(rng.uniform(1, 3));
        int m = static_cast<int>(rng.uniform(1, 3));
        CHECK(a_n_comparison(random_lattice_chain(rng, cfg, n, m, 2)));
    }
}

TEST_CASE("bar construction is a Segal object at the set level") {
    Rng rng(39);
    std::vector<GroupTuple> sample;
    for (int rep = 0; rep < 10; ++rep)
        sample.emplace_back(random_group_tuple(rng, S2, 2, static_cast<int>(rng.uniform(1, 3)), 2));
    CHECK(b_aut_segal_check(sample));
}
