// Acceptance checks: one PASS/FAIL line per criterion, pinned budgets.
// Exit code 0 iff every criterion passes.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "lidx/diagram.hpp"
#include "lidx/gen.hpp"
#include "lidx/schain.hpp"
#include "lidx/simplicial.hpp"
#include "lidx/suites.hpp"

using namespace lidx;

namespace {

struct Failure : Error {
    using Error::Error;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw Failure(msg);
}

long vec_sum(const std::vector<long>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

const RingConfig S2{2, RingKind::PowerSeries, 24};

// 1. Index additivity: 500 pairs in GL_n, n in {1,2,3}, p in {2,5}; < 10 s.
void criterion_additivity() {
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(101);
    for (int c = 0; c < 500; ++c) {
        RingConfig rc{c % 2 ? 5L : 2L, RingKind::PowerSeries, 24};
        int n = 1 + c % 3;
        auto g1 = random_gl(rng, rc, n, 3);
        auto g2 = random_gl(rng, rc, n, 3);
        require(index_of_automorphism(g1) + index_of_automorphism(g2) ==
                    index_of_automorphism(g1.mul(g2)),
                "additivity fails: " + g1.str() + " ; " + g2.str());
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    require(ms < 10000, "additivity exceeded 10 s: " + std::to_string(ms) + " ms");
}

// 2. Oracle equivalence: 500 pairs det vs Smith-with-sup; 200 matrices <= 4x4
// against the minor-valuation oracle.
void criterion_oracle() {
    Rng rng(102);
    for (int c = 0; c < 500; ++c) {
        int n = 1 + c % 4;
        auto L0 = random_lattice(rng, S2, n, 3);
        auto L1 = random_lattice(rng, S2, n, 3);
        auto N = sup(L0, L1);
        require(rel_index(L0, L1) == vec_sum(quotient_exponents(L0, N)) -
                                         vec_sum(quotient_exponents(L1, N)),
                "det and Smith rel_index disagree: " + L0.str() + " ; " + L1.str());
    }
    for (int c = 0; c < 200; ++c) {
        int k = 1 + c % 4;
        std::vector<long> exps;
        for (int i = 0; i < k; ++i) exps.push_back(rng.uniform(0, 3));
        auto M = random_integral_gl(rng, S2, k, 1)
                     .mul(MatrixF::pi_diagonal(S2, exps))
                     .mul(random_integral_gl(rng, S2, k, 1));
        require(smith_over_dvr(M).exponents == smith_minor_oracle(M),
                "Smith exponents disagree with the minor oracle: " + M.str());
    }
}

// 3. Lattice bounds: 300 pairs with inf <= L_i <= sup, and sup below 50
// independent common over-lattices each.
void criterion_bounds() {
    Rng rng(103);
    for (int c = 0; c < 300; ++c) {
        int n = 1 + c % 3;
        auto L0 = random_lattice(rng, S2, n, 3);
        auto L1 = random_lattice(rng, S2, n, 3);
        auto lo = inf(L0, L1), hi = sup(L0, L1);
        require(leq(lo, L0) && leq(lo, L1) && leq(L0, hi) && leq(L1, hi),
                "inf/sup do not bound: " + L0.str() + " ; " + L1.str());
        for (int w = 0; w < 50; ++w)
            require(leq(hi, random_over_lattice(rng, {L0, L1}, 3)),
                    "sup not minimal among over-lattices: " + L0.str() + " ; " + L1.str());
    }
}

// 4. Index rigidity: tree-independence (exhaustive for shapes with <= 6
// elements), invariance under the glued-shape embedding chain, agreement of
// the two index formulas, and telescoping on 200 interval-poset diagrams.
void criterion_rigidity() {
    Rng rng(104);
    std::vector<BasedPoset> shapes{b_poset(1), b_poset(2), t_poset(1), t_poset(2), t_poset(3)};
    for (const auto& I : shapes) {
        auto trees = enumerate_admissible_trees(I.poset());
        for (int c = 0; c < 10; ++c) {
            auto F = random_torsion_diagram(rng, S2, I.poset(), 2, 1);
            auto v = pre_index(F, I);
            require(v == pre_index_objectwise(F, I),
                    "index formulas disagree: " + F.str());
            for (const auto& tree : trees) {
                try {
                    require(idx_via_splitting(F, FramedPoset(I, tree)) == v,
                            "index depends on the tree: " + F.str());
                } catch (const TreeNotCollapsible&) {
                }
            }
        }
    }
    // embedding chain I -> I^B -> (I^B)^B
    std::vector<BasedPoset> small{b_poset(1), t_poset(1), t_poset(2)};
    for (const auto& I : small) {
        auto g1 = glue_b(I);
        auto g2 = glue_b(g1.glued);
        std::vector<int> sig(I.basepoints().size());
        std::iota(sig.begin(), sig.end(), 0);
        std::vector<int> f_small;
        for (int x : g1.from_source)
            f_small.push_back(g2.from_source[static_cast<std::size_t>(x)]);
        for (int c = 0; c < 10; ++c) {
            auto big = random_torsion_diagram(rng, S2, g2.glued.poset(), 2, 1);
            auto mid = restrict_diagram(big, g1.glued.poset(), g2.from_source);
            auto sml = restrict_diagram(big, I.poset(), f_small);
            require(rigidity_check(mid, g1.glued, g2.from_source, sig, big, g2.glued) &&
                        rigidity_check(sml, I, f_small, sig, big, g2.glued) &&
                        rigidity_check(sml, I, g1.from_source, sig, mid, g1.glued),
                    "index not preserved along the embedding chain: " + big.str());
        }
    }
    // telescoping over the interval poset of [2]
    auto B2 = b_poset(2);
    BasedPoset pair02(B2.poset(), {b_interval_index(2, 0, 0), b_interval_index(2, 2, 2)});
    for (int c = 0; c < 200; ++c) {
        auto F = random_torsion_diagram(rng, S2, B2.poset(), 2, 1);
        auto full = pre_index(F, B2);
        require(full[0] + full[1] == pre_index(F, pair02)[0],
                "components do not telescope: " + F.str());
    }
}

// 5. Simplicial coherence: identities exhaustive to length 4 for nested
// chains and group tuples; the index commutes with faces on 100 chains; the
// conjugation cocycle holds on all 216 permutation triples and 500 random
// rank-2 triples, exactly.
void criterion_simplicial() {
    Rng rng(105);
    auto chains_eq = [](const LatticeChain& a, const LatticeChain& b) {
        if (a.lattices.size() != b.lattices.size()) return false;
        for (std::size_t k = 0; k < a.lattices.size(); ++k)
            if (!a.lattices[k].equals(b.lattices[k])) return false;
        return true;
    };
    auto tuples_eq = [](const GroupTuple& a, const GroupTuple& b) {
        if (a.gs.size() != b.gs.size()) return false;
        for (std::size_t k = 0; k < a.gs.size(); ++k)
            if (!a.gs[k].same_value(b.gs[k])) return false;
        return true;
    };
    for (int c = 0; c < 20; ++c) {
        int n = 1 + c % 2;
        LatticeChain ch(random_chain(rng, S2, n, 4, 2));
        GroupTuple gt(random_group_tuple(rng, S2, n, 4, 2));
        for (int i = 0; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) {
                require(chains_eq(face(face(ch, j), i), face(face(ch, i), j - 1)),
                        "chain face identity fails");
                require(tuples_eq(bar_face(bar_face(gt, j), i), bar_face(bar_face(gt, i), j - 1)),
                        "bar face identity fails");
            }
        for (int i = 0; i <= 4; ++i) {
            require(chains_eq(face(degeneracy(ch, i), i), ch) &&
                        chains_eq(face(degeneracy(ch, i), i + 1), ch),
                    "chain degeneracy identity fails");
            require(tuples_eq(bar_face(bar_degeneracy(gt, i), i), gt) &&
                        tuples_eq(bar_face(bar_degeneracy(gt, i), i + 1), gt),
                    "bar degeneracy identity fails");
        }
    }
    for (int c = 0; c < 100; ++c) {
        int n = 1 + c % 2;
        int m = 1 + c % 3;
        LatticeChain ch(random_chain(rng, S2, n, m, 2));
        auto ic = index_of_chain(ch);
        for (int i = 0; i <= m; ++i)
            require(index_of_chain(face(ch, i)).profile() == sface(ic, i).profile(),
                    "index does not commute with faces");
    }
    // permutation triples
    std::vector<std::vector<int>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    std::vector<MatrixF> mats;
    for (const auto& p : perms) {
        MatrixF m(S2, 3, 3);
        for (int j = 0; j < 3; ++j) m.at(p[static_cast<std::size_t>(j)], j) = FieldElement::one(S2);
        mats.push_back(std::move(m));
    }
    for (const auto& a : mats)
        for (const auto& b : mats)
            for (const auto& c : mats)
                require(cocycle_check(GroupTuple({a, b, c})),
                        "cocycle fails on a permutation triple");
    for (int c = 0; c < 500; ++c)
        require(cocycle_check(GroupTuple(random_group_tuple(rng, S2, 2, 3, 2))),
                "cocycle fails on a random rank-2 triple");
}

// 6. Triangular comparison on 100 random chains of rank <= 3.
void criterion_comparison() {
    Rng rng(106);
    for (int c = 0; c < 100; ++c) {
        int n = 1 + c % 3;
        int m = 1 + c % 3;
        LatticeChain ch(random_chain(rng, S2, n, m, 2));
        require(a_n_comparison(ch), "triangular comparison fails");
    }
}

// 7. Appendix: level-wise bijections to degree 4 for the four preset
// categories; Segal verdicts; 0-coskeletality of tuple simplicial sets.
void criterion_appendix() {
    for (const char* name : {"[1]", "[2]", "c2", "walking-iso"}) {
        auto pre = lemma_pre_check(preset_category(name), 4);
        require(pre.ok, std::string("row/column comparison fails for ") + name + ": " + pre.detail);
        auto a1 = lemma_a1_check(preset_category(name), 4);
        require(a1.ok, std::string("grid comparison fails for ") + name + ": " + a1.detail);
    }
    require(segal_check(nerve(cyclic_group_category(2), 4), 4).ok &&
                segal_check(nerve(cyclic_group_category(3), 3), 3).ok,
            "group nerve fails the Segal check");
    require(!segal_check(circle(4), 4).ok, "designed non-example passes the Segal check");
    for (int nv = 2; nv <= 4; ++nv) {
        std::vector<std::string> verts;
        for (int v = 0; v < nv; ++v) verts.push_back("L" + std::to_string(v));
        require(coskeletal_check(codiscrete(verts, 3), 0),
                "tuple simplicial set not 0-coskeletal");
    }
}

// 8. Section/contraction: 100 sampled diagrams over generated instances
// satisfying the four conditions, plus one designed violation per condition.
void criterion_contraction() {
    Rng rng(108);
    int sampled = 0;
    for (int r = 2; r <= 4; ++r)
        for (int variant = 0; variant < 2; ++variant) {
            std::vector<std::pair<int, int>> rel, relp;
            for (int i = 0; i + 1 < r; ++i) rel.push_back({i, i + 1});
            std::vector<int> bps(static_cast<std::size_t>(r));
            std::iota(bps.begin(), bps.end(), 0);
            std::vector<int> phi(static_cast<std::size_t>(r), 0);
            int extra = variant ? 4 : 2;
            if (variant) {
                rel.insert(rel.end(), {{r - 1, r}, {r, r + 1}, {r, r + 2},
                                       {r + 1, r + 3}, {r + 2, r + 3}});
                relp = {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}};
                phi.insert(phi.end(), {1, 2, 3, 4});
            } else {
                rel.insert(rel.end(), {{r - 1, r}, {r, r + 1}});
                relp = {{0, 1}, {1, 2}};
                phi.insert(phi.end(), {1, 2});
            }
            Poset sp(r + extra, rel), spp(1 + extra, relp);
            auto S = BasedPoset::relaxed(sp, bps);
            auto Sp = BasedPoset(spp, {0});
            check_contraction_conditions(S, Sp, phi);
            std::vector<AdmissibleDiagram> over_s, over_sp;
            for (int c = 0; c < 9; ++c) {
                over_s.push_back(random_torsion_diagram(rng, S2, sp, 2, 1));
                over_sp.push_back(random_torsion_diagram(rng, S2, spp, 2, 1));
            }
            auto rep = section_contraction_check(S, Sp, phi, over_s, over_sp);
            require(rep.monic_ok && rep.roundtrip_ok, "section/contraction audit fails");
            sampled += rep.cases;
        }
    require(sampled >= 100, "fewer than 100 sampled diagrams");

    auto expect_violation = [](char cond, const std::function<void()>& go) {
        try {
            go();
            require(false, std::string("condition (") + cond + ") violation not detected");
        } catch (const ConditionViolated& v) {
            require(v.condition == cond,
                    std::string("wrong condition reported, wanted (") + cond + ")");
        }
    };
    Poset vtarget(2, {{0, 1}});
    expect_violation('a', [&] {
        Poset va(3, {{0, 2}, {1, 2}});
        check_contraction_conditions(BasedPoset(va, {0, 1}), BasedPoset(vtarget, {0}), {0, 0, 1});
    });
    expect_violation('b', [&] {
        Poset vb(4, {{0, 1}, {1, 2}, {2, 3}});
        check_contraction_conditions(BasedPoset::relaxed(vb, {1, 2}),
                                     BasedPoset::relaxed(vtarget, {0}), {0, 0, 0, 1});
    });
    expect_violation('c', [&] {
        Poset vc(2, {{0, 1}});
        Poset vpt(1, {});
        check_contraction_conditions(BasedPoset::relaxed(vc, {0, 1}), BasedPoset(vpt, {0}),
                                     {0, 0});
    });
    expect_violation('d', [&] {
        Poset vs(3, {{0, 1}, {1, 2}});
        Poset vd(3, {{0, 1}, {1, 2}});
        check_contraction_conditions(BasedPoset::relaxed(vs, {0, 1}), BasedPoset(vd, {0}),
                                     {0, 0, 1});
    });
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void()> run;
    };
    std::vector<Criterion> criteria{
        {"index additivity (500 pairs, n in 1..3, p in {2,5}, < 10 s)", criterion_additivity},
        {"oracle equivalence (500 rel_index pairs, 200 minor-oracle cases)", criterion_oracle},
        {"lattice bounds (300 pairs, 50 over-lattice witnesses each)", criterion_bounds},
        {"index rigidity (trees, embeddings, formulas, 200 telescoping cases)",
         criterion_rigidity},
        {"simplicial coherence (identities to length 4, 216 + 500 cocycle triples)",
         criterion_simplicial},
        {"triangular comparison (100 chains, rank <= 3)", criterion_comparison},
        {"appendix bijections, Segal, and coskeletal checks (degree 4)", criterion_appendix},
        {"section/contraction (>= 100 sampled diagrams, 4 designed violations)",
         criterion_contraction},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            criteria[i].run();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
                  << criteria[i].name << " (" << ms << " ms)";
        if (!ok) std::cout << " -- " << detail;
        std::cout << "\n";
        failed += ok ? 0 : 1;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
