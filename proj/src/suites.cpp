#include "lidx/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>

#include "json.hpp"
#include "lidx/diagram.hpp"
#include "lidx/gen.hpp"
#include "lidx/schain.hpp"
#include "lidx/simplicial.hpp"

namespace lidx {

namespace {

struct PropertyViolation : Error {
    std::string payload;
    PropertyViolation(const std::string& what, std::string pay)
        : Error(what), payload(std::move(pay)) {}
};

void expect(bool cond, const std::string& what, const std::string& payload = "") {
    if (!cond) throw PropertyViolation(what, payload);
}

/// Runs `count` seeded cases of `body` under the retry policy: a
/// PrecisionExhausted re-runs the case at doubled precision (up to four
/// doublings) before being recorded as unresolved.
void run_cases(SuiteReport& rep, const RunConfig& cfg, const std::string& check, long count,
               const std::function<void(Rng&, const RingConfig&)>& body) {
    for (long i = 0; i < count; ++i) {
        ++rep.cases;
        RingConfig rc = cfg.ring();
        bool settled = false;
        for (int attempt = 0; attempt <= 4 && !settled; ++attempt) {
            Rng rng(cfg.seed * 1000003 + static_cast<std::uint64_t>(i));
            try {
                body(rng, rc);
                settled = true;
                rep.precision_retries += attempt;
            } catch (const PrecisionExhausted&) {
                if (attempt == 4) {
                    ++rep.precision_unresolved;
                    settled = true;
                } else {
                    rc = rc.with_prec(rc.prec * 2);
                }
            } catch (const PropertyViolation& v) {
                rep.failures.push_back({i, check, std::string(v.what()) +
                                                      (v.payload.empty() ? "" : " | " + v.payload)});
                settled = true;
            } catch (const Error& e) {
                rep.failures.push_back({i, check, std::string("unexpected error: ") + e.what()});
                settled = true;
            }
        }
    }
}

long vec_sum(const std::vector<long>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

// --- suites -----------------------------------------------------------------

void suite_additivity(const RunConfig& cfg, SuiteReport& rep) {
    run_cases(rep, cfg, "index-additivity", cfg.cases, [&](Rng& rng, const RingConfig& rc) {
        int n = static_cast<int>(rng.uniform(1, 3));
        auto g1 = random_gl(rng, rc, n, cfg.bound);
        auto g2 = random_gl(rng, rc, n, cfg.bound);
        expect(index_of_automorphism(g1) + index_of_automorphism(g2) ==
                   index_of_automorphism(g1.mul(g2)),
               "Index(g1) + Index(g2) != Index(g1 g2)", g1.str() + " ; " + g2.str());
        // relative index is a cocycle on lattices
        auto L0 = random_lattice(rng, rc, n, cfg.bound);
        auto L1 = random_lattice(rng, rc, n, cfg.bound);
        auto L2 = random_lattice(rng, rc, n, cfg.bound);
        expect(rel_index(L0, L1) + rel_index(L1, L2) == rel_index(L0, L2),
               "rel_index does not telescope");
        expect(rel_index(L0, L1) == -rel_index(L1, L0), "rel_index not antisymmetric");
        // orbit tuples telescope to the index of the product
        auto t = l_map(GroupTuple({g1, g2}), L0);
        expect(vec_sum(index_of_tuple(t)) == -index_of_automorphism(g2.mul(g1)),
               "orbit tuple sum != -Index(g2 g1)");
    });
}

void suite_oracle(const RunConfig& cfg, SuiteReport& rep) {
    run_cases(rep, cfg, "relindex-det-vs-smith", cfg.cases,
              [&](Rng& rng, const RingConfig& rc) {
                  int n = static_cast<int>(rng.uniform(1, 4));
                  auto L0 = random_lattice(rng, rc, n, cfg.bound);
                  auto L1 = random_lattice(rng, rc, n, cfg.bound);
                  auto N = sup(L0, L1);
                  long via_smith = vec_sum(quotient_exponents(L0, N)) -
                                   vec_sum(quotient_exponents(L1, N));
                  expect(rel_index(L0, L1) == via_smith,
                         "determinant and Smith computations of rel_index disagree",
                         L0.str() + " ; " + L1.str());
              });
    run_cases(rep, cfg, "smith-vs-minor-oracle", cfg.cases, [&](Rng& rng, const RingConfig& rc) {
        int k = static_cast<int>(rng.uniform(1, 4));
        std::vector<long> exps;
        for (int i = 0; i < k; ++i) exps.push_back(rng.uniform(0, cfg.bound));
        auto M = random_integral_gl(rng, rc, k, 1)
                     .mul(MatrixF::pi_diagonal(rc, exps))
                     .mul(random_integral_gl(rng, rc, k, 1));
        expect(smith_over_dvr(M).exponents == smith_minor_oracle(M),
               "Smith exponents disagree with the minor-valuation oracle", M.str());
    });
}

void suite_grassmannian(const RunConfig& cfg, SuiteReport& rep) {
    run_cases(rep, cfg, "inf-sup-bounds", cfg.cases, [&](Rng& rng, const RingConfig& rc) {
        int n = static_cast<int>(rng.uniform(1, 3));
        auto L0 = random_lattice(rng, rc, n, cfg.bound);
        auto L1 = random_lattice(rng, rc, n, cfg.bound);
        auto lo = inf(L0, L1), hi = sup(L0, L1);
        expect(leq(lo, L0) && leq(lo, L1) && leq(L0, hi) && leq(L1, hi),
               "inf/sup do not bound the pair", L0.str() + " ; " + L1.str());
        auto W = random_over_lattice(rng, {L0, L1}, cfg.bound);
        expect(leq(hi, W), "sup not below an independent over-lattice", W.str());
        expect(dual(dual(L0)).equals(L0), "double dual is not the identity");
        expect(vec_sum(quotient_exponents(lo, hi)) == rel_index(lo, hi),
               "quotient length disagrees with rel_index");
        // chain classes are GL-invariant
        auto c = random_chain(rng, rc, n, 2, cfg.bound);
        auto g = random_gl(rng, rc, n, cfg.bound);
        std::vector<Lattice> moved;
        for (const auto& L : c) moved.push_back(act(g, L));
        expect(index_of_chain(LatticeChain(moved)).classes() ==
                   index_of_chain(LatticeChain(c)).classes(),
               "chain classes not invariant under the group action");
    });
    run_cases(rep, cfg, "gr-tuples-coskeletal", std::min(cfg.cases, 10L),
              [&](Rng& rng, const RingConfig&) {
                  int nv = static_cast<int>(rng.uniform(2, 4));
                  std::vector<std::string> verts;
                  for (int v = 0; v < nv; ++v) verts.push_back(std::to_string(v));
                  auto x = codiscrete(verts, 3);
                  expect(coskeletal_check(x, 0), "tuple simplicial set not 0-coskeletal");
                  expect(segal_check(x, 3).ok, "tuple simplicial set not Segal");
              });
}

void suite_rigidity(const RunConfig& cfg, SuiteReport& rep) {
    run_cases(rep, cfg, "pre-index-consistency", cfg.cases, [&](Rng& rng, const RingConfig& rc) {
        std::vector<BasedPoset> shapes{b_poset(1), b_poset(2), t_poset(2), t_poset(3)};
        const auto& I = shapes[static_cast<std::size_t>(rng.uniform(0, 3))];
        auto F = random_torsion_diagram(rng, rc, I.poset(), static_cast<int>(cfg.n), 1);
        auto v1 = pre_index(F, I);
        expect(v1 == pre_index_objectwise(F, I),
               "cokernel-difference and object-wise index formulas disagree", F.str());
        expect(v1 == idx_via_splitting(F, star_tree(I)),
               "splitting along the star tree disagrees with the index", F.str());
    });
    run_cases(rep, cfg, "b2-telescoping", cfg.cases, [&](Rng& rng, const RingConfig& rc) {
        auto B2 = b_poset(2);
        BasedPoset pair02(B2.poset(),
                          {b_interval_index(2, 0, 0), b_interval_index(2, 2, 2)});
        auto F = random_torsion_diagram(rng, rc, B2.poset(), static_cast<int>(cfg.n), 1);
        auto full = pre_index(F, B2);
        auto skip = pre_index(F, pair02);
        expect(full[0] + full[1] == skip[0],
               "index components do not telescope over the basepoint pair", F.str());
    });
    run_cases(rep, cfg, "tree-invariance", std::min(cfg.cases, 40L),
              [&](Rng& rng, const RingConfig& rc) {
                  auto I = rng.flip() ? b_poset(2) : t_poset(2);
                  auto F = random_torsion_diagram(rng, rc, I.poset(), static_cast<int>(cfg.n), 1);
                  auto base = pre_index(F, I);
                  for (const auto& tree : enumerate_admissible_trees(I.poset())) {
                      try {
                          expect(idx_via_splitting(F, FramedPoset(I, tree)) == base,
                                 "index depends on the chosen admissible tree", F.str());
                      } catch (const TreeNotCollapsible&) {
                          // trees whose collapse is not admissible are skipped
                      }
                  }
              });
    run_cases(rep, cfg, "restriction-invariance", std::min(cfg.cases, 40L),
              [&](Rng& rng, const RingConfig& rc) {
                  std::vector<BasedPoset> shapes{b_poset(1), t_poset(1), t_poset(2)};
                  const auto& I = shapes[static_cast<std::size_t>(rng.uniform(0, 2))];
                  auto g1 = glue_b(I);
                  auto big =
                      random_torsion_diagram(rng, rc, g1.glued.poset(), static_cast<int>(cfg.n), 1);
                  auto small = restrict_diagram(big, I.poset(), g1.from_source);
                  std::vector<int> sig(I.basepoints().size());
                  std::iota(sig.begin(), sig.end(), 0);
                  expect(rigidity_check(small, I, g1.from_source, sig, big, g1.glued),
                         "index not preserved by the glued-shape restriction", big.str());
              });
    run_cases(rep, cfg, "contraction-roundtrip", std::min(cfg.cases, 40L),
              [&](Rng& rng, const RingConfig& rc) {
                  // basepoint chain of length r with either a chain or a
                  // diamond of non-basepoints above it
                  int r = static_cast<int>(rng.uniform(2, 4));
                  std::vector<std::pair<int, int>> rel, relp;
                  for (int i = 0; i + 1 < r; ++i) rel.push_back({i, i + 1});
                  std::vector<int> bps(static_cast<std::size_t>(r));
                  std::iota(bps.begin(), bps.end(), 0);
                  std::vector<int> phi(static_cast<std::size_t>(r), 0);
                  bool diamond = rng.flip();
                  int extra = diamond ? 4 : 2;
                  if (diamond) {
                      rel.insert(rel.end(), {{r - 1, r},
                                             {r, r + 1},
                                             {r, r + 2},
                                             {r + 1, r + 3},
                                             {r + 2, r + 3}});
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
                  for (int c = 0; c < 2; ++c) {
                      over_s.push_back(
                          random_torsion_diagram(rng, rc, sp, static_cast<int>(cfg.n), 1));
                      over_sp.push_back(
                          random_torsion_diagram(rng, rc, spp, static_cast<int>(cfg.n), 1));
                  }
                  auto srep = section_contraction_check(S, Sp, phi, over_s, over_sp);
                  expect(srep.monic_ok, "section comparison is not a monic");
                  expect(srep.roundtrip_ok, "contraction round trip changes invariants");
              });
    run_cases(rep, cfg, "contraction-designed-violations", std::min(cfg.cases, 1L), [&](Rng&, const RingConfig&) {
        auto expect_violation = [](char cond, const std::function<void()>& go) {
            try {
                go();
                expect(false, std::string("condition (") + cond + ") violation not detected");
            } catch (const ConditionViolated& v) {
                expect(v.condition == cond,
                       std::string("wrong condition reported, wanted (") + cond + ")");
            }
        };
        Poset vtarget(2, {{0, 1}});
        expect_violation('a', [&] {
            Poset va(3, {{0, 2}, {1, 2}});
            check_contraction_conditions(BasedPoset(va, {0, 1}), BasedPoset(vtarget, {0}),
                                         {0, 0, 1});
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
    });
}

void suite_cocycle(const RunConfig& cfg, SuiteReport& rep) {
    run_cases(rep, cfg, "conjugation-cocycle", cfg.cases, [&](Rng& rng, const RingConfig& rc) {
        int n = std::clamp(static_cast<int>(cfg.n), 1, 3);
        GroupTuple g(random_group_tuple(rng, rc, n, 3, cfg.bound));
        expect(cocycle_check(g), "cocycle identity fails",
               g.gs[0].str() + " ; " + g.gs[1].str() + " ; " + g.gs[2].str());
    });
    run_cases(rep, cfg, "s3-exhaustive", std::min(cfg.cases, 1L), [&](Rng&, const RingConfig& rc) {
        std::vector<std::vector<int>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                            {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        std::vector<MatrixF> mats;
        for (const auto& p : perms) {
            MatrixF m(rc, 3, 3);
            for (int j = 0; j < 3; ++j)
                m.at(p[static_cast<std::size_t>(j)], j) = FieldElement::one(rc);
            mats.push_back(std::move(m));
        }
        for (const auto& a : mats)
            for (const auto& b : mats)
                for (const auto& c : mats)
                    expect(cocycle_check(GroupTuple({a, b, c})),
                           "cocycle identity fails on a permutation triple");
    });
}

void suite_simplicial(const RunConfig& cfg, SuiteReport& rep) {
    run_cases(rep, cfg, "chain-simplicial-identities", cfg.cases,
              [&](Rng& rng, const RingConfig& rc) {
                  int n = static_cast<int>(rng.uniform(1, 2));
                  int m = static_cast<int>(rng.uniform(2, 4));
                  LatticeChain c(random_chain(rng, rc, n, m, cfg.bound));
                  auto eq = [](const LatticeChain& a, const LatticeChain& b) {
                      if (a.lattices.size() != b.lattices.size()) return false;
                      for (std::size_t k = 0; k < a.lattices.size(); ++k)
                          if (!a.lattices[k].equals(b.lattices[k])) return false;
                      return true;
                  };
                  for (int i = 0; i <= m; ++i)
                      for (int j = i + 1; j <= m; ++j)
                          expect(eq(face(face(c, j), i), face(face(c, i), j - 1)),
                                 "face identity fails on nested chains");
                  for (int i = 0; i <= m; ++i) {
                      expect(eq(face(degeneracy(c, i), i), c), "s then d is not the identity");
                      expect(eq(face(degeneracy(c, i), i + 1), c), "s then d is not the identity");
                  }
                  // the index is simplicial at the invariant level
                  auto ic = index_of_chain(c);
                  for (int i = 0; i <= m; ++i)
                      expect(index_of_chain(face(c, i)).profile() == sface(ic, i).profile(),
                             "index does not commute with faces");
              });
    run_cases(rep, cfg, "orbit-map-and-transport", cfg.cases, [&](Rng& rng, const RingConfig& rc) {
        int n = static_cast<int>(rng.uniform(1, 2));
        GroupTuple g(random_group_tuple(rng, rc, n, 3, cfg.bound));
        auto L = random_lattice(rng, rc, n, cfg.bound);
        auto t = l_map(g, L);
        for (int i = 1; i <= 3; ++i)
            expect(tuple_equal(tuple_face(t, i), l_map(bar_face(g, i), L)),
                   "orbit map does not commute with an inner or last face");
        for (int i = 0; i <= 3; ++i)
            expect(tuple_equal(tuple_degeneracy(t, i), l_map(bar_degeneracy(g, i), L)),
                   "orbit map does not commute with a degeneracy");
        auto a = alpha(g);
        auto lhs = l_map(bar_face(g, 0), L);
        auto rhs = tuple_face(t, 0);
        for (int i = 0; i < 3; ++i)
            expect(act(a.gs[static_cast<std::size_t>(i)],
                       lhs.lattices[static_cast<std::size_t>(i)])
                       .equals(rhs.lattices[static_cast<std::size_t>(i)]),
                   "transport witness does not mend the 0th face");
    });
    run_cases(rep, cfg, "bar-segal", std::min(cfg.cases, 1L), [&](Rng& rng, const RingConfig& rc) {
        std::vector<GroupTuple> sample;
        for (int k = 0; k < 8; ++k)
            sample.emplace_back(
                random_group_tuple(rng, rc, 2, static_cast<int>(rng.uniform(1, 3)), cfg.bound));
        expect(b_aut_segal_check(sample), "bar construction fails the set-level Segal check");
    });
}

void suite_an_compare(const RunConfig& cfg, SuiteReport& rep) {
    run_cases(rep, cfg, "triangular-comparison", cfg.cases, [&](Rng& rng, const RingConfig& rc) {
        int n = static_cast<int>(rng.uniform(1, 3));
        int m = static_cast<int>(rng.uniform(1, 3));
        LatticeChain c(random_chain(rng, rc, n, m, cfg.bound));
        expect(a_n_comparison(c), "tautological and quotient diagrams disagree");
    });
    run_cases(rep, cfg, "tuple-index-via-diagram", std::min(cfg.cases, 60L),
              [&](Rng& rng, const RingConfig& rc) {
                  int n = static_cast<int>(rng.uniform(1, 2));
                  int m = static_cast<int>(rng.uniform(1, 3));
                  std::vector<Lattice> ls;
                  for (int i = 0; i <= m; ++i) ls.push_back(random_lattice(rng, rc, n, 2));
                  LatticeTuple t(ls);
                  expect(index_of_tuple_via_diagram(t) == index_of_tuple(t),
                         "diagram computation of the tuple index disagrees");
              });
}

void suite_appendix(const RunConfig& cfg, SuiteReport& rep) {
    int D = std::clamp(cfg.degree, 1, 4);
    run_cases(rep, cfg, "row-column-comparisons", std::min(cfg.cases, 1L), [&](Rng&, const RingConfig&) {
        for (const char* name : {"[1]", "[2]", "c2", "walking-iso"}) {
            auto r = lemma_pre_check(preset_category(name), D);
            expect(r.ok, std::string("row/column comparison fails for ") + name, r.detail);
        }
    });
    run_cases(rep, cfg, "grid-vs-iso-chains", std::min(cfg.cases, 1L), [&](Rng&, const RingConfig&) {
        for (const char* name : {"[1]", "[2]", "c2", "walking-iso"}) {
            auto r = lemma_a1_check(preset_category(name), D);
            expect(r.ok, std::string("bisimplicial comparison fails for ") + name, r.detail);
        }
    });
    run_cases(rep, cfg, "segal-verdicts", std::min(cfg.cases, 1L), [&](Rng&, const RingConfig&) {
        expect(segal_check(nerve(cyclic_group_category(2), D), D).ok,
               "nerve of a group fails the Segal check");
        expect(segal_check(nerve(ordinal_category(2), D), D).ok,
               "nerve of a poset fails the Segal check");
        expect(!segal_check(circle(std::max(D, 2)), 2).ok,
               "designed non-example passes the Segal check");
    });
    run_cases(rep, cfg, "coskeletal-verdicts", std::min(cfg.cases, 1L), [&](Rng&, const RingConfig&) {
        expect(coskeletal_check(delta_prime(1, D), 0), "free-groupoid nerve not 0-coskeletal");
        expect(coskeletal_check(delta_prime(2, std::min(D, 3)), 0),
               "free-groupoid nerve not 0-coskeletal");
        expect(!coskeletal_check(standard_simplex(1, D), 0), "1-simplex passes 0-coskeletal");
        expect(coskeletal_check(nerve(cyclic_group_category(2), D), 2), "nerve not 2-coskeletal");
    });
    run_cases(rep, cfg, "grothendieck-total", std::min(cfg.cases, 1L), [&](Rng&, const RingConfig&) {
        auto c2 = cyclic_group_category(2);
        auto x = nerve(ordinal_category(1), std::min(D, 3));
        auto total = grothendieck(constant_functor(c2, x));
        auto prod = product_simplicial(nerve(c2, std::min(D, 3)), x);
        auto map = [](int, const std::string& lab) {
            auto pos = lab.find('|');
            return lab.substr(0, pos) + "&" + lab.substr(pos + 1);
        };
        expect(simplicial_iso_check(total, prod, map),
               "constant Grothendieck total is not the product");
    });
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"additivity", "rigidity",   "cocycle",  "simplicial",
            "grassmannian", "oracle",   "an-compare", "appendix"};
}

SuiteReport run_suite(const std::string& name, const RunConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteReport rep;
    rep.suite = name;
    rep.config = cfg;
    if (name == "all") {
        for (const auto& sub : suite_names()) {
            auto r = run_suite(sub, cfg);
            rep.cases += r.cases;
            rep.precision_retries += r.precision_retries;
            rep.precision_unresolved += r.precision_unresolved;
            for (auto& f : r.failures) {
                f.check = sub + "/" + f.check;
                rep.failures.push_back(std::move(f));
            }
        }
    } else if (name == "additivity") {
        suite_additivity(cfg, rep);
    } else if (name == "rigidity") {
        suite_rigidity(cfg, rep);
    } else if (name == "cocycle") {
        suite_cocycle(cfg, rep);
    } else if (name == "simplicial") {
        suite_simplicial(cfg, rep);
    } else if (name == "grassmannian") {
        suite_grassmannian(cfg, rep);
    } else if (name == "oracle") {
        suite_oracle(cfg, rep);
    } else if (name == "an-compare") {
        suite_an_compare(cfg, rep);
    } else if (name == "appendix") {
        suite_appendix(cfg, rep);
    } else {
        throw UnknownSuite("unknown suite: " + name);
    }
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

std::string report_json(const SuiteReport& rep) {
    nlohmann::json j;
    j["schema"] = 1;
    j["suite"] = rep.suite;
    j["rng"] = Rng::algorithm;
    j["config"] = {{"p", rep.config.p},
                   {"ring", rep.config.kind == RingKind::PowerSeries ? "series" : "padic"},
                   {"prec", rep.config.prec},
                   {"n", rep.config.n},
                   {"bound", rep.config.bound},
                   {"cases", rep.config.cases},
                   {"seed", rep.config.seed},
                   {"degree", rep.config.degree}};
    j["cases"] = rep.cases;
    j["failures"] = nlohmann::json::array();
    for (const auto& f : rep.failures)
        j["failures"].push_back(
            {{"case", f.case_index}, {"check", f.check}, {"payload", f.payload}});
    j["elapsed_ms"] = rep.elapsed_ms;
    j["precision_retries"] = rep.precision_retries;
    j["precision_unresolved"] = rep.precision_unresolved;
    j["ok"] = rep.ok();
    return j.dump(2);
}

std::vector<long> smith_minor_oracle(const MatrixF& M) {
    int r = std::min(M.rows(), M.cols());
    std::vector<long> d{0};  // d_0
    for (int k = 1; k <= r; ++k) {
        long best = VAL_INF;
        // all k-subsets of rows and columns
        std::vector<int> ri(static_cast<std::size_t>(k));
        std::iota(ri.begin(), ri.end(), 0);
        auto advance = [](std::vector<int>& s, int limit) {
            int k2 = static_cast<int>(s.size());
            int i = k2 - 1;
            while (i >= 0 && s[static_cast<std::size_t>(i)] == limit - k2 + i) --i;
            if (i < 0) return false;
            ++s[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k2; ++j)
                s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j) - 1] + 1;
            return true;
        };
        bool more_rows = true;
        while (more_rows) {
            std::vector<int> ci(static_cast<std::size_t>(k));
            std::iota(ci.begin(), ci.end(), 0);
            bool more_cols = true;
            while (more_cols) {
                auto dv = M.submatrix(ri, ci).det();
                long v = dv.is_zero() ? VAL_INF : dv.valuation();
                best = std::min(best, v);
                more_cols = advance(ci, M.cols());
            }
            more_rows = advance(ri, M.rows());
        }
        if (best == VAL_INF) throw RankDeficient("no nonzero minor of size " + std::to_string(k));
        d.push_back(best);
    }
    std::vector<long> exps;
    for (int k = 1; k <= r; ++k)
        exps.push_back(d[static_cast<std::size_t>(k)] - d[static_cast<std::size_t>(k) - 1]);
    return exps;
}

}  // namespace lidx
