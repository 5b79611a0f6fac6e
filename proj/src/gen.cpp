#include "lidx/gen.hpp"

namespace lidx {

FieldElement random_element(Rng& rng, const RingConfig& cfg, int terms, long lo_exp, long hi_exp) {
    std::vector<std::pair<long, long>> ts;
    for (int i = 0; i < terms; ++i) ts.emplace_back(rng.uniform(lo_exp, hi_exp), rng.uniform(0, cfg.p - 1));
    return FieldElement::from_terms(cfg, ts);
}

FieldElement random_unit(Rng& rng, const RingConfig& cfg, int degree) {
    std::vector<std::pair<long, long>> ts{{0, rng.uniform(1, cfg.p - 1)}};
    for (long e = 1; e <= degree; ++e) ts.emplace_back(e, rng.uniform(0, cfg.p - 1));
    return FieldElement::from_terms(cfg, ts);
}

namespace {

MatrixF shear(Rng& rng, const RingConfig& cfg, int n, long lo_exp) {
    MatrixF s = MatrixF::identity(cfg, n);
    if (n < 2) return s;
    int i = static_cast<int>(rng.uniform(0, n - 1));
    int j = static_cast<int>(rng.uniform(0, n - 2));
    if (j >= i) ++j;
    s.at(i, j) = random_element(rng, cfg, 2, lo_exp, lo_exp + 3);
    return s;
}

MatrixF gl_with_diag(Rng& rng, const RingConfig& cfg, int n, long dlo, long dhi, long shear_lo) {
    std::vector<long> exps;
    for (int i = 0; i < n; ++i) exps.push_back(rng.uniform(dlo, dhi));
    MatrixF g = shear(rng, cfg, n, shear_lo)
                    .mul(MatrixF::pi_diagonal(cfg, exps))
                    .mul(shear(rng, cfg, n, shear_lo));
    // sprinkle one more shear for variety
    if (rng.flip()) g = g.mul(shear(rng, cfg, n, shear_lo));
    return g;
}

}  // namespace

MatrixF random_gl(Rng& rng, const RingConfig& cfg, int n, long bound) {
    return gl_with_diag(rng, cfg, n, -bound, bound, -1);
}

MatrixF random_integral_gl(Rng& rng, const RingConfig& cfg, int n, long bound) {
    return gl_with_diag(rng, cfg, n, 0, bound, 0);
}

Lattice random_lattice(Rng& rng, const RingConfig& cfg, int n, long bound) {
    return Lattice::from_basis(random_gl(rng, cfg, n, bound));
}

std::vector<Lattice> random_chain(Rng& rng, const RingConfig& cfg, int n, int m, long bound) {
    std::vector<Lattice> chain;
    chain.push_back(random_lattice(rng, cfg, n, bound));
    for (int i = 0; i < m; ++i) {
        // enlarge: act by the inverse of an integral matrix, so the previous
        // lattice is contained in the next; done at the basis level to stay
        // exact: L' = span(M * adj-inverse) = span(M * adj(g)) * pi^{-v(det g)}
        MatrixF g = random_integral_gl(rng, cfg, n, bound);
        long dv = g.det().valuation();
        Lattice next =
            Lattice::from_generators(chain.back().hermite().mul(g.adjugate()),
                                     chain.back().shift() - dv);
        chain.push_back(next);
    }
    return chain;
}

Lattice random_over_lattice(Rng& rng, const std::vector<Lattice>& below, long bound) {
    if (below.empty()) throw Error("no lattices to dominate");
    MatrixF G = below[0].basis();
    for (std::size_t i = 1; i < below.size(); ++i) G = G.hstack(below[i].basis());
    int n = below[0].rank();
    MatrixF extra(G.config(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) extra.at(i, j) = random_element(rng, G.config(), 2, -bound, bound);
    return Lattice::from_generators(G.hstack(extra));
}

TorsionModule random_torsion(Rng& rng, const RingConfig& cfg, int max_summands, long max_exp) {
    std::vector<long> exps;
    int k = static_cast<int>(rng.uniform(0, max_summands));
    for (int i = 0; i < k; ++i) exps.push_back(rng.uniform(1, max_exp));
    return TorsionModule::from_exponents(cfg, std::move(exps));
}

std::vector<MatrixF> random_group_tuple(Rng& rng, const RingConfig& cfg, int n, int m, long bound) {
    std::vector<MatrixF> out;
    for (int i = 0; i < m; ++i) out.push_back(random_gl(rng, cfg, n, bound));
    return out;
}

}  // namespace lidx
