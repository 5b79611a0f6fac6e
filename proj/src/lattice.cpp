#include "lidx/lattice.hpp"

namespace lidx {

// Canonicalize a generator matrix (n x m, full row rank) with a pi-shift:
// scale integral, take the Hermite form, then renormalize so the Hermite
// basis has minimal entry valuation 0.
Lattice Lattice::from_generators(const MatrixF& G, long shift) {
    long t = G.min_valuation();
    if (t == VAL_INF) throw RankDeficient("zero generator matrix");
    MatrixF H0 = hermite_over_dvr(G.shifted(-t));
    long u = H0.min_valuation();
    return Lattice(H0.shifted(-u), shift + t + u);
}

Lattice Lattice::standard(const RingConfig& cfg, int n) {
    return Lattice(MatrixF::identity(cfg, n), 0);
}

Lattice Lattice::from_basis(const MatrixF& M) {
    if (M.rows() != M.cols()) throw Error("lattice basis must be square");
    if (M.det().is_zero()) throw SingularMatrix("lattice basis not invertible");
    return from_generators(M, 0);
}

long Lattice::det_valuation() const {
    long d = 0;
    for (int i = 0; i < rank(); ++i) d += hermite_.at(i, i).valuation();
    return d + static_cast<long>(rank()) * shift_;
}

bool Lattice::equals(const Lattice& o) const {
    if (rank() != o.rank() || shift_ != o.shift_) return false;
    return hermite_.same_value(o.hermite_);
}

Lattice act(const MatrixF& g, const Lattice& L) {
    if (g.det().is_zero()) throw SingularMatrix("group element not invertible");
    return Lattice::from_generators(g.mul(L.hermite()), L.shift());
}

namespace {

// Entry-wise integrality of M1^{-1} M0 = adj(H1) H0 * pi^(s0 - s1 - D1).
// Returns true/false; PrecisionExhausted when an entry's valuation bound
// cannot decide the sign.
bool contained(const Lattice& L0, const Lattice& L1) {
    long d1 = 0;
    for (int i = 0; i < L1.rank(); ++i) d1 += L1.hermite().at(i, i).valuation();
    long off = L0.shift() - L1.shift() - d1;
    MatrixF C = L1.hermite().adjugate().mul(L0.hermite());
    for (int i = 0; i < C.rows(); ++i)
        for (int j = 0; j < C.cols(); ++j) {
            const FieldElement& x = C.at(i, j);
            if (x.is_zero()) continue;
            if (!x.exact() && x.rel_digits() == 0) {
                if (x.abs_prec() + off >= 0) continue;
                throw PrecisionExhausted("containment undecidable at working precision");
            }
            if (x.valuation() + off < 0) return false;
        }
    return true;
}

}  // namespace

bool leq(const Lattice& L0, const Lattice& L1) {
    if (L0.rank() != L1.rank() || !L0.config().compatible(L1.config()))
        throw Error("lattices in different ambient spaces");
    return contained(L0, L1);
}

LatticeRel compare(const Lattice& L0, const Lattice& L1) {
    bool le = leq(L0, L1), ge = leq(L1, L0);
    if (le && ge) return LatticeRel::Equal;
    if (le) return LatticeRel::Leq;
    if (ge) return LatticeRel::Geq;
    return LatticeRel::Incomparable;
}

Lattice sup(const Lattice& L0, const Lattice& L1) {
    if (L0.rank() != L1.rank()) throw Error("lattices in different ambient spaces");
    return Lattice::from_generators(L0.basis().hstack(L1.basis()), 0);
}

Lattice dual(const Lattice& L) {
    long d = 0;
    for (int i = 0; i < L.rank(); ++i) d += L.hermite().at(i, i).valuation();
    return Lattice::from_generators(L.hermite().adjugate().transpose(), -L.shift() - d);
}

Lattice inf(const Lattice& L0, const Lattice& L1) {
    return dual(sup(dual(L0), dual(L1)));
}

std::vector<long> quotient_exponents(const Lattice& L0, const Lattice& L1) {
    if (!leq(L0, L1)) throw NotContained();
    long d1 = 0;
    for (int i = 0; i < L1.rank(); ++i) d1 += L1.hermite().at(i, i).valuation();
    MatrixF B = L1.hermite().adjugate().mul(L0.hermite()).shifted(L0.shift() - L1.shift() - d1);
    return cokernel_exponents(B);
}

long rel_index(const Lattice& L0, const Lattice& L1) {
    if (L0.rank() != L1.rank()) throw Error("lattices in different ambient spaces");
    return L0.det_valuation() - L1.det_valuation();
}

long index_of_automorphism(const MatrixF& g) {
    FieldElement d = g.det();
    if (d.is_zero()) throw SingularMatrix();
    return d.valuation();
}

}  // namespace lidx
