#pragma once

#include "lidx/matrix.hpp"

namespace lidx {

/// A full-rank O-submodule L of F^n, stored canonically: an integral upper
/// triangular Hermite basis H with minimal entry valuation 0, plus a global
/// pi-power shift s, so that L = pi^s * (column span of H). Lattice equality
/// is comparison of (s, H).
class Lattice {
public:
    static Lattice standard(const RingConfig& cfg, int n);
    /// L = O-column-span of an invertible square matrix.
    static Lattice from_basis(const MatrixF& M);
    /// L = pi^shift * O-column-span of an n x m generator matrix (m >= n).
    static Lattice from_generators(const MatrixF& G, long shift = 0);

    const RingConfig& config() const { return hermite_.config(); }
    int rank() const { return hermite_.rows(); }
    const MatrixF& hermite() const { return hermite_; }
    long shift() const { return shift_; }
    /// A basis matrix for L (Hermite basis times pi^shift).
    MatrixF basis() const { return hermite_.shifted(shift_); }
    /// v(det) of any basis matrix of L.
    long det_valuation() const;

    bool equals(const Lattice& o) const;
    std::string str() const { return basis().str(); }

private:
    explicit Lattice(MatrixF h, long s) : hermite_(std::move(h)), shift_(s) {}
    MatrixF hermite_;
    long shift_;
};

enum class LatticeRel { Equal, Leq, Geq, Incomparable };

/// g * L for invertible g.
Lattice act(const MatrixF& g, const Lattice& L);

/// Containment test: L0 <= L1 iff M1^{-1} M0 is integral (computed through
/// the adjugate so exact bases stay exact).
bool leq(const Lattice& L0, const Lattice& L1);
LatticeRel compare(const Lattice& L0, const Lattice& L1);

/// Least upper bound: span of the union of bases.
Lattice sup(const Lattice& L0, const Lattice& L1);
/// Greatest lower bound, via duality: inf = (sup(L0*, L1*))*.
Lattice inf(const Lattice& L0, const Lattice& L1);
Lattice dual(const Lattice& L);

/// Elementary divisor exponents of L1/L0 for L0 <= L1 (zeros dropped).
std::vector<long> quotient_exponents(const Lattice& L0, const Lattice& L1);

/// v(det M0) - v(det M1); equals length(L1/L0) when L0 <= L1.
long rel_index(const Lattice& L0, const Lattice& L1);

/// Index(g) = v(det g).
long index_of_automorphism(const MatrixF& g);

}  // namespace lidx
