#pragma once

#include "lidx/diagram.hpp"
#include "lidx/gen.hpp"
#include "lidx/lattice.hpp"
#include "lidx/torsion.hpp"

namespace lidx {

/// An m-simplex of the nested-lattice simplicial set: L_0 <= ... <= L_m.
struct LatticeChain {
    std::vector<Lattice> lattices;

    explicit LatticeChain(std::vector<Lattice> ls);
    int length() const { return static_cast<int>(lattices.size()) - 1; }
    int rank() const { return lattices.front().rank(); }
};

/// An m-simplex of the unordered-lattice simplicial set: any tuple of
/// lattices in a common ambient space.
struct LatticeTuple {
    std::vector<Lattice> lattices;

    explicit LatticeTuple(std::vector<Lattice> ls);
    int length() const { return static_cast<int>(lattices.size()) - 1; }
};

/// A normalized chain object 0 = X_0 -> X_1 -> ... -> X_m of admissible
/// monics between torsion modules.
class SChainObject {
public:
    explicit SChainObject(std::vector<ModuleMap> maps);
    static SChainObject empty(const RingConfig& cfg);

    int length() const { return static_cast<int>(maps_.size()); }
    const TorsionModule& term(int i) const;  // X_i, 0 <= i <= length
    const std::vector<ModuleMap>& maps() const { return maps_; }

    /// Class vector (length X_1, length X_2/X_1, ..., length X_m/X_{m-1}).
    std::vector<long> classes() const;
    /// Full invariant profile: divisors of every term and every step
    /// cokernel; the notion of equality used after re-quotienting faces.
    std::vector<std::vector<long>> profile() const;

private:
    SChainObject() = default;
    RingConfig cfg_{};
    TorsionModule zero_;
    std::vector<ModuleMap> maps_;
};

// --- the index of a chain and the simplicial structure ---------------------

/// (L_0 <= ... <= L_m) -> (0 -> L_1/L_0 -> ... -> L_m/L_0).
SChainObject index_of_chain(const LatticeChain& c);

/// Face/degeneracy of nested chains: drop or repeat the i-th lattice.
LatticeChain face(const LatticeChain& c, int i);
LatticeChain degeneracy(const LatticeChain& c, int i);

/// Faces of chain objects: d_0 quotients every term by X_1 (re-presented by
/// adjoining the image of X_1 to the relations), d_i (i >= 1) composes away
/// the i-th term.
SChainObject sface(const SChainObject& x, int i);

// --- group tuples and the lattice-orbit map --------------------------------

/// An m-simplex (g_1, ..., g_m) of the bar construction on the automorphisms
/// of F^n (validated invertible, common ring and rank).
struct GroupTuple {
    std::vector<MatrixF> gs;

    explicit GroupTuple(std::vector<MatrixF> g);
    int length() const { return static_cast<int>(gs.size()); }
};

/// Bar-construction faces: d_0 drops g_1, d_m drops g_m, inner faces
/// multiply adjacent entries; degeneracy s_i inserts an identity at slot i.
GroupTuple bar_face(const GroupTuple& g, int i);
GroupTuple bar_degeneracy(const GroupTuple& g, int i);

/// Faces/degeneracies of lattice tuples: drop or repeat entry i.
LatticeTuple tuple_face(const LatticeTuple& t, int i);
LatticeTuple tuple_degeneracy(const LatticeTuple& t, int i);
bool tuple_equal(const LatticeTuple& a, const LatticeTuple& b);

/// (g_1,...,g_m), L  ->  (L, g_1 L, g_2 g_1 L, ..., g_m ... g_1 L).
/// Commutes with faces away from d_0 and with all degeneracies; the d_0
/// defect is the conjugation witness alpha below.
LatticeTuple l_map(const GroupTuple& g, const Lattice& L);

/// The transport witness: component i is (g_i...g_2) g_1 (g_i...g_2)^{-1};
/// it carries entry i-1 of l_map(d_0 g, L) to entry i-1 of d_0 l_map(g, L).
GroupTuple alpha(const GroupTuple& g);

/// d_0(alpha_g) * alpha_{d_0 g} = alpha_{d_1 g}, componentwise to working
/// precision (exact when the inputs have monomial determinants).
bool cocycle_check(const GroupTuple& g);

// --- index vectors of tuples and the triangular comparison -----------------

/// Component i = rel_index(L_{i-1}, L_i); agrees with the class vector of
/// index_of_chain on nested tuples. On l_map(g, L) the components are
/// -Index(g_i), so component sums telescope to -Index(g_m ... g_1).
std::vector<long> index_of_tuple(const LatticeTuple& t);

/// The same vector computed through the index machinery of diagrams: build
/// the finite sub-poset generated by the tuple under pairwise sup, put the
/// tautological lattice diagram on it, and take pre_index at the tuple
/// entries.
std::vector<long> index_of_tuple_via_diagram(const LatticeTuple& t);

/// The triangular-shape comparison: over the poset of pairs (x,y), x <= y
/// ordered lexicographically, the lattice diagram (x,y) -> L_x and the
/// quotient diagram (x,y) -> L_x/L_0 have equal index vectors at the
/// diagonal basepoints, and their classes differ by a constant.
bool a_n_comparison(const LatticeChain& c);

/// Set-level Segal check for the bar construction: an m-simplex is exactly a
/// string of m composable 1-simplices; verifies the component map is
/// injective on the sample and every recombination assembles to a simplex.
bool b_aut_segal_check(const std::vector<GroupTuple>& sample);

}  // namespace lidx
