#pragma once

#include <map>

#include "lidx/gen.hpp"
#include "lidx/lattice.hpp"
#include "lidx/poset.hpp"
#include "lidx/torsion.hpp"

namespace lidx {

enum class DiagramFlavor { Torsion, Lattice };

/// A poset-shaped diagram of admissible monics: one object per element and
/// one monic per cover relation, composites derived along cover paths.
/// Torsion-valued diagrams carry explicit matrices on generators;
/// lattice-valued diagrams are monotone lattice assignments whose arrows are
/// the inclusions. Validation (in the factories) checks every arrow is an
/// admissible monic and that the subquotient invariants of a composite do
/// not depend on the chosen cover path.
class AdmissibleDiagram {
public:
    /// `arrows` is parallel to `shape.covers()`.
    static AdmissibleDiagram torsion_valued(Poset shape, std::vector<TorsionModule> values,
                                            std::vector<MatrixF> arrows);
    static AdmissibleDiagram lattice_valued(Poset shape, std::vector<Lattice> values);

    DiagramFlavor flavor() const { return flavor_; }
    const Poset& shape() const { return shape_; }
    const TorsionModule& module_at(int x) const;
    const Lattice& lattice_at(int x) const;
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    const MatrixF& arrow(int cover_index) const;

    /// Composite matrix along the canonical cover path x -> ... -> y
    /// (torsion flavor; identity on generators when x == y).
    MatrixF composite(int x, int y) const;
    /// Elementary divisor exponents of the cokernel of F(x) -> F(y), x <= y.
    std::vector<long> coker_divisors(int x, int y) const;
    long coker_length(int x, int y) const;
    /// Length of F(x) (torsion), or the index class of F(x) relative to the
    /// standard lattice (lattice flavor).
    long class_at(int x) const;

    std::string str() const;

private:
    AdmissibleDiagram() = default;
    void validate() const;

    DiagramFlavor flavor_ = DiagramFlavor::Torsion;
    Poset shape_{1, {}};
    std::vector<TorsionModule> modules_;
    std::vector<Lattice> lattices_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<MatrixF> arrows_;
    std::map<std::pair<int, int>, int> cover_index_;
};

/// Object-wise direct sum over the same shape; presentations and arrows are
/// block sums, so the result is again a valid diagram.
AdmissibleDiagram diagram_direct_sum(const AdmissibleDiagram& a, const AdmissibleDiagram& b);

/// Restriction of F along an injective monotone inclusion of a sub-shape
/// (incl: sub element -> F element); sub-cover arrows are composites in F.
AdmissibleDiagram restrict_diagram(const AdmissibleDiagram& F, const Poset& sub,
                                   const std::vector<int>& incl);

// --- splitting and index vectors ------------------------------------------

/// The class decomposition of a diagram attached to an admissible tree: the
/// class at the first basepoint plus one cokernel class per tree edge.
struct SplitClass {
    long base;
    std::vector<long> edges;  // parallel to the framed tree's edge list
};
SplitClass phi_t(const AdmissibleDiagram& F, const FramedPoset& framed);

/// Index vector of F at the basepoints (x_0,...,x_k): component i is
/// length coker(F(x_{i-1}) -> F(m)) - length coker(F(x_i) -> F(m)) for the
/// final element m.
std::vector<long> pre_index(const AdmissibleDiagram& F, const BasedPoset& based);
/// The object-wise form (torsion flavor): component i is
/// length F(x_i) - length F(x_{i-1}); must agree with pre_index.
std::vector<long> pre_index_objectwise(const AdmissibleDiagram& F, const BasedPoset& based);

/// Index vector computed through the splitting of an admissible tree whose
/// image under basepoint collapapse is again an admissible tree: difference
/// of consecutive basepoint-edge classes. Must equal pre_index.
/// Throws TreeNotCollapsible when the collapsed image is not a tree or a
/// basepoint does not have exactly one incident tree edge.
std::vector<long> idx_via_splitting(const AdmissibleDiagram& F, const FramedPoset& framed);

/// Basepoint-bijective embedding invariance: f maps `based` into `based_big`
/// (basepoint i to basepoint sigma(i)), F_big restricts to F along f; returns
/// whether the index vectors agree (permuted by sigma).
bool rigidity_check(const AdmissibleDiagram& F, const BasedPoset& based, const std::vector<int>& f,
                    const std::vector<int>& sigma, const AdmissibleDiagram& F_big,
                    const BasedPoset& based_big);

// --- section / contraction ------------------------------------------------

/// Combinatorial hypotheses for contracting a chain of basepoints
/// x_0 <= ... <= x_n of S to the single basepoint of S' (phi bijective on the
/// complement):
///   (a) the basepoints form a chain;
///   (b) anything below some x_i is an earlier basepoint, and any
///       non-basepoint above some x_i is above x_n (so the section sending
///       the contracted point to x_n is monotone);
///   (c) some non-basepoint element dominates every basepoint;
///   (d) phi is a surjective monotone map, constant on the basepoints,
///       restricting to an order isomorphism on the complement.
/// Throws ConditionViolated('a'|'b'|'c'|'d').
void check_contraction_conditions(const BasedPoset& S, const BasedPoset& Sp,
                                  const std::vector<int>& phi);

struct SectionReport {
    int cases = 0;
    bool monic_ok = true;      // section-then-pullback compares into each diagram by monics
    bool roundtrip_ok = true;  // pullback-then-section is the identity on invariants
};
/// Checks the conditions above, then audits sampled diagrams: for X over S,
/// the comparison of the contracted-and-pulled-back diagram with X is
/// object-wise an admissible monic; for Z over S', the round trip preserves
/// all invariants.
SectionReport section_contraction_check(const BasedPoset& S, const BasedPoset& Sp,
                                        const std::vector<int>& phi,
                                        const std::vector<AdmissibleDiagram>& over_s,
                                        const std::vector<AdmissibleDiagram>& over_sp);

// --- constructions and generators -----------------------------------------

/// Lattice-valued diagram from a monotone assignment (validated).
AdmissibleDiagram tautological_lattice_diagram(Poset shape, std::vector<Lattice> values);
/// Torsion-valued diagram x -> L_x / bottom for a monotone assignment and a
/// common sublattice, arrows induced by the inclusions (path independence is
/// automatic: composites are basis-change matrices).
AdmissibleDiagram tautological_torsion_diagram(const Poset& shape,
                                               const std::vector<Lattice>& values,
                                               const Lattice& bottom);

/// Diagram over b_poset(k) of a chain of monics X_0 -> ... -> X_k: the
/// interval [i,j] carries X_j; arrows restrict the chain.
AdmissibleDiagram chain_diagram_b(const std::vector<ModuleMap>& chain);

/// Extension of F along glue_b(I): the glued interval [i,j] carries the
/// value at basepoint j; `chain_maps[i]` is a monic F(x_i) -> F(x_{i+1})
/// splicing the basepoint values into a chain. Covers from glued intervals
/// into old non-basepoints y require x_k <= y (throws NotAdmissible
/// otherwise).
AdmissibleDiagram extend_along_glue(const AdmissibleDiagram& F, const BasedPoset& based,
                                    const GlueResult& g, const std::vector<MatrixF>& chain_maps);

/// Monotone lattice assignment over an arbitrary shape.
std::vector<Lattice> random_monotone_lattices(Rng& rng, const RingConfig& cfg, const Poset& shape,
                                              int n, long bound);
AdmissibleDiagram random_lattice_diagram(Rng& rng, const RingConfig& cfg, const Poset& shape,
                                         int n, long bound);
AdmissibleDiagram random_torsion_diagram(Rng& rng, const RingConfig& cfg, const Poset& shape,
                                         int n, long bound);
/// Chain of monics between torsion modules (lengths ascending), usable with
/// chain_diagram_b.
std::vector<ModuleMap> random_torsion_chain(Rng& rng, const RingConfig& cfg, int n, int k,
                                            long bound);

}  // namespace lidx
