#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lidx/errors.hpp"

namespace lidx {

// --- finite categories ------------------------------------------------------

/// A finite category with an explicit composition table. Morphisms are ids
/// 0..size()-1 with source/target objects; comp[g][f] = g after f, or -1 when
/// the pair is not composable. Factories validate associativity and the
/// identity laws.
struct FiniteCategory {
    int n_obj = 0;
    std::vector<int> src, tgt;                 // per morphism
    std::vector<int> ident;                    // per object, id of its identity
    std::vector<std::vector<int>> comp;        // comp[g][f]
    std::string name;

    int size() const { return static_cast<int>(src.size()); }
    int compose(int g, int f) const;           // throws Error when not composable
    bool is_invertible(int f) const;
    int inverse(int f) const;                  // throws Error when not invertible
    bool is_groupoid() const;
    void validate() const;                     // throws Error on a broken table
};

/// A finite groupoid is a validated category all of whose morphisms are
/// invertible (checked by the factories that promise one).
using FiniteGroupoid = FiniteCategory;

/// The poset 0 <= 1 <= ... <= n viewed as a category.
FiniteCategory ordinal_category(int n);
/// The cyclic group of order k as a one-object groupoid.
FiniteGroupoid cyclic_group_category(int k);
/// Two objects, one isomorphism between them (and the identities).
FiniteGroupoid walking_isomorphism();
/// n objects, identities only.
FiniteCategory discrete_category(int n);
/// n+1 objects with exactly one morphism between any ordered pair; the
/// groupoid freely generated by the chain poset 0 <= ... <= n.
FiniteGroupoid contractible_groupoid(int n);

FiniteCategory product_category(const FiniteCategory& a, const FiniteCategory& b);
/// The wide subcategory of invertible morphisms.
FiniteGroupoid core(const FiniteCategory& c);
/// Presets by name: "[0]".."[3]", "c2", "c3", "walking-iso", "discrete2".
FiniteCategory preset_category(const std::string& name);

/// A functor presented by its object and morphism maps (validated).
struct CategoryFunctor {
    std::vector<int> obj;  // per object of the source
    std::vector<int> mor;  // per morphism of the source
};
void validate_functor(const FiniteCategory& c, const FiniteCategory& d, const CategoryFunctor& f);

// --- truncated simplicial sets ----------------------------------------------

/// A simplicial set stored up to a truncation degree: labelled simplex sets
/// per level with explicit face and degeneracy tables. audit() checks every
/// simplicial identity expressible within the truncation.
class TruncatedSimplicialSet {
public:
    int degree() const { return D_; }
    int size(int m) const;
    const std::string& label(int m, int idx) const;
    /// Index of a label at level m, or -1 when absent.
    int index_of(int m, const std::string& lab) const;
    int face(int m, int i, int idx) const;        // 1 <= m <= D, 0 <= i <= m
    int degeneracy(int m, int i, int idx) const;  // 0 <= m < D, 0 <= i <= m
    void audit() const;

    /// Assembles levels from an enumerator and label-level operator actions;
    /// throws Error when an operator leaves the enumerated sets, TooLarge
    /// when a level exceeds `budget` simplices.
    static TruncatedSimplicialSet build(
        int D, const std::function<std::vector<std::string>(int)>& enumerate,
        const std::function<std::string(int, int, const std::string&)>& face_fn,
        const std::function<std::string(int, int, const std::string&)>& deg_fn,
        long budget = 500000);

private:
    int D_ = 0;
    std::vector<std::vector<std::string>> labels_;
    std::vector<std::map<std::string, int>> index_;
    std::vector<std::vector<std::vector<int>>> faces_;  // [m][i][idx]
    std::vector<std::vector<std::vector<int>>> degs_;   // [m][i][idx]
};

/// Level-wise comparison along a label translation: bijective on every level
/// and commuting with all faces and degeneracies.
bool simplicial_iso_check(const TruncatedSimplicialSet& x, const TruncatedSimplicialSet& y,
                          const std::function<std::string(int, const std::string&)>& map);

/// Nerve truncated at degree D: level m is the set of composable m-chains,
/// labelled "f1,...,fm" by morphism ids (level 0: object ids).
TruncatedSimplicialSet nerve(const FiniteCategory& c, int D);
/// Level-wise map of nerves induced by a functor.
std::string nerve_label_map(const FiniteCategory& c, const CategoryFunctor& f, int m,
                            const std::string& lab);

/// The 0-coskeletal simplicial set on a finite vertex set: level m is the set
/// of (m+1)-tuples of vertices.
TruncatedSimplicialSet codiscrete(const std::vector<std::string>& vertices, int D);
/// Nerve of the groupoid freely generated by the chain 0 <= ... <= n.
TruncatedSimplicialSet delta_prime(int n, int D);
/// The standard m-simplex (nerve of the chain poset).
TruncatedSimplicialSet standard_simplex(int n, int D);
/// The simplicial circle (interval with endpoints identified): one vertex,
/// one non-degenerate edge, nothing above. Valid simplicial set, not Segal.
TruncatedSimplicialSet circle(int D);
/// Level-wise product.
TruncatedSimplicialSet product_simplicial(const TruncatedSimplicialSet& a,
                                          const TruncatedSimplicialSet& b);

// --- truncated bisimplicial sets --------------------------------------------

class TruncatedBisimplicialSet {
public:
    int degree_h() const { return D1_; }
    int degree_v() const { return D2_; }
    int size(int m, int n) const;
    const std::string& label(int m, int n, int idx) const;
    int index_of(int m, int n, const std::string& lab) const;
    int hface(int m, int n, int i, int idx) const;  // to (m-1, n)
    int vface(int m, int n, int j, int idx) const;  // to (m, n-1)
    int hdeg(int m, int n, int i, int idx) const;
    int vdeg(int m, int n, int j, int idx) const;
    void audit() const;  // rows and columns simplicial, directions commute

    static TruncatedBisimplicialSet build(
        int D1, int D2, const std::function<std::vector<std::string>(int, int)>& enumerate,
        const std::function<std::string(int, int, int, const std::string&)>& hface_fn,
        const std::function<std::string(int, int, int, const std::string&)>& vface_fn,
        const std::function<std::string(int, int, int, const std::string&)>& hdeg_fn,
        const std::function<std::string(int, int, int, const std::string&)>& vdeg_fn,
        long budget = 500000);

private:
    int D1_ = 0, D2_ = 0;
    std::vector<std::vector<std::vector<std::string>>> labels_;  // [m][n]
    std::vector<std::vector<std::map<std::string, int>>> index_;
    std::vector<std::vector<std::vector<std::vector<int>>>> hfaces_, vfaces_, hdegs_, vdegs_;
};

bool bisimplicial_iso_check(const TruncatedBisimplicialSet& x, const TruncatedBisimplicialSet& y,
                            const std::function<std::string(int, int, const std::string&)>& map);

/// Right adjoint on nerves of the product-with-free-groupoid functor:
/// cell (m,n) is a functor from (chain poset of length m) x (contractible
/// groupoid on n+1 objects) into c, enumerated by constraint propagation over
/// generator assignments. Stored as an object grid with horizontal and
/// vertical generator matrices; operators delete/duplicate rows and columns.
TruncatedBisimplicialSet t_pling(const FiniteCategory& c, int D1, int D2, long budget = 500000);

/// The complete-Segal-style bisimplicial set of a category, computed
/// independently: cell (m,n) is an m-chain of morphisms together with an
/// n-chain of natural isomorphisms out of it (enumerated by checking the
/// naturality squares directly).
TruncatedBisimplicialSet b_css(const FiniteCategory& c, int D1, int D2, long budget = 500000);

/// Restriction to row 0 (axis = 1) or column 0 (axis = 2).
TruncatedSimplicialSet iota_star(int axis, const TruncatedBisimplicialSet& y);
/// Constant extension in the other direction (axis as above).
TruncatedBisimplicialSet p_star(int axis, const TruncatedSimplicialSet& x, int other_degree);

/// The canonical translation from a b_css cell label to the t_pling grid
/// label over the same category.
std::string css_to_grid_label(const FiniteCategory& c, int m, int n, const std::string& lab);
/// Image of a t_pling grid label under a functor.
std::string grid_label_map(const CategoryFunctor& f, const std::string& lab);

struct LemmaReport {
    bool ok = false;
    std::vector<long> level_counts;  // sizes of the compared levels
    std::string detail;              // first failure, if any
};

/// Level-wise bijections "nerve = row 0 of the grid object" and
/// "nerve of the core = column 0 of the grid object", verified with all
/// operators up to degree D.
LemmaReport lemma_pre_check(const FiniteCategory& c, int D);
/// Level-wise agreement of b_css and t_pling on the rectangle
/// (D/2) x (D/2), so all cells of total degree <= D are compared.
LemmaReport lemma_a1_check(const FiniteCategory& c, int D);

// --- Segal / coskeletal checkers --------------------------------------------

struct SegalReport {
    bool ok = true;
    std::vector<int> levels;   // levels checked (2..up_to)
    std::vector<bool> verdict; // per level
};
/// Checks the spine map X_n -> X_1 x_{X_0} ... x_{X_0} X_1 is bijective.
SegalReport segal_check(const TruncatedSimplicialSet& x, int up_to);
/// Checks X_m -> (matching object of the k-skeleton data) is bijective for
/// every stored m > k.
bool coskeletal_check(const TruncatedSimplicialSet& x, int k, long budget = 500000);

// --- Grothendieck construction ----------------------------------------------

/// A functor from a finite groupoid to truncated simplicial sets: one value
/// per object, one level-wise index translation per morphism.
struct SimplicialFunctor {
    FiniteGroupoid base;
    std::vector<TruncatedSimplicialSet> value;            // per object
    std::vector<std::vector<std::vector<int>>> action;    // [morphism][level][idx]
};
/// Identities act as identity, actions compose, and every action is a
/// simplicial map; throws Error otherwise.
void validate_simplicial_functor(const SimplicialFunctor& f);

/// Total simplicial set: an m-simplex is a chain x_0 -> ... -> x_m in the
/// base with an m-simplex of value[x_0]; the 0th face pushes forward along
/// the first morphism, the other operators act on both coordinates.
TruncatedSimplicialSet grothendieck(const SimplicialFunctor& f);

/// The constant functor at x over a groupoid (all actions identity).
SimplicialFunctor constant_functor(const FiniteGroupoid& g, const TruncatedSimplicialSet& x);

}  // namespace lidx
