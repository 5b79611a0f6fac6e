#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lidx/errors.hpp"

namespace lidx {

/// Finite poset on elements 0..n-1 (n <= 64), stored as the
/// reflexive-transitive closure of a cover list, one bitset row per element.
class Poset {
public:
    Poset(int n, const std::vector<std::pair<int, int>>& relations,
          std::vector<std::string> labels = {});

    int size() const { return n_; }
    bool le(int a, int b) const { return (up_[static_cast<std::size_t>(a)] >> b) & 1; }
    bool lt(int a, int b) const { return a != b && le(a, b); }

    /// E(I): one directed edge per strict comparable pair.
    std::vector<std::pair<int, int>> edges() const;
    /// Covering pairs a < b with nothing strictly between.
    std::vector<std::pair<int, int>> covers() const;
    std::optional<int> final_element() const;
    bool is_minimal(int x) const;
    bool is_maximal(int x) const;

    const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    std::string str() const;

private:
    int n_;
    std::vector<std::uint64_t> up_;
    std::vector<std::string> labels_;
};

/// Finite poset with a unique final element and an ordered tuple of
/// basepoints (repetitions allowed). Basepoints must be minimal unless the
/// relaxed constructor is used (filtered sets with non-minimal basepoints).
class BasedPoset {
public:
    BasedPoset(Poset p, std::vector<int> basepoints);
    static BasedPoset relaxed(Poset p, std::vector<int> basepoints);

    const Poset& poset() const { return poset_; }
    const std::vector<int>& basepoints() const { return base_; }
    int final_element() const { return final_; }
    bool is_basepoint(int x) const;
    std::string str() const;

private:
    BasedPoset(Poset p, std::vector<int> basepoints, bool relax);
    Poset poset_;
    std::vector<int> base_;
    int final_;
};

/// Spanning-tree admissibility: T is a spanning tree of the comparability
/// graph and every vertex pair has a common vertex reachable from both along
/// tree-edge directions (each tree edge oriented by the order).
bool is_admissible_tree(const Poset& I, const std::vector<std::pair<int, int>>& tree);

/// All admissible spanning trees (edge lists sorted), by exhaustive subset
/// enumeration; intended for |I| <= 6.
std::vector<std::vector<std::pair<int, int>>> enumerate_admissible_trees(const Poset& I);

/// A based poset with a chosen admissible tree.
struct FramedPoset {
    BasedPoset based;
    std::vector<std::pair<int, int>> tree;

    FramedPoset(BasedPoset b, std::vector<std::pair<int, int>> t);
};

/// The tree of all edges (x, m) into the final element.
FramedPoset star_tree(const BasedPoset& I);

/// A basepoint-preserving monotone map (f, sigma): basepoint i of the source
/// maps to basepoint sigma(i) of the target.
struct BasedMorphism {
    std::vector<int> f;
    std::vector<int> sigma;

    BasedMorphism(const BasedPoset& src, const BasedPoset& tgt, std::vector<int> f_,
                  std::vector<int> sigma_);
};

// --- generators -----------------------------------------------------------

/// B[k]: nonempty intervals of the ordinal [k] ordered by inclusion;
/// basepoints are the singletons {0},...,{k}.
BasedPoset b_poset(int k);
/// Index of the interval [a,b] in b_poset(k).
int b_interval_index(int k, int a, int b);
/// Element map of the coface B[k-1] -> B[k] induced by the ordinal coface
/// skipping i (0 <= i <= k).
std::vector<int> b_coface(int k, int i);

/// A[n] = {(x,y) : 0 <= x <= y <= n}, ordered lexicographically.
Poset a_poset(int n);
int a_index(int n, int x, int y);
/// A[n] with the (non-minimal) basepoints (0,0),...,(n,n).
BasedPoset a_based(int n);

/// T[n]: n+1 basepoints under a unique maximal point.
BasedPoset t_poset(int n);

// --- functors -------------------------------------------------------------

struct CollapseResult {
    Poset quotient;
    std::vector<int> map;  // element -> class id
    int base_class;        // image of the basepoints
};
/// I^Delta: identify all basepoints.
CollapseResult collapse_basepoints(const BasedPoset& I);

struct GlueResult {
    BasedPoset glued;
    std::vector<int> from_source;  // element of I -> element of I^B
    std::vector<int> from_b;       // element of B[k] -> element of I^B
};
/// I^B: glue B[k] onto I along the basepoints; every non-singleton interval
/// sits below every non-basepoint element of I.
GlueResult glue_b(const BasedPoset& I);

// --- text format ----------------------------------------------------------

/// `n; i<j, i<k` cover list; `poset.str()` inverts it.
Poset parse_poset(std::string_view text);
/// As above with a final line `base: 0,2,2`.
BasedPoset parse_based_poset(std::string_view text);

}  // namespace lidx
