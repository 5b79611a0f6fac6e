#include "lidx/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace lidx {

namespace {

MatrixF block_diag(const MatrixF& a, const MatrixF& b) {
    MatrixF out(a.config(), a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return out;
}

bool same_shape(const Poset& a, const Poset& b) {
    if (a.size() != b.size()) return false;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            if (a.le(i, j) != b.le(i, j)) return false;
    return true;
}

void require_shape(const Poset& a, const Poset& b) {
    if (!same_shape(a, b)) throw Error("diagram shape does not match the given poset");
}

}  // namespace

AdmissibleDiagram AdmissibleDiagram::torsion_valued(Poset shape, std::vector<TorsionModule> values,
                                                    std::vector<MatrixF> arrows) {
    AdmissibleDiagram d;
    d.flavor_ = DiagramFlavor::Torsion;
    d.covers_ = shape.covers();
    d.shape_ = std::move(shape);
    d.modules_ = std::move(values);
    d.arrows_ = std::move(arrows);
    if (static_cast<int>(d.modules_.size()) != d.shape_.size())
        throw Error("diagram needs one value per element");
    if (d.arrows_.size() != d.covers_.size()) throw Error("diagram needs one arrow per cover");
    for (int i = 0; i < static_cast<int>(d.covers_.size()); ++i)
        d.cover_index_[d.covers_[static_cast<std::size_t>(i)]] = i;
    d.validate();
    return d;
}

AdmissibleDiagram AdmissibleDiagram::lattice_valued(Poset shape, std::vector<Lattice> values) {
    AdmissibleDiagram d;
    d.flavor_ = DiagramFlavor::Lattice;
    d.covers_ = shape.covers();
    d.shape_ = std::move(shape);
    d.lattices_ = std::move(values);
    if (static_cast<int>(d.lattices_.size()) != d.shape_.size())
        throw Error("diagram needs one value per element");
    for (int i = 0; i < static_cast<int>(d.covers_.size()); ++i)
        d.cover_index_[d.covers_[static_cast<std::size_t>(i)]] = i;
    d.validate();
    return d;
}

const TorsionModule& AdmissibleDiagram::module_at(int x) const {
    if (flavor_ != DiagramFlavor::Torsion) throw Error("not a torsion-valued diagram");
    return modules_[static_cast<std::size_t>(x)];
}

const Lattice& AdmissibleDiagram::lattice_at(int x) const {
    if (flavor_ != DiagramFlavor::Lattice) throw Error("not a lattice-valued diagram");
    return lattices_[static_cast<std::size_t>(x)];
}

const MatrixF& AdmissibleDiagram::arrow(int cover_index) const {
    return arrows_[static_cast<std::size_t>(cover_index)];
}

MatrixF AdmissibleDiagram::composite(int x, int y) const {
    if (flavor_ != DiagramFlavor::Torsion) throw Error("composites need a torsion-valued diagram");
    if (!shape_.le(x, y)) throw Error("composite requires comparable elements");
    MatrixF M = MatrixF::identity(modules_[static_cast<std::size_t>(x)].config(),
                                  modules_[static_cast<std::size_t>(x)].generators());
    int cur = x;
    while (cur != y) {
        int next = -1;
        for (int z = 0; z < shape_.size(); ++z) {
            if (cover_index_.count({cur, z}) && shape_.le(z, y)) {
                next = z;
                break;
            }
        }
        if (next < 0) throw Error("no cover path between comparable elements");
        M = arrows_[static_cast<std::size_t>(cover_index_.at({cur, next}))].mul(M);
        cur = next;
    }
    return M;
}

std::vector<long> AdmissibleDiagram::coker_divisors(int x, int y) const {
    if (!shape_.le(x, y)) throw Error("cokernel requires comparable elements");
    if (flavor_ == DiagramFlavor::Lattice)
        return quotient_exponents(lattices_[static_cast<std::size_t>(x)],
                                  lattices_[static_cast<std::size_t>(y)]);
    if (x == y) return {};
    ModuleMap f(modules_[static_cast<std::size_t>(x)], modules_[static_cast<std::size_t>(y)],
                composite(x, y));
    return cokernel(f).exponents();
}

long AdmissibleDiagram::coker_length(int x, int y) const {
    auto d = coker_divisors(x, y);
    return std::accumulate(d.begin(), d.end(), 0L);
}

long AdmissibleDiagram::class_at(int x) const {
    if (flavor_ == DiagramFlavor::Torsion) return modules_[static_cast<std::size_t>(x)].length();
    const Lattice& L = lattices_[static_cast<std::size_t>(x)];
    return rel_index(Lattice::standard(L.config(), L.rank()), L);
}

void AdmissibleDiagram::validate() const {
    if (flavor_ == DiagramFlavor::Lattice) {
        for (const auto& [a, b] : covers_) {
            if (!leq(lattices_[static_cast<std::size_t>(a)], lattices_[static_cast<std::size_t>(b)]))
                throw NotAdmissible("cover " + std::to_string(a) + "<" + std::to_string(b) +
                                    " is not a lattice inclusion");
        }
        return;
    }
    for (std::size_t i = 0; i < covers_.size(); ++i) {
        const auto& [a, b] = covers_[i];
        try {
            ModuleMap f(modules_[static_cast<std::size_t>(a)], modules_[static_cast<std::size_t>(b)],
                        arrows_[i]);
            if (!is_admissible_monic(f).monic)
                throw NotAdmissible("cover " + std::to_string(a) + "<" + std::to_string(b) +
                                    " is not monic");
        } catch (const IllFormedMap&) {
            throw NotAdmissible("cover " + std::to_string(a) + "<" + std::to_string(b) +
                                " does not define a module map");
        }
    }
    // path independence of subquotient invariants, all cover paths (capped)
    for (int x = 0; x < shape_.size(); ++x)
        for (int y = 0; y < shape_.size(); ++y) {
            if (!shape_.lt(x, y)) continue;
            std::optional<std::vector<long>> expected;
            int budget = 64;
            bool ok = true;
            // DFS over cover paths from x to y, composing as we go
            std::vector<std::pair<int, MatrixF>> stack;
            stack.emplace_back(x, MatrixF::identity(modules_[static_cast<std::size_t>(x)].config(),
                                                    modules_[static_cast<std::size_t>(x)].generators()));
            while (!stack.empty() && budget > 0 && ok) {
                auto [cur, M] = stack.back();
                stack.pop_back();
                if (cur == y) {
                    --budget;
                    ModuleMap f(modules_[static_cast<std::size_t>(x)],
                                modules_[static_cast<std::size_t>(y)], M);
                    auto div = cokernel(f).exponents();
                    if (!expected)
                        expected = div;
                    else if (*expected != div)
                        ok = false;
                    continue;
                }
                for (int z = 0; z < shape_.size(); ++z)
                    if (cover_index_.count({cur, z}) && shape_.le(z, y))
                        stack.emplace_back(
                            z, arrows_[static_cast<std::size_t>(cover_index_.at({cur, z}))].mul(M));
            }
            if (!ok)
                throw NotAdmissible("paths " + std::to_string(x) + " -> " + std::to_string(y) +
                                    " have different subquotient invariants");
        }
}

std::string AdmissibleDiagram::str() const {
    std::ostringstream os;
    os << shape_.str() << "\n";
    for (int x = 0; x < shape_.size(); ++x) {
        os << x << ": ";
        if (flavor_ == DiagramFlavor::Torsion)
            os << modules_[static_cast<std::size_t>(x)].str();
        else
            os << lattices_[static_cast<std::size_t>(x)].str();
        os << "\n";
    }
    return os.str();
}

AdmissibleDiagram diagram_direct_sum(const AdmissibleDiagram& a, const AdmissibleDiagram& b) {
    if (a.flavor() != DiagramFlavor::Torsion || b.flavor() != DiagramFlavor::Torsion)
        throw Error("diagram direct sums are torsion-valued");
    require_shape(a.shape(), b.shape());
    std::vector<TorsionModule> values;
    for (int x = 0; x < a.shape().size(); ++x)
        values.push_back(TorsionModule::from_presentation(
            block_diag(a.module_at(x).presentation(), b.module_at(x).presentation())));
    std::vector<MatrixF> arrows;
    for (std::size_t i = 0; i < a.covers().size(); ++i)
        arrows.push_back(block_diag(a.arrow(static_cast<int>(i)), b.arrow(static_cast<int>(i))));
    return AdmissibleDiagram::torsion_valued(a.shape(), std::move(values), std::move(arrows));
}

AdmissibleDiagram restrict_diagram(const AdmissibleDiagram& F, const Poset& sub,
                                   const std::vector<int>& incl) {
    if (static_cast<int>(incl.size()) != sub.size()) throw Error("inclusion size mismatch");
    for (int a = 0; a < sub.size(); ++a)
        for (int b = 0; b < sub.size(); ++b) {
            if (a != b && incl[static_cast<std::size_t>(a)] == incl[static_cast<std::size_t>(b)])
                throw Error("inclusion not injective");
            if (sub.le(a, b) && !F.shape().le(incl[static_cast<std::size_t>(a)],
                                             incl[static_cast<std::size_t>(b)]))
                throw Error("inclusion not monotone");
        }
    if (F.flavor() == DiagramFlavor::Lattice) {
        std::vector<Lattice> values;
        for (int x = 0; x < sub.size(); ++x)
            values.push_back(F.lattice_at(incl[static_cast<std::size_t>(x)]));
        return AdmissibleDiagram::lattice_valued(sub, std::move(values));
    }
    std::vector<TorsionModule> values;
    for (int x = 0; x < sub.size(); ++x)
        values.push_back(F.module_at(incl[static_cast<std::size_t>(x)]));
    std::vector<MatrixF> arrows;
    for (const auto& [a, b] : sub.covers())
        arrows.push_back(
            F.composite(incl[static_cast<std::size_t>(a)], incl[static_cast<std::size_t>(b)]));
    return AdmissibleDiagram::torsion_valued(sub, std::move(values), std::move(arrows));
}

SplitClass phi_t(const AdmissibleDiagram& F, const FramedPoset& framed) {
    require_shape(F.shape(), framed.based.poset());
    SplitClass out;
    out.base = F.class_at(framed.based.basepoints().front());
    for (const auto& [a, b] : framed.tree) out.edges.push_back(F.coker_length(a, b));
    return out;
}

std::vector<long> pre_index(const AdmissibleDiagram& F, const BasedPoset& based) {
    require_shape(F.shape(), based.poset());
    int m = based.final_element();
    const auto& bp = based.basepoints();
    std::vector<long> out;
    for (std::size_t i = 1; i < bp.size(); ++i)
        out.push_back(F.coker_length(bp[i - 1], m) - F.coker_length(bp[i], m));
    return out;
}

std::vector<long> pre_index_objectwise(const AdmissibleDiagram& F, const BasedPoset& based) {
    require_shape(F.shape(), based.poset());
    const auto& bp = based.basepoints();
    std::vector<long> out;
    for (std::size_t i = 1; i < bp.size(); ++i)
        out.push_back(F.class_at(bp[i]) - F.class_at(bp[i - 1]));
    return out;
}

std::vector<long> idx_via_splitting(const AdmissibleDiagram& F, const FramedPoset& framed) {
    require_shape(F.shape(), framed.based.poset());
    const auto& bp = framed.based.basepoints();

    // each basepoint vertex must carry exactly one tree edge, and no tree
    // edge may join two basepoints (it would collapse to a loop)
    std::map<int, std::pair<int, int>> bp_edge;
    for (int v : bp) {
        std::optional<std::pair<int, int>> found;
        for (const auto& e : framed.tree)
            if (e.first == v || e.second == v) {
                if (found) throw TreeNotCollapsible("basepoint with several tree edges");
                found = e;
            }
        if (!found) throw TreeNotCollapsible("basepoint without a tree edge");
        if (framed.based.is_basepoint(found->first) && framed.based.is_basepoint(found->second))
            throw TreeNotCollapsible("tree edge collapses to a loop");
        bp_edge[v] = *found;
    }
    CollapseResult collapse = [&] {
        try {
            return collapse_basepoints(framed.based);
        } catch (const NotAPoset&) {
            throw TreeNotCollapsible("basepoint collapse is not a poset");
        }
    }();
    // the collapsed image must again be an admissible tree
    std::set<std::pair<int, int>> collapsed;
    for (const auto& [a, b] : framed.tree) {
        int ca = collapse.map[static_cast<std::size_t>(a)];
        int cb = collapse.map[static_cast<std::size_t>(b)];
        if (ca == cb) throw TreeNotCollapsible("tree edge collapses to a loop");
        collapsed.insert({ca, cb});
    }
    std::vector<std::pair<int, int>> cedges(collapsed.begin(), collapsed.end());
    if (!is_admissible_tree(collapse.quotient, cedges))
        throw TreeNotCollapsible("collapsed image is not an admissible tree");

    std::vector<long> classes;
    for (int v : bp) {
        const auto& [a, b] = bp_edge.at(v);
        classes.push_back(F.coker_length(a, b));
    }
    std::vector<long> out;
    for (std::size_t i = 1; i < classes.size(); ++i) out.push_back(classes[i - 1] - classes[i]);
    return out;
}

bool rigidity_check(const AdmissibleDiagram& F, const BasedPoset& based, const std::vector<int>& f,
                    const std::vector<int>& sigma, const AdmissibleDiagram& F_big,
                    const BasedPoset& based_big) {
    require_shape(F.shape(), based.poset());
    require_shape(F_big.shape(), based_big.poset());
    BasedMorphism iota(based, based_big, f, sigma);  // validates monotonicity + tracking
    (void)iota;
    for (int a = 0; a < based.poset().size(); ++a)
        for (int b = a + 1; b < based.poset().size(); ++b)
            if (f[static_cast<std::size_t>(a)] == f[static_cast<std::size_t>(b)])
                throw Error("rigidity embedding must be injective");
    // F must be the restriction of F_big along f
    for (int x = 0; x < based.poset().size(); ++x) {
        int y = f[static_cast<std::size_t>(x)];
        if (F.flavor() == DiagramFlavor::Torsion) {
            if (!F.module_at(x).same_divisors(F_big.module_at(y)))
                throw Error("big diagram does not restrict to the small one");
        } else if (!F.lattice_at(x).equals(F_big.lattice_at(y))) {
            throw Error("big diagram does not restrict to the small one");
        }
    }
    // compare index vectors with the big basepoints re-listed in the order
    // induced by the embedding
    std::vector<int> big_bps;
    for (int x : based.basepoints()) big_bps.push_back(f[static_cast<std::size_t>(x)]);
    auto big_based = BasedPoset::relaxed(based_big.poset(), big_bps);
    return pre_index(F, based) == pre_index(F_big, big_based);
}

namespace {

// the section of the contraction: the contracted point goes to the last
// basepoint, everything else to its unique preimage
std::vector<int> section_of(const BasedPoset& S, const BasedPoset& Sp,
                            const std::vector<int>& phi) {
    std::vector<int> s(static_cast<std::size_t>(Sp.poset().size()), -1);
    int xn = S.basepoints().back();
    for (int a = 0; a < S.poset().size(); ++a) {
        if (S.is_basepoint(a)) continue;
        s[static_cast<std::size_t>(phi[static_cast<std::size_t>(a)])] = a;
    }
    s[static_cast<std::size_t>(phi[static_cast<std::size_t>(xn)])] = xn;
    return s;
}

}  // namespace

void check_contraction_conditions(const BasedPoset& S, const BasedPoset& Sp,
                                  const std::vector<int>& phi) {
    const auto& bp = S.basepoints();
    const Poset& P = S.poset();
    // (a) the basepoints form a chain
    for (std::size_t i = 1; i < bp.size(); ++i)
        if (!P.le(bp[i - 1], bp[i])) throw ConditionViolated('a');
    // (b) below a basepoint: only earlier basepoints; above a basepoint:
    // non-basepoints must dominate the last basepoint
    for (int s = 0; s < P.size(); ++s) {
        for (std::size_t i = 0; i < bp.size(); ++i) {
            if (!P.le(s, bp[i])) continue;
            bool earlier = false;
            for (std::size_t j = 0; j <= i; ++j) earlier = earlier || s == bp[j];
            if (!earlier) throw ConditionViolated('b');
        }
        if (!S.is_basepoint(s)) {
            bool above_some = false;
            for (int b : bp) above_some = above_some || P.le(b, s);
            if (above_some && !P.le(bp.back(), s)) throw ConditionViolated('b');
        }
    }
    // (c) a common upper bound for the basepoints outside the contracted
    // chain (with (a), the chain itself always bounds it, so the substance
    // is a bound that survives the contraction)
    bool bounded = false;
    for (int y = 0; y < P.size() && !bounded; ++y) {
        if (S.is_basepoint(y)) continue;
        bool all = true;
        for (int b : bp) all = all && P.le(b, y);
        bounded = all;
    }
    if (!bounded) throw ConditionViolated('c');
    // (d) phi contracts exactly the basepoints and is an order isomorphism on
    // the complement
    if (static_cast<int>(phi.size()) != P.size()) throw ConditionViolated('d');
    const Poset& Q = Sp.poset();
    for (int v : phi)
        if (v < 0 || v >= Q.size()) throw ConditionViolated('d');
    int x = phi[static_cast<std::size_t>(bp.front())];
    for (int b : bp)
        if (phi[static_cast<std::size_t>(b)] != x) throw ConditionViolated('d');
    for (int b : Sp.basepoints())
        if (b != x) throw ConditionViolated('d');
    std::vector<int> hits(static_cast<std::size_t>(Q.size()), 0);
    for (int a = 0; a < P.size(); ++a) {
        int v = phi[static_cast<std::size_t>(a)];
        if (!S.is_basepoint(a)) {
            if (v == x) throw ConditionViolated('d');
            if (hits[static_cast<std::size_t>(v)]++) throw ConditionViolated('d');
        }
        for (int b = 0; b < P.size(); ++b)
            if (P.le(a, b) && !Q.le(v, phi[static_cast<std::size_t>(b)]))
                throw ConditionViolated('d');
    }
    hits[static_cast<std::size_t>(x)]++;
    for (int q = 0; q < Q.size(); ++q)
        if (!hits[static_cast<std::size_t>(q)]) throw ConditionViolated('d');
    for (int a = 0; a < P.size(); ++a)
        for (int b = 0; b < P.size(); ++b) {
            if (S.is_basepoint(a) || S.is_basepoint(b)) continue;
            if (Q.le(phi[static_cast<std::size_t>(a)], phi[static_cast<std::size_t>(b)]) &&
                !P.le(a, b))
                throw ConditionViolated('d');
        }
}

SectionReport section_contraction_check(const BasedPoset& S, const BasedPoset& Sp,
                                        const std::vector<int>& phi,
                                        const std::vector<AdmissibleDiagram>& over_s,
                                        const std::vector<AdmissibleDiagram>& over_sp) {
    check_contraction_conditions(S, Sp, phi);
    auto s = section_of(S, Sp, phi);
    int xn = S.basepoints().back();
    SectionReport rep;
    for (const AdmissibleDiagram& X : over_s) {
        require_shape(X.shape(), S.poset());
        ++rep.cases;
        // the contract-then-section composite replaces every basepoint value
        // by the value at the last basepoint; the comparison with X must be
        // an admissible monic there (and the identity elsewhere)
        for (int v : S.basepoints()) {
            if (v == xn) continue;
            bool ok;
            if (X.flavor() == DiagramFlavor::Torsion) {
                ModuleMap cmp(X.module_at(v), X.module_at(xn), X.composite(v, xn));
                ok = is_admissible_monic(cmp).monic;
            } else {
                ok = leq(X.lattice_at(v), X.lattice_at(xn));
            }
            rep.monic_ok = rep.monic_ok && ok;
        }
    }
    for (const AdmissibleDiagram& Z : over_sp) {
        require_shape(Z.shape(), Sp.poset());
        ++rep.cases;
        // pull back along phi (a valid diagram over S), then apply the
        // section: the round trip must preserve every value
        if (Z.flavor() == DiagramFlavor::Torsion) {
            std::vector<TorsionModule> vals;
            for (int a = 0; a < S.poset().size(); ++a)
                vals.push_back(Z.module_at(phi[static_cast<std::size_t>(a)]));
            std::vector<MatrixF> arrs;
            for (const auto& [a, b] : S.poset().covers())
                arrs.push_back(Z.composite(phi[static_cast<std::size_t>(a)],
                                           phi[static_cast<std::size_t>(b)]));
            auto pulled = AdmissibleDiagram::torsion_valued(S.poset(), vals, arrs);
            for (int q = 0; q < Sp.poset().size(); ++q)
                rep.roundtrip_ok =
                    rep.roundtrip_ok &&
                    pulled.module_at(s[static_cast<std::size_t>(q)]).same_divisors(Z.module_at(q));
        } else {
            for (int q = 0; q < Sp.poset().size(); ++q) {
                int back = phi[static_cast<std::size_t>(s[static_cast<std::size_t>(q)])];
                rep.roundtrip_ok = rep.roundtrip_ok && Z.lattice_at(back).equals(Z.lattice_at(q));
            }
        }
    }
    return rep;
}

AdmissibleDiagram tautological_lattice_diagram(Poset shape, std::vector<Lattice> values) {
    return AdmissibleDiagram::lattice_valued(std::move(shape), std::move(values));
}

AdmissibleDiagram tautological_torsion_diagram(const Poset& shape,
                                               const std::vector<Lattice>& values,
                                               const Lattice& bottom) {
    std::vector<MatrixF> inv_bases;
    std::vector<TorsionModule> modules;
    for (const Lattice& L : values) {
        if (!leq(bottom, L)) throw NotAdmissible("bottom lattice is not contained in a value");
        MatrixF inv = L.basis().inverse();
        modules.push_back(TorsionModule::from_presentation(inv.mul(bottom.basis())));
        inv_bases.push_back(std::move(inv));
    }
    std::vector<MatrixF> arrows;
    for (const auto& [a, b] : shape.covers())
        arrows.push_back(inv_bases[static_cast<std::size_t>(b)].mul(
            values[static_cast<std::size_t>(a)].basis()));
    return AdmissibleDiagram::torsion_valued(shape, std::move(modules), std::move(arrows));
}

AdmissibleDiagram chain_diagram_b(const std::vector<ModuleMap>& chain) {
    if (chain.empty()) throw Error("chain diagram needs at least one map");
    int k = static_cast<int>(chain.size());
    std::vector<TorsionModule> X;
    X.push_back(chain.front().source);
    for (const ModuleMap& f : chain) X.push_back(f.target);
    const RingConfig& cfg = X.front().config();
    // generator-level composite X_i -> X_j
    auto chain_mat = [&](int i, int j) {
        MatrixF M = MatrixF::identity(cfg, X[static_cast<std::size_t>(i)].generators());
        for (int l = i; l < j; ++l) M = chain[static_cast<std::size_t>(l)].matrix.mul(M);
        return M;
    };
    auto based = b_poset(k);
    const Poset& P = based.poset();
    // decode element -> interval [a,b]
    std::vector<std::pair<int, int>> interval(static_cast<std::size_t>(P.size()));
    for (int a = 0; a <= k; ++a)
        for (int b = a; b <= k; ++b) interval[static_cast<std::size_t>(b_interval_index(k, a, b))] = {a, b};
    std::vector<TorsionModule> values;
    for (int e = 0; e < P.size(); ++e)
        values.push_back(X[static_cast<std::size_t>(interval[static_cast<std::size_t>(e)].second)]);
    std::vector<MatrixF> arrows;
    for (const auto& [u, v] : P.covers())
        arrows.push_back(chain_mat(interval[static_cast<std::size_t>(u)].second,
                                   interval[static_cast<std::size_t>(v)].second));
    return AdmissibleDiagram::torsion_valued(P, std::move(values), std::move(arrows));
}

AdmissibleDiagram extend_along_glue(const AdmissibleDiagram& F, const BasedPoset& based,
                                    const GlueResult& g, const std::vector<MatrixF>& chain_maps) {
    require_shape(F.shape(), based.poset());
    const auto& bp = based.basepoints();
    int k = static_cast<int>(bp.size()) - 1;
    if (static_cast<int>(chain_maps.size()) != k) throw Error("need one chain map per basepoint step");
    const RingConfig& cfg = F.module_at(bp.front()).config();
    auto chain_mat = [&](int i, int j) {
        MatrixF M = MatrixF::identity(cfg, F.module_at(bp[static_cast<std::size_t>(i)]).generators());
        for (int l = i; l < j; ++l) M = chain_maps[static_cast<std::size_t>(l)].mul(M);
        return M;
    };
    const Poset& G = g.glued.poset();
    // classify glued elements: source id, or glued interval [a,b]
    std::vector<int> src_of(static_cast<std::size_t>(G.size()), -1);
    for (int x = 0; x < based.poset().size(); ++x)
        src_of[static_cast<std::size_t>(g.from_source[static_cast<std::size_t>(x)])] = x;
    std::vector<std::pair<int, int>> new_interval(static_cast<std::size_t>(G.size()), {-1, -1});
    for (int a = 0; a <= k; ++a)
        for (int b = a; b <= k; ++b) {
            int e = g.from_b[static_cast<std::size_t>(b_interval_index(k, a, b))];
            if (src_of[static_cast<std::size_t>(e)] < 0) new_interval[static_cast<std::size_t>(e)] = {a, b};
        }
    std::vector<TorsionModule> values;
    for (int e = 0; e < G.size(); ++e) {
        int s = src_of[static_cast<std::size_t>(e)];
        values.push_back(s >= 0 ? F.module_at(s)
                                : F.module_at(bp[static_cast<std::size_t>(
                                      new_interval[static_cast<std::size_t>(e)].second)]));
    }
    // index of a basepoint vertex in the chain
    auto bp_pos = [&](int v) {
        for (int i = 0; i <= k; ++i)
            if (bp[static_cast<std::size_t>(i)] == v) return i;
        return -1;
    };
    std::vector<MatrixF> arrows;
    for (const auto& [u, v] : G.covers()) {
        int su = src_of[static_cast<std::size_t>(u)], sv = src_of[static_cast<std::size_t>(v)];
        if (su >= 0 && sv >= 0) {
            arrows.push_back(F.composite(su, sv));
        } else if (su >= 0) {  // basepoint into a glued interval
            int pos = bp_pos(su);
            if (pos < 0) throw NotAdmissible("glued interval covered by a non-basepoint");
            arrows.push_back(chain_mat(pos, new_interval[static_cast<std::size_t>(v)].second));
        } else if (sv >= 0) {  // glued interval into an old element: via the last basepoint
            if (!based.poset().le(bp.back(), sv))
                throw NotAdmissible("no monic from a glued interval into element " +
                                    std::to_string(sv));
            arrows.push_back(F.composite(bp.back(), sv).mul(
                chain_mat(new_interval[static_cast<std::size_t>(u)].second, k)));
        } else {  // glued interval into glued interval
            arrows.push_back(chain_mat(new_interval[static_cast<std::size_t>(u)].second,
                                       new_interval[static_cast<std::size_t>(v)].second));
        }
    }
    return AdmissibleDiagram::torsion_valued(G, std::move(values), std::move(arrows));
}

std::vector<Lattice> random_monotone_lattices(Rng& rng, const RingConfig& cfg, const Poset& shape,
                                              int n, long bound) {
    // process in a linear extension: sort by number of elements below
    std::vector<int> order(static_cast<std::size_t>(shape.size()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        int ca = 0, cb = 0;
        for (int x = 0; x < shape.size(); ++x) {
            ca += shape.lt(x, a);
            cb += shape.lt(x, b);
        }
        return ca < cb;
    });
    std::vector<std::optional<Lattice>> out(static_cast<std::size_t>(shape.size()));
    for (int x : order) {
        std::vector<Lattice> below;
        for (int y = 0; y < shape.size(); ++y)
            if (shape.lt(y, x)) below.push_back(*out[static_cast<std::size_t>(y)]);
        out[static_cast<std::size_t>(x)] =
            below.empty() ? random_lattice(rng, cfg, n, bound) : random_over_lattice(rng, below, 1);
    }
    std::vector<Lattice> res;
    for (auto& l : out) res.push_back(*l);
    return res;
}

AdmissibleDiagram random_lattice_diagram(Rng& rng, const RingConfig& cfg, const Poset& shape,
                                         int n, long bound) {
    return tautological_lattice_diagram(shape, random_monotone_lattices(rng, cfg, shape, n, bound));
}

AdmissibleDiagram random_torsion_diagram(Rng& rng, const RingConfig& cfg, const Poset& shape,
                                         int n, long bound) {
    auto lats = random_monotone_lattices(rng, cfg, shape, n, bound);
    Lattice bottom = lats.front();
    for (const Lattice& L : lats) bottom = inf(bottom, L);
    bottom = Lattice::from_basis(bottom.basis().shifted(rng.uniform(1, 2)));
    return tautological_torsion_diagram(shape, lats, bottom);
}

std::vector<ModuleMap> random_torsion_chain(Rng& rng, const RingConfig& cfg, int n, int k,
                                            long bound) {
    auto lats = random_chain(rng, cfg, n, k, bound);
    Lattice bottom = Lattice::from_basis(lats.front().basis().shifted(rng.uniform(0, 2)));
    std::vector<TorsionModule> X;
    std::vector<MatrixF> inv_bases;
    for (const Lattice& L : lats) {
        MatrixF inv = L.basis().inverse();
        X.push_back(TorsionModule::from_presentation(inv.mul(bottom.basis())));
        inv_bases.push_back(std::move(inv));
    }
    std::vector<ModuleMap> chain;
    for (int i = 0; i < k; ++i)
        chain.emplace_back(X[static_cast<std::size_t>(i)], X[static_cast<std::size_t>(i + 1)],
                           inv_bases[static_cast<std::size_t>(i + 1)].mul(
                               lats[static_cast<std::size_t>(i)].basis()));
    return chain;
}

}  // namespace lidx
