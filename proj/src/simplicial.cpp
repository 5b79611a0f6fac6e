#include "lidx/simplicial.hpp"

#include <algorithm>
#include <sstream>

namespace lidx {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    for (const auto& tok : split(s, ',')) out.push_back(std::stoi(tok));
    return out;
}

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

// --- finite categories ------------------------------------------------------

int FiniteCategory::compose(int g, int f) const {
    if (f < 0 || g < 0 || f >= size() || g >= size()) throw Error("morphism id out of range");
    int r = comp[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
    if (r < 0) throw Error("morphisms not composable");
    return r;
}

bool FiniteCategory::is_invertible(int f) const {
    for (int g = 0; g < size(); ++g) {
        if (src[static_cast<std::size_t>(g)] != tgt[static_cast<std::size_t>(f)]) continue;
        if (tgt[static_cast<std::size_t>(g)] != src[static_cast<std::size_t>(f)]) continue;
        if (comp[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] ==
                ident[static_cast<std::size_t>(src[static_cast<std::size_t>(f)])] &&
            comp[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)] ==
                ident[static_cast<std::size_t>(tgt[static_cast<std::size_t>(f)])])
            return true;
    }
    return false;
}

int FiniteCategory::inverse(int f) const {
    for (int g = 0; g < size(); ++g) {
        if (src[static_cast<std::size_t>(g)] != tgt[static_cast<std::size_t>(f)]) continue;
        if (tgt[static_cast<std::size_t>(g)] != src[static_cast<std::size_t>(f)]) continue;
        if (comp[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] ==
                ident[static_cast<std::size_t>(src[static_cast<std::size_t>(f)])] &&
            comp[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)] ==
                ident[static_cast<std::size_t>(tgt[static_cast<std::size_t>(f)])])
            return g;
    }
    throw Error("morphism not invertible");
}

bool FiniteCategory::is_groupoid() const {
    for (int f = 0; f < size(); ++f)
        if (!is_invertible(f)) return false;
    return true;
}

void FiniteCategory::validate() const {
    int M = size();
    if (static_cast<int>(tgt.size()) != M || static_cast<int>(comp.size()) != M)
        throw Error("category table shape mismatch");
    if (static_cast<int>(ident.size()) != n_obj) throw Error("identity table shape mismatch");
    for (int f = 0; f < M; ++f) {
        if (src[static_cast<std::size_t>(f)] < 0 || src[static_cast<std::size_t>(f)] >= n_obj ||
            tgt[static_cast<std::size_t>(f)] < 0 || tgt[static_cast<std::size_t>(f)] >= n_obj)
            throw Error("morphism endpoint out of range");
        if (static_cast<int>(comp[static_cast<std::size_t>(f)].size()) != M)
            throw Error("category table shape mismatch");
    }
    for (int x = 0; x < n_obj; ++x) {
        int e = ident[static_cast<std::size_t>(x)];
        if (e < 0 || e >= M || src[static_cast<std::size_t>(e)] != x ||
            tgt[static_cast<std::size_t>(e)] != x)
            throw Error("bad identity morphism");
    }
    for (int g = 0; g < M; ++g)
        for (int f = 0; f < M; ++f) {
            int r = comp[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
            bool composable =
                tgt[static_cast<std::size_t>(f)] == src[static_cast<std::size_t>(g)];
            if (composable != (r >= 0)) throw Error("composability mismatch");
            if (r >= 0 && (src[static_cast<std::size_t>(r)] != src[static_cast<std::size_t>(f)] ||
                           tgt[static_cast<std::size_t>(r)] != tgt[static_cast<std::size_t>(g)]))
                throw Error("composite endpoints wrong");
        }
    for (int f = 0; f < M; ++f) {
        if (compose(f, ident[static_cast<std::size_t>(src[static_cast<std::size_t>(f)])]) != f ||
            compose(ident[static_cast<std::size_t>(tgt[static_cast<std::size_t>(f)])], f) != f)
            throw Error("identity law fails");
    }
    for (int h = 0; h < M; ++h)
        for (int g = 0; g < M; ++g) {
            if (tgt[static_cast<std::size_t>(g)] != src[static_cast<std::size_t>(h)]) continue;
            int hg = compose(h, g);
            for (int f = 0; f < M; ++f) {
                if (tgt[static_cast<std::size_t>(f)] != src[static_cast<std::size_t>(g)]) continue;
                if (compose(hg, f) != compose(h, compose(g, f)))
                    throw Error("associativity fails");
            }
        }
}

FiniteCategory ordinal_category(int n) {
    FiniteCategory c;
    c.n_obj = n + 1;
    c.name = "[" + std::to_string(n) + "]";
    std::vector<std::vector<int>> id_of(static_cast<std::size_t>(n + 1),
                                        std::vector<int>(static_cast<std::size_t>(n + 1), -1));
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            id_of[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c.size();
            c.src.push_back(i);
            c.tgt.push_back(j);
        }
    for (int i = 0; i <= n; ++i)
        c.ident.push_back(id_of[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
    c.comp.assign(static_cast<std::size_t>(c.size()),
                  std::vector<int>(static_cast<std::size_t>(c.size()), -1));
    for (int g = 0; g < c.size(); ++g)
        for (int f = 0; f < c.size(); ++f)
            if (c.tgt[static_cast<std::size_t>(f)] == c.src[static_cast<std::size_t>(g)])
                c.comp[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] =
                    id_of[static_cast<std::size_t>(c.src[static_cast<std::size_t>(f)])]
                         [static_cast<std::size_t>(c.tgt[static_cast<std::size_t>(g)])];
    c.validate();
    return c;
}

FiniteGroupoid cyclic_group_category(int k) {
    FiniteCategory c;
    c.n_obj = 1;
    c.name = "c" + std::to_string(k);
    for (int i = 0; i < k; ++i) {
        c.src.push_back(0);
        c.tgt.push_back(0);
    }
    c.ident = {0};
    c.comp.assign(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k), -1));
    for (int g = 0; g < k; ++g)
        for (int f = 0; f < k; ++f)
            c.comp[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] = (g + f) % k;
    c.validate();
    return c;
}

FiniteGroupoid walking_isomorphism() {
    FiniteCategory c;
    c.n_obj = 2;
    c.name = "walking-iso";
    c.src = {0, 1, 0, 1};
    c.tgt = {0, 1, 1, 0};
    c.ident = {0, 1};
    c.comp.assign(4, std::vector<int>(4, -1));
    auto set = [&](int g, int f, int r) {
        c.comp[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] = r;
    };
    set(0, 0, 0);
    set(1, 1, 1);
    set(2, 0, 2);
    set(1, 2, 2);
    set(3, 1, 3);
    set(0, 3, 3);
    set(3, 2, 0);
    set(2, 3, 1);
    c.validate();
    return c;
}

FiniteCategory discrete_category(int n) {
    FiniteCategory c;
    c.n_obj = n;
    c.name = "discrete" + std::to_string(n);
    for (int i = 0; i < n; ++i) {
        c.src.push_back(i);
        c.tgt.push_back(i);
        c.ident.push_back(i);
    }
    c.comp.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int i = 0; i < n; ++i) c.comp[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = i;
    c.validate();
    return c;
}

FiniteGroupoid contractible_groupoid(int n) {
    FiniteCategory c;
    c.n_obj = n + 1;
    c.name = "contractible" + std::to_string(n);
    // morphism a -> b has id a*(n+1)+b
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) {
            c.src.push_back(a);
            c.tgt.push_back(b);
        }
    for (int a = 0; a <= n; ++a) c.ident.push_back(a * (n + 1) + a);
    c.comp.assign(static_cast<std::size_t>(c.size()),
                  std::vector<int>(static_cast<std::size_t>(c.size()), -1));
    for (int g = 0; g < c.size(); ++g)
        for (int f = 0; f < c.size(); ++f)
            if (c.tgt[static_cast<std::size_t>(f)] == c.src[static_cast<std::size_t>(g)])
                c.comp[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] =
                    c.src[static_cast<std::size_t>(f)] * (n + 1) +
                    c.tgt[static_cast<std::size_t>(g)];
    c.validate();
    return c;
}

FiniteCategory product_category(const FiniteCategory& a, const FiniteCategory& b) {
    FiniteCategory c;
    c.n_obj = a.n_obj * b.n_obj;
    c.name = a.name + "x" + b.name;
    int mb = b.size();
    // object (x,y) -> x*b.n_obj+y; morphism (f,g) -> f*mb+g
    for (int f = 0; f < a.size(); ++f)
        for (int g = 0; g < mb; ++g) {
            c.src.push_back(a.src[static_cast<std::size_t>(f)] * b.n_obj +
                            b.src[static_cast<std::size_t>(g)]);
            c.tgt.push_back(a.tgt[static_cast<std::size_t>(f)] * b.n_obj +
                            b.tgt[static_cast<std::size_t>(g)]);
        }
    for (int x = 0; x < a.n_obj; ++x)
        for (int y = 0; y < b.n_obj; ++y)
            c.ident.push_back(a.ident[static_cast<std::size_t>(x)] * mb +
                              b.ident[static_cast<std::size_t>(y)]);
    c.comp.assign(static_cast<std::size_t>(c.size()),
                  std::vector<int>(static_cast<std::size_t>(c.size()), -1));
    for (int p = 0; p < c.size(); ++p)
        for (int q = 0; q < c.size(); ++q) {
            if (c.tgt[static_cast<std::size_t>(q)] != c.src[static_cast<std::size_t>(p)]) continue;
            int fa = p / mb, ga = p % mb, fb = q / mb, gb = q % mb;
            c.comp[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
                a.compose(fa, fb) * mb + b.compose(ga, gb);
        }
    c.validate();
    return c;
}

FiniteGroupoid core(const FiniteCategory& c) {
    FiniteCategory g;
    g.n_obj = c.n_obj;
    g.name = c.name + "^x";
    std::vector<int> new_id(static_cast<std::size_t>(c.size()), -1);
    for (int f = 0; f < c.size(); ++f)
        if (c.is_invertible(f)) {
            new_id[static_cast<std::size_t>(f)] = g.size();
            g.src.push_back(c.src[static_cast<std::size_t>(f)]);
            g.tgt.push_back(c.tgt[static_cast<std::size_t>(f)]);
        }
    for (int x = 0; x < c.n_obj; ++x)
        g.ident.push_back(new_id[static_cast<std::size_t>(c.ident[static_cast<std::size_t>(x)])]);
    std::vector<int> old_id;
    for (int f = 0; f < c.size(); ++f)
        if (new_id[static_cast<std::size_t>(f)] >= 0) old_id.push_back(f);
    g.comp.assign(static_cast<std::size_t>(g.size()),
                  std::vector<int>(static_cast<std::size_t>(g.size()), -1));
    for (int p = 0; p < g.size(); ++p)
        for (int q = 0; q < g.size(); ++q)
            if (g.tgt[static_cast<std::size_t>(q)] == g.src[static_cast<std::size_t>(p)])
                g.comp[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
                    new_id[static_cast<std::size_t>(c.compose(
                        old_id[static_cast<std::size_t>(p)], old_id[static_cast<std::size_t>(q)])) ];
    g.validate();
    return g;
}

namespace {

/// Core id of an invertible morphism: its rank among invertible morphisms.
int core_id(const FiniteCategory& c, int f) {
    int r = 0;
    for (int k = 0; k < f; ++k)
        if (c.is_invertible(k)) ++r;
    return r;
}

}  // namespace

FiniteCategory preset_category(const std::string& name) {
    if (name == "[0]") return ordinal_category(0);
    if (name == "[1]") return ordinal_category(1);
    if (name == "[2]") return ordinal_category(2);
    if (name == "[3]") return ordinal_category(3);
    if (name == "c2") return cyclic_group_category(2);
    if (name == "c3") return cyclic_group_category(3);
    if (name == "walking-iso") return walking_isomorphism();
    if (name == "discrete2") return discrete_category(2);
    throw Error("unknown category preset: " + name);
}

void validate_functor(const FiniteCategory& c, const FiniteCategory& d, const CategoryFunctor& f) {
    if (static_cast<int>(f.obj.size()) != c.n_obj ||
        static_cast<int>(f.mor.size()) != c.size())
        throw Error("functor table shape mismatch");
    for (int x = 0; x < c.n_obj; ++x)
        if (f.obj[static_cast<std::size_t>(x)] < 0 || f.obj[static_cast<std::size_t>(x)] >= d.n_obj)
            throw Error("functor object image out of range");
    for (int m = 0; m < c.size(); ++m) {
        int fm = f.mor[static_cast<std::size_t>(m)];
        if (fm < 0 || fm >= d.size()) throw Error("functor morphism image out of range");
        if (d.src[static_cast<std::size_t>(fm)] !=
                f.obj[static_cast<std::size_t>(c.src[static_cast<std::size_t>(m)])] ||
            d.tgt[static_cast<std::size_t>(fm)] !=
                f.obj[static_cast<std::size_t>(c.tgt[static_cast<std::size_t>(m)])])
            throw Error("functor does not respect endpoints");
    }
    for (int x = 0; x < c.n_obj; ++x)
        if (f.mor[static_cast<std::size_t>(c.ident[static_cast<std::size_t>(x)])] !=
            d.ident[static_cast<std::size_t>(f.obj[static_cast<std::size_t>(x)])])
            throw Error("functor does not preserve identities");
    for (int g = 0; g < c.size(); ++g)
        for (int h = 0; h < c.size(); ++h) {
            if (c.tgt[static_cast<std::size_t>(h)] != c.src[static_cast<std::size_t>(g)]) continue;
            if (f.mor[static_cast<std::size_t>(c.compose(g, h))] !=
                d.compose(f.mor[static_cast<std::size_t>(g)], f.mor[static_cast<std::size_t>(h)]))
                throw Error("functor does not preserve composition");
        }
}

// --- truncated simplicial sets ----------------------------------------------

int TruncatedSimplicialSet::size(int m) const {
    if (m < 0 || m > D_) throw Error("level out of truncation range");
    return static_cast<int>(labels_[static_cast<std::size_t>(m)].size());
}

const std::string& TruncatedSimplicialSet::label(int m, int idx) const {
    if (m < 0 || m > D_ || idx < 0 || idx >= size(m)) throw Error("simplex out of range");
    return labels_[static_cast<std::size_t>(m)][static_cast<std::size_t>(idx)];
}

int TruncatedSimplicialSet::index_of(int m, const std::string& lab) const {
    if (m < 0 || m > D_) return -1;
    auto it = index_[static_cast<std::size_t>(m)].find(lab);
    return it == index_[static_cast<std::size_t>(m)].end() ? -1 : it->second;
}

int TruncatedSimplicialSet::face(int m, int i, int idx) const {
    if (m < 1 || m > D_ || i < 0 || i > m) throw Error("face operator out of range");
    return faces_[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)]
                 [static_cast<std::size_t>(idx)];
}

int TruncatedSimplicialSet::degeneracy(int m, int i, int idx) const {
    if (m < 0 || m >= D_ || i < 0 || i > m) throw Error("degeneracy operator out of range");
    return degs_[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)]
                [static_cast<std::size_t>(idx)];
}

TruncatedSimplicialSet TruncatedSimplicialSet::build(
    int D, const std::function<std::vector<std::string>(int)>& enumerate,
    const std::function<std::string(int, int, const std::string&)>& face_fn,
    const std::function<std::string(int, int, const std::string&)>& deg_fn, long budget) {
    TruncatedSimplicialSet x;
    x.D_ = D;
    x.labels_.resize(static_cast<std::size_t>(D) + 1);
    x.index_.resize(static_cast<std::size_t>(D) + 1);
    long total = 0;
    for (int m = 0; m <= D; ++m) {
        x.labels_[static_cast<std::size_t>(m)] = enumerate(m);
        total += static_cast<long>(x.labels_[static_cast<std::size_t>(m)].size());
        if (total > budget) throw TooLarge();
        int k = 0;
        for (const auto& lab : x.labels_[static_cast<std::size_t>(m)]) {
            if (!x.index_[static_cast<std::size_t>(m)].emplace(lab, k).second)
                throw Error("duplicate simplex label: " + lab);
            ++k;
        }
    }
    x.faces_.resize(static_cast<std::size_t>(D) + 1);
    x.degs_.resize(static_cast<std::size_t>(D) + 1);
    for (int m = 1; m <= D; ++m) {
        x.faces_[static_cast<std::size_t>(m)].resize(static_cast<std::size_t>(m) + 1);
        for (int i = 0; i <= m; ++i) {
            auto& tab = x.faces_[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)];
            for (const auto& lab : x.labels_[static_cast<std::size_t>(m)]) {
                int idx = x.index_of(m - 1, face_fn(m, i, lab));
                if (idx < 0) throw Error("face leaves the enumerated set at " + lab);
                tab.push_back(idx);
            }
        }
    }
    for (int m = 0; m < D; ++m) {
        x.degs_[static_cast<std::size_t>(m)].resize(static_cast<std::size_t>(m) + 1);
        for (int i = 0; i <= m; ++i) {
            auto& tab = x.degs_[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)];
            for (const auto& lab : x.labels_[static_cast<std::size_t>(m)]) {
                int idx = x.index_of(m + 1, deg_fn(m, i, lab));
                if (idx < 0) throw Error("degeneracy leaves the enumerated set at " + lab);
                tab.push_back(idx);
            }
        }
    }
    x.audit();
    return x;
}

void TruncatedSimplicialSet::audit() const {
    for (int m = 2; m <= D_; ++m)
        for (int s = 0; s < size(m); ++s)
            for (int i = 0; i <= m; ++i)
                for (int j = i + 1; j <= m; ++j)
                    if (face(m - 1, i, face(m, j, s)) != face(m - 1, j - 1, face(m, i, s)))
                        throw Error("face identity fails at level " + std::to_string(m));
    for (int m = 0; m + 1 < D_; ++m)
        for (int s = 0; s < size(m); ++s)
            for (int i = 0; i <= m; ++i)
                for (int j = i; j <= m; ++j)
                    if (degeneracy(m + 1, j + 1, degeneracy(m, i, s)) !=
                        degeneracy(m + 1, i, degeneracy(m, j, s)))
                        throw Error("degeneracy identity fails at level " + std::to_string(m));
    for (int m = 0; m < D_; ++m)
        for (int s = 0; s < size(m); ++s)
            for (int j = 0; j <= m; ++j)
                for (int i = 0; i <= m + 1; ++i) {
                    int lhs = face(m + 1, i, degeneracy(m, j, s));
                    int rhs;
                    if (i == j || i == j + 1)
                        rhs = s;
                    else if (i < j)
                        rhs = m >= 1 ? degeneracy(m - 1, j - 1, face(m, i, s)) : -2;
                    else
                        rhs = m >= 1 ? degeneracy(m - 1, j, face(m, i - 1, s)) : -2;
                    if (rhs >= -1 && lhs != rhs)
                        throw Error("mixed identity fails at level " + std::to_string(m));
                }
}

bool simplicial_iso_check(const TruncatedSimplicialSet& x, const TruncatedSimplicialSet& y,
                          const std::function<std::string(int, const std::string&)>& map) {
    if (x.degree() != y.degree()) return false;
    std::vector<std::vector<int>> img(static_cast<std::size_t>(x.degree()) + 1);
    for (int m = 0; m <= x.degree(); ++m) {
        if (x.size(m) != y.size(m)) return false;
        std::vector<bool> hit(static_cast<std::size_t>(y.size(m)), false);
        for (int s = 0; s < x.size(m); ++s) {
            int t = y.index_of(m, map(m, x.label(m, s)));
            if (t < 0 || hit[static_cast<std::size_t>(t)]) return false;
            hit[static_cast<std::size_t>(t)] = true;
            img[static_cast<std::size_t>(m)].push_back(t);
        }
    }
    for (int m = 1; m <= x.degree(); ++m)
        for (int s = 0; s < x.size(m); ++s)
            for (int i = 0; i <= m; ++i)
                if (y.face(m, i, img[static_cast<std::size_t>(m)][static_cast<std::size_t>(s)]) !=
                    img[static_cast<std::size_t>(m) - 1]
                       [static_cast<std::size_t>(x.face(m, i, s))])
                    return false;
    for (int m = 0; m < x.degree(); ++m)
        for (int s = 0; s < x.size(m); ++s)
            for (int i = 0; i <= m; ++i)
                if (y.degeneracy(m, i,
                                 img[static_cast<std::size_t>(m)][static_cast<std::size_t>(s)]) !=
                    img[static_cast<std::size_t>(m) + 1]
                       [static_cast<std::size_t>(x.degeneracy(m, i, s))])
                    return false;
    return true;
}

namespace {

/// Composable chains of length m, as morphism id lists ("x" object label at
/// level 0).
std::vector<std::vector<int>> chains_of(const FiniteCategory& c, int m) {
    std::vector<std::vector<int>> out;
    if (m == 0) {
        for (int x = 0; x < c.n_obj; ++x) out.push_back({x});
        return out;
    }
    std::vector<std::vector<int>> prev = chains_of(c, m - 1);
    for (const auto& ch : prev) {
        int last_tgt =
            m == 1 ? ch[0] : c.tgt[static_cast<std::size_t>(ch.back())];
        for (int f = 0; f < c.size(); ++f)
            if (c.src[static_cast<std::size_t>(f)] == last_tgt) {
                auto ext = m == 1 ? std::vector<int>{} : ch;
                ext.push_back(f);
                out.push_back(ext);
            }
    }
    return out;
}

std::string nerve_face(const FiniteCategory& c, int m, int i, const std::string& lab) {
    std::vector<int> ch = parse_ints(lab);
    if (m == 1)
        return std::to_string(i == 0 ? c.tgt[static_cast<std::size_t>(ch[0])]
                                     : c.src[static_cast<std::size_t>(ch[0])]);
    std::vector<int> out;
    for (int k = 0; k < m; ++k) {
        if (i > 0 && k == i - 1 && i < m) {
            out.push_back(c.compose(ch[static_cast<std::size_t>(k) + 1],
                                    ch[static_cast<std::size_t>(k)]));
            ++k;
        } else if ((i == 0 && k == 0) || (i == m && k == m - 1)) {
            continue;
        } else {
            out.push_back(ch[static_cast<std::size_t>(k)]);
        }
    }
    return join_ints(out);
}

std::string nerve_deg(const FiniteCategory& c, int m, int i, const std::string& lab) {
    std::vector<int> ch = parse_ints(lab);
    if (m == 0) return join_ints({c.ident[static_cast<std::size_t>(ch[0])]});
    // vertex i of the chain
    int v = i == 0 ? c.src[static_cast<std::size_t>(ch[0])]
                   : c.tgt[static_cast<std::size_t>(ch[static_cast<std::size_t>(i) - 1])];
    std::vector<int> out = ch;
    out.insert(out.begin() + i, c.ident[static_cast<std::size_t>(v)]);
    return join_ints(out);
}

}  // namespace

TruncatedSimplicialSet nerve(const FiniteCategory& c, int D) {
    auto enumerate = [&c](int m) {
        std::vector<std::string> out;
        for (const auto& ch : chains_of(c, m)) out.push_back(join_ints(ch));
        return out;
    };
    auto face_fn = [&c](int m, int i, const std::string& lab) { return nerve_face(c, m, i, lab); };
    auto deg_fn = [&c](int m, int i, const std::string& lab) { return nerve_deg(c, m, i, lab); };
    return TruncatedSimplicialSet::build(D, enumerate, face_fn, deg_fn);
}

std::string nerve_label_map(const FiniteCategory& c, const CategoryFunctor& f, int m,
                            const std::string& lab) {
    (void)c;
    std::vector<int> ch = parse_ints(lab);
    std::vector<int> out;
    for (std::size_t k = 0; k < ch.size(); ++k)
        out.push_back(m == 0 ? f.obj[static_cast<std::size_t>(ch[k])]
                             : f.mor[static_cast<std::size_t>(ch[k])]);
    return join_ints(out);
}

TruncatedSimplicialSet codiscrete(const std::vector<std::string>& vertices, int D) {
    int nv = static_cast<int>(vertices.size());
    if (nv <= 0) throw Error("codiscrete needs at least one vertex");
    auto enumerate = [nv](int m) {
        std::vector<std::string> out;
        std::vector<int> tup(static_cast<std::size_t>(m) + 1, 0);
        while (true) {
            out.push_back(join_ints(tup));
            int k = m;
            while (k >= 0 && ++tup[static_cast<std::size_t>(k)] == nv) {
                tup[static_cast<std::size_t>(k)] = 0;
                --k;
            }
            if (k < 0) break;
        }
        return out;
    };
    auto face_fn = [](int, int i, const std::string& lab) {
        std::vector<int> t = parse_ints(lab);
        t.erase(t.begin() + i);
        return join_ints(t);
    };
    auto deg_fn = [](int, int i, const std::string& lab) {
        std::vector<int> t = parse_ints(lab);
        t.insert(t.begin() + i, t[static_cast<std::size_t>(i)]);
        return join_ints(t);
    };
    return TruncatedSimplicialSet::build(D, enumerate, face_fn, deg_fn);
}

TruncatedSimplicialSet delta_prime(int n, int D) { return nerve(contractible_groupoid(n), D); }

TruncatedSimplicialSet standard_simplex(int n, int D) { return nerve(ordinal_category(n), D); }

TruncatedSimplicialSet circle(int D) {
    // Level m: classes of monotone maps [m] -> [1] with both constants
    // identified; class t in 1..m is the map with t zeros, class 0 is the
    // glued basepoint.
    auto enumerate = [](int m) {
        std::vector<std::string> out;
        for (int t = 0; t <= m; ++t) out.push_back(std::to_string(t));
        return out;
    };
    auto face_fn = [](int m, int i, const std::string& lab) {
        int t = std::stoi(lab);
        if (t == 0) return std::string("0");
        int tp = t - (i < t ? 1 : 0);
        if (tp == 0 || tp == m) return std::string("0");  // constant on [m-1]
        return std::to_string(tp);
    };
    auto deg_fn = [](int, int i, const std::string& lab) {
        int t = std::stoi(lab);
        if (t == 0) return std::string("0");
        return std::to_string(t + (i < t ? 1 : 0));
    };
    return TruncatedSimplicialSet::build(D, enumerate, face_fn, deg_fn);
}

TruncatedSimplicialSet product_simplicial(const TruncatedSimplicialSet& a,
                                          const TruncatedSimplicialSet& b) {
    if (a.degree() != b.degree()) throw Error("product factors must share the truncation degree");
    auto enumerate = [&a, &b](int m) {
        std::vector<std::string> out;
        for (int s = 0; s < a.size(m); ++s)
            for (int t = 0; t < b.size(m); ++t) out.push_back(a.label(m, s) + "&" + b.label(m, t));
        return out;
    };
    auto split_pair = [](const std::string& lab) {
        auto pos = lab.find('&');
        return std::pair<std::string, std::string>(lab.substr(0, pos), lab.substr(pos + 1));
    };
    auto face_fn = [&a, &b, split_pair](int m, int i, const std::string& lab) {
        auto [l, r] = split_pair(lab);
        return a.label(m - 1, a.face(m, i, a.index_of(m, l))) + "&" +
               b.label(m - 1, b.face(m, i, b.index_of(m, r)));
    };
    auto deg_fn = [&a, &b, split_pair](int m, int i, const std::string& lab) {
        auto [l, r] = split_pair(lab);
        return a.label(m + 1, a.degeneracy(m, i, a.index_of(m, l))) + "&" +
               b.label(m + 1, b.degeneracy(m, i, b.index_of(m, r)));
    };
    return TruncatedSimplicialSet::build(a.degree(), enumerate, face_fn, deg_fn);
}

// --- truncated bisimplicial sets --------------------------------------------

int TruncatedBisimplicialSet::size(int m, int n) const {
    if (m < 0 || m > D1_ || n < 0 || n > D2_) throw Error("bidegree out of range");
    return static_cast<int>(labels_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)].size());
}

const std::string& TruncatedBisimplicialSet::label(int m, int n, int idx) const {
    if (idx < 0 || idx >= size(m, n)) throw Error("cell out of range");
    return labels_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]
                  [static_cast<std::size_t>(idx)];
}

int TruncatedBisimplicialSet::index_of(int m, int n, const std::string& lab) const {
    if (m < 0 || m > D1_ || n < 0 || n > D2_) return -1;
    const auto& ix = index_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
    auto it = ix.find(lab);
    return it == ix.end() ? -1 : it->second;
}

int TruncatedBisimplicialSet::hface(int m, int n, int i, int idx) const {
    if (m < 1 || i < 0 || i > m) throw Error("hface out of range");
    return hfaces_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]
                  [static_cast<std::size_t>(i)][static_cast<std::size_t>(idx)];
}

int TruncatedBisimplicialSet::vface(int m, int n, int j, int idx) const {
    if (n < 1 || j < 0 || j > n) throw Error("vface out of range");
    return vfaces_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]
                  [static_cast<std::size_t>(j)][static_cast<std::size_t>(idx)];
}

int TruncatedBisimplicialSet::hdeg(int m, int n, int i, int idx) const {
    if (m < 0 || m >= D1_ || i < 0 || i > m) throw Error("hdeg out of range");
    return hdegs_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]
                 [static_cast<std::size_t>(i)][static_cast<std::size_t>(idx)];
}

int TruncatedBisimplicialSet::vdeg(int m, int n, int j, int idx) const {
    if (n < 0 || n >= D2_ || j < 0 || j > n) throw Error("vdeg out of range");
    return vdegs_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]
                 [static_cast<std::size_t>(j)][static_cast<std::size_t>(idx)];
}

TruncatedBisimplicialSet TruncatedBisimplicialSet::build(
    int D1, int D2, const std::function<std::vector<std::string>(int, int)>& enumerate,
    const std::function<std::string(int, int, int, const std::string&)>& hface_fn,
    const std::function<std::string(int, int, int, const std::string&)>& vface_fn,
    const std::function<std::string(int, int, int, const std::string&)>& hdeg_fn,
    const std::function<std::string(int, int, int, const std::string&)>& vdeg_fn, long budget) {
    TruncatedBisimplicialSet x;
    x.D1_ = D1;
    x.D2_ = D2;
    auto sz1 = static_cast<std::size_t>(D1) + 1;
    auto sz2 = static_cast<std::size_t>(D2) + 1;
    x.labels_.assign(sz1, std::vector<std::vector<std::string>>(sz2));
    x.index_.assign(sz1, std::vector<std::map<std::string, int>>(sz2));
    x.hfaces_.assign(sz1, std::vector<std::vector<std::vector<int>>>(sz2));
    x.vfaces_.assign(sz1, std::vector<std::vector<std::vector<int>>>(sz2));
    x.hdegs_.assign(sz1, std::vector<std::vector<std::vector<int>>>(sz2));
    x.vdegs_.assign(sz1, std::vector<std::vector<std::vector<int>>>(sz2));
    long total = 0;
    for (int m = 0; m <= D1; ++m)
        for (int n = 0; n <= D2; ++n) {
            auto& labs = x.labels_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
            labs = enumerate(m, n);
            total += static_cast<long>(labs.size());
            if (total > budget) throw TooLarge();
            int k = 0;
            for (const auto& lab : labs) {
                if (!x.index_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]
                         .emplace(lab, k)
                         .second)
                    throw Error("duplicate cell label: " + lab);
                ++k;
            }
        }
    auto fill = [&x](int m, int n, int ops, auto&& fn, int dm, int dn,
                     std::vector<std::vector<int>>& out) {
        out.resize(static_cast<std::size_t>(ops));
        for (int i = 0; i < ops; ++i)
            for (const auto& lab :
                 x.labels_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]) {
                int idx = x.index_of(m + dm, n + dn, fn(m, n, i, lab));
                if (idx < 0) throw Error("bisimplicial operator leaves the set at " + lab);
                out[static_cast<std::size_t>(i)].push_back(idx);
            }
    };
    for (int m = 0; m <= D1; ++m)
        for (int n = 0; n <= D2; ++n) {
            if (m >= 1)
                fill(m, n, m + 1, hface_fn, -1, 0,
                     x.hfaces_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]);
            if (n >= 1)
                fill(m, n, n + 1, vface_fn, 0, -1,
                     x.vfaces_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]);
            if (m < D1)
                fill(m, n, m + 1, hdeg_fn, 1, 0,
                     x.hdegs_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]);
            if (n < D2)
                fill(m, n, n + 1, vdeg_fn, 0, 1,
                     x.vdegs_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]);
        }
    x.audit();
    return x;
}

void TruncatedBisimplicialSet::audit() const {
    // rows and columns satisfy the simplicial identities
    for (int n = 0; n <= D2_; ++n)
        for (int m = 0; m <= D1_; ++m)
            for (int s = 0; s < size(m, n); ++s) {
                if (m >= 2)
                    for (int i = 0; i <= m; ++i)
                        for (int j = i + 1; j <= m; ++j)
                            if (hface(m - 1, n, i, hface(m, n, j, s)) !=
                                hface(m - 1, n, j - 1, hface(m, n, i, s)))
                                throw Error("horizontal face identity fails");
                if (n >= 2)
                    for (int i = 0; i <= n; ++i)
                        for (int j = i + 1; j <= n; ++j)
                            if (vface(m, n - 1, i, vface(m, n, j, s)) !=
                                vface(m, n - 1, j - 1, vface(m, n, i, s)))
                                throw Error("vertical face identity fails");
                if (m < D1_)
                    for (int j = 0; j <= m; ++j)
                        for (int i = 0; i <= m + 1; ++i) {
                            int lhs = hface(m + 1, n, i, hdeg(m, n, j, s));
                            if (i == j || i == j + 1) {
                                if (lhs != s) throw Error("horizontal mixed identity fails");
                            } else if (m >= 1) {
                                int rhs = i < j ? hdeg(m - 1, n, j - 1, hface(m, n, i, s))
                                                : hdeg(m - 1, n, j, hface(m, n, i - 1, s));
                                if (lhs != rhs) throw Error("horizontal mixed identity fails");
                            }
                        }
                if (n < D2_)
                    for (int j = 0; j <= n; ++j)
                        for (int i = 0; i <= n + 1; ++i) {
                            int lhs = vface(m, n + 1, i, vdeg(m, n, j, s));
                            if (i == j || i == j + 1) {
                                if (lhs != s) throw Error("vertical mixed identity fails");
                            } else if (n >= 1) {
                                int rhs = i < j ? vdeg(m, n - 1, j - 1, vface(m, n, i, s))
                                                : vdeg(m, n - 1, j, vface(m, n, i - 1, s));
                                if (lhs != rhs) throw Error("vertical mixed identity fails");
                            }
                        }
                // the two directions commute
                if (m >= 1 && n >= 1)
                    for (int i = 0; i <= m; ++i)
                        for (int j = 0; j <= n; ++j)
                            if (vface(m - 1, n, j, hface(m, n, i, s)) !=
                                hface(m, n - 1, i, vface(m, n, j, s)))
                                throw Error("face directions do not commute");
                if (m >= 1 && n < D2_)
                    for (int i = 0; i <= m; ++i)
                        for (int j = 0; j <= n; ++j)
                            if (vdeg(m - 1, n, j, hface(m, n, i, s)) !=
                                hface(m, n + 1, i, vdeg(m, n, j, s)))
                                throw Error("hface and vdeg do not commute");
                if (m < D1_ && n >= 1)
                    for (int i = 0; i <= m; ++i)
                        for (int j = 0; j <= n; ++j)
                            if (vface(m + 1, n, j, hdeg(m, n, i, s)) !=
                                hdeg(m, n - 1, i, vface(m, n, j, s)))
                                throw Error("hdeg and vface do not commute");
                if (m < D1_ && n < D2_)
                    for (int i = 0; i <= m; ++i)
                        for (int j = 0; j <= n; ++j)
                            if (vdeg(m + 1, n, j, hdeg(m, n, i, s)) !=
                                hdeg(m, n + 1, i, vdeg(m, n, j, s)))
                                throw Error("degeneracy directions do not commute");
            }
}

bool bisimplicial_iso_check(const TruncatedBisimplicialSet& x, const TruncatedBisimplicialSet& y,
                            const std::function<std::string(int, int, const std::string&)>& map) {
    if (x.degree_h() != y.degree_h() || x.degree_v() != y.degree_v()) return false;
    std::vector<std::vector<std::vector<int>>> img(
        static_cast<std::size_t>(x.degree_h()) + 1,
        std::vector<std::vector<int>>(static_cast<std::size_t>(x.degree_v()) + 1));
    for (int m = 0; m <= x.degree_h(); ++m)
        for (int n = 0; n <= x.degree_v(); ++n) {
            if (x.size(m, n) != y.size(m, n)) return false;
            std::vector<bool> hit(static_cast<std::size_t>(y.size(m, n)), false);
            for (int s = 0; s < x.size(m, n); ++s) {
                int t = y.index_of(m, n, map(m, n, x.label(m, n, s)));
                if (t < 0 || hit[static_cast<std::size_t>(t)]) return false;
                hit[static_cast<std::size_t>(t)] = true;
                img[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)].push_back(t);
            }
        }
    auto at = [&img](int m, int n, int s) {
        return img[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]
                  [static_cast<std::size_t>(s)];
    };
    for (int m = 0; m <= x.degree_h(); ++m)
        for (int n = 0; n <= x.degree_v(); ++n)
            for (int s = 0; s < x.size(m, n); ++s) {
                if (m >= 1)
                    for (int i = 0; i <= m; ++i)
                        if (y.hface(m, n, i, at(m, n, s)) != at(m - 1, n, x.hface(m, n, i, s)))
                            return false;
                if (n >= 1)
                    for (int j = 0; j <= n; ++j)
                        if (y.vface(m, n, j, at(m, n, s)) != at(m, n - 1, x.vface(m, n, j, s)))
                            return false;
                if (m < x.degree_h())
                    for (int i = 0; i <= m; ++i)
                        if (y.hdeg(m, n, i, at(m, n, s)) != at(m + 1, n, x.hdeg(m, n, i, s)))
                            return false;
                if (n < x.degree_v())
                    for (int j = 0; j <= n; ++j)
                        if (y.vdeg(m, n, j, at(m, n, s)) != at(m, n + 1, x.vdeg(m, n, j, s)))
                            return false;
            }
    return true;
}

// --- the grid object t^! ----------------------------------------------------

namespace {

/// A functor from (chain of length m) x (contractible groupoid on n+1
/// objects): object grid, horizontal generators h(i,a): (i,a)->(i+1,a) and
/// vertical generators v(i,a): (i,a)->(i,a+1).
struct Grid {
    int m = 0, n = 0;
    std::vector<int> obj;  // (m+1)*(n+1), row-major (i,a) -> i*(n+1)+a
    std::vector<int> hor;  // m*(n+1), (i,a) -> i*(n+1)+a
    std::vector<int> ver;  // (m+1)*n, (i,a) -> i*n+a

    int o(int i, int a) const { return obj[static_cast<std::size_t>(i * (n + 1) + a)]; }
    int h(int i, int a) const { return hor[static_cast<std::size_t>(i * (n + 1) + a)]; }
    int v(int i, int a) const { return ver[static_cast<std::size_t>(i * n + a)]; }
};

std::string grid_label(const Grid& g) {
    return std::to_string(g.m) + "x" + std::to_string(g.n) + "|" + join_ints(g.obj) + "|" +
           join_ints(g.hor) + "|" + join_ints(g.ver);
}

Grid parse_grid(const std::string& lab) {
    auto parts = split(lab, '|');
    if (parts.size() != 4) throw Error("bad grid label: " + lab);
    auto shape = split(parts[0], 'x');
    Grid g;
    g.m = std::stoi(shape[0]);
    g.n = std::stoi(shape[1]);
    g.obj = parse_ints(parts[1]);
    g.hor = parse_ints(parts[2]);
    g.ver = parse_ints(parts[3]);
    return g;
}

/// Delete vertex row i; the two horizontal generators around an inner row
/// compose.
Grid grid_hface(const FiniteCategory& c, const Grid& g, int i) {
    Grid r;
    r.m = g.m - 1;
    r.n = g.n;
    for (int k = 0; k <= g.m; ++k) {
        if (k == i) continue;
        for (int a = 0; a <= g.n; ++a) r.obj.push_back(g.o(k, a));
    }
    for (int k = 0; k < g.m; ++k)
        for (int a = 0; a <= g.n; ++a) {
            if (i == 0) {
                if (k >= 1) r.hor.push_back(g.h(k, a));
            } else if (i == g.m) {
                if (k < g.m - 1) r.hor.push_back(g.h(k, a));
            } else {
                if (k < i - 1)
                    r.hor.push_back(g.h(k, a));
                else if (k == i - 1)
                    r.hor.push_back(c.compose(g.h(i, a), g.h(i - 1, a)));
                else if (k >= i + 1)
                    r.hor.push_back(g.h(k, a));
            }
        }
    for (int k = 0; k <= g.m; ++k) {
        if (k == i) continue;
        for (int a = 0; a < g.n; ++a) r.ver.push_back(g.v(k, a));
    }
    return r;
}

/// Duplicate vertex row i with identity horizontal generators between the
/// copies.
Grid grid_hdeg(const FiniteCategory& c, const Grid& g, int i) {
    Grid r;
    r.m = g.m + 1;
    r.n = g.n;
    for (int k = 0; k <= g.m; ++k) {
        for (int a = 0; a <= g.n; ++a) r.obj.push_back(g.o(k, a));
        if (k == i)
            for (int a = 0; a <= g.n; ++a) r.obj.push_back(g.o(k, a));
    }
    for (int k = 0; k <= g.m; ++k) {
        if (k == i)
            for (int a = 0; a <= g.n; ++a)
                r.hor.push_back(c.ident[static_cast<std::size_t>(g.o(k, a))]);
        if (k < g.m)
            for (int a = 0; a <= g.n; ++a) r.hor.push_back(g.h(k, a));
    }
    for (int k = 0; k <= g.m; ++k) {
        for (int a = 0; a < g.n; ++a) r.ver.push_back(g.v(k, a));
        if (k == i)
            for (int a = 0; a < g.n; ++a) r.ver.push_back(g.v(k, a));
    }
    return r;
}

/// Delete column j; the two vertical generators around an inner column
/// compose.
Grid grid_vface(const FiniteCategory& c, const Grid& g, int j) {
    Grid r;
    r.m = g.m;
    r.n = g.n - 1;
    for (int k = 0; k <= g.m; ++k)
        for (int a = 0; a <= g.n; ++a)
            if (a != j) r.obj.push_back(g.o(k, a));
    for (int k = 0; k < g.m; ++k)
        for (int a = 0; a <= g.n; ++a)
            if (a != j) r.hor.push_back(g.h(k, a));
    for (int k = 0; k <= g.m; ++k)
        for (int a = 0; a < g.n; ++a) {
            if (j == 0) {
                if (a >= 1) r.ver.push_back(g.v(k, a));
            } else if (j == g.n) {
                if (a < g.n - 1) r.ver.push_back(g.v(k, a));
            } else {
                if (a < j - 1)
                    r.ver.push_back(g.v(k, a));
                else if (a == j - 1)
                    r.ver.push_back(c.compose(g.v(k, j), g.v(k, j - 1)));
                else if (a >= j + 1)
                    r.ver.push_back(g.v(k, a));
            }
        }
    return r;
}

/// Duplicate column j with identity vertical generators between the copies.
Grid grid_vdeg(const FiniteCategory& c, const Grid& g, int j) {
    Grid r;
    r.m = g.m;
    r.n = g.n + 1;
    for (int k = 0; k <= g.m; ++k)
        for (int a = 0; a <= g.n; ++a) {
            r.obj.push_back(g.o(k, a));
            if (a == j) r.obj.push_back(g.o(k, a));
        }
    for (int k = 0; k < g.m; ++k)
        for (int a = 0; a <= g.n; ++a) {
            r.hor.push_back(g.h(k, a));
            if (a == j) r.hor.push_back(g.h(k, a));
        }
    for (int k = 0; k <= g.m; ++k)
        for (int a = 0; a <= g.n; ++a) {
            if (a == j) r.ver.push_back(c.ident[static_cast<std::size_t>(g.o(k, a))]);
            if (a < g.n) r.ver.push_back(g.v(k, a));
        }
    return r;
}

/// All grids over c of shape (m,n): an m-chain in column 0, free invertible
/// choices of vertical generators column by column; the remaining horizontal
/// generators are forced by the commuting squares.
std::vector<Grid> enumerate_grids(const FiniteCategory& c, int m, int n, long budget,
                                  long& counted) {
    std::vector<std::vector<int>> inv_from(static_cast<std::size_t>(c.n_obj));
    for (int f = 0; f < c.size(); ++f)
        if (c.is_invertible(f)) inv_from[static_cast<std::size_t>(c.src[static_cast<std::size_t>(f)])].push_back(f);
    std::vector<Grid> out;
    for (const auto& ch : chains_of(c, m)) {
        Grid base;
        base.m = m;
        base.n = 0;
        if (m == 0) {
            base.obj = {ch[0]};
        } else {
            base.obj.push_back(c.src[static_cast<std::size_t>(ch[0])]);
            for (int k = 0; k < m; ++k) {
                base.obj.push_back(c.tgt[static_cast<std::size_t>(ch[static_cast<std::size_t>(k)])]);
                base.hor.push_back(ch[static_cast<std::size_t>(k)]);
            }
        }
        // extend column by column
        std::vector<Grid> frontier{base};
        for (int a = 0; a < n; ++a) {
            std::vector<Grid> next;
            for (const Grid& g : frontier) {
                // odometer over invertible choices per row
                std::vector<std::size_t> pick(static_cast<std::size_t>(m) + 1, 0);
                while (true) {
                    Grid e;
                    e.m = m;
                    e.n = g.n + 1;
                    bool feasible = true;
                    std::vector<int> vcol, ocol;
                    for (int k = 0; k <= m && feasible; ++k) {
                        const auto& cand =
                            inv_from[static_cast<std::size_t>(g.o(k, g.n))];
                        if (cand.empty()) {
                            feasible = false;
                            break;
                        }
                        int v = cand[pick[static_cast<std::size_t>(k)]];
                        vcol.push_back(v);
                        ocol.push_back(c.tgt[static_cast<std::size_t>(v)]);
                    }
                    if (!feasible) break;
                    for (int k = 0; k <= m; ++k) {
                        for (int b = 0; b <= g.n; ++b) e.obj.push_back(g.o(k, b));
                        e.obj.push_back(ocol[static_cast<std::size_t>(k)]);
                    }
                    for (int k = 0; k < m; ++k) {
                        for (int b = 0; b <= g.n; ++b) e.hor.push_back(g.h(k, b));
                        // forced: v_{k+1} h v_k^{-1}
                        int forced = c.compose(
                            c.compose(vcol[static_cast<std::size_t>(k) + 1], g.h(k, g.n)),
                            c.inverse(vcol[static_cast<std::size_t>(k)]));
                        e.hor.push_back(forced);
                    }
                    for (int k = 0; k <= m; ++k) {
                        for (int b = 0; b < g.n; ++b) e.ver.push_back(g.v(k, b));
                        e.ver.push_back(vcol[static_cast<std::size_t>(k)]);
                    }
                    next.push_back(std::move(e));
                    if (static_cast<long>(next.size()) + counted > budget) throw TooLarge();
                    // advance odometer
                    int k = m;
                    while (k >= 0) {
                        auto& p = pick[static_cast<std::size_t>(k)];
                        if (++p < inv_from[static_cast<std::size_t>(g.o(k, g.n))].size()) break;
                        p = 0;
                        --k;
                    }
                    if (k < 0) break;
                }
            }
            frontier = std::move(next);
        }
        for (auto& g : frontier) out.push_back(std::move(g));
        counted += static_cast<long>(frontier.size());
        if (counted > budget) throw TooLarge();
    }
    return out;
}

}  // namespace

TruncatedBisimplicialSet t_pling(const FiniteCategory& c, int D1, int D2, long budget) {
    long counted = 0;
    auto enumerate = [&c, budget, &counted](int m, int n) {
        std::vector<std::string> out;
        for (const auto& g : enumerate_grids(c, m, n, budget, counted))
            out.push_back(grid_label(g));
        return out;
    };
    auto hface_fn = [&c](int, int, int i, const std::string& lab) {
        return grid_label(grid_hface(c, parse_grid(lab), i));
    };
    auto vface_fn = [&c](int, int, int j, const std::string& lab) {
        return grid_label(grid_vface(c, parse_grid(lab), j));
    };
    auto hdeg_fn = [&c](int, int, int i, const std::string& lab) {
        return grid_label(grid_hdeg(c, parse_grid(lab), i));
    };
    auto vdeg_fn = [&c](int, int, int j, const std::string& lab) {
        return grid_label(grid_vdeg(c, parse_grid(lab), j));
    };
    return TruncatedBisimplicialSet::build(D1, D2, enumerate, hface_fn, vface_fn, hdeg_fn,
                                           vdeg_fn, budget);
}

// --- b_css, computed independently ------------------------------------------

namespace {

/// Cell of the complete-Segal-style object: an m-chain plus an n-list of
/// natural isomorphism component tuples. Label "chain;u^1;u^2;...".
struct CssCell {
    std::vector<int> chain;                   // nerve-style: object id at m=0
    std::vector<std::vector<int>> trans;      // n tuples of m+1 components
};

std::string css_label(const CssCell& c) {
    std::string out = join_ints(c.chain);
    for (const auto& u : c.trans) out += ";" + join_ints(u);
    return out;
}

CssCell parse_css(const std::string& lab) {
    auto parts = split(lab, ';');
    CssCell c;
    c.chain = parse_ints(parts[0]);
    for (std::size_t k = 1; k < parts.size(); ++k) c.trans.push_back(parse_ints(parts[k]));
    return c;
}

std::vector<int> chain_objects(const FiniteCategory& c, int m, const std::vector<int>& chain) {
    std::vector<int> obj;
    if (m == 0) {
        obj.push_back(chain[0]);
    } else {
        obj.push_back(c.src[static_cast<std::size_t>(chain[0])]);
        for (int k = 0; k < m; ++k)
            obj.push_back(c.tgt[static_cast<std::size_t>(chain[static_cast<std::size_t>(k)])]);
    }
    return obj;
}

/// Target chain of a natural isomorphism with components u out of `chain`.
std::vector<int> chain_push(const FiniteCategory& c, int m, const std::vector<int>& chain,
                            const std::vector<int>& u) {
    if (m == 0) return {c.tgt[static_cast<std::size_t>(u[0])]};
    std::vector<int> out;
    for (int k = 0; k < m; ++k)
        out.push_back(c.compose(
            c.compose(u[static_cast<std::size_t>(k) + 1], chain[static_cast<std::size_t>(k)]),
            c.inverse(u[static_cast<std::size_t>(k)])));
    return out;
}

/// The chain at vertical level j of a cell.
std::vector<int> css_chain_at(const FiniteCategory& c, int m, const CssCell& cell, int j) {
    std::vector<int> ch = cell.chain;
    for (int k = 0; k < j; ++k) ch = chain_push(c, m, ch, cell.trans[static_cast<std::size_t>(k)]);
    return ch;
}

/// Natural isomorphisms out of `chain`, found by checking the naturality
/// squares against every candidate target chain.
std::vector<std::pair<std::vector<int>, std::vector<int>>> nat_isos(
    const FiniteCategory& c, int m, const std::vector<int>& chain,
    const std::vector<std::vector<int>>& all_chains) {
    std::vector<int> obj = chain_objects(c, m, chain);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;  // (target, components)
    for (const auto& target : all_chains) {
        std::vector<int> tobj = chain_objects(c, m, target);
        // enumerate component tuples u_k: obj[k] -> tobj[k], invertible
        std::vector<std::vector<int>> cand(static_cast<std::size_t>(m) + 1);
        bool feasible = true;
        for (int k = 0; k <= m && feasible; ++k) {
            for (int f = 0; f < c.size(); ++f)
                if (c.src[static_cast<std::size_t>(f)] == obj[static_cast<std::size_t>(k)] &&
                    c.tgt[static_cast<std::size_t>(f)] == tobj[static_cast<std::size_t>(k)] &&
                    c.is_invertible(f))
                    cand[static_cast<std::size_t>(k)].push_back(f);
            if (cand[static_cast<std::size_t>(k)].empty()) feasible = false;
        }
        if (!feasible) continue;
        std::vector<std::size_t> pick(static_cast<std::size_t>(m) + 1, 0);
        while (true) {
            std::vector<int> u;
            for (int k = 0; k <= m; ++k)
                u.push_back(cand[static_cast<std::size_t>(k)][pick[static_cast<std::size_t>(k)]]);
            bool natural = true;
            for (int k = 0; k < m && natural; ++k) {
                int lhs = c.compose(u[static_cast<std::size_t>(k) + 1],
                                    chain[static_cast<std::size_t>(k)]);
                int rhs = c.compose(target[static_cast<std::size_t>(k)],
                                    u[static_cast<std::size_t>(k)]);
                natural = lhs == rhs;
            }
            if (natural) out.emplace_back(target, u);
            int k = m;
            while (k >= 0) {
                auto& p = pick[static_cast<std::size_t>(k)];
                if (++p < cand[static_cast<std::size_t>(k)].size()) break;
                p = 0;
                --k;
            }
            if (k < 0) break;
        }
    }
    return out;
}

}  // namespace

TruncatedBisimplicialSet b_css(const FiniteCategory& c, int D1, int D2, long budget) {
    long counted = 0;
    auto enumerate = [&c, budget, &counted](int m, int n) {
        auto all_chains = chains_of(c, m);
        std::vector<CssCell> cells;
        for (const auto& ch : all_chains) cells.push_back({ch, {}});
        for (int step = 0; step < n; ++step) {
            std::vector<CssCell> next;
            for (const auto& cell : cells) {
                auto top = css_chain_at(c, m, cell, step);
                for (const auto& [target, u] : nat_isos(c, m, top, all_chains)) {
                    (void)target;
                    CssCell e = cell;
                    e.trans.push_back(u);
                    next.push_back(std::move(e));
                    if (counted + static_cast<long>(next.size()) > budget) throw TooLarge();
                }
            }
            cells = std::move(next);
        }
        counted += static_cast<long>(cells.size());
        if (counted > budget) throw TooLarge();
        std::vector<std::string> out;
        for (const auto& cell : cells) out.push_back(css_label(cell));
        return out;
    };
    auto hface_fn = [&c](int m, int, int i, const std::string& lab) {
        CssCell cell = parse_css(lab);
        CssCell r;
        r.chain = parse_ints(nerve_face(c, m, i, join_ints(cell.chain)));
        for (const auto& u : cell.trans) {
            std::vector<int> v = u;
            v.erase(v.begin() + i);
            r.trans.push_back(v);
        }
        return css_label(r);
    };
    auto vface_fn = [&c](int m, int n, int j, const std::string& lab) {
        CssCell cell = parse_css(lab);
        CssCell r;
        if (j == 0) {
            r.chain = chain_push(c, m, cell.chain, cell.trans[0]);
            for (int k = 1; k < n; ++k) r.trans.push_back(cell.trans[static_cast<std::size_t>(k)]);
        } else if (j == n) {
            r.chain = cell.chain;
            for (int k = 0; k < n - 1; ++k)
                r.trans.push_back(cell.trans[static_cast<std::size_t>(k)]);
        } else {
            r.chain = cell.chain;
            for (int k = 0; k < n; ++k) {
                if (k == j) continue;
                if (k == j - 1) {
                    std::vector<int> comp;
                    for (int t = 0; t <= m; ++t)
                        comp.push_back(c.compose(
                            cell.trans[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)],
                            cell.trans[static_cast<std::size_t>(j) - 1]
                                      [static_cast<std::size_t>(t)]));
                    r.trans.push_back(comp);
                } else {
                    r.trans.push_back(cell.trans[static_cast<std::size_t>(k)]);
                }
            }
        }
        return css_label(r);
    };
    auto hdeg_fn = [&c](int m, int, int i, const std::string& lab) {
        CssCell cell = parse_css(lab);
        CssCell r;
        r.chain = parse_ints(nerve_deg(c, m, i, join_ints(cell.chain)));
        for (const auto& u : cell.trans) {
            std::vector<int> v = u;
            v.insert(v.begin() + i, v[static_cast<std::size_t>(i)]);
            r.trans.push_back(v);
        }
        return css_label(r);
    };
    auto vdeg_fn = [&c](int m, int, int j, const std::string& lab) {
        CssCell cell = parse_css(lab);
        CssCell r;
        r.chain = cell.chain;
        std::vector<int> idtuple;
        auto at_j = css_chain_at(c, m, cell, j);
        for (int x : chain_objects(c, m, at_j))
            idtuple.push_back(c.ident[static_cast<std::size_t>(x)]);
        for (int k = 0; k < static_cast<int>(cell.trans.size()); ++k) {
            if (k == j) r.trans.push_back(idtuple);
            r.trans.push_back(cell.trans[static_cast<std::size_t>(k)]);
        }
        if (j == static_cast<int>(cell.trans.size())) r.trans.push_back(idtuple);
        return css_label(r);
    };
    return TruncatedBisimplicialSet::build(D1, D2, enumerate, hface_fn, vface_fn, hdeg_fn,
                                           vdeg_fn, budget);
}

std::string css_to_grid_label(const FiniteCategory& c, int m, int n, const std::string& lab) {
    CssCell cell = parse_css(lab);
    Grid g;
    g.m = m;
    g.n = n;
    std::vector<std::vector<int>> cols_obj, cols_hor;
    std::vector<int> ch = cell.chain;
    for (int a = 0; a <= n; ++a) {
        cols_obj.push_back(chain_objects(c, m, ch));
        cols_hor.push_back(m == 0 ? std::vector<int>{} : ch);
        if (a < n) ch = chain_push(c, m, ch, cell.trans[static_cast<std::size_t>(a)]);
    }
    for (int i = 0; i <= m; ++i)
        for (int a = 0; a <= n; ++a)
            g.obj.push_back(cols_obj[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)]);
    for (int i = 0; i < m; ++i)
        for (int a = 0; a <= n; ++a)
            g.hor.push_back(cols_hor[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)]);
    for (int i = 0; i <= m; ++i)
        for (int a = 0; a < n; ++a)
            g.ver.push_back(cell.trans[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)]);
    return grid_label(g);
}

std::string grid_label_map(const CategoryFunctor& f, const std::string& lab) {
    Grid g = parse_grid(lab);
    for (auto& x : g.obj) x = f.obj[static_cast<std::size_t>(x)];
    for (auto& h : g.hor) h = f.mor[static_cast<std::size_t>(h)];
    for (auto& v : g.ver) v = f.mor[static_cast<std::size_t>(v)];
    return grid_label(g);
}

// --- restrictions and constant extensions -----------------------------------

TruncatedSimplicialSet iota_star(int axis, const TruncatedBisimplicialSet& y) {
    if (axis != 1 && axis != 2) throw Error("axis must be 1 or 2");
    int D = axis == 1 ? y.degree_h() : y.degree_v();
    auto lvl = [axis, &y](int m, int idx) {
        return axis == 1 ? y.label(m, 0, idx) : y.label(0, m, idx);
    };
    auto enumerate = [axis, &y, lvl](int m) {
        int sz = axis == 1 ? y.size(m, 0) : y.size(0, m);
        std::vector<std::string> out;
        for (int s = 0; s < sz; ++s) out.push_back(lvl(m, s));
        return out;
    };
    auto face_fn = [axis, &y, lvl](int m, int i, const std::string& lab) {
        int idx = axis == 1 ? y.index_of(m, 0, lab) : y.index_of(0, m, lab);
        int r = axis == 1 ? y.hface(m, 0, i, idx) : y.vface(0, m, i, idx);
        return lvl(m - 1, r);
    };
    auto deg_fn = [axis, &y, lvl](int m, int i, const std::string& lab) {
        int idx = axis == 1 ? y.index_of(m, 0, lab) : y.index_of(0, m, lab);
        int r = axis == 1 ? y.hdeg(m, 0, i, idx) : y.vdeg(0, m, i, idx);
        return lvl(m + 1, r);
    };
    return TruncatedSimplicialSet::build(D, enumerate, face_fn, deg_fn);
}

TruncatedBisimplicialSet p_star(int axis, const TruncatedSimplicialSet& x, int other_degree) {
    if (axis != 1 && axis != 2) throw Error("axis must be 1 or 2");
    // axis 1: cells (m,n) = X_m, vertical operators identity; axis 2: mirror.
    auto active = [axis](int m, int n) { return axis == 1 ? m : n; };
    auto enumerate = [&x, active](int m, int n) {
        std::vector<std::string> out;
        for (int s = 0; s < x.size(active(m, n)); ++s) out.push_back(x.label(active(m, n), s));
        return out;
    };
    auto act_face = [&x, active](int m, int n, int i, const std::string& lab) {
        int lv = active(m, n);
        return x.label(lv - 1, x.face(lv, i, x.index_of(lv, lab)));
    };
    auto act_deg = [&x, active](int m, int n, int i, const std::string& lab) {
        int lv = active(m, n);
        return x.label(lv + 1, x.degeneracy(lv, i, x.index_of(lv, lab)));
    };
    auto id_op = [](int, int, int, const std::string& lab) { return lab; };
    int D1 = axis == 1 ? x.degree() : other_degree;
    int D2 = axis == 1 ? other_degree : x.degree();
    if (axis == 1)
        return TruncatedBisimplicialSet::build(D1, D2, enumerate, act_face, id_op, act_deg, id_op);
    return TruncatedBisimplicialSet::build(D1, D2, enumerate, id_op, act_face, id_op, act_deg);
}

// --- lemma reports ----------------------------------------------------------

LemmaReport lemma_pre_check(const FiniteCategory& c, int D) {
    LemmaReport rep;
    TruncatedSimplicialSet n_c = nerve(c, D);
    FiniteGroupoid cx = core(c);
    TruncatedSimplicialSet n_cx = nerve(cx, D);
    TruncatedBisimplicialSet row = t_pling(c, D, 0);
    TruncatedBisimplicialSet col = t_pling(c, 0, D);
    for (int m = 0; m <= D; ++m) rep.level_counts.push_back(n_c.size(m));
    for (int m = 0; m <= D; ++m) rep.level_counts.push_back(n_cx.size(m));
    // row 0 of the grid object is the nerve: forget the trivial column data
    auto row_map = [](int m, const std::string& lab) {
        Grid g = parse_grid(lab);
        return m == 0 ? std::to_string(g.obj[0]) : join_ints(g.hor);
    };
    if (!simplicial_iso_check(iota_star(1, row), n_c, row_map)) {
        rep.detail = "row-0 comparison with the nerve failed";
        return rep;
    }
    // column 0 is the nerve of the core: vertical generators, renumbered
    auto col_map = [&c](int n, const std::string& lab) {
        Grid g = parse_grid(lab);
        if (n == 0) return std::to_string(g.obj[0]);
        std::vector<int> out;
        for (int v : g.ver) out.push_back(core_id(c, v));
        return join_ints(out);
    };
    if (!simplicial_iso_check(iota_star(2, col), n_cx, col_map)) {
        rep.detail = "column-0 comparison with the nerve of the core failed";
        return rep;
    }
    rep.ok = true;
    return rep;
}

LemmaReport lemma_a1_check(const FiniteCategory& c, int D) {
    LemmaReport rep;
    int r = D / 2;
    TruncatedBisimplicialSet grid = t_pling(c, r, r);
    TruncatedBisimplicialSet css = b_css(c, r, r);
    for (int m = 0; m <= r; ++m)
        for (int n = 0; n <= r; ++n) rep.level_counts.push_back(grid.size(m, n));
    auto map = [&c](int m, int n, const std::string& lab) {
        return css_to_grid_label(c, m, n, lab);
    };
    rep.ok = bisimplicial_iso_check(css, grid, map);
    if (!rep.ok) rep.detail = "bisimplicial comparison failed";
    return rep;
}

// --- Segal / coskeletal checkers --------------------------------------------

namespace {

/// The (k,k+1) edge of an n-simplex.
int spine_edge(const TruncatedSimplicialSet& x, int n, int k, int idx) {
    int lvl = n;
    while (lvl > k + 1) {
        idx = x.face(lvl, lvl, idx);
        --lvl;
    }
    while (lvl > 1) {
        idx = x.face(lvl, 0, idx);
        --lvl;
    }
    return idx;
}

}  // namespace

SegalReport segal_check(const TruncatedSimplicialSet& x, int up_to) {
    SegalReport rep;
    up_to = std::min(up_to, x.degree());
    for (int n = 2; n <= up_to; ++n) {
        rep.levels.push_back(n);
        // spines, checked injective
        std::map<std::vector<int>, int> spines;
        bool level_ok = true;
        for (int s = 0; s < x.size(n); ++s) {
            std::vector<int> spine;
            for (int k = 0; k < n; ++k) spine.push_back(spine_edge(x, n, k, s));
            if (!spines.emplace(spine, s).second) level_ok = false;
        }
        // composable edge tuples
        long tuples = 0;
        std::vector<int> cur;
        std::function<void()> dfs = [&]() {
            if (static_cast<int>(cur.size()) == n) {
                ++tuples;
                if (spines.find(cur) == spines.end()) level_ok = false;
                return;
            }
            for (int e = 0; e < x.size(1); ++e) {
                if (!cur.empty() && x.face(1, 0, cur.back()) != x.face(1, 1, e)) continue;
                cur.push_back(e);
                dfs();
                cur.pop_back();
            }
        };
        dfs();
        if (tuples != static_cast<long>(x.size(n))) level_ok = false;
        rep.verdict.push_back(level_ok);
        rep.ok = rep.ok && level_ok;
    }
    return rep;
}

bool coskeletal_check(const TruncatedSimplicialSet& x, int k, long budget) {
    for (int m = std::max(k + 1, 1); m <= x.degree(); ++m) {
        // boundary tuples, checked injective
        std::map<std::vector<int>, int> boundaries;
        bool ok = true;
        for (int s = 0; s < x.size(m); ++s) {
            std::vector<int> b;
            for (int i = 0; i <= m; ++i) b.push_back(x.face(m, i, s));
            if (!boundaries.emplace(b, s).second) return false;
        }
        // compatible tuples (y_0,...,y_m): d_i y_j = d_{j-1} y_i for i < j
        long count = 0;
        std::vector<int> cur;
        std::function<void()> dfs = [&]() {
            if (static_cast<int>(cur.size()) == m + 1) {
                ++count;
                if (count > budget) throw TooLarge();
                if (boundaries.find(cur) == boundaries.end()) ok = false;
                return;
            }
            int j = static_cast<int>(cur.size());
            for (int y = 0; y < x.size(m - 1); ++y) {
                bool fits = true;
                if (m >= 2)
                    for (int i = 0; i < j && fits; ++i)
                        fits = x.face(m - 1, i, y) ==
                               x.face(m - 1, j - 1, cur[static_cast<std::size_t>(i)]);
                if (!fits) continue;
                cur.push_back(y);
                dfs();
                cur.pop_back();
            }
        };
        dfs();
        if (!ok || count != static_cast<long>(x.size(m))) return false;
    }
    return true;
}

// --- Grothendieck construction ----------------------------------------------

void validate_simplicial_functor(const SimplicialFunctor& f) {
    f.base.validate();
    if (!f.base.is_groupoid()) throw Error("base must be a groupoid");
    if (static_cast<int>(f.value.size()) != f.base.n_obj ||
        static_cast<int>(f.action.size()) != f.base.size())
        throw Error("functor table shape mismatch");
    int D = f.value.front().degree();
    for (const auto& v : f.value)
        if (v.degree() != D) throw Error("values must share the truncation degree");
    auto check_map = [&f, D](int g) {
        const auto& a = f.action[static_cast<std::size_t>(g)];
        const auto& sx = f.value[static_cast<std::size_t>(f.base.src[static_cast<std::size_t>(g)])];
        const auto& tx = f.value[static_cast<std::size_t>(f.base.tgt[static_cast<std::size_t>(g)])];
        if (static_cast<int>(a.size()) != D + 1) throw Error("action missing levels");
        for (int m = 0; m <= D; ++m) {
            if (static_cast<int>(a[static_cast<std::size_t>(m)].size()) != sx.size(m))
                throw Error("action level size mismatch");
            for (int s = 0; s < sx.size(m); ++s) {
                int t = a[static_cast<std::size_t>(m)][static_cast<std::size_t>(s)];
                if (t < 0 || t >= tx.size(m)) throw Error("action out of range");
            }
        }
        for (int m = 1; m <= D; ++m)
            for (int s = 0; s < sx.size(m); ++s)
                for (int i = 0; i <= m; ++i)
                    if (tx.face(m, i,
                                a[static_cast<std::size_t>(m)][static_cast<std::size_t>(s)]) !=
                        a[static_cast<std::size_t>(m) - 1]
                         [static_cast<std::size_t>(sx.face(m, i, s))])
                        throw Error("action is not a simplicial map");
        for (int m = 0; m < D; ++m)
            for (int s = 0; s < sx.size(m); ++s)
                for (int i = 0; i <= m; ++i)
                    if (tx.degeneracy(
                            m, i, a[static_cast<std::size_t>(m)][static_cast<std::size_t>(s)]) !=
                        a[static_cast<std::size_t>(m) + 1]
                         [static_cast<std::size_t>(sx.degeneracy(m, i, s))])
                        throw Error("action is not a simplicial map");
    };
    for (int g = 0; g < f.base.size(); ++g) check_map(g);
    for (int x = 0; x < f.base.n_obj; ++x) {
        const auto& a = f.action[static_cast<std::size_t>(f.base.ident[static_cast<std::size_t>(x)])];
        for (int m = 0; m <= D; ++m)
            for (int s = 0; s < f.value[static_cast<std::size_t>(x)].size(m); ++s)
                if (a[static_cast<std::size_t>(m)][static_cast<std::size_t>(s)] != s)
                    throw Error("identity does not act as identity");
    }
    for (int g = 0; g < f.base.size(); ++g)
        for (int h = 0; h < f.base.size(); ++h) {
            if (f.base.tgt[static_cast<std::size_t>(h)] != f.base.src[static_cast<std::size_t>(g)])
                continue;
            int gh = f.base.compose(g, h);
            for (int m = 0; m <= D; ++m)
                for (int s = 0;
                     s <
                     f.value[static_cast<std::size_t>(f.base.src[static_cast<std::size_t>(h)])]
                         .size(m);
                     ++s)
                    if (f.action[static_cast<std::size_t>(gh)][static_cast<std::size_t>(m)]
                                [static_cast<std::size_t>(s)] !=
                        f.action[static_cast<std::size_t>(g)][static_cast<std::size_t>(m)]
                                [static_cast<std::size_t>(
                                    f.action[static_cast<std::size_t>(h)]
                                            [static_cast<std::size_t>(m)]
                                            [static_cast<std::size_t>(s)])])
                        throw Error("actions do not compose");
        }
}

TruncatedSimplicialSet grothendieck(const SimplicialFunctor& f) {
    validate_simplicial_functor(f);
    const FiniteGroupoid& b = f.base;
    int D = f.value.front().degree();
    auto first_obj = [&b](int m, const std::vector<int>& ch) {
        return m == 0 ? ch[0] : b.src[static_cast<std::size_t>(ch[0])];
    };
    auto enumerate = [&](int m) {
        std::vector<std::string> out;
        for (const auto& ch : chains_of(b, m)) {
            int x = first_obj(m, ch);
            for (int s = 0; s < f.value[static_cast<std::size_t>(x)].size(m); ++s)
                out.push_back(join_ints(ch) + "|" +
                              f.value[static_cast<std::size_t>(x)].label(m, s));
        }
        return out;
    };
    auto split_cell = [](const std::string& lab) {
        auto pos = lab.find('|');
        return std::pair<std::string, std::string>(lab.substr(0, pos), lab.substr(pos + 1));
    };
    auto face_fn = [&](int m, int i, const std::string& lab) {
        auto [chs, ss] = split_cell(lab);
        std::vector<int> ch = parse_ints(chs);
        int x = first_obj(m, ch);
        const auto& vx = f.value[static_cast<std::size_t>(x)];
        int sidx = vx.index_of(m, ss);
        std::string new_chain = nerve_face(b, m, i, chs);
        int fidx = vx.face(m, i, sidx);
        if (i == 0) {
            // push forward along the dropped first morphism
            int g = ch[0];
            int y = b.tgt[static_cast<std::size_t>(g)];
            int tidx = f.action[static_cast<std::size_t>(g)][static_cast<std::size_t>(m) - 1]
                               [static_cast<std::size_t>(fidx)];
            return new_chain + "|" + f.value[static_cast<std::size_t>(y)].label(m - 1, tidx);
        }
        return new_chain + "|" + vx.label(m - 1, fidx);
    };
    auto deg_fn = [&](int m, int i, const std::string& lab) {
        auto [chs, ss] = split_cell(lab);
        std::vector<int> ch = parse_ints(chs);
        int x = first_obj(m, ch);
        const auto& vx = f.value[static_cast<std::size_t>(x)];
        int sidx = vx.index_of(m, ss);
        return nerve_deg(b, m, i, chs) + "|" + vx.label(m + 1, vx.degeneracy(m, i, sidx));
    };
    return TruncatedSimplicialSet::build(D, enumerate, face_fn, deg_fn);
}

SimplicialFunctor constant_functor(const FiniteGroupoid& g, const TruncatedSimplicialSet& x) {
    SimplicialFunctor f;
    f.base = g;
    f.value.assign(static_cast<std::size_t>(g.n_obj), x);
    std::vector<std::vector<int>> id_action;
    for (int m = 0; m <= x.degree(); ++m) {
        std::vector<int> lvl(static_cast<std::size_t>(x.size(m)));
        for (int s = 0; s < x.size(m); ++s) lvl[static_cast<std::size_t>(s)] = s;
        id_action.push_back(std::move(lvl));
    }
    f.action.assign(static_cast<std::size_t>(g.size()), id_action);
    return f;
}

}  // namespace lidx

