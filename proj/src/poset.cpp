#include "lidx/poset.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace lidx {

Poset::Poset(int n, const std::vector<std::pair<int, int>>& relations,
             std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
    if (n < 1 || n > 64) throw Error("poset size must be in 1..64");
    up_.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) up_[static_cast<std::size_t>(i)] = std::uint64_t(1) << i;
    for (auto& [a, b] : relations) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw Error("relation out of range");
        up_[static_cast<std::size_t>(a)] |= std::uint64_t(1) << b;
    }
    // transitive closure
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if ((up_[static_cast<std::size_t>(i)] >> k) & 1)
                up_[static_cast<std::size_t>(i)] |= up_[static_cast<std::size_t>(k)];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && le(i, j) && le(j, i)) throw NotAPoset();
    if (labels_.empty())
        for (int i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
    if (static_cast<int>(labels_.size()) != n) throw Error("label count mismatch");
}

std::vector<std::pair<int, int>> Poset::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (lt(a, b)) out.emplace_back(a, b);
    return out;
}

std::vector<std::pair<int, int>> Poset::covers() const {
    std::vector<std::pair<int, int>> out;
    for (auto [a, b] : edges()) {
        bool cover = true;
        for (int c = 0; c < n_ && cover; ++c)
            if (c != a && c != b && lt(a, c) && lt(c, b)) cover = false;
        if (cover) out.emplace_back(a, b);
    }
    return out;
}

std::optional<int> Poset::final_element() const {
    for (int m = 0; m < n_; ++m) {
        bool fin = true;
        for (int x = 0; x < n_ && fin; ++x)
            if (!le(x, m)) fin = false;
        if (fin) return m;
    }
    return std::nullopt;
}

bool Poset::is_minimal(int x) const {
    for (int a = 0; a < n_; ++a)
        if (lt(a, x)) return false;
    return true;
}

bool Poset::is_maximal(int x) const {
    for (int b = 0; b < n_; ++b)
        if (lt(x, b)) return false;
    return true;
}

std::string Poset::str() const {
    std::ostringstream out;
    out << n_ << ";";
    bool first = true;
    for (auto [a, b] : covers()) {
        out << (first ? " " : ", ") << a << "<" << b;
        first = false;
    }
    return out.str();
}

BasedPoset::BasedPoset(Poset p, std::vector<int> basepoints, bool relax)
    : poset_(std::move(p)), base_(std::move(basepoints)), final_(-1) {
    auto fin = poset_.final_element();
    if (!fin) throw Error("based poset needs a final element");
    final_ = *fin;
    if (base_.empty()) throw Error("based poset needs at least one basepoint");
    for (int x : base_) {
        if (x < 0 || x >= poset_.size()) throw Error("basepoint out of range");
        if (!relax && !poset_.is_minimal(x)) throw Error("basepoint is not minimal");
    }
}

BasedPoset::BasedPoset(Poset p, std::vector<int> basepoints)
    : BasedPoset(std::move(p), std::move(basepoints), false) {}

BasedPoset BasedPoset::relaxed(Poset p, std::vector<int> basepoints) {
    return BasedPoset(std::move(p), std::move(basepoints), true);
}

bool BasedPoset::is_basepoint(int x) const {
    return std::find(base_.begin(), base_.end(), x) != base_.end();
}

std::string BasedPoset::str() const {
    std::ostringstream out;
    out << poset_.str() << "\nbase:";
    for (std::size_t i = 0; i < base_.size(); ++i) out << (i ? "," : " ") << base_[i];
    return out.str();
}

bool is_admissible_tree(const Poset& I, const std::vector<std::pair<int, int>>& tree) {
    int n = I.size();
    if (static_cast<int>(tree.size()) != n - 1) return false;
    for (auto [a, b] : tree)
        if (!I.lt(a, b)) return false;  // must be edges of the comparability graph
    // acyclic + connected (undirected)
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    for (auto [a, b] : tree) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[static_cast<std::size_t>(ra)] = rb;
    }
    // directed reachability inside the tree
    std::vector<std::uint64_t> reach(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) reach[static_cast<std::size_t>(i)] = std::uint64_t(1) << i;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [a, b] : tree) {
            std::uint64_t merged =
                reach[static_cast<std::size_t>(a)] | reach[static_cast<std::size_t>(b)];
            if (merged != reach[static_cast<std::size_t>(a)]) {
                reach[static_cast<std::size_t>(a)] = merged;
                changed = true;
            }
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (!(reach[static_cast<std::size_t>(x)] & reach[static_cast<std::size_t>(y)]))
                return false;
    return true;
}

std::vector<std::vector<std::pair<int, int>>> enumerate_admissible_trees(const Poset& I) {
    auto es = I.edges();
    int n = I.size(), m = static_cast<int>(es.size());
    if (m > 24) throw TooLarge("tree enumeration limited to 24 comparability edges");
    std::vector<std::vector<std::pair<int, int>>> out;
    if (n == 1) {
        out.push_back({});
        return out;
    }
    std::vector<int> idx(static_cast<std::size_t>(n - 1));
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == n - 1) {
            std::vector<std::pair<int, int>> t;
            for (int i : idx) t.push_back(es[static_cast<std::size_t>(i)]);
            if (is_admissible_tree(I, t)) out.push_back(t);
            return;
        }
        for (int e = start; e < m; ++e) {
            idx[static_cast<std::size_t>(depth)] = e;
            rec(e + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

FramedPoset::FramedPoset(BasedPoset b, std::vector<std::pair<int, int>> t)
    : based(std::move(b)), tree(std::move(t)) {
    if (!is_admissible_tree(based.poset(), tree)) throw Error("tree is not admissible");
}

FramedPoset star_tree(const BasedPoset& I) {
    std::vector<std::pair<int, int>> t;
    int m = I.final_element();
    for (int x = 0; x < I.poset().size(); ++x)
        if (x != m) t.emplace_back(x, m);
    return FramedPoset(I, std::move(t));
}

BasedMorphism::BasedMorphism(const BasedPoset& src, const BasedPoset& tgt, std::vector<int> f_,
                             std::vector<int> sigma_)
    : f(std::move(f_)), sigma(std::move(sigma_)) {
    int n = src.poset().size();
    if (static_cast<int>(f.size()) != n) throw Error("morphism element map size mismatch");
    if (sigma.size() != src.basepoints().size())
        throw Error("morphism basepoint map size mismatch");
    for (int x : f)
        if (x < 0 || x >= tgt.poset().size()) throw Error("morphism image out of range");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (src.poset().le(a, b) &&
                !tgt.poset().le(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]))
                throw Error("morphism is not monotone");
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        int s = sigma[i];
        if (s < 0 || s >= static_cast<int>(tgt.basepoints().size()))
            throw Error("sigma out of range");
        if (f[static_cast<std::size_t>(src.basepoints()[i])] !=
            tgt.basepoints()[static_cast<std::size_t>(s)])
            throw Error("morphism does not respect basepoints");
    }
}

int b_interval_index(int k, int a, int b) {
    // intervals [a,b], enumerated a ascending, then b ascending from a
    int id = 0;
    for (int s = 0; s < a; ++s) id += k - s + 1;
    return id + (b - a);
}

BasedPoset b_poset(int k) {
    if (k < 0) throw Error("b_poset needs k >= 0");
    int n = (k + 1) * (k + 2) / 2;
    std::vector<std::pair<int, int>> rel;
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (int a = 0; a <= k; ++a)
        for (int b = a; b <= k; ++b) {
            int id = b_interval_index(k, a, b);
            labels[static_cast<std::size_t>(id)] =
                "[" + std::to_string(a) + "," + std::to_string(b) + "]";
            for (int c = 0; c <= a; ++c)
                for (int d = b; d <= k; ++d)
                    if (c != a || d != b)
                        rel.emplace_back(id, b_interval_index(k, c, d));  // inclusion
        }
    Poset p(n, rel, std::move(labels));
    std::vector<int> base;
    for (int i = 0; i <= k; ++i) base.push_back(b_interval_index(k, i, i));
    return BasedPoset(std::move(p), std::move(base));
}

std::vector<int> b_coface(int k, int i) {
    if (k < 1 || i < 0 || i > k) throw Error("bad coface index");
    auto delta = [&](int x) { return x >= i ? x + 1 : x; };
    int n = k * (k + 1) / 2;
    std::vector<int> map(static_cast<std::size_t>(n));
    for (int a = 0; a <= k - 1; ++a)
        for (int b = a; b <= k - 1; ++b)
            map[static_cast<std::size_t>(b_interval_index(k - 1, a, b))] =
                b_interval_index(k, delta(a), delta(b));
    return map;
}

int a_index(int n, int x, int y) {
    int id = 0;
    for (int s = 0; s < x; ++s) id += n - s + 1;
    return id + (y - x);
}

Poset a_poset(int n) {
    if (n < 0) throw Error("a_poset needs n >= 0");
    int sz = (n + 1) * (n + 2) / 2;
    std::vector<std::pair<int, int>> rel;
    std::vector<std::string> labels(static_cast<std::size_t>(sz));
    std::vector<std::pair<int, int>> elems;
    for (int x = 0; x <= n; ++x)
        for (int y = x; y <= n; ++y) {
            labels[static_cast<std::size_t>(a_index(n, x, y))] =
                "(" + std::to_string(x) + "," + std::to_string(y) + ")";
            elems.emplace_back(x, y);
        }
    for (auto [x1, y1] : elems)
        for (auto [x2, y2] : elems)
            if (x1 < x2 || (x1 == x2 && y1 < y2))
                rel.emplace_back(a_index(n, x1, y1), a_index(n, x2, y2));
    return Poset(sz, rel, std::move(labels));
}

BasedPoset a_based(int n) {
    std::vector<int> base;
    for (int i = 0; i <= n; ++i) base.push_back(a_index(n, i, i));
    return BasedPoset::relaxed(a_poset(n), std::move(base));
}

BasedPoset t_poset(int n) {
    if (n < 0) throw Error("t_poset needs n >= 0");
    int sz = n + 2;
    std::vector<std::pair<int, int>> rel;
    std::vector<std::string> labels;
    for (int i = 0; i <= n; ++i) {
        rel.emplace_back(i, n + 1);
        labels.push_back("b" + std::to_string(i));
    }
    labels.push_back("m");
    std::vector<int> base;
    for (int i = 0; i <= n; ++i) base.push_back(i);
    return BasedPoset(Poset(sz, rel, std::move(labels)), std::move(base));
}

CollapseResult collapse_basepoints(const BasedPoset& I) {
    int n = I.poset().size();
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<std::string> labels{"*"};
    int next = 1;
    for (int x = 0; x < n; ++x) {
        if (I.is_basepoint(x)) {
            map[static_cast<std::size_t>(x)] = 0;
        } else {
            map[static_cast<std::size_t>(x)] = next++;
            labels.push_back(I.poset().label(x));
        }
    }
    std::vector<std::pair<int, int>> rel;
    for (auto [a, b] : I.poset().edges())
        rel.emplace_back(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]);
    // Poset construction throws NotAPoset if the fusion created a cycle
    Poset q(next, rel, std::move(labels));
    return CollapseResult{std::move(q), std::move(map), 0};
}

GlueResult glue_b(const BasedPoset& I) {
    int k = static_cast<int>(I.basepoints().size()) - 1;
    BasedPoset B = b_poset(k);
    int nI = I.poset().size(), nB = B.poset().size();
    // glued ids: elements of I keep their ids; non-singleton intervals follow
    std::vector<int> from_source(static_cast<std::size_t>(nI));
    for (int x = 0; x < nI; ++x) from_source[static_cast<std::size_t>(x)] = x;
    std::vector<int> from_b(static_cast<std::size_t>(nB), -1);
    std::vector<std::string> labels;
    for (int x = 0; x < nI; ++x) labels.push_back(I.poset().label(x));
    int next = nI;
    for (int e = 0; e < nB; ++e) {
        bool single = false;
        for (int i = 0; i <= k; ++i)
            if (B.basepoints()[static_cast<std::size_t>(i)] == e) {
                from_b[static_cast<std::size_t>(e)] = I.basepoints()[static_cast<std::size_t>(i)];
                single = true;
                break;
            }
        if (!single) {
            from_b[static_cast<std::size_t>(e)] = next++;
            labels.push_back("B" + B.poset().label(e));
        }
    }
    std::vector<std::pair<int, int>> rel;
    for (auto [a, b] : I.poset().edges()) rel.emplace_back(a, b);
    for (auto [a, b] : B.poset().edges())
        rel.emplace_back(from_b[static_cast<std::size_t>(a)], from_b[static_cast<std::size_t>(b)]);
    // every non-singleton interval sits below every non-basepoint of I
    for (int e = 0; e < nB; ++e) {
        if (from_b[static_cast<std::size_t>(e)] < nI) continue;
        for (int y = 0; y < nI; ++y)
            if (!I.is_basepoint(y)) rel.emplace_back(from_b[static_cast<std::size_t>(e)], y);
    }
    Poset glued(next, rel, std::move(labels));
    std::vector<int> base = I.basepoints();
    return GlueResult{BasedPoset(std::move(glued), std::move(base)), std::move(from_source),
                      std::move(from_b)};
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t q = s.find(sep, pos);
        out.push_back(s.substr(pos, q == std::string::npos ? std::string::npos : q - pos));
        if (q == std::string::npos) break;
        pos = q + 1;
    }
    return out;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

Poset parse_poset(std::string_view text) {
    std::string s(text);
    auto lines = split(s, '\n');
    std::string head = trim(lines.empty() ? "" : lines[0]);
    auto semi = head.find(';');
    if (semi == std::string::npos) throw ParseError("poset: missing ';'");
    int n = 0;
    try {
        n = std::stoi(trim(head.substr(0, semi)));
    } catch (...) {
        throw ParseError("poset: bad element count");
    }
    std::vector<std::pair<int, int>> rel;
    std::string rest = trim(head.substr(semi + 1));
    if (!rest.empty())
        for (auto& tok : split(rest, ',')) {
            auto t = trim(tok);
            auto lt = t.find('<');
            if (lt == std::string::npos) throw ParseError("poset: expected i<j");
            try {
                rel.emplace_back(std::stoi(trim(t.substr(0, lt))),
                                 std::stoi(trim(t.substr(lt + 1))));
            } catch (const Error&) {
                throw;
            } catch (...) {
                throw ParseError("poset: bad relation");
            }
        }
    return Poset(n, rel);
}

BasedPoset parse_based_poset(std::string_view text) {
    std::string s(text);
    auto lines = split(s, '\n');
    Poset p = parse_poset(lines[0]);
    std::vector<int> base;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto l = trim(lines[i]);
        if (l.rfind("base:", 0) == 0) {
            for (auto& tok : split(l.substr(5), ',')) base.push_back(std::stoi(trim(tok)));
        }
    }
    if (base.empty()) throw ParseError("poset: missing base line");
    return BasedPoset(std::move(p), std::move(base));
}

}  // namespace lidx
