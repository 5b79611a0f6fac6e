#include "lidx/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace lidx {

namespace {

// Valuation info usable for pivoting: exact zero reports VAL_INF; an inexact
// element with no known nonzero digit reports its bound as "unknown".
struct PivotVal {
    bool known;
    long v;  // lower bound when !known
};

PivotVal pivot_val(const FieldElement& x) {
    if (x.is_zero()) return {true, VAL_INF};
    if (!x.exact() && x.rel_digits() == 0) return {false, x.abs_prec()};
    return {true, x.valuation()};
}

}  // namespace

MatrixF MatrixF::identity(const RingConfig& cfg, int n) {
    MatrixF m(cfg, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(cfg);
    return m;
}

MatrixF MatrixF::diagonal(const RingConfig& cfg, const std::vector<FieldElement>& d) {
    MatrixF m(cfg, static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < static_cast<int>(d.size()); ++i) m.at(i, i) = d[static_cast<std::size_t>(i)];
    return m;
}

MatrixF MatrixF::pi_diagonal(const RingConfig& cfg, const std::vector<long>& exps) {
    std::vector<FieldElement> d;
    for (long e : exps) d.push_back(FieldElement::monomial(cfg, 1, e));
    return diagonal(cfg, d);
}

MatrixF MatrixF::transpose() const {
    MatrixF m(cfg_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

MatrixF MatrixF::mul(const MatrixF& o) const {
    if (cols_ != o.rows_) throw Error("matmul dimension mismatch");
    MatrixF m(cfg_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            FieldElement s = FieldElement::zero(cfg_);
            for (int k = 0; k < cols_; ++k) s = s.add_lenient(at(i, k) * o.at(k, j));
            m.at(i, j) = s;
        }
    return m;
}

MatrixF MatrixF::add(const MatrixF& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix add dimension mismatch");
    MatrixF m(cfg_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).add_lenient(o.at(i, j));
    return m;
}

MatrixF MatrixF::scaled(const FieldElement& c) const {
    MatrixF m(cfg_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j) * c;
    return m;
}

MatrixF MatrixF::shifted(long k) const {
    MatrixF m(cfg_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).shift(k);
    return m;
}

MatrixF MatrixF::hstack(const MatrixF& o) const {
    if (rows_ != o.rows_) throw Error("hstack row mismatch");
    MatrixF m(cfg_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
    }
    return m;
}

MatrixF MatrixF::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    MatrixF m(cfg_, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
    return m;
}

FieldElement MatrixF::det() const {
    if (rows_ != cols_) throw Error("determinant of non-square matrix");
    int n = rows_;
    if (n > 16) throw TooLarge("determinant limited to n <= 16");
    // D[S] = det of the submatrix on rows 0..popcount(S)-1 and columns S.
    std::vector<FieldElement> D(std::size_t(1) << n, FieldElement::zero(cfg_));
    D[0] = FieldElement::one(cfg_);
    for (std::uint32_t S = 1; S < (std::uint32_t(1) << n); ++S) {
        int r = __builtin_popcount(S) - 1;  // row being expanded
        FieldElement acc = FieldElement::zero(cfg_);
        int pos = 0;
        for (int j = 0; j < n; ++j) {
            if (!(S & (std::uint32_t(1) << j))) continue;
            const FieldElement& a = at(r, j);
            if (!a.is_zero()) {
                FieldElement term = a * D[S ^ (std::uint32_t(1) << j)];
                if ((r + pos) % 2 != 0) term = -term;
                acc = acc.add_lenient(term);
            }
            ++pos;
        }
        D[S] = acc;
    }
    return D[(std::uint32_t(1) << n) - 1];
}

MatrixF MatrixF::adjugate() const {
    if (rows_ != cols_) throw Error("adjugate of non-square matrix");
    int n = rows_;
    MatrixF adj(cfg_, n, n);
    if (n == 1) {
        adj.at(0, 0) = FieldElement::one(cfg_);
        return adj;
    }
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> rs, cs;
            for (int k = 0; k < n; ++k)
                if (k != i) rs.push_back(k);
            for (int k = 0; k < n; ++k)
                if (k != j) cs.push_back(k);
            FieldElement c = submatrix(rs, cs).det();
            if ((i + j) % 2 != 0) c = -c;
            adj.at(j, i) = c;
        }
    return adj;
}

MatrixF MatrixF::inverse() const {
    FieldElement d = det();
    if (d.is_zero()) throw SingularMatrix();
    if (!d.exact() && d.rel_digits() == 0)
        throw SingularMatrix("determinant valuation not established as finite");
    return adjugate().scaled(d.inv());
}

bool MatrixF::all_integral() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const FieldElement& x) { return x.integral(); });
}

long MatrixF::min_valuation() const {
    long v = VAL_INF;
    for (const auto& x : entries_) {
        auto pv = pivot_val(x);
        if (!pv.known) throw PrecisionExhausted("entry valuation undetermined");
        v = std::min(v, pv.v);
    }
    return v;
}

bool MatrixF::same_value(const MatrixF& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (!entries_[i].same_value(o.entries_[i])) return false;
    return true;
}

bool MatrixF::exact_equal(const MatrixF& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (!entries_[i].exact_equal(o.entries_[i])) return false;
    return true;
}

bool MatrixF::is_identity() const {
    if (rows_ != cols_) return false;
    return same_value(identity(cfg_, rows_));
}

std::string MatrixF::str() const {
    std::ostringstream out;
    for (int i = 0; i < rows_; ++i) {
        if (i) out << "; ";
        for (int j = 0; j < cols_; ++j) {
            if (j) out << ", ";
            out << at(i, j).str();
        }
    }
    return out.str();
}

MatrixF parse_matrix(const RingConfig& cfg, std::string_view text) {
    std::vector<std::vector<FieldElement>> rows;
    std::string s(text);
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t semi = s.find(';', pos);
        std::string row = s.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        std::vector<FieldElement> entries;
        std::size_t rp = 0;
        while (rp <= row.size()) {
            std::size_t comma = row.find(',', rp);
            std::string cell =
                row.substr(rp, comma == std::string::npos ? std::string::npos : comma - rp);
            entries.push_back(parse_element(cfg, cell));
            if (comma == std::string::npos) break;
            rp = comma + 1;
        }
        rows.push_back(std::move(entries));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    if (rows.empty()) throw ParseError("empty matrix");
    MatrixF m(cfg, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw ParseError("ragged matrix rows");
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    }
    return m;
}

namespace {

// Pick the minimal-valuation entry of W restricted to (rows x cols); ties
// broken by lowest row, then column. Throws PrecisionExhausted when an
// undetermined entry could beat the best known candidate.
struct Pivot {
    int row = -1, col = -1;
    long v = VAL_INF;
};

Pivot find_pivot(const MatrixF& W, const std::vector<int>& rows, const std::vector<int>& cols) {
    Pivot best;
    long unknown_floor = VAL_INF;
    for (int i : rows)
        for (int j : cols) {
            auto pv = pivot_val(W.at(i, j));
            if (!pv.known) {
                unknown_floor = std::min(unknown_floor, pv.v);
                continue;
            }
            if (pv.v < best.v) best = {i, j, pv.v};
        }
    if (unknown_floor < best.v)
        throw PrecisionExhausted("pivot selection undecidable at working precision");
    return best;
}

}  // namespace

SmithForm smith_over_dvr(const MatrixF& M) {
    const RingConfig& cfg = M.config();
    int r = M.rows(), c = M.cols();
    MatrixF W = M;
    MatrixF U = MatrixF::identity(cfg, r), V = MatrixF::identity(cfg, c);
    std::vector<long> exps;
    int steps = std::min(r, c);
    for (int k = 0; k < steps; ++k) {
        std::vector<int> rs, cs;
        for (int i = k; i < r; ++i) rs.push_back(i);
        for (int j = k; j < c; ++j) cs.push_back(j);
        Pivot pv = find_pivot(W, rs, cs);
        if (pv.row < 0) break;  // remaining block exactly zero
        // move pivot to (k, k)
        if (pv.row != k)
            for (int j = 0; j < c; ++j) std::swap(W.at(k, j), W.at(pv.row, j));
        if (pv.row != k)
            for (int j = 0; j < r; ++j) std::swap(U.at(k, j), U.at(pv.row, j));
        if (pv.col != k)
            for (int i = 0; i < r; ++i) std::swap(W.at(i, k), W.at(i, pv.col));
        if (pv.col != k)
            for (int i = 0; i < c; ++i) std::swap(V.at(i, k), V.at(i, pv.col));
        long e = pv.v;
        FieldElement pu = W.at(k, k).shift(-e);  // unit part of the pivot
        // clear column k with unit row scalings (exactness-preserving):
        // R_i <- pu * R_i - (entry/pi^e) * R_k
        for (int i = k + 1; i < r; ++i) {
            const FieldElement entry = W.at(i, k);
            if (entry.is_zero()) continue;
            FieldElement q = entry.shift(-e);
            for (int j = 0; j < c; ++j) W.at(i, j) = (pu * W.at(i, j)).add_lenient(-(q * W.at(k, j)));
            for (int j = 0; j < r; ++j) U.at(i, j) = (pu * U.at(i, j)).add_lenient(-(q * U.at(k, j)));
            W.at(i, k) = FieldElement::zero(cfg);  // cancellation is exact by construction
        }
        // clear row k with unit column scalings
        for (int j = k + 1; j < c; ++j) {
            const FieldElement entry = W.at(k, j);
            if (entry.is_zero()) continue;
            FieldElement q = entry.shift(-e);
            for (int i = 0; i < r; ++i) W.at(i, j) = (pu * W.at(i, j)).add_lenient(-(q * W.at(i, k)));
            for (int i = 0; i < c; ++i) V.at(i, j) = (pu * V.at(i, j)).add_lenient(-(q * V.at(i, k)));
            W.at(k, j) = FieldElement::zero(cfg);
        }
        exps.push_back(e);
    }
    // check the leftover block (non-square case) is zero
    for (int i = static_cast<int>(exps.size()); i < r; ++i)
        for (int j = static_cast<int>(exps.size()); j < c; ++j)
            if (!W.at(i, j).is_zero())
                throw Error("internal: smith left a nonzero block");
    if (static_cast<int>(exps.size()) < steps)
        throw RankDeficient("zero block remains in smith normal form");
    // normalize pivots to exact pi^e
    for (int k = 0; k < static_cast<int>(exps.size()); ++k) {
        FieldElement u = W.at(k, k).shift(-exps[static_cast<std::size_t>(k)]);
        FieldElement ui = u.inv();
        for (int j = 0; j < r; ++j) U.at(k, j) = ui * U.at(k, j);
        W.at(k, k) = FieldElement::monomial(cfg, 1, exps[static_cast<std::size_t>(k)]);
    }
    return SmithForm{std::move(exps), std::move(U), std::move(V)};
}

std::vector<long> cokernel_exponents(const MatrixF& M) {
    SmithForm sf = smith_over_dvr(M);
    if (static_cast<int>(sf.exponents.size()) < M.rows())
        throw RankDeficient("cokernel has a free summand");
    std::vector<long> out;
    for (long e : sf.exponents)
        if (e > 0) out.push_back(e);
    return out;
}

MatrixF hermite_over_dvr(const MatrixF& M) {
    const RingConfig& cfg = M.config();
    int n = M.rows(), m = M.cols();
    if (m < n) throw RankDeficient("fewer generators than rank");
    MatrixF W = M;
    std::vector<int> pivot_col(static_cast<std::size_t>(n), -1);
    std::vector<long> pivot_exp(static_cast<std::size_t>(n), 0);
    std::vector<bool> used(static_cast<std::size_t>(m), false);
    for (int k = n - 1; k >= 0; --k) {
        std::vector<int> cs;
        for (int j = 0; j < m; ++j)
            if (!used[static_cast<std::size_t>(j)]) cs.push_back(j);
        Pivot pv = find_pivot(W, {k}, cs);
        if (pv.row < 0) throw RankDeficient("row has no pivot: matrix not of full row rank");
        int pc = pv.col;
        long e = pv.v;
        used[static_cast<std::size_t>(pc)] = true;
        pivot_col[static_cast<std::size_t>(k)] = pc;
        pivot_exp[static_cast<std::size_t>(k)] = e;
        // normalize the pivot column so the pivot is exactly pi^e
        FieldElement ui = W.at(k, pc).shift(-e).inv();
        for (int i = 0; i < k; ++i) W.at(i, pc) = W.at(i, pc) * ui;
        W.at(k, pc) = FieldElement::monomial(cfg, 1, e);
        // clear row k in the remaining unused columns
        for (int j : cs) {
            if (j == pc) continue;
            const FieldElement entry = W.at(k, j);
            if (entry.is_zero()) continue;
            FieldElement q = entry.shift(-e);
            for (int i = 0; i < k; ++i) W.at(i, j) = W.at(i, j).add_lenient(-(q * W.at(i, pc)));
            W.at(k, j) = FieldElement::zero(cfg);
        }
        // reduce the row-k entries of the pivot columns already placed
        for (int jj = k + 1; jj < n; ++jj) {
            int pj = pivot_col[static_cast<std::size_t>(jj)];
            const FieldElement entry = W.at(k, pj);
            if (entry.is_zero()) continue;
            auto [low, q] = entry.split_at(e);
            for (int i = 0; i < k; ++i) W.at(i, pj) = W.at(i, pj).add_lenient(-(q * W.at(i, pc)));
            W.at(k, pj) = low;
        }
    }
    MatrixF H(cfg, n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i <= j; ++i) H.at(i, j) = W.at(i, pivot_col[static_cast<std::size_t>(j)]);
    return H;
}

}  // namespace lidx
