#pragma once

#include <optional>

#include "lidx/ring.hpp"

namespace lidx {

/// Dense matrix over F = Frac(O). Immutable by convention outside the linalg
/// routines; desk scale (n <= 8 typical), so all algorithms favor exactness
/// over asymptotics.
class MatrixF {
public:
    MatrixF(const RingConfig& cfg, int rows, int cols)
        : cfg_(cfg), rows_(rows), cols_(cols),
          entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                   FieldElement::zero(cfg)) {
        if (rows < 1 || cols < 1) throw Error("matrix dimensions must be positive");
    }

    static MatrixF identity(const RingConfig& cfg, int n);
    static MatrixF diagonal(const RingConfig& cfg, const std::vector<FieldElement>& d);
    /// diag(pi^{e_0}, ..., pi^{e_{n-1}})
    static MatrixF pi_diagonal(const RingConfig& cfg, const std::vector<long>& exps);

    const RingConfig& config() const { return cfg_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldElement& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }
    FieldElement& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }

    MatrixF transpose() const;
    MatrixF mul(const MatrixF& o) const;
    MatrixF add(const MatrixF& o) const;
    MatrixF scaled(const FieldElement& c) const;
    /// multiply every entry by pi^k
    MatrixF shifted(long k) const;
    MatrixF hstack(const MatrixF& o) const;
    MatrixF submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

    /// Exact expansion-free determinant: dynamic programming over column
    /// subsets, so exact inputs give exact results.
    FieldElement det() const;
    /// Adjugate transpose divided by det; only the det inversion truncates.
    MatrixF inverse() const;
    MatrixF adjugate() const;

    bool all_integral() const;
    /// Minimum entry valuation; VAL_INF for the zero matrix.
    long min_valuation() const;
    bool same_value(const MatrixF& o) const;
    bool exact_equal(const MatrixF& o) const;
    bool is_identity() const;

    std::string str() const;

    friend MatrixF operator*(const MatrixF& a, const MatrixF& b) { return a.mul(b); }

private:
    RingConfig cfg_;
    int rows_, cols_;
    std::vector<FieldElement> entries_;
};

MatrixF parse_matrix(const RingConfig& cfg, std::string_view text);

struct SmithForm {
    std::vector<long> exponents;  // ascending; one per nonzero invariant factor
    MatrixF U, V;                 // U * M * V = diag(pi^e) to working precision
};

/// Smith normal form over the DVR for a matrix with integral entries.
/// Pivoting picks the entry of minimal valuation (ties: lowest row, then
/// column); elimination uses unit row/column scalings so exact inputs stay
/// exact until the final pivot normalization.
SmithForm smith_over_dvr(const MatrixF& M);

/// Elementary divisor exponents of coker(O^cols -> O^rows) given by M,
/// zeros dropped, ascending; pads with... the cokernel of a non-surjective
/// map of free modules is reported via exponents only when M has full row
/// rank over F; otherwise RankDeficient.
std::vector<long> cokernel_exponents(const MatrixF& M);

/// Column Hermite form: for an n x m matrix (m >= n) of full row rank over
/// F, the unique upper-triangular n x n matrix with the same O-column span,
/// pivots pi^{e_i}, and the row-k entries right of the pivot reduced mod
/// pi^{e_k}.
MatrixF hermite_over_dvr(const MatrixF& M);

}  // namespace lidx
