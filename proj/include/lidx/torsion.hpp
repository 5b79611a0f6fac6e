#pragma once

#include <optional>

#include "lidx/matrix.hpp"

namespace lidx {

/// A finitely generated torsion O-module, isomorphic to the direct sum of
/// O/pi^{a_i} over its exponent multiset (sorted ascending). An optional
/// square integral presentation matrix realizes it as a cokernel; exponents
/// are the nonzero Smith exponents of the presentation.
class TorsionModule {
public:
    TorsionModule() = default;
    static TorsionModule from_exponents(const RingConfig& cfg, std::vector<long> exps);
    static TorsionModule from_presentation(const MatrixF& P);
    static TorsionModule zero_module(const RingConfig& cfg) { return from_exponents(cfg, {}); }

    const RingConfig& config() const { return cfg_; }
    const std::vector<long>& exponents() const { return exps_; }
    long length() const;
    bool is_zero() const { return exps_.empty(); }
    bool has_presentation() const { return pres_.has_value(); }
    /// The stored presentation, or the diagonal one built from exponents.
    /// n_generators x n_generators, integral, full rank.
    MatrixF presentation() const;
    int generators() const { return presentation().cols(); }

    bool same_divisors(const TorsionModule& o) const { return exps_ == o.exps_; }
    std::string str() const;

private:
    RingConfig cfg_{};
    std::vector<long> exps_;
    std::optional<MatrixF> pres_;
};

/// Direct sum at the divisor level (presentations dropped).
TorsionModule direct_sum(const TorsionModule& a, const TorsionModule& b);

/// A map between presented torsion modules, given by an integral matrix on
/// generators (target generators x source generators).
struct ModuleMap {
    TorsionModule source, target;
    MatrixF matrix;

    ModuleMap(TorsionModule src, TorsionModule tgt, MatrixF A);
};

/// True iff the matrix descends to a well-defined map of cokernels:
/// A * (source relations) lies in the target relation span.
bool is_well_defined(const ModuleMap& f);

/// Cokernel of f as a torsion module: Smith exponents of [A | P_target].
TorsionModule cokernel(const ModuleMap& f);

/// Injectivity test with cokernel: f is an admissible monic iff
/// length(target) = length(source) + length(cokernel). Raises IllFormedMap
/// when f is not well defined.
struct MonicVerdict {
    bool monic;
    TorsionModule coker;
};
MonicVerdict is_admissible_monic(const ModuleMap& f);

/// coker(X_i -> X_j) along a chain of composable maps f_k: X_k -> X_{k+1}.
TorsionModule subquotient(const std::vector<ModuleMap>& chain, int i, int j);

}  // namespace lidx
