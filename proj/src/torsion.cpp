#include "lidx/torsion.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lidx {

TorsionModule TorsionModule::from_exponents(const RingConfig& cfg, std::vector<long> exps) {
    for (long e : exps)
        if (e <= 0) throw Error("torsion exponents must be positive");
    std::sort(exps.begin(), exps.end());
    TorsionModule m;
    m.cfg_ = cfg;
    m.exps_ = std::move(exps);
    return m;
}

TorsionModule TorsionModule::from_presentation(const MatrixF& P) {
    if (P.rows() != P.cols()) throw Error("presentation must be square");
    if (!P.all_integral()) throw Error("presentation must be integral");
    TorsionModule m;
    m.cfg_ = P.config();
    m.exps_ = cokernel_exponents(P);
    m.pres_ = P;
    return m;
}

long TorsionModule::length() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0L);
}

MatrixF TorsionModule::presentation() const {
    if (pres_) return *pres_;
    if (exps_.empty()) return MatrixF::identity(cfg_, 1);  // coker(O -> O) = 0
    return MatrixF::pi_diagonal(cfg_, exps_);
}

std::string TorsionModule::str() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (i) out << ",";
        out << exps_[i];
    }
    out << "]";
    return out.str();
}

TorsionModule direct_sum(const TorsionModule& a, const TorsionModule& b) {
    std::vector<long> e = a.exponents();
    e.insert(e.end(), b.exponents().begin(), b.exponents().end());
    return TorsionModule::from_exponents(a.config(), std::move(e));
}

ModuleMap::ModuleMap(TorsionModule src, TorsionModule tgt, MatrixF A)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(A)) {
    if (matrix.rows() != target.generators() || matrix.cols() != source.generators())
        throw IllFormedMap("map matrix dimensions do not match presentations");
    if (!matrix.all_integral()) throw IllFormedMap("map matrix must be integral");
}

bool is_well_defined(const ModuleMap& f) {
    // P_tgt^{-1} A P_src integral, through the adjugate.
    MatrixF Pt = f.target.presentation();
    long dv = Pt.det().valuation();
    MatrixF C = Pt.adjugate().mul(f.matrix).mul(f.source.presentation());
    for (int i = 0; i < C.rows(); ++i)
        for (int j = 0; j < C.cols(); ++j) {
            const FieldElement& x = C.at(i, j);
            if (x.is_zero()) continue;
            if (!x.exact() && x.rel_digits() == 0) {
                if (x.abs_prec() - dv >= 0) continue;
                throw PrecisionExhausted("well-definedness undecidable at working precision");
            }
            if (x.valuation() - dv < 0) return false;
        }
    return true;
}

TorsionModule cokernel(const ModuleMap& f) {
    return TorsionModule::from_exponents(
        f.matrix.config(), cokernel_exponents(f.matrix.hstack(f.target.presentation())));
}

MonicVerdict is_admissible_monic(const ModuleMap& f) {
    if (!is_well_defined(f)) throw IllFormedMap("matrix does not descend to the cokernels");
    TorsionModule c = cokernel(f);
    bool monic = f.target.length() == f.source.length() + c.length();
    return MonicVerdict{monic, std::move(c)};
}

TorsionModule subquotient(const std::vector<ModuleMap>& chain, int i, int j) {
    if (chain.empty()) throw Error("empty chain");
    if (i > j || i < 0 || j > static_cast<int>(chain.size()))
        throw Error("bad subquotient range");
    // stage k of the chain is the source of chain[k]; stage chain.size() is
    // the final target
    auto stage = [&](int k) {
        return k < static_cast<int>(chain.size()) ? chain[static_cast<std::size_t>(k)].source
                                                  : chain.back().target;
    };
    if (i == j) return TorsionModule::zero_module(stage(i).config());
    MatrixF A = chain[static_cast<std::size_t>(i)].matrix;
    for (int k = i + 1; k < j; ++k) A = chain[static_cast<std::size_t>(k)].matrix.mul(A);
    ModuleMap comp(stage(i), stage(j), A);
    auto verdict = is_admissible_monic(comp);
    if (!verdict.monic) throw NotContained("chain stage map is not monic");
    return verdict.coker;
}

}  // namespace lidx
