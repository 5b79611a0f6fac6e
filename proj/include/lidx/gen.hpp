#pragma once

#include <random>

#include "lidx/lattice.hpp"
#include "lidx/torsion.hpp"

namespace lidx {

/// Seeded source of random instances. The engine identifier is recorded in
/// reports so counterexamples replay across machines.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    static constexpr const char* algorithm = "mt19937_64";

    long uniform(long lo, long hi) {  // inclusive
        return std::uniform_int_distribution<long>(lo, hi)(eng_);
    }
    bool flip() { return uniform(0, 1) == 1; }
    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

/// Exact element with terms at exponents in [lo_exp, hi_exp], roughly
/// `terms` of them.
FieldElement random_element(Rng& rng, const RingConfig& cfg, int terms, long lo_exp, long hi_exp);
/// Exact integral element with unit constant term (a unit of O).
FieldElement random_unit(Rng& rng, const RingConfig& cfg, int degree);

/// Invertible matrix: product of elementary shears and a diagonal of
/// pi-powers with exponents in [-bound, bound].
MatrixF random_gl(Rng& rng, const RingConfig& cfg, int n, long bound);
/// Invertible integral matrix (nonnegative diagonal exponents).
MatrixF random_integral_gl(Rng& rng, const RingConfig& cfg, int n, long bound);

Lattice random_lattice(Rng& rng, const RingConfig& cfg, int n, long bound);
/// Nested chain L_0 <= L_1 <= ... <= L_m.
std::vector<Lattice> random_chain(Rng& rng, const RingConfig& cfg, int n, int m, long bound);
/// A lattice containing every lattice in `below`.
Lattice random_over_lattice(Rng& rng, const std::vector<Lattice>& below, long bound);

TorsionModule random_torsion(Rng& rng, const RingConfig& cfg, int max_summands, long max_exp);

std::vector<MatrixF> random_group_tuple(Rng& rng, const RingConfig& cfg, int n, int m, long bound);

}  // namespace lidx
