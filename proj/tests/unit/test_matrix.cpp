#include "doctest.h"
#include "lidx/gen.hpp"
#include "lidx/matrix.hpp"

#include <algorithm>
#include <functional>

using namespace lidx;

namespace {

const RingConfig S2{2, RingKind::PowerSeries, 24};
const RingConfig S3{3, RingKind::PowerSeries, 24};
const RingConfig S5{5, RingKind::PowerSeries, 24};

MatrixF mx(const RingConfig& cfg, const std::string& s) { return parse_matrix(cfg, s); }

// Independent cofactor-expansion determinant (first-row Laplace, recursive).
FieldElement det_cofactor(const MatrixF& M) {
    int n = M.rows();
    if (n == 1) return M.at(0, 0);
    FieldElement acc = FieldElement::zero(M.config());
    std::vector<int> rs, all;
    for (int k = 1; k < n; ++k) rs.push_back(k);
    for (int k = 0; k < n; ++k) all.push_back(k);
    for (int j = 0; j < n; ++j) {
        std::vector<int> cs;
        for (int k = 0; k < n; ++k)
            if (k != j) cs.push_back(k);
        FieldElement t = M.at(0, j) * det_cofactor(M.submatrix(rs, cs));
        acc = acc + (j % 2 ? -t : t);
    }
    return acc;
}

// Minimal valuation over all k x k minors, or VAL_INF if all vanish.
long min_minor_valuation(const MatrixF& M, int k) {
    std::vector<int> rsel(static_cast<std::size_t>(k)), csel(static_cast<std::size_t>(k));
    long best = VAL_INF;
    std::function<void(int, int)> pick_cols = [&](int start, int depth) {
        if (depth == k) {
            std::vector<int> rs(rsel.begin(), rsel.end()), cs(csel.begin(), csel.end());
            FieldElement d = M.submatrix(rs, cs).det();
            if (!d.is_zero()) best = std::min(best, d.valuation());
            return;
        }
        for (int c = start; c < M.cols(); ++c) {
            csel[static_cast<std::size_t>(depth)] = c;
            pick_cols(c + 1, depth + 1);
        }
    };
    std::function<void(int, int)> pick_rows = [&](int start, int depth) {
        if (depth == k) {
            pick_cols(0, 0);
            return;
        }
        for (int r = start; r < M.rows(); ++r) {
            rsel[static_cast<std::size_t>(depth)] = r;
            pick_rows(r + 1, depth + 1);
        }
    };
    pick_rows(0, 0);
    return best;
}

MatrixF random_integral_matrix(Rng& rng, const RingConfig& cfg, int n, long max_exp) {
    MatrixF m(cfg, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = random_element(rng, cfg, 2, 0, max_exp);
    return m;
}

}  // namespace

TEST_CASE("det and inverse basics") {
    CHECK(mx(S2, "t, 0; 0, t^2").det().exact_equal(parse_element(S2, "t^3")));
    CHECK(MatrixF::identity(S5, 3).inverse().exact_equal(MatrixF::identity(S5, 3)));
    // cofactor oracle example: det [[1,t],[t,t^3]] = t^3 - t^2
    auto M = mx(S3, "1, t; t, t^3");
    CHECK(M.det().exact_equal(parse_element(S3, "2*t^2 + t^3")));
    CHECK(M.det().exact_equal(det_cofactor(M)));
}

TEST_CASE("det multiplicative and inverse correct on random matrices") {
    Rng rng(101);
    for (const RingConfig* cfg : {&S2, &S5}) {
        for (int c = 0; c < 60; ++c) {
            int n = static_cast<int>(rng.uniform(1, 4));
            MatrixF A = random_gl(rng, *cfg, n, 2), B = random_gl(rng, *cfg, n, 2);
            CHECK(A.det().exact_equal(det_cofactor(A)));
            CHECK((A * B).det().same_value(A.det() * B.det()));
            CHECK((A * A.inverse()).is_identity());
            CHECK((A.inverse() * A).is_identity());
        }
    }
}

TEST_CASE("singular matrix detection") {
    CHECK_THROWS_AS(mx(S2, "1, 1; 1, 1").inverse(), SingularMatrix);
    CHECK(mx(S2, "0, 0; 0, 0").det().is_zero());
}

TEST_CASE("smith: pinned examples") {
    auto sf = smith_over_dvr(mx(S2, "1, 0; 0, t^2"));
    CHECK(sf.exponents == std::vector<long>{0, 2});

    // [[1,t],[t,t^3]]: min entry valuation 0, v(det) = 2, hence (0,2)
    auto sf2 = smith_over_dvr(mx(S3, "1, t; t, t^3"));
    CHECK(sf2.exponents == std::vector<long>{0, 2});

    CHECK(smith_over_dvr(MatrixF::identity(S2, 3)).exponents == std::vector<long>{0, 0, 0});
    CHECK_THROWS_AS(smith_over_dvr(mx(S2, "1, 1; 1, 1")), RankDeficient);
}

TEST_CASE("smith: U M V = diag, unit transforms, det sum; 200 random cases") {
    Rng rng(202);
    for (const RingConfig* cfg : {&S2, &S3}) {
        for (int c = 0; c < 100; ++c) {
            int n = 3;
            MatrixF M = random_integral_gl(rng, *cfg, n, 3);
            auto sf = smith_over_dvr(M);
            CHECK(static_cast<int>(sf.exponents.size()) == n);
            CHECK(std::is_sorted(sf.exponents.begin(), sf.exponents.end()));
            long sum = 0;
            for (long e : sf.exponents) sum += e;
            CHECK(sum == M.det().valuation());
            CHECK(sf.U.det().valuation() == 0);
            CHECK(sf.V.det().valuation() == 0);
            CHECK(sf.U.mul(M).mul(sf.V).same_value(MatrixF::pi_diagonal(*cfg, sf.exponents)));
        }
    }
}

TEST_CASE("smith: minor-valuation oracle, sizes <= 4") {
    Rng rng(303);
    int done = 0;
    while (done < 100) {
        int n = static_cast<int>(rng.uniform(2, 4));
        MatrixF M = random_integral_matrix(rng, S2, n, 3);
        if (M.det().is_zero()) continue;  // oracle needs full rank for smith
        auto sf = smith_over_dvr(M);
        long partial = 0;
        for (int k = 1; k <= n; ++k) {
            partial += sf.exponents[static_cast<std::size_t>(k - 1)];
            CHECK(partial == min_minor_valuation(M, k));
        }
        ++done;
    }
}

TEST_CASE("hermite: pinned examples") {
    CHECK(hermite_over_dvr(MatrixF::identity(S2, 3)).same_value(MatrixF::identity(S2, 3)));
    CHECK(hermite_over_dvr(mx(S2, "t, 1")).same_value(mx(S2, "1")));
    auto M = mx(S3, "1, t; t, t^3");
    CHECK(hermite_over_dvr(M.hstack(M)).same_value(hermite_over_dvr(M)));
    CHECK_THROWS_AS(hermite_over_dvr(mx(S2, "0, 0; 1, 1")), RankDeficient);
}

TEST_CASE("hermite is canonical: invariance under right GL-over-O action") {
    Rng rng(404);
    for (const RingConfig* cfg : {&S2, &S5}) {
        for (int c = 0; c < 80; ++c) {
            int n = static_cast<int>(rng.uniform(1, 4));
            MatrixF M = random_integral_gl(rng, *cfg, n, 2);
            MatrixF g = random_integral_gl(rng, *cfg, n, 0);  // unit over O
            CHECK(g.det().valuation() == 0);
            MatrixF H1 = hermite_over_dvr(M), H2 = hermite_over_dvr(M.mul(g));
            CHECK(H1.same_value(H2));
            // shape: upper triangular, monomial pivots, reduced entries
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < i; ++j) CHECK(H1.at(i, j).is_zero());
                long e = H1.at(i, i).valuation();
                CHECK(H1.at(i, i).exact_equal(FieldElement::monomial(*cfg, 1, e)));
                for (int j = i + 1; j < n; ++j) {
                    const auto& x = H1.at(i, j);
                    if (x.is_zero()) continue;
                    if (x.exact()) {
                        auto high = x.split_at(e).second;
                        CHECK(high.is_zero());  // fully reduced mod the row pivot
                    } else if (x.rel_digits() > 0) {
                        CHECK(x.valuation() < e);
                    }
                }
            }
        }
    }
}

TEST_CASE("matrix text format round trip") {
    auto M = mx(S3, "1 + t, 2*t^-1; 0, t^2");
    CHECK(parse_matrix(S3, M.str()).exact_equal(M));
    CHECK_THROWS_AS(mx(S3, "1, 2; 3"), ParseError);
}
