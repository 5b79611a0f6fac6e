#include "doctest.h"
#include "lidx/ring.hpp"

#include <map>
#include <random>

using namespace lidx;

namespace {

const RingConfig S2{2, RingKind::PowerSeries, 24};
const RingConfig S3{3, RingKind::PowerSeries, 24};
const RingConfig S5{5, RingKind::PowerSeries, 24};
const RingConfig P2{2, RingKind::PAdic, 24};
const RingConfig P3{3, RingKind::PAdic, 24};

FieldElement el(const RingConfig& cfg, const std::string& s) { return parse_element(cfg, s); }

// Independent oracle: Laurent polynomials over F_p as exponent -> coefficient
// maps with coefficientwise arithmetic.
using Poly = std::map<long, long>;

Poly poly_of(const FieldElement& x) {
    Poly out;
    REQUIRE(x.exact());
    if (x.is_zero()) return out;
    long v = x.valuation();
    long hi = v;
    // probe digits until enough trailing zeros; exact elements have a finite
    // window accessible via window()
    for (long e = v; e < v + 200; ++e) {
        auto d = x.window(e, e + 1)[0];
        if (d) {
            out[e] = d;
            hi = e;
        }
    }
    (void)hi;
    return out;
}

Poly poly_add(const Poly& a, const Poly& b, long p) {
    Poly r = a;
    for (auto& [e, c] : b) r[e] = ((r[e] + c) % p + p) % p;
    for (auto it = r.begin(); it != r.end();)
        it = (it->second == 0) ? r.erase(it) : std::next(it);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b, long p) {
    Poly r;
    for (auto& [e1, c1] : a)
        for (auto& [e2, c2] : b) r[e1 + e2] = (r[e1 + e2] + c1 * c2) % p;
    for (auto it = r.begin(); it != r.end();)
        it = (it->second == 0) ? r.erase(it) : std::next(it);
    return r;
}

Poly random_poly(std::mt19937_64& rng, long p, int max_terms, long max_exp) {
    std::uniform_int_distribution<int> nt(0, max_terms);
    std::uniform_int_distribution<long> ed(-max_exp, max_exp), cd(0, p - 1);
    Poly r;
    int n = nt(rng);
    for (int i = 0; i < n; ++i) {
        long c = cd(rng);
        if (c) r[ed(rng)] = c;
    }
    return r;
}

FieldElement of_poly(const RingConfig& cfg, const Poly& q) {
    std::vector<std::pair<long, long>> terms(q.begin(), q.end());
    return FieldElement::from_terms(cfg, terms);
}

}  // namespace

TEST_CASE("element construction and basic accessors") {
    auto z = FieldElement::zero(S2);
    CHECK(z.is_zero());
    CHECK(z.exact());
    CHECK(z.valuation() == VAL_INF);
    CHECK(z.str() == "0");

    auto x = el(S2, "t^2 + t^3");
    CHECK(x.valuation() == 2);
    CHECK(x.window(2, 4) == std::vector<std::uint32_t>{1, 1});
    CHECK(x.str() == "t^2 + t^3");

    auto y = el(S3, "3*t^-2 + 1 + 2*t^5");
    // 3 == 0 mod 3, so the t^-2 term vanishes
    CHECK(y.valuation() == 0);
    CHECK(y.str() == "1 + 2*t^5");

    auto w = el(S5, "3*t^-2 + 1 + 2*t^5");
    CHECK(w.valuation() == -2);
    CHECK(w.str() == "3*t^-2 + 1 + 2*t^5");
}

TEST_CASE("add: trivial identities") {
    auto x = el(S2, "t^2") + el(S2, "t^3");
    CHECK(x.valuation() == 2);
    CHECK(x.window(2, 4) == std::vector<std::uint32_t>{1, 1});

    auto y = el(S5, "2 + t + 4*t^3");
    CHECK((y + FieldElement::zero(S5)).exact_equal(y));
    CHECK((FieldElement::zero(S5) + y).exact_equal(y));
}

TEST_CASE("add: exact cancellation vs inexact PrecisionExhausted") {
    auto a = el(S3, "1 + t");
    auto b = el(S3, "2 + 2*t");
    CHECK((a + b).is_zero());
    CHECK((a + b).exact());

    auto ai = a.truncated(2);
    auto bi = b.truncated(2);
    CHECK_FALSE(ai.exact());
    CHECK(ai.rel_digits() == 2);
    CHECK_THROWS_AS(ai + bi, PrecisionExhausted);
}

TEST_CASE("mul: trivial identities") {
    auto one = el(S2, "t") * el(S2, "t^-1");
    CHECK(one.exact_equal(FieldElement::one(S2)));
    CHECK(one.valuation() == 0);

    auto x = el(S5, "1 + 3*t^2");
    CHECK((x * FieldElement::zero(S5)).is_zero());
}

TEST_CASE("mul: polynomial oracle (1+t)(1-t) = 1-t^2") {
    auto prod = el(S3, "1 + t") * el(S3, "1 + 2*t");
    CHECK(prod.exact());
    CHECK(prod.exact_equal(el(S3, "1 + 2*t^2")));  // 1 - t^2 mod 3
}

TEST_CASE("inv: monomials exact, general truncated, zero throws") {
    auto i = el(S2, "t^2").inv();
    CHECK(i.exact());
    CHECK(i.valuation() == -2);
    CHECK(i.exact_equal(el(S2, "t^-2")));

    CHECK_THROWS_AS(FieldElement::zero(S2).inv(), DivisionByZero);

    // geometric series oracle: 1/(1-t) = 1 + t + t^2 + ...
    auto g = el(S2, "1 + t");  // 1 - t over F_2
    auto gi = g.inv();
    CHECK_FALSE(gi.exact());
    CHECK(gi.valuation() == 0);
    CHECK(gi.rel_digits() == 24);
    for (long e = 0; e < 24; ++e) CHECK(gi.digit_at(e) == 1);
    // (1-t) * result == 1 on all commonly-known digits
    CHECK((g * gi).same_value(FieldElement::one(S2)));
}

TEST_CASE("valuation laws on random Laurent polynomials") {
    std::mt19937_64 rng(20260824);
    for (const RingConfig* cfg : {&S2, &S3, &S5}) {
        for (int c = 0; c < 200; ++c) {
            Poly pa = random_poly(rng, cfg->p, 4, 6), pb = random_poly(rng, cfg->p, 4, 6);
            auto a = of_poly(*cfg, pa), b = of_poly(*cfg, pb);
            auto ab = a * b;
            CHECK(poly_of(ab) == poly_mul(pa, pb, cfg->p));
            CHECK(poly_of(a + b) == poly_add(pa, pb, cfg->p));
            if (!a.is_zero() && !b.is_zero()) {
                CHECK(ab.valuation() == a.valuation() + b.valuation());
                auto s = a + b;
                if (!s.is_zero()) {
                    CHECK(s.valuation() >= std::min(a.valuation(), b.valuation()));
                    if (a.valuation() != b.valuation())
                        CHECK(s.valuation() == std::min(a.valuation(), b.valuation()));
                }
            }
            // exact subring closure
            CHECK(ab.exact());
            CHECK((a + b).exact());
            CHECK((-a).exact());
            CHECK((a - a).is_zero());
        }
    }
}

TEST_CASE("inv agreement with 1 on common window, random units") {
    std::mt19937_64 rng(7);
    for (const RingConfig* cfg : {&S3, &P3}) {
        for (int c = 0; c < 100; ++c) {
            Poly pa = random_poly(rng, cfg->p, 4, 3);
            pa[0] = 1 + (pa.count(0) ? 0 : 0);  // force a unit constant term
            auto a = of_poly(*cfg, pa);
            auto ai = a.inv();
            CHECK((a * ai).same_value(FieldElement::one(*cfg)));
            CHECK(ai.valuation() == -a.valuation());
            auto aii = ai.inv();
            CHECK(aii.same_value(a));
        }
    }
}

TEST_CASE("p-adic carries") {
    auto x = el(P2, "1") + el(P2, "1");
    CHECK(x.exact());
    CHECK(x.valuation() == 1);  // 1+1 = 2 = p
    CHECK(x.exact_equal(el(P2, "p")));

    auto y = el(P3, "2 + 2*p") + el(P3, "1");
    // 2 + 2*3 + 1 = 9 = p^2
    CHECK(y.exact_equal(el(P3, "p^2")));

    auto z = el(P3, "1") - el(P3, "p");
    // 1 - 3 = -2, exact negative integer
    CHECK(z.exact());
    CHECK((z + el(P3, "p")).exact_equal(el(P3, "1")));
    CHECK(z.valuation() == 0);

    auto m = el(P2, "1 + p") * el(P2, "1 + p");  // 3*3 = 9 = 1 + 8
    CHECK(m.exact_equal(el(P2, "1 + p^3")));
}

TEST_CASE("p-adic inverse") {
    auto a = el(P3, "2");  // -1 has expansion 2 + 2p + 2p^2 + ...
    auto ai = a.inv();
    // 1/2 in Z_3: 2 * x == 1 mod 3^24
    CHECK((a * ai).same_value(FieldElement::one(P3)));
    auto b = el(P2, "1 + p + p^2");  // 7
    CHECK((b * b.inv()).same_value(FieldElement::one(P2)));
}

TEST_CASE("residue is a ring map on samples") {
    std::mt19937_64 rng(11);
    for (const RingConfig* cfg : {&S5, &P3}) {
        for (int c = 0; c < 100; ++c) {
            Poly pa = random_poly(rng, cfg->p, 3, 4), pb = random_poly(rng, cfg->p, 3, 4);
            // clamp to integral
            Poly qa, qb;
            for (auto& [e, co] : pa)
                if (e >= 0) qa[e] = co;
            for (auto& [e, co] : pb)
                if (e >= 0) qb[e] = co;
            auto a = of_poly(*cfg, qa), b = of_poly(*cfg, qb);
            CHECK((a + b).residue() == (a.residue() + b.residue()) % cfg->p);
            CHECK((a * b).residue() == (a.residue() * b.residue()) % cfg->p);
        }
    }
}

TEST_CASE("split_at and truncated") {
    auto x = el(S2, "t^-1 + 1 + t^2 + t^5");
    auto [lo, hi] = x.split_at(2);
    CHECK(lo.exact_equal(el(S2, "t^-1 + 1")));
    CHECK(hi.exact_equal(el(S2, "1 + t^3")));
    CHECK((lo + el(S2, "t^2") * hi).exact_equal(x));

    auto y = el(P3, "1 + 2*p + p^3");
    auto [l2, h2] = y.split_at(2);
    CHECK(l2.exact_equal(el(P3, "1 + 2*p")));
    CHECK((l2 + el(P3, "p^2") * h2).exact_equal(y));

    auto t = x.truncated(3);
    CHECK_FALSE(t.exact());
    CHECK(t.abs_prec() == 3);
    CHECK(t.same_value(x));
    CHECK_THROWS_AS(t.digit_at(4), PrecisionExhausted);
    CHECK_THROWS_AS(t.split_at(5), PrecisionExhausted);

    // splitting below all known digits gives an undetermined-high remainder
    auto small = el(S2, "t^4").truncated(6);
    auto [sl, sh] = small.split_at(5);
    CHECK(sl.exact_equal(el(S2, "t^4")));
    CHECK_FALSE(sh.exact());
    CHECK(sh.abs_prec() == 1);  // remainder is O(t), valuation undetermined
    CHECK_THROWS_AS(sh.valuation(), PrecisionExhausted);
}

TEST_CASE("parse/print round trip is bit-exact") {
    for (const char* s : {"0", "1", "t", "t^-3", "2*t^-2 + 1 + 2*t^5", "1 + t + t^2"}) {
        auto x = el(S3, s);
        CHECK(el(S3, x.str()).exact_equal(x));
    }
    auto inx = el(S3, "1 + 2*t + O(t^4)");
    CHECK_FALSE(inx.exact());
    CHECK(inx.abs_prec() == 4);
    CHECK(inx.str() == "1 + 2*t + O(t^4)");
    CHECK(parse_element(S3, inx.str()).same_value(inx));

    CHECK_THROWS_AS(el(S3, "1 +"), ParseError);
    CHECK_THROWS_AS(el(S3, "x^2"), ParseError);
    CHECK_THROWS_AS(el(P3, "t^2"), ParseError);
    CHECK(el(P3, "2*p^3").valuation() == 3);
}

TEST_CASE("config validation") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK_THROWS_AS(validate_config(RingConfig{4, RingKind::PowerSeries, 8}), Error);
    CHECK_THROWS_AS(validate_config(RingConfig{3, RingKind::PowerSeries, 0}), Error);
}
