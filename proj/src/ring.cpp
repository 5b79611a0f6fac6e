#include "lidx/ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace lidx {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void validate_config(const RingConfig& cfg) {
    if (!is_prime(cfg.p)) throw Error("ring modulus must be prime");
    if (cfg.prec < 1) throw Error("precision must be >= 1");
}

long mod_pow(long base, long exp, long mod) {
    long r = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

long mod_inv(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw DivisionByZero("inverse of zero residue");
    return mod_pow(a, p - 2, p);
}

namespace {

BigInt big_pow(long p, long k) {
    BigInt r = 1;
    for (long i = 0; i < k; ++i) r *= p;
    return r;
}

BigInt nonneg_mod(const BigInt& x, const BigInt& m) {
    BigInt r = x % m;
    if (r < 0) r += m;
    return r;
}

std::vector<std::uint32_t> big_to_digits(BigInt value, long p, long count) {
    std::vector<std::uint32_t> d(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
        d[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(value % p);
        value /= p;
    }
    return d;
}

BigInt digits_to_big(const std::vector<std::uint32_t>& d, long p) {
    BigInt v = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
    return v;
}

}  // namespace

FieldElement FieldElement::zero(const RingConfig& cfg) {
    FieldElement x;
    x.cfg_ = cfg;
    return x;
}

FieldElement FieldElement::one(const RingConfig& cfg) { return monomial(cfg, 1, 0); }

FieldElement FieldElement::monomial(const RingConfig& cfg, long coeff, long exp) {
    coeff %= cfg.p;
    if (coeff < 0) coeff += cfg.p;
    if (coeff == 0) return zero(cfg);
    FieldElement x;
    x.cfg_ = cfg;
    x.exact_ = true;
    x.v_ = exp;
    if (cfg.kind == RingKind::PowerSeries)
        x.digits_ = {static_cast<std::uint32_t>(coeff)};
    else
        x.unit_ = coeff;
    return x;
}

FieldElement FieldElement::from_integer(const RingConfig& cfg, long n) {
    if (cfg.kind == RingKind::PAdic) {
        if (n == 0) return zero(cfg);
        long v = 0;
        while (n % cfg.p == 0) {
            n /= cfg.p;
            ++v;
        }
        FieldElement x;
        x.cfg_ = cfg;
        x.v_ = v;
        x.unit_ = n;
        return x;
    }
    return monomial(cfg, n, 0);
}

FieldElement FieldElement::from_terms(const RingConfig& cfg,
                                      const std::vector<std::pair<long, long>>& terms) {
    if (cfg.kind == RingKind::PowerSeries) {
        std::map<long, long> acc;
        for (auto& [e, c] : terms) acc[e] = (acc[e] + c) % cfg.p;
        FieldElement x;
        x.cfg_ = cfg;
        long lo = 0, hi = 0;
        bool any = false;
        for (auto& [e, c] : acc) {
            long cc = (c % cfg.p + cfg.p) % cfg.p;
            if (cc == 0) continue;
            if (!any) lo = e;
            hi = e;
            any = true;
        }
        if (!any) return zero(cfg);
        x.v_ = lo;
        x.digits_.assign(static_cast<std::size_t>(hi - lo + 1), 0);
        for (auto& [e, c] : acc)
            if (e >= lo && e <= hi)
                x.digits_[static_cast<std::size_t>(e - lo)] =
                    static_cast<std::uint32_t>((c % cfg.p + cfg.p) % cfg.p);
        x.normalize_exact_series();
        return x;
    }
    // p-adic: accumulate in Z[1/p]
    long minexp = 0;
    for (auto& [e, c] : terms) minexp = std::min(minexp, e);
    BigInt val = 0;
    for (auto& [e, c] : terms) {
        long cc = (c % cfg.p + cfg.p) % cfg.p;
        val += BigInt(cc) * big_pow(cfg.p, e - minexp);
    }
    return make_padic_exact(cfg, val, minexp);
}

FieldElement FieldElement::make_padic_exact(const RingConfig& cfg, const BigInt& value, long v) {
    if (value == 0) return zero(cfg);
    FieldElement x;
    x.cfg_ = cfg;
    x.unit_ = value;
    x.v_ = v;
    while (x.unit_ % cfg.p == 0) {
        x.unit_ /= cfg.p;
        ++x.v_;
    }
    return x;
}

FieldElement FieldElement::from_window(const RingConfig& cfg, long v,
                                       std::vector<std::uint32_t> digits) {
    long end = v + static_cast<long>(digits.size());
    std::size_t lead = 0;
    while (lead < digits.size() && digits[lead] == 0) ++lead;
    FieldElement x;
    x.cfg_ = cfg;
    x.exact_ = false;
    if (lead == digits.size()) {
        // O(pi^end): nothing known beyond the vanishing of lower digits.
        x.v_ = end;
        return x;
    }
    digits.erase(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(lead));
    x.v_ = v + static_cast<long>(lead);
    x.digits_ = std::move(digits);
    return x;
}

void FieldElement::normalize_exact_series() {
    std::size_t lead = 0;
    while (lead < digits_.size() && digits_[lead] == 0) ++lead;
    if (lead == digits_.size()) {
        digits_.clear();
        v_ = VAL_INF;
        return;
    }
    digits_.erase(digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(lead));
    v_ += static_cast<long>(lead);
    while (!digits_.empty() && digits_.back() == 0) digits_.pop_back();
}

long FieldElement::valuation() const {
    if (!exact_ && digits_.empty())
        throw PrecisionExhausted("valuation undetermined: no known nonzero digit");
    return v_;
}

int FieldElement::rel_digits() const {
    if (exact_) return std::numeric_limits<int>::max();
    return static_cast<int>(digits_.size());
}

long FieldElement::abs_prec() const {
    if (exact_) return VAL_INF;
    return v_ + static_cast<long>(digits_.size());
}

std::vector<std::uint32_t> FieldElement::window(long lo, long hi) const {
    if (hi < lo) throw Error("bad digit window");
    std::vector<std::uint32_t> out(static_cast<std::size_t>(hi - lo), 0);
    if (is_zero()) return out;
    if (exact_ && cfg_.kind == RingKind::PAdic) {
        if (hi <= v_) return out;
        BigInt val = unit_ * big_pow(cfg_.p, std::max(v_ - lo, 0L));
        long drop = std::max(lo - v_, 0L);  // digits of unit_ below the window
        BigInt shifted = val;
        if (drop > 0) {
            BigInt m = big_pow(cfg_.p, drop);
            shifted = (unit_ - nonneg_mod(unit_, m)) / m;
        }
        BigInt w = nonneg_mod(shifted, big_pow(cfg_.p, hi - lo));
        return big_to_digits(w, cfg_.p, hi - lo);
    }
    if (!exact_ && hi > abs_prec()) throw PrecisionExhausted("digit window beyond known precision");
    for (long e = std::max(lo, v_); e < hi; ++e) {
        long idx = e - v_;
        if (idx < static_cast<long>(digits_.size()))
            out[static_cast<std::size_t>(e - lo)] = digits_[static_cast<std::size_t>(idx)];
    }
    return out;
}

BigInt FieldElement::window_value(long lo, long hi) const {
    return digits_to_big(window(lo, hi), cfg_.p);
}

std::uint32_t FieldElement::digit_at(long e) const {
    if (is_zero()) return 0;
    if (!exact_ && e >= abs_prec()) throw PrecisionExhausted("digit beyond known precision");
    return window(e, e + 1)[0];
}

long FieldElement::residue() const {
    if (!integral()) throw Error("residue of non-integral element");
    return static_cast<long>(digit_at(0));
}

FieldElement FieldElement::shift(long k) const {
    if (is_zero()) return *this;
    FieldElement x = *this;
    x.v_ += k;
    return x;
}

FieldElement FieldElement::neg() const {
    if (is_zero()) return *this;
    FieldElement x = *this;
    if (exact_) {
        if (cfg_.kind == RingKind::PAdic) {
            x.unit_ = -unit_;
            return x;
        }
        for (auto& d : x.digits_)
            d = static_cast<std::uint32_t>((cfg_.p - d) % cfg_.p);
        return x;
    }
    if (digits_.empty()) return x;  // O(pi^A) is its own negation
    long w = static_cast<long>(digits_.size());
    if (cfg_.kind == RingKind::PowerSeries) {
        for (auto& d : x.digits_)
            d = static_cast<std::uint32_t>((cfg_.p - d) % cfg_.p);
    } else {
        BigInt m = big_pow(cfg_.p, w);
        x.digits_ = big_to_digits(nonneg_mod(-window_value(v_, v_ + w), m), cfg_.p, w);
    }
    return x;
}

FieldElement FieldElement::add(const FieldElement& o) const { return add_impl(o, false); }
FieldElement FieldElement::add_lenient(const FieldElement& o) const { return add_impl(o, true); }

FieldElement FieldElement::add_impl(const FieldElement& o, bool lenient) const {
    if (!cfg_.compatible(o.cfg_)) throw Error("ring config mismatch");
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (exact_ && o.exact_) {
        if (cfg_.kind == RingKind::PowerSeries) {
            long lo = std::min(v_, o.v_);
            long hi = std::max(v_ + static_cast<long>(digits_.size()),
                               o.v_ + static_cast<long>(o.digits_.size()));
            FieldElement x;
            x.cfg_ = cfg_;
            x.v_ = lo;
            x.digits_.assign(static_cast<std::size_t>(hi - lo), 0);
            for (std::size_t i = 0; i < digits_.size(); ++i)
                x.digits_[static_cast<std::size_t>(v_ - lo) + i] += digits_[i];
            for (std::size_t i = 0; i < o.digits_.size(); ++i) {
                auto& d = x.digits_[static_cast<std::size_t>(o.v_ - lo) + i];
                d = static_cast<std::uint32_t>((d + o.digits_[i]) % cfg_.p);
            }
            for (auto& d : x.digits_) d = static_cast<std::uint32_t>(d % cfg_.p);
            x.normalize_exact_series();
            return x;
        }
        long lo = std::min(v_, o.v_);
        BigInt val = unit_ * big_pow(cfg_.p, v_ - lo) + o.unit_ * big_pow(cfg_.p, o.v_ - lo);
        return make_padic_exact(cfg_, val, lo);
    }
    long abs = std::min(abs_prec(), o.abs_prec());
    bool a_known = is_zero() || (exact_ ? true : v_ < abs);
    bool b_known = o.is_zero() || (o.exact_ ? true : o.v_ < abs);
    (void)a_known;
    (void)b_known;
    long lo = std::min(exact_ ? v_ : v_, o.exact_ ? o.v_ : o.v_);
    lo = std::min(lo, abs);
    if (lo >= abs) {
        // both operands vanish below the common precision
        FieldElement x;
        x.cfg_ = cfg_;
        x.exact_ = false;
        x.v_ = abs;
        return x;
    }
    long w = abs - lo;
    std::vector<std::uint32_t> d;
    if (cfg_.kind == RingKind::PowerSeries) {
        auto da = window(lo, abs), db = o.window(lo, abs);
        d.resize(static_cast<std::size_t>(w));
        for (long i = 0; i < w; ++i)
            d[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(
                (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % cfg_.p);
    } else {
        BigInt m = big_pow(cfg_.p, w);
        d = big_to_digits(nonneg_mod(window_value(lo, abs) + o.window_value(lo, abs), m), cfg_.p, w);
    }
    bool all_zero = std::all_of(d.begin(), d.end(), [](std::uint32_t x) { return x == 0; });
    if (all_zero && !lenient && !exact_ && !o.exact_)
        throw PrecisionExhausted("cancellation left no known digits");
    return from_window(cfg_, lo, std::move(d));
}

FieldElement FieldElement::mul(const FieldElement& o) const {
    if (!cfg_.compatible(o.cfg_)) throw Error("ring config mismatch");
    if (is_zero() || o.is_zero()) return zero(cfg_);
    if (exact_ && o.exact_) {
        if (cfg_.kind == RingKind::PAdic)
            return make_padic_exact(cfg_, unit_ * o.unit_, v_ + o.v_);
        FieldElement x;
        x.cfg_ = cfg_;
        x.v_ = v_ + o.v_;
        x.digits_.assign(digits_.size() + o.digits_.size() - 1, 0);
        std::vector<unsigned long long> acc(x.digits_.size(), 0);
        for (std::size_t i = 0; i < digits_.size(); ++i)
            for (std::size_t j = 0; j < o.digits_.size(); ++j)
                acc[i + j] += static_cast<unsigned long long>(digits_[i]) * o.digits_[j];
        for (std::size_t i = 0; i < acc.size(); ++i)
            x.digits_[i] = static_cast<std::uint32_t>(acc[i] % static_cast<unsigned long long>(cfg_.p));
        x.normalize_exact_series();
        return x;
    }
    long rel_a = exact_ ? std::numeric_limits<long>::max() : static_cast<long>(digits_.size());
    long rel_b = o.exact_ ? std::numeric_limits<long>::max() : static_cast<long>(o.digits_.size());
    long rel = std::min(rel_a, rel_b);
    // An O(pi^A) factor has no known digits; the product is O(pi^(A+v)).
    long va = (!exact_ && digits_.empty()) ? v_ : v_;
    long vb = (!o.exact_ && o.digits_.empty()) ? o.v_ : o.v_;
    long v = va + vb;
    if (rel == 0) {
        FieldElement x;
        x.cfg_ = cfg_;
        x.exact_ = false;
        x.v_ = v;
        return x;
    }
    std::vector<std::uint32_t> d;
    if (cfg_.kind == RingKind::PowerSeries) {
        auto da = window(v_, v_ + rel), db = o.window(o.v_, o.v_ + rel);
        d.assign(static_cast<std::size_t>(rel), 0);
        std::vector<unsigned long long> acc(static_cast<std::size_t>(rel), 0);
        for (long i = 0; i < rel; ++i)
            for (long j = 0; i + j < rel; ++j)
                acc[static_cast<std::size_t>(i + j)] +=
                    static_cast<unsigned long long>(da[static_cast<std::size_t>(i)]) *
                    db[static_cast<std::size_t>(j)];
        for (long i = 0; i < rel; ++i)
            d[static_cast<std::size_t>(i)] =
                static_cast<std::uint32_t>(acc[static_cast<std::size_t>(i)] %
                                           static_cast<unsigned long long>(cfg_.p));
    } else {
        BigInt m = big_pow(cfg_.p, rel);
        d = big_to_digits(nonneg_mod(window_value(v_, v_ + rel) * o.window_value(o.v_, o.v_ + rel), m),
                          cfg_.p, rel);
    }
    return from_window(cfg_, v, std::move(d));
}

FieldElement FieldElement::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of exact zero");
    if (!exact_ && digits_.empty())
        throw PrecisionExhausted("inverse of element with no determinable leading digit");
    // Unit monomials invert exactly.
    if (exact_) {
        if (cfg_.kind == RingKind::PowerSeries && digits_.size() == 1)
            return monomial(cfg_, mod_inv(static_cast<long>(digits_[0]), cfg_.p), -v_);
        if (cfg_.kind == RingKind::PAdic && (unit_ == 1 || unit_ == -1)) {
            FieldElement x;
            x.cfg_ = cfg_;
            x.unit_ = unit_;
            x.v_ = -v_;
            return x;
        }
    }
    long r = exact_ ? cfg_.prec : static_cast<long>(digits_.size());
    std::vector<std::uint32_t> e(static_cast<std::size_t>(r), 0);
    if (cfg_.kind == RingKind::PowerSeries) {
        auto u = window(v_, v_ + r);
        long e0 = mod_inv(static_cast<long>(u[0]), cfg_.p);
        e[0] = static_cast<std::uint32_t>(e0);
        for (long i = 1; i < r; ++i) {
            unsigned long long s = 0;
            for (long j = 1; j <= i; ++j)
                s += static_cast<unsigned long long>(u[static_cast<std::size_t>(j)]) *
                     e[static_cast<std::size_t>(i - j)];
            long si = static_cast<long>(s % static_cast<unsigned long long>(cfg_.p));
            e[static_cast<std::size_t>(i)] =
                static_cast<std::uint32_t>((cfg_.p - si * e0 % cfg_.p) % cfg_.p);
        }
    } else {
        BigInt m = big_pow(cfg_.p, r);
        BigInt u = window_value(v_, v_ + r);
        // extended Euclid on (u, p^r)
        BigInt a = u, b = m, x0 = 1, x1 = 0;
        while (b != 0) {
            BigInt q = a / b;
            BigInt t = a - q * b;
            a = b;
            b = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
        }
        e = big_to_digits(nonneg_mod(x0, m), cfg_.p, r);
    }
    return from_window(cfg_, -v_, std::move(e));
}

std::pair<FieldElement, FieldElement> FieldElement::split_at(long e) const {
    if (is_zero()) return {zero(cfg_), zero(cfg_)};
    if (!exact_ && digits_.empty()) {
        if (v_ >= e) {
            FieldElement high;
            high.cfg_ = cfg_;
            high.exact_ = false;
            high.v_ = v_ - e;
            return {zero(cfg_), high};
        }
        throw PrecisionExhausted("split below known bound");
    }
    if (e <= v_) return {zero(cfg_), shift(-e)};
    if (!exact_ && abs_prec() < e) throw PrecisionExhausted("split beyond known precision");
    auto low_digits = window(v_, std::min(e, v_ + (exact_ ? e - v_ : static_cast<long>(digits_.size()))));
    std::vector<std::pair<long, long>> terms;
    for (std::size_t i = 0; i < low_digits.size(); ++i)
        if (low_digits[i]) terms.emplace_back(v_ + static_cast<long>(i), low_digits[i]);
    FieldElement low = from_terms(cfg_, terms);
    FieldElement high;
    if (exact_) {
        high = sub(low).shift(-e);
    } else {
        long abs = abs_prec();
        auto hd = window(e, abs);
        high = from_window(cfg_, 0, std::move(hd));
        if (!high.is_zero() || true) {
            // from_window already encodes O(pi^(abs-e)) when all digits vanish
        }
    }
    return {low, high};
}

FieldElement FieldElement::truncated(long abs) const {
    if (is_zero()) {
        FieldElement x;
        x.cfg_ = cfg_;
        x.exact_ = false;
        x.v_ = abs;
        return x;
    }
    if (!exact_ && abs_prec() <= abs) return *this;
    if (v_ >= abs) {
        FieldElement x;
        x.cfg_ = cfg_;
        x.exact_ = false;
        x.v_ = abs;
        return x;
    }
    return from_window(cfg_, v_, window(v_, abs));
}

bool FieldElement::exact_equal(const FieldElement& o) const {
    if (!exact_ || !o.exact_) return false;
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    if (v_ != o.v_) return false;
    if (cfg_.kind == RingKind::PAdic) return unit_ == o.unit_;
    return digits_ == o.digits_;
}

bool FieldElement::same_value(const FieldElement& o) const {
    if (!cfg_.compatible(o.cfg_)) return false;
    if (exact_ && o.exact_) return exact_equal(o);
    long abs = std::min(abs_prec(), o.abs_prec());
    long lo_a = is_zero() ? abs : v_;
    long lo_b = o.is_zero() ? abs : o.v_;
    long lo = std::min({lo_a, lo_b, abs});
    if (lo >= abs) return true;
    return window(lo, abs) == o.window(lo, abs);
}

std::string FieldElement::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    auto term = [&](long coeff, long e, bool first) {
        if (!first) out << " + ";
        if (e == 0) {
            out << coeff;
        } else {
            if (coeff != 1) out << coeff << "*";
            out << cfg_.symbol();
            if (e != 1) out << "^" << e;
        }
    };
    bool first = true;
    if (exact_ && cfg_.kind == RingKind::PAdic && unit_ < 0) {
        out << "-(" << neg().str() << ")";
        return out.str();
    }
    if (exact_) {
        if (cfg_.kind == RingKind::PAdic) {
            BigInt u = unit_;
            long e = v_;
            while (u != 0) {
                long d = static_cast<long>(u % cfg_.p);
                if (d) {
                    term(d, e, first);
                    first = false;
                }
                u /= cfg_.p;
                ++e;
            }
        } else {
            for (std::size_t i = 0; i < digits_.size(); ++i)
                if (digits_[i]) {
                    term(digits_[i], v_ + static_cast<long>(i), first);
                    first = false;
                }
        }
        return out.str();
    }
    for (std::size_t i = 0; i < digits_.size(); ++i)
        if (digits_[i]) {
            term(digits_[i], v_ + static_cast<long>(i), first);
            first = false;
        }
    if (first) out << "0";
    out << " + O(" << cfg_.symbol() << "^" << abs_prec() << ")";
    return out.str();
}

FieldElement parse_element(const RingConfig& cfg, std::string_view text) {
    // Grammar: sum of terms `c`, `c*t^e`, `t^e`, `t`, signs allowed; optional
    // trailing `+ O(t^k)` marks an inexact element.
    std::string s(text);
    std::vector<std::pair<long, long>> terms;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    auto parse_long = [&]() -> long {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw ParseError("expected integer in element at offset " + std::to_string(start));
        return std::stol(s.substr(start, i - start));
    };
    bool have_order = false;
    long order_exp = 0;
    skip_ws();
    long outer_sign = 1;
    if (i < s.size() && s[i] == '-') {
        // allow a global minus applied to a parenthesized expansion
        std::size_t save = i;
        ++i;
        skip_ws();
        if (i < s.size() && s[i] == '(') {
            ++i;
            std::size_t close = s.rfind(')');
            if (close == std::string::npos || close < i) throw ParseError("unbalanced parenthesis");
            FieldElement inner = parse_element(cfg, s.substr(i, close - i));
            return inner.neg();
        }
        i = save;
    }
    (void)outer_sign;
    bool first = true;
    while (true) {
        skip_ws();
        if (i >= s.size()) break;
        long sign = 1;
        if (!first || s[i] == '+' || s[i] == '-') {
            if (s[i] == '+') {
                ++i;
            } else if (s[i] == '-') {
                sign = -1;
                ++i;
            } else if (!first) {
                throw ParseError("expected '+' or '-' between terms");
            }
        }
        skip_ws();
        if (i >= s.size()) throw ParseError("dangling sign in element");
        if (s[i] == 'O') {
            ++i;
            skip_ws();
            if (i >= s.size() || s[i] != '(') throw ParseError("malformed O(..) marker");
            ++i;
            skip_ws();
            std::string sym = cfg.symbol();
            if (s.compare(i, sym.size(), sym) != 0) throw ParseError("bad uniformizer in O(..)");
            i += sym.size();
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                ++i;
                order_exp = parse_long();
            } else {
                order_exp = 1;
            }
            skip_ws();
            if (i >= s.size() || s[i] != ')') throw ParseError("malformed O(..) marker");
            ++i;
            have_order = true;
            first = false;
            continue;
        }
        long coeff = 1;
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            coeff = parse_long();
            saw_coeff = true;
        }
        skip_ws();
        long exp = 0;
        bool saw_sym = false;
        if (i < s.size() && (s[i] == '*' || s[i] == 't' || s[i] == 'p')) {
            if (s[i] == '*') {
                ++i;
                skip_ws();
            }
            if (i < s.size() && (s[i] == 't' || s[i] == 'p')) {
                if (std::string(1, s[i]) != cfg.symbol())
                    throw ParseError(std::string("expected uniformizer '") + cfg.symbol() + "'");
                ++i;
                saw_sym = true;
                skip_ws();
                exp = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    exp = parse_long();
                }
            } else if (!saw_coeff) {
                throw ParseError("expected term");
            }
        }
        if (!saw_coeff && !saw_sym) throw ParseError("expected term");
        terms.emplace_back(exp, sign * coeff);
        first = false;
    }
    FieldElement exact = FieldElement::from_terms(cfg, terms);
    if (!have_order) return exact;
    return exact.truncated(order_exp);
}

}  // namespace lidx
