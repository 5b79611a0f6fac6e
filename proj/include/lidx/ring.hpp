#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lidx/errors.hpp"

namespace lidx {

using BigInt = boost::multiprecision::cpp_int;

// Valuation of the exact zero element.
inline constexpr long VAL_INF = std::numeric_limits<long>::max();

enum class RingKind { PowerSeries, PAdic };

/// The ambient ring O = F_p[[t]] or Z_p together with a default working
/// precision (number of significant uniformizer digits kept by truncating
/// operations such as inversion).
struct RingConfig {
    long p = 2;
    RingKind kind = RingKind::PowerSeries;
    int prec = 24;

    bool compatible(const RingConfig& o) const { return p == o.p && kind == o.kind; }
    RingConfig with_prec(int n) const { return RingConfig{p, kind, n}; }
    const char* symbol() const { return kind == RingKind::PowerSeries ? "t" : "p"; }
};

bool is_prime(long p);
void validate_config(const RingConfig& cfg);

/// An element of F = Frac(O), either exact (a Laurent polynomial in t over
/// F_p, or an element of Z[1/p] for the p-adic kind) or known to finitely
/// many uniformizer digits.
///
/// Invariants: exact zero has empty digits and valuation VAL_INF; for a
/// nonzero element the leading stored digit is nonzero; an inexact element
/// stores exactly its known digits (rel_digits many, starting at the
/// valuation). An inexact element may also have an empty window, encoding
/// O(pi^A): every digit below A is known to vanish but the valuation is
/// undetermined (valuation() then reports the bound A; callers that need
/// the true valuation must check rel_digits() > 0). Addition of two inexact
/// operands whose known digits fully cancel raises PrecisionExhausted
/// instead of producing such an element.
class FieldElement {
public:
    FieldElement() = default;

    static FieldElement zero(const RingConfig& cfg);
    static FieldElement one(const RingConfig& cfg);
    static FieldElement monomial(const RingConfig& cfg, long coeff, long exp);
    /// Exact element from (exponent, coefficient) terms; coefficients are
    /// reduced mod p and repeated exponents are accumulated.
    static FieldElement from_terms(const RingConfig& cfg,
                                   const std::vector<std::pair<long, long>>& terms);
    static FieldElement from_integer(const RingConfig& cfg, long n);
    /// Inexact element with the given known digit window (little-endian from
    /// the valuation). Leading zeros are stripped; an all-zero window yields
    /// the O(pi^(v+len)) element.
    static FieldElement from_window(const RingConfig& cfg, long v,
                                    std::vector<std::uint32_t> digits);

    const RingConfig& config() const { return cfg_; }
    bool exact() const { return exact_; }
    bool is_zero() const { return exact_ && v_ == VAL_INF; }
    bool integral() const { return is_zero() || v_ >= 0; }

    /// pi-adic valuation; VAL_INF for the exact zero. Raises
    /// PrecisionExhausted for an inexact element with no known nonzero digit.
    long valuation() const;
    /// Number of known significant digits; INT_MAX when exact.
    int rel_digits() const;
    /// Digits at exponents below abs_prec() are known; LONG_MAX when exact.
    long abs_prec() const;
    /// Digit of the canonical expansion at exponent e (0 <= digit < p).
    /// Raises PrecisionExhausted if the digit is not determined.
    std::uint32_t digit_at(long e) const;
    /// Reduction mod pi; requires an integral element.
    long residue() const;

    FieldElement neg() const;
    FieldElement add(const FieldElement& o) const;
    /// Like add, but full cancellation of inexact operands yields the
    /// O(pi^A) element (valuation undetermined) instead of raising.
    /// Used by matrix accumulations, where a later decision on the entry
    /// still raises PrecisionExhausted if it matters.
    FieldElement add_lenient(const FieldElement& o) const;
    FieldElement sub(const FieldElement& o) const { return add(o.neg()); }
    FieldElement mul(const FieldElement& o) const;
    /// Multiplicative inverse. Truncates to the working precision unless the
    /// element is a unit monomial (single-digit expansion).
    FieldElement inv() const;
    FieldElement shift(long k) const;  // multiply by pi^k

    /// Split x = low + pi^e * high with low the exact part of the canonical
    /// expansion below exponent e. Requires the digits below e to be known.
    std::pair<FieldElement, FieldElement> split_at(long e) const;
    /// Truncate the known window to absolute precision `abs` (no-op when the
    /// element is already coarser). Exact elements become inexact.
    FieldElement truncated(long abs) const;

    /// Value equality as far as both operands are known: exact operands
    /// compare exactly, otherwise digits on the common known window decide.
    bool same_value(const FieldElement& o) const;
    bool exact_equal(const FieldElement& o) const;

    std::string str() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) { return a.add(b); }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a.sub(b); }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) { return a.mul(b); }
    friend FieldElement operator-(const FieldElement& a) { return a.neg(); }

    /// Canonical digits on [lo, hi); requires them to be known.
    std::vector<std::uint32_t> window(long lo, long hi) const;

private:
    RingConfig cfg_{};
    bool exact_ = true;
    long v_ = VAL_INF;
    // Series kind (exact and inexact) and p-adic inexact: digit window.
    std::vector<std::uint32_t> digits_;
    // P-adic exact kind: value = unit_ * p^v_, p does not divide unit_.
    BigInt unit_ = 0;

    FieldElement add_impl(const FieldElement& o, bool lenient) const;
    void normalize_exact_series();
    static FieldElement make_padic_exact(const RingConfig& cfg, const BigInt& value_times_pv, long v);
    BigInt window_value(long lo, long hi) const;  // sum of digits as integer, base p
    friend FieldElement parse_element(const RingConfig&, std::string_view);
};

FieldElement parse_element(const RingConfig& cfg, std::string_view text);

long mod_pow(long base, long exp, long mod);
long mod_inv(long a, long p);

}  // namespace lidx
