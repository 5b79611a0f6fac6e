#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lidx/matrix.hpp"

namespace lidx {

/// Configuration shared by all property suites and generators.
struct RunConfig {
    long p = 2;
    RingKind kind = RingKind::PowerSeries;
    int prec = 24;
    int n = 2;          // ambient rank
    long bound = 3;     // exponent bound for generated instances
    long cases = 200;   // case budget per suite
    std::uint64_t seed = 1;
    int degree = 4;     // simplicial truncation degree

    RingConfig ring() const { return RingConfig{p, kind, prec}; }
};

struct SuiteFailure {
    long case_index = 0;
    std::string check;    // which property failed
    std::string payload;  // minimized counterexample data
};

struct SuiteReport {
    std::string suite;
    RunConfig config;
    long cases = 0;
    std::vector<SuiteFailure> failures;
    long elapsed_ms = 0;
    long precision_retries = 0;     // precision-doubling retries that succeeded
    long precision_unresolved = 0;  // cases still raising PrecisionExhausted

    bool ok() const { return failures.empty() && precision_unresolved == 0; }
};

/// All suite names, excluding the aggregate "all".
std::vector<std::string> suite_names();

/// Runs one suite (or "all"); deterministic per config. Throws UnknownSuite.
/// A PrecisionExhausted inside a case is retried at doubled precision up to
/// four times before being counted as unresolved.
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);

/// Versioned machine-readable report; mathematical payloads use the modules'
/// text formats, and the PRNG algorithm id is recorded for replay.
std::string report_json(const SuiteReport& rep);

/// Independent oracle for elementary divisors: with d_k the minimal
/// valuation of a k x k minor, the exponents are d_k - d_{k-1}.
/// Throws RankDeficient when some minor size has no nonzero minor.
std::vector<long> smith_minor_oracle(const MatrixF& M);

}  // namespace lidx
