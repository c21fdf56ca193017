#pragma once

#include <cstdint>

namespace recoh {

struct EnsembleReport {
    int a = 0;
    int K = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double mc_mean = 0.0;
    double mc_stderr = 0.0;
    double closed_form = 0.0;
    double z_score = 0.0;
};

struct MonteCarloEstimate {
    double mean = 0.0;
    double std_error = 0.0;
};

/// Haar-ensemble average of C_a for a state of dims (a, 2, K), evaluated in
/// closed form. The half-integer Gamma values in the denominators are
/// rewritten through Gamma(1/2 - n) = (-4)^n n! sqrt(pi) / (2n)!, which
/// cancels every sign and factorial against the numerator and leaves a
/// product of ratios (2j-1)/(2j) -- no Gamma poles, no overflow.
/// Supported: a in {1,2,3}, 1 <= K <= 30.
double closed_form_mean(int a, int K);

/// Monte-Carlo estimate of the same average: `samples` Haar states of dims
/// (a, 2, K), each drawn from a seed derived from (seed, index), evaluated
/// with ca_trace_norm. Returns sample mean and standard error. The result
/// is bitwise independent of the number of worker threads; pass threads = 0
/// to use the hardware count, 1 to force sequential. samples >= 100.
MonteCarloEstimate monte_carlo_mean(int a, int K, std::uint64_t samples, std::uint64_t seed,
                                    unsigned threads = 0);

/// Closed form next to the Monte Carlo, with z = (mc_mean - closed_form) /
/// mc_stderr. No pass/fail judgment is embedded.
EnsembleReport compare(int a, int K, std::uint64_t samples, std::uint64_t seed,
                       unsigned threads = 0);

}  // namespace recoh
