#include "recoh/ensemble.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

#include "recoh/measures.hpp"
#include "recoh/rng.hpp"
#include "recoh/states.hpp"

namespace recoh {

namespace {

// binom(2K, K) / 4^K = prod_{j=1..K} (2j-1)/(2j); stays in (0, 1].
double central_ratio(int K) {
    double r = 1.0;
    for (int j = 1; j <= K; ++j) r *= (2.0 * j - 1.0) / (2.0 * j);
    return r;
}

}  // namespace

double closed_form_mean(int a, int K) {
    if (a < 1 || a > 3) throw std::invalid_argument("closed_form_mean: a must be 1, 2 or 3");
    if (K < 1 || K > 30) throw std::invalid_argument("closed_form_mean: K must be in [1, 30]");
    const double pi = std::numbers::pi;
    switch (a) {
        case 1:
            // (-1)^K pi^{3/2} / (2 K! Gamma(1/2-K))  ==  (pi/2) binom(2K,K)/4^K
            return 0.5 * pi * central_ratio(K);
        case 2:
            // (-1)^K pi^{3/2} (13-22K) / (32 K! Gamma(3/2-K))
            return pi * (22.0 * K - 13.0) / 32.0 * central_ratio(K - 1) / K;
        default:
            // (-1)^K pi^{3/2} (433-936K+428K^2) / (512 K! Gamma(5/2-K))
            if (K == 1) return 75.0 * pi / 256.0;
            return pi * (428.0 * K * K - 936.0 * K + 433.0) / 512.0 * central_ratio(K - 2) /
                   (static_cast<double>(K) * (K - 1.0));
    }
}

MonteCarloEstimate monte_carlo_mean(int a, int K, std::uint64_t samples, std::uint64_t seed,
                                    unsigned threads) {
    if (a < 1 || a > 3) throw std::invalid_argument("monte_carlo_mean: a must be 1, 2 or 3");
    if (K < 1) throw std::invalid_argument("monte_carlo_mean: K must be >= 1");
    if (samples < 100) throw std::invalid_argument("monte_carlo_mean: samples must be >= 100");

    const TripartiteDims dims{static_cast<std::size_t>(a), 2, static_cast<std::size_t>(K)};
    validate_dims(dims);

    // Every sample depends only on its derived seed and results are reduced
    // in index order, so the estimate is bitwise independent of `threads`.
    std::vector<double> values(samples);
    auto worker = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i)
            values[i] = ca_trace_norm(haar_sample(dims, derive_seed(seed, i)));
    };

    unsigned n_threads = threads == 0 ? std::thread::hardware_concurrency() : threads;
    if (n_threads < 1) n_threads = 1;
    n_threads = static_cast<unsigned>(
        std::min<std::uint64_t>(n_threads, std::max<std::uint64_t>(samples / 1000, 1)));
    if (n_threads == 1) {
        worker(0, samples);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (samples + n_threads - 1) / n_threads;
        for (unsigned t = 0; t < n_threads; ++t) {
            const std::uint64_t lo = t * chunk;
            const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, samples);
            if (lo < hi) pool.emplace_back(worker, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(samples);
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double stderr_mean =
        std::sqrt(ss / (static_cast<double>(samples) - 1.0)) / std::sqrt(static_cast<double>(samples));
    return MonteCarloEstimate{mean, stderr_mean};
}

EnsembleReport compare(int a, int K, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
    const MonteCarloEstimate mc = monte_carlo_mean(a, K, samples, seed, threads);
    EnsembleReport rep;
    rep.a = a;
    rep.K = K;
    rep.samples = samples;
    rep.seed = seed;
    rep.mc_mean = mc.mean;
    rep.mc_stderr = mc.std_error;
    rep.closed_form = closed_form_mean(a, K);
    rep.z_score = (rep.mc_mean - rep.closed_form) / rep.mc_stderr;
    return rep;
}

}  // namespace recoh
