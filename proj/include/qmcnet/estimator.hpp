#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qmcnet/integrands.hpp"
#include "qmcnet/scramble.hpp"
#include "qmcnet/sobol.hpp"

namespace qmcnet {

enum class EstimatorVariant {
    keep_first,        // average points 0..n-1
    drop_first,        // average points 1..n (consumes n+1 generated points)
    offset_half_over_n // average unscrambled points 0..n-1 shifted by 1/(2n)
};

std::string_view variant_name(EstimatorVariant v);
std::optional<EstimatorVariant> variant_from_name(std::string_view name);

enum class MetricKind { rmse, sd };

// One estimate at n = 2^m points. With a ScrambleConfig the keep/drop
// variants average scrambled points; offset_half_over_n always uses the
// unscrambled sequence (a scramble config, if given, is ignored).
double estimate(EstimatorVariant variant, const Integrand& f, uint64_t n,
                const SobolEngine& engine,
                const std::optional<ScrambleConfig>& scramble);

struct ConvergenceRow {
    uint64_t n = 0;
    EstimatorVariant variant = EstimatorVariant::keep_first;
    MetricKind metric = MetricKind::rmse;
    double value = 0.0;
    std::vector<double> estimates;  // one per replicate
};

struct ConvergenceTable {
    std::string integrand;
    uint32_t d = 1;
    uint64_t seed = 0;
    uint32_t replicates = 0;
    std::vector<ConvergenceRow> rows;  // ordered by (n, variant)
};

// Replicated convergence experiment over n = 2^m for m in [m_min, m_max].
// Replicate r scrambles with ScrambleConfig{seed, replicate: r}; within a
// replicate all variants share one scrambled stream. The metric is RMSE
// about the true mean when it is known, else the sample SD.
ConvergenceTable run_convergence(const Integrand& f, const SobolEngine& engine,
                                 std::span<const EstimatorVariant> variants,
                                 int m_min, int m_max, uint32_t replicates,
                                 uint64_t seed);

struct SlopeReport {
    double ls_slope = 0.0;            // least-squares slope of log2(error) vs log2(n)
    double anchored_deviation = 0.0;  // max |log2(error) - line| for the line of
                                      // declared slope through the smallest-n row
};

SlopeReport fit_slope(const ConvergenceTable& table, EstimatorVariant variant,
                      double declared_slope);

// Header "integrand,d,n,variant,metric,value,replicates,seed"; with raw,
// one extra row per replicate (metric "estimate", replicate index in the
// replicates column).
void write_csv(const ConvergenceTable& table, std::ostream& out, bool raw = false);

}  // namespace qmcnet
