#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "qmcnet/scramble.hpp"

namespace qmcnet::cli {

struct ThinDemoResult {
    std::vector<uint64_t> counts;
    double min_value = 0.0;
    double max_value = 0.0;
    uint64_t retained = 0;
};

// Every stride-th point of the first n_total Sobol' points (x_{stride*i},
// 1 <= i <= n_total/stride), coordinate `coord` (1 or 2) binned into
// `bins` equal cells of [0,1).
ThinDemoResult thin_demo(uint64_t stride, int coord, uint64_t n_total, int bins,
                         const std::optional<ScrambleConfig>& scramble);

// Dispatches the subcommands (generate, check-net, integrate, convergence,
// thin-demo). Returns 0 on success, 1 when a net check fails, 2 on usage or
// input errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qmcnet::cli
