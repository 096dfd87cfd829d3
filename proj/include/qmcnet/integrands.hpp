#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qmcnet {

struct Integrand {
    std::string name;
    uint32_t dimension = 1;
    std::function<double(std::span<const double>)> evaluate;
    std::optional<double> true_mean;  // absent means unknown
};

// sum_j (e^{x_j} - e + 1); mean 0
double g0(std::span<const double> x);
// (sum_j x_j)^2; mean d/3 + d(d-1)/4
double g1(std::span<const double> x);
// prod_j (e^{x_j} - e + 1); mean 0
double g2(std::span<const double> x);

struct VariableRange {
    const char* name;
    double low;
    double high;
};

// The ten wing-weight inputs with their uniform ranges.
std::span<const VariableRange> wing_weight_ranges();

// Wing weight in pounds from u in [0,1]^10; maps u to the physical ranges
// internally. The sweep angle is tabulated in degrees and enters only
// through cosines.
double wing_weight(std::span<const double> u);

// Component-wise low + u * (high - low).
std::vector<double> map_to_ranges(std::span<const double> u,
                                  std::span<const VariableRange> ranges);

// Registry: "g0", "g1", "g2", "wingweight".
Integrand make_integrand(const std::string& name, uint32_t d);
std::vector<std::string> integrand_names();

}  // namespace qmcnet
