#include "qmcnet/integrands.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qmcnet {

namespace {
constexpr double kE = std::numbers::e;
constexpr double kDegToRad = std::numbers::pi / 180.0;

const std::array<VariableRange, 10> kWingWeightRanges = {{
    {"S_w", 150.0, 200.0},    // wing area (ft^2)
    {"W_fw", 220.0, 300.0},   // weight of fuel in the wing (lb)
    {"A", 6.0, 10.0},         // aspect ratio
    {"Lambda", -10.0, 10.0},  // quarter-chord sweep (degrees)
    {"q", 16.0, 45.0},        // dynamic pressure at cruise (lb/ft^2)
    {"lambda", 0.5, 1.0},     // taper ratio
    {"t_c", 0.08, 0.18},      // aerofoil thickness to chord ratio
    {"N_z", 2.5, 6.0},        // ultimate load factor
    {"W_dg", 1700.0, 2500.0}, // flight design gross weight (lb)
    {"W_p", 0.025, 0.08},     // paint weight (lb/ft^2)
}};
}  // namespace

double g0(std::span<const double> x) {
    double sum = 0.0;
    for (double xj : x) sum += std::exp(xj) - kE + 1.0;
    return sum;
}

double g1(std::span<const double> x) {
    double sum = 0.0;
    for (double xj : x) sum += xj;
    return sum * sum;
}

double g2(std::span<const double> x) {
    double prod = 1.0;
    for (double xj : x) prod *= std::exp(xj) - kE + 1.0;
    return prod;
}

std::span<const VariableRange> wing_weight_ranges() { return kWingWeightRanges; }

std::vector<double> map_to_ranges(std::span<const double> u,
                                  std::span<const VariableRange> ranges) {
    if (u.size() != ranges.size()) {
        throw std::invalid_argument("map_to_ranges: dimension mismatch");
    }
    std::vector<double> out(u.size());
    for (size_t j = 0; j < u.size(); ++j) {
        out[j] = ranges[j].low + u[j] * (ranges[j].high - ranges[j].low);
    }
    return out;
}

double wing_weight(std::span<const double> u) {
    if (u.size() != 10) throw std::invalid_argument("wing_weight: needs 10 inputs");
    std::vector<double> v = map_to_ranges(u, kWingWeightRanges);
    const double sw = v[0], wfw = v[1], aspect = v[2], sweep_rad = v[3] * kDegToRad;
    const double q = v[4], taper = v[5], tc = v[6], nz = v[7], wdg = v[8], wp = v[9];
    const double cos_sweep = std::cos(sweep_rad);
    return 0.036 * std::pow(sw, 0.758) * std::pow(wfw, 0.0035) *
               std::pow(aspect / (cos_sweep * cos_sweep), 0.6) * std::pow(q, 0.006) *
               std::pow(taper, 0.04) * std::pow(100.0 * tc / cos_sweep, -0.3) *
               std::pow(nz * wdg, 0.49) +
           sw * wp;
}

Integrand make_integrand(const std::string& name, uint32_t d) {
    if (d == 0) throw std::invalid_argument("integrand: dimension must be positive");
    Integrand f;
    f.name = name;
    f.dimension = d;
    if (name == "g0") {
        f.evaluate = [](std::span<const double> x) { return g0(x); };
        f.true_mean = 0.0;
    } else if (name == "g1") {
        f.evaluate = [](std::span<const double> x) { return g1(x); };
        f.true_mean = d / 3.0 + d * (d - 1) / 4.0;
    } else if (name == "g2") {
        f.evaluate = [](std::span<const double> x) { return g2(x); };
        f.true_mean = 0.0;
    } else if (name == "wingweight") {
        if (d != 10) throw std::invalid_argument("integrand: wingweight is 10-dimensional");
        f.evaluate = [](std::span<const double> x) { return wing_weight(x); };
        // true mean unknown; harnesses fall back to replicate SD
    } else {
        throw std::invalid_argument("integrand: unknown name '" + name + "'");
    }
    return f;
}

std::vector<std::string> integrand_names() { return {"g0", "g1", "g2", "wingweight"}; }

}  // namespace qmcnet
