#include "qmcnet/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "qmcnet/util.hpp"

namespace qmcnet {

std::string_view variant_name(EstimatorVariant v) {
    switch (v) {
        case EstimatorVariant::keep_first: return "keep-first";
        case EstimatorVariant::drop_first: return "drop-first";
        case EstimatorVariant::offset_half_over_n: return "offset";
    }
    return "?";
}

std::optional<EstimatorVariant> variant_from_name(std::string_view name) {
    if (name == "keep-first") return EstimatorVariant::keep_first;
    if (name == "drop-first") return EstimatorVariant::drop_first;
    if (name == "offset") return EstimatorVariant::offset_half_over_n;
    return std::nullopt;
}

namespace {

void check_n(uint64_t n) {
    if (!is_power_of_two(n)) {
        throw std::invalid_argument("estimator: n must be a power of 2");
    }
}

double evaluate_scrambled(const Integrand& f, const DigitalPoint& u,
                          const std::optional<ScrambleConfig>& scramble,
                          std::vector<double>& x) {
    const size_t d = u.coords.size();
    if (scramble) {
        for (size_t j = 0; j < d; ++j) {
            uint64_t s = scramble_coordinate(u.coords[j], static_cast<uint32_t>(j + 1), *scramble);
            x[j] = std::ldexp(double(s), -scramble->out_precision);
        }
    } else {
        for (size_t j = 0; j < d; ++j) x[j] = u.value(j);
    }
    return f.evaluate(x);
}

double offset_estimate(const Integrand& f, uint64_t n, const SobolEngine& engine) {
    const int prec = engine.config().precision;
    const uint64_t shift = (uint64_t(1) << prec) / (2 * n);  // 1/(2n) in fixed point
    if (shift == 0) throw std::invalid_argument("estimator: offset 1/(2n) underflows precision");
    const uint32_t d = engine.dimension();
    std::vector<double> x(d);
    CompensatedSum sum;
    for (uint64_t i = 0; i < n; ++i) {
        DigitalPoint u = engine.point(i);
        for (uint32_t j = 0; j < d; ++j) {
            uint64_t shifted = u.coords[j] + shift;
            if (shifted >> prec) {
                throw std::invalid_argument("estimator: offset pushes a coordinate past 1");
            }
            x[j] = std::ldexp(double(shifted), -prec);
        }
        sum.add(f.evaluate(x));
    }
    return sum.value() / double(n);
}

}  // namespace

double estimate(EstimatorVariant variant, const Integrand& f, uint64_t n,
                const SobolEngine& engine,
                const std::optional<ScrambleConfig>& scramble) {
    check_n(n);
    if (f.dimension != engine.dimension()) {
        throw std::invalid_argument("estimator: integrand and engine dimensions differ");
    }
    if (variant == EstimatorVariant::offset_half_over_n) {
        return offset_estimate(f, n, engine);
    }
    const uint64_t first = variant == EstimatorVariant::drop_first ? 1 : 0;
    std::vector<double> x(engine.dimension());
    CompensatedSum sum;
    for (uint64_t i = first; i < first + n; ++i) {
        sum.add(evaluate_scrambled(f, engine.point(i), scramble, x));
    }
    return sum.value() / double(n);
}

ConvergenceTable run_convergence(const Integrand& f, const SobolEngine& engine,
                                 std::span<const EstimatorVariant> variants,
                                 int m_min, int m_max, uint32_t replicates,
                                 uint64_t seed) {
    if (replicates < 2) {
        throw std::invalid_argument("run_convergence: need at least 2 replicates");
    }
    if (m_min < 0 || m_min > m_max || m_max >= engine.config().precision) {
        throw std::invalid_argument("run_convergence: bad m range");
    }
    if (variants.empty()) {
        throw std::invalid_argument("run_convergence: no estimator variants");
    }
    if (f.dimension != engine.dimension()) {
        throw std::invalid_argument("run_convergence: integrand and engine dimensions differ");
    }

    ConvergenceTable table;
    table.integrand = f.name;
    table.d = engine.dimension();
    table.seed = seed;
    table.replicates = replicates;

    const bool need_drop = std::find(variants.begin(), variants.end(),
                                     EstimatorVariant::drop_first) != variants.end();
    const uint32_t d = engine.dimension();
    std::vector<double> x(d);

    for (int m = m_min; m <= m_max; ++m) {
        const uint64_t n = uint64_t(1) << m;
        const uint64_t generated = n + (need_drop ? 1 : 0);
        PointMatrix base = engine.block(0, generated);

        std::vector<std::vector<double>> per_variant(variants.size());
        for (auto& v : per_variant) v.reserve(replicates);

        for (uint32_t r = 0; r < replicates; ++r) {
            ScrambleConfig cfg{seed, r};
            std::vector<double> values(generated);
            for (uint64_t i = 0; i < generated; ++i) {
                for (uint32_t j = 0; j < d; ++j) {
                    uint64_t s = scramble_coordinate(base.coord(i, j), j + 1, cfg);
                    x[j] = std::ldexp(double(s), -cfg.out_precision);
                }
                values[i] = f.evaluate(x);
            }
            for (size_t vi = 0; vi < variants.size(); ++vi) {
                switch (variants[vi]) {
                    case EstimatorVariant::keep_first: {
                        CompensatedSum s;
                        for (uint64_t i = 0; i < n; ++i) s.add(values[i]);
                        per_variant[vi].push_back(s.value() / double(n));
                        break;
                    }
                    case EstimatorVariant::drop_first: {
                        CompensatedSum s;
                        for (uint64_t i = 1; i <= n; ++i) s.add(values[i]);
                        per_variant[vi].push_back(s.value() / double(n));
                        break;
                    }
                    case EstimatorVariant::offset_half_over_n:
                        per_variant[vi].push_back(offset_estimate(f, n, engine));
                        break;
                }
            }
        }

        for (size_t vi = 0; vi < variants.size(); ++vi) {
            ConvergenceRow row;
            row.n = n;
            row.variant = variants[vi];
            row.estimates = std::move(per_variant[vi]);
            if (f.true_mean) {
                row.metric = MetricKind::rmse;
                CompensatedSum sq;
                for (double est : row.estimates) {
                    double err = est - *f.true_mean;
                    sq.add(err * err);
                }
                row.value = std::sqrt(sq.value() / double(replicates));
            } else {
                row.metric = MetricKind::sd;
                CompensatedSum s;
                for (double est : row.estimates) s.add(est);
                double mean = s.value() / double(replicates);
                CompensatedSum sq;
                for (double est : row.estimates) sq.add((est - mean) * (est - mean));
                row.value = std::sqrt(sq.value() / double(replicates - 1));
            }
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

SlopeReport fit_slope(const ConvergenceTable& table, EstimatorVariant variant,
                      double declared_slope) {
    std::vector<std::pair<double, double>> pts;  // (log2 n, log2 error)
    for (const auto& row : table.rows) {
        if (row.variant != variant) continue;
        if (row.value <= 0.0) {
            throw std::invalid_argument("fit_slope: error values must be positive");
        }
        pts.emplace_back(std::log2(double(row.n)), std::log2(row.value));
    }
    if (pts.size() < 3) {
        throw std::invalid_argument("fit_slope: need at least 3 rows for the variant");
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [lx, ly] : pts) {
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double np = double(pts.size());
    SlopeReport report;
    report.ls_slope = (np * sxy - sx * sy) / (np * sxx - sx * sx);

    auto anchor = *std::min_element(pts.begin(), pts.end());
    double dev = 0.0;
    for (auto [lx, ly] : pts) {
        double line = anchor.second + declared_slope * (lx - anchor.first);
        dev = std::max(dev, std::abs(ly - line));
    }
    report.anchored_deviation = dev;
    return report;
}

void write_csv(const ConvergenceTable& table, std::ostream& out, bool raw) {
    out << "integrand,d,n,variant,metric,value,replicates,seed\n";
    char buf[64];
    auto fmt = [&buf](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    for (const auto& row : table.rows) {
        out << table.integrand << ',' << table.d << ',' << row.n << ','
            << variant_name(row.variant) << ','
            << (row.metric == MetricKind::rmse ? "rmse" : "sd") << ','
            << fmt(row.value) << ',' << table.replicates << ',' << table.seed << '\n';
        if (raw) {
            for (size_t r = 0; r < row.estimates.size(); ++r) {
                out << table.integrand << ',' << table.d << ',' << row.n << ','
                    << variant_name(row.variant) << ",estimate," << fmt(row.estimates[r])
                    << ',' << r << ',' << table.seed << '\n';
            }
        }
    }
}

}  // namespace qmcnet
