#include "qmcnet/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qmcnet/direction_numbers.hpp"
#include "qmcnet/estimator.hpp"
#include "qmcnet/integrands.hpp"
#include "qmcnet/net_verifier.hpp"
#include "qmcnet/scramble.hpp"
#include "qmcnet/sobol.hpp"
#include "qmcnet/util.hpp"

namespace qmcnet::cli {

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct CommonOpts {
    uint32_t d = 2;
    uint64_t n = 16;
    uint64_t skip = 0;
    uint64_t stride = 10;
    bool scramble = false;
    uint64_t seed = 0;
    uint64_t replicate = 0;
    uint32_t replicates = 10;
    int m_min = 5;
    int m_max = 13;
    std::string fn = "g0";
    std::string order = "natural";
    std::string out_path;
    bool raw = false;
    bool rational = false;
    int bins = 32;
    int coord = 1;
    int t = -1;
    std::vector<std::string> variants;
};

PointOrder parse_order(const std::string& s) {
    if (s == "natural") return PointOrder::natural;
    if (s == "gray") return PointOrder::gray;
    throw CLI::ValidationError("--order", "must be natural or gray");
}

SobolEngine make_engine(uint32_t d, const std::string& order) {
    SequenceConfig cfg;
    cfg.d = d;
    cfg.table = default_table(d);
    cfg.order = parse_order(order);
    return SobolEngine(std::move(cfg));
}

void warn_net_risk(std::ostream& err, const std::string& flag) {
    err << "warning: " << flag << " discards digital-net structure; the retained points\n"
        << "warning: generally fail the (t,m,d)-net property and lose the RQMC rate.\n";
}

// Streams either to `fallback` or to --out.
class OutputTarget {
public:
    OutputTarget(const std::string& path, std::ostream& fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) throw CLI::ValidationError("--out", "cannot open '" + path + "'");
            stream_ = file_.get();
        } else {
            stream_ = &fallback;
        }
    }
    std::ostream& stream() { return *stream_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_ = nullptr;
};

int cmd_generate(const CommonOpts& o, std::ostream& out, std::ostream& err) {
    if (o.skip > 0) warn_net_risk(err, "--skip");
    SobolEngine engine = make_engine(o.d, o.order);
    PointMatrix pm = engine.block(o.skip, o.n);
    int prec = pm.precision();
    if (o.scramble) {
        pm = scramble_block(pm, ScrambleConfig{o.seed, o.replicate});
        prec = pm.precision();
    }
    OutputTarget target(o.out_path, out);
    std::ostream& os = target.stream();
    for (uint32_t j = 0; j < o.d; ++j) os << (j ? "," : "") << 'x' << (j + 1);
    os << '\n';
    for (uint64_t i = 0; i < pm.n(); ++i) {
        for (uint32_t j = 0; j < o.d; ++j) {
            if (j) os << ',';
            if (o.rational) {
                os << pm.coord(i, j) << "/2^" << prec;
            } else {
                os << fmt17(pm.coord_value(i, j));
            }
        }
        os << '\n';
    }
    return 0;
}

int cmd_check_net(const CommonOpts& o, std::ostream& out, std::ostream& err) {
    if (o.skip > 0) warn_net_risk(err, "--skip");
    SobolEngine engine = make_engine(o.d, o.order);
    PointMatrix pm = engine.block(o.skip, o.n);
    if (o.scramble) pm = scramble_block(pm, ScrambleConfig{o.seed, o.replicate});
    const int m = log2_exact(pm.n());

    auto print_witness = [&](const IntervalWitness& w) {
        out << "FAIL k=(";
        for (size_t j = 0; j < w.interval.k.size(); ++j) out << (j ? "," : "") << w.interval.k[j];
        out << ") c=(";
        for (size_t j = 0; j < w.interval.c.size(); ++j) out << (j ? "," : "") << w.interval.c[j];
        out << ") count=" << w.observed << " expected=" << w.expected << '\n';
    };

    if (o.t >= 0) {
        NetVerdict verdict = is_tmd_net(pm, o.t);
        if (verdict.is_net) {
            out << "PASS (" << o.t << ',' << m << ',' << o.d << ")-net\n";
            return 0;
        }
        print_witness(*verdict.witness);
        return 1;
    }
    StrictT st = strict_t(pm);
    out << "STRICT t=" << st.t << " m=" << st.m << " d=" << st.d << '\n';
    return 0;
}

int cmd_integrate(const CommonOpts& o, std::ostream& out, std::ostream&) {
    Integrand f = make_integrand(o.fn, o.d);
    SobolEngine engine = make_engine(o.d, o.order);
    EstimatorVariant variant = EstimatorVariant::keep_first;
    if (!o.variants.empty()) {
        auto v = variant_from_name(o.variants.front());
        if (!v) throw CLI::ValidationError("--variant", "unknown variant '" + o.variants.front() + "'");
        variant = *v;
    }
    OutputTarget target(o.out_path, out);
    std::ostream& os = target.stream();
    os << "integrand,d,n,variant,replicate,estimate\n";
    const uint32_t reps = o.scramble ? o.replicates : 1;
    for (uint32_t r = 0; r < reps; ++r) {
        std::optional<ScrambleConfig> cfg;
        if (o.scramble) cfg = ScrambleConfig{o.seed, o.replicate + r};
        double est = estimate(variant, f, o.n, engine, cfg);
        os << o.fn << ',' << o.d << ',' << o.n << ',' << variant_name(variant) << ',' << r << ','
           << fmt17(est) << '\n';
    }
    return 0;
}

int cmd_convergence(const CommonOpts& o, std::ostream& out, std::ostream&) {
    Integrand f = make_integrand(o.fn, o.d);
    SobolEngine engine = make_engine(o.d, o.order);
    std::vector<EstimatorVariant> variants;
    if (o.variants.empty()) {
        variants = {EstimatorVariant::keep_first, EstimatorVariant::drop_first};
    } else {
        for (const auto& name : o.variants) {
            auto v = variant_from_name(name);
            if (!v) throw CLI::ValidationError("--variant", "unknown variant '" + name + "'");
            variants.push_back(*v);
        }
    }
    ConvergenceTable table =
        run_convergence(f, engine, variants, o.m_min, o.m_max, o.replicates, o.seed);
    OutputTarget target(o.out_path, out);
    write_csv(table, target.stream(), o.raw);
    return 0;
}

int cmd_thin_demo(const CommonOpts& o, std::ostream& out, std::ostream& err) {
    warn_net_risk(err, "--stride");
    std::optional<ScrambleConfig> cfg;
    if (o.scramble) cfg = ScrambleConfig{o.seed, o.replicate};
    ThinDemoResult result = thin_demo(o.stride, o.coord, o.n, o.bins, cfg);

    OutputTarget target(o.out_path, out);
    std::ostream& os = target.stream();
    os << "bin,low,high,count\n";
    uint64_t max_count = 0;
    uint64_t min_count = std::numeric_limits<uint64_t>::max();
    for (int b = 0; b < o.bins; ++b) {
        os << b << ',' << fmt17(double(b) / o.bins) << ',' << fmt17(double(b + 1) / o.bins) << ','
           << result.counts[b] << '\n';
        max_count = std::max(max_count, result.counts[b]);
        min_count = std::min(min_count, result.counts[b]);
    }
    if (result.max_value < 0.5) {
        os << "range ⊂ [0,0.5)\n";
    } else if (result.min_value >= 0.5) {
        os << "range ⊂ [0.5,1)\n";
    }
    if (min_count == 0) {
        os << "max_min_ratio=inf\n";
    } else {
        os << "max_min_ratio=" << fmt17(double(max_count) / double(min_count)) << '\n';
    }
    return 0;
}

}  // namespace

ThinDemoResult thin_demo(uint64_t stride, int coord, uint64_t n_total, int bins,
                         const std::optional<ScrambleConfig>& scramble) {
    if (stride < 2) throw std::invalid_argument("thin_demo: stride must be >= 2");
    if (coord != 1 && coord != 2) throw std::invalid_argument("thin_demo: coord must be 1 or 2");
    if (bins < 1) throw std::invalid_argument("thin_demo: bins must be positive");
    if (n_total < stride) throw std::invalid_argument("thin_demo: no points retained");

    SobolEngine engine = make_engine(2, "natural");
    ThinDemoResult result;
    result.counts.assign(bins, 0);
    result.min_value = 1.0;
    result.max_value = 0.0;
    const uint64_t kept = n_total / stride;
    for (uint64_t i = 1; i <= kept; ++i) {
        uint64_t bits = engine.coordinate_bits(stride * i, static_cast<uint32_t>(coord));
        double v;
        if (scramble) {
            uint64_t s = scramble_coordinate(bits, static_cast<uint32_t>(coord), *scramble);
            v = std::ldexp(double(s), -scramble->out_precision);
        } else {
            v = std::ldexp(double(bits), -DirectionTable::kBitPrecision);
        }
        result.counts[std::min<int>(int(v * bins), bins - 1)]++;
        result.min_value = std::min(result.min_value, v);
        result.max_value = std::max(result.max_value, v);
    }
    result.retained = kept;
    return result;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"digital-net quasi-Monte Carlo toolkit"};
    app.require_subcommand(1);
    CommonOpts o;

    auto* gen = app.add_subcommand(
        "generate", "Emit Sobol' points as CSV (optionally nested-uniform scrambled)");
    gen->add_option("--d", o.d, "dimension")->default_val(2);
    gen->add_option("--n", o.n, "number of points (powers of 2 keep the net property)")
        ->default_val(16);
    gen->add_option("--skip", o.skip, "points to drop before collecting (breaks nets; demo only)");
    gen->add_flag("--scramble", o.scramble, "apply the nested uniform scramble");
    gen->add_option("--seed", o.seed, "scramble seed (64-bit)");
    gen->add_option("--replicate", o.replicate, "scramble replicate index");
    gen->add_option("--order", o.order, "point ordering: natural|gray")->default_val("natural");
    gen->add_flag("--rational", o.rational, "print exact numerator/2^precision instead of decimals");
    gen->add_option("--out", o.out_path, "output file (default stdout)");

    auto* chk = app.add_subcommand("check-net",
                                   "Verify the (t,m,d)-net property by interval counting");
    chk->add_option("--d", o.d, "dimension")->default_val(2);
    chk->add_option("--n", o.n, "number of points, must be a power of 2")->default_val(16);
    chk->add_option("--skip", o.skip, "points to drop before collecting (breaks nets; demo only)");
    chk->add_option("--t", o.t, "t value to check; omit to search the strict t");
    chk->add_flag("--scramble", o.scramble, "scramble before checking");
    chk->add_option("--seed", o.seed, "scramble seed (64-bit)");
    chk->add_option("--replicate", o.replicate, "scramble replicate index");
    chk->add_option("--order", o.order, "point ordering: natural|gray")->default_val("natural");

    auto* integ = app.add_subcommand("integrate", "Estimate an integral at one sample size");
    integ->add_option("--fn", o.fn, "integrand: g0|g1|g2|wingweight")->required();
    integ->add_option("--d", o.d, "dimension")->required();
    integ->add_option("--n", o.n, "number of points, must be a power of 2")->default_val(1024);
    integ->add_option("--variant", o.variants, "estimator: keep-first|drop-first|offset")
        ->expected(1);
    integ->add_flag("--scramble", o.scramble, "randomize with the nested uniform scramble");
    integ->add_option("--seed", o.seed, "scramble seed (64-bit)");
    integ->add_option("--replicate", o.replicate, "first scramble replicate index");
    integ->add_option("--replicates", o.replicates, "replicates when scrambling")->default_val(1);
    integ->add_option("--order", o.order, "point ordering: natural|gray")->default_val("natural");
    integ->add_option("--out", o.out_path, "output file (default stdout)");

    auto* conv = app.add_subcommand(
        "convergence", "Replicated RMSE/SD decay experiment over n = 2^m ranges");
    conv->add_option("--fn", o.fn, "integrand: g0|g1|g2|wingweight")->required();
    conv->add_option("--d", o.d, "dimension")->required();
    conv->add_option("--m-min", o.m_min, "smallest exponent m (n = 2^m)")->default_val(5);
    conv->add_option("--m-max", o.m_max, "largest exponent m")->default_val(13);
    conv->add_option("--replicates", o.replicates, "independent scramble replicates (>= 2)")
        ->default_val(10);
    conv->add_option("--seed", o.seed, "scramble seed (64-bit)");
    conv->add_option("--variant", o.variants,
                     "estimators to run (repeatable): keep-first|drop-first|offset");
    conv->add_flag("--raw", o.raw, "also emit one row per replicate estimate");
    conv->add_option("--order", o.order, "point ordering: natural|gray")->default_val("natural");
    conv->add_option("--out", o.out_path, "output file (default stdout)");

    auto* thin = app.add_subcommand(
        "thin-demo", "Histogram every stride-th point coordinate (thinning pathology)");
    thin->add_option("--stride", o.stride, "thinning interval (>= 2)")->required();
    thin->add_option("--coord", o.coord, "coordinate to histogram: 1 or 2")->default_val(1);
    thin->add_option("--n", o.n, "total points before thinning")->default_val(uint64_t(1) << 20);
    thin->add_option("--bins", o.bins, "histogram bins")->default_val(32);
    thin->add_flag("--scramble", o.scramble, "scramble before thinning");
    thin->add_option("--seed", o.seed, "scramble seed (64-bit)");
    thin->add_option("--replicate", o.replicate, "scramble replicate index");
    thin->add_option("--out", o.out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_generate(o, out, err);
        if (chk->parsed()) return cmd_check_net(o, out, err);
        if (integ->parsed()) return cmd_integrate(o, out, err);
        if (conv->parsed()) return cmd_convergence(o, out, err);
        if (thin->parsed()) return cmd_thin_demo(o, out, err);
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace qmcnet::cli
