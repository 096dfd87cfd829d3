#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <optional>
#include <stdexcept>

#include "qmcnet/cli.hpp"
#include "qmcnet/direction_numbers.hpp"
#include "qmcnet/estimator.hpp"
#include "qmcnet/integrands.hpp"
#include "qmcnet/net_verifier.hpp"
#include "qmcnet/scramble.hpp"
#include "qmcnet/sobol.hpp"

namespace py = pybind11;
using namespace qmcnet;

namespace {

PointOrder order_from(const std::string& s) {
    if (s == "natural") return PointOrder::natural;
    if (s == "gray") return PointOrder::gray;
    throw std::invalid_argument("order must be 'natural' or 'gray'");
}

SobolEngine engine_for(uint32_t d, const std::string& order) {
    SequenceConfig cfg;
    cfg.d = d;
    cfg.table = default_table(d);
    cfg.order = order_from(order);
    return SobolEngine(std::move(cfg));
}

PointMatrix build_block(uint32_t d, uint64_t n, uint64_t skip, const std::string& order,
                        bool scramble, uint64_t seed, uint64_t replicate) {
    PointMatrix pm = engine_for(d, order).block(skip, n);
    if (scramble) pm = scramble_block(pm, ScrambleConfig{seed, replicate});
    return pm;
}

py::array_t<double> matrix_to_array(const PointMatrix& pm) {
    py::array_t<double> arr({size_t(pm.n()), size_t(pm.d())});
    auto w = arr.mutable_unchecked<2>();
    for (uint64_t i = 0; i < pm.n(); ++i) {
        for (uint32_t j = 0; j < pm.d(); ++j) w(i, j) = pm.coord_value(i, j);
    }
    return arr;
}

EstimatorVariant variant_from(const std::string& name) {
    auto v = variant_from_name(name);
    if (!v) throw std::invalid_argument("unknown estimator variant '" + name + "'");
    return *v;
}

}  // namespace

PYBIND11_MODULE(qmcnet, m) {
    m.doc() = "Sobol' digital nets, nested uniform scrambling and (t,m,d)-net checks";

    m.def(
        "points",
        [](uint32_t d, uint64_t n, uint64_t skip, const std::string& order, bool scramble,
           uint64_t seed, uint64_t replicate) {
            return matrix_to_array(build_block(d, n, skip, order, scramble, seed, replicate));
        },
        py::arg("d"), py::arg("n"), py::arg("skip") = 0, py::arg("order") = "natural",
        py::arg("scramble") = false, py::arg("seed") = 0, py::arg("replicate") = 0,
        "Sobol' points in [0,1)^d as an (n, d) float64 array.");

    m.def(
        "van_der_corput", [](uint64_t i) { return van_der_corput(i); }, py::arg("i"),
        "Base-2 radical inverse of i.");

    m.def(
        "direction_row",
        [](uint32_t dim) {
            DirectionEntry e = default_table(dim).entry(dim);
            return py::make_tuple(e.degree_s, e.poly_a, e.initial_m);
        },
        py::arg("dim"), "Embedded (s, a, m) direction-number row for dimension >= 2.");

    m.def(
        "check_net",
        [](uint32_t d, uint64_t n, int t, uint64_t skip, const std::string& order, bool scramble,
           uint64_t seed, uint64_t replicate) {
            NetVerdict v = is_tmd_net(build_block(d, n, skip, order, scramble, seed, replicate), t);
            py::dict out;
            out["is_net"] = v.is_net;
            out["t"] = v.t_checked;
            if (v.witness) {
                py::dict w;
                w["k"] = v.witness->interval.k;
                w["c"] = v.witness->interval.c;
                w["count"] = v.witness->observed;
                w["expected"] = v.witness->expected;
                out["witness"] = w;
            }
            return out;
        },
        py::arg("d"), py::arg("n"), py::arg("t"), py::arg("skip") = 0,
        py::arg("order") = "natural", py::arg("scramble") = false, py::arg("seed") = 0,
        py::arg("replicate") = 0, "(t,m,d)-net verdict with a violation witness on failure.");

    m.def(
        "strict_t",
        [](uint32_t d, uint64_t n, uint64_t skip, const std::string& order, bool scramble,
           uint64_t seed, uint64_t replicate) {
            return strict_t(build_block(d, n, skip, order, scramble, seed, replicate)).t;
        },
        py::arg("d"), py::arg("n"), py::arg("skip") = 0, py::arg("order") = "natural",
        py::arg("scramble") = false, py::arg("seed") = 0, py::arg("replicate") = 0,
        "Smallest t for which the point set is a (t,m,d)-net.");

    m.def("integrand_names", &integrand_names);

    m.def(
        "integrate",
        [](const std::string& fn, uint32_t d, uint64_t n, const std::string& variant,
           bool scramble, uint64_t seed, uint64_t replicate) {
            Integrand f = make_integrand(fn, d);
            std::optional<ScrambleConfig> cfg;
            if (scramble) cfg = ScrambleConfig{seed, replicate};
            return estimate(variant_from(variant), f, n, engine_for(d, "natural"), cfg);
        },
        py::arg("fn"), py::arg("d"), py::arg("n"), py::arg("variant") = "keep-first",
        py::arg("scramble") = true, py::arg("seed") = 0, py::arg("replicate") = 0,
        "Single QMC/RQMC estimate of the named integrand.");

    m.def(
        "convergence",
        [](const std::string& fn, uint32_t d, int m_min, int m_max, uint32_t replicates,
           uint64_t seed, const std::vector<std::string>& variants) {
            Integrand f = make_integrand(fn, d);
            std::vector<EstimatorVariant> vs;
            for (const auto& name : variants) vs.push_back(variant_from(name));
            ConvergenceTable table =
                run_convergence(f, engine_for(d, "natural"), vs, m_min, m_max, replicates, seed);
            py::list rows;
            for (const auto& row : table.rows) {
                py::dict r;
                r["n"] = row.n;
                r["variant"] = std::string(variant_name(row.variant));
                r["metric"] = row.metric == MetricKind::rmse ? "rmse" : "sd";
                r["value"] = row.value;
                r["estimates"] = row.estimates;
                rows.append(r);
            }
            return rows;
        },
        py::arg("fn"), py::arg("d"), py::arg("m_min") = 5, py::arg("m_max") = 13,
        py::arg("replicates") = 10, py::arg("seed") = 0,
        py::arg("variants") = std::vector<std::string>{"keep-first", "drop-first"},
        "Replicated RMSE/SD table rows for n = 2^m, m in [m_min, m_max].");

    m.def(
        "fit_slope",
        [](const std::string& fn, uint32_t d, int m_min, int m_max, uint32_t replicates,
           uint64_t seed, const std::string& variant, double declared_slope) {
            Integrand f = make_integrand(fn, d);
            std::vector<EstimatorVariant> vs{variant_from(variant)};
            ConvergenceTable table =
                run_convergence(f, engine_for(d, "natural"), vs, m_min, m_max, replicates, seed);
            SlopeReport rep = fit_slope(table, vs[0], declared_slope);
            return py::make_tuple(rep.ls_slope, rep.anchored_deviation);
        },
        py::arg("fn"), py::arg("d"), py::arg("m_min") = 5, py::arg("m_max") = 13,
        py::arg("replicates") = 10, py::arg("seed") = 0, py::arg("variant") = "keep-first",
        py::arg("declared_slope") = -1.5,
        "(least-squares slope, anchored deviation) of log2(error) vs log2(n).");

    m.def(
        "thin_histogram",
        [](uint64_t stride, int coord, uint64_t n_total, int bins, bool scramble, uint64_t seed,
           uint64_t replicate) {
            std::optional<ScrambleConfig> cfg;
            if (scramble) cfg = ScrambleConfig{seed, replicate};
            cli::ThinDemoResult r = cli::thin_demo(stride, coord, n_total, bins, cfg);
            return py::make_tuple(r.counts, r.min_value, r.max_value);
        },
        py::arg("stride"), py::arg("coord") = 1, py::arg("n_total") = uint64_t(1) << 20,
        py::arg("bins") = 32, py::arg("scramble") = false, py::arg("seed") = 0,
        py::arg("replicate") = 0,
        "(bin counts, min retained value, max retained value) after thinning.");

    m.attr("embedded_max_dimension") = embedded_max_dimension();
}
