// ratrange CLI: enclosure analyses for the rational operator family,
// emitting deterministic JSON/CSV/SVG (17 significant digits everywhere).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "ratrange/boundary.hpp"
#include "ratrange/oracle.hpp"
#include "ratrange/pseudo.hpp"
#include "ratrange/strip.hpp"
#include "svg.hpp"

using nlohmann::json;
using namespace ratrange;

namespace {

// --- deterministic number formatting -------------------------------------

std::string num(double v) {
    if (std::isnan(v)) return "\"nan\"";
    if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string raw(double v) {  // CSV cell
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string point_json(const ComplexPoint& p) {
    if (p.at_infinity) return "\"inf\"";
    return "{\"re\": " + num(p.re()) + ", \"im\": " + num(p.im()) + "}";
}

// --- configuration ---------------------------------------------------------

struct Config {
    ProblemParams params{1.0, 1.0};
    OmegaBox box{0.0, 1.0, 0.0, 1.0};
    bool has_viewport = false;
    Viewport viewport{};
    int resolution = 256;
    double epsilon = 1.0;
    std::uint64_t seed = 1;
};

double parse_ext(const json& j, const char* what) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "inf" || s == "+inf") return inf;
        if (s == "-inf") return -inf;
    }
    throw config_error(std::string(what) + ": expected number or \"inf\"/\"-inf\"");
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw config_error(std::string("config parse error: ") + e.what());
    }
    if (!j.contains("c") || !j.contains("d") || !j.contains("alpha") ||
        !j.contains("beta"))
        throw config_error("config requires c, d, alpha, beta");
    Config cfg;
    cfg.params = ProblemParams(j["c"].get<double>(), j["d"].get<double>());
    const auto& a = j["alpha"];
    const auto& b = j["beta"];
    if (!a.is_array() || a.size() != 2 || !b.is_array() || b.size() != 2)
        throw config_error("alpha and beta must be two-element arrays");
    cfg.box = OmegaBox(parse_ext(a[0], "alpha[0]"), parse_ext(a[1], "alpha[1]"),
                       parse_ext(b[0], "beta[0]"), parse_ext(b[1], "beta[1]"));
    if (j.contains("viewport")) {
        const auto& v = j["viewport"];
        if (!v.is_array() || v.size() != 4)
            throw config_error("viewport must be [re_lo, re_hi, im_lo, im_hi]");
        cfg.viewport = {v[0].get<double>(), v[1].get<double>(), v[2].get<double>(),
                        v[3].get<double>()};
        if (!(cfg.viewport.re_lo < cfg.viewport.re_hi) ||
            !(cfg.viewport.im_lo < cfg.viewport.im_hi))
            throw config_error("viewport extents must be increasing");
        cfg.has_viewport = true;
    }
    if (j.contains("resolution")) cfg.resolution = j["resolution"].get<int>();
    if (j.contains("epsilon")) cfg.epsilon = j["epsilon"].get<double>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    return cfg;
}

complex parse_omega(const std::string& s) {
    std::istringstream iss(s);
    double re, im;
    char comma;
    if (!(iss >> re >> comma >> im) || comma != ',')
        throw config_error("--omega expects \"re,im\"");
    return complex(re, im);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw config_error("cannot open output file: " + out_path);
    out << text;
}

int resolve_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("RANGE_ENCLOSURE_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(hc) : 1;
}

template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t nt = std::min<std::size_t>(std::size_t(threads), count);
    for (std::size_t t = 0; t < nt; ++t) {
        pool.emplace_back([&, t]() {
            for (std::size_t i = t; i < count; i += nt) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

// --- command bodies ----------------------------------------------------------

std::string cmd_poles(const Config& cfg) {
    const Poles p = poles(cfg.params);
    std::string s = "{\n";
    s += "  \"theta\": {\"re\": " + num(p.theta.real()) +
         ", \"im\": " + num(p.theta.imag()) + "},\n";
    s += "  \"delta_plus\": " + point_json(p.delta_plus) + ",\n";
    s += "  \"delta_minus\": " + point_json(p.delta_minus) + "\n}\n";
    return s;
}

const char* witness_name(MembershipWitness w) {
    switch (w) {
        case MembershipWitness::SpecialZero: return "SpecialZero";
        case MembershipWitness::SpecialDeltaPlus: return "SpecialDeltaPlus";
        case MembershipWitness::SpecialDeltaMinus: return "SpecialDeltaMinus";
        case MembershipWitness::SpecialInfinity: return "SpecialInfinity";
        case MembershipWitness::AxisCondition: return "AxisCondition";
        case MembershipWitness::OffAxis: return "OffAxis";
        case MembershipWitness::DiskBoundaryExcluded: return "DiskBoundaryExcluded";
    }
    return "Unknown";
}

std::string cmd_member(const Config& cfg, const std::string& omega_arg) {
    ComplexPoint w;
    if (omega_arg == "inf")
        w = ComplexPoint::infinity();
    else
        w = ComplexPoint(parse_omega(omega_arg));
    const MembershipVerdict v = contains(w, cfg.box, cfg.params);
    std::string s = "{\n";
    s += std::string("  \"inside\": ") + (v.inside ? "true" : "false") + ",\n";
    s += std::string("  \"witness\": \"") + witness_name(v.witness) + "\",\n";
    s += "  \"alpha_hat\": " + num(v.alpha_value) + ",\n";
    s += "  \"beta_hat\": " + num(v.beta_value) + ",\n";
    s += std::string("  \"boundary\": ") + (v.boundary_flag ? "true" : "false") + "\n}\n";
    return s;
}

std::string axis_json(const AxisStructure& ax) {
    std::string s = "{\n  \"segments\": [";
    for (std::size_t i = 0; i < ax.segments.size(); ++i) {
        if (i) s += ", ";
        s += "[" + num(ax.segments[i].mu_lo) + ", " + num(ax.segments[i].mu_hi) + "]";
    }
    s += "],\n  \"isolated\": [";
    for (std::size_t i = 0; i < ax.isolated.size(); ++i) {
        if (i) s += ", ";
        s += num(ax.isolated[i]);
    }
    s += "],\n  \"points\": [";
    for (std::size_t i = 0; i < ax.points.size(); ++i) {
        if (i) s += ", ";
        s += "{\"mu\": " + num(ax.points[i].mu) +
             ", \"m\": " + std::to_string(ax.points[i].m) + "}";
    }
    s += "]\n}\n";
    return s;
}

std::string cmd_axis(const Config& cfg, double epsilon) {
    const AxisStructure ax = epsilon > 0.0
                                 ? pseudo_axis_segments(cfg.box, epsilon, cfg.params)
                                 : axis_segments(cfg.box, cfg.params);
    return axis_json(ax);
}

std::string cmd_boundary(const Config& cfg) {
    const auto curves = boundary_set(cfg.box, cfg.params);
    std::string s = "re,im,edge_tag,branch_tag\n";
    for (const auto& curve : curves) {
        for (std::size_t k = 0; k < curve.strands.size(); ++k) {
            const std::string btag = "strand" + std::to_string(k);
            for (const auto& p : curve.strands[k])
                s += raw(p.re) + "," + raw(p.im) + "," + curve.tag + "," + btag + "\n";
        }
        for (double mu : curve.axis_mu)
            s += raw(0.0) + "," + raw(mu) + "," + curve.tag + ",axis\n";
        for (const auto& p : curve.special) {
            if (p.at_infinity) continue;
            s += raw(p.re()) + "," + raw(p.im()) + "," + curve.tag + ",special\n";
        }
    }
    return s;
}

std::string strip_json(const StripReport& rep, const DiscriminantThresholds* th,
                       const double* d0) {
    std::string s = "{\n";
    s += std::string("  \"exists\": ") + (rep.exists ? "true" : "false") + ",\n";
    s += "  \"s_low\": " + num(rep.s_low) + ",\n";
    s += "  \"s_high\": " + num(rep.s_high) + ",\n";
    s += std::string("  \"low_on_axis\": ") + (rep.low_on_axis ? "true" : "false") +
         ",\n";
    s += std::string("  \"high_on_axis\": ") + (rep.high_on_axis ? "true" : "false") +
         ",\n";
    auto pts = [&](const std::vector<ComplexPoint>& v) {
        std::string t = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) t += ", ";
            t += point_json(v[i]);
        }
        return t + "]";
    };
    s += "  \"low_points\": " + pts(rep.low_points) + ",\n";
    s += "  \"high_points\": " + pts(rep.high_points) + ",\n";
    s += std::string("  \"min_only\": ") + (rep.min_only ? "true" : "false") + ",\n";
    s += "  \"min_imag\": " + num(rep.min_imag) + ",\n";
    s += std::string("  \"min_on_axis\": ") + (rep.min_on_axis ? "true" : "false");
    if (th) {
        s += ",\n  \"thresholds\": {\"d1\": " + num(th->d1) + ", \"d2\": " +
             num(th->d2) + ", \"d3\": " + num(th->d3) + ", \"degenerate\": " +
             (th->degenerate ? "true" : "false") + "}";
    }
    if (d0) s += ",\n  \"d0\": " + num(*d0);
    s += "\n}";
    return s;
}

std::string cmd_strip(const Config& cfg, double beta, bool has_beta, double alpha,
                      bool has_alpha) {
    if (has_beta && has_alpha) throw config_error("use --beta or --alpha, not both");
    if (has_beta) {
        const auto th = discriminant_ds_beta(beta, cfg.params);
        return strip_json(strip_edges_beta(beta, cfg.params), &th, nullptr) + "\n";
    }
    if (has_alpha) {
        const double d0 = d0_alpha(alpha, cfg.params);
        return strip_json(strip_alpha(alpha, cfg.params), nullptr, &d0) + "\n";
    }
    // per-edge reports plus their numeric intersection (no theoretical claim)
    std::string s = "{\n  \"edges\": {";
    bool first = true;
    double lo = -inf, hi = inf;
    bool all_exist = true;
    int reported = 0;
    auto add = [&](const std::string& name, const StripReport& rep) {
        if (!first) s += ",";
        first = false;
        s += "\n    \"" + name + "\": " + strip_json(rep, nullptr, nullptr);
        ++reported;
        if (rep.exists) {
            lo = std::max(lo, rep.s_low);
            hi = std::min(hi, rep.s_high);
        } else {
            all_exist = false;
        }
    };
    for (double b : {cfg.box.beta_lo, cfg.box.beta_hi}) {
        if (!std::isfinite(b) || !(b > 0.0)) continue;
        add("beta_" + raw(b), strip_edges_beta(b, cfg.params));
        if (cfg.box.beta_lo == cfg.box.beta_hi) break;
    }
    for (double a : {cfg.box.alpha_lo, cfg.box.alpha_hi}) {
        if (!std::isfinite(a) || a == 0.0) continue;
        add("alpha_" + raw(a), strip_alpha(a, cfg.params));
        if (cfg.box.alpha_lo == cfg.box.alpha_hi) break;
    }
    s += "\n  },\n";
    const bool inter = reported > 0 && all_exist && lo < hi;
    s += std::string("  \"intersection\": {\"exists\": ") + (inter ? "true" : "false");
    if (inter) s += ", \"s_low\": " + num(lo) + ", \"s_high\": " + num(hi);
    s += "},\n";
    s += "  \"warning\": \"per-edge strips; their intersection carries no "
         "guarantee for the full enclosure\"\n}\n";
    return s;
}

std::string cmd_pseudo(const Config& cfg, double epsilon) {
    const Viewport vp =
        cfg.has_viewport ? cfg.viewport : default_viewport(cfg.box, cfg.params);
    const auto lines = pseudo_contour(cfg.box, epsilon, vp, cfg.resolution, cfg.params);
    std::string s = "polyline,re,im\n";
    for (std::size_t k = 0; k < lines.size(); ++k)
        for (const auto& p : lines[k])
            s += std::to_string(k) + "," + raw(p.re()) + "," + raw(p.im()) + "\n";
    return s;
}

std::string cmd_bound(const Config& cfg, const std::string& omega_arg) {
    const complex w = parse_omega(omega_arg);
    const Epsilon0Result r = epsilon0(w, cfg.box, cfg.params);
    const char* branch = "AxisSeparable";
    switch (r.branch) {
        case Epsilon0Branch::AxisSeparable: branch = "AxisSeparable"; break;
        case Epsilon0Branch::LowerCorner: branch = "LowerCorner"; break;
        case Epsilon0Branch::UpperCorner: branch = "UpperCorner"; break;
        case Epsilon0Branch::Interior: branch = "Interior"; break;
    }
    std::string s = "{\n  \"epsilon0\": " + num(r.value) + ",\n";
    s += "  \"bound\": " + num(r.value > 0.0 ? 1.0 / r.value : inf) + ",\n";
    s += "  \"argmin\": {\"alpha\": " + num(r.alpha) + ", \"beta\": " + num(r.beta) +
         "},\n";
    s += std::string("  \"branch\": \"") + branch + "\"\n}\n";
    return s;
}

std::string cmd_validate(const Config& cfg, int threads) {
    std::string s = "{\n  \"checks\": [";
    bool all = true;
    bool first = true;
    auto report = [&](const std::string& name, bool pass, const std::string& detail) {
        if (!first) s += ",";
        first = false;
        s += "\n    {\"name\": \"" + name + "\", \"pass\": " + (pass ? "true" : "false") +
             ", \"detail\": \"" + detail + "\"}";
        all = all && pass;
    };

    // enclosure soundness on sampled numerical-range points
    {
        int violations = 0, total = 0;
        try {
            const MatrixPair pair = make_matrix_pair(cfg.box, 8);
            const auto pts = sample_numerical_range(pair, 500, cfg.seed, cfg.params);
            total = int(pts.size());
            for (const auto& p : pts)
                if (!contains(p, cfg.box, cfg.params).inside) ++violations;
        } catch (const config_error&) {
            // beta interval {0}: nothing to sample
        }
        report("enclosure_soundness", violations == 0,
               std::to_string(total) + " points, " + std::to_string(violations) +
                   " violations");
    }

    // resolvent bound vs sigma_min on an exterior grid
    {
        int violations = 0, exterior = 0;
        try {
            const MatrixPair pair = make_matrix_pair(cfg.box, 8);
            const Viewport vp = cfg.has_viewport ? cfg.viewport
                                                 : default_viewport(cfg.box, cfg.params);
            const int n = 50;
            std::vector<int> viol(std::size_t(n) * n, 0), ext(std::size_t(n) * n, 0);
            parallel_for(std::size_t(n) * n, threads, [&](std::size_t i) {
                const int ix = int(i % n), iy = int(i / n);
                const complex w(vp.re_lo + (ix + 0.5) * (vp.re_hi - vp.re_lo) / n,
                                vp.im_lo + (iy + 0.5) * (vp.im_hi - vp.im_lo) / n);
                try {
                    const double e0 = epsilon0(w, cfg.box, cfg.params).value;
                    if (e0 <= 0.0) return;
                    ext[i] = 1;
                    if (sigma_min_T(pair, w, cfg.params) < e0 - 1e-10) viol[i] = 1;
                } catch (const numeric_error&) {
                }
            });
            for (std::size_t i = 0; i < viol.size(); ++i) {
                violations += viol[i];
                exterior += ext[i];
            }
        } catch (const config_error&) {
        }
        report("resolvent_bound", violations == 0,
               std::to_string(exterior) + " exterior points, " +
                   std::to_string(violations) + " violations");
    }

    // epsilon0 against a brute-force box grid
    {
        int bad = 0;
        std::mt19937_64 rng(cfg.seed + 17);
        std::uniform_real_distribution<double> ure(-4.0, 4.0), uim(-4.0, 1.0);
        auto finite_or = [](double v, double fallback) {
            return std::isfinite(v) ? v : fallback;
        };
        const double alo = finite_or(cfg.box.alpha_lo, -50.0);
        const double ahi = finite_or(cfg.box.alpha_hi, 50.0);
        const double blo = cfg.box.beta_lo;
        const double bhi = finite_or(cfg.box.beta_hi, blo + 50.0);
        for (int trial = 0; trial < 50; ++trial) {
            const complex w(ure(rng), uim(rng));
            double e0;
            try {
                e0 = epsilon0(w, cfg.box, cfg.params).value;
            } catch (const numeric_error&) {
                continue;
            }
            double grid_min = inf;
            const int g = 60;
            for (int i = 0; i <= g; ++i)
                for (int j = 0; j <= g; ++j) {
                    const double a = alo + (ahi - alo) * i / g;
                    const double b = blo + (bhi - blo) * j / g;
                    const complex w2 = w * w;
                    const complex den = cfg.params.c - complex(0.0, cfg.params.d) * w -
                                        w2;
                    grid_min = std::min(grid_min, std::abs(a - w2 - w2 * double(b) / den));
                }
            if (grid_min < e0 - 1e-9) ++bad;
        }
        report("epsilon0_grid_oracle", bad == 0,
               "50 random points, " + std::to_string(bad) + " grid values below the "
               "closed form");
    }

    // axis structure against dense membership on the axis
    {
        bool ok = true;
        try {
            const AxisStructure ax = axis_segments(cfg.box, cfg.params);
            const double lo = -3.0 * (1.0 + cfg.params.d), hi = 1.0 + cfg.params.d;
            const int n = 2000;
            for (int i = 0; i <= n; ++i) {
                const double mu = lo + (hi - lo) * i / n;
                const bool member =
                    contains(ComplexPoint(0.0, mu), cfg.box, cfg.params).inside;
                const bool structural = ax.contains_mu(mu, (hi - lo) / n);
                if (member && !structural) ok = false;
                if (!member && ax.contains_mu(mu, -(hi - lo) / n)) ok = false;
            }
        } catch (const numeric_error&) {
            ok = false;
        }
        report("axis_structure", ok, "dense axis grid vs segment structure");
    }

    s += "\n  ],\n  \"pass\": " + std::string(all ? "true" : "false") + "\n}\n";
    return s;
}

std::string cmd_figure(const Config& cfg, double epsilon) {
    const Viewport vp =
        cfg.has_viewport ? cfg.viewport : default_viewport(cfg.box, cfg.params);
    std::vector<svg::Polyline> lines;
    std::vector<svg::Marker> marks;

    const auto curves = boundary_set(cfg.box, cfg.params);
    for (const auto& curve : curves) {
        const bool beta_family = curve.family == BranchCurve::Family::FixedBeta ||
                                 curve.family == BranchCurve::Family::BetaZero;
        const std::string color = beta_family ? "#1f77b4" : "#d62728";
        for (const auto& strand : curve.strands) {
            svg::Polyline line;
            line.color = color;
            line.width = 1.2;
            for (const auto& p : strand) line.pts.push_back({p.re, p.im});
            lines.push_back(std::move(line));
        }
        for (double mu : curve.axis_mu) marks.push_back({0.0, mu, color, 2.5});
        for (const auto& p : curve.special)
            if (!p.at_infinity) marks.push_back({p.re(), p.im(), "#2ca02c", 3.0});
    }
    const AxisStructure ax = axis_segments(cfg.box, cfg.params);
    for (const auto& seg : ax.segments) {
        svg::Polyline line;
        line.color = "#000000";
        line.width = 2.0;
        line.pts.push_back({0.0, std::max(seg.mu_lo, vp.im_lo)});
        line.pts.push_back({0.0, std::min(seg.mu_hi, vp.im_hi)});
        lines.push_back(std::move(line));
    }
    for (double mu : ax.isolated) marks.push_back({0.0, mu, "#000000", 2.5});
    if (epsilon > 0.0) {
        for (const auto& poly :
             pseudo_contour(cfg.box, epsilon, vp, cfg.resolution, cfg.params)) {
            svg::Polyline line;
            line.color = "#888888";
            line.width = 1.0;
            for (const auto& p : poly) line.pts.push_back({p.re(), p.im()});
            lines.push_back(std::move(line));
        }
    }
    return svg::render(lines, marks, vp.re_lo, vp.re_hi, vp.im_lo, vp.im_hi);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical-range enclosure analyses for the rational family "
                 "t(w) = alpha - w^2 - w^2 beta / (c - i d w - w^2)"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path, out_path, omega_arg;
    int threads_flag = 0;
    double beta_arg = 0.0, alpha_arg = 0.0, epsilon_arg = 0.0;
    app.add_option("-c,--config", config_path, "problem configuration (JSON)")
        ->required();
    app.add_option("-o,--output", out_path, "output file (default: stdout)");
    app.add_option("--threads", threads_flag,
                   "worker threads (default: all cores, or "
                   "RANGE_ENCLOSURE_THREADS)");

    auto* sc_poles = app.add_subcommand("poles", "pole locations");
    auto* sc_member = app.add_subcommand("member", "membership verdict for a point");
    sc_member->add_option("--omega", omega_arg, "point \"re,im\" or \"inf\"")
        ->required();
    auto* sc_axis = app.add_subcommand("axis", "imaginary-axis segment structure");
    double axis_eps = 0.0;
    sc_axis->add_option("--epsilon", axis_eps, "inflate the alpha interval");
    auto* sc_boundary = app.add_subcommand("boundary", "boundary curves (CSV)");
    auto* sc_strip = app.add_subcommand("strip", "curve-free horizontal strips");
    auto* opt_beta = sc_strip->add_option("--beta", beta_arg, "fixed-beta slice");
    auto* opt_alpha = sc_strip->add_option("--alpha", alpha_arg, "fixed-alpha slice");
    auto* sc_pseudo = app.add_subcommand("pseudo", "epsilon0 level set (CSV)");
    auto* opt_peps = sc_pseudo->add_option("--epsilon", epsilon_arg, "level value");
    auto* sc_bound = app.add_subcommand("bound", "epsilon0 and resolvent bound");
    sc_bound->add_option("--omega", omega_arg, "point \"re,im\"")->required();
    auto* sc_validate = app.add_subcommand("validate", "run the oracle suites");
    auto* sc_figure = app.add_subcommand("figure", "SVG overlay figure");
    double fig_eps = 0.0;
    sc_figure->add_option("--epsilon", fig_eps, "overlay an epsilon0 contour");

    CLI11_PARSE(app, argc, argv);

    try {
        const Config cfg = load_config(config_path);
        const int threads = resolve_threads(threads_flag);
        std::string out;
        if (sc_poles->parsed()) out = cmd_poles(cfg);
        if (sc_member->parsed()) out = cmd_member(cfg, omega_arg);
        if (sc_axis->parsed()) out = cmd_axis(cfg, axis_eps);
        if (sc_boundary->parsed()) out = cmd_boundary(cfg);
        if (sc_strip->parsed())
            out = cmd_strip(cfg, beta_arg, opt_beta->count() > 0, alpha_arg,
                            opt_alpha->count() > 0);
        if (sc_pseudo->parsed())
            out = cmd_pseudo(cfg, opt_peps->count() > 0 ? epsilon_arg : cfg.epsilon);
        if (sc_bound->parsed()) out = cmd_bound(cfg, omega_arg);
        if (sc_validate->parsed()) out = cmd_validate(cfg, threads);
        if (sc_figure->parsed()) out = cmd_figure(cfg, fig_eps);
        emit(out, out_path);
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const numeric_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
