// ratbound: certify derivative bounds for rational functions with prescribed poles.
//
//   ratbound certify FILE --theorem NAME [--grid N] [--k K]
//   ratbound campaign --theorem NAME --n N --t T --k K --count C --seed S [--grid N] [--out PATH]
//   ratbound curves FILE --theorem NAME [--grid N] [--k K] [--out PATH]
//   ratbound extremal --theorem NAME --a A --k K --t T --n N [--h H --alpha ALPHA] [--out PATH]
//   ratbound sharpness --theorem NAME [--k K] [--out PATH]
//
// Exit codes: 0 pass, 1 usage/parse/IO error, 2 violation, 3 hypothesis failure, 4 degenerate.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ratbound/harness.hpp"
#include "ratbound/instance_io.hpp"

using namespace ratbound;

namespace {

enum Exit : int { kPass = 0, kUsage = 1, kViolation = 2, kHypothesis = 3, kDegenerate = 4 };

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

int exit_code(const BoundVerdict& v) {
    if (v.degenerate) return kDegenerate;
    return v.violations > 0 ? kViolation : kPass;
}

std::size_t default_grid() {
    const char* env = std::getenv("RATBOUND_GRID");
    if (env == nullptr || *env == '\0') return kCertifyGrid;
    char* end = nullptr;
    const unsigned long long g = std::strtoull(env, &end, 10);
    if (*end != '\0') throw InvalidArgument(std::string("RATBOUND_GRID is not an integer: ") + env);
    CircleGrid::unit(static_cast<std::size_t>(g));  // validates
    return static_cast<std::size_t>(g);
}

TheoremId theorem_from(const std::string& name) {
    const auto id = parse_theorem(name);
    if (!id) throw InvalidArgument("unknown theorem '" + name + "'");
    return *id;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write " + path);
    out << text;
    if (!out) throw InvalidArgument("write failed for " + path);
}

struct Common {
    std::string theorem;
    std::optional<std::size_t> grid;
    std::optional<double> k;
    std::string out;

    std::size_t grid_count() const {
        const std::size_t g = grid ? *grid : default_grid();
        CircleGrid::unit(g);
        return g;
    }
};

int run_certify(const std::string& path, const Common& c) {
    const auto id = theorem_from(c.theorem);
    const auto inst = load_instance(path);
    const double k = c.k ? *c.k : inst.k.value_or(1.0);
    const auto v = certify(id, inst.r, k, c.grid_count());

    std::ostringstream os;
    os << "theorem: " << theorem_name(id) << "\n"
       << "n: " << inst.r.n() << "\n"
       << "t: " << inst.r.t() << "\n"
       << "k: " << fmt(k) << "\n"
       << "grid: " << v.grid_count << "\n"
       << "norm: " << fmt(v.context.norm) << "\n"
       << "m: " << fmt(v.context.m) << "\n";
    if (v.degenerate) {
        os << "degenerate: " << *v.degenerate << "\n"
           << "verdict: degenerate\n";
    } else {
        os << "min_margin: " << fmt(v.min_margin) << "\n"
           << "worst_theta: " << fmt(v.worst_theta) << "\n"
           << "violations: " << v.violations << "\n"
           << "skipped_points: " << v.skipped_points << "\n"
           << "verdict: " << (v.passed() ? "pass" : "violation") << "\n";
    }
    std::cout << os.str();
    return exit_code(v);
}

int run_curves(const std::string& path, const Common& c) {
    const auto id = theorem_from(c.theorem);
    const auto inst = load_instance(path);
    const double k = c.k ? *c.k : inst.k.value_or(1.0);
    write_text(c.out, curves_csv(id, inst.r, k, c.grid_count()));
    return kPass;
}

struct CampaignFlags {
    int n = 2;
    int t = 2;
    int count = 100;
    std::uint64_t seed = 0;
    double p_boundary = 0.0;
    double pole_rmin = kPoleDefaultMin;
    double pole_rmax = 5.0;
};

int run_campaign_cmd(const Common& c, const CampaignFlags& f) {
    const auto id = theorem_from(c.theorem);
    const auto& h = hypothesis(id);
    GeneratorSpec spec;
    spec.n = f.n;
    spec.t = f.t;
    spec.count = f.count;
    spec.seed = f.seed;
    spec.p_boundary = f.p_boundary;
    spec.pole_rmin = f.pole_rmin;
    spec.pole_rmax = f.pole_rmax;
    spec.zero_region = {h.region, c.k.value_or(1.0)};
    spec.force_boundary_zero = h.zero_on_circle;
    const auto rep = run_campaign(spec, id, c.grid_count());
    write_text(c.out, dump_report(rep));
    std::cerr << theorem_name(id) << ": " << rep.instances << " instances, " << rep.violations << " violations"
              << (rep.degenerate ? ", " + std::to_string(rep.degenerate) + " degenerate" : "") << "\n";
    return rep.passed() ? kPass : kViolation;
}

struct ExtremalFlags {
    double a = 2.0;
    int t = 1;
    int n = 1;
    double h = 1.0;
    double alpha = 0.0;
};

int run_extremal(const Common& c, const ExtremalFlags& f) {
    const auto id = theorem_from(c.theorem);
    const double k = c.k.value_or(1.0);
    const auto e = make_extremal(id, {f.a, k, f.t, f.n, f.h, f.alpha});
    write_text(c.out, dump_instance(e.r, e.k));
    return kPass;
}

int run_sharpness(const Common& c) {
    const auto id = theorem_from(c.theorem);
    const auto& h = hypothesis(id);
    if (h.m_circle == MinCircle::Unit || id == TheoremId::LiUpper || id == TheoremId::LiLower)
        throw InvalidArgument("sharpness sweeps cover the (z+k)^t/(z-a)^n family only");
    const double k = c.k.value_or(is_upper(id) ? 1.25 : 0.5);
    std::string text = "a,n,t,k,gap\n";
    for (double a : {1.5, 2.0, 3.0, 5.0})
        for (int n : {1, 2, 4})
            for (int t = 1; t <= n; ++t) {
                if ((h.exactly_n_zeros || id == TheoremId::AzizZarger99) && t != n) continue;
                const auto e = make_extremal(id, {a, k, t, n});
                const double gap = sharpness_gap(id, e.r, e.k, e.equality_point, c.grid_count());
                text += fmt(a) + "," + std::to_string(n) + "," + std::to_string(t) + "," + fmt(k) + "," + fmt(gap) + "\n";
            }
    write_text(c.out, text);
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certify Bernstein-type derivative bounds for rational functions with prescribed poles"};
    app.require_subcommand(1);

    Common common;
    std::string path;
    CampaignFlags cf;
    ExtremalFlags ef;

    auto add_theorem = [&](CLI::App* sub) {
        sub->add_option("--theorem", common.theorem, "li-upper, li-lower, aziz-shah-upper-97, aziz-shah-lower-97, "
                                                     "aziz-zarger-99, aziz-shah-04, aziz-shah-04-cor, main-upper, "
                                                     "main-upper-cor, main-lower, main-lower-cor")
            ->required();
    };

    auto* certify_cmd = app.add_subcommand("certify", "Sweep one instance file against a bound");
    certify_cmd->add_option("file", path, "instance file")->required();
    add_theorem(certify_cmd);
    certify_cmd->add_option("--grid", common.grid, "grid points (power of two >= 64)");
    certify_cmd->add_option("--k", common.k, "radius k (default: file, then 1)");

    auto* campaign_cmd = app.add_subcommand("campaign", "Certify a batch of random instances");
    add_theorem(campaign_cmd);
    campaign_cmd->add_option("--n", cf.n, "number of poles")->required();
    campaign_cmd->add_option("--t", cf.t, "number of zeros")->required();
    campaign_cmd->add_option("--k", common.k, "radius k (default 1)");
    campaign_cmd->add_option("--count", cf.count, "instances")->required();
    campaign_cmd->add_option("--seed", cf.seed, "generator seed")->required();
    campaign_cmd->add_option("--grid", common.grid, "grid points (power of two >= 64)");
    campaign_cmd->add_option("--p-boundary", cf.p_boundary, "probability of a zero on |z| = k");
    campaign_cmd->add_option("--pole-rmin", cf.pole_rmin, "smallest pole modulus");
    campaign_cmd->add_option("--pole-rmax", cf.pole_rmax, "largest pole modulus");
    campaign_cmd->add_option("--out", common.out, "report path (default stdout)");

    auto* curves_cmd = app.add_subcommand("curves", "Write theta,|r'|,RHS,margin rows for one instance");
    curves_cmd->add_option("file", path, "instance file")->required();
    add_theorem(curves_cmd);
    curves_cmd->add_option("--grid", common.grid, "grid points (power of two >= 64)");
    curves_cmd->add_option("--k", common.k, "radius k (default: file, then 1)");
    curves_cmd->add_option("--out", common.out, "CSV path (default stdout)");

    auto* extremal_cmd = app.add_subcommand("extremal", "Write the equality-case instance for a bound");
    extremal_cmd->set_help_flag("--help", "Print this help message and exit");
    add_theorem(extremal_cmd);
    extremal_cmd->add_option("--a", ef.a, "real pole > 1")->required();
    extremal_cmd->add_option("--k", common.k, "radius k (default 1)");
    extremal_cmd->add_option("--t", ef.t, "number of zeros");
    extremal_cmd->add_option("--n", ef.n, "number of poles")->required();
    extremal_cmd->add_option("--h", ef.h, "|c| for the B + c families");
    extremal_cmd->add_option("--alpha", ef.alpha, "arg c for the B + c families");
    extremal_cmd->add_option("--out", common.out, "instance path (default stdout)");

    auto* sharp_cmd = app.add_subcommand("sharpness", "Equality gaps at z = 1 over the extremal sweep");
    add_theorem(sharp_cmd);
    sharp_cmd->add_option("--k", common.k, "radius k");
    sharp_cmd->add_option("--grid", common.grid, "grid points for ||r|| and m");
    sharp_cmd->add_option("--out", common.out, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }

    try {
        if (*certify_cmd) return run_certify(path, common);
        if (*campaign_cmd) return run_campaign_cmd(common, cf);
        if (*curves_cmd) return run_curves(path, common);
        if (*extremal_cmd) return run_extremal(common, ef);
        if (*sharp_cmd) return run_sharpness(common);
    } catch (const HypothesisViolated& e) {
        std::cerr << "ratbound: hypothesis: " << e.what() << "\n";
        return kHypothesis;
    } catch (const Degenerate& e) {
        std::cerr << "ratbound: degenerate: " << e.what() << "\n";
        return kDegenerate;
    } catch (const Error& e) {
        std::cerr << "ratbound: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
