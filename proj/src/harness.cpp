#include "ratbound/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <iostream>
#include <limits>
#include <numbers>

#include "ratbound/blaschke.hpp"
#include "ratbound/instance_io.hpp"
#include "ratbound/philox.hpp"

namespace ratbound {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kZeroPoleSeparation = 1e-6;

double area_uniform_radius(PhiloxStream& rng, double lo, double hi) {
    const double u = rng.uniform();
    return std::sqrt(lo * lo + u * (hi * hi - lo * lo));
}

Complex draw_zero(PhiloxStream& rng, const GeneratorSpec& s, bool on_boundary) {
    const double k = s.zero_region.k;
    double rho = k;
    if (!on_boundary) {
        switch (s.zero_region.mode) {
            case ZeroMode::AllOutsideOrOn: rho = area_uniform_radius(rng, k, k + s.zero_span); break;
            case ZeroMode::AllInsideOrOn: rho = area_uniform_radius(rng, 0.0, k); break;
            case ZeroMode::Unconstrained: rho = area_uniform_radius(rng, 0.0, s.zero_span); break;
        }
    }
    return std::polar(rho, kTwoPi * rng.uniform());
}

std::string mode_name(ZeroMode m) {
    switch (m) {
        case ZeroMode::AllOutsideOrOn: return "outside-or-on";
        case ZeroMode::AllInsideOrOn: return "inside-or-on";
        case ZeroMode::Unconstrained: return "unconstrained";
    }
    return "?";
}

}  // namespace

void validate(const GeneratorSpec& s) {
    if (s.n < 0 || s.n > 64) throw SpecInvalid("n must lie in 0..64");
    if (s.t < 0 || s.t > s.n) throw SpecInvalid("t must lie in 0..n");
    if (s.count < 1) throw SpecInvalid("count must be positive");
    if (!(s.pole_rmin >= kPoleFloor)) throw SpecInvalid("pole_rmin must be at least 1.01");
    if (!(s.pole_rmax >= s.pole_rmin) || !std::isfinite(s.pole_rmax))
        throw SpecInvalid("pole_rmax must be finite and >= pole_rmin");
    if (!(s.zero_region.k > 0.0) || !std::isfinite(s.zero_region.k)) throw SpecInvalid("k must be positive");
    if (!(s.zero_span > 0.0)) throw SpecInvalid("zero_span must be positive");
    if (!(s.p_boundary >= 0.0 && s.p_boundary <= 1.0)) throw SpecInvalid("p_boundary must lie in [0, 1]");
}

RationalFunction generate_one(const GeneratorSpec& s, std::uint64_t index) {
    PhiloxStream rng(s.seed, index);
    std::vector<Complex> poles;
    for (int j = 0; j < s.n; ++j) {
        const double rho = area_uniform_radius(rng, s.pole_rmin, s.pole_rmax);
        poles.push_back(std::polar(rho, kTwoPi * rng.uniform()));
    }
    const PoleSet pole_set(poles);

    std::vector<Complex> zeros;
    for (int j = 0; j < s.t; ++j) {
        for (;;) {
            const bool boundary = (j == 0 && s.force_boundary_zero) || rng.uniform() < s.p_boundary;
            const Complex b = draw_zero(rng, s, boundary);
            if (pole_set.distance_to_nearest(b) >= kZeroPoleSeparation) {
                zeros.push_back(b);
                break;
            }
        }
    }
    const Complex leading = std::polar(1.0, kTwoPi * rng.uniform());
    return RationalFunction::from_roots(std::move(zeros), leading, std::move(poles));
}

std::vector<RationalFunction> generate(const GeneratorSpec& s) {
    validate(s);
    if (s.pole_rmin < kPoleDefaultMin)
        std::clog << "ratbound: warning: pole_rmin " << s.pole_rmin
                  << " < 1.1; |B'| grows near the unit circle and grid sweeps lose resolution\n";
    std::vector<RationalFunction> out;
    out.reserve(static_cast<std::size_t>(s.count));
    for (int i = 0; i < s.count; ++i) out.push_back(generate_one(s, static_cast<std::uint64_t>(i)));
    return out;
}

void check_campaign_spec(const GeneratorSpec& s, TheoremId id) {
    const auto& h = hypothesis(id);
    const std::string who{theorem_name(id)};
    if (s.zero_region.mode != h.region)
        throw HypothesisMismatch(who + ": generator zero region does not match the theorem");
    if (!radius_allowed(id, s.zero_region.k))
        throw HypothesisMismatch(who + ": k outside the theorem's range");
    if (h.exactly_n_zeros && s.t != s.n)
        throw HypothesisMismatch(who + ": theorem needs t = n");
    if (h.zero_on_circle && (s.t < 1 || !(s.force_boundary_zero || s.p_boundary == 1.0)))
        throw HypothesisMismatch(who + ": theorem needs a zero on |z| = k");
}

CampaignReport run_campaign(const GeneratorSpec& spec, TheoremId id, std::size_t grid_count, Exec exec) {
    validate(spec);
    check_campaign_spec(spec, id);
    const auto instances = generate(spec);

    std::vector<BoundVerdict> verdicts(instances.size());
    for_each_index(instances.size(), exec, [&](std::size_t i) {
        verdicts[i] = certify(id, instances[i], spec.zero_region.k, grid_count, Exec::Serial);
    });

    CampaignReport rep;
    rep.spec = spec;
    rep.theorem = id;
    rep.grid_count = grid_count;
    rep.instances = static_cast<int>(instances.size());
    rep.min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
        const auto& v = verdicts[i];
        rep.skipped += v.skipped_points;
        if (v.degenerate) {
            ++rep.degenerate;
            continue;
        }
        rep.violations += v.violations;
        if (v.violations > 0) ++rep.failing_instances;
        if (v.min_margin < rep.min_margin) {
            rep.min_margin = v.min_margin;
            rep.worst_index = static_cast<int>(i);
        }
    }
    if (rep.worst_index >= 0)
        rep.worst_instance = dump_instance(instances[static_cast<std::size_t>(rep.worst_index)], spec.zero_region.k);
    return rep;
}

nlohmann::json report_to_json(const CampaignReport& r) {
    nlohmann::json spec;
    spec["n"] = r.spec.n;
    spec["t"] = r.spec.t;
    spec["pole_rmin"] = r.spec.pole_rmin;
    spec["pole_rmax"] = r.spec.pole_rmax;
    spec["zero_region"] = mode_name(r.spec.zero_region.mode);
    spec["k"] = r.spec.zero_region.k;
    spec["zero_span"] = r.spec.zero_span;
    spec["p_boundary"] = r.spec.p_boundary;
    spec["force_boundary_zero"] = r.spec.force_boundary_zero;
    spec["seed"] = r.spec.seed;
    spec["count"] = r.spec.count;

    nlohmann::json doc;
    doc["spec"] = spec;
    doc["theorem"] = std::string(theorem_name(r.theorem));
    doc["grid_count"] = r.grid_count;
    doc["instances"] = r.instances;
    if (std::isfinite(r.min_margin))
        doc["min_margin"] = r.min_margin;
    else
        doc["min_margin"] = nullptr;
    doc["violations"] = r.violations;
    doc["failing_instances"] = r.failing_instances;
    doc["degenerate"] = r.degenerate;
    doc["skipped_points"] = r.skipped;
    doc["passed"] = r.passed();
    doc["worst_index"] = r.worst_index;
    doc["worst_instance"] =
        r.worst_instance.empty() ? nlohmann::json(nullptr) : nlohmann::json::parse(r.worst_instance);
    return doc;
}

std::string dump_report(const CampaignReport& r) { return report_to_json(r).dump(2) + "\n"; }

std::string curves_csv(TheoremId id, const RationalFunction& r, double k, std::size_t grid_count, Exec exec) {
    check_hypothesis(id, r, k);
    const CircleGrid grid = CircleGrid::unit(grid_count);
    const auto ctx = make_context(id, r, k, grid_count, exec);
    const BlaschkeProduct b(r.poles());
    const bool upper = is_upper(id);

    std::vector<std::string> rows(grid.count);
    for_each_index(grid.count, exec, [&](std::size_t j) {
        const Complex z = grid.point(j);
        const double deriv = std::abs(r.derivative(z));
        const double rhs = rhs_value(id, ctx, b.deriv_modulus_on_unit_circle(z), std::abs(r(z)));
        const double margin = upper ? rhs - deriv : deriv - rhs;
        char buf[128];
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", grid.theta(j), deriv, rhs, margin);
        rows[j] = buf;
    });
    std::string text = "theta,deriv_modulus,bound_rhs,margin\n";
    for (const auto& row : rows) text += row;
    return text;
}

}  // namespace ratbound
