#include "ratbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ratbound/blaschke.hpp"

namespace ratbound {

namespace {

constexpr double kDegenerateGap = 1e-12;

struct Entry {
    TheoremId id;
    std::string_view name;
    Hypothesis hyp;
};

using ZM = ZeroMode;
using RR = RadiusRule;
using MC = MinCircle;

// clang-format off
constexpr std::array<Entry, 11> kTable = {{
    {TheoremId::LiUpper,         "li-upper",           {ZM::AllOutsideOrOn, RR::EqualsOne,  false, false, MC::None,    true}},
    {TheoremId::LiLower,         "li-lower",           {ZM::AllInsideOrOn,  RR::EqualsOne,  false, false, MC::None,    false}},
    {TheoremId::AzizShahUpper97, "aziz-shah-upper-97", {ZM::AllOutsideOrOn, RR::EqualsOne,  false, false, MC::Unit,    true}},
    {TheoremId::AzizShahLower97, "aziz-shah-lower-97", {ZM::AllInsideOrOn,  RR::EqualsOne,  true,  false, MC::Unit,    false}},
    {TheoremId::AzizZarger99,    "aziz-zarger-99",     {ZM::AllOutsideOrOn, RR::AtLeastOne, false, false, MC::None,    true}},
    {TheoremId::AzizShah04,      "aziz-shah-04",       {ZM::AllInsideOrOn,  RR::AtMostOne,  false, false, MC::None,    false}},
    {TheoremId::AzizShah04Cor,   "aziz-shah-04-cor",   {ZM::AllInsideOrOn,  RR::AtMostOne,  true,  false, MC::None,    false}},
    {TheoremId::MainUpper,       "main-upper",         {ZM::AllOutsideOrOn, RR::AtLeastOne, false, false, MC::RadiusK, true}},
    {TheoremId::MainUpperCor,    "main-upper-cor",     {ZM::AllOutsideOrOn, RR::AtLeastOne, false, true,  MC::None,    true}},
    {TheoremId::MainLower,       "main-lower",         {ZM::AllInsideOrOn,  RR::AtMostOne,  false, false, MC::RadiusK, false}},
    {TheoremId::MainLowerCor,    "main-lower-cor",     {ZM::AllInsideOrOn,  RR::AtMostOne,  true,  false, MC::RadiusK, false}},
}};
// clang-format on

const Entry& entry(TheoremId id) { return kTable[static_cast<std::size_t>(id)]; }

bool radius_ok(RadiusRule rule, double k) {
    switch (rule) {
        case RadiusRule::EqualsOne: return k == 1.0;
        case RadiusRule::AtLeastOne: return k >= 1.0;
        case RadiusRule::AtMostOne: return k > 0.0 && k <= 1.0;
    }
    return false;
}

}  // namespace

const Hypothesis& hypothesis(TheoremId id) { return entry(id).hyp; }
bool is_upper(TheoremId id) { return entry(id).hyp.upper; }
std::string_view theorem_name(TheoremId id) { return entry(id).name; }

bool radius_allowed(TheoremId id, double k) { return std::isfinite(k) && radius_ok(hypothesis(id).radius, k); }

std::optional<TheoremId> parse_theorem(std::string_view name) {
    for (const auto& e : kTable)
        if (e.name == name) return e.id;
    return std::nullopt;
}

void check_hypothesis(TheoremId id, const RationalFunction& r, double k) {
    const auto& h = hypothesis(id);
    const std::string who{theorem_name(id)};
    if (!std::isfinite(k) || !radius_ok(h.radius, k))
        throw HypothesisViolated(who + ": radius k=" + std::to_string(k) + " outside the allowed range");
    if (!classify_zeros(r, ZeroLocation{h.region, k}))
        throw HypothesisViolated(who + ": a zero lies outside the required region");
    if (h.exactly_n_zeros && r.t() != r.n())
        throw HypothesisViolated(who + ": requires exactly n zeros");
    if (h.zero_on_circle && !(min_zero_distance_to_circle(r, k) <= kRegionTolerance))
        throw HypothesisViolated(who + ": requires a zero on |z| = k");
}

BoundContext make_context(TheoremId id, const RationalFunction& r, double k,
                          std::size_t grid_count, Exec exec) {
    const auto& h = hypothesis(id);
    BoundContext ctx;
    ctx.t = r.t();
    ctx.n = r.n();
    ctx.k = k;
    ctx.m_circle = h.m_circle;
    ctx.norm = sup_modulus_on_circle(r, CircleGrid::unit(grid_count), exec).value;
    switch (h.m_circle) {
        case MinCircle::None: ctx.m = 0.0; break;
        case MinCircle::Unit:
            ctx.m = min_modulus_on_circle(r, CircleGrid::unit(grid_count), exec).value;
            break;
        case MinCircle::RadiusK:
            ctx.m = min_modulus_on_circle(r, CircleGrid(k, grid_count), exec).value;
            break;
    }
    return ctx;
}

double rhs_value(TheoremId id, const BoundContext& c, double bprime, double rmod) {
    const double n = c.n;
    const double t = c.t;
    const double k = c.k;
    switch (id) {
        case TheoremId::LiUpper:
            return 0.5 * bprime * c.norm;
        case TheoremId::LiLower:
            return (0.5 * bprime - 0.5 * (n - t)) * rmod;
        case TheoremId::AzizShahUpper97:
            return 0.5 * bprime * (c.norm - c.m);
        case TheoremId::AzizShahLower97:
            return 0.5 * bprime * (rmod + c.m);
        case TheoremId::AzizZarger99: {
            const double ratio = rmod / c.norm;
            return 0.5 * (bprime - n * (k - 1.0) / (k + 1.0) * ratio * ratio) * c.norm;
        }
        case TheoremId::AzizShah04:
            return 0.5 * (bprime + (2.0 * t - n * (1.0 + k)) / (1.0 + k)) * rmod;
        case TheoremId::AzizShah04Cor:
            return 0.5 * (bprime + n * (1.0 - k) / (1.0 + k)) * rmod;
        case TheoremId::MainUpper: {
            const double span = c.norm - c.m;
            if (!(span > kDegenerateGap))
                throw Degenerate("main-upper: ||r|| - m = " + std::to_string(span) + " is not positive");
            const double ratio = (rmod - c.m) / span;
            return 0.5 * (bprime - (n * (1.0 + k) - 2.0 * t) / (1.0 + k) * ratio * ratio) * span;
        }
        case TheoremId::MainUpperCor: {
            const double ratio = rmod / c.norm;
            return 0.5 * (bprime - (n * (1.0 + k) - 2.0 * t) / (1.0 + k) * ratio * ratio) * c.norm;
        }
        case TheoremId::MainLower:
            return 0.5 * (bprime + (2.0 * t - n * (1.0 + k)) / (1.0 + k)) * (rmod + c.m);
        case TheoremId::MainLowerCor:
            return 0.5 * (bprime + n * (1.0 - k) / (1.0 + k)) * (rmod + c.m);
    }
    throw InvalidArgument("unknown theorem id");
}

double bound_rhs(TheoremId id, const BoundContext& ctx, const RationalFunction& r, Complex z) {
    require_unit_circle(z);
    if (ctx.t != r.t() || ctx.n != r.n())
        throw InvalidArgument("bound context does not match the rational function");
    if (!(ctx.norm > 0.0) || ctx.m < 0.0 || ctx.t < 0 || ctx.t > ctx.n || !(ctx.k > 0.0))
        throw InvalidArgument("bound context is inconsistent");
    check_hypothesis(id, r, ctx.k);
    const BlaschkeProduct b(r.poles());
    return rhs_value(id, ctx, b.deriv_modulus_on_unit_circle(z), std::abs(r(z)));
}

std::vector<double> margins_on_grid(TheoremId id, const BoundContext& ctx,
                                    const RationalFunction& r, const CircleGrid& grid, Exec exec) {
    const BlaschkeProduct b(r.poles());
    const bool upper = is_upper(id);
    std::vector<double> out(grid.count);
    for_each_index(grid.count, exec, [&](std::size_t j) {
        const Complex z = grid.point(j);
        if (r.poles().distance_to_nearest(z) < kPoleCutoff) {
            out[j] = std::numeric_limits<double>::quiet_NaN();
            return;
        }
        const double deriv = std::abs(r.derivative(z));
        const double rhs = rhs_value(id, ctx, b.deriv_modulus_on_unit_circle(z), std::abs(r(z)));
        out[j] = upper ? rhs - deriv : deriv - rhs;
    });
    return out;
}

BoundVerdict certify(TheoremId id, const RationalFunction& r, double k, std::size_t grid_count,
                     Exec exec) {
    check_hypothesis(id, r, k);
    const CircleGrid grid = CircleGrid::unit(grid_count);

    BoundVerdict v;
    v.theorem = id;
    v.grid_count = grid_count;
    v.context = make_context(id, r, k, grid_count, exec);

    std::vector<double> margins;
    try {
        margins = margins_on_grid(id, v.context, r, grid, exec);
    } catch (const Degenerate& e) {
        v.degenerate = e.what();
        v.min_margin = std::numeric_limits<double>::quiet_NaN();
        return v;
    }

    const double tol = kMarginTolerance * v.scale();
    v.min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < margins.size(); ++j) {
        const double m = margins[j];
        if (std::isnan(m)) {
            ++v.skipped_points;
            continue;
        }
        if (m < v.min_margin) {
            v.min_margin = m;
            v.worst_theta = grid.theta(j);
        }
        if (m < -tol) ++v.violations;
    }
    return v;
}

Extremal make_extremal(TheoremId id, const ExtremalParams& p) {
    const auto& h = hypothesis(id);
    if (!(p.a > 1.0) || !std::isfinite(p.a)) throw ParameterOutOfRange("pole a must exceed 1");
    if (p.n < 1) throw ParameterOutOfRange("n must be at least 1");

    const bool bplus_family = id == TheoremId::LiUpper || id == TheoremId::LiLower ||
                              id == TheoremId::AzizShahUpper97 || id == TheoremId::AzizShahLower97;
    if (bplus_family) {
        // r = B + c, c = h e^{i alpha}; zeros solve B(z) = -c.
        const bool li = id == TheoremId::LiUpper || id == TheoremId::LiLower;
        const double mag = li ? 1.0 : p.h;
        if (!(mag > 0.0)) throw ParameterOutOfRange("h must be positive");
        if (id == TheoremId::AzizShahUpper97 && mag < 1.0) throw ParameterOutOfRange("upper family needs h >= 1");
        if (id == TheoremId::AzizShahLower97 && mag > 1.0) throw ParameterOutOfRange("lower family needs h <= 1");

        const Complex c = std::polar(mag, p.alpha);
        const double a = p.a;
        const Complex leading = std::pow(Complex{-a, 0.0}, p.n) + c;
        if (std::abs(leading) < 1e-12) throw ParameterOutOfRange("numerator degree collapses");

        std::vector<Complex> zeros;
        const double root_mag = std::pow(mag, 1.0 / p.n);
        const double base = std::arg(-c);
        for (int j = 0; j < p.n; ++j) {
            const Complex u = std::polar(root_mag, (base + 2.0 * std::numbers::pi * j) / p.n);
            if (std::abs(u + a) < 1e-12) throw ParameterOutOfRange("zero escapes to infinity");
            zeros.push_back((1.0 + a * u) / (u + a));
        }
        // B(z) = e^{i alpha} makes |r| = 1 + h.
        const Complex u_eq = std::polar(1.0, p.alpha / p.n);
        const Complex z_eq = (1.0 + a * u_eq) / (u_eq + a);
        return {RationalFunction::from_roots(std::move(zeros), leading,
                                             std::vector<Complex>(static_cast<std::size_t>(p.n), Complex{a, 0.0})),
                1.0, z_eq / std::abs(z_eq)};
    }

    if (!radius_ok(h.radius, p.k)) throw ParameterOutOfRange("k outside the theorem's range");
    if (p.t < 1 || p.t > p.n) throw ParameterOutOfRange("t must lie in 1..n");
    const bool needs_full = h.exactly_n_zeros || id == TheoremId::AzizZarger99;
    if (needs_full && p.t != p.n) throw ParameterOutOfRange("this family needs t = n");

    auto r = RationalFunction::from_roots(std::vector<Complex>(static_cast<std::size_t>(p.t), Complex{-p.k, 0.0}),
                                          Complex{1.0, 0.0},
                                          std::vector<Complex>(static_cast<std::size_t>(p.n), Complex{p.a, 0.0}));
    return {std::move(r), p.k, Complex{1.0, 0.0}};
}

double sharpness_gap(TheoremId id, const RationalFunction& r, double k, Complex z,
                     std::size_t grid_count) {
    const BoundContext ctx = make_context(id, r, k, grid_count);
    return std::abs(bound_rhs(id, ctx, r, z) - std::abs(r.derivative(z)));
}

double log_derivative_bound_outside(double bprime, int t, int n, double k) {
    return bprime / 2.0 + (2.0 * t - n * (1.0 + k)) / (2.0 * (1.0 + k));
}

double log_derivative_bound_inside(double bprime, int t, int n, double k) {
    return bprime / 2.0 - (n * (1.0 + k) - 2.0 * t) / (2.0 * (1.0 + k));
}

double unit_log_derivative_bound_outside(double bprime) { return bprime / 2.0; }

double unit_log_derivative_bound_inside(double bprime, int t, int n) {
    return bprime / 2.0 - 0.5 * (n - t);
}

double main_upper_intermediate_slack(const BoundContext& c, const RationalFunction& r, Complex z) {
    require_unit_circle(z);
    const BlaschkeProduct b(r.poles());
    const double bp = b.deriv_modulus_on_unit_circle(z);
    const double deriv = std::abs(r.derivative(z));
    const double rmod = std::abs(r(z));
    const double coeff = (c.n * (1.0 + c.k) - 2.0 * c.t) / (1.0 + c.k);
    const double lhs = std::sqrt(deriv * deriv + coeff * (rmod - c.m) * (rmod - c.m) * bp);
    return bp * c.norm - deriv - c.m * bp - lhs;
}

}  // namespace ratbound
