#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ratbound/bounds.hpp"
#include "ratbound/parallel.hpp"
#include "ratbound/ratfun.hpp"

namespace ratbound {

/// Random admissible instances for one (n, t, zero region) shape.
struct GeneratorSpec {
    int n = 2;
    int t = 2;
    double pole_rmin = 1.1;
    double pole_rmax = 5.0;
    ZeroLocation zero_region = ZeroLocation::outside(1.0);
    /// Zeros outside |z| = k are drawn in the annulus k <= |z| <= k + zero_span;
    /// unconstrained zeros in |z| <= zero_span.
    double zero_span = 3.0;
    /// Probability that a zero is placed exactly on |z| = k.
    double p_boundary = 0.0;
    /// Put the first zero on |z| = k regardless of p_boundary.
    bool force_boundary_zero = false;
    std::uint64_t seed = 0;
    int count = 100;
};

/// Smallest pole modulus accepted at all; anything below the 1.1 default
/// logs a conditioning warning.
inline constexpr double kPoleFloor = 1.01;
inline constexpr double kPoleDefaultMin = 1.1;

/// Throws SpecInvalid.
void validate(const GeneratorSpec& spec);

/// Instance i depends only on (seed, i). Poles are area-uniform in the pole
/// annulus, zeros follow the region, the leading coefficient is unimodular.
std::vector<RationalFunction> generate(const GeneratorSpec& spec);
RationalFunction generate_one(const GeneratorSpec& spec, std::uint64_t index);

struct CampaignReport {
    GeneratorSpec spec;
    TheoremId theorem = TheoremId::MainUpper;
    std::size_t grid_count = 0;
    int instances = 0;
    double min_margin = 0.0;  ///< over non-degenerate instances
    int violations = 0;       ///< grid points, summed over instances
    int failing_instances = 0;
    int degenerate = 0;
    int skipped = 0;
    int worst_index = -1;
    std::string worst_instance;  ///< instance file text of the smallest-margin instance

    bool passed() const { return violations == 0; }
};

/// Throws HypothesisMismatch when the spec cannot produce instances the
/// theorem applies to.
void check_campaign_spec(const GeneratorSpec& spec, TheoremId id);

/// Certifies every generated instance; instances run in parallel under
/// Exec::Parallel, each with a serial inner sweep.
CampaignReport run_campaign(const GeneratorSpec& spec, TheoremId id,
                            std::size_t grid_count = kCertifyGrid, Exec exec = Exec::Parallel);

nlohmann::json report_to_json(const CampaignReport& report);
/// Deterministic rendering; identical specs give identical text.
std::string dump_report(const CampaignReport& report);

/// "theta,deriv_modulus,bound_rhs,margin" rows, one per grid point on the
/// unit circle, numbers in %.17g. Checks the hypothesis first.
std::string curves_csv(TheoremId id, const RationalFunction& r, double k, std::size_t grid_count,
                       Exec exec = Exec::Parallel);

}  // namespace ratbound
