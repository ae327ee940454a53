#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "ratbound/circlescan.hpp"
#include "ratbound/parallel.hpp"
#include "ratbound/ratfun.hpp"

namespace ratbound {

/// Every derivative bound the library can evaluate.
///
/// Upper bounds (zeros in |z| >= k):
///   LiUpper          |r'| <= 1/2 |B'| ||r||
///   AzizShahUpper97  |r'| <= 1/2 |B'| (||r|| - m),              m on |z| = 1
///   AzizZarger99     |r'| <= 1/2 [|B'| - n(k-1)/(k+1) |r|^2/||r||^2] ||r||
///   MainUpper        |r'| <= 1/2 [|B'| - (n(1+k)-2t)(|r|-m)^2/((1+k)(||r||-m)^2)] (||r|| - m),
///                    m on |z| = k
///   MainUpperCor     |r'| <= 1/2 [|B'| - (n(1+k)-2t)/(1+k) |r|^2/||r||^2] ||r||,
///                    some zero on |z| = k
/// Lower bounds (zeros in |z| <= k):
///   LiLower          |r'| >= [1/2 |B'| - 1/2 (n-t)] |r|
///   AzizShahLower97  |r'| >= 1/2 |B'| (|r| + m),                 m on |z| = 1, t = n
///   AzizShah04       |r'| >= 1/2 [|B'| + (2t - n(1+k))/(1+k)] |r|
///   AzizShah04Cor    |r'| >= 1/2 [|B'| + n(1-k)/(1+k)] |r|,       t = n
///   MainLower        |r'| >= 1/2 [|B'| + (2t - n(1+k))/(1+k)] (|r| + m), m on |z| = k
///   MainLowerCor     |r'| >= 1/2 [|B'| + n(1-k)/(1+k)] (|r| + m), m on |z| = k, t = n
enum class TheoremId {
    LiUpper,
    LiLower,
    AzizShahUpper97,
    AzizShahLower97,
    AzizZarger99,
    AzizShah04,
    AzizShah04Cor,
    MainUpper,
    MainUpperCor,
    MainLower,
    MainLowerCor,
};

inline constexpr std::array<TheoremId, 11> kAllTheorems = {
    TheoremId::LiUpper,       TheoremId::LiLower,      TheoremId::AzizShahUpper97,
    TheoremId::AzizShahLower97, TheoremId::AzizZarger99, TheoremId::AzizShah04,
    TheoremId::AzizShah04Cor, TheoremId::MainUpper,    TheoremId::MainUpperCor,
    TheoremId::MainLower,     TheoremId::MainLowerCor,
};

enum class RadiusRule { EqualsOne, AtLeastOne, AtMostOne };
enum class MinCircle { None, Unit, RadiusK };

/// What a theorem demands of r before its inequality applies.
struct Hypothesis {
    ZeroMode region;
    RadiusRule radius;
    bool exactly_n_zeros;
    bool zero_on_circle;  ///< at least one zero on |z| = k
    MinCircle m_circle;   ///< where m is measured, if the bound uses it
    bool upper;           ///< bounds |r'| from above
};

const Hypothesis& hypothesis(TheoremId id);
bool is_upper(TheoremId id);

/// Kebab-case CLI vocabulary, e.g. "main-upper".
std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> parse_theorem(std::string_view name);

/// Whether k is an admissible radius for the theorem.
bool radius_allowed(TheoremId id, double k);

/// Throws HypothesisViolated when r or k does not satisfy the descriptor.
void check_hypothesis(TheoremId id, const RationalFunction& r, double k);

struct BoundContext {
    double norm = 1.0;  ///< ||r|| on the unit circle
    double m = 0.0;     ///< min |r| on the circle named by m_circle
    int t = 0;
    int n = 0;
    double k = 1.0;
    MinCircle m_circle = MinCircle::None;
};

/// Measures ||r|| on the unit circle and m on the circle the theorem uses.
BoundContext make_context(TheoremId id, const RationalFunction& r, double k,
                          std::size_t grid_count = kCertifyGrid, Exec exec = Exec::Parallel);

/// The right-hand side of the theorem's inequality from the scalar inputs
/// |B'(z)| and |r(z)|. Throws Degenerate for MainUpper when ||r|| - m <= 1e-12.
double rhs_value(TheoremId id, const BoundContext& ctx, double bprime, double rmod);

/// Checked evaluation at z on the unit circle: ctx must match r's t and n and
/// r must satisfy the hypothesis.
double bound_rhs(TheoremId id, const BoundContext& ctx, const RationalFunction& r, Complex z);

inline constexpr double kMarginTolerance = 1e-9;

struct BoundVerdict {
    TheoremId theorem = TheoremId::MainUpper;
    std::size_t grid_count = 0;
    double min_margin = 0.0;
    double worst_theta = 0.0;
    int violations = 0;
    int skipped_points = 0;
    std::optional<std::string> degenerate;
    BoundContext context;

    double scale() const { return context.norm > 1.0 ? context.norm : 1.0; }
    bool passed() const { return !degenerate && violations == 0; }
};

/// Signed margins at every grid point on the unit circle: RHS - |r'| for upper
/// bounds, |r'| - RHS for lower bounds. Points within the pole cutoff are NaN.
std::vector<double> margins_on_grid(TheoremId id, const BoundContext& ctx,
                                    const RationalFunction& r, const CircleGrid& grid,
                                    Exec exec = Exec::Parallel);

/// Sweeps the unit circle and reports the smallest margin. Hypothesis
/// failures throw; a degenerate context is reported in the verdict.
BoundVerdict certify(TheoremId id, const RationalFunction& r, double k,
                     std::size_t grid_count = kCertifyGrid, Exec exec = Exec::Parallel);

struct ExtremalParams {
    double a = 2.0;  ///< real pole > 1, repeated n times
    double k = 1.0;
    int t = 1;
    int n = 1;
    double h = 1.0;      ///< |c| in r = B + c (Li and 1997 families)
    double alpha = 0.0;  ///< arg c
};

struct Extremal {
    RationalFunction r;
    double k;
    Complex equality_point;
};

/// Equality-case instance for a theorem: (z+k)^t / (z-a)^n for the
/// k-dependent bounds, B + h e^{i alpha} for the Li and 1997 bounds.
/// Throws ParameterOutOfRange.
Extremal make_extremal(TheoremId id, const ExtremalParams& params);

/// | RHS(z) - |r'(z)| | at z on the unit circle.
double sharpness_gap(TheoremId id, const RationalFunction& r, double k, Complex z,
                     std::size_t grid_count = kAcceptanceGrid);

/// Bounds on Re(z r'(z)/r(z)) at z on the unit circle given the zero region.
/// Zeros in |z| >= k >= 1: Re <= |B'|/2 + (2t - n(1+k)) / (2(1+k)).
double log_derivative_bound_outside(double bprime, int t, int n, double k);
/// Zeros in |z| <= k <= 1: Re >= |B'|/2 - (n(1+k) - 2t) / (2(1+k)).
double log_derivative_bound_inside(double bprime, int t, int n, double k);
/// The k = 1 forms without t: Re <= |B'|/2, and Re >= |B'|/2 - (n - t)/2.
double unit_log_derivative_bound_outside(double bprime);
double unit_log_derivative_bound_inside(double bprime, int t, int n);

/// Slack of the intermediate inequality in the MainUpper argument,
///   |B'| ||r|| - |r'| - m |B'| - sqrt(|r'|^2 + (n(1+k)-2t)/(1+k) (|r|-m)^2 |B'|),
/// at z on the unit circle.
double main_upper_intermediate_slack(const BoundContext& ctx, const RationalFunction& r, Complex z);

}  // namespace ratbound
