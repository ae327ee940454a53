#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ratbound/errors.hpp"

namespace ratbound {

using Complex = std::complex<double>;

/// Distance below which a point counts as sitting on a pole.
inline constexpr double kPoleCutoff = 1e-12;

/// Throws InvalidArgument unless both components are finite.
Complex checked(Complex z);

/// Complex polynomial kept in coefficient form (index = power).
///
/// A polynomial built from its roots also keeps the roots and leading
/// coefficient; that cache is authoritative and is used for evaluation,
/// differentiation and root queries, so zero locations never pass through
/// a root finder.
class Polynomial {
public:
    Polynomial() = default;

    /// Trailing zero coefficients are trimmed.
    explicit Polynomial(std::vector<Complex> coeffs);

    static Polynomial from_roots(std::vector<Complex> roots, Complex leading);
    static Polynomial constant(Complex c);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    std::span<const Complex> coeffs() const { return coeffs_; }
    Complex leading() const;
    bool has_roots() const { return roots_.has_value(); }

    /// Cached roots, or the result of poly_roots() on the coefficients.
    std::vector<Complex> roots() const;

    /// Product form when roots are cached, Horner otherwise.
    Complex operator()(Complex z) const;
    Complex derivative(Complex z) const;

    Complex horner(Complex z) const;
    Polynomial derivative() const;

    double max_abs_coeff() const;

private:
    std::vector<Complex> coeffs_;
    std::optional<std::vector<Complex>> roots_;
};

Complex poly_eval(const Polynomial& p, Complex z);

struct RootOptions {
    int max_sweeps = 200;
};

/// All deg(p) roots with multiplicity by Aberth-Ehrlich simultaneous
/// iteration. Throws NonConvergence when the residual test fails after the
/// sweep budget, InvalidArgument for the zero polynomial.
std::vector<Complex> poly_roots(const Polynomial& p, RootOptions opts = {});

/// Coefficients of leading * prod(z - root).
std::vector<Complex> expand_roots(std::span<const Complex> roots, Complex leading);

/// Prescribed poles a_1..a_n, repeated for multiplicity. Every pole satisfies
/// |a| > 1.
class PoleSet {
public:
    PoleSet() = default;
    explicit PoleSet(std::vector<Complex> poles);

    static PoleSet repeated(Complex a, int n);

    std::span<const Complex> poles() const { return poles_; }
    int n() const { return static_cast<int>(poles_.size()); }

    /// w(z) = prod(z - a_j).
    Complex w(Complex z) const;
    /// w'(z) in product form.
    Complex w_derivative(Complex z) const;
    /// Sum of z / (z - a_j), i.e. z w'(z) / w(z).
    Complex log_derivative_times_z(Complex z) const;

    /// Throws NearPole if z is within kPoleCutoff of a pole.
    void check_clear(Complex z) const;
    double distance_to_nearest(Complex z) const;

private:
    std::vector<Complex> poles_;
};

/// r = p / w with deg p <= n. Shared roots and poles are rejected.
class RationalFunction {
public:
    RationalFunction(Polynomial numer, PoleSet poles);

    /// Root-form construction; the usual entry point for generated instances.
    static RationalFunction from_roots(std::vector<Complex> zeros, Complex leading,
                                       std::vector<Complex> poles);

    const Polynomial& numer() const { return numer_; }
    const PoleSet& poles() const { return poles_; }
    int n() const { return poles_.n(); }
    /// Number of finite zeros counted with multiplicity.
    int t() const { return numer_.degree(); }
    std::span<const Complex> zeros() const { return zeros_; }

    Complex operator()(Complex z) const;
    /// Quotient rule (p'w - p w') / w^2.
    Complex derivative(Complex z) const;
    /// r(z) [sum 1/(z-b_j) - sum 1/(z-a_j)]; only meaningful away from zeros.
    Complex derivative_log_form(Complex z) const;

private:
    Polynomial numer_;
    PoleSet poles_;
    std::vector<Complex> zeros_;
};

Complex rat_eval(const RationalFunction& r, Complex z);
Complex rat_derivative_eval(const RationalFunction& r, Complex z);

enum class ZeroMode { AllOutsideOrOn, AllInsideOrOn, Unconstrained };

struct ZeroLocation {
    ZeroMode mode = ZeroMode::Unconstrained;
    double k = 1.0;

    static ZeroLocation outside(double k) { return {ZeroMode::AllOutsideOrOn, k}; }
    static ZeroLocation inside(double k) { return {ZeroMode::AllInsideOrOn, k}; }
};

/// Tolerance band on |root| - k used by every zero-region predicate.
inline constexpr double kRegionTolerance = 1e-9;

bool classify_zeros(const RationalFunction& r, const ZeroLocation& loc);

/// min over zeros of ||b| - k|, +inf when r has no finite zeros.
double min_zero_distance_to_circle(const RationalFunction& r, double k);

}  // namespace ratbound
