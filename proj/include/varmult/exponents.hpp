#pragma once

#include <boost/rational.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace varmult {

// Extended rational: a finite rational or the symbolic value +infinity.
// Exponents p, q, r, s live in [1, inf]; theta in (0, 1). All region tests
// are evaluated in exact arithmetic, never in floating point.
class XRat {
public:
    using Q = boost::rational<long long>;

    XRat() : fin_(0) {}
    XRat(long long n) : fin_(n) {}
    XRat(long long num, long long den) : fin_(num, den) {}
    XRat(Q q) : fin_(std::move(q)) {}

    static XRat infinity() {
        XRat x;
        x.inf_ = true;
        return x;
    }

    bool is_inf() const { return inf_; }
    const Q& value() const {
        if (inf_) throw std::logic_error("XRat: value() of infinity");
        return fin_;
    }

    // 1/x with the conventions 1/inf = 0 and 1/0 = inf.
    XRat recip() const {
        if (inf_) return XRat(0);
        if (fin_ == Q(0)) return infinity();
        return XRat(Q(fin_.denominator(), fin_.numerator()));
    }

    friend XRat operator+(const XRat& a, const XRat& b) {
        if (a.inf_ || b.inf_) return infinity();
        return XRat(a.fin_ + b.fin_);
    }
    friend XRat operator-(const XRat& a, const XRat& b) {
        if (a.inf_ && b.inf_) throw std::logic_error("XRat: inf - inf");
        if (a.inf_) return infinity();
        if (b.inf_) throw std::logic_error("XRat: x - inf");
        return XRat(a.fin_ - b.fin_);
    }
    friend XRat operator*(const XRat& a, const XRat& b) {
        if (a.inf_ || b.inf_) {
            if ((a.inf_ && b.is_zero()) || (b.inf_ && a.is_zero()))
                throw std::logic_error("XRat: 0 * inf");
            return infinity();
        }
        return XRat(a.fin_ * b.fin_);
    }
    friend XRat operator/(const XRat& a, const XRat& b) { return a * b.recip(); }

    bool is_zero() const { return !inf_ && fin_ == Q(0); }

    friend bool operator==(const XRat& a, const XRat& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.fin_ == b.fin_;
    }
    friend bool operator!=(const XRat& a, const XRat& b) { return !(a == b); }
    friend bool operator<(const XRat& a, const XRat& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.fin_ < b.fin_;
    }
    friend bool operator<=(const XRat& a, const XRat& b) { return a < b || a == b; }
    friend bool operator>(const XRat& a, const XRat& b) { return b < a; }
    friend bool operator>=(const XRat& a, const XRat& b) { return b <= a; }

    double to_double() const {
        if (inf_) return std::numeric_limits<double>::infinity();
        return boost::rational_cast<double>(fin_);
    }

    std::string str() const;

    // Parses "inf", "3/2", "7", or a terminating decimal like "1.25".
    static XRat parse(const std::string& text);

private:
    Q fin_;
    bool inf_ = false;
};

// Conjugate exponent p' with 1/p + 1/p' = 1; p in [1, inf].
XRat conjugate(const XRat& p);

// Interpolation exponent [p,q]_theta defined by 1/[p,q]_theta = (1-theta)/p + theta/q.
XRat interp_exponent(const XRat& p, const XRat& q, const XRat& theta);

enum class TheoremId {
    hscase_i,
    hscase_ii,
    mult_s_var_i,
    mult_s_var_ii,
    a1_endpoint,
    interp_i,
    interp_ii,
    intermediate_i,
    intermediate_ii,
    intro_lr,
    lr_small_s,
    lr_large_s,
    schatten,
};

const char* theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(const std::string& name);

// Sub-case selector for lr_small_s: "i_a", "i_b", "ii_a", "ii_b", "iii_a", "iii_b".
struct ExponentParams {
    std::optional<XRat> p, q, r, s, theta;
    TheoremId theorem = TheoremId::hscase_ii;
    std::string subcase;
};

// A single inequality of a region, reported by name in verdicts.
struct ConstraintResult {
    std::string name;
    bool holds_strict = false;     // satisfied with strict inequality
    bool holds_closed = false;     // satisfied when the inequality is relaxed to allow equality
    bool strict_required = false;  // the published condition is a strict inequality
};

enum class RegionPosition { interior, boundary, outside };

struct RegionVerdict {
    bool admissible = false;       // the published inequalities hold as stated
    RegionPosition position = RegionPosition::outside;  // relative to the region's closure
    std::vector<ConstraintResult> constraints;
    std::vector<std::string> binding;  // constraints that fail or hold with equality
};

// Evaluates the published admissibility inequalities for the selected theorem.
// Throws std::invalid_argument naming any missing required parameter.
RegionVerdict region_check(const ExponentParams& params);

struct RationalPoint {
    XRat x;  // 1/p
    XRat y;  // 1/s
};

struct RegionPolygons {
    std::vector<RationalPoint> weighted;
    std::vector<RationalPoint> unweighted;
};

enum class RegionFigure { hscase, interp, intermediate };

std::optional<RegionFigure> figure_from_name(const std::string& name);

// Exact vertices of the shaded exponent regions in the (1/p, 1/s) unit square.
// hscase takes no parameters; interp takes (theta, q); intermediate takes theta
// and equals interp with q = 1.
RegionPolygons region_vertices(RegionFigure figure, const XRat& theta = XRat(1, 2),
                               const XRat& q = XRat(1));

// Exact location of a point relative to a convex polygon.
RegionPosition point_in_polygon(const std::vector<RationalPoint>& polygon,
                                const RationalPoint& point);

struct SymmetryReport {
    struct Identity {
        std::string name;
        bool holds = false;
    };
    std::vector<Identity> identities;
    bool all_hold = false;
};

// Verifies the tick-mark identities behind the region figures:
//   theta/2 = 1/[inf,2]_theta = 1/[q,1]_theta - 1/[q,2]_theta = 1/[q,2]_theta - 1/[q,inf]_theta
//   (1-theta)/q = 1/[q,inf]_theta = 1/[q,2]_theta - 1/[inf,2]_theta
SymmetryReport symmetry_check(const XRat& theta, const XRat& q);

} // namespace varmult
