#include "varmult/exponents.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace varmult {

std::string XRat::str() const {
    if (inf_) return "inf";
    std::ostringstream os;
    os << fin_.numerator();
    if (fin_.denominator() != 1) os << "/" << fin_.denominator();
    return os.str();
}

XRat XRat::parse(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "INF" || text == "oo") return infinity();
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        long long num = std::stoll(text.substr(0, slash));
        long long den = std::stoll(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("XRat::parse: zero denominator in '" + text + "'");
        return XRat(num, den);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t frac_len = text.size() - dot - 1;
        if (frac_len > 15) throw std::invalid_argument("XRat::parse: too many decimal places in '" + text + "'");
        long long num = std::stoll(digits);
        long long den = 1;
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        return XRat(num, den);
    }
    return XRat(std::stoll(text));
}

XRat conjugate(const XRat& p) {
    if (p.is_inf()) return XRat(1);
    if (p.value() == XRat::Q(1)) return XRat::infinity();
    if (p.value() < XRat::Q(1)) throw std::invalid_argument("conjugate: exponent below 1");
    // 1/p' = 1 - 1/p
    return (XRat(1) - p.recip()).recip();
}

XRat interp_exponent(const XRat& p, const XRat& q, const XRat& theta) {
    if (theta < XRat(0) || theta > XRat(1)) throw std::invalid_argument("interp_exponent: theta outside [0,1]");
    XRat inv = (XRat(1) - theta) * p.recip() + theta * q.recip();
    return inv.recip();
}

const char* theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::hscase_i: return "hscase_i";
        case TheoremId::hscase_ii: return "hscase_ii";
        case TheoremId::mult_s_var_i: return "mult_s_var_i";
        case TheoremId::mult_s_var_ii: return "mult_s_var_ii";
        case TheoremId::a1_endpoint: return "a1_endpoint";
        case TheoremId::interp_i: return "interp_i";
        case TheoremId::interp_ii: return "interp_ii";
        case TheoremId::intermediate_i: return "intermediate_i";
        case TheoremId::intermediate_ii: return "intermediate_ii";
        case TheoremId::intro_lr: return "intro_lr";
        case TheoremId::lr_small_s: return "lr_small_s";
        case TheoremId::lr_large_s: return "lr_large_s";
        case TheoremId::schatten: return "schatten";
    }
    return "?";
}

std::optional<TheoremId> theorem_from_name(const std::string& name) {
    static const std::pair<const char*, TheoremId> table[] = {
        {"hscase_i", TheoremId::hscase_i},
        {"hscase_ii", TheoremId::hscase_ii},
        {"mult_s_var_i", TheoremId::mult_s_var_i},
        {"mult_s_var_ii", TheoremId::mult_s_var_ii},
        {"a1_endpoint", TheoremId::a1_endpoint},
        {"interp_i", TheoremId::interp_i},
        {"interp_ii", TheoremId::interp_ii},
        {"intermediate_i", TheoremId::intermediate_i},
        {"intermediate_ii", TheoremId::intermediate_ii},
        {"intro_lr", TheoremId::intro_lr},
        {"lr_small_s", TheoremId::lr_small_s},
        {"lr_large_s", TheoremId::lr_large_s},
        {"schatten", TheoremId::schatten},
    };
    for (const auto& [n, id] : table)
        if (name == n) return id;
    return std::nullopt;
}

std::optional<RegionFigure> figure_from_name(const std::string& name) {
    if (name == "hscase") return RegionFigure::hscase;
    if (name == "interp") return RegionFigure::interp;
    if (name == "intermediate") return RegionFigure::intermediate;
    return std::nullopt;
}

namespace {

enum class Rel { lt, le, eq };

struct Checker {
    std::vector<ConstraintResult> results;

    // Records "lhs REL rhs" and returns *this for chaining.
    void add(const std::string& name, const XRat& lhs, Rel rel, const XRat& rhs) {
        ConstraintResult c;
        c.name = name;
        switch (rel) {
            case Rel::lt:
                c.strict_required = true;
                c.holds_strict = lhs < rhs;
                c.holds_closed = lhs <= rhs;
                break;
            case Rel::le:
                c.strict_required = false;
                c.holds_strict = lhs < rhs;
                c.holds_closed = lhs <= rhs;
                break;
            case Rel::eq:
                c.strict_required = false;
                c.holds_strict = false;
                c.holds_closed = lhs == rhs;
                break;
        }
        results.push_back(std::move(c));
    }

    RegionVerdict verdict() const {
        RegionVerdict v;
        v.constraints = results;
        bool all_strict = true, all_closed = true, published = true;
        for (const auto& c : results) {
            all_strict = all_strict && c.holds_strict;
            all_closed = all_closed && c.holds_closed;
            published = published && (c.strict_required ? c.holds_strict : c.holds_closed);
            if (!c.holds_closed || !c.holds_strict) v.binding.push_back(c.name);
        }
        v.admissible = published;
        v.position = all_strict ? RegionPosition::interior
                                : (all_closed ? RegionPosition::boundary : RegionPosition::outside);
        return v;
    }
};

const XRat& require(const std::optional<XRat>& v, const char* name) {
    if (!v) throw std::invalid_argument(std::string("region_check: missing parameter '") + name + "'");
    return *v;
}

void check_range_1_inf_open(Checker& c, const XRat& x, const std::string& sym) {
    // x in (1, inf): both ends strict, stated via reciprocals so inf is exact.
    c.add(sym + ">1", x.recip(), Rel::lt, XRat(1));
    c.add(sym + "<inf", XRat(0), Rel::lt, x.recip());
}

XRat xmin(const XRat& a, const XRat& b) { return a < b ? a : b; }

void intro_lr_constraints(Checker& c, const XRat& p, const XRat& r, const XRat& s) {
    check_range_1_inf_open(c, p, "p");
    check_range_1_inf_open(c, r, "r");
    c.add("s>=1", s.recip(), Rel::le, XRat(1));
    XRat ip = p.recip(), ir = r.recip(), is = s.recip(), half(1, 2);
    if (XRat(2) <= r) {
        c.add("1/s>1/2-1/p", half - ip, Rel::lt, is);
        c.add("1/s>1/2-1/r", half - ir, Rel::lt, is);
        c.add("1/s>1/p-1/r", ip - ir, Rel::lt, is);
    } else {
        c.add("1/s>1/p-1/2", ip - half, Rel::lt, is);
        c.add("1/s>1/r-1/2", ir - half, Rel::lt, is);
        c.add("1/s>1/r-1/p", ir - ip, Rel::lt, is);
    }
}

void require_theta(const XRat& theta) {
    if (!(XRat(0) < theta && theta < XRat(1)))
        throw std::invalid_argument("region_check: theta must lie in (0,1)");
}

void require_interp_q(const XRat& q) {
    if (!(XRat(1) <= q && q <= XRat(2)))
        throw std::invalid_argument("region_check: interpolation parameter q must lie in [1,2]");
}

void interp_i_constraints(Checker& c, const XRat& p, const XRat& s, const XRat& theta, const XRat& q) {
    require_theta(theta);
    require_interp_q(q);
    XRat a = interp_exponent(q, XRat(2), theta).recip();  // 1/[q,2]_theta
    XRat d = interp_exponent(q, XRat(1), theta).recip();  // 1/[q,1]_theta
    c.add("p<inf", XRat(0), Rel::lt, p.recip());
    c.add("p>1", p.recip(), Rel::lt, XRat(1));
    c.add("s>1", s.recip(), Rel::lt, XRat(1));
    c.add("s<p", p.recip(), Rel::lt, s.recip());
    c.add("s<[q,2]_theta", a, Rel::lt, s.recip());
    c.add("s>=[q,1]_theta", s.recip(), Rel::le, d);
}

void interp_ii_constraints(Checker& c, const XRat& p, const XRat& s, const XRat& theta, const XRat& q) {
    require_theta(theta);
    require_interp_q(q);
    XRat a = interp_exponent(q, XRat(2), theta).recip();  // 1/[q,2]_theta
    XRat d = interp_exponent(q, XRat(1), theta).recip();  // 1/[q,1]_theta
    XRat b = (XRat(1) - theta) / q;                       // 1/[q,inf]_theta
    XRat half_theta = theta / XRat(2);
    c.add("p<inf", XRat(0), Rel::lt, p.recip());
    c.add("p>1", p.recip(), Rel::lt, XRat(1));
    c.add("s>1", s.recip(), Rel::lt, XRat(1));
    c.add("1/s>1/[q,2]_theta-1/p", a - p.recip(), Rel::lt, s.recip());
    c.add("1/s>(1-theta)/q", b, Rel::lt, s.recip());
    c.add("1/s>1/p-theta/2", p.recip() - half_theta, Rel::lt, s.recip());
    c.add("p>[q,1]_theta", p.recip(), Rel::lt, d);
}

} // namespace

RegionVerdict region_check(const ExponentParams& params) {
    Checker c;
    switch (params.theorem) {
        case TheoremId::hscase_i: {
            const XRat& p = require(params.p, "p");
            const XRat& s = require(params.s, "s");
            check_range_1_inf_open(c, p, "p");
            check_range_1_inf_open(c, s, "s");
            c.add("s<=2", XRat(1, 2), Rel::le, s.recip());
            c.add("p>=s", p.recip(), Rel::le, s.recip());
            break;
        }
        case TheoremId::hscase_ii: {
            const XRat& p = require(params.p, "p");
            const XRat& s = require(params.s, "s");
            check_range_1_inf_open(c, p, "p");
            check_range_1_inf_open(c, s, "s");
            XRat half(1, 2);
            c.add("1/s>1/2-1/p", half - p.recip(), Rel::lt, s.recip());
            c.add("1/s>1/p-1/2", p.recip() - half, Rel::lt, s.recip());
            break;
        }
        case TheoremId::mult_s_var_i: {
            const XRat& p = require(params.p, "p");
            const XRat& q = require(params.q, "q");
            const XRat& s = require(params.s, "s");
            c.add("q>1", q.recip(), Rel::lt, XRat(1));
            c.add("q<=2", XRat(1, 2), Rel::le, q.recip());
            c.add("s>=1", s.recip(), Rel::le, XRat(1));
            c.add("s<q", q.recip(), Rel::lt, s.recip());
            c.add("p>q", p.recip(), Rel::lt, q.recip());
            c.add("p<inf", XRat(0), Rel::lt, p.recip());
            break;
        }
        case TheoremId::mult_s_var_ii: {
            const XRat& p = require(params.p, "p");
            const XRat& q = require(params.q, "q");
            const XRat& s = require(params.s, "s");
            c.add("q>1", q.recip(), Rel::lt, XRat(1));
            c.add("q<=2", XRat(1, 2), Rel::le, q.recip());
            c.add("s>=1", s.recip(), Rel::le, XRat(1));
            c.add("s<q", q.recip(), Rel::lt, s.recip());
            c.add("p>1", p.recip(), Rel::lt, XRat(1));
            c.add("p<q'", conjugate(q).recip(), Rel::lt, p.recip());
            break;
        }
        case TheoremId::a1_endpoint: {
            const XRat& q = require(params.q, "q");
            const XRat& r = require(params.r, "r");
            const XRat& s = require(params.s, "s");
            c.add("q>1", q.recip(), Rel::lt, XRat(1));
            c.add("q<2", XRat(1, 2), Rel::lt, q.recip());
            c.add("r>1", r.recip(), Rel::lt, XRat(1));
            c.add("r<2", XRat(1, 2), Rel::lt, r.recip());
            c.add("s=min{q,r}", s, Rel::eq, xmin(q, r));
            break;
        }
        case TheoremId::interp_i: {
            interp_i_constraints(c, require(params.p, "p"), require(params.s, "s"),
                                 require(params.theta, "theta"), require(params.q, "q"));
            break;
        }
        case TheoremId::interp_ii: {
            interp_ii_constraints(c, require(params.p, "p"), require(params.s, "s"),
                                  require(params.theta, "theta"), require(params.q, "q"));
            break;
        }
        case TheoremId::intermediate_i: {
            interp_i_constraints(c, require(params.p, "p"), require(params.s, "s"),
                                 require(params.theta, "theta"), XRat(1));
            break;
        }
        case TheoremId::intermediate_ii: {
            interp_ii_constraints(c, require(params.p, "p"), require(params.s, "s"),
                                  require(params.theta, "theta"), XRat(1));
            break;
        }
        case TheoremId::intro_lr:
        case TheoremId::lr_large_s: {
            intro_lr_constraints(c, require(params.p, "p"), require(params.r, "r"),
                                 require(params.s, "s"));
            break;
        }
        case TheoremId::lr_small_s: {
            const XRat& p = require(params.p, "p");
            const XRat& r = require(params.r, "r");
            const XRat& s = require(params.s, "s");
            c.add("s>1", s.recip(), Rel::lt, XRat(1));
            c.add("s<2", XRat(1, 2), Rel::lt, s.recip());
            const std::string& k = params.subcase;
            if (k == "i_a") {
                c.add("r=2", r, Rel::eq, XRat(2));
                c.add("p>=s", p.recip(), Rel::le, s.recip());
                c.add("p<inf", XRat(0), Rel::lt, p.recip());
            } else if (k == "i_b") {
                c.add("r=2", r, Rel::eq, XRat(2));
                c.add("p>1", p.recip(), Rel::lt, XRat(1));
                c.add("p<=s'", conjugate(s).recip(), Rel::le, p.recip());
            } else if (k == "ii_a") {
                c.add("r>2", r.recip(), Rel::lt, XRat(1, 2));
                c.add("r<inf", XRat(0), Rel::lt, r.recip());
                c.add("p>2", p.recip(), Rel::lt, XRat(1, 2));
                c.add("p<inf", XRat(0), Rel::lt, p.recip());
            } else if (k == "ii_b") {
                c.add("r>2", r.recip(), Rel::lt, XRat(1, 2));
                c.add("r<inf", XRat(0), Rel::lt, r.recip());
                c.add("p>1", p.recip(), Rel::lt, XRat(1));
                c.add("p<r", r.recip(), Rel::lt, p.recip());
                c.add("s<r'", conjugate(r).recip(), Rel::lt, s.recip());
            } else if (k == "iii_a") {
                c.add("r<2", XRat(1, 2), Rel::lt, r.recip());
                c.add("r>1", r.recip(), Rel::lt, XRat(1));
                c.add("p>1", p.recip(), Rel::lt, XRat(1));
                c.add("p<2", XRat(1, 2), Rel::lt, p.recip());
            } else if (k == "iii_b") {
                c.add("r<2", XRat(1, 2), Rel::lt, r.recip());
                c.add("r>1", r.recip(), Rel::lt, XRat(1));
                c.add("p>r", p.recip(), Rel::lt, r.recip());
                c.add("p<inf", XRat(0), Rel::lt, p.recip());
                c.add("s<r", r.recip(), Rel::lt, s.recip());
            } else {
                throw std::invalid_argument("region_check: lr_small_s requires subcase in "
                                            "{i_a,i_b,ii_a,ii_b,iii_a,iii_b}, got '" + k + "'");
            }
            break;
        }
        case TheoremId::schatten: {
            const XRat& p = require(params.p, "p");
            const XRat& r = require(params.r, "r");
            const XRat& s = require(params.s, "s");
            check_range_1_inf_open(c, p, "p");
            check_range_1_inf_open(c, r, "r");
            c.add("s>1", s.recip(), Rel::lt, XRat(1));
            XRat ip = p.recip(), ir = r.recip(), is = s.recip();
            XRat ipd = XRat(1) - ip;  // 1/p'
            XRat ird = XRat(1) - ir;  // 1/r'
            XRat gap = ir < ird ? ird - ir : ir - ird;  // |1/r - 1/r'|
            if (XRat(2) <= r) {
                c.add("1/s>1/p'-1/r", ipd - ir, Rel::lt, is);
                c.add("1/s>|1/r-1/r'|", gap, Rel::lt, is);
                c.add("1/s>1/p-1/r", ip - ir, Rel::lt, is);
            } else {
                c.add("1/s>1/r-1/p'", ir - ipd, Rel::lt, is);
                c.add("1/s>|1/r-1/r'|", gap, Rel::lt, is);
                c.add("1/s>1/r-1/p", ir - ip, Rel::lt, is);
            }
            break;
        }
    }
    return c.verdict();
}

RegionPolygons region_vertices(RegionFigure figure, const XRat& theta, const XRat& q_in) {
    RegionPolygons out;
    if (figure == RegionFigure::hscase) {
        XRat half(1, 2), one(1), zero(0);
        out.weighted = {{zero, one}, {zero, half}, {half, half}, {one, one}};
        out.unweighted = {{zero, one}, {zero, half}, {half, zero}, {one, half}, {one, one}};
        return out;
    }
    XRat q = (figure == RegionFigure::intermediate) ? XRat(1) : q_in;
    require_theta(theta);
    require_interp_q(q);
    XRat a = interp_exponent(q, XRat(2), theta).recip();  // 1/[q,2]_theta
    XRat b = (XRat(1) - theta) / q;                       // 1/[q,inf]_theta
    XRat d = interp_exponent(q, XRat(1), theta).recip();  // 1/[q,1]_theta
    XRat ht = theta / XRat(2), one(1), zero(0);
    out.unweighted = {{zero, one}, {zero, a}, {ht, b}, {a, b}, {d, a}, {d, one}};
    out.weighted = {{zero, a}, {a, a}, {d, d}, {zero, d}};
    return out;
}

RegionPosition point_in_polygon(const std::vector<RationalPoint>& polygon,
                                const RationalPoint& point) {
    std::vector<RationalPoint> v;
    for (const auto& p : polygon) {
        if (v.empty() || !(v.back().x == p.x && v.back().y == p.y)) v.push_back(p);
    }
    if (v.size() >= 2 && v.front().x == v.back().x && v.front().y == v.back().y) v.pop_back();
    if (v.size() < 3) throw std::invalid_argument("point_in_polygon: degenerate polygon");

    // signed area doubled; flips orientation to counterclockwise
    XRat area(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& p1 = v[i];
        const auto& p2 = v[(i + 1) % v.size()];
        area = area + (p1.x * p2.y - p2.x * p1.y);
    }
    if (area.is_zero()) throw std::invalid_argument("point_in_polygon: zero-area polygon");
    if (area < XRat(0)) std::reverse(v.begin(), v.end());

    bool on_edge = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& p1 = v[i];
        const auto& p2 = v[(i + 1) % v.size()];
        XRat cross = (p2.x - p1.x) * (point.y - p1.y) - (p2.y - p1.y) * (point.x - p1.x);
        if (cross < XRat(0)) return RegionPosition::outside;
        if (cross.is_zero()) on_edge = true;
    }
    return on_edge ? RegionPosition::boundary : RegionPosition::interior;
}

SymmetryReport symmetry_check(const XRat& theta, const XRat& q) {
    require_theta(theta);
    if (q < XRat(1)) throw std::invalid_argument("symmetry_check: q must be >= 1");
    XRat inv_q2 = interp_exponent(q, XRat(2), theta).recip();
    XRat inv_q1 = interp_exponent(q, XRat(1), theta).recip();
    XRat inv_qinf = interp_exponent(q, XRat::infinity(), theta).recip();
    XRat inv_inf2 = interp_exponent(XRat::infinity(), XRat(2), theta).recip();
    XRat ht = theta / XRat(2);
    XRat bq = (XRat(1) - theta) / q;

    SymmetryReport rep;
    auto push = [&rep](const std::string& name, const XRat& lhs, const XRat& rhs) {
        rep.identities.push_back({name, lhs == rhs});
    };
    push("theta/2=1/[inf,2]_theta", ht, inv_inf2);
    push("theta/2=1/[q,1]_theta-1/[q,2]_theta", ht, inv_q1 - inv_q2);
    push("theta/2=1/[q,2]_theta-1/[q,inf]_theta", ht, inv_q2 - inv_qinf);
    push("(1-theta)/q=1/[q,inf]_theta", bq, inv_qinf);
    push("(1-theta)/q=1/[q,2]_theta-1/[inf,2]_theta", bq, inv_q2 - inv_inf2);
    rep.all_hold = true;
    for (const auto& id : rep.identities) rep.all_hold = rep.all_hold && id.holds;
    return rep;
}

} // namespace varmult
