#include "desitter/admissibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "desitter/detail/family_forms.hpp"

namespace desitter {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// ---- interval-set algebra for the corollary tables ----

struct RawInterval {
    double lo, hi;
    std::string tag_lo, tag_hi;
};
using IntervalSet = std::vector<RawInterval>;

IntervalSet all_of_line() { return {{-kInf, kInf, "infinite", "infinite"}}; }

IntervalSet less_than(double x, std::string tag) {
    return {{-kInf, x, "infinite", std::move(tag)}};
}

IntervalSet greater_than(double x, std::string tag) {
    return {{x, kInf, std::move(tag), "infinite"}};
}

IntervalSet between(double a, double b, const std::string& tag) {
    if (!(a < b)) return {};
    return {{a, b, tag, tag}};
}

/// {lambda : lambda^2 > t}
IntervalSet lambda2_greater(double t, const std::string& tag) {
    if (t < 0.0) return all_of_line();
    if (t == 0.0)
        return {{-kInf, 0.0, "infinite", tag}, {0.0, kInf, tag, "infinite"}};
    const double r = std::sqrt(t);
    return {{-kInf, -r, "infinite", tag}, {r, kInf, tag, "infinite"}};
}

/// {lambda : lambda^2 < t}
IntervalSet lambda2_less(double t, const std::string& tag) {
    if (!(t > 0.0)) return {};
    const double r = std::sqrt(t);
    return {{-r, r, tag, tag}};
}

/// {lambda : k*lambda^2 > rhs}
IntervalSet quad_sign(double k, double rhs, const std::string& tag) {
    if (k > 0.0) return lambda2_greater(rhs / k, tag);
    if (k == 0.0) return rhs < 0.0 ? all_of_line() : IntervalSet{};
    return lambda2_less(rhs / k, tag);
}

/// {lambda : A*lambda^2 + B*lambda + C > 0} for A > 0.
IntervalSet quad_positive(double A, double B, double C, const std::string& tag) {
    const double disc = B * B - 4.0 * A * C;
    if (disc <= 0.0) return all_of_line();
    const double sq = std::sqrt(disc);
    const double r1 = (-B - sq) / (2.0 * A);
    const double r2 = (-B + sq) / (2.0 * A);
    return {{-kInf, r1, "infinite", tag}, {r2, kInf, tag, "infinite"}};
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
    IntervalSet out;
    for (const auto& x : a)
        for (const auto& y : b) {
            double lo, hi;
            std::string tlo, thi;
            if (x.lo >= y.lo) {
                lo = x.lo;
                tlo = x.tag_lo;
            } else {
                lo = y.lo;
                tlo = y.tag_lo;
            }
            if (x.hi <= y.hi) {
                hi = x.hi;
                thi = x.tag_hi;
            } else {
                hi = y.hi;
                thi = y.tag_hi;
            }
            if (lo < hi) out.push_back({lo, hi, tlo, thi});
        }
    std::sort(out.begin(), out.end(),
              [](const RawInterval& u, const RawInterval& v) { return u.lo < v.lo; });
    return out;
}

std::vector<AdmissibleInterval> to_admissible(const IntervalSet& s) {
    std::vector<AdmissibleInterval> out;
    for (const auto& r : s) out.push_back({r.lo, r.hi, r.tag_lo, r.tag_hi});
    return out;
}

// ---- spec classification for the corollary oracle ----

struct CorollaryMatch {
    bool cmc = false;   // linear relations kappa = -eps*lambda + 2*eps*H
                        // (second kind: kappa = lambda + 2H)
    bool gauss = false; // power m = -1, kappa = a/lambda
    double H = 0.0;     // cmc
    double a = 0.0;     // gauss
};

CorollaryMatch classify(const SurfaceSpec& spec) {
    CorollaryMatch m;
    if (const auto* lin = std::get_if<LinearRelation>(&spec.rel)) {
        if (spec.family == SurfaceFamily::HyperbolicSecond) {
            if (lin->a == 1.0) {
                m.cmc = true;
                m.H = lin->b / 2.0;
            }
        } else if (lin->a == -spec.eps) {
            m.cmc = true;
            m.H = spec.eps * lin->b / 2.0;
        }
    } else if (const auto* pw = std::get_if<PowerRelation>(&spec.rel)) {
        if (pw->m == -1.0) {
            m.gauss = true;
            m.a = pw->a;
        }
    }
    return m;
}

IntervalSet corollary_cmc(const SurfaceSpec& spec, double H) {
    const double c = spec.c;
    const double c2 = c * c;

    if (spec.family == SurfaceFamily::HyperbolicSecond) {
        // w = c/sqrt(2(H+lambda)); radicand 2(H+lambda) - (lambda^2+1)c^2 > 0
        IntervalSet s = greater_than(-H, "radius_base");
        s = intersect(s, greater_than(c2 / 2.0 - H, "pole"));
        const double disc = 1.0 + 2.0 * H * c2 - c2 * c2;
        if (disc <= 0.0) return {};
        const double sq = std::sqrt(disc);
        s = intersect(s, between((1.0 - sq) / c2, (1.0 + sq) / c2, "radicand"));
        return s;
    }

    // delta-families share the radius c/sqrt(2(H-lambda))
    const int dlt = family_delta(spec.family);
    IntervalSet s = less_than(H, "radius_base");
    const double lambda_regime = H - c2 / 2.0; // y = 1 crossing
    if (spec.family == SurfaceFamily::Spherical) {
        if (spec.regime == SphericalRegime::YLessOne)
            s = intersect(s, less_than(lambda_regime, "regime"));
        else
            s = intersect(s, greater_than(lambda_regime, "regime"));
    }
    // radicand * W = c^2 lambda^2 - 2 delta eps lambda + eps(2 delta H - c^2) > 0
    const double e = spec.eps;
    if (dlt == 0) {
        s = intersect(s, quad_sign(1.0, e, "radicand"));
    } else {
        s = intersect(s, quad_positive(c2, -2.0 * dlt * e, e * (2.0 * dlt * H - c2),
                                       "radicand"));
    }
    return s;
}

IntervalSet corollary_gauss(const SurfaceSpec& spec, double a) {
    const double c2 = spec.c * spec.c;

    if (spec.family == SurfaceFamily::HyperbolicSecond) {
        // w = c/sqrt(lambda^2 + a); radicand (1-c^2)lambda^2 + a - c^2 > 0
        IntervalSet s = lambda2_greater(-a, "radius_base");
        s = intersect(s, lambda2_greater(c2 - a, "pole"));
        s = intersect(s, quad_sign(1.0 - c2, c2 - a, "radicand"));
        return s;
    }

    const int dlt = family_delta(spec.family);
    const double e = spec.eps;
    // base S = lambda^2 - eps*a > 0
    IntervalSet s = lambda2_greater(e * a, "radius_base");
    if (spec.family == SurfaceFamily::Spherical) {
        // y < 1 iff S > c^2
        if (spec.regime == SphericalRegime::YLessOne)
            s = intersect(s, lambda2_greater(c2 + e * a, "regime"));
        else
            s = intersect(s, lambda2_less(c2 + e * a, "regime"));
    }
    // radicand * S = (c^2 + delta eps) lambda^2 - (eps c^2 + delta a) > 0
    if (dlt == 0) {
        s = intersect(s, quad_sign(1.0, e, "radicand"));
    } else {
        s = intersect(s, quad_sign(c2 + dlt * e, e * c2 + dlt * a, "radicand"));
    }
    return s;
}

// ---- numeric scan ----

struct PointState {
    bool ok = false;
    int violated = -1; // constraint index when !ok
    int denom_sign = 0;
};

class PointEvaluator {
public:
    explicit PointEvaluator(const SurfaceSpec& spec)
        : spec_(spec), cs_(constraint_set(spec)) {
        for (std::size_t i = 0; i < cs_.items.size(); ++i)
            if (!cs_.items[i].require_positive) sign_idx_ = static_cast<int>(i);
    }

    const ConstraintSet& constraints() const { return cs_; }
    int sign_constraint() const { return sign_idx_; }

    PointState operator()(double lambda) const {
        PointState st;
        st.denom_sign = 1;
        for (std::size_t i = 0; i < cs_.items.size(); ++i) {
            double v;
            try {
                v = cs_.items[i].value(lambda);
            } catch (const Error&) {
                st.violated = static_cast<int>(i);
                return st;
            }
            if (!std::isfinite(v) && cs_.items[i].require_positive) {
                st.violated = static_cast<int>(i);
                return st;
            }
            if (cs_.items[i].require_positive) {
                if (!(v > 0.0)) {
                    st.violated = static_cast<int>(i);
                    return st;
                }
            } else {
                if (v == 0.0) {
                    st.violated = static_cast<int>(i);
                    return st;
                }
                st.denom_sign = v > 0.0 ? 1 : -1;
            }
        }
        st.ok = true;
        return st;
    }

private:
    const SurfaceSpec& spec_;
    ConstraintSet cs_;
    int sign_idx_ = -1;
};

bool same_state(const PointState& a, const PointState& b) {
    if (a.ok != b.ok) return false;
    if (a.ok) return a.denom_sign == b.denom_sign;
    return true; // all inadmissible states are equivalent for interval purposes
}

/// Bisect the transition between x_good (admissible state s_good) and
/// x_bad to 1e-12 relative; returns the boundary location.
double refine_boundary(const PointEvaluator& ev, double x_good, double x_bad,
                       const PointState& s_good) {
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (x_good + x_bad);
        if (std::fabs(x_bad - x_good) <= 1e-12 * std::max(1.0, std::fabs(mid))) break;
        if (same_state(ev(mid), s_good))
            x_good = mid;
        else
            x_bad = mid;
    }
    return 0.5 * (x_good + x_bad);
}

std::string binding_id(const PointEvaluator& ev, double boundary, double outside_x,
                       const PointState& inside, const PointState& outside) {
    const auto& items = ev.constraints().items;
    if (outside.ok && inside.ok) return "denominator"; // sign flip across a root
    if (outside.violated >= 0) {
        const auto& c = items[outside.violated];
        // quadrature-mode path failures bind at the umbilic root when the
        // denominator flips sign across the endpoint
        if (c.id == "radius_domain" && ev.sign_constraint() >= 0) {
            try {
                const double v_out =
                    items[ev.sign_constraint()].value(outside_x);
                if ((v_out > 0.0 ? 1 : -1) != inside.denom_sign) return "denominator";
            } catch (const Error&) {
            }
        }
        return c.id;
    }
    return "unknown";
}

} // namespace

ConstraintSet constraint_set(const SurfaceSpec& spec) {
    validate(spec);
    ConstraintSet cs;
    const RadiusFunction rf = radius_function(spec);

    // umbilic denominator, where its zero set is not already the radius
    // base boundary: custom relations and power relations with m > 0
    bool denom_constraint = std::holds_alternative<CustomRelation>(spec.rel);
    if (const auto* pw = std::get_if<PowerRelation>(&spec.rel))
        denom_constraint = pw->m > 0.0;
    if (denom_constraint) {
        cs.items.push_back(
            {"denominator",
             [rf](double lam) {
                 return denominator(rf.rel, family_denominator_kind(rf.family),
                                    rf.eps, lam);
             },
             false});
    }

    const auto radius_at = [rf, quad = spec.quad](double lam) {
        return radius(rf, lam, quad);
    };

    if (spec.radius_mode == RadiusMode::ClosedForm) {
        cs.items.push_back(
            {"radius_base", [rf](double lam) { return radius_base(rf, lam); }, true});
    } else {
        // in quadrature mode the radius exists exactly on the singularity-free
        // component of lambda_ref; probe it directly
        cs.items.push_back({"radius_domain",
                            [radius_at](double lam) {
                                const double r = radius_at(lam);
                                return std::isfinite(r) && r > 0.0 ? 1.0 : -1.0;
                            },
                            true});
    }

    if (spec.family == SurfaceFamily::Spherical) {
        const bool less = spec.regime == SphericalRegime::YLessOne;
        cs.items.push_back({"regime",
                            [radius_at, less](double lam) {
                                const double y = radius_at(lam);
                                return less ? 1.0 - y * y : y * y - 1.0;
                            },
                            true});
    }
    if (spec.family == SurfaceFamily::HyperbolicSecond) {
        cs.items.push_back({"pole",
                            [radius_at](double lam) {
                                const double w = radius_at(lam);
                                return 1.0 - w * w;
                            },
                            true});
    }

    cs.items.push_back({"radicand",
                        [rf, radius_at](double lam) {
                            const double r = radius_at(lam);
                            return detail::radicand_k<double>(rf.family, rf.eps, r, lam);
                        },
                        true});
    return cs;
}

PointCheck check_point(const SurfaceSpec& spec, double lambda) {
    const PointEvaluator ev(spec);
    const PointState st = ev(lambda);
    PointCheck pc;
    pc.ok = st.ok;
    if (!st.ok && st.violated >= 0) pc.violated = ev.constraints().items[st.violated].id;
    return pc;
}

std::vector<AdmissibleInterval> admissible_intervals(const SurfaceSpec& spec,
                                                     std::pair<double, double> window,
                                                     int grid) {
    if (!(std::isfinite(window.first) && std::isfinite(window.second) &&
          window.first < window.second))
        throw ConfigError("admissible_intervals: window must be finite and ordered");
    if (grid < 1000)
        throw ConfigError("admissible_intervals: grid must be at least 1000");

    const PointEvaluator ev(spec);
    const double lo = window.first, hi = window.second;
    const double step = (hi - lo) / grid;

    std::vector<AdmissibleInterval> out;
    PointState prev = ev(lo);
    double prev_x = lo;
    bool open = prev.ok;
    AdmissibleInterval cur;
    if (open) {
        cur.lo = lo;
        cur.binding_lo = "window";
    }

    for (int i = 1; i <= grid; ++i) {
        const double x = (i == grid) ? hi : lo + i * step;
        const PointState st = ev(x);
        if (!same_state(st, prev)) {
            if (prev.ok && !st.ok) {
                const double b = refine_boundary(ev, prev_x, x, prev);
                cur.hi = b;
                cur.binding_hi = binding_id(ev, b, x, prev, st);
                out.push_back(cur);
                open = false;
            } else if (!prev.ok && st.ok) {
                const double b = refine_boundary(ev, x, prev_x, st);
                cur = {};
                cur.lo = b;
                cur.binding_lo = binding_id(ev, b, prev_x, st, prev);
                open = true;
            } else if (prev.ok && st.ok) {
                // denominator sign flip between two admissible points
                const double b = refine_boundary(ev, prev_x, x, prev);
                cur.hi = b;
                cur.binding_hi = "denominator";
                out.push_back(cur);
                cur = {};
                cur.lo = b;
                cur.binding_lo = "denominator";
                open = true;
            }
        }
        prev = st;
        prev_x = x;
    }
    if (open) {
        cur.hi = hi;
        cur.binding_hi = "window";
        out.push_back(cur);
    }
    return out;
}

std::vector<AdmissibleInterval> corollary_intervals(const SurfaceSpec& spec) {
    validate(spec);
    const CorollaryMatch m = classify(spec);
    if (m.cmc) return to_admissible(corollary_cmc(spec, m.H));
    if (m.gauss) return to_admissible(corollary_gauss(spec, m.a));
    throw UnsupportedSpec("corollary_intervals: spec matches no closed-form table");
}

OracleDiff oracle_diff(const SurfaceSpec& spec, std::pair<double, double> window,
                       int grid) {
    OracleDiff d;
    d.scan = admissible_intervals(spec, window, grid);

    std::vector<AdmissibleInterval> cor = corollary_intervals(spec);
    for (auto& iv : cor) {
        iv.lo = std::max(iv.lo, window.first);
        iv.hi = std::min(iv.hi, window.second);
        if (iv.lo >= iv.hi) continue;
        if (iv.lo == window.first) iv.binding_lo = "window";
        if (iv.hi == window.second) iv.binding_hi = "window";
        d.corollary.push_back(iv);
    }

    // endpoint-by-endpoint comparison of matched intervals
    d.count_mismatch = d.scan.size() != d.corollary.size();
    const std::size_t n = std::min(d.scan.size(), d.corollary.size());
    for (std::size_t i = 0; i < n; ++i) {
        d.max_endpoint_discrepancy =
            std::max({d.max_endpoint_discrepancy,
                      std::fabs(d.scan[i].lo - d.corollary[i].lo),
                      std::fabs(d.scan[i].hi - d.corollary[i].hi)});
    }

    // measure of the symmetric difference within the window
    {
        auto inside = [&](const std::vector<AdmissibleInterval>& set, double x) {
            for (const auto& iv : set)
                if (x > iv.lo && x < iv.hi) return true;
            return false;
        };
        const int samples = 20000;
        double measure = 0.0;
        const double w = window.second - window.first;
        for (int i = 0; i < samples; ++i) {
            const double x = window.first + w * (i + 0.5) / samples;
            if (inside(d.scan, x) != inside(d.corollary, x)) measure += w / samples;
        }
        d.symmetric_difference_measure = measure;
    }

    // configurations whose literal source tables carry known defects; the
    // scan is authoritative there and any difference is a report, not a bug
    const CorollaryMatch m = classify(spec);
    if (m.cmc && spec.family == SurfaceFamily::Spherical && spec.eps == -1 &&
        spec.regime == SphericalRegime::YLessOne)
        d.notes.push_back("timelike spherical CMC case a: mismatched radical in the "
                          "published table; oracle uses the quadratic-root form");
    if (m.cmc && spec.family == SurfaceFamily::Spherical && spec.eps == 1 &&
        spec.regime == SphericalRegime::YGreaterOne)
        d.notes.push_back("spacelike spherical CMC case b: overlapping regime guards "
                          "in the published table; oracle uses root placement");
    if (m.cmc && spec.family == SurfaceFamily::HyperbolicFirst && spec.eps == 1 &&
        spec.c < 1.0 && m.H <= -1.0)
        d.notes.push_back("spacelike hyperbolic CMC: the published table omits the "
                          "unbounded piece for c<1, H<=-1");
    if (m.gauss && spec.family == SurfaceFamily::HyperbolicFirst && spec.eps == 1 &&
        spec.c < 1.0 && m.a > 1.0)
        d.notes.push_back("spacelike hyperbolic constant-Gauss: bounded two-piece "
                          "region for c<1, a>1 missing from the published table");
    return d;
}

} // namespace desitter
