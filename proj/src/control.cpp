#include "ihx/control.hpp"

#include <sstream>
#include <stdexcept>

namespace ihx {

void ControlParams::validate() const
{
    if (n < 1)
        throw std::invalid_argument("ambient dimension must be positive");
    if (alpha.size() != beta.size())
        throw std::invalid_argument("alpha and beta must cover the same codimensions");
    for (const auto& [j, a] : alpha) {
        if (!beta.count(j))
            throw std::invalid_argument("codimension " + std::to_string(j) + " has alpha but no beta");
        if (j < 2 || j > n)
            throw std::invalid_argument("codimension " + std::to_string(j) + " out of range 2.." +
                                        std::to_string(n));
        if (a <= 0 || beta.at(j) <= 0)
            throw std::invalid_argument("alpha and beta must be positive at codimension " +
                                        std::to_string(j));
    }
}

std::vector<int> ControlParams::active() const
{
    std::vector<int> out;
    for (const auto& [j, a] : alpha)
        out.push_back(j);
    return out;
}

ControlParams ControlParams::single(int n, Rational alpha_n, Rational beta_n)
{
    ControlParams p;
    p.n = n;
    if (n >= 2) {
        p.alpha[n] = std::move(alpha_n);
        p.beta[n] = std::move(beta_n);
    }
    p.validate();
    return p;
}

long pole_exponent(const ControlParams& params, int j)
{
    params.validate();
    if (!params.alpha.count(j))
        throw std::invalid_argument("codimension " + std::to_string(j) + " is not active");
    Rational ratio = params.beta.at(j) / params.alpha.at(j);
    if (rat_is_integer(ratio))
        throw std::domain_error("beta_" + std::to_string(j) + "/alpha_" + std::to_string(j) + " = " +
                                rational_to_string(ratio) +
                                " is an integer; the pole-order hypothesis excludes this");
    return rat_floor(ratio).convert_to<long>();
}

Perversity perversity_from_control(const ControlParams& params)
{
    params.validate();
    std::vector<int> js = params.active();
    std::map<int, long> floors;
    for (int j : js)
        floors[j] = pole_exponent(params, j);
    // the floor condition between consecutive active codimensions is what
    // makes a perversity with unit-step growth possible
    for (std::size_t t = 0; t + 1 < js.size(); ++t) {
        int j = js[t], jn = js[t + 1];
        long gap = floors[jn] - floors[j];
        if (gap < 0 || gap > jn - j) {
            std::ostringstream os;
            os << "floor condition violated between codimensions " << j << " and " << jn << ": "
               << floors[j] << " <= " << floors[jn] << " <= " << floors[j] << "+" << (jn - j)
               << " fails";
            throw std::invalid_argument(os.str());
        }
    }
    Perversity p = zero_perversity(params.n);
    for (int j : js) {
        long v = j - 2 - floors[j];
        if (v < 0)
            throw std::invalid_argument("parameters over-controlled: p_" + std::to_string(j) +
                                        " = " + std::to_string(v) + " < 0");
        p.values[static_cast<std::size_t>(j)] = static_cast<int>(v);
    }
    // minimal growth through inactive codimensions: stay level, then ramp
    // just in time to reach the next prescribed value
    if (!js.empty()) {
        for (int j = 2; j < js.front(); ++j)
            p.values[static_cast<std::size_t>(j)] = std::max(0, p[js.front()] - (js.front() - j));
        for (std::size_t t = 0; t < js.size(); ++t) {
            int from = js[t];
            int to = (t + 1 < js.size()) ? js[t + 1] : params.n + 1;
            for (int j = from + 1; j < to; ++j) {
                int target = (t + 1 < js.size()) ? p[to] - (to - j) : p[from];
                p.values[static_cast<std::size_t>(j)] = std::max(p[from], target);
            }
        }
    }
    if (!p.valid_gm())
        throw std::invalid_argument("derived perversity " + p.str() + " violates the growth axioms");
    return p;
}

GradedComplex truncate_cochain(const GradedComplex& omega, int t)
{
    if (omega.dir != Direction::cochain)
        throw std::invalid_argument("truncate_cochain expects a cochain complex");
    if (omega.lo != 0)
        throw std::invalid_argument("cochain complex must start in degree 0");
    if (t < -1)
        throw std::invalid_argument("cutoff must be >= -1");
    if (t >= omega.hi)
        return omega;
    GradedComplex out;
    out.dir = Direction::cochain;
    out.lo = 0;
    if (t == -1) {
        out.hi = 0;
        out.dims = {0};
        return out;
    }
    out.hi = t;
    for (int k = 0; k < t; ++k)
        out.dims.push_back(omega.dim(k));
    RationalMatrix z = matrix_from_columns(omega.dim(t), kernel_basis(omega.differential(t)));
    out.dims.push_back(z.cols());
    for (int k = 0; k + 1 < t; ++k)
        out.diff[k] = omega.differential(k);
    if (t >= 1)
        out.diff[t - 1] = solve_columns(z, omega.differential(t - 1)); // lands in ker d^t
    out.validate();
    return out;
}

namespace {

/// Minimal-growth perversity with prescribed (possibly negative) top
/// value; intermediate entries are clamped at zero, which leaves the top
/// codimension as the binding allowability constraint at the cone point.
Perversity with_top(int n, long p_top)
{
    Perversity p = zero_perversity(n);
    for (int j = 3; j <= n; ++j)
        p.values[static_cast<std::size_t>(j)] =
            static_cast<int>(std::max<long>(0, p_top - (n - j)));
    if (n >= 2)
        p.values[static_cast<std::size_t>(n)] = static_cast<int>(p_top);
    return p;
}

std::map<int, long> padded(const std::map<int, long>& b, int hi)
{
    std::map<int, long> out;
    for (int k = 0; k <= hi; ++k)
        out[k] = b.count(k) ? b.at(k) : 0;
    return out;
}

} // namespace

Theorem0Report theorem0_crosscheck(const SimplicialComplex& link, const ControlParams& params)
{
    params.validate();
    const int n = link.dim() + 1;
    if (n != params.n)
        throw std::invalid_argument("link dimension " + std::to_string(link.dim()) +
                                    " does not match ambient dimension " + std::to_string(params.n));
    Theorem0Report rep;
    rep.n = n;
    // a point link has no singular codimension >= 2; no pole survives and
    // the truncation keeps degree 0 only
    rep.m = params.alpha.count(n) ? pole_exponent(params, n) : 0;
    rep.used = with_top(n, n - 2 - rep.m);
    Vertex apex = link.vertices().empty() ? 0 : *link.vertices().rbegin() + 1;
    auto cone_f = FilteredComplex::cone_over(link, apex);
    rep.chain_ih = padded(intersection_betti(cone_f, rep.used), n);

    GradedComplex omega = cochain_complex(link);
    rep.trunc_m_minus_1 = padded(betti(truncate_cochain(omega, static_cast<int>(rep.m) - 1)), n);
    rep.trunc_m = padded(betti(truncate_cochain(omega, static_cast<int>(rep.m))), n);
    rep.matches_m_minus_1 = rep.trunc_m_minus_1 == rep.chain_ih;
    rep.matches_m = rep.trunc_m == rep.chain_ih;
    if (rep.matches_m_minus_1 && rep.matches_m)
        rep.matched = "both";
    else if (rep.matches_m)
        rep.matched = "m";
    else if (rep.matches_m_minus_1)
        rep.matched = "m-1";
    else
        rep.matched = "none";
    return rep;
}

Theorem3Report theorem3_crosscheck(const SimplicialComplex& link, const ControlParams& params)
{
    Theorem0Report base = theorem0_crosscheck(link, params);
    Theorem3Report rep;
    rep.n = base.n;
    rep.m = base.m;
    // the cutoff is the convention resolved by the Theorem 0 comparison;
    // "both" and "none" fall back to t = m
    rep.cutoff = static_cast<int>(base.matched == "m-1" ? rep.m - 1 : rep.m);

    GradedComplex model = truncate_cochain(cochain_complex(link), rep.cutoff);
    PeriodicResult hp = periodic_betti(mixed_from_cochain(model), 6);
    rep.stabilized = hp.stabilized;
    rep.model_even = hp.even;
    rep.model_odd = hp.odd;

    Vertex apex = link.vertices().empty() ? 0 : *link.vertices().rbegin() + 1;
    auto cone_f = FilteredComplex::cone_over(link, apex);
    auto sums = [&](long p_top, long& even, long& odd) {
        auto ih = intersection_betti(cone_f, with_top(rep.n, p_top));
        even = odd = 0;
        for (const auto& [k, v] : ih)
            (k % 2 == 0 ? even : odd) += v;
    };
    sums(rep.n - 2 - rep.m, rep.p_even, rep.p_odd);
    sums(rep.m - 1, rep.q_even, rep.q_odd);
    rep.agrees_p = rep.model_even == rep.p_even && rep.model_odd == rep.p_odd;
    rep.agrees_q = rep.model_even == rep.q_even && rep.model_odd == rep.q_odd;
    return rep;
}

} // namespace ihx
