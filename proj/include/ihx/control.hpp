#ifndef IHX_CONTROL_HPP
#define IHX_CONTROL_HPP

#include "ihx/cyclic.hpp"
#include "ihx/stratified.hpp"

#include <map>
#include <string>

namespace ihx {

/// Pinching exponents α_j and pole orders β_j per active codimension.
/// Only codimensions carrying a nonempty stratum should be listed.
struct ControlParams {
    int n = 0;
    std::map<int, Rational> alpha; // j -> α_j > 0
    std::map<int, Rational> beta;  // j -> β_j > 0

    /// Positivity, key agreement and 2 <= j <= n.
    void validate() const;
    std::vector<int> active() const;

    /// Single active codimension n (an isolated cone point).
    static ControlParams single(int n, Rational alpha_n, Rational beta_n);
};

/// floor(β_j / α_j) in exact arithmetic. Throws std::domain_error when the
/// ratio is an integer: the pole-order analysis breaks down there and no
/// perversity is defined.
long pole_exponent(const ControlParams& params, int j);

/// p_j = j - 2 - floor(β_j/α_j) at active codimensions, minimal growth in
/// between. Requires the floor condition m_j <= m_{j'} <= m_j + (j' - j)
/// between consecutive active codimensions (throws naming the offending
/// pair) and p_j >= 0 at every active j (throws "over-controlled").
Perversity perversity_from_control(const ControlParams& params);

/// Canonical truncation of a cochain complex: degrees < t unchanged,
/// degree t replaced by ker d^t, degrees > t zero. t = -1 gives the zero
/// complex. Cohomology is that of Ω up to t and zero above.
GradedComplex truncate_cochain(const GradedComplex& omega, int t);

/// Side-by-side comparison of the truncated-cone cochain model with the
/// chain-level intersection homology of the cone, for both cutoff
/// candidates t = m-1 and t = m.
struct Theorem0Report {
    int n = 0;
    long m = 0;
    Perversity used;                       // p_n = n - 2 - m, minimal growth
    std::map<int, long> chain_ih;          // IH of the cone, degrees 0..n
    std::map<int, long> trunc_m_minus_1;   // betti of the t = m-1 truncation
    std::map<int, long> trunc_m;           // betti of the t = m truncation
    bool matches_m_minus_1 = false;
    bool matches_m = false;
    std::string matched;                   // "m-1", "m", "both" or "none"
};

Theorem0Report theorem0_crosscheck(const SimplicialComplex& link, const ControlParams& params);

/// Periodic ranks of the truncated-cone mixed complex against the
/// even/odd ⊕-sums of chain-level intersection betti of the cone, for the
/// perversity p_n = n-2-m and for the alternative q_n = m-1.
struct Theorem3Report {
    int n = 0;
    long m = 0;
    int cutoff = 0;                // the truncation degree used for the model
    bool stabilized = false;
    long model_even = 0, model_odd = 0;
    long p_even = 0, p_odd = 0;    // sums over IH with p_n = n-2-m
    long q_even = 0, q_odd = 0;    // sums over IH with q_n = m-1
    bool agrees_p = false;
    bool agrees_q = false;
};

Theorem3Report theorem3_crosscheck(const SimplicialComplex& link, const ControlParams& params);

} // namespace ihx

#endif
