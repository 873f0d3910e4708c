#ifndef IHX_STRATIFIED_HPP
#define IHX_STRATIFIED_HPP

#include "ihx/simplicial.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ihx {

/// Integer perversity vector p_0..p_n. General integer values are allowed
/// so that control-derived (possibly negative) top entries can be fed to
/// the chain-level machinery; Goresky-MacPherson validity is a separate
/// predicate.
struct Perversity {
    std::vector<int> values; // values[j] = p_j, j = 0..n

    int n() const { return static_cast<int>(values.size()) - 1; }
    int operator[](int j) const { return values[static_cast<std::size_t>(j)]; }

    /// p_0 = p_1 = p_2 = 0 and p_j <= p_{j+1} <= p_j + 1 for j >= 2.
    bool valid_gm() const;
    bool operator==(const Perversity&) const = default;
    bool leq(const Perversity& other) const; // componentwise
    std::string str() const;
};

Perversity zero_perversity(int n);
/// t_j = max(0, j - 2).
Perversity total_perversity(int n);
/// t-bar minus p-bar; throws if p exceeds t anywhere.
Perversity complement(const Perversity& p);
/// All GM-valid perversities of ambient dimension n.
std::vector<Perversity> all_perversities(int n);

/// A simplicial complex with a nested skeleton filtration
/// X_n = ambient ⊇ X_{n-1} ⊇ ... ⊇ X_0. Σ = X_{n-1} is the singular part.
struct FilteredComplex {
    SimplicialComplex ambient;
    int n = 0;                                // ambient (filtration) dimension
    std::vector<SimplicialComplex> skeleta;   // skeleta[i] = X_i, i = 0..n

    const SimplicialComplex& skeleton(int i) const; // X_i, empty below 0
    /// Nesting, face closure, dim X_i <= i, X_n = ambient.
    void validate() const;
    /// X_{n-1} strictly larger than X_{n-2}; tolerated but reported.
    bool has_codim_one_stratum() const;
    /// Pseudomanifold check of the ambient complex.
    PseudomanifoldReport pseudomanifold_report() const;

    /// Cone over K with the apex as the 0-dimensional skeleton.
    static FilteredComplex cone_over(const SimplicialComplex& link, Vertex apex);
    /// Suspension with both apexes singular.
    static FilteredComplex suspension_over(const SimplicialComplex& link, Vertex north, Vertex south);
    /// Trivial filtration: Σ = ∅.
    static FilteredComplex unstratified(const SimplicialComplex& k);
};

/// dim(σ̄ ∩ X_{n-j}) <= i - j + p_j for all 2 <= j <= n, with dim ∅ = -∞.
/// The chain degree i may differ from dim σ (boundary checks use i-1).
bool simplex_allowable(const Simplex& s, int i, const Perversity& p, const FilteredComplex& f);

/// IC^p̄: per-degree basis of allowable-chains-with-allowable-boundary,
/// in ambient chain coordinates, plus the induced boundary operators.
struct IntersectionComplex {
    Perversity perversity;
    int n = 0;
    std::vector<std::vector<Simplex>> allowable; // allowable i-simplices per degree
    std::vector<RationalMatrix> basis;           // C_i(ambient) x dim IC_i
    std::vector<RationalMatrix> boundary;        // IC_i -> IC_{i-1}, index i >= 1

    int dim(int i) const;
    /// d∘d = 0 and ∂(IC_i) ⊆ IC_{i-1} shape checks.
    void validate() const;
};

IntersectionComplex intersection_chain_complex(const FilteredComplex& f, const Perversity& p);
std::map<int, long> intersection_betti(const FilteredComplex& f, const Perversity& p);
std::map<int, long> intersection_betti(const IntersectionComplex& ic);

/// Closed-form cone answer: H_i(L) for i < n - p_n - 1, else 0.
std::map<int, long> cone_formula_expected(const std::map<int, long>& link_betti, int n, int p_n);

struct DualityReport {
    bool applicable = false;   // pseudomanifold check passed
    bool symmetric = false;    // all rank pairs matched
    Perversity p, q;
    std::map<int, long> ih_p, ih_q;
    std::vector<int> mismatched_degrees;
    std::string note;
};

/// Rank-equality consequence of the duality pairing: rank IH^p̄_i vs
/// rank IH^q̄_{n-i} for q̄ = complement(p̄).
DualityReport duality_rank_check(const FilteredComplex& f, const Perversity& p);

} // namespace ihx

#endif
