#ifndef IHX_CYCLIC_HPP
#define IHX_CYCLIC_HPP

#include "ihx/graded.hpp"
#include "ihx/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace ihx {

/// Finite-dimensional unital associative algebra over Q, given by structure
/// constants. The unit must be the first basis vector; associativity and
/// the unit law are checked at construction.
class FiniteAlgebra {
public:
    FiniteAlgebra(std::vector<std::string> labels,
                  std::vector<std::vector<std::vector<Rational>>> structure);

    int dim() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Coefficients of e_i * e_j in the basis.
    const std::vector<Rational>& product(int i, int j) const;
    bool is_commutative() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<std::vector<Rational>>> c_; // c_[i][j][m]
};

namespace algebras {
FiniteAlgebra ground_field();
/// Q[x]/(x^2), basis {1, x}.
FiniteAlgebra dual_numbers();
/// Q x Q presented as Q[s]/(s^2 - 1), basis {1, s}.
FiniteAlgebra field_product();
/// M_2(Q), basis {1, E12, E21, E11}.
FiniteAlgebra matrix2();
/// Upper-triangular 2x2 matrices, basis {1, E11, E12}.
FiniteAlgebra upper_triangular2();
} // namespace algebras

/// Dimension of C_k(A) = A^{⊗(k+1)} with the canonical tensor basis.
long tensor_dim(const FiniteAlgebra& a, int k);

/// Matrix of the Hochschild boundary b : C_k -> C_{k-1} (alternating face
/// sum with the wraparound term).
RationalMatrix hochschild_boundary(const FiniteAlgebra& a, int k);

/// Signed cyclic rotation on C_k; satisfies τ^{k+1} = id.
RationalMatrix cyclic_operator(const FiniteAlgebra& a, int k);

/// The degree +1 operator B = (1 - τ) s N on the full complex, where s
/// inserts the unit in front and N is the cyclic norm. Satisfies B² = 0
/// and bB + Bb = 0 exactly.
RationalMatrix connes_B(const FiniteAlgebra& a, int k);

/// The Hochschild chain complex truncated at degree K.
GradedComplex hochschild_complex(const FiniteAlgebra& a, int max_degree);

/// Hochschild betti in degrees 0..K-1 (degree K is unreliable under
/// truncation and is not reported).
std::map<int, long> hh_betti(const FiniteAlgebra& a, int max_degree);

/// The reduced (normalized) complex: quotient by tensors with a unit
/// factor in a slot >= 1; dim C_k^red = d (d-1)^k.
GradedComplex reduced_complex(const FiniteAlgebra& a, int max_degree);
std::map<int, long> reduced_hh_betti(const FiniteAlgebra& a, int max_degree);

/// Graded space with anticommuting differentials b (degree -1) and
/// B (degree +1). `complete` marks complexes that are genuinely zero
/// above `hi` (cochain models) as opposed to truncations of an unbounded
/// complex (algebra models).
struct MixedComplex {
    int hi = -1;
    bool complete = false;
    std::vector<int> dims;                // degrees 0..hi
    std::map<int, RationalMatrix> b;      // b[k] : M_k -> M_{k-1}, 1 <= k <= hi
    std::map<int, RationalMatrix> B;      // B[k] : M_k -> M_{k+1}, 0 <= k <= hi-1

    int dim(int k) const;
    const RationalMatrix& b_at(int k) const;
    const RationalMatrix& B_at(int k) const;
    /// b² = 0, B² = 0, bB + Bb = 0 as exact matrix identities.
    void validate() const;
};

MixedComplex mixed_from_algebra(const FiniteAlgebra& a, int max_degree);
/// De Rham-style mixed complex of a cochain complex: b = 0, B = d.
MixedComplex mixed_from_cochain(const GradedComplex& omega);

/// Total complex of the bicomplex M[u] (deg u = 2): T_k = ⊕_j M_{k-2j}.
GradedComplex total_complex(const MixedComplex& m, int max_degree);

/// Cyclic betti as homology of the total complex; degrees <= K-2 are the
/// reliable window for truncated (non-complete) inputs.
std::map<int, long> cyclic_betti(const MixedComplex& m, int max_degree);

/// Cyclic betti via the Connes quotient complex (C_*/(1-τ), b), reported
/// for degrees 0..max_report.
std::map<int, long> connes_quotient_cyclic(const FiniteAlgebra& a, int max_degree, int max_report);

struct PeriodicResult {
    bool stabilized = false;
    long even = 0;
    long odd = 0;
    std::string detail;
};

/// Stabilized even/odd ranks of the periodicity operator S (the u-column
/// shift); stabilization = two consecutive equal ranks along the tower.
PeriodicResult periodic_betti(const MixedComplex& m, int max_degree);

struct SbiNode {
    int degree = 0;
    std::string at;       // which homology group the node sits at
    long rank_in = 0;     // rank of the incoming induced map
    long rank_out = 0;    // rank of the outgoing induced map
    long dim = 0;
    bool exact = false;
};

struct SbiReport {
    bool all_exact = false;
    std::vector<SbiNode> nodes;
};

/// Rank-exactness of HH_k -> HC_k -> HC_{k-2} -> HH_{k-1} at every node
/// in degrees <= max_degree - 2.
SbiReport sbi_check(const MixedComplex& m, int max_degree);

} // namespace ihx

#endif
