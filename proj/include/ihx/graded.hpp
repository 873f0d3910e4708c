#ifndef IHX_GRADED_HPP
#define IHX_GRADED_HPP

#include "ihx/matrix.hpp"

#include <map>
#include <vector>

namespace ihx {

enum class Direction { chain, cochain };

/// A finite complex of Q-vector spaces on a contiguous degree range.
/// Chain direction: diff[k] : C_k -> C_{k-1}, defined for lo < k <= hi.
/// Cochain direction: diff[k] : C^k -> C^{k+1}, defined for lo <= k < hi.
struct GradedComplex {
    Direction dir = Direction::chain;
    int lo = 0;
    int hi = -1;
    std::vector<int> dims;                 // dims[k - lo]
    std::map<int, RationalMatrix> diff;

    int dim(int k) const
    {
        if (k < lo || k > hi)
            return 0;
        return dims[static_cast<std::size_t>(k - lo)];
    }

    const RationalMatrix& differential(int k) const;

    /// Checks matrix shapes and d∘d = 0 in every degree.
    void validate() const;
};

/// Betti numbers per degree. Rejects complexes with d∘d != 0.
std::map<int, long> betti(const GradedComplex& c);

} // namespace ihx

#endif
