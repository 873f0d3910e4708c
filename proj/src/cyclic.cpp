#include "ihx/cyclic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ihx {

FiniteAlgebra::FiniteAlgebra(std::vector<std::string> labels,
                             std::vector<std::vector<std::vector<Rational>>> structure)
    : labels_(std::move(labels)), c_(std::move(structure))
{
    const int d = dim();
    if (d == 0)
        throw std::invalid_argument("algebra needs at least the unit");
    if (static_cast<int>(c_.size()) != d)
        throw std::invalid_argument("structure constant table has wrong size");
    for (const auto& row : c_) {
        if (static_cast<int>(row.size()) != d)
            throw std::invalid_argument("structure constant table has wrong size");
        for (const auto& cell : row)
            if (static_cast<int>(cell.size()) != d)
                throw std::invalid_argument("structure constant table has wrong size");
    }
    // unit law: e_0 * a = a * e_0 = a on every basis element
    for (int i = 0; i < d; ++i)
        for (int m = 0; m < d; ++m) {
            Rational want = (m == i) ? 1 : 0;
            if (c_[0][static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] != want ||
                c_[static_cast<std::size_t>(i)][0][static_cast<std::size_t>(m)] != want)
                throw std::invalid_argument("first basis vector '" + labels_[0] +
                                            "' is not a two-sided unit (fails on '" +
                                            labels_[static_cast<std::size_t>(i)] + "')");
        }
    // associativity on all basis triples
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                std::vector<Rational> left(static_cast<std::size_t>(d)), right(static_cast<std::size_t>(d));
                for (int m = 0; m < d; ++m) {
                    const Rational& lc = c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                                           [static_cast<std::size_t>(m)];
                    const Rational& rc = c_[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]
                                           [static_cast<std::size_t>(m)];
                    for (int t = 0; t < d; ++t) {
                        if (lc != 0)
                            left[static_cast<std::size_t>(t)] +=
                                lc * c_[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)]
                                       [static_cast<std::size_t>(t)];
                        if (rc != 0)
                            right[static_cast<std::size_t>(t)] +=
                                rc * c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)]
                                       [static_cast<std::size_t>(t)];
                    }
                }
                if (left != right) {
                    std::ostringstream os;
                    os << "associativity fails on basis triple (" << labels_[static_cast<std::size_t>(i)]
                       << ", " << labels_[static_cast<std::size_t>(j)] << ", "
                       << labels_[static_cast<std::size_t>(k)] << ")";
                    throw std::invalid_argument(os.str());
                }
            }
}

const std::vector<Rational>& FiniteAlgebra::product(int i, int j) const
{
    return c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

bool FiniteAlgebra::is_commutative() const
{
    for (int i = 0; i < dim(); ++i)
        for (int j = i + 1; j < dim(); ++j)
            if (product(i, j) != product(j, i))
                return false;
    return true;
}

namespace algebras {

namespace {
std::vector<std::vector<std::vector<Rational>>> zero_table(int d)
{
    return std::vector<std::vector<std::vector<Rational>>>(
        static_cast<std::size_t>(d),
        std::vector<std::vector<Rational>>(static_cast<std::size_t>(d),
                                           std::vector<Rational>(static_cast<std::size_t>(d))));
}
} // namespace

FiniteAlgebra ground_field()
{
    auto c = zero_table(1);
    c[0][0][0] = 1;
    return FiniteAlgebra({"1"}, c);
}

FiniteAlgebra dual_numbers()
{
    auto c = zero_table(2);
    c[0][0][0] = 1;
    c[0][1][1] = 1;
    c[1][0][1] = 1;
    // x * x = 0
    return FiniteAlgebra({"1", "x"}, c);
}

FiniteAlgebra field_product()
{
    // Q x Q presented as Q[s]/(s^2 - 1); (1±s)/2 are the idempotents
    auto c = zero_table(2);
    c[0][0][0] = 1;
    c[0][1][1] = 1;
    c[1][0][1] = 1;
    c[1][1][0] = 1;
    return FiniteAlgebra({"1", "s"}, c);
}

FiniteAlgebra matrix2()
{
    // basis 1, a = E12, b = E21, p = E11; E22 = 1 - p
    const int one = 0, a = 1, b = 2, p = 3;
    auto c = zero_table(4);
    auto unit = [&](int i) {
        c[0][static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        if (i != 0)
            c[static_cast<std::size_t>(i)][0][static_cast<std::size_t>(i)] = 1;
    };
    for (int i = 0; i < 4; ++i)
        unit(i);
    c[a][b][p] = 1;                      // E12 E21 = E11
    c[b][a][one] = 1; c[b][a][p] = -1;   // E21 E12 = E22 = 1 - E11
    c[p][a][a] = 1;                      // E11 E12 = E12
    c[b][p][b] = 1;                      // E21 E11 = E21
    c[p][p][p] = 1;                      // E11 E11 = E11
    // E12 E11 = E11 E21 = E12 E12 = E21 E21 = 0
    return FiniteAlgebra({"1", "E12", "E21", "E11"}, c);
}

FiniteAlgebra upper_triangular2()
{
    // basis 1, p = E11, a = E12; E22 = 1 - p
    const int p = 1, a = 2;
    auto c = zero_table(3);
    for (int i = 0; i < 3; ++i) {
        c[0][static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        if (i != 0)
            c[static_cast<std::size_t>(i)][0][static_cast<std::size_t>(i)] = 1;
    }
    c[p][p][p] = 1; // E11 E11 = E11
    c[p][a][a] = 1; // E11 E12 = E12
    // E12 E11 = E12 E12 = 0
    return FiniteAlgebra({"1", "E11", "E12"}, c);
}

} // namespace algebras

// ---- tensor bookkeeping -----------------------------------------------

long tensor_dim(const FiniteAlgebra& a, int k)
{
    long dim = 1;
    for (int t = 0; t <= k; ++t)
        dim *= a.dim();
    return dim;
}

namespace {

std::vector<int> decode(long index, int d, int slots)
{
    std::vector<int> out(static_cast<std::size_t>(slots));
    for (int t = slots - 1; t >= 0; --t) {
        out[static_cast<std::size_t>(t)] = static_cast<int>(index % d);
        index /= d;
    }
    return out;
}

long encode(const std::vector<int>& slots, int d)
{
    long index = 0;
    for (int s : slots)
        index = index * d + s;
    return index;
}

} // namespace

RationalMatrix hochschild_boundary(const FiniteAlgebra& a, int k)
{
    if (k < 1)
        throw std::out_of_range("hochschild_boundary needs k >= 1");
    const int d = a.dim();
    RationalMatrix out(static_cast<int>(tensor_dim(a, k - 1)), static_cast<int>(tensor_dim(a, k)));
    for (long col = 0; col < tensor_dim(a, k); ++col) {
        auto slots = decode(col, d, k + 1);
        for (int j = 0; j < k; ++j) {
            const auto& prod = a.product(slots[static_cast<std::size_t>(j)],
                                         slots[static_cast<std::size_t>(j + 1)]);
            std::vector<int> image(slots);
            image.erase(image.begin() + j + 1);
            const Rational sign = (j % 2 == 0) ? 1 : -1;
            for (int m = 0; m < d; ++m)
                if (prod[static_cast<std::size_t>(m)] != 0) {
                    image[static_cast<std::size_t>(j)] = m;
                    out.add_to(static_cast<int>(encode(image, d)), static_cast<int>(col),
                               sign * prod[static_cast<std::size_t>(m)]);
                }
        }
        // wraparound face: (-1)^k a_k a_0 ⊗ a_1 ⊗ ... ⊗ a_{k-1}
        const auto& prod = a.product(slots[static_cast<std::size_t>(k)], slots[0]);
        std::vector<int> image(slots.begin(), slots.end() - 1);
        const Rational sign = (k % 2 == 0) ? 1 : -1;
        for (int m = 0; m < d; ++m)
            if (prod[static_cast<std::size_t>(m)] != 0) {
                image[0] = m;
                out.add_to(static_cast<int>(encode(image, d)), static_cast<int>(col),
                           sign * prod[static_cast<std::size_t>(m)]);
            }
    }
    return out;
}

RationalMatrix cyclic_operator(const FiniteAlgebra& a, int k)
{
    const int d = a.dim();
    RationalMatrix out(static_cast<int>(tensor_dim(a, k)), static_cast<int>(tensor_dim(a, k)));
    const Rational sign = (k % 2 == 0) ? 1 : -1;
    for (long col = 0; col < tensor_dim(a, k); ++col) {
        auto slots = decode(col, d, k + 1);
        std::rotate(slots.begin(), slots.end() - 1, slots.end()); // pull a_k to the front
        out.set(static_cast<int>(encode(slots, d)), static_cast<int>(col), sign);
    }
    return out;
}

namespace {

/// Extra degeneracy s : C_k -> C_{k+1}, a_0⊗...⊗a_k -> 1⊗a_0⊗...⊗a_k.
RationalMatrix insert_unit_front(const FiniteAlgebra& a, int k)
{
    const int d = a.dim();
    RationalMatrix out(static_cast<int>(tensor_dim(a, k + 1)), static_cast<int>(tensor_dim(a, k)));
    for (long col = 0; col < tensor_dim(a, k); ++col)
        out.set(static_cast<int>(col), static_cast<int>(col), 1); // prefix slot 0 means index is unchanged
    return out;
}

} // namespace

RationalMatrix connes_B(const FiniteAlgebra& a, int k)
{
    // B = (1 - τ) s N with N = Σ_{j<=k} τ^j; the displayed double-sum
    // expands to exactly this on the full complex.
    RationalMatrix norm(static_cast<int>(tensor_dim(a, k)), static_cast<int>(tensor_dim(a, k)));
    RationalMatrix tau = cyclic_operator(a, k);
    RationalMatrix power = RationalMatrix::identity(static_cast<int>(tensor_dim(a, k)));
    for (int j = 0; j <= k; ++j) {
        norm = norm + power;
        power = tau * power;
    }
    RationalMatrix lifted = insert_unit_front(a, k) * norm;
    RationalMatrix tau_up = cyclic_operator(a, k + 1);
    return lifted - tau_up * lifted;
}

GradedComplex hochschild_complex(const FiniteAlgebra& a, int max_degree)
{
    if (max_degree < 1)
        throw std::invalid_argument("truncation degree must be >= 1");
    GradedComplex c;
    c.dir = Direction::chain;
    c.lo = 0;
    c.hi = max_degree;
    for (int k = 0; k <= max_degree; ++k)
        c.dims.push_back(static_cast<int>(tensor_dim(a, k)));
    for (int k = 1; k <= max_degree; ++k)
        c.diff[k] = hochschild_boundary(a, k);
    return c;
}

std::map<int, long> hh_betti(const FiniteAlgebra& a, int max_degree)
{
    if (max_degree < 2)
        throw std::invalid_argument("hh_betti needs max_degree >= 2");
    std::vector<long> ranks(static_cast<std::size_t>(max_degree + 1), 0);
    for (int k = 1; k <= max_degree; ++k)
        ranks[static_cast<std::size_t>(k)] = rank(hochschild_boundary(a, k));
    std::map<int, long> out;
    for (int k = 0; k < max_degree; ++k)
        out[k] = tensor_dim(a, k) - ranks[static_cast<std::size_t>(k)] -
                 ranks[static_cast<std::size_t>(k + 1)];
    return out;
}

// ---- reduced complex --------------------------------------------------

namespace {

long reduced_dim(int d, int k)
{
    long dim = d;
    for (int t = 0; t < k; ++t)
        dim *= d - 1;
    return dim;
}

// reduced basis: slot 0 free, slots 1..k in 1..d-1
long reduced_encode(const std::vector<int>& slots, int d)
{
    long index = slots[0];
    for (std::size_t t = 1; t < slots.size(); ++t)
        index = index * (d - 1) + (slots[t] - 1);
    return index;
}

std::vector<int> reduced_decode(long index, int d, int slots)
{
    std::vector<int> out(static_cast<std::size_t>(slots));
    for (int t = slots - 1; t >= 1; --t) {
        out[static_cast<std::size_t>(t)] = static_cast<int>(index % (d - 1)) + 1;
        index /= d - 1;
    }
    out[0] = static_cast<int>(index);
    return out;
}

bool is_degenerate(const std::vector<int>& slots)
{
    for (std::size_t t = 1; t < slots.size(); ++t)
        if (slots[t] == 0)
            return true;
    return false;
}

RationalMatrix reduced_boundary(const FiniteAlgebra& a, int k)
{
    const int d = a.dim();
    RationalMatrix out(static_cast<int>(reduced_dim(d, k - 1)), static_cast<int>(reduced_dim(d, k)));
    for (long col = 0; col < reduced_dim(d, k); ++col) {
        auto slots = reduced_decode(col, d, k + 1);
        auto face = [&](std::vector<int> image, const std::vector<Rational>& prod, int slot,
                        const Rational& sign) {
            for (int m = 0; m < d; ++m)
                if (prod[static_cast<std::size_t>(m)] != 0) {
                    image[static_cast<std::size_t>(slot)] = m;
                    if (!is_degenerate(image))
                        out.add_to(static_cast<int>(reduced_encode(image, d)), static_cast<int>(col),
                                   sign * prod[static_cast<std::size_t>(m)]);
                }
        };
        for (int j = 0; j < k; ++j) {
            std::vector<int> image(slots);
            image.erase(image.begin() + j + 1);
            face(image, a.product(slots[static_cast<std::size_t>(j)], slots[static_cast<std::size_t>(j + 1)]),
                 j, (j % 2 == 0) ? 1 : -1);
        }
        std::vector<int> image(slots.begin(), slots.end() - 1);
        face(image, a.product(slots[static_cast<std::size_t>(k)], slots[0]), 0,
             (k % 2 == 0) ? 1 : -1);
    }
    return out;
}

} // namespace

GradedComplex reduced_complex(const FiniteAlgebra& a, int max_degree)
{
    GradedComplex c;
    c.dir = Direction::chain;
    c.lo = 0;
    c.hi = max_degree;
    for (int k = 0; k <= max_degree; ++k)
        c.dims.push_back(static_cast<int>(reduced_dim(a.dim(), k)));
    for (int k = 1; k <= max_degree; ++k)
        c.diff[k] = reduced_boundary(a, k);
    return c;
}

std::map<int, long> reduced_hh_betti(const FiniteAlgebra& a, int max_degree)
{
    std::vector<long> ranks(static_cast<std::size_t>(max_degree + 1), 0);
    for (int k = 1; k <= max_degree; ++k)
        ranks[static_cast<std::size_t>(k)] = rank(reduced_boundary(a, k));
    std::map<int, long> out;
    for (int k = 0; k < max_degree; ++k)
        out[k] = reduced_dim(a.dim(), k) - ranks[static_cast<std::size_t>(k)] -
                 ranks[static_cast<std::size_t>(k + 1)];
    return out;
}

// ---- mixed complexes --------------------------------------------------

int MixedComplex::dim(int k) const
{
    if (k < 0 || k > hi)
        return 0;
    return dims[static_cast<std::size_t>(k)];
}

const RationalMatrix& MixedComplex::b_at(int k) const
{
    auto it = b.find(k);
    if (it == b.end())
        throw std::out_of_range("no b in degree " + std::to_string(k));
    return it->second;
}

const RationalMatrix& MixedComplex::B_at(int k) const
{
    auto it = B.find(k);
    if (it == B.end())
        throw std::out_of_range("no B in degree " + std::to_string(k));
    return it->second;
}

void MixedComplex::validate() const
{
    for (int k = 1; k <= hi; ++k) {
        if (b_at(k).cols() != dim(k) || b_at(k).rows() != dim(k - 1))
            throw std::logic_error("b shape mismatch in degree " + std::to_string(k));
        if (k >= 2 && !(b_at(k - 1) * b_at(k)).is_zero())
            throw std::logic_error("b² != 0 in degree " + std::to_string(k));
    }
    for (int k = 0; k < hi; ++k) {
        if (B_at(k).cols() != dim(k) || B_at(k).rows() != dim(k + 1))
            throw std::logic_error("B shape mismatch in degree " + std::to_string(k));
        if (k + 1 < hi && !(B_at(k + 1) * B_at(k)).is_zero())
            throw std::logic_error("B² != 0 in degree " + std::to_string(k));
    }
    for (int k = 1; k < hi; ++k)
        if (!(B_at(k - 1) * b_at(k) + b_at(k + 1) * B_at(k)).is_zero())
            throw std::logic_error("bB + Bb != 0 in degree " + std::to_string(k));
}

MixedComplex mixed_from_algebra(const FiniteAlgebra& a, int max_degree)
{
    if (max_degree < 2)
        throw std::invalid_argument("mixed complex truncation must be >= 2");
    MixedComplex m;
    m.hi = max_degree;
    m.complete = false;
    for (int k = 0; k <= max_degree; ++k)
        m.dims.push_back(static_cast<int>(tensor_dim(a, k)));
    for (int k = 1; k <= max_degree; ++k)
        m.b[k] = hochschild_boundary(a, k);
    for (int k = 0; k < max_degree; ++k)
        m.B[k] = connes_B(a, k);
    m.validate();
    return m;
}

MixedComplex mixed_from_cochain(const GradedComplex& omega)
{
    if (omega.dir != Direction::cochain)
        throw std::invalid_argument("mixed_from_cochain expects a cochain complex");
    if (omega.lo != 0)
        throw std::invalid_argument("cochain complex must start in degree 0");
    omega.validate();
    MixedComplex m;
    m.hi = omega.hi;
    m.complete = true;
    m.dims = omega.dims;
    for (int k = 1; k <= m.hi; ++k)
        m.b[k] = RationalMatrix(m.dim(k - 1), m.dim(k));
    for (int k = 0; k < m.hi; ++k)
        m.B[k] = omega.differential(k);
    m.validate();
    return m;
}

// ---- bicomplex machinery ----------------------------------------------

namespace {

struct TotalDegree {
    std::vector<int> block_degree; // M-degree per u-power block
    std::vector<int> offset;
    int dim = 0;
};

TotalDegree total_degree(const MixedComplex& m, int k)
{
    TotalDegree t;
    for (int j = 0; 2 * j <= k; ++j) {
        int deg = k - 2 * j;
        if (deg > m.hi)
            continue;
        t.block_degree.push_back(deg);
        t.offset.push_back(t.dim);
        t.dim += m.dim(deg);
    }
    return t;
}

void place_block(RationalMatrix& target, const RationalMatrix& block, int row_off, int col_off)
{
    for (const auto& [rc, v] : block.entries())
        target.add_to(row_off + rc.first, col_off + rc.second, v);
}

RationalMatrix total_differential(const MixedComplex& m, int k)
{
    TotalDegree src = total_degree(m, k);
    TotalDegree dst = total_degree(m, k - 1);
    auto dst_offset_of_degree = [&](int deg) {
        for (std::size_t j = 0; j < dst.block_degree.size(); ++j)
            if (dst.block_degree[j] == deg)
                return dst.offset[j];
        return -1;
    };
    RationalMatrix d(dst.dim, src.dim);
    for (std::size_t j = 0; j < src.block_degree.size(); ++j) {
        const int deg = src.block_degree[j];
        if (deg >= 1) {
            int off = dst_offset_of_degree(deg - 1);
            if (off >= 0)
                place_block(d, m.b_at(deg), off, src.offset[j]);
        }
        // B lowers the u-power; the u^0 block (deg == k) has nowhere to go
        if (deg != k && deg < m.hi) {
            int off = dst_offset_of_degree(deg + 1);
            if (off >= 0)
                place_block(d, m.B_at(deg), off, src.offset[j]);
        }
    }
    return d;
}

/// Chain-level periodicity operator S : T_k -> T_{k-2} (drop the u^0 block).
RationalMatrix column_shift(const MixedComplex& m, int k)
{
    TotalDegree src = total_degree(m, k);
    TotalDegree dst = total_degree(m, k - 2);
    RationalMatrix s(dst.dim, src.dim);
    for (std::size_t j = 0; j < src.block_degree.size(); ++j) {
        const int deg = src.block_degree[j];
        if (deg == k)
            continue; // u^0 block is killed
        for (std::size_t jj = 0; jj < dst.block_degree.size(); ++jj)
            if (dst.block_degree[jj] == deg) {
                for (int t = 0; t < m.dim(deg); ++t)
                    s.set(dst.offset[jj] + t, src.offset[j] + t, 1);
                break;
            }
    }
    return s;
}

RationalMatrix cycle_matrix(const RationalMatrix& d)
{
    return matrix_from_columns(d.cols(), kernel_basis(d));
}

/// rank of the map induced on homology by the chain map F, given a cycle
/// basis Z of the source degree and boundaries Bnd in the target degree.
long rank_induced(const RationalMatrix& f, const RationalMatrix& z, const RationalMatrix& bnd)
{
    return rank(hcat(f * z, bnd)) - rank(bnd);
}

} // namespace

GradedComplex total_complex(const MixedComplex& m, int max_degree)
{
    GradedComplex c;
    c.dir = Direction::chain;
    c.lo = 0;
    c.hi = max_degree;
    for (int k = 0; k <= max_degree; ++k)
        c.dims.push_back(total_degree(m, k).dim);
    for (int k = 1; k <= max_degree; ++k)
        c.diff[k] = total_differential(m, k);
    return c;
}

std::map<int, long> cyclic_betti(const MixedComplex& m, int max_degree)
{
    std::vector<long> ranks(static_cast<std::size_t>(max_degree + 1), 0);
    for (int k = 1; k <= max_degree; ++k)
        ranks[static_cast<std::size_t>(k)] = rank(total_differential(m, k));
    std::map<int, long> out;
    for (int k = 0; k < max_degree; ++k)
        out[k] = total_degree(m, k).dim - ranks[static_cast<std::size_t>(k)] -
                 ranks[static_cast<std::size_t>(k + 1)];
    return out;
}

std::map<int, long> connes_quotient_cyclic(const FiniteAlgebra& a, int max_degree, int max_report)
{
    if (max_report > max_degree - 1)
        throw std::invalid_argument("reporting window exceeds the truncation");
    // relation spaces R_k = im(1 - τ) form a b-subcomplex; the quotient
    // homology only needs concatenated ranks
    std::vector<long> rel_rank(static_cast<std::size_t>(max_report + 2), 0);
    std::vector<RationalMatrix> rel(static_cast<std::size_t>(max_report + 2));
    for (int k = 0; k <= max_report + 1 && k <= max_degree; ++k) {
        RationalMatrix one_minus_tau =
            RationalMatrix::identity(static_cast<int>(tensor_dim(a, k))) - cyclic_operator(a, k);
        rel[static_cast<std::size_t>(k)] = one_minus_tau;
        rel_rank[static_cast<std::size_t>(k)] = rank(one_minus_tau);
    }
    std::vector<long> induced_rank(static_cast<std::size_t>(max_report + 2), 0);
    for (int k = 1; k <= max_report + 1; ++k)
        induced_rank[static_cast<std::size_t>(k)] =
            rank(hcat(hochschild_boundary(a, k), rel[static_cast<std::size_t>(k - 1)])) -
            rel_rank[static_cast<std::size_t>(k - 1)];
    std::map<int, long> out;
    for (int k = 0; k <= max_report; ++k)
        out[k] = tensor_dim(a, k) - rel_rank[static_cast<std::size_t>(k)] -
                 induced_rank[static_cast<std::size_t>(k)] -
                 induced_rank[static_cast<std::size_t>(k + 1)];
    return out;
}

PeriodicResult periodic_betti(const MixedComplex& m, int max_degree)
{
    PeriodicResult out;
    // a complete complex can be extended honestly; a truncation cannot
    const int limit = m.complete ? std::max(max_degree, m.hi + 6) : max_degree;
    std::ostringstream detail;
    for (int parity = 0; parity <= 1; ++parity) {
        std::vector<long> tower; // rank of induced S: HC_k -> HC_{k-2}, k ascending
        detail << (parity == 0 ? "even:" : " odd:");
        for (int k = 2 + parity; k <= limit; k += 2) {
            RationalMatrix z = cycle_matrix(total_differential(m, k));
            RationalMatrix bnd = k >= 3 ? total_differential(m, k - 1)
                                        : RationalMatrix(total_degree(m, k - 2).dim, 0);
            long r = rank_induced(column_shift(m, k), z, bnd);
            tower.push_back(r);
            detail << " " << r;
        }
        // stabilized means the last two ranks along the tower agree
        bool stable = tower.size() >= 2 && tower[tower.size() - 1] == tower[tower.size() - 2];
        long value = tower.empty() ? 0 : tower.back();
        if (parity == 0) {
            out.even = value;
            out.stabilized = stable;
        } else {
            out.odd = value;
            out.stabilized = out.stabilized && stable;
        }
    }
    out.detail = detail.str();
    return out;
}

SbiReport sbi_check(const MixedComplex& m, int max_degree)
{
    SbiReport rep;
    const int window = max_degree - 2;
    if (window < 0)
        throw std::invalid_argument("sbi_check needs max_degree >= 2");

    auto hh_dim = [&](int k) -> long {
        if (k < 0 || k > m.hi)
            return 0;
        long r_out = k >= 1 ? rank(m.b_at(k)) : 0;
        long r_in = k < m.hi ? rank(m.b_at(k + 1)) : 0;
        return m.dim(k) - r_out - r_in;
    };
    auto hc_dim = [&](int k) -> long {
        if (k < 0)
            return 0;
        long r_out = k >= 1 ? rank(total_differential(m, k)) : 0;
        long r_in = rank(total_differential(m, k + 1));
        return total_degree(m, k).dim - r_out - r_in;
    };
    auto hh_cycles = [&](int k) {
        if (k == 0)
            return RationalMatrix::identity(m.dim(0));
        if (k > m.hi)
            return RationalMatrix(0, 0); // C_k vanishes above hi
        return cycle_matrix(m.b_at(k));
    };
    auto hc_cycles = [&](int k) {
        if (k == 0)
            return RationalMatrix::identity(total_degree(m, 0).dim);
        return cycle_matrix(total_differential(m, k));
    };
    auto hh_boundaries = [&](int k) {
        if (k + 1 > m.hi)
            return RationalMatrix(m.dim(k), 0);
        return m.b_at(k + 1);
    };
    auto hc_boundaries = [&](int k) { return total_differential(m, k + 1); };
    auto inclusion = [&](int k) {
        TotalDegree t = total_degree(m, k);
        RationalMatrix inc(t.dim, m.dim(k));
        for (int i = 0; i < m.dim(k); ++i)
            inc.set(i, i, 1); // u^0 block sits first
        return inc;
    };
    // connecting map on cycles: z -> B(top block of z)
    auto connecting_on_cycles = [&](int k, const RationalMatrix& z) {
        RationalMatrix top(m.dim(k), z.cols());
        for (const auto& [rc, v] : z.entries())
            if (rc.first < m.dim(k))
                top.set(rc.first, rc.second, v);
        return m.B_at(k) * top;
    };

    auto rank_I = [&](int k) {
        if (k < 0)
            return 0L;
        return rank_induced(inclusion(k), hh_cycles(k), hc_boundaries(k));
    };
    auto rank_S = [&](int k) { // HC_k -> HC_{k-2}
        if (k < 2)
            return 0L;
        return rank_induced(column_shift(m, k), hc_cycles(k), hc_boundaries(k - 2));
    };
    auto rank_del = [&](int k) { // HC_k -> HH_{k+1}
        if (k < 0 || k + 1 > m.hi)
            return 0L;
        RationalMatrix z = hc_cycles(k);
        RationalMatrix image = connecting_on_cycles(k, z);
        return rank(hcat(image, hh_boundaries(k + 1))) - rank(hh_boundaries(k + 1));
    };

    auto push = [&](int degree, const std::string& at, long in, long out_r, long dim) {
        SbiNode node;
        node.degree = degree;
        node.at = at;
        node.rank_in = in;
        node.rank_out = out_r;
        node.dim = dim;
        node.exact = in + out_r == dim;
        rep.nodes.push_back(node);
    };

    for (int t = 0; t <= window; ++t) {
        push(t, "HC(I,S)", rank_I(t), rank_S(t), hc_dim(t));
        if (t + 2 <= max_degree)
            push(t, "HC(S,del)", rank_S(t + 2), rank_del(t), hc_dim(t));
        push(t, "HH(del,I)", rank_del(t - 1), rank_I(t), hh_dim(t));
    }
    rep.all_exact = true;
    for (const auto& n : rep.nodes)
        rep.all_exact = rep.all_exact && n.exact;
    return rep;
}

} // namespace ihx
