#include "ihx/graded.hpp"
#include "ihx/matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace ihx {

namespace {
const Rational kZero{};
}

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols)
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("negative matrix dimension");
}

RationalMatrix RationalMatrix::identity(int n)
{
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

const Rational& RationalMatrix::at(int r, int c) const
{
    auto it = entries_.find({r, c});
    return it == entries_.end() ? kZero : it->second;
}

void RationalMatrix::set(int r, int c, Rational v)
{
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of range");
    if (v == 0)
        entries_.erase({r, c});
    else
        entries_[{r, c}] = std::move(v);
}

void RationalMatrix::add_to(int r, int c, const Rational& v)
{
    if (v == 0)
        return;
    auto [it, inserted] = entries_.try_emplace({r, c}, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0)
            entries_.erase(it);
    }
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("matrix product shape mismatch");
    // rhs grouped by row so the product walks each pair of matching entries once
    std::vector<std::vector<std::pair<int, const Rational*>>> rhs_rows(rhs.rows_);
    for (const auto& [rc, v] : rhs.entries_)
        rhs_rows[rc.first].emplace_back(rc.second, &v);
    RationalMatrix out(rows_, rhs.cols_);
    for (const auto& [rc, v] : entries_)
        for (const auto& [c2, v2] : rhs_rows[rc.second])
            out.add_to(rc.first, c2, v * *v2);
    return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    RationalMatrix out = *this;
    for (const auto& [rc, v] : rhs.entries_)
        out.add_to(rc.first, rc.second, v);
    return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    RationalMatrix out = *this;
    for (const auto& [rc, v] : rhs.entries_)
        out.add_to(rc.first, rc.second, -v);
    return out;
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix out(cols_, rows_);
    for (const auto& [rc, v] : entries_)
        out.set(rc.second, rc.first, v);
    return out;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const
{
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("matrix apply shape mismatch");
    std::vector<Rational> out(static_cast<std::size_t>(rows_));
    for (const auto& [rc, e] : entries_) {
        const Rational& x = v[static_cast<std::size_t>(rc.second)];
        if (x != 0)
            out[static_cast<std::size_t>(rc.first)] += e * x;
    }
    return out;
}

RationalMatrix hcat(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.rows() != b.rows())
        throw std::invalid_argument("hcat row mismatch");
    RationalMatrix out(a.rows(), a.cols() + b.cols());
    for (const auto& [rc, v] : a.entries())
        out.set(rc.first, rc.second, v);
    for (const auto& [rc, v] : b.entries())
        out.set(rc.first, a.cols() + rc.second, v);
    return out;
}

RationalMatrix matrix_from_columns(int rows, const std::vector<std::vector<Rational>>& cols)
{
    RationalMatrix out(rows, static_cast<int>(cols.size()));
    for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
        if (static_cast<int>(cols[static_cast<std::size_t>(c)].size()) != rows)
            throw std::invalid_argument("column length mismatch");
        for (int r = 0; r < rows; ++r)
            out.set(r, c, cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)]);
    }
    return out;
}

namespace {

// ---- dense fraction-free (Bareiss) rank -------------------------------

long rank_dense_bareiss(const RationalMatrix& m)
{
    const int nr = m.rows(), nc = m.cols();
    // clear denominators row by row; rank is unchanged
    std::vector<std::vector<Int>> a(static_cast<std::size_t>(nr),
                                    std::vector<Int>(static_cast<std::size_t>(nc)));
    std::vector<Int> row_lcm(static_cast<std::size_t>(nr), 1);
    for (const auto& [rc, v] : m.entries()) {
        Int d = rat_den(v);
        Int& l = row_lcm[static_cast<std::size_t>(rc.first)];
        l = l / gcd(l, d) * d;
    }
    for (const auto& [rc, v] : m.entries())
        a[static_cast<std::size_t>(rc.first)][static_cast<std::size_t>(rc.second)] =
            rat_num(v) * (row_lcm[static_cast<std::size_t>(rc.first)] / rat_den(v));

    Int prev = 1;
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        // pivot: least nonzero magnitude, ties by (row, col) lexicographic order
        int pivot = -1;
        for (int i = r; i < nr; ++i) {
            const Int& x = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            if (x == 0)
                continue;
            if (pivot < 0 || abs(x) < abs(a[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(c)]))
                pivot = i;
        }
        if (pivot < 0)
            continue;
        std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(pivot)]);
        const Int piv = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        for (int i = r + 1; i < nr; ++i) {
            const Int head = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            for (int j = c; j < nc; ++j) {
                Int& e = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                e = (piv * e - head * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]) / prev;
            }
        }
        prev = piv;
        ++r;
    }
    return r;
}

// ---- sparse exact rank ------------------------------------------------

struct SparseRows {
    std::vector<std::map<int, Rational>> rows;     // active working rows
    std::vector<std::set<int>> col_rows;           // col -> active rows touching it

    explicit SparseRows(const RationalMatrix& m)
        : rows(static_cast<std::size_t>(m.rows())), col_rows(static_cast<std::size_t>(m.cols()))
    {
        for (const auto& [rc, v] : m.entries()) {
            rows[static_cast<std::size_t>(rc.first)][rc.second] = v;
            col_rows[static_cast<std::size_t>(rc.second)].insert(rc.first);
        }
    }

    void drop_entry(int r, int c)
    {
        rows[static_cast<std::size_t>(r)].erase(c);
        col_rows[static_cast<std::size_t>(c)].erase(r);
    }

    void set_entry(int r, int c, Rational v)
    {
        if (v == 0) {
            drop_entry(r, c);
            return;
        }
        auto [it, inserted] = rows[static_cast<std::size_t>(r)].try_emplace(c, std::move(v));
        if (!inserted)
            it->second = std::move(v);
        else
            col_rows[static_cast<std::size_t>(c)].insert(r);
    }
};

long rank_sparse(const RationalMatrix& m)
{
    SparseRows s(m);
    long rk = 0;
    while (true) {
        // cheapest column first keeps fill-in low; ties resolved by index
        int pc = -1;
        std::size_t best = 0;
        for (int c = 0; c < m.cols(); ++c) {
            std::size_t n = s.col_rows[static_cast<std::size_t>(c)].size();
            if (n == 0)
                continue;
            if (pc < 0 || n < best) {
                pc = c;
                best = n;
            }
        }
        if (pc < 0)
            break;
        // within the column take the sparsest row, ties by index
        int pr = -1;
        std::size_t prn = 0;
        for (int r : s.col_rows[static_cast<std::size_t>(pc)]) {
            std::size_t n = s.rows[static_cast<std::size_t>(r)].size();
            if (pr < 0 || n < prn) {
                pr = r;
                prn = n;
            }
        }
        ++rk;
        auto pivot_row = std::move(s.rows[static_cast<std::size_t>(pr)]);
        const Rational piv = pivot_row.at(pc);
        for (const auto& [c, v] : pivot_row)
            s.col_rows[static_cast<std::size_t>(c)].erase(pr);
        s.rows[static_cast<std::size_t>(pr)].clear();
        auto victims = s.col_rows[static_cast<std::size_t>(pc)]; // copy: mutated below
        for (int r : victims) {
            const Rational factor = s.rows[static_cast<std::size_t>(r)].at(pc) / piv;
            for (const auto& [c, v] : pivot_row) {
                Rational cur = s.rows[static_cast<std::size_t>(r)].count(c)
                                   ? s.rows[static_cast<std::size_t>(r)].at(c)
                                   : Rational{};
                s.set_entry(r, c, cur - factor * v);
            }
        }
    }
    return rk;
}

// ---- reduced row echelon form (for kernels and solving) ---------------

struct Rref {
    std::vector<std::map<int, Rational>> rows; // one per pivot, in pivot-column order
    std::vector<int> pivot_cols;
};

// Pivot columns are scanned left to right, so the echelon form (and every
// basis derived from it) is deterministic.
Rref rref(const RationalMatrix& m, int pivot_col_limit = -1)
{
    if (pivot_col_limit < 0)
        pivot_col_limit = m.cols();
    SparseRows s(m);
    Rref out;
    std::vector<char> used(static_cast<std::size_t>(m.rows()), 0);
    for (int c = 0; c < pivot_col_limit; ++c) {
        int pr = -1;
        std::size_t prn = 0;
        for (int r : s.col_rows[static_cast<std::size_t>(c)]) {
            if (used[static_cast<std::size_t>(r)])
                continue;
            std::size_t n = s.rows[static_cast<std::size_t>(r)].size();
            if (pr < 0 || n < prn) {
                pr = r;
                prn = n;
            }
        }
        if (pr < 0)
            continue;
        used[static_cast<std::size_t>(pr)] = 1;
        auto pivot_row = std::move(s.rows[static_cast<std::size_t>(pr)]);
        for (const auto& [cc, v] : pivot_row)
            s.col_rows[static_cast<std::size_t>(cc)].erase(pr);
        s.rows[static_cast<std::size_t>(pr)].clear();
        const Rational piv = pivot_row.at(c);
        for (auto& [cc, v] : pivot_row)
            v /= piv;
        // clear the column in every other active row
        auto victims = s.col_rows[static_cast<std::size_t>(c)];
        for (int r : victims) {
            const Rational factor = s.rows[static_cast<std::size_t>(r)].at(c);
            for (const auto& [cc, v] : pivot_row) {
                Rational cur = s.rows[static_cast<std::size_t>(r)].count(cc)
                                   ? s.rows[static_cast<std::size_t>(r)].at(cc)
                                   : Rational{};
                s.set_entry(r, cc, cur - factor * v);
            }
        }
        // and in previously extracted pivot rows
        for (auto& prow : out.rows) {
            auto it = prow.find(c);
            if (it == prow.end())
                continue;
            const Rational factor = it->second;
            for (const auto& [cc, v] : pivot_row) {
                auto jt = prow.find(cc);
                Rational cur = jt == prow.end() ? Rational{} : jt->second;
                cur -= factor * v;
                if (cur == 0)
                    prow.erase(cc);
                else
                    prow[cc] = std::move(cur);
            }
        }
        out.rows.push_back(std::move(pivot_row));
        out.pivot_cols.push_back(c);
    }
    // leftover nonzero rows outside the pivot-column window
    for (int r = 0; r < m.rows(); ++r)
        if (!used[static_cast<std::size_t>(r)] && !s.rows[static_cast<std::size_t>(r)].empty()) {
            out.rows.push_back(std::move(s.rows[static_cast<std::size_t>(r)]));
            out.pivot_cols.push_back(-1); // no pivot within the window
        }
    return out;
}

} // namespace

long rank(const RationalMatrix& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    if (m.rows() < 64 && m.cols() < 64)
        return rank_dense_bareiss(m);
    return rank_sparse(m);
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m)
{
    Rref e = rref(m);
    std::vector<int> pivot_of_col(static_cast<std::size_t>(m.cols()), -1);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
        pivot_of_col[static_cast<std::size_t>(e.pivot_cols[i])] = static_cast<int>(i);
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (pivot_of_col[static_cast<std::size_t>(f)] >= 0)
            continue;
        std::vector<Rational> v(static_cast<std::size_t>(m.cols()));
        v[static_cast<std::size_t>(f)] = 1;
        for (std::size_t i = 0; i < e.rows.size(); ++i) {
            auto it = e.rows[i].find(f);
            if (it != e.rows[i].end())
                v[static_cast<std::size_t>(e.pivot_cols[i])] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Int> smith_normal_form(const RationalMatrix& m)
{
    std::vector<std::vector<Int>> a(static_cast<std::size_t>(m.rows()),
                                    std::vector<Int>(static_cast<std::size_t>(m.cols())));
    for (const auto& [rc, v] : m.entries()) {
        if (rat_den(v) != 1)
            throw std::invalid_argument("smith_normal_form requires integral entries");
        a[static_cast<std::size_t>(rc.first)][static_cast<std::size_t>(rc.second)] = rat_num(v);
    }
    const int nr = m.rows(), nc = m.cols();
    std::vector<Int> divisors;
    int t = 0;
    while (t < nr && t < nc) {
        // find the nonzero entry of least magnitude in the remaining block
        int pr = -1, pc = -1;
        for (int i = t; i < nr; ++i)
            for (int j = t; j < nc; ++j) {
                const Int& x = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (x == 0)
                    continue;
                if (pr < 0 || abs(x) < abs(a[static_cast<std::size_t>(pr)][static_cast<std::size_t>(pc)])) {
                    pr = i;
                    pc = j;
                }
            }
        if (pr < 0)
            break;
        std::swap(a[static_cast<std::size_t>(t)], a[static_cast<std::size_t>(pr)]);
        for (int i = 0; i < nr; ++i)
            std::swap(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)],
                      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(pc)]);
        bool clean = true;
        for (int i = t + 1; i < nr; ++i) {
            Int q = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] /
                    a[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)];
            if (q != 0)
                for (int j = t; j < nc; ++j)
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                        q * a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] != 0)
                clean = false;
        }
        for (int j = t + 1; j < nc; ++j) {
            Int q = a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] /
                    a[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)];
            if (q != 0)
                for (int i = t; i < nr; ++i)
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                        q * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
            if (a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] != 0)
                clean = false;
        }
        if (!clean)
            continue; // smaller remainders appeared; repeat with a new pivot
        // divisibility fix-up: fold any non-multiple into the pivot's column
        bool redo = false;
        for (int i = t + 1; i < nr && !redo; ++i)
            for (int j = t + 1; j < nc && !redo; ++j)
                if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] %
                        a[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)] !=
                    0) {
                    for (int jj = t; jj < nc; ++jj)
                        a[static_cast<std::size_t>(t)][static_cast<std::size_t>(jj)] +=
                            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)];
                    redo = true;
                }
        if (redo)
            continue;
        divisors.push_back(abs(a[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)]));
        ++t;
    }
    return divisors;
}

RationalMatrix solve_columns(const RationalMatrix& a, const RationalMatrix& y)
{
    if (a.rows() != y.rows())
        throw std::invalid_argument("solve_columns row mismatch");
    Rref e = rref(hcat(a, y), a.cols());
    RationalMatrix x(a.cols(), y.cols());
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        if (e.pivot_cols[i] < 0) {
            if (!e.rows[i].empty())
                throw std::domain_error("solve_columns: inconsistent system");
            continue;
        }
        for (const auto& [c, v] : e.rows[i])
            if (c >= a.cols())
                x.set(e.pivot_cols[i], c - a.cols(), v);
    }
    return x;
}

bool in_column_span(const RationalMatrix& a, const std::vector<Rational>& v)
{
    RationalMatrix y = matrix_from_columns(a.rows(), {v});
    long base = rank(a);
    return rank(hcat(a, y)) == base;
}

// ---- graded complexes -------------------------------------------------

const RationalMatrix& GradedComplex::differential(int k) const
{
    auto it = diff.find(k);
    if (it == diff.end())
        throw std::out_of_range("no differential in degree " + std::to_string(k));
    return it->second;
}

void GradedComplex::validate() const
{
    if (hi < lo)
        throw std::invalid_argument("empty degree range");
    if (static_cast<int>(dims.size()) != hi - lo + 1)
        throw std::invalid_argument("dims length does not match degree range");
    const int step = dir == Direction::chain ? -1 : +1;
    const int first = dir == Direction::chain ? lo + 1 : lo;
    const int last = dir == Direction::chain ? hi : hi - 1;
    for (int k = first; k <= last; ++k) {
        const RationalMatrix& d = differential(k);
        if (d.cols() != dim(k) || d.rows() != dim(k + step))
            throw std::invalid_argument("differential shape mismatch in degree " + std::to_string(k));
    }
    if (dir == Direction::chain) {
        for (int k = lo + 2; k <= hi; ++k)
            if (!(differential(k - 1) * differential(k)).is_zero())
                throw std::invalid_argument("d∘d != 0 out of degree " + std::to_string(k));
    } else {
        for (int k = lo; k <= hi - 2; ++k)
            if (!(differential(k + 1) * differential(k)).is_zero())
                throw std::invalid_argument("d∘d != 0 out of degree " + std::to_string(k));
    }
}

std::map<int, long> betti(const GradedComplex& c)
{
    c.validate();
    std::map<int, long> out;
    for (int k = c.lo; k <= c.hi; ++k) {
        long cycles, boundaries;
        if (c.dir == Direction::chain) {
            long r_out = (k > c.lo) ? rank(c.differential(k)) : 0;
            long r_in = (k < c.hi) ? rank(c.differential(k + 1)) : 0;
            cycles = c.dim(k) - r_out;
            boundaries = r_in;
        } else {
            long r_out = (k < c.hi) ? rank(c.differential(k)) : 0;
            long r_in = (k > c.lo) ? rank(c.differential(k - 1)) : 0;
            cycles = c.dim(k) - r_out;
            boundaries = r_in;
        }
        out[k] = cycles - boundaries;
    }
    return out;
}

} // namespace ihx
