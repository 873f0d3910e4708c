#include "ihx/stratified.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ihx {

bool Perversity::valid_gm() const
{
    if (n() < 2)
        return false;
    if (values[0] != 0 || values[1] != 0 || values[2] != 0)
        return false;
    for (int j = 2; j < n(); ++j) {
        int step = (*this)[j + 1] - (*this)[j];
        if (step < 0 || step > 1)
            return false;
    }
    return true;
}

bool Perversity::leq(const Perversity& other) const
{
    if (n() != other.n())
        return false;
    for (int j = 0; j <= n(); ++j)
        if ((*this)[j] > other[j])
            return false;
    return true;
}

std::string Perversity::str() const
{
    std::ostringstream os;
    os << "(";
    for (int j = 0; j <= n(); ++j)
        os << (j ? "," : "") << (*this)[j];
    os << ")";
    return os.str();
}

Perversity zero_perversity(int n)
{
    if (n < 0)
        throw std::invalid_argument("negative ambient dimension");
    return Perversity{std::vector<int>(static_cast<std::size_t>(n + 1), 0)};
}

Perversity total_perversity(int n)
{
    if (n < 2)
        throw std::invalid_argument("total perversity needs n >= 2");
    Perversity t = zero_perversity(n);
    for (int j = 2; j <= n; ++j)
        t.values[static_cast<std::size_t>(j)] = j - 2;
    return t;
}

Perversity complement(const Perversity& p)
{
    Perversity t = total_perversity(p.n());
    for (int j = 0; j <= p.n(); ++j) {
        t.values[static_cast<std::size_t>(j)] -= p[j];
        if (t.values[static_cast<std::size_t>(j)] < 0)
            throw std::invalid_argument("perversity exceeds the total perversity at codimension " +
                                        std::to_string(j));
    }
    return t;
}

std::vector<Perversity> all_perversities(int n)
{
    std::vector<Perversity> out;
    if (n < 2)
        return out;
    out.push_back(zero_perversity(n));
    for (int j = 3; j <= n; ++j) {
        std::vector<Perversity> grown;
        for (auto& p : out)
            for (int step = 0; step <= 1; ++step) {
                Perversity q = p;
                q.values[static_cast<std::size_t>(j)] =
                    q.values[static_cast<std::size_t>(j - 1)] + step;
                // propagate minimal growth to the right so intermediate states stay valid
                for (int jj = j + 1; jj <= n; ++jj)
                    q.values[static_cast<std::size_t>(jj)] = q.values[static_cast<std::size_t>(jj - 1)];
                grown.push_back(std::move(q));
            }
        std::sort(grown.begin(), grown.end(),
                  [](const Perversity& a, const Perversity& b) { return a.values < b.values; });
        grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
        out = std::move(grown);
    }
    return out;
}

const SimplicialComplex& FilteredComplex::skeleton(int i) const
{
    static const SimplicialComplex empty;
    if (i < 0)
        return empty;
    if (i >= n)
        return ambient;
    return skeleta[static_cast<std::size_t>(i)];
}

void FilteredComplex::validate() const
{
    if (ambient.empty())
        throw std::invalid_argument("empty ambient complex");
    if (ambient.dim() != n)
        throw std::invalid_argument("ambient dimension does not match filtration dimension");
    if (static_cast<int>(skeleta.size()) != n)
        throw std::invalid_argument("expected skeleta X_0..X_{n-1}");
    for (int i = 0; i < n; ++i) {
        const SimplicialComplex& xi = skeleton(i);
        if (xi.dim() > i)
            throw std::invalid_argument("skeleton X_" + std::to_string(i) + " has dimension " +
                                        std::to_string(xi.dim()));
        if (!skeleton(i + 1).contains_subcomplex(xi))
            throw std::invalid_argument("skeleton nesting fails at X_" + std::to_string(i));
    }
    if (!ambient.contains_subcomplex(skeleton(n - 1)))
        throw std::invalid_argument("singular part not contained in the ambient complex");
}

bool FilteredComplex::has_codim_one_stratum() const
{
    if (n < 2)
        return !skeleton(n - 1).empty();
    return skeleton(n - 1).size() > skeleton(n - 2).size();
}

PseudomanifoldReport FilteredComplex::pseudomanifold_report() const
{
    return is_pseudomanifold(ambient);
}

FilteredComplex FilteredComplex::cone_over(const SimplicialComplex& link, Vertex apex)
{
    FilteredComplex f;
    f.ambient = cone(link, apex);
    f.n = f.ambient.dim();
    SimplicialComplex apex_only = SimplicialComplex::from_maximal({Simplex({apex})});
    f.skeleta.assign(static_cast<std::size_t>(f.n), apex_only);
    f.validate();
    return f;
}

FilteredComplex FilteredComplex::suspension_over(const SimplicialComplex& link, Vertex north,
                                                 Vertex south)
{
    FilteredComplex f;
    f.ambient = suspension(link, north, south);
    f.n = f.ambient.dim();
    SimplicialComplex poles =
        SimplicialComplex::from_maximal({Simplex({north}), Simplex({south})});
    f.skeleta.assign(static_cast<std::size_t>(f.n), poles);
    f.validate();
    return f;
}

FilteredComplex FilteredComplex::unstratified(const SimplicialComplex& k)
{
    FilteredComplex f;
    f.ambient = k;
    f.n = k.dim();
    f.skeleta.assign(static_cast<std::size_t>(f.n), SimplicialComplex{});
    f.validate();
    return f;
}

bool simplex_allowable(const Simplex& s, int i, const Perversity& p, const FilteredComplex& f)
{
    if (!f.ambient.contains(s))
        throw std::invalid_argument("simplex " + s.str() + " not in the ambient complex");
    if (p.n() != f.n)
        throw std::invalid_argument("perversity length does not match filtration dimension");
    for (int j = 2; j <= f.n; ++j) {
        const SimplicialComplex& skel = f.skeleton(f.n - j);
        if (skel.empty())
            continue; // vacuous condition
        int intersection_dim = -1; // stands for dim ∅ = -∞; any face raises it to >= 0
        bool met = false;
        for (const auto& face : s.all_faces())
            if (skel.contains(face)) {
                met = true;
                intersection_dim = std::max(intersection_dim, face.dim());
            }
        if (met && intersection_dim > i - j + p[j])
            return false;
    }
    return true;
}

int IntersectionComplex::dim(int i) const
{
    if (i < 0 || i > n)
        return 0;
    return basis[static_cast<std::size_t>(i)].cols();
}

void IntersectionComplex::validate() const
{
    for (int i = 1; i <= n; ++i) {
        const RationalMatrix& d = boundary[static_cast<std::size_t>(i)];
        if (d.cols() != dim(i) || d.rows() != dim(i - 1))
            throw std::logic_error("induced boundary shape mismatch in degree " + std::to_string(i));
        if (i >= 2 &&
            !(boundary[static_cast<std::size_t>(i - 1)] * d).is_zero())
            throw std::logic_error("induced d∘d != 0 in degree " + std::to_string(i));
    }
}

IntersectionComplex intersection_chain_complex(const FilteredComplex& f, const Perversity& p)
{
    f.validate();
    if (p.n() != f.n)
        throw std::invalid_argument("perversity length does not match filtration dimension");
    IntersectionComplex ic;
    ic.perversity = p;
    ic.n = f.n;
    ic.allowable.resize(static_cast<std::size_t>(ic.n + 1));
    ic.basis.resize(static_cast<std::size_t>(ic.n + 1));
    ic.boundary.resize(static_cast<std::size_t>(ic.n + 1));

    // allowability of each simplex, both in its own degree and one degree up
    // (a boundary simplex of an i-chain is tested against chain degree i-1,
    // which is its own dimension, so a single table per degree suffices)
    std::vector<std::vector<Simplex>> all(static_cast<std::size_t>(ic.n + 1));
    std::vector<std::vector<char>> ok(static_cast<std::size_t>(ic.n + 1));
    for (int i = 0; i <= ic.n; ++i) {
        all[static_cast<std::size_t>(i)] = f.ambient.simplices_of_dim(i);
        for (const auto& s : all[static_cast<std::size_t>(i)]) {
            bool a = simplex_allowable(s, i, p, f);
            ok[static_cast<std::size_t>(i)].push_back(a ? 1 : 0);
            if (a)
                ic.allowable[static_cast<std::size_t>(i)].push_back(s);
        }
    }

    for (int i = 0; i <= ic.n; ++i) {
        const auto& simplices = all[static_cast<std::size_t>(i)];
        const auto& flags = ok[static_cast<std::size_t>(i)];
        std::vector<int> allowed_cols;
        for (std::size_t c = 0; c < simplices.size(); ++c)
            if (flags[c])
                allowed_cols.push_back(static_cast<int>(c));
        const int ambient_dim = static_cast<int>(simplices.size());

        std::vector<std::vector<Rational>> members; // IC_i basis vectors, ambient coordinates
        if (i == 0) {
            for (int c : allowed_cols) {
                std::vector<Rational> v(static_cast<std::size_t>(ambient_dim));
                v[static_cast<std::size_t>(c)] = 1;
                members.push_back(std::move(v));
            }
        } else {
            RationalMatrix full = boundary_matrix(f.ambient, i);
            // rows: non-allowable (i-1)-simplices; cols: allowable i-simplices
            const auto& below_flags = ok[static_cast<std::size_t>(i - 1)];
            std::vector<int> bad_rows;
            for (std::size_t r = 0; r < below_flags.size(); ++r)
                if (!below_flags[r])
                    bad_rows.push_back(static_cast<int>(r));
            RationalMatrix restricted(static_cast<int>(bad_rows.size()),
                                      static_cast<int>(allowed_cols.size()));
            for (std::size_t rr = 0; rr < bad_rows.size(); ++rr)
                for (std::size_t cc = 0; cc < allowed_cols.size(); ++cc) {
                    const Rational& v = full.at(bad_rows[rr], allowed_cols[cc]);
                    if (v != 0)
                        restricted.set(static_cast<int>(rr), static_cast<int>(cc), v);
                }
            for (const auto& kvec : kernel_basis(restricted)) {
                std::vector<Rational> v(static_cast<std::size_t>(ambient_dim));
                for (std::size_t cc = 0; cc < allowed_cols.size(); ++cc)
                    v[static_cast<std::size_t>(allowed_cols[cc])] = kvec[cc];
                members.push_back(std::move(v));
            }
        }
        ic.basis[static_cast<std::size_t>(i)] = matrix_from_columns(ambient_dim, members);
    }

    for (int i = 1; i <= ic.n; ++i) {
        RationalMatrix image = boundary_matrix(f.ambient, i) * ic.basis[static_cast<std::size_t>(i)];
        // ∂(IC_i) lands in IC_{i-1}; express it in the chosen basis
        ic.boundary[static_cast<std::size_t>(i)] =
            solve_columns(ic.basis[static_cast<std::size_t>(i - 1)], image);
    }
    ic.validate();
    return ic;
}

std::map<int, long> intersection_betti(const IntersectionComplex& ic)
{
    std::map<int, long> out;
    for (int i = 0; i <= ic.n; ++i) {
        long r_out = (i >= 1) ? rank(ic.boundary[static_cast<std::size_t>(i)]) : 0;
        long r_in = (i < ic.n) ? rank(ic.boundary[static_cast<std::size_t>(i + 1)]) : 0;
        out[i] = ic.dim(i) - r_out - r_in;
    }
    return out;
}

std::map<int, long> intersection_betti(const FilteredComplex& f, const Perversity& p)
{
    return intersection_betti(intersection_chain_complex(f, p));
}

std::map<int, long> cone_formula_expected(const std::map<int, long>& link_betti, int n, int p_n)
{
    std::map<int, long> out;
    const int cutoff = n - p_n - 1; // H_i(L) survives for i < cutoff
    for (int i = 0; i <= n; ++i) {
        auto it = link_betti.find(i);
        out[i] = (i < cutoff && it != link_betti.end()) ? it->second : 0;
    }
    return out;
}

DualityReport duality_rank_check(const FilteredComplex& f, const Perversity& p)
{
    DualityReport rep;
    rep.p = p;
    auto pm = f.pseudomanifold_report();
    if (!pm.ok) {
        rep.note = "ambient complex is not a pseudomanifold; check skipped";
        return rep;
    }
    if (f.has_codim_one_stratum())
        rep.note = "warning: codimension-1 stratum present";
    rep.applicable = true;
    rep.q = complement(p);
    rep.ih_p = intersection_betti(f, p);
    rep.ih_q = intersection_betti(f, rep.q);
    rep.symmetric = true;
    for (int i = 0; i <= f.n; ++i)
        if (rep.ih_p.at(i) != rep.ih_q.at(f.n - i)) {
            rep.symmetric = false;
            rep.mismatched_degrees.push_back(i);
        }
    return rep;
}

} // namespace ihx
