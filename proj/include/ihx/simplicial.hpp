#ifndef IHX_SIMPLICIAL_HPP
#define IHX_SIMPLICIAL_HPP

#include "ihx/graded.hpp"
#include "ihx/matrix.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace ihx {

using Vertex = int;

/// Nonempty strictly increasing vertex list; dimension = size - 1.
struct Simplex {
    std::vector<Vertex> vertices;

    Simplex() = default;
    /// Sorts and validates; throws on duplicates or emptiness.
    explicit Simplex(std::vector<Vertex> v);

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
    bool has_vertex(Vertex v) const;
    bool is_face_of(const Simplex& other) const;
    /// Codimension-1 faces in the alternating-sign order (drop vertex i).
    std::vector<Simplex> facets() const;
    /// All nonempty faces, including the simplex itself.
    std::vector<Simplex> all_faces() const;
    std::string str() const;

    auto operator<=>(const Simplex&) const = default;
};

/// Finite simplicial complex stored as the full face-closed simplex set.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    static SimplicialComplex from_maximal(const std::vector<Simplex>& maximal);

    void add_closed(const Simplex& s);
    bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }
    bool empty() const { return simplices_.empty(); }
    int dim() const;
    std::size_t size() const { return simplices_.size(); }

    /// Simplices of one dimension in lexicographic order (the canonical basis).
    std::vector<Simplex> simplices_of_dim(int d) const;
    const std::set<Simplex>& simplices() const { return simplices_; }
    std::set<Vertex> vertices() const;
    long euler_characteristic() const;
    /// True iff every simplex of `other` is a simplex here.
    bool contains_subcomplex(const SimplicialComplex& other) const;

private:
    std::set<Simplex> simplices_;
};

/// Matrix of ∂_i in canonical ordered bases; 1 <= i <= dim K.
RationalMatrix boundary_matrix(const SimplicialComplex& k, int i);
GradedComplex chain_complex(const SimplicialComplex& k);
/// Simplicial cochains: transposed boundaries, degree +1.
GradedComplex cochain_complex(const SimplicialComplex& k);
std::map<int, long> betti_numbers(const SimplicialComplex& k);

/// Throws std::invalid_argument if the apex already occurs in K.
SimplicialComplex cone(const SimplicialComplex& k, Vertex apex);
SimplicialComplex suspension(const SimplicialComplex& k, Vertex north, Vertex south);

struct Subdivision {
    SimplicialComplex complex;
    std::map<Vertex, Simplex> carrier; // new vertex -> the simplex it subdivides
};
Subdivision barycentric_subdivision(const SimplicialComplex& k);

struct PseudomanifoldReport {
    bool ok = false;
    std::vector<Simplex> not_in_top_simplex;       // dimensional homogeneity failures
    std::vector<std::pair<Simplex, int>> bad_ridges; // (n-1)-simplex with coface count != 2
};
PseudomanifoldReport is_pseudomanifold(const SimplicialComplex& k);

} // namespace ihx

#endif
