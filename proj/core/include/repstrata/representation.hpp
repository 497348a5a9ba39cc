#pragma once

#include <optional>
#include <string>
#include <vector>

#include "repstrata/quiver.hpp"

namespace repstrata {

// A layering vector: layers[i][v] is the dimension contributed by layer i
// at vertex index v. Layer 0 is the top (M / rad M for radical layerings,
// soc M for socle layerings); deeper layers follow.
struct Layering {
    std::vector<std::vector<int>> layers;

    int num_layers() const { return static_cast<int>(layers.size()); }
    int num_vertices() const { return layers.empty() ? 0 : static_cast<int>(layers[0].size()); }
    int total(int vertex) const;
    int total_all() const;
    Layering reversed() const;

    // one-vertex convenience
    static Layering single(std::vector<int> perLayer);
    std::vector<int> single_values() const; // throws unless one vertex

    bool operator==(const Layering& o) const { return layers == o.layers; }
    bool operator!=(const Layering& o) const { return !(*this == o); }
    bool operator<(const Layering& o) const { return layers < o.layers; } // lexicographic
    std::string str() const;
};

// prefix-sum dominance order, per vertex; throws DimensionError on shape mismatch
bool dominance_leq(const Layering& u, const Layering& v);

class Representation;

struct CheckResult {
    bool ok;
    std::string witness; // offending relation or word when !ok
};

// A representation of a presentation: a matrix per arrow, of shape
// dim(target) x dim(source). The checked constructor rejects any tuple
// that fails a relation generator or a length-m word.
class Representation {
public:
    static Representation make(PresentationPtr pres, std::vector<int> dims,
                               std::vector<Matrix> arrowMatrices);
    // test fixture path: shapes validated, relations not
    static Representation make_unchecked(PresentationPtr pres, std::vector<int> dims,
                                         std::vector<Matrix> arrowMatrices);

    const PresentationPtr& presentation() const { return pres_; }
    const FieldSpec& field() const { return pres_->field(); }
    int dim(int vertex) const { return dims_.at(vertex); }
    const std::vector<int>& dims() const { return dims_; }
    int total_dim() const;
    const Matrix& matrix(int arrow) const { return mats_.at(arrow); }
    const Matrix& matrix(const std::string& arrowId) const;
    bool checked() const { return checked_; }

    // evaluates a composable word f1 f2 ... fk (fk acts first)
    Matrix act(const std::vector<std::string>& word) const;

    bool operator==(const Representation& o) const;

private:
    Representation(PresentationPtr p, std::vector<int> d, std::vector<Matrix> m, bool checked);
    void validate_shapes() const;

    PresentationPtr pres_;
    std::vector<int> dims_;
    std::vector<Matrix> mats_;
    bool checked_;
};

// A term c * path of a homogeneous element; empty paths carry their vertex.
struct PathTerm {
    Scalar coeff;
    std::vector<std::string> word;
    std::optional<std::string> vertex; // required when word is empty
};

Matrix evaluate_element(const Representation& rep, const std::vector<PathTerm>& terms);

// true iff every relation generator and every length-m word vanishes
CheckResult check_relations(const Representation& rep);

Layering raddim(const Representation& rep);
Layering socdim(const Representation& rep);

// conjugate by per-vertex invertible P: arrow matrices become
// P(target)^-1 * M * P(source)
Representation conjugate(const Representation& rep, const std::vector<Matrix>& P);

Representation direct_sum(const Representation& a, const Representation& b);

// one-vertex presentations only; raddim and socdim trade places exactly
Representation transpose_dual(const Representation& rep);

// Change of basis to the adapted flag: rad^i V(a) becomes the span of the
// first D_i(a) coordinates, deepest layer leftmost, so arrow matrices are
// strictly block upper triangular. For m = 3 the per-arrow blocks
//   [ 0 A B ]
//   [ 0 0 C ]
//   [ 0 0 0 ]
// are extracted with sizes (d2 | d1 | d0).
struct AdaptedRep {
    Representation base;
    Representation adapted;
    std::vector<Matrix> basis; // per vertex
    Layering layering;
    std::vector<Matrix> A, B, C; // per arrow; populated when the chain has 3 layers
};

AdaptedRep adapt_basis(const Representation& rep);

struct HInvariants {
    int h0;  // dim of the common kernel of the C blocks
    int h1;  // dim of the common kernel of the A blocks
    int h0p; // d1 - dim of the joint image of the A blocks
    int h1p; // d2 - dim of the joint image of the C blocks
};

HInvariants h_invariants(const AdaptedRep& arep); // one-vertex, m = 3

} // namespace repstrata
