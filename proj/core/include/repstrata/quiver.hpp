#pragma once

#include <memory>
#include <string>
#include <vector>

#include "repstrata/matrix.hpp"

namespace repstrata {

// Word convention. A word [f1, f2, ..., fk] denotes the product
// f1*f2*...*fk, in which fk acts first; it is composable when
// source(f_i) == target(f_{i+1}) for all i, starts at source(fk) and ends
// at target(f1). A representation evaluates it as M(f1)*M(f2)*...*M(fk).

struct Arrow {
    std::string id;
    std::string from;
    std::string to;
};

class Quiver {
public:
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_arrows() const { return static_cast<int>(arrows_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    int vertex_index(const std::string& id) const; // throws ParameterError
    int arrow_index(const std::string& id) const;
    const Arrow& arrow(const std::string& id) const { return arrows_[arrow_index(id)]; }

    std::vector<int> arrows_from(int vertex) const;
    std::vector<int> arrows_into(int vertex) const;

    bool operator==(const Quiver& o) const;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

// One summand c * g * x of a relation generator: coefficient, prefix word
// g (possibly empty), and the last arrow x, which acts first.
struct RelationTerm {
    Scalar coeff;
    std::vector<std::string> prefix;
    std::string last;

    std::vector<std::string> word() const {
        std::vector<std::string> w = prefix;
        w.push_back(last);
        return w;
    }
};

struct Relation {
    std::vector<RelationTerm> terms;
};

// An algebra presentation: a quiver with homogeneous relation generators,
// truncated at radical length m (every path of length m is a relation).
// The local family k<x1..xn>/((x1..xn)^3 + (S)), S = sum a_ij x_i x_j with
// det(a_ij) != 0, is the one-vertex specialization with m = 3.
class Presentation {
public:
    static std::shared_ptr<const Presentation> local(int n, Matrix gram);
    static std::shared_ptr<const Presentation> quiver_algebra(Quiver q,
                                                              std::vector<Relation> relations,
                                                              int truncation, FieldSpec field);

    const Quiver& quiver() const { return quiver_; }
    const std::vector<Relation>& relations() const { return relations_; }
    int truncation() const { return m_; }
    const FieldSpec& field() const { return field_; }

    bool is_local() const { return local_n_ > 0; }
    int local_n() const;
    const Matrix& gram() const;

    // start/end vertex indices of a homogeneous relation
    int relation_source(const Relation& r) const;
    int relation_target(const Relation& r) const;

    int word_source(const std::vector<std::string>& word) const;
    int word_target(const std::vector<std::string>& word) const;

    // single-vertex only: relations reversed, gram transposed
    std::shared_ptr<const Presentation> dual() const;

    bool operator==(const Presentation& o) const;

private:
    Presentation(Quiver q, std::vector<Relation> rels, int m, FieldSpec f, int localN, Matrix gram);
    void validate() const;

    Quiver quiver_;
    std::vector<Relation> relations_;
    int m_;
    FieldSpec field_;
    int local_n_; // 0 when not the local family
    Matrix gram_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

// Substitution x_j -> sum_i gram(i,j) x_i realized on A-tuples: returns A'
// with A'_j = sum_i gram(i,j) A_i, so that sum_j A'_j C_j = 0 holds exactly
// when the S-relation sum_ij a_ij A_i C_j = 0 does.
std::vector<Matrix> normalize_tuple(const Presentation& local, const std::vector<Matrix>& A);
std::vector<Matrix> denormalize_tuple(const Presentation& local, const std::vector<Matrix>& Aprime);

} // namespace repstrata
