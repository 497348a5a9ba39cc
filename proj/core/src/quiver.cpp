#include "repstrata/quiver.hpp"

#include <set>

namespace repstrata {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    std::set<std::string> vseen, aseen;
    for (const auto& v : vertices_)
        if (!vseen.insert(v).second) throw ParameterError("duplicate vertex id: " + v);
    for (const auto& a : arrows_) {
        if (!aseen.insert(a.id).second) throw ParameterError("duplicate arrow id: " + a.id);
        if (!vseen.count(a.from) || !vseen.count(a.to))
            throw ParameterError("arrow " + a.id + " references a missing vertex");
    }
}

int Quiver::vertex_index(const std::string& id) const {
    for (int i = 0; i < num_vertices(); ++i)
        if (vertices_[i] == id) return i;
    throw ParameterError("unknown vertex: " + id);
}

int Quiver::arrow_index(const std::string& id) const {
    for (int i = 0; i < num_arrows(); ++i)
        if (arrows_[i].id == id) return i;
    throw ParameterError("unknown arrow: " + id);
}

std::vector<int> Quiver::arrows_from(int vertex) const {
    std::vector<int> out;
    for (int i = 0; i < num_arrows(); ++i)
        if (vertex_index(arrows_[i].from) == vertex) out.push_back(i);
    return out;
}

std::vector<int> Quiver::arrows_into(int vertex) const {
    std::vector<int> out;
    for (int i = 0; i < num_arrows(); ++i)
        if (vertex_index(arrows_[i].to) == vertex) out.push_back(i);
    return out;
}

bool Quiver::operator==(const Quiver& o) const {
    if (vertices_ != o.vertices_ || arrows_.size() != o.arrows_.size()) return false;
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].id != o.arrows_[i].id || arrows_[i].from != o.arrows_[i].from ||
            arrows_[i].to != o.arrows_[i].to)
            return false;
    return true;
}

Presentation::Presentation(Quiver q, std::vector<Relation> rels, int m, FieldSpec f, int localN,
                           Matrix gram)
    : quiver_(std::move(q)), relations_(std::move(rels)), m_(m), field_(f), local_n_(localN),
      gram_(std::move(gram)) {
    validate();
}

int Presentation::local_n() const {
    if (!is_local()) throw ParameterError("not a local-family presentation");
    return local_n_;
}

const Matrix& Presentation::gram() const {
    if (!is_local()) throw ParameterError("not a local-family presentation");
    return gram_;
}

int Presentation::word_source(const std::vector<std::string>& word) const {
    if (word.empty()) throw ParameterError("empty word has no implicit source");
    return quiver_.vertex_index(quiver_.arrow(word.back()).from);
}

int Presentation::word_target(const std::vector<std::string>& word) const {
    if (word.empty()) throw ParameterError("empty word has no implicit target");
    return quiver_.vertex_index(quiver_.arrow(word.front()).to);
}

void Presentation::validate() const {
    if (m_ < 2) throw ParameterError("truncation length must be at least 2");
    for (const auto& rel : relations_) {
        if (rel.terms.empty()) throw ParameterError("relation with no terms");
        int src = -1, tgt = -1;
        for (const auto& term : rel.terms) {
            auto w = term.word();
            if (static_cast<int>(w.size()) < 2)
                throw ParameterError("relation term of degree < 2 (ideal must lie in paths of length >= 2)");
            // composability: source(w[i]) == target(w[i+1])
            for (std::size_t i = 0; i + 1 < w.size(); ++i) {
                const Arrow& left = quiver_.arrow(w[i]);
                const Arrow& right = quiver_.arrow(w[i + 1]);
                if (left.from != right.to)
                    throw ParameterError("non-composable relation term at " + w[i] + "*" + w[i + 1]);
            }
            int s = word_source(w), t = word_target(w);
            if (src < 0) {
                src = s;
                tgt = t;
            } else if (s != src || t != tgt) {
                throw ParameterError("relation is not homogeneous (terms with different endpoints)");
            }
        }
    }
}

int Presentation::relation_source(const Relation& r) const {
    return word_source(r.terms.front().word());
}

int Presentation::relation_target(const Relation& r) const {
    return word_target(r.terms.front().word());
}

std::shared_ptr<const Presentation> Presentation::local(int n, Matrix gram) {
    if (n < 2) throw ParameterError("local family needs n >= 2 generators");
    if (gram.rows() != n || gram.cols() != n)
        throw DimensionError("gram matrix must be n x n");
    const FieldSpec& f = gram.field();
    if (rank(gram) != n) throw DegeneracyError("gram matrix is degenerate (det = 0)");

    std::vector<std::string> vertices{"v"};
    std::vector<Arrow> arrows;
    for (int i = 1; i <= n; ++i) arrows.push_back({"x" + std::to_string(i), "v", "v"});

    // S = sum_ij a_ij x_i x_j, decomposed on the last letter:
    // S = sum_j (sum_i a_ij x_i) * x_j
    Relation s;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (gram.at(i, j).is_zero()) continue;
            s.terms.push_back(RelationTerm{gram.at(i, j),
                                           {"x" + std::to_string(i + 1)},
                                           "x" + std::to_string(j + 1)});
        }
    }
    return std::shared_ptr<const Presentation>(
        new Presentation(Quiver(std::move(vertices), std::move(arrows)), {std::move(s)}, 3, f, n,
                         std::move(gram)));
}

std::shared_ptr<const Presentation> Presentation::quiver_algebra(Quiver q,
                                                                 std::vector<Relation> relations,
                                                                 int truncation, FieldSpec field) {
    return std::shared_ptr<const Presentation>(new Presentation(
        std::move(q), std::move(relations), truncation, field, 0, Matrix(field, 0, 0)));
}

std::shared_ptr<const Presentation> Presentation::dual() const {
    if (quiver_.num_vertices() != 1)
        throw ParameterError("duality is only implemented for one-vertex presentations");
    if (is_local()) return Presentation::local(local_n_, gram_.transpose());
    std::vector<Relation> dual_rels;
    for (const auto& rel : relations_) {
        Relation dr;
        for (const auto& term : rel.terms) {
            auto w = term.word();
            std::vector<std::string> rev(w.rbegin(), w.rend());
            RelationTerm dt;
            dt.coeff = term.coeff;
            dt.last = rev.back();
            rev.pop_back();
            dt.prefix = std::move(rev);
            dr.terms.push_back(std::move(dt));
        }
        dual_rels.push_back(std::move(dr));
    }
    return quiver_algebra(quiver_, std::move(dual_rels), m_, field_);
}

bool Presentation::operator==(const Presentation& o) const {
    if (!(quiver_ == o.quiver_) || m_ != o.m_ || field_ != o.field_ || local_n_ != o.local_n_)
        return false;
    if (is_local() && gram_ != o.gram_) return false;
    if (relations_.size() != o.relations_.size()) return false;
    for (std::size_t i = 0; i < relations_.size(); ++i) {
        const auto& a = relations_[i].terms;
        const auto& b = o.relations_[i].terms;
        if (a.size() != b.size()) return false;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k].coeff != b[k].coeff || a[k].prefix != b[k].prefix || a[k].last != b[k].last)
                return false;
    }
    return true;
}

std::vector<Matrix> normalize_tuple(const Presentation& local, const std::vector<Matrix>& A) {
    const int n = local.local_n();
    if (static_cast<int>(A.size()) != n) throw DimensionError("tuple size must equal n");
    for (const auto& a : A)
        if (a.rows() != A[0].rows() || a.cols() != A[0].cols())
            throw DimensionError("tuple matrices must share dimensions");
    const Matrix& g = local.gram();
    std::vector<Matrix> out;
    out.reserve(n);
    for (int j = 0; j < n; ++j) {
        Matrix acc(A[0].field(), A[0].rows(), A[0].cols());
        for (int i = 0; i < n; ++i) acc = acc + A[i].scaled(g.at(i, j));
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<Matrix> denormalize_tuple(const Presentation& local, const std::vector<Matrix>& Ap) {
    const int n = local.local_n();
    if (static_cast<int>(Ap.size()) != n) throw DimensionError("tuple size must equal n");
    Matrix ginv = inverse(local.gram());
    std::vector<Matrix> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        // inverts A'_j = sum_i G(i,j) A_i, i.e. A_i = sum_j G^{-1}(j,i) A'_j
        Matrix acc(Ap[0].field(), Ap[0].rows(), Ap[0].cols());
        for (int j = 0; j < n; ++j) acc = acc + Ap[j].scaled(ginv.at(j, i));
        out.push_back(std::move(acc));
    }
    return out;
}

} // namespace repstrata
