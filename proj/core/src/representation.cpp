#include "repstrata/representation.hpp"

#include <algorithm>
#include <sstream>

namespace repstrata {

int Layering::total(int vertex) const {
    int t = 0;
    for (const auto& layer : layers) t += layer.at(vertex);
    return t;
}

int Layering::total_all() const {
    int t = 0;
    for (const auto& layer : layers)
        for (int v : layer) t += v;
    return t;
}

Layering Layering::reversed() const {
    Layering out = *this;
    std::reverse(out.layers.begin(), out.layers.end());
    return out;
}

Layering Layering::single(std::vector<int> perLayer) {
    Layering out;
    for (int v : perLayer) out.layers.push_back({v});
    return out;
}

std::vector<int> Layering::single_values() const {
    std::vector<int> out;
    for (const auto& layer : layers) {
        if (layer.size() != 1) throw DimensionError("layering is not single-vertex");
        out.push_back(layer[0]);
    }
    return out;
}

std::string Layering::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < num_layers(); ++i) {
        if (i) os << ",";
        if (num_vertices() == 1) {
            os << layers[i][0];
        } else {
            os << "[";
            for (int v = 0; v < num_vertices(); ++v) os << (v ? "," : "") << layers[i][v];
            os << "]";
        }
    }
    os << ")";
    return os.str();
}

bool dominance_leq(const Layering& u, const Layering& v) {
    if (u.num_layers() != v.num_layers() || u.num_vertices() != v.num_vertices())
        throw DimensionError("dominance comparison of mismatched layerings");
    for (int a = 0; a < u.num_vertices(); ++a) {
        int su = 0, sv = 0;
        for (int i = 0; i < u.num_layers(); ++i) {
            su += u.layers[i][a];
            sv += v.layers[i][a];
            if (su > sv) return false;
        }
    }
    return true;
}

Representation::Representation(PresentationPtr p, std::vector<int> d, std::vector<Matrix> m,
                               bool checked)
    : pres_(std::move(p)), dims_(std::move(d)), mats_(std::move(m)), checked_(checked) {
    validate_shapes();
}

void Representation::validate_shapes() const {
    const Quiver& q = pres_->quiver();
    if (static_cast<int>(dims_.size()) != q.num_vertices())
        throw DimensionError("dimension vector length does not match vertex count");
    for (int d : dims_)
        if (d < 0) throw DimensionError("negative vertex dimension");
    if (static_cast<int>(mats_.size()) != q.num_arrows())
        throw DimensionError("arrow matrix count does not match arrow count");
    for (int i = 0; i < q.num_arrows(); ++i) {
        const Arrow& a = q.arrows()[i];
        int src = q.vertex_index(a.from), tgt = q.vertex_index(a.to);
        const Matrix& m = mats_[i];
        if (m.field() != pres_->field()) throw FieldError("arrow matrix over the wrong field");
        if (m.rows() != dims_[tgt] || m.cols() != dims_[src])
            throw DimensionError("arrow " + a.id + " matrix shape " + std::to_string(m.rows()) +
                                 "x" + std::to_string(m.cols()) + " does not match dims");
    }
}

Representation Representation::make(PresentationPtr pres, std::vector<int> dims,
                                    std::vector<Matrix> mats) {
    Representation rep(std::move(pres), std::move(dims), std::move(mats), true);
    CheckResult chk = check_relations(rep);
    if (!chk.ok)
        throw InvalidRepresentationError("relations fail: " + chk.witness);
    return rep;
}

Representation Representation::make_unchecked(PresentationPtr pres, std::vector<int> dims,
                                              std::vector<Matrix> mats) {
    return Representation(std::move(pres), std::move(dims), std::move(mats), false);
}

int Representation::total_dim() const {
    int t = 0;
    for (int d : dims_) t += d;
    return t;
}

const Matrix& Representation::matrix(const std::string& arrowId) const {
    return mats_[pres_->quiver().arrow_index(arrowId)];
}

Matrix Representation::act(const std::vector<std::string>& word) const {
    if (word.empty()) throw ParameterError("act on empty word needs a vertex (use evaluate_element)");
    const Quiver& q = pres_->quiver();
    // fold right to left: fk acts first
    Matrix acc = mats_[q.arrow_index(word.back())];
    for (int i = static_cast<int>(word.size()) - 2; i >= 0; --i) {
        const Matrix& left = mats_[q.arrow_index(word[i])];
        if (left.cols() != acc.rows())
            throw DimensionError("non-composable word at " + word[i]);
        acc = left * acc;
    }
    return acc;
}

bool Representation::operator==(const Representation& o) const {
    return *pres_ == *o.pres_ && dims_ == o.dims_ && mats_ == o.mats_;
}

Matrix evaluate_element(const Representation& rep, const std::vector<PathTerm>& terms) {
    if (terms.empty()) throw ParameterError("empty element");
    const Quiver& q = rep.presentation()->quiver();
    int src = -1, tgt = -1;
    for (const auto& t : terms) {
        int s, e;
        if (t.word.empty()) {
            if (!t.vertex) throw ParameterError("length-0 path term needs an explicit vertex");
            s = e = q.vertex_index(*t.vertex);
        } else {
            for (std::size_t i = 0; i + 1 < t.word.size(); ++i)
                if (q.arrow(t.word[i]).from != q.arrow(t.word[i + 1]).to)
                    throw ParameterError("non-composable path at " + t.word[i]);
            s = rep.presentation()->word_source(t.word);
            e = rep.presentation()->word_target(t.word);
        }
        if (src < 0) {
            src = s;
            tgt = e;
        } else if (s != src || e != tgt) {
            throw ParameterError("element is not homogeneous");
        }
    }
    Matrix acc(rep.field(), rep.dim(tgt), rep.dim(src));
    for (const auto& t : terms) {
        Matrix val = t.word.empty() ? Matrix::identity(rep.field(), rep.dim(src)) : rep.act(t.word);
        acc = acc + val.scaled(t.coeff);
    }
    return acc;
}

namespace {

// all composable words of the given length (arrow indices, leftmost factor
// first), built by extending on the left
void enumerate_words(const Quiver& q, int length, std::vector<std::vector<int>>& out) {
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int a = 0; a < q.num_arrows(); ++a) {
            if (!current.empty() && q.arrows()[a].from != q.arrows()[current.front()].to) continue;
            current.insert(current.begin(), a);
            self(self, remaining - 1);
            current.erase(current.begin());
        }
    };
    rec(rec, length);
}

std::string word_str(const Quiver& q, const std::vector<int>& arrows) {
    std::string s;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        if (i) s += "*";
        s += q.arrows()[arrows[i]].id;
    }
    return s;
}

Matrix act_indices(const Representation& rep, const std::vector<int>& arrows) {
    Matrix acc = rep.matrix(arrows.back());
    for (int i = static_cast<int>(arrows.size()) - 2; i >= 0; --i)
        acc = rep.matrix(arrows[i]) * acc;
    return acc;
}

void expect_checked(const Representation& rep) {
    if (rep.checked()) return;
    CheckResult chk = check_relations(rep);
    if (!chk.ok) throw InvalidRepresentationError("relations fail: " + chk.witness);
}

} // namespace

CheckResult check_relations(const Representation& rep) {
    const PresentationPtr& pres = rep.presentation();
    const Quiver& q = pres->quiver();
    for (std::size_t i = 0; i < pres->relations().size(); ++i) {
        const Relation& rel = pres->relations()[i];
        std::vector<PathTerm> terms;
        for (const auto& t : rel.terms) terms.push_back(PathTerm{t.coeff, t.word(), std::nullopt});
        if (!evaluate_element(rep, terms).is_zero()) {
            std::string witness = pres->is_local() ? "S" : "relation #" + std::to_string(i);
            return {false, witness};
        }
    }
    std::vector<std::vector<int>> words;
    enumerate_words(q, pres->truncation(), words);
    for (const auto& w : words) {
        if (!act_indices(rep, w).is_zero()) return {false, word_str(q, w)};
    }
    return {true, ""};
}

namespace {

// column-span bases of the radical chain rad^0 >= rad^1 >= ... >= rad^m
std::vector<std::vector<Matrix>> radical_chain(const Representation& rep) {
    const Quiver& q = rep.presentation()->quiver();
    const FieldSpec& f = rep.field();
    const int m = rep.presentation()->truncation();
    std::vector<std::vector<Matrix>> chain;
    std::vector<Matrix> cur;
    for (int v = 0; v < q.num_vertices(); ++v) cur.push_back(Matrix::identity(f, rep.dim(v)));
    chain.push_back(cur);
    for (int i = 1; i <= m; ++i) {
        std::vector<Matrix> next;
        for (int v = 0; v < q.num_vertices(); ++v) {
            std::vector<Matrix> images;
            for (int a : q.arrows_into(v)) {
                int src = q.vertex_index(q.arrows()[a].from);
                images.push_back(rep.matrix(a) * cur[src]);
            }
            if (images.empty()) {
                next.push_back(Matrix(f, rep.dim(v), 0));
            } else {
                next.push_back(colspace_basis(hstack(images)));
            }
        }
        chain.push_back(next);
        cur = chain.back();
    }
    return chain;
}

} // namespace

Layering raddim(const Representation& rep) {
    expect_checked(rep);
    auto chain = radical_chain(rep);
    const int m = rep.presentation()->truncation();
    const int nv = rep.presentation()->quiver().num_vertices();
    for (int v = 0; v < nv; ++v)
        if (chain[m][v].cols() != 0)
            throw InvalidRepresentationError("radical chain does not terminate at length m");
    Layering out;
    for (int i = 0; i < m; ++i) {
        std::vector<int> layer(nv);
        for (int v = 0; v < nv; ++v) layer[v] = chain[i][v].cols() - chain[i + 1][v].cols();
        out.layers.push_back(std::move(layer));
    }
    return out;
}

Layering socdim(const Representation& rep) {
    expect_checked(rep);
    const Quiver& q = rep.presentation()->quiver();
    const FieldSpec& f = rep.field();
    const int m = rep.presentation()->truncation();
    const int nv = q.num_vertices();
    // soc^i(v) = common kernel of all length-i words starting at v
    std::vector<int> prev(nv, 0); // dims of soc^i, soc^0 = 0
    Layering out;
    for (int i = 1; i <= m; ++i) {
        std::vector<std::vector<int>> words;
        enumerate_words(q, i, words);
        std::vector<int> cur(nv);
        for (int v = 0; v < nv; ++v) {
            std::vector<Matrix> stack;
            for (const auto& w : words) {
                if (q.vertex_index(q.arrows()[w.back()].from) != v) continue;
                stack.push_back(act_indices(rep, w));
            }
            if (stack.empty()) {
                cur[v] = rep.dim(v);
            } else {
                cur[v] = rep.dim(v) - rank(vstack(stack));
            }
        }
        std::vector<int> layer(nv);
        for (int v = 0; v < nv; ++v) layer[v] = cur[v] - prev[v];
        out.layers.push_back(std::move(layer));
        prev = cur;
    }
    for (int v = 0; v < nv; ++v)
        if (prev[v] != rep.dim(v))
            throw InvalidRepresentationError("socle chain does not exhaust the module");
    return out;
}

Representation conjugate(const Representation& rep, const std::vector<Matrix>& P) {
    const Quiver& q = rep.presentation()->quiver();
    if (static_cast<int>(P.size()) != q.num_vertices())
        throw DimensionError("need one change of basis per vertex");
    std::vector<Matrix> inv;
    for (int v = 0; v < q.num_vertices(); ++v) {
        if (P[v].rows() != rep.dim(v) || P[v].cols() != rep.dim(v))
            throw DimensionError("change of basis shape mismatch");
        inv.push_back(inverse(P[v]));
    }
    std::vector<Matrix> mats;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int src = q.vertex_index(q.arrows()[a].from);
        int tgt = q.vertex_index(q.arrows()[a].to);
        mats.push_back(inv[tgt] * rep.matrix(a) * P[src]);
    }
    return Representation::make_unchecked(rep.presentation(), rep.dims(), std::move(mats));
}

Representation direct_sum(const Representation& a, const Representation& b) {
    if (!(*a.presentation() == *b.presentation()))
        throw ParameterError("direct sum needs a common presentation");
    const Quiver& q = a.presentation()->quiver();
    const FieldSpec& f = a.field();
    std::vector<int> dims(q.num_vertices());
    for (int v = 0; v < q.num_vertices(); ++v) dims[v] = a.dim(v) + b.dim(v);
    std::vector<Matrix> mats;
    for (int ar = 0; ar < q.num_arrows(); ++ar) {
        int src = q.vertex_index(q.arrows()[ar].from);
        int tgt = q.vertex_index(q.arrows()[ar].to);
        Matrix zl(f, a.dim(tgt), b.dim(src));
        Matrix zr(f, b.dim(tgt), a.dim(src));
        mats.push_back(block_compose({{a.matrix(ar), zl}, {zr, b.matrix(ar)}}));
    }
    return Representation::make_unchecked(a.presentation(), std::move(dims), std::move(mats));
}

Representation transpose_dual(const Representation& rep) {
    if (rep.presentation()->quiver().num_vertices() != 1)
        throw ParameterError("transpose duality needs a one-vertex presentation");
    PresentationPtr dual = rep.presentation()->dual();
    std::vector<Matrix> mats;
    for (int a = 0; a < rep.presentation()->quiver().num_arrows(); ++a)
        mats.push_back(rep.matrix(a).transpose());
    return Representation::make(dual, rep.dims(), std::move(mats));
}

AdaptedRep adapt_basis(const Representation& rep) {
    expect_checked(rep);
    const Quiver& q = rep.presentation()->quiver();
    const FieldSpec& f = rep.field();
    const int m = rep.presentation()->truncation();
    const int nv = q.num_vertices();
    auto chain = radical_chain(rep);

    // per vertex: collect a basis deepest layer first, completing each step
    // with the previous choice; finish with standard unit vectors
    std::vector<Matrix> basis;
    for (int v = 0; v < nv; ++v) {
        const int d = rep.dim(v);
        Matrix chosen(f, d, 0);
        auto try_add = [&](const Matrix& colvec) {
            Matrix cand = chosen.cols() == 0 ? colvec : hstack({chosen, colvec});
            if (rank(cand) > chosen.cols()) chosen = std::move(cand);
        };
        for (int i = m - 1; i >= 1; --i) {
            const Matrix& layer = chain[i][v];
            for (int j = 0; j < layer.cols(); ++j) try_add(layer.submatrix(0, j, d, 1));
        }
        for (int j = 0; j < d && chosen.cols() < d; ++j) {
            Matrix e(f, d, 1);
            e.set(j, 0, f.one());
            try_add(e);
        }
        basis.push_back(std::move(chosen));
    }

    Representation adapted = conjugate(rep, basis);
    Layering layering = raddim(rep);

    // sanity: conjugated matrices must be strictly block upper triangular
    // with respect to the (deepest-first) layer sizes
    for (int a = 0; a < q.num_arrows(); ++a) {
        int src = q.vertex_index(q.arrows()[a].from);
        int tgt = q.vertex_index(q.arrows()[a].to);
        const Matrix& mat = adapted.matrix(a);
        int roff = 0;
        for (int i = m - 1; i >= 0; --i) {
            int rsz = layering.layers[i][tgt];
            int coff = 0;
            for (int k = m - 1; k >= i; --k) { // blocks with target layer not deeper than source
                int csz = layering.layers[k][src];
                if (!mat.submatrix(roff, coff, rsz, csz).is_zero())
                    throw InvalidRepresentationError("adapted form is not strictly block upper triangular");
                coff += csz;
            }
            roff += rsz;
        }
    }

    AdaptedRep out{rep, adapted, basis, layering, {}, {}, {}};
    if (m == 3) {
        for (int a = 0; a < q.num_arrows(); ++a) {
            int src = q.vertex_index(q.arrows()[a].from);
            int tgt = q.vertex_index(q.arrows()[a].to);
            auto lay = [&](int i, int v) { return layering.layers[i][v]; };
            auto grid = block_extract(adapted.matrix(a), {lay(2, tgt), lay(1, tgt), lay(0, tgt)},
                                      {lay(2, src), lay(1, src), lay(0, src)});
            out.A.push_back(grid[0][1]);
            out.B.push_back(grid[0][2]);
            out.C.push_back(grid[1][2]);
        }
    }
    return out;
}

HInvariants h_invariants(const AdaptedRep& arep) {
    const PresentationPtr& pres = arep.base.presentation();
    if (pres->truncation() != 3) throw ParameterError("h-invariants need radical length 3");
    if (pres->quiver().num_vertices() != 1)
        throw ParameterError("h-invariants need a one-vertex presentation");
    auto vals = arep.layering.single_values();
    const int d0 = vals[0], d1 = vals[1], d2 = vals[2];
    HInvariants h{};
    h.h0 = arep.C.empty() ? d0 : d0 - rank(vstack(arep.C));
    h.h1 = arep.A.empty() ? d1 : d1 - rank(vstack(arep.A));
    h.h0p = arep.A.empty() ? d1 : d1 - rank(hstack(arep.A));
    h.h1p = arep.C.empty() ? d2 : d2 - rank(hstack(arep.C));
    return h;
}

} // namespace repstrata
