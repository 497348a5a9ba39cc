#include "repstrata/construct.hpp"

#include "repstrata/sampler.hpp"

namespace repstrata {

PresentationPtr canonical_local(int n, FieldSpec field) {
    return Presentation::local(n, Matrix::identity(field, n));
}

Representation assemble_local(PresentationPtr pres, const DimVec3& d, const std::vector<Matrix>& A,
                              const std::vector<Matrix>& B, const std::vector<Matrix>& C) {
    const int n = pres->local_n();
    const FieldSpec& f = pres->field();
    if (static_cast<int>(A.size()) != n || static_cast<int>(B.size()) != n ||
        static_cast<int>(C.size()) != n)
        throw DimensionError("need n-tuples of blocks");
    std::vector<Matrix> mats;
    for (int i = 0; i < n; ++i) {
        if (A[i].rows() != d.d2 || A[i].cols() != d.d1 || B[i].rows() != d.d2 ||
            B[i].cols() != d.d0 || C[i].rows() != d.d1 || C[i].cols() != d.d0)
            throw DimensionError("block shapes do not match the layering");
        Matrix z21(f, d.d1, d.d2), z31(f, d.d0, d.d2), z32(f, d.d0, d.d1);
        Matrix z22(f, d.d1, d.d1), z33(f, d.d0, d.d0), z11(f, d.d2, d.d2);
        mats.push_back(block_compose({{z11, A[i], B[i]}, {z21, z22, C[i]}, {z31, z32, z33}}));
    }
    return Representation::make(pres, {d.total()}, std::move(mats));
}

namespace {

// generator (1, m): A-part over role indices, A_r = e_r for r < m (m x 1)
std::vector<Matrix> dim1_A(int n, int m, const FieldSpec& f) {
    std::vector<Matrix> A(n, Matrix(f, m, 1));
    for (int r = 0; r < m; ++r) A[r].set(r, 0, f.one());
    return A;
}

// generator (1, m): C-part, one column; role m carries (1, 0, ..., 0)
std::vector<Matrix> dim1_C(int n, int m, const FieldSpec& f) {
    std::vector<Matrix> C(n, Matrix(f, 1, 1));
    C[m].set(0, 0, f.one());
    return C;
}

// generator (m, mn-1): A-part, (mn-1) x m per role. Roles 0..n-2 carry the
// identity block at row offset role*m; role n-1 carries the bottom-aligned
// identity at offset (n-1)*m - 1 plus corrections at rows (m+1)t + 1,
// column 0, for t = 0..m-3.
std::vector<Matrix> dimgt1_A(int n, int m, const FieldSpec& f) {
    const int rows = m * n - 1;
    std::vector<Matrix> A(n, Matrix(f, rows, m));
    for (int r = 0; r + 1 < n; ++r)
        for (int j = 0; j < m; ++j) A[r].set(r * m + j, j, f.one());
    const int off = (n - 1) * m - 1;
    for (int j = 0; j < m; ++j) A[n - 1].set(off + j, j, f.one());
    for (int t = 0; t + 3 <= m; ++t) A[n - 1].set((m + 1) * t + 1, 0, f.one());
    return A;
}

// generator (m, mn-1): C-part, one column of height m:
// row 0 <- -1 for role n-1; rows 1..m-2 <- roles 0..m-3; row m-1 <- role n-2
std::vector<Matrix> dimgt1_C(int n, int m, const FieldSpec& f) {
    std::vector<Matrix> C(n, Matrix(f, m, 1));
    C[n - 1].set(0, 0, f.neg(f.one()));
    for (int t = 0; t + 3 <= m; ++t) C[t].set(t + 1, 0, f.one());
    C[n - 2].set(m - 1, 0, f.one());
    return C;
}

Representation verify_raddim(Representation rep, const DimVec3& expect, const char* what) {
    DimVec3 got = DimVec3::from_layering(raddim(rep));
    if (got != expect)
        throw Error(std::string(what) + ": built layering " + got.str() + " instead of " +
                    expect.str());
    return rep;
}

} // namespace

Representation witness_dim1(int n, int m, int d0, FieldSpec field) {
    if (n < 2) throw ParameterError("need n >= 2");
    if (m < 0 || m >= n) throw ParameterError("need 0 <= m <= n-1 (no free generator index left)");
    if (d0 < 1) throw ParameterError("need d0 >= 1");
    PresentationPtr pres = canonical_local(n, field);
    std::vector<Matrix> A = dim1_A(n, m, field);
    std::vector<Matrix> C(n, Matrix(field, 1, d0));
    C[m].set(0, 0, field.one());
    std::vector<Matrix> B(n, Matrix(field, m, d0));
    return verify_raddim(assemble_local(pres, {d0, 1, m}, A, B, C), {d0, 1, m}, "witness_dim1");
}

Representation witness_dimgt1(int n, int m, int d0, FieldSpec field) {
    if (n < 2) throw ParameterError("need n >= 2");
    if (m < 2 || m > n) throw ParameterError("need 2 <= m <= n");
    if (d0 < 1) throw ParameterError("need d0 >= 1");
    PresentationPtr pres = canonical_local(n, field);
    std::vector<Matrix> A = dimgt1_A(n, m, field);
    std::vector<Matrix> Ccol = dimgt1_C(n, m, field);
    std::vector<Matrix> C;
    for (int i = 0; i < n; ++i) {
        Matrix c(field, m, d0);
        for (int r = 0; r < m; ++r) c.set(r, 0, Ccol[i].at(r, 0));
        C.push_back(std::move(c));
    }
    std::vector<Matrix> B(n, Matrix(field, m * n - 1, d0));
    DimVec3 d{d0, m, m * n - 1};
    return verify_raddim(assemble_local(pres, d, A, B, C), d, "witness_dimgt1");
}

Representation witness_exceptional(int n, int a, FieldSpec field) {
    if (n < 2) throw ParameterError("need n >= 2");
    if (a < 2) throw ParameterError("need a >= 2");
    PresentationPtr pres = canonical_local(n, field);
    const int copies = a - 1;
    const DimVec3 d{a, n * copies, (n * n - 1) * copies};

    std::vector<Matrix> P = dimgt1_A(n, n, field); // (n^2-1) x n
    std::vector<Matrix> Q = dimgt1_C(n, n, field); // n x 1

    std::vector<Matrix> A, B, C;
    for (int i = 0; i < n; ++i) {
        Matrix Ai(field, d.d2, d.d1);
        for (int c = 0; c < copies; ++c)
            for (int r = 0; r < n * n - 1; ++r)
                for (int j = 0; j < n; ++j)
                    Ai.set(c * (n * n - 1) + r, c * n + j, P[i].at(r, j));
        A.push_back(std::move(Ai));

        // row-group r hooks Q into column r+1
        Matrix Ci(field, d.d1, d.d0);
        for (int r = 0; r < copies; ++r)
            for (int k = 0; k < n; ++k) Ci.set(r * n + k, r + 1, Q[i].at(k, 0));
        C.push_back(std::move(Ci));
    }

    // first column of B: outside the joint column span of the A blocks
    Matrix stacked = vstack(A); // (n*d2) x d1
    Matrix span = colspace_basis(stacked);
    int pick = -1;
    for (int t = 0; t < n * d.d2; ++t) {
        Matrix e(field, n * d.d2, 1);
        e.set(t, 0, field.one());
        Matrix cand = span.cols() == 0 ? e : hstack({span, e});
        if (rank(cand) > span.cols()) {
            pick = t;
            break;
        }
    }
    if (pick < 0) throw Error("witness_exceptional: A blocks span everything");
    for (int i = 0; i < n; ++i) {
        Matrix Bi(field, d.d2, d.d0);
        if (pick >= i * d.d2 && pick < (i + 1) * d.d2) Bi.set(pick - i * d.d2, 0, field.one());
        B.push_back(std::move(Bi));
    }

    Representation rep =
        verify_raddim(assemble_local(pres, d, A, B, C), d, "witness_exceptional");
    DimVec3 soc = DimVec3::from_layering(socdim(rep));
    DimVec3 expect{(n * n - 1) * copies, n * copies + 1, copies};
    if (soc != expect)
        throw Error("witness_exceptional: socle layering " + soc.str() + " instead of " +
                    expect.str());
    return rep;
}

namespace {

struct GeneratorParts {
    std::vector<Matrix> A; // role-indexed, d2part x d1part
    std::vector<Matrix> C; // role-indexed, d1part x 1
    int d1part, d2part;
};

GeneratorParts generator_parts(int n, std::pair<int, int> gen, const FieldSpec& f) {
    if (gen.first == 1) {
        return {dim1_A(n, gen.second, f), dim1_C(n, gen.second, f), 1, gen.second};
    }
    return {dimgt1_A(n, gen.first, f), dimgt1_C(n, gen.first, f), gen.first,
            gen.first * n - 1};
}

std::vector<Matrix> rotate_roles(const std::vector<Matrix>& parts, int shift, int n) {
    std::vector<Matrix> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(parts[((i - shift) % n + n) % n]);
    return out;
}

} // namespace

Representation witness_any(int n, const DimVec3& d, FieldSpec field, std::uint64_t seed,
                           int retryBudget) {
    if (!rad_nonempty(n, d))
        throw EmptyStratumError("stratum " + d.str() + " is empty (existence criterion fails)");
    PresentationPtr pres = canonical_local(n, field);

    auto decomp = root_decompose(n, d.d1, d.d2);

    // block-diagonal A from rotated generator parts
    std::vector<Matrix> A(n, Matrix(field, 0, 0));
    std::vector<std::vector<Matrix>> summandC; // per summand, role-rotated, d1part x 1
    std::vector<int> rowOffsets;
    {
        std::vector<std::vector<Matrix>> perArrowBlocks(n);
        int off1 = 0;
        for (std::size_t j = 0; j < decomp.size(); ++j) {
            GeneratorParts parts = generator_parts(n, decomp[j], field);
            int shift = static_cast<int>(j) % n;
            auto Arot = rotate_roles(parts.A, shift, n);
            auto Crot = rotate_roles(parts.C, shift, n);
            for (int i = 0; i < n; ++i) perArrowBlocks[i].push_back(Arot[i]);
            summandC.push_back(std::move(Crot));
            rowOffsets.push_back(off1);
            off1 += parts.d1part;
        }
        for (int i = 0; i < n; ++i) {
            Matrix Ai(field, d.d2, d.d1);
            int r0 = 0, c0 = 0;
            for (const auto& blk : perArrowBlocks[i]) {
                for (int r = 0; r < blk.rows(); ++r)
                    for (int c = 0; c < blk.cols(); ++c) Ai.set(r0 + r, c0 + c, blk.at(r, c));
                r0 += blk.rows();
                c0 += blk.cols();
            }
            A[i] = std::move(Ai);
        }
    }

    auto attempt = [&](const std::vector<Matrix>& C,
                       const std::vector<Matrix>& B) -> std::optional<Representation> {
        // cheap screens before the full build
        if (d.d1 > 0 && rank(hstack(C)) != d.d1) return std::nullopt;
        Representation rep = assemble_local(pres, d, A, B, C);
        if (DimVec3::from_layering(raddim(rep)) != d) return std::nullopt;
        return rep;
    };

    // deterministic shared-column assignment
    {
        std::vector<Matrix> C(n, Matrix(field, d.d1, d.d0));
        for (std::size_t j = 0; j < summandC.size(); ++j) {
            int col = d.d0 == 0 ? 0 : static_cast<int>(j) % d.d0;
            for (int i = 0; i < n; ++i)
                for (int r = 0; r < summandC[j][i].rows(); ++r)
                    C[i].set(rowOffsets[j] + r, col, summandC[j][i].at(r, 0));
        }
        std::vector<Matrix> B(n, Matrix(field, d.d2, d.d0));
        if (d.d1 == 0) {
            // semisimple or empty: nothing to search
            return assemble_local(pres, d, A, B, C);
        }
        if (auto rep = attempt(C, B)) return *rep;
    }

    // randomized C from the relation kernel of the structured A, B free
    const int structured = retryBudget - retryBudget / 2;
    Matrix K = kernel_basis(hstack(A));
    for (int t = 0; t < structured; ++t) {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t)));
        std::vector<Matrix> C(n, Matrix(field, d.d1, d.d0));
        for (int c = 0; c < d.d0; ++c) {
            Matrix coeff = random_matrix(field, K.cols(), 1, rng);
            Matrix col = K * coeff; // stacked (C_1; ...; C_n) column
            for (int i = 0; i < n; ++i)
                for (int r = 0; r < d.d1; ++r) C[i].set(r, c, col.at(i * d.d1 + r, 0));
        }
        std::vector<Matrix> B;
        for (int i = 0; i < n; ++i) B.push_back(random_matrix(field, d.d2, d.d0, rng));
        if (auto rep = attempt(C, B)) return *rep;
    }

    // some shapes admit no full-rank C over this particular block-diagonal
    // A; finish with fully random flags
    for (int t = structured; t < retryBudget; ++t) {
        Rng rng(Rng::derive(seed ^ 0x5ca1ab1eULL, static_cast<std::uint64_t>(t)));
        try {
            SampleBudget one{1, 8};
            return sample_layered(pres, d.to_layering(), rng, one);
        } catch (const SearchError&) {
            // keep trying until the budget runs out
        }
    }
    throw SearchError("witness_any(" + d.str() + "): retries exhausted (budget " +
                      std::to_string(retryBudget) + ", seed " + std::to_string(seed) + ")");
}

} // namespace repstrata
