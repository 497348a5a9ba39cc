#include "repstrata/sampler.hpp"

#include <algorithm>
#include <cmath>

namespace repstrata {

namespace {

Representation semisimple(PresentationPtr pres, const std::vector<int>& dims) {
    const Quiver& q = pres->quiver();
    std::vector<Matrix> mats;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int src = q.vertex_index(q.arrows()[a].from);
        int tgt = q.vertex_index(q.arrows()[a].to);
        mats.push_back(Matrix(pres->field(), dims[tgt], dims[src]));
    }
    return Representation::make(pres, dims, std::move(mats));
}

// relation kernel at the extension step: per start vertex a, the block
// matrix (c_ij * g_ij(M')) with one column band per arrow out of a
Matrix relation_block(const Representation& sub, int vertex) {
    const PresentationPtr& pres = sub.presentation();
    const Quiver& q = pres->quiver();
    const FieldSpec& f = pres->field();
    auto out_arrows = q.arrows_from(vertex);
    std::vector<int> widths;
    for (int a : out_arrows) widths.push_back(sub.dim(q.vertex_index(q.arrows()[a].to)));
    std::vector<std::vector<Matrix>> grid;
    for (const auto& rel : pres->relations()) {
        if (pres->relation_source(rel) != vertex) continue;
        int height = sub.dim(pres->relation_target(rel));
        std::vector<Matrix> row;
        for (std::size_t k = 0; k < out_arrows.size(); ++k) {
            Matrix blk(f, height, widths[k]);
            const std::string& arrowId = q.arrows()[out_arrows[k]].id;
            for (const auto& term : rel.terms) {
                if (term.last != arrowId) continue;
                blk = blk + sub.act(term.prefix).scaled(term.coeff);
            }
            row.push_back(std::move(blk));
        }
        grid.push_back(std::move(row));
    }
    int total_width = 0;
    for (int w : widths) total_width += w;
    if (grid.empty()) return Matrix(f, 0, total_width);
    return block_compose(grid);
}

// one extension: add a new top layer of the given per-vertex dimensions
std::optional<Representation> extend_once(const Representation& sub,
                                          const std::vector<int>& newLayer,
                                          const std::vector<int>& imageTarget, Rng& rng,
                                          int innerBudget) {
    const PresentationPtr& pres = sub.presentation();
    const Quiver& q = pres->quiver();
    const FieldSpec& f = pres->field();
    const int nv = q.num_vertices();

    std::vector<Matrix> kernels;
    std::vector<std::vector<int>> outArrows(nv);
    for (int v = 0; v < nv; ++v) {
        outArrows[v] = q.arrows_from(v);
        kernels.push_back(kernel_basis(relation_block(sub, v)));
    }

    for (int attempt = 0; attempt < innerBudget; ++attempt) {
        // draw the new column blocks from the relation kernel
        std::vector<Matrix> N(q.num_arrows(), Matrix(f, 0, 0));
        for (int v = 0; v < nv; ++v) {
            std::vector<int> heights;
            int total = 0;
            for (int a : outArrows[v]) {
                int h = sub.dim(q.vertex_index(q.arrows()[a].to));
                heights.push_back(h);
                total += h;
            }
            Matrix stackedCols(f, total, newLayer[v]);
            for (int c = 0; c < newLayer[v]; ++c) {
                Matrix col = kernels[v] * random_matrix(f, kernels[v].cols(), 1, rng);
                for (int r = 0; r < total; ++r) stackedCols.set(r, c, col.at(r, 0));
            }
            int off = 0;
            for (std::size_t k = 0; k < outArrows[v].size(); ++k) {
                N[outArrows[v][k]] = stackedCols.submatrix(off, 0, heights[k], newLayer[v]);
                off += heights[k];
            }
        }

        // image condition for the layer below the new top one
        bool ok = true;
        for (int v = 0; v < nv && ok; ++v) {
            if (imageTarget[v] == 0) continue;
            std::vector<Matrix> tops;
            for (int a : q.arrows_into(v)) {
                const Matrix& Nf = N[a];
                if (Nf.cols() == 0) continue;
                tops.push_back(Nf.submatrix(Nf.rows() - imageTarget[v], 0, imageTarget[v], Nf.cols()));
            }
            int got = tops.empty() ? 0 : rank(hstack(tops));
            if (got != imageTarget[v]) ok = false;
        }
        if (!ok) continue;

        std::vector<int> dims(nv);
        for (int v = 0; v < nv; ++v) dims[v] = sub.dim(v) + newLayer[v];
        std::vector<Matrix> mats;
        for (int a = 0; a < q.num_arrows(); ++a) {
            int src = q.vertex_index(q.arrows()[a].from);
            int tgt = q.vertex_index(q.arrows()[a].to);
            Matrix z1(f, newLayer[tgt], sub.dim(src));
            Matrix z2(f, newLayer[tgt], newLayer[src]);
            mats.push_back(block_compose({{sub.matrix(a), N[a]}, {z1, z2}}));
        }
        return Representation::make_unchecked(pres, std::move(dims), std::move(mats));
    }
    return std::nullopt;
}

} // namespace

Representation sample_layered(PresentationPtr pres, const Layering& layering, Rng& rng,
                              const SampleBudget& budget) {
    const Quiver& q = pres->quiver();
    const int nv = q.num_vertices();
    const int m = pres->truncation();
    if (layering.num_layers() > m)
        throw DimensionError("layering longer than the truncation length");
    if (layering.num_layers() == 0 || layering.num_vertices() != nv)
        throw DimensionError("layering shape does not match the quiver");

    const int L = layering.num_layers();
    Layering padded = layering;
    while (padded.num_layers() < m) padded.layers.push_back(std::vector<int>(nv, 0));

    for (int round = 0; round < budget.outer; ++round) {
        Representation cur = semisimple(pres, layering.layers[L - 1]);
        bool ok = true;
        for (int i = L - 2; i >= 0 && ok; --i) {
            auto next = extend_once(cur, layering.layers[i], layering.layers[i + 1], rng,
                                    budget.inner);
            if (!next) {
                ok = false;
                break;
            }
            cur = std::move(*next);
        }
        if (!ok) continue;
        std::vector<Matrix> mats;
        for (int a = 0; a < q.num_arrows(); ++a) mats.push_back(cur.matrix(a));
        Representation result = Representation::make(pres, cur.dims(), std::move(mats));
        if (raddim(result) == padded) return result;
    }
    throw SearchError("sample_layered: budget exhausted for layering " + layering.str());
}

Representation sample_with_radlayering(int n, const DimVec3& d, FieldSpec field,
                                       std::uint64_t seed, int retryBudget) {
    if (!rad_nonempty(n, d))
        throw EmptyStratumError("stratum " + d.str() + " is empty (existence criterion fails)");
    Rng rng(seed);
    SampleBudget budget;
    budget.outer = retryBudget;
    return sample_layered(canonical_local(n, field), d.to_layering(), rng, budget);
}

EstimateReport estimate_generic(int n, const DimVec3& d, int samples, FieldSpec field,
                                std::uint64_t seed) {
    if (!rad_nonempty(n, d))
        throw EmptyStratumError("stratum " + d.str() + " is empty (existence criterion fails)");
    PresentationPtr pres = canonical_local(n, field);
    EstimateReport report;
    report.layering = d;
    report.seed = seed;
    report.h0_min = d.d0;
    report.h1_min = d.d1;

    std::vector<DimVec3> minimal;
    auto add_minimal = [&](const DimVec3& v) {
        for (const auto& mval : minimal)
            if (dominance_leq(mval, v)) return;
        std::vector<DimVec3> keep;
        for (const auto& mval : minimal)
            if (!dominance_leq(v, mval)) keep.push_back(mval);
        keep.push_back(v);
        minimal = std::move(keep);
    };

    int drawn = 0;
    auto run_batch = [&](int count) {
        for (int k = 0; k < count; ++k) {
            Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(drawn)));
            Representation rep = sample_layered(pres, d.to_layering(), rng, {});
            ++drawn;
            DimVec3 soc = DimVec3::from_layering(socdim(rep));
            report.histogram[soc]++;
            add_minimal(soc);
            // the sample is already in adapted block form
            std::vector<Matrix> Ablocks, Cblocks;
            for (int i = 0; i < n; ++i) {
                auto g = block_extract(rep.matrix(i), {d.d2, d.d1, d.d0}, {d.d2, d.d1, d.d0});
                Ablocks.push_back(g[0][1]);
                Cblocks.push_back(g[1][2]);
            }
            int h0 = d.d0 == 0 ? 0 : d.d0 - rank(vstack(Cblocks));
            int h1 = d.d1 == 0 ? 0 : d.d1 - rank(vstack(Ablocks));
            report.h0_min = std::min(report.h0_min, h0);
            report.h1_min = std::min(report.h1_min, h1);
        }
    };

    run_batch(samples);
    // incomparable minima: enlarge once before reporting the tie
    if (minimal.size() > 1) run_batch(samples);
    report.samples = drawn;
    report.minimal_set = minimal;
    report.ambiguous = minimal.size() > 1;
    std::sort(report.minimal_set.begin(), report.minimal_set.end());
    report.socdim_min = report.minimal_set.front();
    return report;
}

double brute_force_search_space(int n, int dtotal, std::int64_t p) {
    double total = 0;
    for (int d0 = 0; d0 <= dtotal; ++d0) {
        for (int d1 = 0; d1 + d0 <= dtotal; ++d1) {
            int d2 = dtotal - d0 - d1;
            double entries = static_cast<double>(n) * (static_cast<double>(d2) * d1 +
                                                       static_cast<double>(d1) * d0);
            total += std::pow(static_cast<double>(p), entries);
        }
    }
    return total;
}

std::vector<DimVec3> brute_force_layerings(int n, int dtotal, std::int64_t p,
                                           std::uint64_t budget) {
    if (dtotal < 0) throw ParameterError("need dtotal >= 0");
    FieldSpec field = FieldSpec::prime(p);
    double space = brute_force_search_space(n, dtotal, p);
    if (space > static_cast<double>(budget))
        throw BudgetError("brute force refused: search space " + std::to_string(space) +
                              " exceeds budget " + std::to_string(budget),
                          space);

    std::vector<DimVec3> found;
    for (int d0 = 0; d0 <= dtotal; ++d0) {
        for (int d1 = 0; d1 + d0 <= dtotal; ++d1) {
            int d2 = dtotal - d0 - d1;
            DimVec3 d{d0, d1, d2};
            const int nA = n * d2 * d1;
            const int nC = n * d1 * d0;
            std::vector<std::int64_t> digits(nA + nC, 0);
            bool achieved = false;
            for (;;) {
                // decode digits into blocks
                std::vector<Matrix> A(n, Matrix(field, d2, d1)), C(n, Matrix(field, d1, d0));
                int t = 0;
                for (int i = 0; i < n; ++i)
                    for (int r = 0; r < d2; ++r)
                        for (int c = 0; c < d1; ++c) A[i].set(r, c, field.from_int(digits[t++]));
                for (int i = 0; i < n; ++i)
                    for (int r = 0; r < d1; ++r)
                        for (int c = 0; c < d0; ++c) C[i].set(r, c, field.from_int(digits[t++]));

                // relation sum A_i C_i = 0 and the two image conditions
                Matrix rel(field, d2, d0);
                for (int i = 0; i < n; ++i) rel = rel + A[i] * C[i];
                if (rel.is_zero() && (d2 == 0 || rank(hstack(A)) == d2) &&
                    (d1 == 0 || rank(hstack(C)) == d1)) {
                    achieved = true;
                    break;
                }

                // odometer
                int pos = 0;
                while (pos < nA + nC) {
                    if (++digits[pos] < p) break;
                    digits[pos] = 0;
                    ++pos;
                }
                if (pos == nA + nC) break;
            }
            if (achieved) found.push_back(d);
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

} // namespace repstrata
