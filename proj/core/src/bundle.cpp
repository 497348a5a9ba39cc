#include "repstrata/bundle.hpp"

namespace repstrata {

long fiber_dim(const Representation& mprime, const std::vector<int>& d0) {
    const PresentationPtr& pres = mprime.presentation();
    const Quiver& q = pres->quiver();
    const FieldSpec& f = pres->field();
    if (static_cast<int>(d0.size()) != q.num_vertices())
        throw DimensionError("d0 must give one count per vertex");

    long total = 0;
    for (int a = 0; a < q.num_vertices(); ++a) {
        auto out = q.arrows_from(a);
        long na = 0;
        std::vector<int> widths;
        for (int arr : out) {
            int w = mprime.dim(q.vertex_index(q.arrows()[arr].to));
            widths.push_back(w);
            na += w;
        }
        std::vector<std::vector<Matrix>> grid;
        for (const auto& rel : pres->relations()) {
            if (pres->relation_source(rel) != a) continue;
            int height = mprime.dim(pres->relation_target(rel));
            std::vector<Matrix> row;
            for (std::size_t k = 0; k < out.size(); ++k) {
                Matrix blk(f, height, widths[k]);
                const std::string& arrowId = q.arrows()[out[k]].id;
                for (const auto& term : rel.terms) {
                    if (term.last != arrowId) continue;
                    blk = blk + mprime.act(term.prefix).scaled(term.coeff);
                }
                row.push_back(std::move(blk));
            }
            grid.push_back(std::move(row));
        }
        long rankB = 0;
        if (!grid.empty() && !out.empty()) rankB = rank(block_compose(grid));
        total += (na - rankB) * d0[a];
    }
    return total;
}

FiberReport fiber_constancy_probe(PresentationPtr pres, const Layering& fullLayering, int samples,
                                  std::uint64_t seed) {
    if (fullLayering.num_layers() < 2)
        throw DimensionError("need at least two layers (a top layer and a truncated part)");
    if (fullLayering.num_vertices() != pres->quiver().num_vertices())
        throw DimensionError("layering does not match the quiver");

    std::vector<int> d0 = fullLayering.layers[0];
    Layering sub;
    sub.layers.assign(fullLayering.layers.begin() + 1, fullLayering.layers.end());

    FiberReport report;
    report.samples = samples;
    report.seed = seed;

    std::optional<Representation> first;
    long first_fd = 0;
    for (int k = 0; k < samples; ++k) {
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(k)));
        Representation mp = sample_layered(pres, sub, rng, {});
        long fd = fiber_dim(mp, d0);
        report.fiber_dims[fd]++;
        if (!first) {
            first = mp;
            first_fd = fd;
        } else if (!report.witness && fd != first_fd) {
            FiberWitness w;
            w.sample_a = 0;
            w.sample_b = k;
            w.fiber_a = first_fd;
            w.fiber_b = fd;
            w.rep_a = first;
            w.rep_b = mp;
            report.witness = std::move(w);
        }
    }
    report.constant = report.fiber_dims.size() <= 1;
    return report;
}

} // namespace repstrata
