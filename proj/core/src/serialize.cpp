#include "repstrata/serialize.hpp"

namespace repstrata {

json field_to_json(const FieldSpec& f) {
    if (f.is_prime_field()) return json{{"p", f.modulus()}};
    return json{{"rationals", true}};
}

FieldSpec field_from_json(const json& j) {
    if (!j.is_object()) throw FormatError("field must be an object");
    if (j.contains("p")) return FieldSpec::prime(j.at("p").get<std::int64_t>());
    if (j.contains("rationals") && j.at("rationals").get<bool>()) return FieldSpec::rationals();
    throw FormatError("field must carry \"p\" or \"rationals\": " + j.dump());
}

json scalar_to_json(const FieldSpec& f, const Scalar& s) {
    if (f.is_prime_field()) return json(s.residue());
    const Rational& q = s.rational();
    if (boost::multiprecision::denominator(q) == 1)
        return json(boost::multiprecision::numerator(q).str());
    return json(q.str());
}

Scalar scalar_from_json(const FieldSpec& f, const json& j) {
    if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
    if (j.is_string()) {
        if (f.is_prime_field()) throw FormatError("prime-field entries must be integers");
        try {
            return f.from_rational(Rational(j.get<std::string>()));
        } catch (const std::exception&) {
            throw FormatError("bad rational literal: " + j.dump());
        }
    }
    throw FormatError("scalar must be an integer or a string: " + j.dump());
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int jj = 0; jj < m.cols(); ++jj) row.push_back(scalar_to_json(m.field(), m.at(i, jj)));
        rows.push_back(std::move(row));
    }
    json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["entries"] = std::move(rows);
    return out;
}

Matrix matrix_from_json(const FieldSpec& f, const json& j) {
    // either the explicit {"rows","cols","entries"} form or a bare entry grid
    const json* entries = nullptr;
    int r, c;
    if (j.is_object()) {
        r = j.at("rows").get<int>();
        c = j.at("cols").get<int>();
        entries = &j.at("entries");
    } else if (j.is_array()) {
        r = static_cast<int>(j.size());
        c = r == 0 ? 0 : static_cast<int>(j.at(0).size());
        entries = &j;
    } else {
        throw FormatError("matrix must be an object or an array of rows");
    }
    Matrix m(f, r, c);
    if (static_cast<int>(entries->size()) != r) throw FormatError("matrix row count mismatch");
    for (int i = 0; i < r; ++i) {
        const json& row = entries->at(i);
        if (static_cast<int>(row.size()) != c) throw FormatError("ragged matrix rows");
        for (int jj = 0; jj < c; ++jj) m.set(i, jj, scalar_from_json(f, row.at(jj)));
    }
    return m;
}

json presentation_to_json(const Presentation& p) {
    json out;
    out["field"] = field_to_json(p.field());
    if (p.is_local()) {
        out["kind"] = "local";
        out["n"] = p.local_n();
        json gram = json::array();
        for (int i = 0; i < p.local_n(); ++i) {
            json row = json::array();
            for (int j = 0; j < p.local_n(); ++j)
                row.push_back(scalar_to_json(p.field(), p.gram().at(i, j)));
            gram.push_back(std::move(row));
        }
        out["gram"] = std::move(gram);
        return out;
    }
    out["kind"] = "quiver";
    out["vertices"] = p.quiver().vertices();
    json arrows = json::array();
    for (const auto& a : p.quiver().arrows())
        arrows.push_back(json{{"id", a.id}, {"from", a.from}, {"to", a.to}});
    out["arrows"] = std::move(arrows);
    json rels = json::array();
    for (const auto& rel : p.relations()) {
        json terms = json::array();
        for (const auto& t : rel.terms)
            terms.push_back(json{{"c", scalar_to_json(p.field(), t.coeff)},
                                 {"g", t.prefix},
                                 {"x", t.last}});
        rels.push_back(json{{"terms", std::move(terms)}});
    }
    out["relations"] = std::move(rels);
    out["m"] = p.truncation();
    return out;
}

PresentationPtr presentation_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw FormatError("presentation needs a kind");
    FieldSpec f = field_from_json(j.at("field"));
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "local") {
        int n = j.at("n").get<int>();
        const json& g = j.at("gram");
        if (static_cast<int>(g.size()) != n) throw FormatError("gram size mismatch");
        Matrix gram(f, n, n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(g.at(i).size()) != n) throw FormatError("gram size mismatch");
            for (int c = 0; c < n; ++c) gram.set(i, c, scalar_from_json(f, g.at(i).at(c)));
        }
        return Presentation::local(n, std::move(gram));
    }
    if (kind != "quiver") throw FormatError("unknown presentation kind: " + kind);
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows"))
        arrows.push_back(Arrow{a.at("id").get<std::string>(), a.at("from").get<std::string>(),
                               a.at("to").get<std::string>()});
    std::vector<Relation> rels;
    for (const auto& rj : j.at("relations")) {
        Relation rel;
        for (const auto& tj : rj.at("terms")) {
            RelationTerm t;
            t.coeff = scalar_from_json(f, tj.at("c"));
            t.prefix = tj.at("g").get<std::vector<std::string>>();
            t.last = tj.at("x").get<std::string>();
            rel.terms.push_back(std::move(t));
        }
        rels.push_back(std::move(rel));
    }
    int m = j.at("m").get<int>();
    return Presentation::quiver_algebra(Quiver(std::move(vertices), std::move(arrows)),
                                        std::move(rels), m, f);
}

json representation_to_json(const Representation& r) {
    json out;
    out["presentation"] = presentation_to_json(*r.presentation());
    json dims = json::object();
    const Quiver& q = r.presentation()->quiver();
    for (int v = 0; v < q.num_vertices(); ++v) dims[q.vertices()[v]] = r.dim(v);
    out["dims"] = std::move(dims);
    json arrows = json::object();
    for (int a = 0; a < q.num_arrows(); ++a) {
        json rows = json::array();
        const Matrix& m = r.matrix(a);
        for (int i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.field(), m.at(i, c)));
            rows.push_back(std::move(row));
        }
        arrows[q.arrows()[a].id] = std::move(rows);
    }
    out["arrows"] = std::move(arrows);
    return out;
}

Representation representation_from_json(const json& j) {
    PresentationPtr pres = presentation_from_json(j.at("presentation"));
    const Quiver& q = pres->quiver();
    const FieldSpec& f = pres->field();
    std::vector<int> dims(q.num_vertices());
    for (int v = 0; v < q.num_vertices(); ++v)
        dims[v] = j.at("dims").at(q.vertices()[v]).get<int>();
    std::vector<Matrix> mats;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& arrow = q.arrows()[a];
        const json& rows = j.at("arrows").at(arrow.id);
        int tr = dims[q.vertex_index(arrow.to)];
        int tc = dims[q.vertex_index(arrow.from)];
        Matrix m(f, tr, tc);
        if (static_cast<int>(rows.size()) != tr) throw FormatError("arrow matrix row mismatch");
        for (int i = 0; i < tr; ++i) {
            if (static_cast<int>(rows.at(i).size()) != tc)
                throw FormatError("arrow matrix column mismatch");
            for (int c = 0; c < tc; ++c) m.set(i, c, scalar_from_json(f, rows.at(i).at(c)));
        }
        mats.push_back(std::move(m));
    }
    return Representation::make(std::move(pres), std::move(dims), std::move(mats));
}

json layering_to_json(const Layering& l) {
    if (l.num_vertices() == 1) {
        json out = json::array();
        for (const auto& layer : l.layers) out.push_back(layer[0]);
        return out;
    }
    json out = json::array();
    for (const auto& layer : l.layers) out.push_back(layer);
    return out;
}

Layering layering_from_json(const json& j) {
    Layering out;
    for (const auto& item : j) {
        if (item.is_number_integer()) out.layers.push_back({item.get<int>()});
        else out.layers.push_back(item.get<std::vector<int>>());
    }
    return out;
}

namespace {

json dimvec_to_json(const DimVec3& d) {
    return json::array({d.d0, d.d1, d.d2});
}

} // namespace

json component_report_to_json(const ComponentReport& r) {
    json out;
    out["n"] = r.n;
    out["d"] = r.d;
    json entries = json::array();
    for (const auto& e : r.entries) {
        json roots = json::array();
        for (const auto& g : e.root_witness) roots.push_back(json::array({g.first, g.second}));
        entries.push_back(json{{"layering", dimvec_to_json(e.layering)},
                               {"exceptional", e.exceptional},
                               {"genericSocdim", dimvec_to_json(e.generic_soc)},
                               {"h0", e.h0},
                               {"h1", e.h1},
                               {"rootWitness", std::move(roots)}});
    }
    out["entries"] = std::move(entries);
    out["warnings"] = r.warnings;
    return out;
}

json estimate_report_to_json(const EstimateReport& r) {
    json hist = json::array();
    for (const auto& [soc, count] : r.histogram)
        hist.push_back(json{{"socdim", dimvec_to_json(soc)}, {"count", count}});
    json out;
    out["layering"] = dimvec_to_json(r.layering);
    out["socdimMin"] = dimvec_to_json(r.socdim_min);
    out["h0Min"] = r.h0_min;
    out["h1Min"] = r.h1_min;
    out["histogram"] = std::move(hist);
    out["seed"] = r.seed;
    out["samples"] = r.samples;
    out["ambiguous"] = r.ambiguous;
    return out;
}

json fiber_report_to_json(const FiberReport& r) {
    json dims = json::array();
    for (const auto& [value, count] : r.fiber_dims)
        dims.push_back(json{{"value", value}, {"count", count}});
    json out;
    out["samples"] = r.samples;
    out["fiberDims"] = std::move(dims);
    out["constant"] = r.constant;
    out["seed"] = r.seed;
    if (r.witness) {
        json w;
        w["sampleA"] = r.witness->sample_a;
        w["sampleB"] = r.witness->sample_b;
        w["fiberA"] = r.witness->fiber_a;
        w["fiberB"] = r.witness->fiber_b;
        if (r.witness->rep_a) w["repA"] = representation_to_json(*r.witness->rep_a);
        if (r.witness->rep_b) w["repB"] = representation_to_json(*r.witness->rep_b);
        out["witnessPair"] = std::move(w);
    } else {
        out["witnessPair"] = nullptr;
    }
    return out;
}

std::string save_representation(const Representation& r) {
    return representation_to_json(r).dump(2) + "\n";
}

Representation load_representation(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw FormatError(std::string("bad JSON: ") + e.what());
    }
    return representation_from_json(j);
}

} // namespace repstrata
