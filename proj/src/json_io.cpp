#include "strata/json_io.hpp"

#include "strata/errors.hpp"

namespace strata {

Json rat_to_json(const Rat& x) {
    return to_string(x);
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return rat(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected a rational literal, got " + j.dump());
}

Json dimvec_to_json(const DimVec& v) {
    return Json(v);
}

DimVec dimvec_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an integer vector, got " + j.dump());
    DimVec out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw ParseError("expected an integer vector entry, got " + x.dump());
        out.push_back(x.get<long long>());
    }
    return out;
}

Json mat_to_json(const Mat& m) {
    Json out = Json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.push_back(rat_to_json(m.at(i, j)));
    return out;
}

Mat mat_from_json(const Json& j, int rows, int cols) {
    if (!j.is_array()) throw ParseError("expected a flat matrix array, got " + j.dump());
    if (static_cast<long long>(j.size()) != static_cast<long long>(rows) * cols)
        throw ParseError("matrix entry count " + std::to_string(j.size()) + " does not match shape " +
                         std::to_string(rows) + "x" + std::to_string(cols));
    Mat out(rows, cols);
    size_t pos = 0;
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < cols; ++c) out.at(i, c) = rat_from_json(j[pos++]);
    return out;
}

Json complex_to_json(const ComplexStructure& c) {
    Json out;
    out["dims"] = dimvec_to_json(c.dims());
    Json diffs = Json::array();
    for (int i = 0; i < c.top_degree(); ++i) diffs.push_back(mat_to_json(c.diff(i)));
    out["diffs"] = diffs;
    return out;
}

ComplexStructure complex_from_json(const Json& j) {
    if (!j.contains("dims") || !j.contains("diffs")) throw ParseError("complex needs dims and diffs");
    const DimVec dims = dimvec_from_json(j["dims"]);
    if (dims.empty() || !is_nonnegative(dims)) throw ParseError("dims must be non-empty and non-negative");
    const auto& diffs_json = j["diffs"];
    if (!diffs_json.is_array() || diffs_json.size() + 1 != dims.size())
        throw ParseError("expected one differential per degree 0..n-1");
    std::vector<Mat> diffs;
    for (size_t i = 0; i + 1 < dims.size(); ++i)
        diffs.push_back(mat_from_json(diffs_json[i], static_cast<int>(dims[i + 1]), static_cast<int>(dims[i])));
    return ComplexStructure(dims, diffs);
}

Json chain_map_to_json(const ChainMap& f) {
    Json out;
    out["source"] = complex_to_json(f.source());
    out["target"] = complex_to_json(f.target());
    Json comps = Json::array();
    for (int i = 0; i <= f.top_degree(); ++i) comps.push_back(mat_to_json(f.comp(i)));
    out["comps"] = comps;
    return out;
}

ChainMap chain_map_from_json(const Json& j) {
    if (!j.contains("source") || !j.contains("target") || !j.contains("comps"))
        throw ParseError("chain map needs source, target and comps");
    ComplexStructure source = complex_from_json(j["source"]);
    ComplexStructure target = complex_from_json(j["target"]);
    const auto& comps_json = j["comps"];
    if (!comps_json.is_array() || static_cast<int>(comps_json.size()) != source.top_degree() + 1)
        throw ParseError("expected one component per degree 0..n");
    std::vector<Mat> comps;
    for (int i = 0; i <= source.top_degree(); ++i)
        comps.push_back(mat_from_json(comps_json[static_cast<size_t>(i)],
                                      static_cast<int>(target.dim_at(i)),
                                      static_cast<int>(source.dim_at(i))));
    return ChainMap(std::move(source), std::move(target), std::move(comps));
}

Json subwitness_to_json(const SubcomplexWitness& w) {
    Json out;
    out["ambient"] = complex_to_json(w.ambient);
    out["dims"] = dimvec_to_json(w.dims());
    Json bases = Json::array();
    for (const Mat& b : w.bases) bases.push_back(mat_to_json(b));
    out["bases"] = bases;
    return out;
}

SubcomplexWitness subwitness_from_json(const Json& j) {
    if (!j.contains("ambient") || !j.contains("bases") || !j.contains("dims"))
        throw ParseError("subcomplex witness needs ambient, dims and bases");
    ComplexStructure ambient = complex_from_json(j["ambient"]);
    const DimVec sub_dims = dimvec_from_json(j["dims"]);
    const auto& bases_json = j["bases"];
    if (!bases_json.is_array() || static_cast<int>(bases_json.size()) != ambient.top_degree() + 1 ||
        sub_dims.size() != bases_json.size())
        throw ParseError("expected one basis and one dimension per degree 0..n");
    std::vector<Mat> bases;
    for (int i = 0; i <= ambient.top_degree(); ++i)
        bases.push_back(mat_from_json(bases_json[static_cast<size_t>(i)],
                                      static_cast<int>(ambient.dim_at(i)),
                                      static_cast<int>(sub_dims[static_cast<size_t>(i)])));
    return SubcomplexWitness{std::move(ambient), std::move(bases)};
}

Json repclass_to_json(const RepClass& c) {
    Json mult = Json::object();
    for (const auto& [id, m] : c.mult()) mult[std::to_string(id)] = m;
    Json out;
    out["algebra"] = "sl2";
    out["mult"] = mult;
    return out;
}

RepClass repclass_from_json(const Json& j) {
    if (!j.contains("mult") || !j["mult"].is_object()) throw ParseError("class needs a mult object");
    if (j.contains("algebra") && j["algebra"] != "sl2")
        throw ParseError("only the built-in sl2 type table ships with this build");
    std::map<long long, long long> mult;
    for (const auto& [key, value] : j["mult"].items()) {
        if (!value.is_number_integer()) throw ParseError("multiplicities must be integers");
        try {
            mult[std::stoll(key)] += value.get<long long>();
        } catch (const std::logic_error&) {
            throw ParseError("class keys must be highest weights, got '" + key + "'");
        }
    }
    return RepClass(std::move(mult));
}

Json gwitness_to_json(const GMapWitness& w, const RepClass& declared_rank) {
    Json out;
    out["algebra"] = "sl2";
    out["n"] = repclass_to_json(w.source.cls);
    out["m"] = repclass_to_json(w.target.cls);
    out["s"] = repclass_to_json(declared_rank);
    out["matrix"] = mat_to_json(w.matrix);
    return out;
}

Json dgla_to_json(const DGLAStructure& e) {
    Json out;
    out["algebra"] = "sl2";
    out["e1"] = Json{{"class", repclass_to_json(e.e1_class)}};
    out["e2"] = Json{{"class", repclass_to_json(e.e2_class)}};
    out["d0"] = mat_to_json(e.d0);
    out["d1"] = mat_to_json(e.d1);
    Json f = Json::array();
    for (const Mat& fk : e.f2) {
        Json rows = Json::array();
        for (int i = 0; i < fk.rows(); ++i) {
            Json row = Json::array();
            for (int jj = 0; jj < fk.cols(); ++jj) row.push_back(rat_to_json(fk.at(i, jj)));
            rows.push_back(row);
        }
        f.push_back(rows);
    }
    out["f"] = f;
    return out;
}

DGLAStructure dgla_from_json(const Json& j) {
    if (!j.contains("e1") || !j.contains("e2")) throw ParseError("dgla needs e1 and e2 classes");
    const RepClass e1 = repclass_from_json(j["e1"].contains("class") ? j["e1"]["class"] : j["e1"]);
    const RepClass e2 = repclass_from_json(j["e2"].contains("class") ? j["e2"]["class"] : j["e2"]);
    if (!e1.effective() || !e2.effective()) throw ParseError("module classes must be effective");
    const long long dim1 = class_dim(e1);
    const long long dim2 = class_dim(e2);
    Mat d0 = j.contains("d0") ? mat_from_json(j["d0"], static_cast<int>(dim1), 3) : Mat();
    Mat d1 = j.contains("d1") ? mat_from_json(j["d1"], static_cast<int>(dim2), static_cast<int>(dim1)) : Mat();
    std::vector<Mat> f2;
    if (j.contains("f")) {
        const auto& f_json = j["f"];
        if (!f_json.is_array() || static_cast<long long>(f_json.size()) != dim2)
            throw ParseError("f needs one component per E2 coordinate");
        for (const auto& rows : f_json) {
            if (!rows.is_array() || static_cast<long long>(rows.size()) != dim1)
                throw ParseError("f components must be dim1 x dim1");
            Mat fk(static_cast<int>(dim1), static_cast<int>(dim1));
            for (int i = 0; i < fk.rows(); ++i) {
                const auto& row = rows[static_cast<size_t>(i)];
                if (!row.is_array() || static_cast<long long>(row.size()) != dim1)
                    throw ParseError("f components must be dim1 x dim1");
                for (int c = 0; c < fk.cols(); ++c) fk.at(i, c) = rat_from_json(row[static_cast<size_t>(c)]);
            }
            f2.push_back(std::move(fk));
        }
    }
    return make_sl2_dgla(e1, e2, std::move(d0), std::move(d1), std::move(f2));
}

std::string canonical_dump(const Json& j) {
    return j.dump(2) + "\n";
}

namespace {

Json violations_to_json(const ValidationReport& report) {
    Json out = Json::array();
    for (const Violation& v : report.violations)
        out.push_back(Json{{"rule", v.rule}, {"degree", v.degree}, {"detail", v.detail}});
    return out;
}

} // namespace

CheckOutcome check_document(const std::string& text) {
    CheckOutcome outcome;
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        outcome.report = Json{{"schema", "unknown"}, {"valid", false}, {"error", e.what()}};
        return outcome;
    }

    try {
        if (j.contains("source") && j.contains("target") && j.contains("comps")) {
            ComplexStructure source = complex_from_json(j["source"]);
            ComplexStructure target = complex_from_json(j["target"]);
            std::vector<Mat> comps;
            const auto& comps_json = j["comps"];
            if (!comps_json.is_array() || static_cast<int>(comps_json.size()) != source.top_degree() + 1)
                throw ParseError("expected one component per degree 0..n");
            for (int i = 0; i <= source.top_degree(); ++i)
                comps.push_back(mat_from_json(comps_json[static_cast<size_t>(i)],
                                              static_cast<int>(target.dim_at(i)),
                                              static_cast<int>(source.dim_at(i))));
            outcome.parsed = true;
            auto report = ChainMap::validate(source, target, comps);
            outcome.valid = report.ok;
            outcome.report = Json{{"schema", "chain-map"}, {"valid", report.ok},
                                  {"violations", violations_to_json(report)}};
        } else if (j.contains("ambient") && j.contains("bases")) {
            SubcomplexWitness w = subwitness_from_json(j);
            outcome.parsed = true;
            auto report = w.validate();
            outcome.valid = report.ok;
            outcome.report = Json{{"schema", "subcomplex-witness"}, {"valid", report.ok},
                                  {"violations", violations_to_json(report)}};
        } else if (j.contains("dims") && j.contains("diffs")) {
            const DimVec dims = dimvec_from_json(j["dims"]);
            if (dims.empty() || !is_nonnegative(dims))
                throw ParseError("dims must be non-empty and non-negative");
            const auto& diffs_json = j["diffs"];
            if (!diffs_json.is_array() || diffs_json.size() + 1 != dims.size())
                throw ParseError("expected one differential per degree 0..n-1");
            std::vector<Mat> diffs;
            for (size_t i = 0; i + 1 < dims.size(); ++i)
                diffs.push_back(mat_from_json(diffs_json[i], static_cast<int>(dims[i + 1]),
                                              static_cast<int>(dims[i])));
            outcome.parsed = true;
            auto report = ComplexStructure::validate(dims, diffs);
            outcome.valid = report.ok;
            outcome.report = Json{{"schema", "complex"}, {"valid", report.ok},
                                  {"violations", violations_to_json(report)}};
        } else if (j.contains("matrix") && j.contains("n") && j.contains("m")) {
            const RepClass n = repclass_from_json(j["n"]);
            const RepClass m = repclass_from_json(j["m"]);
            const ExplicitModule source = module_from_class(n);
            const ExplicitModule target = module_from_class(m);
            const Mat x = mat_from_json(j["matrix"], target.dim, source.dim);
            outcome.parsed = true;
            ValidationReport report;
            try {
                const RepClass rank = g_rank_of_map(source, target, x);
                if (j.contains("s") && !(repclass_from_json(j["s"]) == rank))
                    report.fail("rank-class", -1, "declared rank class differs from the image class " +
                                                      rank.to_string());
            } catch (const PreconditionError& e) {
                report.fail("equivariance", -1, e.what());
            }
            outcome.valid = report.ok;
            outcome.report = Json{{"schema", "g-map-witness"}, {"valid", report.ok},
                                  {"violations", violations_to_json(report)}};
        } else if (j.contains("e1") && j.contains("e2")) {
            DGLAStructure e = dgla_from_json(j);
            outcome.parsed = true;
            auto report = check_axioms(e);
            outcome.valid = report.ok;
            outcome.report = Json{{"schema", "dgla"}, {"valid", report.ok},
                                  {"violations", violations_to_json(report)}};
        } else {
            throw ParseError("unrecognized document: expected a complex, chain map, witness or dgla");
        }
    } catch (const ParseError& e) {
        outcome.parsed = false;
        outcome.valid = false;
        outcome.report = Json{{"schema", "unknown"}, {"valid", false}, {"error", e.what()}};
    } catch (const Error& e) {
        // structural math violations surfaced as exceptions (shape errors)
        outcome.parsed = true;
        outcome.valid = false;
        outcome.report = Json{{"schema", "unknown"}, {"valid", false}, {"error", e.what()}};
    }
    return outcome;
}

} // namespace strata
