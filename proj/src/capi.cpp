#include "strata/strata.h"

#include "strata/compare.hpp"
#include "strata/dgla.hpp"
#include "strata/errors.hpp"
#include "strata/gstrata.hpp"
#include "strata/json_io.hpp"
#include "strata/oracles.hpp"
#include "strata/version.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

using namespace strata;

struct strata_ctx {
    std::string last_error;
    long long enum_cap = 10000000;
    long long census_cap = 1 << 24;
    int census_witnesses = 0;
};

namespace {

char *dup_string(const std::string& s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

strata_status to_status(strata_ctx *ctx, const std::exception& e) {
    ctx->last_error = e.what();
    if (dynamic_cast<const ParseError *>(&e)) return STRATA_ERR_PARSE;
    if (dynamic_cast<const ResourceError *>(&e)) return STRATA_ERR_LIMIT;
    if (dynamic_cast<const Error *>(&e)) return STRATA_ERR_INVALID;
    return STRATA_ERR_INTERNAL;
}

template <class Fn>
strata_status guarded(strata_ctx *ctx, char **out, Fn&& fn) {
    if (!ctx || !out) return STRATA_ERR_INTERNAL;
    *out = nullptr;
    try {
        ctx->last_error.clear();
        const Json result = fn();
        *out = dup_string(canonical_dump(result));
        return STRATA_OK;
    } catch (const std::exception& e) {
        return to_status(ctx, e);
    }
}

Json int_to_json(const Int& x) {
    if (x.fits_slong_p()) return static_cast<long long>(x.get_si());
    return x.get_str();
}

// ---- spec parsing -----------------------------------------------------------

struct Query {
    std::string kind;
    Json params;

    DimVec vec(const char *name) const {
        if (!params.contains(name))
            throw ParseError(std::string("spec kind '") + kind + "' needs parameter '" + name + "'");
        DimVec v = dimvec_from_json(params[name]);
        if (v.empty()) throw ParseError(std::string("parameter '") + name + "' must be non-empty");
        if (!is_nonnegative(v)) throw ParseError(std::string("parameter '") + name + "' must be non-negative");
        return v;
    }
    DimVec vec_or(const char *name, const DimVec& fallback) const {
        return params.contains(name) ? vec(name) : fallback;
    }
    RepClass cls(const char *name) const {
        if (!params.contains(name))
            throw ParseError(std::string("spec kind '") + kind + "' needs class parameter '" + name + "'");
        RepClass c = repclass_from_json(params[name]);
        if (!c.effective()) throw ParseError(std::string("class '") + name + "' must be effective");
        return c;
    }
};

Query parse_query(const char *spec_json) {
    Json j;
    try {
        j = Json::parse(spec_json ? spec_json : "");
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("spec is not valid JSON: ") + e.what());
    }
    if (!j.contains("kind") || !j["kind"].is_string()) throw ParseError("spec needs a string 'kind'");
    Query q;
    q.kind = j["kind"].get<std::string>();
    q.params = j.contains("params") ? j["params"] : Json::object();
    return q;
}

StratumSpec census_spec_of(const Query& q) {
    StratumSpec spec;
    if (q.kind == "complexes") {
        spec.kind = StratumKind::differential;
        spec.v = q.vec("v");
        spec.r = q.vec("r");
    } else if (q.kind == "exact") {
        spec.kind = StratumKind::exact;
        spec.v = q.vec("v");
    } else if (q.kind == "subcomplex") {
        spec.kind = StratumKind::subcomplex;
        spec.w = q.vec("w");
        spec.hw = q.vec("h");
        spec.r = q.vec("r");
        spec.s = q.vec("s");
    } else if (q.kind == "chain-map") {
        spec.kind = StratumKind::chain_map;
        spec.v = q.vec("v");
        spec.hv = q.vec("hv");
        spec.w = q.vec("w");
        spec.hw = q.vec("hw");
        spec.r = q.vec("r");
        spec.s = q.vec("s");
    } else if (q.kind == "quasi-iso") {
        spec.kind = StratumKind::quasi_iso;
        spec.v = q.vec("v");
        spec.w = q.vec_or("w", spec.v);
        spec.hv = q.vec("h");
        if (q.params.contains("q")) spec.r = q.vec("q");
    } else {
        throw ParseError("census supports kinds complexes, exact, subcomplex, chain-map, quasi-iso");
    }
    return spec;
}

// oracle columns for dim queries; census primes shrink until the cap allows
void add_census_column(Json& out, const StratumSpec& spec, long long cap) {
    const std::vector<std::vector<int>> ladders = {{2, 3, 5, 7}, {2, 3, 5}, {2, 3}};
    for (const auto& primes : ladders) {
        try {
            CensusOptions opt;
            opt.point_cap = cap;
            const DimensionFit fit = census_dimension(spec, primes, opt);
            if (fit.empty) return;
            out["oracles"]["census-degree"] = fit.degree;
            out["oracles"]["census-exact-interpolation"] = fit.exact;
            return;
        } catch (const ResourceError&) {
            continue; // try fewer primes
        }
    }
}

Json dim_query(strata_ctx *ctx, const Query& q, bool with_oracles) {
    Json out;
    out["kind"] = q.kind;
    out["oracles"] = Json::object();

    if (q.kind == "complexes") {
        const DimVec v = q.vec("v"), r = q.vec("r");
        if (!complexes_nonempty(v, r)) throw PreconditionError("nonempty", "empty stratum: r_i + r_{i-1} > v_i");
        out["value"] = dim_complexes_stratum(v, r);
        out["homology"] = dimvec_to_json(stratum_homology(v, r));
        if (with_oracles) {
            out["oracles"]["orbit"] = orbit_dim_differential(build_differential_witness(v, r));
            add_census_column(out, census_spec_of(q), ctx->census_cap);
        }
    } else if (q.kind == "exact") {
        const DimVec v = q.vec("v");
        const auto dim = dim_exact_stratum(v);
        if (!dim) {
            out["empty"] = true;
            return out;
        }
        out["value"] = *dim;
        out["rank-vector"] = dimvec_to_json(*exact_rank_vector(v));
        if (with_oracles) {
            out["oracles"]["orbit"] =
                orbit_dim_differential(build_differential_witness(v, *exact_rank_vector(v)));
            add_census_column(out, census_spec_of(q), ctx->census_cap);
        }
    } else if (q.kind == "subcomplex") {
        const DimVec w = q.vec("w"), h = q.vec("h"), r = q.vec("r"), s = q.vec("s");
        out["value"] = paper_dim_subcomplex(w, h, r, s);
        out["value-class"] = "claimed";
        if (with_oracles) {
            const ComplexStructure ambient =
                build_differential_witness(w, chi_vector(vec_sub(w, h), w.size()));
            out["oracles"]["orbit"] = orbit_dim_subcomplex(build_subcomplex_witness(ambient, r, s));
            add_census_column(out, census_spec_of(q), ctx->census_cap);
        }
    } else if (q.kind == "chain-map") {
        const DimVec v = q.vec("v"), hv = q.vec("hv"), w = q.vec("w"), hw = q.vec("hw");
        const DimVec r = q.vec("r"), s = q.vec("s");
        out["value"] = paper_dim_map_stratum(v, hv, w, hw, r, s);
        out["value-class"] = "claimed";
        if (with_oracles) {
            const ComplexStructure src = build_differential_witness(v, chi_vector(vec_sub(v, hv), v.size()));
            const ComplexStructure tgt = build_differential_witness(w, chi_vector(vec_sub(w, hw), w.size()));
            out["oracles"]["orbit"] = orbit_dim_chain_map(build_chain_map_witness(src, tgt, r, s));
            add_census_column(out, census_spec_of(q), ctx->census_cap);
        }
    } else if (q.kind == "quasi-iso") {
        const DimVec v = q.vec("v"), h = q.vec("h");
        if (q.params.contains("w") && !(q.vec("w") == v))
            throw PreconditionError("v=w", "the closed form covers the equal-dimensions case only");
        out["value"] = paper_dim_quasi_iso(v, h);
        out["value-class"] = "claimed";
        if (with_oracles) {
            const ComplexStructure c = build_differential_witness(v, chi_vector(vec_sub(v, h), v.size()));
            out["oracles"]["orbit"] = orbit_dim_chain_map(build_chain_map_witness(c, c, v, h));
        }
    } else if (q.kind == "g") {
        const RepClass n = q.cls("n"), m = q.cls("m"), s = q.cls("s");
        out["value"] = g_stratum_dim(n, m, s);
        if (with_oracles) {
            long long classical = 0;
            for (const auto& [id, si] : s.mult())
                classical += classical_rank_stratum_orbit_dim(n.mult_of(id), m.mult_of(id), si);
            out["oracles"]["orbit"] = classical;
        }
    } else if (q.kind == "g-hom") {
        const RepClass n = q.cls("n"), m = q.cls("m");
        out["value"] = hom_g_dim(n, m);
        if (with_oracles)
            out["oracles"]["solver"] =
                intertwiner_dim_oracle(module_from_class(n), module_from_class(m));
    } else if (q.kind == "g-grassmannian") {
        const RepClass n = q.cls("n"), s = q.cls("s");
        out["value"] = g_grassmannian_dim(n, s);
        if (with_oracles) {
            long long classical = 0;
            for (const auto& [id, si] : s.mult())
                classical += classical_grassmannian_orbit_dim(n.mult_of(id), si);
            out["oracles"]["orbit"] = classical;
        }
    } else if (q.kind == "e1") {
        const RepClass n = q.cls("e1"), v = q.cls("v");
        const auto dim = e1_stratum_dim(n, v);
        if (!dim) {
            out["empty"] = true;
            return out;
        }
        out["value"] = *dim;
        if (with_oracles) {
            const DimensionFit fit = e1_census_dimension(n, v, {2, 3, 5, 7}, ctx->census_cap);
            if (!fit.empty) {
                out["oracles"]["census-degree"] = fit.degree;
                out["oracles"]["census-exact-interpolation"] = fit.exact;
            }
        }
    } else if (q.kind == "dgla") {
        const RepClass e1 = q.cls("e1"), e2 = q.cls("e2"), v = q.cls("v");
        out["value"] = dgla_stratum_dim(e1, e2, v);
        out["value-class"] = "claimed";
        if (with_oracles) {
            const ExplicitModule m1 = module_from_class(e1);
            const Mat y = e1_rank_witness(m1, v);
            const long long fiber = fiber_dim_oracle(m1, module_from_class(e2), y);
            const DimensionFit fit = e1_census_dimension(e1, v, {2, 3, 5, 7}, ctx->census_cap);
            out["oracles"]["fiber"] = fiber;
            if (!fit.empty) out["oracles"]["census-plus-fiber"] = fit.degree + fiber;
        }
    } else if (q.kind == "dgla0") {
        const RepClass e1 = q.cls("e1"), e2 = q.cls("e2");
        out["value"] = dgla0_dim(e1, e2);
        if (with_oracles) {
            const ExplicitModule m1 = module_from_class(e1);
            out["oracles"]["solver"] = fiber_dim_oracle(m1, module_from_class(e2), Mat(m1.dim, 1));
        }
    } else {
        throw ParseError("unknown dim kind '" + q.kind + "'");
    }
    if (!with_oracles) out.erase("oracles");
    return out;
}

Json nonempty_query(const Query& q) {
    Json out;
    out["kind"] = q.kind;
    bool value = false;
    if (q.kind == "complexes") {
        value = complexes_nonempty(q.vec("v"), q.vec("r"));
    } else if (q.kind == "exact") {
        value = exact_rank_vector(q.vec("v")).has_value();
    } else if (q.kind == "subcomplex") {
        value = subcomplex_nonempty(q.vec("w"), q.vec("h"), q.vec("r"), q.vec("s"));
    } else if (q.kind == "chain-map") {
        value = map_stratum_nonempty(q.vec("v"), q.vec("hv"), q.vec("w"), q.vec("hw"), q.vec("r"),
                                     q.vec("s"));
    } else if (q.kind == "quasi-iso") {
        const DimVec v = q.vec("v"), h = q.vec("h");
        const DimVec w = q.vec_or("w", v);
        if (q.params.contains("q")) {
            value = map_stratum_nonempty(v, h, w, h, q.vec("q"), h);
        } else {
            value = !quasi_iso_components(v, w, h).empty();
        }
    } else if (q.kind == "g") {
        value = g_stratum_nonempty(q.cls("n"), q.cls("m"), q.cls("s"));
    } else if (q.kind == "e1") {
        value = e1_stratum_dim(q.cls("e1"), q.cls("v")).has_value();
    } else {
        throw ParseError("unknown nonempty kind '" + q.kind + "'");
    }
    out["nonempty"] = value;
    return out;
}

Json witness_query(const Query& q) {
    if (q.kind == "complexes") {
        return complex_to_json(build_differential_witness(q.vec("v"), q.vec("r")));
    }
    if (q.kind == "exact") {
        const DimVec v = q.vec("v");
        const auto e = exact_rank_vector(v);
        if (!e) throw PreconditionError("nonempty", "no exact differential exists on this dimension vector");
        return complex_to_json(build_differential_witness(v, *e));
    }
    if (q.kind == "subcomplex") {
        const DimVec w = q.vec("w"), h = q.vec("h");
        const ComplexStructure ambient = build_differential_witness(w, chi_vector(vec_sub(w, h), w.size()));
        return subwitness_to_json(build_subcomplex_witness(ambient, q.vec("r"), q.vec("s")));
    }
    if (q.kind == "chain-map") {
        const DimVec v = q.vec("v"), hv = q.vec("hv"), w = q.vec("w"), hw = q.vec("hw");
        const ComplexStructure src = build_differential_witness(v, chi_vector(vec_sub(v, hv), v.size()));
        const ComplexStructure tgt = build_differential_witness(w, chi_vector(vec_sub(w, hw), w.size()));
        return chain_map_to_json(build_chain_map_witness(src, tgt, q.vec("r"), q.vec("s")));
    }
    if (q.kind == "quasi-iso") {
        const DimVec v = q.vec("v"), h = q.vec("h");
        const DimVec w = q.vec_or("w", v);
        const auto comps = quasi_iso_components(v, w, h);
        if (comps.empty()) throw PreconditionError("nonempty", "no quasi-isomorphisms for these profiles");
        const DimVec qq = q.params.contains("q") ? q.vec("q") : comps.front();
        const ComplexStructure src = build_differential_witness(v, chi_vector(vec_sub(v, h), v.size()));
        const ComplexStructure tgt = build_differential_witness(w, chi_vector(vec_sub(w, h), w.size()));
        return chain_map_to_json(build_chain_map_witness(src, tgt, qq, h));
    }
    if (q.kind == "g") {
        const RepClass s = q.cls("s");
        return gwitness_to_json(build_g_map_witness(q.cls("n"), q.cls("m"), s), s);
    }
    if (q.kind == "dgla") {
        const RepClass e1 = q.cls("e1"), e2 = q.cls("e2"), v = q.cls("v");
        if (!e1_stratum_dim(e1, v))
            throw PreconditionError("nonempty", "the E1 stratum is empty for this rank class");
        DGLAStructure e = make_sl2_dgla(e1, e2, Mat(), Mat(), {});
        e.d0 = mu_map(e, e1_rank_witness(module_from_class(e1), v));
        return dgla_to_json(e);
    }
    if (q.kind == "dgla0") {
        return dgla_to_json(make_sl2_dgla(q.cls("e1"), q.cls("e2"), Mat(), Mat(), {}));
    }
    throw ParseError("unknown witness kind '" + q.kind + "'");
}

Json components_query(strata_ctx *ctx, const Query& q) {
    Json out;
    out["kind"] = q.kind;
    std::vector<DimVec> comps;
    if (q.kind == "complexes") {
        comps = complexes_components(q.vec("v"), ctx->enum_cap);
    } else if (q.kind == "quasi-iso") {
        const DimVec v = q.vec("v");
        comps = quasi_iso_components(v, q.vec_or("w", v), q.vec("h"), ctx->enum_cap);
    } else {
        throw ParseError("components supports kinds complexes and quasi-iso");
    }
    Json arr = Json::array();
    for (const DimVec& c : comps) arr.push_back(dimvec_to_json(c));
    out["components"] = arr;
    return out;
}

} // namespace

extern "C" {

strata_ctx *strata_ctx_new(void) {
    return new strata_ctx();
}

void strata_ctx_free(strata_ctx *ctx) {
    delete ctx;
}

const char *strata_last_error(const strata_ctx *ctx) {
    return ctx ? ctx->last_error.c_str() : "";
}

strata_status strata_set_option(strata_ctx *ctx, const char *key, const char *value) {
    if (!ctx || !key || !value) return STRATA_ERR_INTERNAL;
    try {
        ctx->last_error.clear();
        const std::string k = key;
        const long long parsed = std::stoll(value);
        if (k == "enum-cap")
            ctx->enum_cap = parsed;
        else if (k == "census-cap")
            ctx->census_cap = parsed;
        else if (k == "census-witnesses")
            ctx->census_witnesses = static_cast<int>(parsed);
        else {
            ctx->last_error = "unknown option '" + k + "'";
            return STRATA_ERR_PARSE;
        }
        return STRATA_OK;
    } catch (const std::exception&) {
        ctx->last_error = "option value must be a decimal integer";
        return STRATA_ERR_PARSE;
    }
}

strata_status strata_check(strata_ctx *ctx, const char *document_json, char **out) {
    if (!ctx || !out) return STRATA_ERR_INTERNAL;
    *out = nullptr;
    try {
        ctx->last_error.clear();
        const CheckOutcome outcome = check_document(document_json ? document_json : "");
        *out = dup_string(canonical_dump(outcome.report));
        if (!outcome.parsed) {
            ctx->last_error = outcome.report.contains("error") ? outcome.report["error"].get<std::string>()
                                                               : "unreadable document";
            return STRATA_ERR_PARSE;
        }
        if (!outcome.valid) {
            ctx->last_error = "document is structurally invalid";
            return STRATA_ERR_INVALID;
        }
        return STRATA_OK;
    } catch (const std::exception& e) {
        return to_status(ctx, e);
    }
}

strata_status strata_dim(strata_ctx *ctx, const char *spec_json, int with_oracles, char **out) {
    return guarded(ctx, out, [&] { return dim_query(ctx, parse_query(spec_json), with_oracles != 0); });
}

strata_status strata_nonempty(strata_ctx *ctx, const char *spec_json, char **out) {
    return guarded(ctx, out, [&] { return nonempty_query(parse_query(spec_json)); });
}

strata_status strata_witness(strata_ctx *ctx, const char *spec_json, char **out) {
    return guarded(ctx, out, [&] { return witness_query(parse_query(spec_json)); });
}

strata_status strata_components(strata_ctx *ctx, const char *spec_json, char **out) {
    return guarded(ctx, out, [&] { return components_query(ctx, parse_query(spec_json)); });
}

strata_status strata_census(strata_ctx *ctx, const char *spec_json, int q, char **out) {
    return guarded(ctx, out, [&] {
        const Query query = parse_query(spec_json);
        Json out_json;
        if (query.kind == "e1") {
            const RepClass n = query.cls("e1"), v = query.cls("v");
            out_json["q"] = q;
            out_json["ambient"] = int_to_json(int_pow(q, class_dim(n)));
            out_json["count"] = int_to_json(e1_census_count(q, n, v, ctx->census_cap));
            const DimensionFit fit = e1_census_dimension(n, v, {2, 3, 5, 7}, ctx->census_cap);
            if (fit.empty) {
                out_json["empty"] = true;
            } else {
                out_json["dim_estimate"] = fit.degree;
                out_json["approximate"] = !fit.exact;
            }
        } else {
            CensusOptions opt;
            opt.point_cap = ctx->census_cap;
            opt.witness_cap = ctx->census_witnesses;
            const StratumSpec spec = census_spec_of(query);
            const CensusResult r = exhaustive_census(q, spec, opt);
            out_json["q"] = r.q;
            out_json["ambient"] = int_to_json(r.ambient);
            out_json["ambient-dim"] = r.ambient_dim;
            out_json["count"] = int_to_json(r.count);
            if (!r.witnesses.empty()) {
                Json w = Json::array();
                for (const auto& coords : r.witnesses) w.push_back(coords);
                out_json["witnesses"] = w;
            }
            // degree fit over every prime the cap allows
            for (const auto& primes :
                 std::vector<std::vector<int>>{{2, 3, 5, 7}, {2, 3, 5}, {2, 3}}) {
                try {
                    const DimensionFit fit = census_dimension(spec, primes, opt);
                    if (fit.empty) {
                        out_json["empty"] = true;
                    } else {
                        out_json["dim_estimate"] = fit.degree;
                        out_json["approximate"] = !fit.exact;
                    }
                    break;
                } catch (const ResourceError&) {
                    continue;
                }
            }
        }
        out_json["assumption"] = "polynomial-count";
        return out_json;
    });
}

strata_status strata_compare(strata_ctx *ctx, const char *suite, unsigned long long seed, char **out) {
    return guarded(ctx, out, [&] { return compare_report(suite ? suite : "all", seed); });
}

void strata_free(char *text) {
    std::free(text);
}

const char *strata_version(void) {
    return kLibraryVersion;
}

} // extern "C"
