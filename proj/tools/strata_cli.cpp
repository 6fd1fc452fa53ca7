// Command-line front end.  Links only the public C API; all structure
// lives in JSON payloads.
#include "strata/strata.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using Json = nlohmann::ordered_json;

struct CtxGuard {
    strata_ctx *ctx = strata_ctx_new();
    ~CtxGuard() { strata_ctx_free(ctx); }
};

struct OutString {
    char *text = nullptr;
    ~OutString() { strata_free(text); }
};

// "2,2,1" -> [2,2,1]
Json parse_vector(const std::string& text) {
    Json out = Json::array();
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            const long long value = std::stoll(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(value);
        } catch (const std::logic_error&) {
            throw CLI::ValidationError("expected a comma-separated integer vector, got '" + text + "'");
        }
    }
    if (out.empty()) throw CLI::ValidationError("empty vector '" + text + "'");
    return out;
}

// "S1:2,S0:1" (or "1:2,0:1") -> {"algebra":"sl2","mult":{"1":2,"0":1}}
Json parse_class(const std::string& text) {
    Json mult = Json::object();
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string key = item;
        long long m = 1;
        const auto colon = item.find(':');
        if (colon != std::string::npos) {
            key = item.substr(0, colon);
            try {
                m = std::stoll(item.substr(colon + 1));
            } catch (const std::logic_error&) {
                throw CLI::ValidationError("bad multiplicity in '" + item + "'");
            }
        }
        if (!key.empty() && (key[0] == 'S' || key[0] == 's')) key = key.substr(1);
        try {
            const long long k = std::stoll(key);
            mult[std::to_string(k)] = mult.contains(std::to_string(k))
                                          ? mult[std::to_string(k)].get<long long>() + m
                                          : m;
        } catch (const std::logic_error&) {
            throw CLI::ValidationError("expected classes like 'S1:2,S0:1', got '" + text + "'");
        }
    }
    return Json{{"algebra", "sl2"}, {"mult", mult}};
}

int exit_code(strata_status status) {
    switch (status) {
        case STRATA_OK: return 0;
        case STRATA_ERR_PARSE: return 2;
        default: return 1;
    }
}

int report_failure(strata_ctx *ctx, strata_status status) {
    std::cerr << "error: " << strata_last_error(ctx) << "\n";
    return exit_code(status);
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CLI::ValidationError("cannot open '" + path + "' for writing");
    out << text;
}

// assembles {"kind":..., "params":{...}} from whichever flags were set
class SpecFlags {
public:
    void attach(CLI::App *cmd, bool with_kind_default = false) {
        cmd->set_help_flag("--help", "print help"); // frees -h / --h for the profile flag
        auto *kind_opt = cmd->add_option("--kind", kind, "spec kind");
        if (with_kind_default) kind_opt->default_val("complexes");
        cmd->add_option("--v", v, "dimension vector, e.g. 2,2,1");
        cmd->add_option("--w", w, "ambient/target dimension vector");
        cmd->add_option("--h", h, "homology profile");
        cmd->add_option("--hv", hv, "source homology profile");
        cmd->add_option("--hw", hw, "target homology profile");
        cmd->add_option("--r", r, "rank vector");
        cmd->add_option("--s", s, "homology rank vector");
        cmd->add_option("--qrank", qvec, "rank vector of a quasi-isomorphism stratum");
        cmd->add_option("--n", n, "source class, e.g. S1:2,S0:1");
        cmd->add_option("--m", m, "target class");
        cmd->add_option("--sclass", sclass, "rank class");
        cmd->add_option("--e1", e1, "E1 class");
        cmd->add_option("--e2", e2, "E2 class");
        cmd->add_option("--vclass", vclass, "derivation rank class");
    }

    std::string spec() const {
        Json params = Json::object();
        auto vec = [&](const char *name, const std::string& text) {
            if (!text.empty()) params[name] = parse_vector(text);
        };
        auto cls = [&](const char *name, const std::string& text) {
            if (!text.empty()) params[name] = parse_class(text);
        };
        vec("v", v);
        vec("w", w);
        vec("h", h);
        vec("hv", hv);
        vec("hw", hw);
        vec("r", r);
        vec("s", s);
        vec("q", qvec);
        cls("n", n);
        cls("m", m);
        cls("s", sclass);
        cls("e1", e1);
        cls("e2", e2);
        cls("v", vclass);
        return Json{{"kind", kind}, {"params", params}}.dump();
    }

    std::string kind;

private:
    std::string v, w, h, hv, hw, r, s, qvec, n, m, sclass, e1, e2, vclass;
};

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"strata — dimensions, witnesses and oracle cross-checks for "
                 "stratified varieties of complexes"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");
    app.set_version_flag("--version", std::string(strata_version()));

    CtxGuard guard;
    strata_ctx *ctx = guard.ctx;

    std::string check_path;
    auto *check = app.add_subcommand("check", "validate a JSON document (complex, chain map, witness, dgla)");
    check->add_option("file", check_path, "path to the document")->required();

    SpecFlags dim_flags;
    bool with_oracles = false;
    auto *dim = app.add_subcommand("dim", "closed-form stratum dimension");
    dim_flags.attach(dim, true);
    dim->add_flag("--oracle", with_oracles, "add oracle columns (orbit/solver/census)");

    SpecFlags nonempty_flags;
    auto *nonempty = app.add_subcommand("nonempty", "non-emptiness criterion");
    nonempty_flags.attach(nonempty, true);

    SpecFlags witness_flags;
    std::string witness_out;
    auto *witness = app.add_subcommand("witness", "construct an explicit witness");
    witness_flags.attach(witness, true);
    witness->add_option("--out", witness_out, "write the witness file here (stdout otherwise)");

    SpecFlags components_flags;
    auto *components = app.add_subcommand("components", "irreducible components (maximal rank vectors)");
    components_flags.attach(components, true);

    SpecFlags census_flags;
    int census_q = 2;
    int census_witnesses = 0;
    auto *census = app.add_subcommand("census", "exhaustive point count over GF(q)");
    census_flags.attach(census, true);
    census->add_option("--q", census_q, "field size (2, 3, 5 or 7)");
    census->add_option("--witnesses", census_witnesses, "record up to this many matching points");

    std::string suite = "all";
    std::string compare_out;
    unsigned long long seed = 0;
    auto *compare = app.add_subcommand("compare", "formula-vs-oracle comparison report");
    compare->add_option("--suite", suite, "complexes, subcomplex, chain-map, quasi-iso, g, dgla, all");
    compare->add_option("--out", compare_out, "write the report here (stdout otherwise)");
    compare->add_option("--seed", seed, "seed recorded in the report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) {
            std::ifstream in(check_path, std::ios::binary);
            if (!in) {
                std::cerr << "error: cannot read '" << check_path << "'\n";
                return 2;
            }
            std::stringstream buffer;
            buffer << in.rdbuf();
            OutString out;
            const strata_status status = strata_check(ctx, buffer.str().c_str(), &out.text);
            if (out.text) std::cout << out.text;
            return exit_code(status);
        }
        if (*dim) {
            OutString out;
            const strata_status status = strata_dim(ctx, dim_flags.spec().c_str(), with_oracles, &out.text);
            if (status != STRATA_OK) return report_failure(ctx, status);
            const Json parsed = Json::parse(out.text);
            if (with_oracles) {
                std::cout << out.text;
            } else if (parsed.contains("empty")) {
                std::cout << "empty\n";
            } else {
                std::cout << parsed["value"].get<long long>() << "\n";
            }
            return 0;
        }
        if (*nonempty) {
            OutString out;
            const strata_status status = strata_nonempty(ctx, nonempty_flags.spec().c_str(), &out.text);
            if (status != STRATA_OK) return report_failure(ctx, status);
            const Json parsed = Json::parse(out.text);
            std::cout << (parsed["nonempty"].get<bool>() ? "true" : "false") << "\n";
            return 0;
        }
        if (*witness) {
            OutString out;
            const strata_status status = strata_witness(ctx, witness_flags.spec().c_str(), &out.text);
            if (status != STRATA_OK) return report_failure(ctx, status);
            write_output(out.text, witness_out);
            return 0;
        }
        if (*components) {
            OutString out;
            const strata_status status = strata_components(ctx, components_flags.spec().c_str(), &out.text);
            if (status != STRATA_OK) return report_failure(ctx, status);
            const Json parsed = Json::parse(out.text);
            for (const auto& comp : parsed["components"]) {
                std::string line;
                for (const auto& x : comp) {
                    if (!line.empty()) line += ",";
                    line += std::to_string(x.get<long long>());
                }
                std::cout << line << "\n";
            }
            return 0;
        }
        if (*census) {
            if (census_witnesses > 0)
                strata_set_option(ctx, "census-witnesses", std::to_string(census_witnesses).c_str());
            OutString out;
            const strata_status status = strata_census(ctx, census_flags.spec().c_str(), census_q, &out.text);
            if (status != STRATA_OK) return report_failure(ctx, status);
            std::cout << out.text;
            return 0;
        }
        if (*compare) {
            OutString out;
            const strata_status status = strata_compare(ctx, suite.c_str(), seed, &out.text);
            if (status != STRATA_OK) return report_failure(ctx, status);
            write_output(out.text, compare_out);
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
