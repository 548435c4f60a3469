// sphtd: cohomology, twisted cohomology and twisted K-theory of odd sphere
// bundles, spherical T-duality checks, and the formal Chern-character engine.

#include "sphtd/catalog.hpp"
#include "sphtd/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

using namespace sphtd;
using nlohmann::json;

namespace {

struct Request {
    std::string command;
    std::string base;
    std::string base_file;
    std::optional<int> n;
    std::string e = "0";
    std::string h = "0";
    int k = 1;
    std::optional<int> N;
};

Integer parse_integer(const std::string& text, const char* flag)
{
    Integer x;
    if (text.empty() || x.set_str(text, 10) != 0)
        throw Error(ErrorCode::BadArguments, std::string("--") + flag + " expects an integer, got '" + text + "'");
    return x;
}

BaseManifold resolve_base(const Request& req)
{
    if (!req.base.empty() && !req.base_file.empty())
        throw Error(ErrorCode::BadArguments, "give either --base or --base-file, not both");
    BaseManifold base;
    if (!req.base_file.empty()) {
        std::ifstream in(req.base_file);
        if (!in)
            throw Error(ErrorCode::InvalidBase, "cannot open base file '" + req.base_file + "'");
        json doc = json::parse(in, nullptr, false);
        if (doc.is_discarded())
            throw Error(ErrorCode::InvalidBase, "base file '" + req.base_file + "' is not valid JSON");
        base = base_from_json(doc);
    } else if (!req.base.empty()) {
        auto found = find_base(req.base);
        if (!found)
            throw Error(ErrorCode::InvalidBase, "unknown base '" + req.base + "' (see 'sphtd catalog')");
        base = *found;
    } else {
        throw Error(ErrorCode::BadArguments, "a base is required (--base NAME or --base-file PATH)");
    }
    if (req.n && *req.n != base.half_dim)
        throw Error(ErrorCode::BadArguments, "--n " + std::to_string(*req.n) + " does not match base '" + base.name +
                                                 "' of dimension " + std::to_string(base.dim()));
    return base;
}

CommandResult execute(const Request& req)
{
    if (req.command == "chern-verify")
        return run_chern_verify(req.k, req.N.value_or(4 * req.k + 6));
    const BaseManifold base = resolve_base(req);
    const Integer e = parse_integer(req.e, "e");
    if (req.command == "bundle-cohomology")
        return run_bundle_cohomology(base, e);
    const Integer h = parse_integer(req.h, "h");
    if (req.command == "twisted")
        return run_twisted(base, e, h);
    if (req.command == "tdual")
        return run_tdual(base, e, h);
    throw Error(ErrorCode::BadArguments, "unknown command '" + req.command + "'");
}

std::string integer_field(const json& v)
{
    if (v.is_number_integer())
        return std::to_string(v.get<long>());
    if (v.is_string())
        return v.get<std::string>();
    throw Error(ErrorCode::BadArguments, "batch: integer fields must be numbers or strings");
}

Request request_from_json(const json& v)
{
    if (!v.is_object() || !v.contains("command") || !v["command"].is_string())
        throw Error(ErrorCode::BadArguments, "batch: every entry needs a \"command\"");
    Request req;
    req.command = v["command"].get<std::string>();
    if (v.contains("base"))
        req.base = v["base"].get<std::string>();
    if (v.contains("base_file"))
        req.base_file = v["base_file"].get<std::string>();
    if (v.contains("n"))
        req.n = v["n"].get<int>();
    if (v.contains("e"))
        req.e = integer_field(v["e"]);
    if (v.contains("h"))
        req.h = integer_field(v["h"]);
    if (v.contains("k"))
        req.k = v["k"].get<int>();
    if (v.contains("N"))
        req.N = v["N"].get<int>();
    return req;
}

struct Outcome {
    std::optional<CommandResult> result;
    std::string error;
    int exit_code = 0;
};

Outcome run_guarded(const Request& req)
{
    try {
        CommandResult r = execute(req);
        const int code = exit_code_for(r);
        return {std::move(r), "", code};
    } catch (const Error& ex) {
        return {std::nullopt, ex.what(), exit_code_for(ex.code())};
    } catch (const json::exception& ex) {
        return {std::nullopt, ex.what(), 4};
    }
}

int run_batch(const std::string& path, bool as_json)
{
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open batch file '" << path << "'\n";
        return 4;
    }
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.is_array()) {
        std::cerr << "error: batch file must be a JSON array of requests\n";
        return 4;
    }

    // entries are independent pure pipelines
    std::vector<std::future<Outcome>> pending;
    for (const auto& entry : doc) {
        pending.push_back(std::async(std::launch::async, [entry] {
            try {
                return run_guarded(request_from_json(entry));
            } catch (const Error& ex) {
                return Outcome{std::nullopt, ex.what(), exit_code_for(ex.code())};
            } catch (const json::exception& ex) {
                return Outcome{std::nullopt, ex.what(), 4};
            }
        }));
    }

    int worst = 0;
    json out = json::array();
    for (std::size_t i = 0; i < pending.size(); ++i) {
        Outcome o = pending[i].get();
        worst = std::max(worst, o.exit_code);
        if (as_json) {
            out.push_back(o.result ? to_document(*o.result)
                                   : json{{"error", o.error}, {"exit_code", o.exit_code}});
        } else {
            std::cout << "[" << i << "] ";
            if (o.result)
                std::cout << render_text(*o.result);
            else
                std::cout << "error (exit " << o.exit_code << "): " << o.error << '\n';
        }
    }
    if (as_json)
        std::cout << out.dump(2) << '\n';
    return worst;
}

void print_catalog(bool as_json)
{
    if (as_json) {
        json arr = json::array();
        for (const CatalogEntry& e : catalog()) {
            json b = base_to_json(e.base);
            b["description"] = e.description;
            arr.push_back(std::move(b));
        }
        std::cout << arr.dump(2) << '\n';
        return;
    }
    for (const CatalogEntry& e : catalog())
        std::cout << "  " << std::left << std::setw(8) << e.base.name << "n=" << e.base.half_dim << "  "
                  << (e.base.torsion_free() ? "torsion-free  " : "has torsion   ") << e.description << '\n';
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Twisted cohomology, twisted K-theory and spherical T-duality of odd sphere bundles"};
    app.require_subcommand(1);
    // --h is the flux, so help is long-form only
    app.set_help_flag("--help", "print this help message and exit");

    Request req;
    bool as_json = false;
    std::string batch_file;

    auto add_bundle_options = [&](CLI::App* sub, bool with_flux) {
        sub->add_option("--base", req.base, "catalog name of the base manifold");
        sub->add_option("--base-file", req.base_file, "JSON description of the base manifold");
        sub->add_option("--n", req.n, "half the base dimension (checked against the base)");
        sub->add_option("--e", req.e, "Euler number of the sphere bundle");
        if (with_flux)
            sub->add_option("--h", req.h, "flux number in H^{4n-1}(Z;Z) = Z");
        sub->add_flag("--json", as_json, "emit a JSON document");
    };

    auto* cohomology = app.add_subcommand("bundle-cohomology", "H^*(Z;Z) of the total space via the Gysin sequence");
    add_bundle_options(cohomology, false);
    auto* twisted = app.add_subcommand("twisted", "twisted cohomology and twisted K-theory of the total space");
    add_bundle_options(twisted, true);
    auto* tdual = app.add_subcommand("tdual", "construct the spherical T-dual and check both duality isomorphisms");
    add_bundle_options(tdual, true);

    auto* chern = app.add_subcommand("chern-verify", "check the formal Chern-character recursions");
    chern->add_option("--k", req.k, "the twist lives in degree 2k+1")->required();
    chern->add_option("--N", req.N, "truncation degree (default 4k+6)");
    chern->add_flag("--json", as_json, "emit a JSON document");

    auto* list = app.add_subcommand("catalog", "list the built-in base manifolds");
    list->add_flag("--json", as_json, "emit JSON");

    auto* batch = app.add_subcommand("batch", "evaluate a JSON array of requests in parallel");
    batch->add_option("file", batch_file, "JSON array of requests")->required();
    batch->add_flag("--json", as_json, "emit a JSON array of documents");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::CallForAllHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::ParseError& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 4;
    }

    if (list->parsed()) {
        print_catalog(as_json);
        return 0;
    }
    if (batch->parsed())
        return run_batch(batch_file, as_json);

    for (auto* sub : {cohomology, twisted, tdual, chern})
        if (sub->parsed())
            req.command = sub->get_name();

    const Outcome outcome = run_guarded(req);
    if (!outcome.result) {
        std::cerr << "error: " << outcome.error << '\n';
        return outcome.exit_code;
    }
    if (as_json)
        std::cout << to_document(*outcome.result).dump(2) << '\n';
    else
        std::cout << render_text(*outcome.result);
    return outcome.exit_code;
}
