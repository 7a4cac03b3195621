#pragma once

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "satake/brylinski_kostant.hpp"
#include "satake/cache.hpp"
#include "satake/equivariant.hpp"
#include "satake/serialize.hpp"
#include "satake/verify.hpp"
#include "satake/version.hpp"

namespace satake {

/// Parsed command-line request. One struct for every subcommand keeps
/// the canonical config echo (and hence the cache key) uniform.
struct RunConfig {
    std::string command;
    int n = 2;
    long size = 4;
    std::string flavor = "quaternionic";
    std::string format = "json"; // json | csv | latex
    std::uint64_t seed = 7;
    std::string suite = "all";
    std::vector<long> lam;
    std::vector<long> mu;
    std::vector<long> Lam;
    std::string input_path;
    std::string check; // centralizers subcheck
    std::string cache_dir;
    bool no_cache = false;
    bool timing = false;
};

struct ResultEnvelope {
    json body;
    int exit_code = 0;
    std::string text_payload; // set for csv/latex projections
};

inline json canonical_config(const RunConfig& c) {
    json j;
    j["command"] = c.command;
    j["n"] = c.n;
    j["size"] = c.size;
    j["flavor"] = c.flavor;
    j["format"] = c.format;
    j["seed"] = c.seed;
    j["suite"] = c.suite;
    j["lam"] = c.lam;
    j["mu"] = c.mu;
    j["Lam"] = c.Lam;
    j["check"] = c.check;
    return j;
}

inline std::string default_cache_dir() {
    if (const char* env = std::getenv("SATAKE_KIT_CACHE_DIR")) return env;
    return ".satake-kit-cache";
}

namespace cli_detail {

inline Coweight coweight_arg(const std::vector<long>& v) { return Coweight(std::vector<long>(v)); }

inline StalkFlavor parse_flavor(const std::string& f) {
    if (f == "complex") return StalkFlavor::Complex;
    if (f == "quaternionic") return StalkFlavor::Quaternionic;
    if (f == "symmetric") return StalkFlavor::Symmetric;
    throw structural_error("unknown flavor: " + f);
}

inline json checks_to_json(const std::vector<Check>& checks) {
    json arr = json::array();
    for (const auto& c : checks) {
        json j;
        j["name"] = c.name;
        j["pass"] = c.pass;
        j["detail"] = c.detail;
        arr.push_back(j);
    }
    return arr;
}

inline std::vector<Check> run_suite(const std::string& suite, std::uint64_t seed) {
    std::vector<Check> checks;
    auto want = [&](const char* name) { return suite == "all" || suite == name; };
    if (want("kostka")) {
        checks.push_back(check_kostka_oracles({{1, 6}, {2, 6}, {3, 6}, {4, 5}}));
        checks.push_back(check_kostka_vanishing(3, 5));
    }
    if (want("bk")) {
        checks.push_back(check_bk_identity({{1, 4}, {2, 6}, {3, 4}}));
        checks.push_back(check_bk_filtration_monotone(3, 4));
    }
    if (want("stalks")) checks.push_back(check_stalk_tables(3, 4));
    if (want("twistor")) checks.push_back(check_twistor_suite(4));
    if (want("phi")) checks.push_back(check_phi(3));
    if (want("kostant")) {
        checks.push_back(check_companion_identity(2, {3, 4, 5}, 50, seed));
        checks.push_back(check_interleave_identity(3));
    }
    if (want("centralizers")) checks.push_back(check_centralizer_suite(3, 100, seed));
    if (want("shalika")) checks.push_back(check_shalika(2, 100, seed));
    if (want("spectral")) checks.push_back(check_spectral_suite(2, 4));
    if (checks.empty()) throw structural_error("unknown suite: " + suite);
    return checks;
}

} // namespace cli_detail

/// Dispatch a parsed config to the library. Exit code 0 on success, 1
/// when a requested verification fails, 2 on usage errors (thrown as
/// structural/precondition errors by the modules).
inline ResultEnvelope run_command(const RunConfig& config) {
    using namespace cli_detail;
    ResultEnvelope env;
    json body;
    body["tool"] = kToolName;
    body["version"] = kToolVersion;
    body["config"] = canonical_config(config);

    auto started = std::chrono::steady_clock::now();
    ResultCache cache(config.cache_dir.empty() ? default_cache_dir() : config.cache_dir,
                      !config.no_cache);
    std::string cache_key = ResultCache::key_for(canonical_config(config).dump());

    json payload;
    std::vector<Check> checks;
    bool cacheable = config.command == "kostka-table" || config.command == "stalks" ||
                     config.command == "bk";
    bool from_cache = false;
    if (cacheable) {
        if (auto hit = cache.lookup(cache_key)) {
            payload = *hit;
            from_cache = true;
        }
    }

    if (!from_cache) {
        if (config.command == "kostka") {
            Coweight lam = coweight_arg(config.lam), mu = coweight_arg(config.mu);
            if (lam.n() != config.n || mu.n() != config.n)
                throw structural_error("--lam/--mu must have exactly n entries");
            payload["poly"] = kostka_foulkes_charge(lam, mu).str();
        } else if (config.command == "kostka-table") {
            json rows = json::array();
            auto pairs = dominant_pairs(config.n, config.size);
            std::function<std::string(const std::pair<Coweight, Coweight>&)> worker =
                [](const std::pair<Coweight, Coweight>& pr) {
                    return kostka_foulkes_charge(pr.first, pr.second).str();
                };
            auto polys = parallel_transform(pairs, worker);
            for (size_t i = 0; i < pairs.size(); ++i) {
                json row;
                row["lam"] = to_json(pairs[i].first);
                row["mu"] = to_json(pairs[i].second);
                row["poly"] = polys[i];
                rows.push_back(row);
            }
            payload["rows"] = rows;
        } else if (config.command == "bk") {
            Coweight lam = coweight_arg(config.lam);
            if (lam.n() != config.n) throw structural_error("--lam must have exactly n entries");
            WeightedRep rep = build_irrep(lam);
            if (!config.mu.empty()) {
                Coweight mu = coweight_arg(config.mu);
                payload["poly"] = bk_polynomial(rep, mu).str();
            } else {
                json rows = json::array();
                for (const auto& [mu, idxs] : rep.weight_spaces) {
                    json row;
                    row["mu"] = to_json(mu.shifted(-rep.det_twist));
                    row["poly"] = bk_polynomial(rep, mu.shifted(-rep.det_twist)).str();
                    rows.push_back(row);
                }
                payload["dimension"] = rep.dimension();
                payload["rows"] = rows;
            }
        } else if (config.command == "stalks") {
            StalkTable table = stalk_table(parse_flavor(config.flavor), config.n, config.size);
            payload = to_json(table);
            if (config.format == "csv") env.text_payload = stalk_table_csv(table);
            if (config.format == "latex") env.text_payload = stalk_table_latex(table);
        } else if (config.command == "twistor") {
            int n = config.n;
            EquivariantRing res = make_complex_restricted_ring(n);
            EquivariantRing hp = make_quaternionic_ring(n);
            payload["restricted_relation"] = res.relation.str(res.var_names());
            payload["hp_relation"] = hp.relation.str(hp.var_names());
            payload["pullback_eta"] =
                twistor_pullback(hp, res, hp.var_class()).str(res.var_names());
            auto loc = localization_map(hp, hp.var_class());
            json locs = json::array();
            for (const auto& v : loc) locs.push_back(v.str(hp.var_names()));
            payload["loc_eta"] = locs;
            auto mat_json = [](const PolyMatrix& m, const std::vector<std::string>& names) {
                json rows = json::array();
                for (int i = 0; i < m.dim(); ++i) {
                    json row = json::array();
                    for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str(names));
                    rows.push_back(row);
                }
                return rows;
            };
            payload["cup_upsilon"] = mat_json(cup_matrix(res, upsilon_basis(res)), res.var_names());
            payload["cup_upsilon_prime"] =
                mat_json(cup_matrix(res, upsilon_prime_basis(res)), res.var_names());
            payload["cup_upsilon_h"] = mat_json(cup_matrix(hp, upsilon_h_basis(hp)), hp.var_names());
            PhiResult phi = build_phi(n);
            payload["phi"] = mat_json(phi.phi, t_names(n));
            payload["phi_det"] = phi.det.str(t_names(n));
            payload["phi_identity"] = phi.identity_holds;
            // Sign bookkeeping from the cup-product computation: the
            // determinant-bundle classes act by e^{T_2n} on the complex side
            // and by -e^T_X (Pontryagin normalization) on the quaternionic one.
            payload["class_signs"] = {{"c_T2n", "+e_T2n"}, {"p_T_X", "-e_T_X"}};
            checks.push_back(check_twistor_suite(n));
            checks.push_back(check_phi(std::min(n, 3)));
        } else if (config.command == "centralizers") {
            if (config.check == "companion" || config.check.empty())
                checks.push_back(check_companion_identity(2, {3, 4, 5}, 50, config.seed));
            if (config.check == "tau" || config.check.empty())
                checks.push_back(check_interleave_identity(std::min(config.n, 3)));
            if (config.check == "shalika" || config.check.empty())
                checks.push_back(check_shalika(2, 100, config.seed));
            if (config.check == "embedding" || config.check.empty())
                checks.push_back(check_centralizer_suite(std::min(config.n, 3), 100, config.seed));
            if (checks.empty()) throw structural_error("unknown --check: " + config.check);
        } else if (config.command == "branch") {
            Coweight Lam = coweight_arg(config.Lam);
            if (Lam.n() != 2 * config.n)
                throw structural_error("--Lam must have exactly 2n entries");
            auto img = phi_on_free_module(Lam);
            BranchingDecomposition dec = branch_psi_x(Lam);
            payload = to_json(dec);
            payload["hilbert_identity"] = img.hilbert_identity;
            payload["input_series"] = img.input_series.str();
            payload["output_series"] = img.output_series.str();
        } else if (config.command == "shear") {
            std::ifstream in(config.input_path);
            if (!in) throw structural_error("cannot open --input file: " + config.input_path);
            json j;
            in >> j;
            BigradedSeries s = bigraded_from_json(j);
            payload["input"] = to_json(s);
            payload["sheared"] = to_json(shear(s));
        } else if (config.command == "verify") {
            checks = run_suite(config.suite, config.seed);
        } else {
            throw structural_error("unknown command: " + config.command);
        }
    }

    if (cacheable && !from_cache) cache.store(cache_key, payload);

    bool all_pass = true;
    for (const auto& c : checks) all_pass = all_pass && c.pass;
    if (!payload.is_null()) body["payload"] = payload;
    if (!checks.empty()) {
        body["checks"] = checks_to_json(checks);
        body["status"] = all_pass ? "ok" : "fail";
    } else {
        body["status"] = "ok";
    }
    body["from_cache"] = from_cache;
    if (config.timing) {
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
        body["timing_ms"] = elapsed;
    }
    env.body = body;
    env.exit_code = all_pass ? 0 : 1;
    return env;
}

} // namespace satake
