/*
   Copyright 2026 the springer-lab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "springerlab/errors.hpp"
#include "springerlab/report.hpp"

namespace fs = std::filesystem;
using namespace sl;

namespace {

int log_level() {
    const char* env = std::getenv("SPRINGER_LAB_LOG");
    if (env == nullptr) return 0;
    std::string v(env);
    if (v == "debug") return 2;
    if (v == "info") return 1;
    return 0;
}

void log_info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "[springer-lab] " << msg << "\n";
}

struct CommonOpts {
    std::string config_path;
    std::string out_path;
    unsigned threads = std::thread::hardware_concurrency();
    long precision_ceiling = -1;
    long budget = -1;
    long long seed = -1;
    long index = 0;  // lattice index d for enumeration
};

ExperimentConfig load_config(const CommonOpts& opts) {
    ExperimentConfig cfg = parse_config_file(opts.config_path);
    if (opts.precision_ceiling > 0) cfg.precision_ceiling = opts.precision_ceiling;
    if (opts.budget > 0) cfg.budget = opts.budget;
    if (opts.seed >= 0) cfg.seed = static_cast<unsigned long long>(opts.seed);
    return cfg;
}

ZOptions z_options(const ExperimentConfig& cfg) {
    ZOptions z;
    z.N_override = cfg.window_n;
    z.N_ceiling_extra = cfg.window_extra;
    z.budget = cfg.budget;
    return z;
}

void write_out(const CommonOpts& opts, const ojson& j) {
    if (opts.out_path.empty()) return;
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + opts.out_path);
    out << render_json(j);
}

// ---- subcommand bodies ------------------------------------------------

int cmd_invariants(const CommonOpts& opts) {
    ExperimentConfig cfg = load_config(opts);
    BuiltDatum built = build_datum(cfg);
    const SpectralDatum& datum = *built.datum;

    ojson j = report_header(cfg, built);
    j["invariants"] = report_invariants(datum);
    j["rosenlicht"] = report_rosenlicht(datum);
    write_out(opts, j);

    std::cout << "datum: " << cfg.name << "\n";
    std::cout << "  delta (direct)  = " << datum.delta_direct() << "\n";
    std::cout << "  delta (formula) = " << datum.delta_formula() << "\n";
    auto cond = datum.conductor_exponents();
    std::cout << "  conductor exponents =";
    for (long c : cond) std::cout << " " << c;
    std::cout << "\n";
    for (std::size_t i = 0; i < datum.size(); ++i)
        for (std::size_t jj = i + 1; jj < datum.size(); ++jj)
            std::cout << "  r_" << i + 1 << jj + 1 << " = " << datum.r_pair(i, jj)
                      << "\n";
    auto ros = datum.rosenlicht_pairing();
    std::cout << "  rosenlicht pairing: " << ros.omega_dim << "x" << ros.omega_dim
              << (ros.perfect ? " perfect" : " DEGENERATE") << "\n";
    if (datum.delta_direct() != datum.delta_formula()) {
        std::cout << "  DELTA MISMATCH\n";
        return 4;
    }
    if (!ros.perfect) return 4;
    return 0;
}

int cmd_enumerate(const CommonOpts& opts) {
    ExperimentConfig cfg = load_config(opts);
    BuiltDatum built = build_datum(cfg);
    ZPointsResult z = z_points(built.datum, opts.index, z_options(cfg));

    ojson j = report_header(cfg, built);
    j["enumeration"] = report_enumeration(z, true);
    write_out(opts, j);

    std::cout << "Z^" << opts.index << " over F_" << built.datum->field()->q()
              << ": " << z.reps.size() << " canonical points (window N = "
              << z.model->N() << ", stable from N = " << z.threshold_N << ")\n";
    std::cout << "  N  window  canonical\n";
    for (const auto& row : z.stabilization)
        std::cout << "  " << row.N << "  " << row.window_points << "  "
                  << row.canonical_points << "\n";
    for (const auto& rep : z.reps) {
        std::cout << "  nu = (";
        for (std::size_t i = 0; i < rep.nu.size(); ++i)
            std::cout << (i != 0u ? "," : "") << rep.nu[i];
        std::cout << ") " << (rep.free_rank_one ? "free" : "non-free") << "\n";
    }
    return 0;
}

int cmd_orbital(const CommonOpts& opts) {
    ExperimentConfig cfg = load_config(opts);
    if (!cfg.hermitian)
        throw ConfigError(cfg.name + ": orbital integrals need hermitian = true");
    BuiltDatum built = build_datum(cfg);
    ZPointsResult z = z_points(built.datum, 0, z_options(cfg));
    HermitianData h = make_hermitian(built.datum, built.ext);
    Classification cls = classify_z_points(z, h, opts.threads);

    ojson j = report_header(cfg, built);
    j["enumeration"] = report_enumeration(z, false);
    j["classification"] = report_classification(cls);
    ojson parts = ojson::array();
    for (const auto& [l, r] : cfg.partitions) {
        PartitionSpec part = make_partition(*built.datum, l, r);
        OrbitalValues ov = orbital_integrals(cls.counts, part.left);
        ojson e;
        e["left"] = ojson::array();
        for (auto i : l) e["left"].push_back(i + 1);
        e["right"] = ojson::array();
        for (auto i : r) e["right"].push_back(i + 1);
        e["r"] = part.r;
        e["o_kappa"] = ov.o_kappa;
        e["so"] = ov.so;
        parts.push_back(e);
    }
    j["partitions"] = parts;
    write_out(opts, j);

    std::cout << "Z^0(F_" << built.ext->base().q() << ") classification ("
              << cfg.name << ")\n";
    for (const auto& [lbar, c] : cls.counts)
        std::cout << "  O_" << lambda_class_key(lbar) << " = " << c << "\n";
    std::cout << "  SO = " << cls.fixed_total << "  (discarded " << cls.discarded
              << " non-rational reps)\n";
    return 0;
}

int cmd_strata(const CommonOpts& opts) {
    ExperimentConfig cfg = load_config(opts);
    if (!cfg.hermitian)
        throw ConfigError(cfg.name + ": strata need hermitian = true");
    if (cfg.partitions.empty())
        throw ConfigError(cfg.name + ": no partitions configured");
    BuiltDatum built = build_datum(cfg);
    ZPointsResult z = z_points(built.datum, 0, z_options(cfg));
    HermitianData h = make_hermitian(built.datum, built.ext);
    Classification cls = classify_z_points(z, h, opts.threads);

    ojson j = report_header(cfg, built);
    j["enumeration"] = report_enumeration(z, false);
    ojson parts = ojson::array();
    bool ok = true;
    for (const auto& [l, r] : cfg.partitions) {
        PartitionSpec part = make_partition(*built.datum, l, r);
        auto strata = stratify(z.reps, part, *z.model);
        ojson e;
        e["left"] = ojson::array();
        for (auto i : l) e["left"].push_back(i + 1);
        e["right"] = ojson::array();
        for (auto i : r) e["right"].push_back(i + 1);
        e["r"] = part.r;
        ojson st = ojson::array();
        std::cout << "partition {";
        for (auto i : l) std::cout << " " << i + 1;
        std::cout << " } | {";
        for (auto i : r) std::cout << " " << i + 1;
        std::cout << " }  r = " << part.r << "\n";
        for (const auto& [rho, members] : strata) {
            long fixed = 0;
            for (auto idx : members)
                if (cls.reps[idx].fixed) ++fixed;
            ojson se;
            se["rho"] = rho;
            se["canonical_points"] = members.size();
            se["fixed_points"] = fixed;
            st.push_back(se);
            std::cout << "  rho = " << rho << ": " << members.size()
                      << " canonical, " << fixed << " rational\n";
        }
        e["strata"] = st;
        parts.push_back(e);
    }
    j["partitions"] = parts;
    write_out(opts, j);
    return ok ? 0 : 4;
}

int cmd_verify_fl(const CommonOpts& opts) {
    ExperimentConfig cfg = load_config(opts);
    if (!cfg.hermitian)
        throw ConfigError(cfg.name + ": verify-fl needs hermitian = true");
    if (cfg.partitions.empty())
        throw ConfigError(cfg.name + ": no partitions configured");
    BuiltDatum built = build_datum(cfg);
    ZPointsResult z = z_points(built.datum, 0, z_options(cfg));
    HermitianData h = make_hermitian(built.datum, built.ext);
    Classification cls = classify_z_points(z, h, opts.threads);

    ojson j = report_header(cfg, built);
    j["invariants"] = report_invariants(*built.datum);
    j["enumeration"] = report_enumeration(z, false);
    j["classification"] = report_classification(cls);
    ojson parts = ojson::array();
    bool all_hold = true;
    for (const auto& [l, r] : cfg.partitions) {
        PartitionSpec part = make_partition(*built.datum, l, r);
        FLOutcome fl = verify_fundamental_lemma(z, cls, built.datum, built.ext, part,
                                                z_options(cfg), opts.threads);
        parts.push_back(report_fl(fl));
        all_hold = all_hold && fl.fl_holds && fl.signed_matches;
        std::cout << "FL " << cfg.name << " {";
        for (auto i : l) std::cout << " " << i + 1;
        std::cout << " }|{";
        for (auto i : r) std::cout << " " << i + 1;
        std::cout << " }: O^kappa = " << fl.o_kappa << ", q^r*SO*SO = " << fl.rhs
                  << "  -> " << (fl.fl_holds ? "PASS" : "FAIL")
                  << "; signed strata sum = " << fl.signed_sum << "  -> "
                  << (fl.signed_matches ? "PASS" : "FAIL") << "\n";
    }
    j["partitions"] = parts;
    j["all_identities_hold"] = all_hold;
    write_out(opts, j);
    return all_hold ? 0 : 4;
}

int cmd_corpus(const CommonOpts& opts, const std::string& dir) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".cfg") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw ConfigError("no .cfg files under " + dir);

    int worst = 0;
    for (const auto& f : files) {
        auto t0 = std::chrono::steady_clock::now();
        CommonOpts sub = opts;
        sub.config_path = f.string();
        if (!opts.out_path.empty()) {
            fs::create_directories(opts.out_path);
            sub.out_path = (fs::path(opts.out_path) / f.stem()).string() + ".json";
        }
        ExperimentConfig cfg = load_config(sub);
        int rc;
        if (cfg.hermitian && !cfg.partitions.empty())
            rc = cmd_verify_fl(sub);
        else if (cfg.hermitian)
            rc = cmd_orbital(sub);
        else {
            rc = cmd_invariants(sub);
            if (rc == 0) {
                CommonOpts e = sub;
                e.out_path.clear();  // keep the invariants report on disk
                rc = cmd_enumerate(e);
            }
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cout << "[" << (rc == 0 ? "PASS" : "FAIL") << "] " << f.stem().string()
                  << " (" << ms << " ms)\n";
        worst = std::max(worst, rc);
    }
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"springer-lab: exact affine Springer fiber laboratory"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string corpus_dir = "corpus";

    auto add_common = [&](CLI::App* sub, bool needs_config) {
        if (needs_config)
            sub->add_option("--config", opts.config_path, "experiment config file")
                ->required();
        sub->add_option("--out", opts.out_path, "write the JSON report here");
        sub->add_option("--threads", opts.threads, "parallelism degree");
        sub->add_option("--precision-ceiling", opts.precision_ceiling,
                        "override the precision ceiling");
        sub->add_option("--budget", opts.budget, "override the enumeration budget");
        sub->add_option("--seed", opts.seed, "seed for sampling checks");
        return sub;
    };

    auto* inv = add_common(app.add_subcommand("invariants",
                                              "delta, conductors, Rosenlicht"),
                           true);
    auto* enu = add_common(app.add_subcommand("enumerate",
                                              "window and Z points"),
                           true);
    enu->add_option("--index", opts.index, "lattice index d (default 0)");
    auto* orb = add_common(app.add_subcommand("orbital",
                                              "O_lambda, O^kappa, SO"),
                           true);
    auto* str = add_common(app.add_subcommand("strata",
                                              "stratification by rho"),
                           true);
    auto* vfl = add_common(app.add_subcommand("verify-fl",
                                              "fundamental lemma identities"),
                           true);
    auto* cor = add_common(app.add_subcommand("corpus", "run the config corpus"),
                           false);
    cor->add_option("--dir", corpus_dir, "corpus directory (default: corpus)");

    CLI11_PARSE(app, argc, argv);

    if (opts.threads == 0) opts.threads = 1;

    try {
        if (inv->parsed()) return cmd_invariants(opts);
        if (enu->parsed()) return cmd_enumerate(opts);
        if (orb->parsed()) return cmd_orbital(opts);
        if (str->parsed()) return cmd_strata(opts);
        if (vfl->parsed()) return cmd_verify_fl(opts);
        if (cor->parsed()) return cmd_corpus(opts, corpus_dir);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const PrecisionError& e) {
        std::cerr << "precision error: " << e.what() << "\n";
        return 3;
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const WindowError& e) {
        std::cerr << "window error: " << e.what() << "\n";
        return 3;
    } catch (const IdentityError& e) {
        std::cerr << "identity violation: " << e.what() << "\n";
        return 4;
    }
    log_info("no subcommand dispatched");
    return 1;
}
