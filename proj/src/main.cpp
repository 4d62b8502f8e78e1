// qmcount: exact quasimap counting plus Monte Carlo smooth-count checks.

#include "qmcount/counting.hpp"
#include "qmcount/excess.hpp"
#include "qmcount/fixtures.hpp"
#include "qmcount/frobenius.hpp"
#include "qmcount/io.hpp"
#include "qmcount/montecarlo.hpp"
#include "qmcount/strata.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

struct Options {
    bool as_json = false;
    bool quiet = false;
};

json report(const std::string& command, json inputs, json results,
            std::vector<std::string> diagnostics = {}) {
    json j;
    j["schema"] = "qmcount/1";
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["results"] = std::move(results);
    j["diagnostics"] = diagnostics;
    return j;
}

void emit(const Options& opt, const json& rep, const std::string& text) {
    if (opt.as_json)
        std::cout << rep.dump(2) << "\n";
    else if (!text.empty())
        std::cout << text << "\n";
}

json qpoly_to_json(const qmc::FrobeniusElement& p) {
    json terms = json::array();
    for (const auto& [key, c] : p.terms()) {
        json t;
        t["x_exp"] = key.first;
        t["q_exp"] = key.second;
        t["coeff"] = c.get_str();
        terms.push_back(std::move(t));
    }
    return terms;
}

std::string qpoly_to_string(const qmc::FrobeniusElement& p, std::size_t q_vars) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [key, c] : p.terms()) {
        if (!s.empty()) s += " + ";
        s += c.get_str();
        if (key.first > 0) s += "*x^" + std::to_string(key.first);
        for (std::size_t i = 0; i < q_vars; ++i) {
            if (key.second[i] == 0) continue;
            s += "*q";
            if (q_vars > 1) s += std::to_string(i + 1);
            s += "^" + std::to_string(key.second[i]);
        }
    }
    return s;
}

std::string ledger_text(const qmc::Ledger& L) {
    std::string s = "qm = " + L.qm.get_str();
    if (L.km) s += "\nkm = " + L.km->get_str();
    for (const auto& [label, c] : L.contributions)
        s += "\n  stratum " + label + ": " + c.get_str();
    s += L.quasi_stable ? "\npqm (sum of contributions) = " + L.naive_sum.get_str()
                        : "\nnaive stratum sum = " + L.naive_sum.get_str();
    if (L.residual) s += "\nresidual = " + L.residual->get_str();
    if (!L.quasi_stable)
        s += "\nNON-QUASISTABLE: the strata intersect, the naive sum is not a PQM number";
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasimap counting: exact intersection numbers, excess ledgers,\n"
                 "quantum Frobenius algebra and Monte Carlo smooth-count checks"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.as_json, "emit a JSON report");
    app.add_flag("--quiet", opt.quiet, "suppress informational output");

    // dim
    std::vector<long> dim_k{1}, dim_d{1};
    long dim_n = 1;
    std::string dim_problem;
    auto* cmd_dim = app.add_subcommand("dim", "moduli and virtual dimensions");
    cmd_dim->add_option("--k", dim_k, "source dimension(s)")->delimiter(',');
    cmd_dim->add_option("--n", dim_n, "target dimension");
    cmd_dim->add_option("--d", dim_d, "degree(s)")->delimiter(',');
    cmd_dim->add_option("--problem", dim_problem, "problem file: report its virtual dimension");

    // qm
    std::string qm_file;
    bool qm_force = false;
    auto* cmd_qm = app.add_subcommand("qm", "QM number of a problem file");
    cmd_qm->add_option("problem", qm_file, "problem file")->required();
    cmd_qm->add_flag("--force", qm_force, "integrate even if the data is unbalanced");

    // km-easy
    long km_k = 1, km_n = 1, km_d = 1;
    std::vector<long> km_codims;
    auto* cmd_km = app.add_subcommand("km-easy", "easy KM number (all source cycles points)");
    cmd_km->add_option("--k", km_k)->required();
    cmd_km->add_option("--n", km_n)->required();
    cmd_km->add_option("--d", km_d)->required();
    cmd_km->add_option("--codims", km_codims, "target codimensions")->required()->delimiter(',');

    // pqm
    std::string pqm_file;
    bool pqm_force = false;
    auto* cmd_pqm = app.add_subcommand("pqm", "excess intersection ledger of a problem file");
    cmd_pqm->add_option("problem", pqm_file, "problem file with strata")->required();
    cmd_pqm->add_flag("--force", pqm_force, "integrate even if the data is unbalanced");

    // strata
    long st_k = 2, st_n = 2, st_d = 1;
    auto* cmd_strata = app.add_subcommand("strata", "stratification table of QMap_d(P^k,P^n)");
    cmd_strata->add_option("--k", st_k)->required();
    cmd_strata->add_option("--n", st_n)->required();
    cmd_strata->add_option("--d", st_d)->required();

    // eta
    std::vector<long> fr_k{2};
    long fr_n = 2, fr_x = 0, fr_cutoff = 4;
    auto* cmd_eta = app.add_subcommand("eta", "counit image of an x-monomial");
    cmd_eta->add_option("--k", fr_k, "source dimension(s)")->delimiter(',');
    cmd_eta->add_option("--n", fr_n)->required();
    cmd_eta->add_option("--x", fr_x, "x exponent")->required();
    cmd_eta->add_option("--q-cutoff", fr_cutoff, "q-degree cutoff")->delimiter(',');

    // cqp
    std::vector<long> cqp_k{2}, cqp_j;
    long cqp_n = 2, cqp_cutoff = 4;
    auto* cmd_cqp = app.add_subcommand("cqp", "cyclic higher quantum product");
    cmd_cqp->add_option("--k", cqp_k, "source dimension(s)")->delimiter(',');
    cmd_cqp->add_option("--n", cqp_n)->required();
    cmd_cqp->add_option("--j", cqp_j, "x exponents of the classes, each <= n")->required()->delimiter(',');
    cmd_cqp->add_option("--q-cutoff", cqp_cutoff, "q-degree cutoff")->delimiter(',');

    // smooth
    std::string mc_id = "one-or-two", mc_report = "text";
    std::uint64_t mc_samples = 10000000, mc_seed = 1;
    unsigned mc_threads = 0;
    auto* cmd_smooth = app.add_subcommand("smooth", "Monte Carlo smooth-count integral");
    cmd_smooth->add_option("--integrand", mc_id, "one-or-two | one-or-four | one-or-sixteen");
    cmd_smooth->add_option("--samples", mc_samples, "sample count");
    cmd_smooth->add_option("--seed", mc_seed, "master seed");
    cmd_smooth->add_option("--threads", mc_threads, "worker threads (default QMC_THREADS)");
    cmd_smooth->add_option("--report", mc_report, "text | json");

    // fixtures
    std::string fx_dir = QMCOUNT_FIXTURE_DIR;
    bool fx_skip_mc = false;
    auto* cmd_fx = app.add_subcommand("fixtures", "run the bundled regression fixtures");
    cmd_fx->add_option("--dir", fx_dir, "fixture directory");
    cmd_fx->add_flag("--skip-mc", fx_skip_mc, "symbolic fixtures only");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_dim) {
            if (!dim_problem.empty()) {
                qmc::Problem P = qmc::load_problem(dim_problem);
                mpz_class vd = qmc::virtual_dimension(P.data);
                json res{{"moduli_dim", P.data.moduli_dim().get_str()},
                         {"virtual_dim", vd.get_str()},
                         {"balanced", vd == 0}};
                emit(opt, report("dim", {{"problem", dim_problem}}, res),
                     "moduli dimension = " + P.data.moduli_dim().get_str() +
                         "\nvirtual dimension = " + vd.get_str());
                return 0;
            }
            mpz_class nd = qmc::n_multi(dim_k, dim_n, dim_d);
            json res{{"n_knd", nd.get_str()}};
            emit(opt, report("dim", {{"k", dim_k}, {"n", dim_n}, {"d", dim_d}}, res),
                 nd.get_str());
            return 0;
        }
        if (*cmd_qm) {
            qmc::Problem P = qmc::load_problem(qm_file);
            mpz_class vd = qmc::virtual_dimension(P.data);
            std::vector<std::string> diags;
            if (vd != 0 && qm_force) diags.push_back("forced unbalanced integral");
            mpz_class qm = qmc::qm_number(P.data, qm_force);
            emit(opt, report("qm", {{"problem", qm_file}}, {{"qm", qm.get_str()}}, diags),
                 "qm = " + qm.get_str());
            return 0;
        }
        if (*cmd_km) {
            int km = qmc::km_easy(km_k, km_n, km_d, km_codims);
            emit(opt,
                 report("km-easy", {{"k", km_k}, {"n", km_n}, {"d", km_d}, {"codims", km_codims}},
                        {{"km", km}}),
                 "km = " + std::to_string(km));
            return 0;
        }
        if (*cmd_pqm) {
            qmc::Problem P = qmc::load_problem(pqm_file);
            qmc::Ledger L = qmc::build_ledger(P.data, P.km, P.strata, P.quasi_stable, pqm_force);
            std::vector<std::string> diags;
            if (!L.quasi_stable) diags.push_back("NON-QUASISTABLE");
            emit(opt, report("pqm", {{"problem", pqm_file}}, qmc::ledger_to_json(L), diags),
                 ledger_text(L));
            return 0;
        }
        if (*cmd_strata) {
            auto rows = qmc::stratification_table(st_k, st_n, st_d);
            json jrows = json::array();
            std::string text;
            for (const auto& r : rows) {
                std::string kind =
                    r.kind == qmc::StratumRow::Kind::maps
                        ? "maps"
                        : (r.kind == qmc::StratumRow::Kind::freckle
                               ? std::to_string(r.param) + "-freckle"
                               : "delta=" + std::to_string(r.param) + " scar");
                jrows.push_back({{"kind", kind},
                                 {"codim", r.codim},
                                 {"shape", r.shape},
                                 {"generic_caveat", r.generic_caveat}});
                char buf[160];
                std::snprintf(buf, sizeof(buf), "%-14s codim %-3ld %s%s", kind.c_str(), r.codim,
                              r.shape.c_str(), r.generic_caveat ? "   (generic d)" : "");
                if (!text.empty()) text += "\n";
                text += buf;
            }
            emit(opt, report("strata", {{"k", st_k}, {"n", st_n}, {"d", st_d}}, jrows), text);
            return 0;
        }
        if (*cmd_eta) {
            qmc::QGeometry geom(fr_k, fr_n);
            std::vector<long> cutoff(geom.q_vars(), fr_cutoff);
            auto img = qmc::eta(qmc::FrobeniusElement::x_pow(fr_x, cutoff), geom);
            emit(opt,
                 report("eta", {{"k", fr_k}, {"n", fr_n}, {"x", fr_x}, {"q_cutoff", fr_cutoff}},
                        qpoly_to_json(img)),
                 "eta(x^" + std::to_string(fr_x) + ") = " + qpoly_to_string(img, geom.q_vars()));
            return 0;
        }
        if (*cmd_cqp) {
            qmc::QGeometry geom(cqp_k, cqp_n);
            std::vector<long> cutoff(geom.q_vars(), cqp_cutoff);
            auto val = qmc::cqp(cqp_j, geom, cutoff);
            emit(opt,
                 report("cqp", {{"k", cqp_k}, {"n", cqp_n}, {"j", cqp_j}, {"q_cutoff", cqp_cutoff}},
                        qpoly_to_json(val)),
                 "cqp = " + qpoly_to_string(val, geom.q_vars()));
            return 0;
        }
        if (*cmd_smooth) {
            qmc::Integrand f = qmc::builtin_integrand(mc_id);
            qmc::MCEstimate e = qmc::integrate_mc(f, mc_samples, mc_seed, mc_threads);
            json res{{"integrand", mc_id},  {"samples", e.samples},   {"mean", e.mean},
                     {"std_error", e.std_error}, {"seed", e.seed},    {"threads", e.threads},
                     {"wall_time", e.wall_time}, {"rejected", e.rejected}};
            char buf[160];
            std::snprintf(buf, sizeof(buf), "%s: %.6g +/- %.6g  (%llu samples, %.2fs, %u threads)",
                          mc_id.c_str(), e.mean, e.std_error,
                          static_cast<unsigned long long>(e.samples), e.wall_time, e.threads);
            if (mc_report == "json" || opt.as_json)
                std::cout << report("smooth", {{"integrand", mc_id}}, res).dump(2) << "\n";
            else
                std::cout << buf << "\n";
            return 0;
        }
        if (*cmd_fx) {
            auto results = qmc::run_fixture_dir(fx_dir);
            bool all = true;
            json jres = json::array();
            for (const auto& r : results) {
                all = all && r.pass;
                jres.push_back({{"name", r.name}, {"pass", r.pass}, {"message", r.message}});
                if (!opt.as_json)
                    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name
                              << (r.pass ? "" : "  (" + r.message + ")") << "\n";
            }
            if (!fx_skip_mc) {
                for (const char* id : {"one-or-two", "one-or-four", "one-or-sixteen"}) {
                    qmc::MCEstimate e =
                        qmc::integrate_mc(qmc::builtin_integrand(id), 10000000, 4242, 0);
                    bool pass = std::abs(e.mean - 1.0) <= 0.02 &&
                                std::abs(e.mean - 1.0) <= 3.0 * e.std_error;
                    all = all && pass;
                    std::string name = std::string("smooth ") + id;
                    char buf[96];
                    std::snprintf(buf, sizeof(buf), "%.6g +/- %.6g", e.mean, e.std_error);
                    jres.push_back({{"name", name}, {"pass", pass}, {"message", buf}});
                    if (!opt.as_json)
                        std::cout << (pass ? "PASS " : "FAIL ") << name << "  (" << buf << ")\n";
                }
            }
            if (opt.as_json)
                std::cout << report("fixtures", {{"dir", fx_dir}}, jres).dump(2) << "\n";
            else
                std::cout << (all ? "all fixtures passed" : "FIXTURE FAILURES") << "\n";
            return all ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
