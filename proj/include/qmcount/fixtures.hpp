#pragma once

// Runs a bundled problem file against its "expected" oracle block:
// the QM integral, the excess ledger (contributions, residual) and the
// quasi-stability diagnostic all have to match exactly.

#include "qmcount/io.hpp"

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

namespace qmc {

struct FixtureResult {
    std::string name;
    bool pass = false;
    std::string message;
};

inline FixtureResult check_fixture(const Problem& P) {
    FixtureResult r;
    r.name = P.name;
    std::ostringstream msg;
    bool ok = true;
    auto expect = [&](const std::string& what, const mpz_class& got, const mpz_class& want) {
        if (got == want) return;
        ok = false;
        msg << what << ": got " << got.get_str() << ", want " << want.get_str() << "; ";
    };

    if (P.expected.is_null()) {
        r.pass = false;
        r.message = "no expected block";
        return r;
    }
    mpz_class qm = qm_number(P.data);
    if (P.expected.contains("qm")) expect("qm", qm, mpz_class(P.expected["qm"].get<long>()));

    Ledger L = build_ledger(P.data, P.km, P.strata, P.quasi_stable);
    if (P.expected.contains("km") && L.km)
        expect("km", *L.km, mpz_class(P.expected["km"].get<long>()));
    if (P.expected.contains("pqm")) {
        if (!P.quasi_stable) {
            ok = false;
            msg << "pqm expected on a non-quasistable fixture; ";
        } else {
            expect("pqm", L.naive_sum, mpz_class(P.expected["pqm"].get<long>()));
        }
    }
    if (P.expected.contains("naive_sum"))
        expect("naive_sum", L.naive_sum, mpz_class(P.expected["naive_sum"].get<long>()));
    if (P.expected.contains("residual") && L.residual)
        expect("residual", *L.residual, mpz_class(P.expected["residual"].get<long>()));
    if (P.expected.contains("quasi_stable") &&
        P.expected["quasi_stable"].get<bool>() != L.quasi_stable) {
        ok = false;
        msg << "quasi_stable flag mismatch; ";
    }
    if (P.expected.contains("contributions")) {
        const auto& want = P.expected["contributions"];
        if (want.size() != L.contributions.size()) {
            ok = false;
            msg << "stratum count: got " << L.contributions.size() << ", want " << want.size()
                << "; ";
        } else {
            for (std::size_t i = 0; i < L.contributions.size(); ++i)
                expect("contribution " + L.contributions[i].first, L.contributions[i].second,
                       mpz_class(want[i].get<long>()));
        }
    }
    r.pass = ok;
    r.message = ok ? "ok" : msg.str();
    return r;
}

inline std::vector<FixtureResult> run_fixture_dir(const std::string& dir) {
    namespace fs = std::filesystem;
    std::vector<std::string> paths;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".json") paths.push_back(entry.path().string());
    std::sort(paths.begin(), paths.end());
    std::vector<FixtureResult> out;
    for (const auto& p : paths) {
        try {
            out.push_back(check_fixture(load_problem(p)));
        } catch (const std::exception& e) {
            FixtureResult r;
            r.name = p;
            r.pass = false;
            r.message = e.what();
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace qmc
