/*
   Copyright 2026 The mvsurf Authors

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

// Acceptance suite. `acceptance K` runs criterion K, no argument runs all.
// Prints one PASS/FAIL line per criterion; exit status 1 if any selected
// criterion fails. All comparisons are exact equalities in F_p.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <mvsurf/mvsurf.hpp>

namespace {

using namespace mvsurf;

// Pinned parameters.
constexpr std::int64_t kMaxMn = 4;
constexpr std::size_t kIdentityTrials = 20;
constexpr std::size_t kCornerTrials = 10;
constexpr std::size_t kScalingTrials = 3;
constexpr std::size_t kLambdaCount = 5;
constexpr std::size_t kValuationTrials = 5;
constexpr std::size_t kRedrawPairs = 5;
constexpr std::size_t kScanTrials = 5;
constexpr std::size_t kScanCap = 100;
constexpr std::size_t kMutationsPerCheck = 3;
constexpr std::uint64_t kSeed = 0;

// Stated expectations.
constexpr std::size_t kStatedScanRows = 35;
constexpr std::size_t kSymbolicTerms = 24;

// Wall-clock budgets in seconds.
constexpr double kBudget[10] = {0, 60, 5, 10, 20, 30, 60, 1, 120, 120};

struct Outcome {
    bool pass = true;
    std::string detail;
};

TrialConfig config(std::int64_t m, std::int64_t n, std::size_t trials) {
    TrialConfig c;
    c.m = m;
    c.n = n;
    c.trials = trials;
    c.seed = kSeed;
    c.lambda_count = kLambdaCount;
    return c;
}

std::string join(const std::vector<std::string>& v, const char* sep = " ") {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
    return s;
}

std::string mn(std::int64_t m, std::int64_t n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

Outcome criterion1() {
    Outcome o;
    std::vector<std::string> signs, bad;
    for (std::int64_t m = 1; m <= kMaxMn; ++m)
        for (std::int64_t n = 1; n <= kMaxMn; ++n) {
            const auto r = check_identity_tensor(config(m, n, kIdentityTrials));
            const bool ok = r.status == Status::Pass && r.sign.has_value() &&
                            r.observed["trials_ok"].get<std::size_t>() == kIdentityTrials;
            if (!ok) bad.push_back(mn(m, n) + ":" + to_string(r.status));
            signs.push_back(mn(m, n) + (r.sign ? (*r.sign > 0 ? "+" : "-") : "?"));
            o.pass = o.pass && ok;
        }
    o.detail = "signs " + join(signs) + (bad.empty() ? "" : "; failing " + join(bad));
    return o;
}

Outcome criterion2() {
    Outcome o;
    std::size_t ok = 0;
    for (std::int64_t m = 1; m <= kMaxMn; ++m)
        for (std::int64_t n = 1; n <= kMaxMn; ++n) {
            const auto r = check_corner_power(config(m, n, kCornerTrials));
            const bool good = r.status == Status::Pass && r.sign.has_value();
            ok += good;
            if (!good) o.detail += " " + mn(m, n) + ":" + r.message;
            o.pass = o.pass && good;
        }
    o.detail = std::to_string(ok) + "/16 bidegrees det = s*Delta^{mn}, constant s" + o.detail;
    return o;
}

Outcome criterion3() {
    Outcome o;
    std::size_t ok = 0, total = 0;
    for (std::int64_t m = 1; m <= kMaxMn; ++m)
        for (std::int64_t n = 1; n <= kMaxMn; ++n)
            for (int axis = 1; axis <= 2; ++axis) {
                ++total;
                const auto r = check_isobaric(config(m, n, kScalingTrials), {axis});
                const bool good = r.status == Status::Pass &&
                                  r.observed["recovered_weighted_exponents"] ==
                                      nlohmann::json::array({expected_isobaric_degree(axis, m, n)}) &&
                                  r.observed["recovered_total_exponents"] == nlohmann::json::array({4 * m * n});
                ok += good;
                if (!good) o.detail += " " + mn(m, n) + "/axis" + std::to_string(axis);
                o.pass = o.pass && good;
            }
    o.detail = std::to_string(ok) + "/" + std::to_string(total) + " exponents 4mn, 2m^2n, 2mn^2 recovered" + o.detail;
    return o;
}

Outcome criterion4() {
    Outcome o;
    std::size_t ok = 0, total = 0;
    for (std::int64_t m = 1; m <= kMaxMn; ++m)
        for (std::int64_t n = 1; n <= kMaxMn; ++n)
            for (auto t : {DetTarget::F, DetTarget::Q, DetTarget::Res})
                for (int b = 1; b <= 4; ++b) {
                    ++total;
                    const auto r = check_multidegree(config(m, n, kScalingTrials), t, b);
                    const bool good = r.status == Status::Pass &&
                                      r.observed["recovered_exponents"] ==
                                          nlohmann::json::array({expected_block_degree(t, b, m, n)});
                    ok += good;
                    if (!good) o.detail += " " + to_string(t) + std::to_string(b) + mn(m, n);
                    o.pass = o.pass && good;
                }
    o.detail = std::to_string(ok) + "/" + std::to_string(total) + " block exponents exact" + o.detail;
    return o;
}

Outcome criterion5() {
    Outcome o;
    std::vector<std::string> mismatches;
    std::size_t ok = 0, total = 0;
    auto run = [&](std::int64_t m, std::int64_t n, int axis) {
        ++total;
        const auto r = check_t_valuation(config(m, n, kValuationTrials), axis);
        const auto stated = stated_t_valuation(axis, m, n);
        const bool good = r.status == Status::Pass;
        ok += good;
        if (!good)
            mismatches.push_back(mn(m, n) + "/axis" + std::to_string(axis) + " stated " + std::to_string(stated) +
                                 " observed " + r.observed["valuations"].dump());
        o.pass = o.pass && good;
    };
    for (std::int64_t m = 1; m <= 4; ++m) {
        for (std::int64_t n = 1; n <= 3; ++n) run(m, n, 1);
        run(m, 1, 2);
    }
    o.detail = std::to_string(ok) + "/" + std::to_string(total) + " match the stated valuation";
    if (!mismatches.empty()) o.detail += "; " + join(mismatches, ", ");
    return o;
}

Outcome criterion6() {
    Outcome o;
    std::vector<std::string> parts;
    for (const auto& e : general_catalog()) {
        const auto L = general_layout(e.spec, e.chain);
        const auto sets = all_deletions(L.domain, static_cast<std::size_t>(L.deletion_size));
        std::size_t pass = 0, zero = 0;
        for (const auto& I : sets) {
            const bool rect = e.name == "rectangle";
            const auto r = check_general_support(e.spec, e.chain, I, config(0, 0, rect ? kIdentityTrials : kRedrawPairs));
            bool good = r.status == Status::Pass && r.observed["F_order"] == L.F_order &&
                        r.observed["Q_order"] == L.Q_order;
            if (rect) good = good && r.observed.contains("rectangle_identity") &&
                             r.observed["rectangle_identity"]["status"] == "pass";
            pass += good;
            zero += r.observed["branch"] == "zero";
            o.pass = o.pass && good;
        }
        parts.push_back(e.name + " F" + std::to_string(L.F_order) + "/Q" + std::to_string(L.Q_order) + " " +
                        std::to_string(pass) + "/" + std::to_string(sets.size()) + " (zero " + std::to_string(zero) + ")");
    }
    o.detail = join(parts, ", ");
    return o;
}

Outcome criterion7() {
    const auto r = check_symbolic_base();
    Outcome o;
    o.pass = r.status == Status::Pass && r.observed["terms"] == kSymbolicTerms;
    o.detail = "terms " + r.observed["terms"].dump() + ", content " + r.observed["content"].get<std::string>() +
               ", degrees " + r.observed["total_degrees"].dump() + "/" + r.observed["omega1_degrees"].dump() + "/" +
               r.observed["omega2_degrees"].dump() + ", blocks " + r.observed["block_degrees"].dump();
    return o;
}

Outcome criterion8() {
    const auto spec = SupportSpec::triangle(3);
    const auto chain = EdgeChain::from_one_based(2, 1);
    const auto a = conjecture_scan(spec, chain, config(0, 0, kScanTrials), kScanCap);
    const auto b = conjecture_scan(spec, chain, config(0, 0, kScanTrials), kScanCap);
    const auto rows = a.observed["rows"].get<std::size_t>();
    const auto zeros = a.observed["zero_count"].get<std::size_t>();
    const auto nonzero = a.observed["nonzero_count"].get<std::size_t>();
    const bool reproducible = a.to_json(false).dump() == b.to_json(false).dump();
    const bool classified = zeros + nonzero == rows && !a.observed["sampled"].get<bool>();
    Outcome o;
    o.pass = a.status == Status::Pass && classified && reproducible && rows == kStatedScanRows;
    o.detail = "rows " + std::to_string(rows) + " (stated " + std::to_string(kStatedScanRows) + ", domain basis " +
               a.observed["domain_size"].dump() + " points, |I| " + a.observed["index_set_size"].dump() +
               "), zero " + std::to_string(zeros) + ", nonzero " + std::to_string(nonzero) + ", structure " +
               to_string(a.status) + ", reproducible " + (reproducible ? "yes" : "no");
    return o;
}

Outcome criterion9() {
    using Check = std::function<VerificationReport(const std::optional<Mutation>&)>;
    auto with = [](TrialConfig c, const std::optional<Mutation>& mu) {
        c.mutation = mu;
        return c;
    };
    const auto tri2 = SupportSpec::triangle(2);
    const auto slanted = EdgeChain::from_one_based(2, 1);
    const DeletionSpec I2{std::vector<LatticePoint>{{1, 0}, {0, 1}}};
    const std::vector<std::pair<std::string, Check>> checks{
        {"identity", [&](auto mu) { return check_identity_tensor(with(config(2, 1, 5), mu)); }},
        {"corner", [&](auto mu) { return check_corner_power(with(config(2, 1, 5), mu)); }},
        {"isobaric1", [&](auto mu) { return check_isobaric(with(config(2, 1, 3), mu), {1}); }},
        {"isobaric2", [&](auto mu) { return check_isobaric(with(config(2, 1, 3), mu), {2}); }},
        {"multidegF", [&](auto mu) { return check_multidegree_blocks(with(config(2, 1, 3), mu), DetTarget::F); }},
        {"multidegQ", [&](auto mu) { return check_multidegree_blocks(with(config(2, 1, 3), mu), DetTarget::Q); }},
        {"multidegRes", [&](auto mu) { return check_multidegree_blocks(with(config(2, 1, 3), mu), DetTarget::Res); }},
        {"valuation1", [&](auto mu) { return check_t_valuation(with(config(2, 2, 3), mu), 1); }},
        {"valuation2", [&](auto mu) { return check_t_valuation(with(config(2, 2, 3), mu), 2); }},
        {"general", [&](auto mu) { return check_general_support(tri2, slanted, I2, with(config(0, 0, 5), mu)); }},
        {"symbolic", [&](auto mu) { return check_symbolic_base(mu); }},
        {"scan", [&](auto mu) { return conjecture_scan(tri2, slanted, with(config(0, 0, 3), mu)); }},
    };
    Outcome o;
    std::vector<std::string> weak;
    for (const auto& [name, run] : checks) {
        const bool baseline = run(std::nullopt).status == Status::Pass;
        std::size_t caught = 0;
        for (std::uint64_t k = 1; k <= kMutationsPerCheck; ++k) caught += run(Mutation{1000 + k}).status == Status::Fail;
        if (!baseline || caught != kMutationsPerCheck)
            weak.push_back(name + (baseline ? "" : "(baseline red)") + " " + std::to_string(caught) + "/" +
                           std::to_string(kMutationsPerCheck));
        o.pass = o.pass && baseline && caught == kMutationsPerCheck;
    }
    o.detail = std::to_string(checks.size() - weak.size()) + "/" + std::to_string(checks.size()) +
               " checks fail under each of " + std::to_string(kMutationsPerCheck) + " seeded corruptions";
    if (!weak.empty()) o.detail += "; " + join(weak, ", ");
    return o;
}

const std::map<int, std::pair<std::string, std::function<Outcome()>>> kCriteria{
    {1, {"factorization identity", criterion1}}, {2, {"corner power", criterion2}},
    {3, {"isobarism", criterion3}},              {4, {"multidegree bookkeeping", criterion4}},
    {5, {"t-valuation", criterion5}},            {6, {"general support", criterion6}},
    {7, {"symbolic base case", criterion7}},     {8, {"deletion-set scan", criterion8}},
    {9, {"mutation sensitivity", criterion9}},
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> which;
    for (int k = 1; k < argc; ++k) which.push_back(std::atoi(argv[k]));
    if (which.empty())
        for (const auto& [k, _] : kCriteria) which.push_back(k);
    bool all_pass = true;
    for (int k : which) {
        const auto it = kCriteria.find(k);
        if (it == kCriteria.end()) {
            std::cerr << "unknown criterion " << k << "\n";
            return 2;
        }
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = it->second.second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_budget = s < kBudget[k];
        const bool pass = o.pass && in_budget;
        all_pass = all_pass && pass;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (pass ? "PASS" : "FAIL") << "  criterion " << k << " (" << it->second.first << "): " << o.detail
             << " [" << s << " s, budget " << kBudget[k] << " s" << (in_budget ? "" : ", OVER BUDGET") << "]";
        std::cout << line.str() << std::endl;
    }
    return all_pass ? 0 : 1;
}
