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

// mvsurf: build moving-plane / moving-quadric matrices and run the checks.
//
//   mvsurf build F|Q|corner|dixon [--m M --n N | --support FILE [--chain S:E] [--delete PTS]]
//                [--assign FILE] [--format json|csv|text] [--out PATH]
//   mvsurf verify identity|multidegree|isobaric|corner|valuation|general|symbolic|scan|all [...]
//
// Exit codes: 0 pass, 1 check failure, 2 usage or parse error, 3 inconclusive.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <mvsurf/mvsurf.hpp>

namespace {

using namespace mvsurf;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct Options {
    std::string kind;
    std::string check;
    std::optional<std::int64_t> m, n;
    std::optional<std::int64_t> max_mn;
    std::string support_path;
    std::string chain;
    std::string deletion;
    std::string assign_path;
    std::string format = "json";
    std::string out;
    std::uint64_t prime = kDefaultPrime;
    std::uint64_t seed = 0;
    std::size_t trials = 20;
    std::size_t cap = 100;
    std::optional<int> axis;
    std::string target;
    std::optional<int> block;
    std::optional<std::uint64_t> mutate;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const Options& o, const std::string& payload) {
    if (o.out.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw ParseError("cannot write '" + o.out + "'");
    f << payload;
    if (!payload.empty() && payload.back() != '\n') f << '\n';
}

struct GeneralInput {
    SupportSpec spec;
    EdgeChain chain;
    DeletionSpec deletion;
};

GeneralInput load_general(const Options& o) {
    const auto file = parse_support_json(read_file(o.support_path));
    std::optional<EdgeChain> chain = file.chain;
    if (!o.chain.empty()) chain = parse_chain(o.chain);
    if (!chain) throw ConstraintError("no edge chain: pass --chain start:edges or put \"chain\" in the support file");
    chain->validate(file.spec);
    return {file.spec, *chain, DeletionSpec{parse_point_list(o.deletion)}};
}

std::pair<std::int64_t, std::int64_t> bidegree(const Options& o) {
    const std::int64_t m = o.m.value_or(1), n = o.n.value_or(1);
    if (m < 1 || n < 1)
        throw ConstraintError("bidegree (" + std::to_string(m) + "," + std::to_string(n) + ") must be positive");
    return {m, n};
}

template <class Tmpl>
std::string dump_template(const Options& o, const Tmpl& t) {
    if (o.format == "csv") return template_csv(t);
    if (o.format == "text") return template_text(t);
    return template_json(t).dump(2);
}

std::string dump_matrix(const Options& o, const FieldMatrix& M, const PrimeField& F) {
    if (o.format == "csv") return matrix_csv(M);
    if (o.format == "text") return matrix_text(M);
    return matrix_json(M, F.modulus()).dump(2);
}

CoefficientAssignment<u64> assignment_for(const Options& o, const std::vector<LatticePoint>& support,
                                          const PrimeField& F) {
    if (!o.assign_path.empty()) return parse_assignment_json(read_file(o.assign_path), support, F);
    TrialRng rng(o.seed, "cli/assignment", 0);
    return detail::random_assignment(support, F, rng);
}

template <class Tmpl>
int finish_build(const Options& o, const Tmpl& t, const PrimeField& F, const std::string& name) {
    std::cerr << name << ": " << t.rows() << "x" << t.cols() << "\n";
    if (o.assign_path.empty()) {
        emit(o, dump_template(o, t));
    } else {
        const auto a = parse_assignment_json(read_file(o.assign_path), t.support, F);
        emit(o, dump_matrix(o, specialize(t, a, F), F));
    }
    return kExitPass;
}

int cmd_build(const Options& o) {
    const PrimeField F(o.prime);
    const bool general = !o.support_path.empty();
    if (general && (o.kind == "corner" || o.kind == "dixon"))
        throw ConstraintError("build " + o.kind + " takes --m/--n, not --support");
    if (!general && !o.deletion.empty()) throw ConstraintError("--delete needs --support");
    if (o.kind == "F") {
        if (general) {
            const auto g = load_general(o);
            return finish_build(o, build_F_general(g.spec, g.chain, g.deletion), F, "F");
        }
        const auto [m, n] = bidegree(o);
        return finish_build(o, build_F_tensor(m, n), F, "F");
    }
    if (o.kind == "Q") {
        if (general) {
            const auto g = load_general(o);
            return finish_build(o, build_Q_general(g.spec, g.chain, g.deletion), F, "Q");
        }
        const auto [m, n] = bidegree(o);
        return finish_build(o, build_Q_tensor(m, n), F, "Q");
    }
    const auto [m, n] = bidegree(o);
    if (o.kind == "corner") return finish_build(o, corner_template(m, n), F, "corner");
    // dixon: always numeric
    const auto a = assignment_for(o, SupportSpec::rectangle(m, n).points(), F);
    const auto D = dixon_matrix(dixon_polynomial(F, grid_of(a, 1, m, n), grid_of(a, 2, m, n), grid_of(a, 3, m, n)), m, n);
    std::cerr << "dixon: " << D.rows << "x" << D.cols << "\n";
    emit(o, dump_matrix(o, D, F));
    return kExitPass;
}

TrialConfig base_config(const Options& o) {
    TrialConfig c;
    c.field = PrimeField(o.prime);
    c.trials = o.trials;
    c.seed = o.seed;
    if (o.mutate) c.mutation = Mutation{*o.mutate};
    c.validate();
    return c;
}

std::vector<std::pair<std::int64_t, std::int64_t>> bidegrees(const Options& o) {
    if (o.max_mn && !o.m && !o.n) {
        if (*o.max_mn < 1) throw ConstraintError("--max-mn must be >= 1");
        std::vector<std::pair<std::int64_t, std::int64_t>> out;
        for (std::int64_t m = 1; m <= *o.max_mn; ++m)
            for (std::int64_t n = 1; n <= *o.max_mn; ++n) out.emplace_back(m, n);
        return out;
    }
    return {bidegree(o)};
}

std::vector<int> axes(const Options& o) {
    if (o.axis) return {*o.axis};
    return {1, 2};
}

std::vector<DetTarget> targets(const Options& o) {
    if (o.target.empty()) return {DetTarget::F, DetTarget::Q, DetTarget::Res};
    if (o.target == "F") return {DetTarget::F};
    if (o.target == "Q") return {DetTarget::Q};
    return {DetTarget::Res};
}

std::vector<int> blocks(const Options& o) {
    if (o.block) return {*o.block};
    return {1, 2, 3, 4};
}

void run_tensor(const std::string& check, const Options& o, std::vector<VerificationReport>& out) {
    for (const auto& [m, n] : bidegrees(o)) {
        auto c = base_config(o);
        c.m = m;
        c.n = n;
        if (check == "identity") out.push_back(check_identity_tensor(c));
        if (check == "corner") out.push_back(check_corner_power(c));
        if (check == "isobaric")
            for (int a : axes(o)) out.push_back(check_isobaric(c, {a}));
        if (check == "valuation")
            for (int a : axes(o)) out.push_back(check_t_valuation(c, a));
        if (check == "multidegree")
            for (auto t : targets(o))
                for (int b : blocks(o)) out.push_back(check_multidegree(c, t, b));
    }
}

void run_general(const Options& o, std::vector<VerificationReport>& out) {
    const auto c = base_config(o);
    if (!o.support_path.empty()) {
        const auto g = load_general(o);
        out.push_back(check_general_support(g.spec, g.chain, g.deletion, c));
        return;
    }
    for (const auto& e : general_catalog()) {
        const auto L = general_layout(e.spec, e.chain);
        for (const auto& I : all_deletions(L.domain, static_cast<std::size_t>(L.deletion_size)))
            out.push_back(check_general_support(e.spec, e.chain, I, c));
    }
}

void run_scan(const Options& o, std::vector<VerificationReport>& out) {
    const auto c = base_config(o);
    if (!o.support_path.empty()) {
        const auto g = load_general(o);
        out.push_back(conjecture_scan(g.spec, g.chain, c, o.cap));
        return;
    }
    out.push_back(conjecture_scan(SupportSpec::triangle(3), EdgeChain::from_one_based(2, 1), c, o.cap));
}

std::string params_summary(const nlohmann::json& p) {
    std::string s;
    for (const char* k : {"m", "n", "target", "block", "axis"})
        if (p.contains(k)) s += std::string(s.empty() ? "" : " ") + k + "=" + (p[k].is_string() ? p[k].get<std::string>() : p[k].dump());
    if (p.contains("support")) s += std::string(s.empty() ? "" : " ") + "support=" + std::to_string(p["support"]["points"].size()) + "pts";
    if (p.contains("index_set")) s += " I=" + p["index_set"].dump();
    return s;
}

std::string table(const std::vector<VerificationReport>& reps) {
    std::ostringstream os;
    os << std::left << std::setw(12) << "check" << std::setw(44) << "params" << std::setw(14) << "status"
       << std::setw(6) << "sign" << "ms\n";
    for (const auto& r : reps) {
        os << std::setw(12) << r.check << std::setw(44) << params_summary(r.params) << std::setw(14)
           << to_string(r.status) << std::setw(6) << (r.sign ? std::to_string(*r.sign) : "-") << std::fixed
           << std::setprecision(1) << r.wall_ms;
        if (!r.message.empty()) os << "  " << r.message;
        os << "\n";
    }
    return os.str();
}

int cmd_verify(const Options& o) {
    std::vector<VerificationReport> reps;
    const std::vector<std::string> all{"identity", "corner", "isobaric", "multidegree", "valuation",
                                       "general",  "symbolic", "scan"};
    const std::vector<std::string> selected = o.check == "all" ? all : std::vector<std::string>{o.check};
    for (const auto& ch : selected) {
        if (ch == "general") run_general(o, reps);
        else if (ch == "scan") run_scan(o, reps);
        else if (ch == "symbolic")
            reps.push_back(check_symbolic_base(o.mutate ? std::optional<Mutation>(Mutation{*o.mutate}) : std::nullopt));
        else run_tensor(ch, o, reps);
    }
    bool fail = false, inconclusive = false;
    nlohmann::json doc;
    doc["command"] = "verify " + o.check;
    doc["reports"] = nlohmann::json::array();
    for (const auto& r : reps) {
        doc["reports"].push_back(r.to_json(true));
        fail = fail || r.status == Status::Fail;
        inconclusive = inconclusive || r.status == Status::Inconclusive;
    }
    const Status overall = fail ? Status::Fail : (inconclusive ? Status::Inconclusive : Status::Pass);
    doc["status"] = to_string(overall);
    const std::string tab = table(reps);
    if (o.format == "text") {
        emit(o, tab);
        if (!o.out.empty()) std::cout << tab;
    } else if (o.out.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        emit(o, doc.dump(2));
        std::cout << tab;
    }
    if (fail) return kExitFail;
    if (inconclusive) return kExitInconclusive;
    return kExitPass;
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--m", o.m, "degree in x1");
    sub->add_option("--n", o.n, "degree in x2");
    sub->add_option("--support", o.support_path, "support JSON file {\"points\": [[a1,a2],...], \"chain\": {...}}");
    sub->add_option("--chain", o.chain, "edge chain start:edges, vertices numbered from 1");
    sub->add_option("--delete", o.deletion, "index set, e.g. \"(1,0),(0,1)\"");
    sub->add_option("--format", o.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", o.out, "output path (default stdout)");
    sub->add_option("--prime", o.prime, "field modulus (default 2^62-57)");
    sub->add_option("--seed", o.seed, "rng seed; MVSURF_SEED overrides");
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"mvsurf: moving-plane and moving-quadric matrices over exact fields"};
    app.require_subcommand(1, 1);

    auto* build = app.add_subcommand("build", "dump a labeled template or specialized matrix");
    build->add_option("kind", o.kind, "F | Q | corner | dixon")->required()->check(CLI::IsMember({"F", "Q", "corner", "dixon"}));
    add_common(build, o);
    build->add_option("--assign", o.assign_path, "assignment JSON {\"c[i][a1,a2]\": value}");

    auto* verify = app.add_subcommand("verify", "run checks and write a report");
    verify
        ->add_option("check", o.check, "identity | multidegree | isobaric | corner | valuation | general | symbolic | scan | all")
        ->required()
        ->check(CLI::IsMember({"identity", "multidegree", "isobaric", "corner", "valuation", "general", "symbolic", "scan", "all"}));
    add_common(verify, o);
    verify->add_option("--max-mn", o.max_mn, "sweep (m,n) over {1..K}^2");
    verify->add_option("--trials", o.trials, "trials per check")->check(CLI::PositiveNumber);
    verify->add_option("--cap", o.cap, "scan: enumerate up to this many index sets, sample above");
    verify->add_option("--axis", o.axis, "isobaric/valuation axis")->check(CLI::IsMember({1, 2}));
    verify->add_option("--target", o.target, "multidegree determinant")->check(CLI::IsMember({"F", "Q", "Res"}));
    verify->add_option("--block", o.block, "multidegree block")->check(CLI::Range(1, 4));
    verify->add_option("--mutate", o.mutate, "corrupt one matrix entry (seeded) to exercise failure paths");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (const char* env = std::getenv("MVSURF_SEED")) {
        try {
            std::size_t used = 0;
            o.seed = std::stoull(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument(env);
        } catch (const std::exception&) {
            std::cerr << "error: MVSURF_SEED='" << env << "' is not an unsigned integer\n";
            return kExitUsage;
        }
    }

    try {
        if (build->parsed()) return cmd_build(o);
        return cmd_verify(o);
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFail;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
