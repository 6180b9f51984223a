#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "crossfam/lemmas.hpp"
#include "crossfam/oracle.hpp"
#include "crossfam/report.hpp"
#include "crossfam/suite.hpp"

namespace {

using namespace crossfam;
using nlohmann::json;

long long default_budget() {
    if (const char* env = std::getenv("CROSSFAM_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return v;
    }
    return kDefaultBudget;
}

json inst_json(const ProblemInstance& inst) {
    return {{"n", inst.n}, {"ks", inst.ks}};
}

json id_json(const FamilyID& fid) { return fid.id.to_string(); }

ProblemInstance make_instance(int n, const std::string& ks_text) {
    std::vector<int> ks;
    std::size_t pos = 0;
    while (pos <= ks_text.size()) {
        std::size_t comma = ks_text.find(',', pos);
        std::string tok = ks_text.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) throw std::invalid_argument("bad --ks list");
        ks.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    for (std::size_t j = 1; j < ks.size(); ++j)
        if (ks[j] > ks[j - 1])
            throw std::invalid_argument(
                "invalid instance: need k_1 >= ... >= k_t, n >= k_1 + k_2");
    return ProblemInstance(n, ks);
}

struct Options {
    int n = 0;
    std::string ks;
    int i = 1;
    int depth = -1;
    bool all_i = false;
    bool curve = false;
    long long rank = 0;
    int k = 0;
    std::string set_text;
    std::string id_text;
    long long budget = default_budget();
    int n_max = 11;
    int t_max = 3;
    std::string format = "json";
    std::string output;
};

void cmd_bound(const Options& opt, Report& rep) {
    ProblemInstance inst = make_instance(opt.n, opt.ks);
    rep.instance = inst_json(inst);
    BoundResult b = theorem_bound(inst);
    rep.results["branch_values"] = {to_json(b.cover_branch),
                                    to_json(b.star_branch)};
    rep.results["bound"] = to_json(b.bound);
    rep.results["cover_attains"] = b.cover_attains;
    rep.results["star_attains"] = b.star_attains;
}

void cmd_f_scan(const Options& opt, Report& rep) {
    ProblemInstance inst = make_instance(opt.n, opt.ks);
    rep.instance = inst_json(inst);
    ScanReport scan = f_scan(inst, opt.i, true);
    rep.results["i"] = opt.i;
    rep.results["max"] = to_json(scan.max_value);
    json argmax = json::array();
    for (const FamilyID& id : scan.argmax) argmax.push_back(id_json(id));
    rep.results["argmax_ids"] = argmax;
    rep.results["attained_at_one"] = scan.attained_at_one;
    rep.results["attained_at_m"] = scan.attained_at_m;
    json rows = json::array();
    for (const FEvaluation& ev : scan.curve) {
        json sizes = json::array();
        for (const Natural& s : ev.per_family_sizes) sizes.push_back(to_json(s));
        rows.push_back({{"rank_offset", to_json(ev.rank_offset)},
                        {"id", id_json(ev.id)},
                        {"f", to_json(ev.f_value)},
                        {"sizes", sizes.dump()}});
    }
    if (opt.curve || opt.format == "csv") rep.results["rows"] = rows;
    Natural bound = theorem_bound(inst).bound;
    if (!inst.degenerate()) {
        bool ok = true;
        const KSet one(inst.n, {1});
        const KSet mm(inst.n, {inst.m(opt.i)});
        for (const FamilyID& id : scan.argmax)
            if (!(id.id == one) && !(id.id == mm)) ok = false;
        rep.checks.push_back({"argmax-at-endpoints", ok, ""});
    }
    bool match = opt.i == 1 ? scan.max_value == bound : scan.max_value <= bound;
    rep.checks.push_back({opt.i == 1 ? "max-equals-bound" : "max-below-bound",
                          match, ""});
}

json lemma_json(const LemmaReport& rep) {
    json j = {{"lemma", rep.lemma},
              {"triples_checked", rep.triples_checked},
              {"vacuous", rep.vacuous},
              {"passed", rep.passed},
              {"failed", rep.failed},
              {"equality_conclusions", rep.equality_conclusions}};
    if (!rep.note.empty()) j["note"] = rep.note;
    if (rep.counterexample)
        j["counterexample"] = {{"c", rep.counterexample->triple.c},
                               {"F", rep.counterexample->triple.f.to_string()},
                               {"G", rep.counterexample->triple.g.to_string()},
                               {"H", rep.counterexample->triple.h.to_string()}};
    return j;
}

void cmd_lemmas(const Options& opt, Report& rep) {
    ProblemInstance inst = make_instance(opt.n, opt.ks);
    rep.instance = inst_json(inst);
    std::vector<int> is;
    if (opt.all_i) {
        for (int i = 1; i <= inst.t(); ++i) is.push_back(i);
    } else {
        is.push_back(opt.i);
    }
    for (int i : is) {
        const std::string tag = "i" + std::to_string(i);
        json conv = json::array();
        bool conv_ok = true;
        const int j_lo = opt.depth >= 0 ? opt.depth : 0;
        const int j_hi = opt.depth >= 0 ? opt.depth : inst.k(i) - 1;
        for (int j = j_lo; j <= j_hi; ++j) {
            LemmaReport r = verify_local_convexity(inst, i, j);
            json jj = lemma_json(r);
            jj["depth"] = j;
            conv.push_back(jj);
            conv_ok = conv_ok && r.pass();
        }
        rep.results[tag]["local_convexity"] = conv;
        rep.checks.push_back({"local-convexity-" + tag, conv_ok, ""});

        RidgeReport ridges = verify_ridges(inst, i);
        for (const RidgeChain* ch : {&ridges.low, &ridges.mid}) {
            json vals = json::array();
            for (const Natural& v : ch->f_values) vals.push_back(to_json(v));
            rep.results[tag][ch->name] = {{"applicable", ch->applicable},
                                          {"f_values", vals},
                                          {"checked", ch->checked},
                                          {"vacuous", ch->vacuous},
                                          {"failed", ch->failed},
                                          {"note", ch->note}};
        }
        rep.checks.push_back({"ridges-" + tag, ridges.pass(), ""});

        ChainReport chain = reduction_chain(inst, i);
        json cks = json::array();
        for (const ChainCheck& c : chain.checks)
            cks.push_back({{"name", c.name},
                           {"applicable", c.applicable},
                           {"ok", c.ok}});
        rep.results[tag]["reduction_chain"] = cks;
        rep.checks.push_back({"reduction-chain-" + tag, chain.pass(), ""});

        LemmaReport beta_cf = verify_beta_closed_form(inst, i);
        rep.results[tag]["beta_closed_form"] = lemma_json(beta_cf);
        rep.checks.push_back({"beta-closed-form-" + tag, beta_cf.pass(), ""});
    }
}

json oracle_json(const OracleResult& res) {
    json j;
    j["optimum"] = to_json(res.optimum);
    json ws = json::array();
    for (const auto& w : res.witnesses) {
        json sizes = json::array();
        for (const Natural& s : w) sizes.push_back(to_json(s));
        ws.push_back(sizes);
    }
    j["witnesses"] = ws;
    json ids = json::array();
    for (const auto& tuple : res.ids) {
        json row = json::array();
        for (const FamilyID& fid : tuple) row.push_back(id_json(fid));
        ids.push_back(row);
    }
    j["ids"] = ids;
    j["matched_case"] = res.matched_case ? json(*res.matched_case) : json();
    j["witnesses_complete"] = res.witnesses_complete;
    j["states_searched"] = res.states_searched;
    j["maximizer_count"] = res.maximizer_count;
    j["method"] = res.method;
    return j;
}

void cmd_oracle(const Options& opt, Report& rep) {
    ProblemInstance inst = make_instance(opt.n, opt.ks);
    rep.instance = inst_json(inst);
    OracleResult res = linitial_search(inst, opt.budget);
    rep.results = oracle_json(res);
    Natural bound = theorem_bound(inst).bound;
    rep.results["bound"] = to_json(bound);
    rep.checks.push_back({"oracle-equals-bound", res.optimum == bound, ""});
}

void cmd_kk_check(const Options& opt, Report& rep) {
    ProblemInstance inst = make_instance(opt.n, opt.ks);
    if (inst.t() != 2)
        throw std::invalid_argument("kk-check: exactly two families required");
    rep.instance = inst_json(inst);
    OracleResult micro = micro_search_t2(inst.n, inst.k(1), inst.k(2));
    OracleResult lin = linitial_search(inst, opt.budget);
    rep.results["micro"] = oracle_json(micro);
    rep.results["linitial"] = oracle_json(lin);
    rep.checks.push_back(
        {"micro-equals-linitial", micro.optimum == lin.optimum, ""});
    rep.checks.push_back({"micro-equals-bound",
                          micro.optimum == theorem_bound(inst).bound, ""});
}

void cmd_extremal(const Options& opt, Report& rep) {
    ProblemInstance inst = make_instance(opt.n, opt.ks);
    rep.instance = inst_json(inst);
    json cfgs = json::array();
    bool all_ok = true;
    for (const ExtremalConfig& cfg : extremal_configs(inst)) {
        json sizes = json::array();
        for (const Natural& s : cfg.sizes) sizes.push_back(to_json(s));
        cfgs.push_back({{"case", cfg.case_label},
                        {"families", cfg.family_desc},
                        {"sizes", sizes},
                        {"total", to_json(cfg.total)},
                        {"verified", cfg.verified},
                        {"verify_method", cfg.verify_method}});
        all_ok = all_ok && cfg.verified;
    }
    rep.results["case_labels"] = cfgs;
    rep.checks.push_back({"all-configs-verified", all_ok, ""});
}

void cmd_rank(const Options& opt, Report& rep) {
    KSet s = KSet::parse(opt.set_text, opt.n);
    rep.results["set"] = s.to_string();
    rep.results["rank"] = to_json(lex_rank(s, opt.n, s.size()));
}

void cmd_unrank(const Options& opt, Report& rep) {
    KSet s = lex_unrank(Natural(opt.rank), opt.n, opt.k);
    rep.results["rank"] = std::to_string(opt.rank);
    rep.results["set"] = s.to_string();
}

void cmd_partner(const Options& opt, Report& rep) {
    KSet s = KSet::parse(opt.set_text, opt.n);
    rep.results["set"] = s.to_string();
    rep.results["partner"] = partner(s).to_string();
}

void cmd_size(const Options& opt, Report& rep) {
    KSet raw = KSet::parse(opt.id_text, opt.n);
    FamilyID fid = normalize_id(raw, opt.k);
    rep.results["id"] = raw.to_string();
    rep.results["canonical_id"] = fid.id.to_string();
    Natural a = size_from_id(fid);
    Natural b = size_from_id_direct(fid);
    rep.results["size"] = to_json(a);
    rep.checks.push_back({"size-formulas-agree", a == b, ""});
}

void cmd_suite(const Options& opt, Report& rep) {
    SuiteResult res = run_suite({opt.n_max, opt.t_max, opt.budget});
    rep.results = res.results;
    rep.checks = res.checks;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cross-intersecting family calculator"};
    app.require_subcommand(1);
    Options opt;
    std::string command;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "json, csv, or text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--output", opt.output, "write the report to a file");
    };
    auto add_instance = [&](CLI::App* sub) {
        sub->add_option("--n", opt.n, "ground-set size")->required();
        sub->add_option("--ks", opt.ks, "uniformities, descending (e.g. 4,3,2)")
            ->required();
    };

    CLI::App* bound = app.add_subcommand("bound", "the two-branch maximum");
    add_instance(bound);
    add_common(bound);
    CLI::App* fscan = app.add_subcommand("f-scan", "objective over the ID space");
    add_instance(fscan);
    fscan->add_option("--i", opt.i, "distinguished family (1-based)");
    fscan->add_flag("--curve", opt.curve, "include the full curve");
    add_common(fscan);
    CLI::App* lemmas = app.add_subcommand("lemmas", "structural lemma verifiers");
    add_instance(lemmas);
    lemmas->add_option("--i", opt.i, "distinguished family (1-based)");
    lemmas->add_option("--depth", opt.depth, "restrict to one suffix depth j");
    lemmas->add_flag("--all-i", opt.all_i, "verify every index");
    add_common(lemmas);
    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive ground truth");
    add_instance(oracle);
    oracle->add_option("--budget", opt.budget, "state budget");
    add_common(oracle);
    CLI::App* kk = app.add_subcommand("kk-check", "micro vs restricted search");
    add_instance(kk);
    kk->add_option("--budget", opt.budget, "state budget");
    add_common(kk);
    CLI::App* extremal = app.add_subcommand("extremal", "equality-case witnesses");
    add_instance(extremal);
    add_common(extremal);
    CLI::App* rank = app.add_subcommand("rank", "lex rank of a k-set");
    rank->add_option("--n", opt.n, "ground-set size")->required();
    rank->add_option("--set", opt.set_text, "elements, e.g. 1,3,4")->required();
    add_common(rank);
    CLI::App* unrank = app.add_subcommand("unrank", "k-set at a lex rank");
    unrank->add_option("--n", opt.n, "ground-set size")->required();
    unrank->add_option("--k", opt.k, "uniformity")->required();
    unrank->add_option("--rank", opt.rank, "1-based rank")->required();
    add_common(unrank);
    CLI::App* partner_cmd = app.add_subcommand("partner", "partner of a set");
    partner_cmd->add_option("--n", opt.n, "ground-set size")->required();
    partner_cmd->add_option("--set", opt.set_text, "elements")->required();
    add_common(partner_cmd);
    CLI::App* size = app.add_subcommand("size", "L-initial family size from an ID");
    size->add_option("--n", opt.n, "ground-set size")->required();
    size->add_option("--k", opt.k, "uniformity")->required();
    size->add_option("--id", opt.id_text, "family ID, e.g. 2,3")->required();
    add_common(size);
    CLI::App* suite = app.add_subcommand("suite", "full verification suite");
    suite->add_option("--n-max", opt.n_max, "largest ground-set size");
    suite->add_option("--t-max", opt.t_max, "largest family count");
    suite->add_option("--budget", opt.budget, "state budget");
    add_common(suite);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    Report rep;
    const auto start = std::chrono::steady_clock::now();
    try {
        CLI::App* sub = app.get_subcommands().front();
        rep.command = sub->get_name();
        if (rep.command == "bound") cmd_bound(opt, rep);
        else if (rep.command == "f-scan") cmd_f_scan(opt, rep);
        else if (rep.command == "lemmas") cmd_lemmas(opt, rep);
        else if (rep.command == "oracle") cmd_oracle(opt, rep);
        else if (rep.command == "kk-check") cmd_kk_check(opt, rep);
        else if (rep.command == "extremal") cmd_extremal(opt, rep);
        else if (rep.command == "rank") cmd_rank(opt, rep);
        else if (rep.command == "unrank") cmd_unrank(opt, rep);
        else if (rep.command == "partner") cmd_partner(opt, rep);
        else if (rep.command == "size") cmd_size(opt, rep);
        else if (rep.command == "suite") cmd_suite(opt, rep);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    rep.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();

    std::string bytes = emit(rep, opt.format);
    if (!opt.output.empty()) {
        std::ofstream out(opt.output, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << opt.output << "\n";
            return 2;
        }
        out << bytes;
    } else {
        std::cout << bytes;
    }
    return rep.all_ok() ? 0 : 1;
}
