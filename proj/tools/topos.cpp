// topos: batch front end for scenes and the oracle suites.
#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "topos/dsl/loader.hpp"
#include "topos/dsl/parser.hpp"
#include "topos/export.hpp"
#include "topos/oracle/suite.hpp"
#include "topos/proof.hpp"
#include "topos/query.hpp"

using namespace topos;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kInconsistent = 1, kMismatch = 2 };

struct Flags {
    bool json = false;
    std::vector<std::string> limits;
    std::string expect;
};

void add_common(CLI::App* cmd, Flags& f) {
    cmd->add_flag("--json", f.json, "JSON on standard output");
    cmd->add_option("--limits", f.limits, "depth=N budget=M")->expected(1, 2);
}

SaturationLimits apply_limits(SaturationLimits lim, const std::vector<std::string>& kv) {
    for (const auto& item : kv) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("--limits", "expected key=value, got '" + item + "'");
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        try {
            if (key == "depth") lim.depth = std::stoi(val);
            else if (key == "budget") lim.budget = std::stoull(val);
            else throw CLI::ValidationError("--limits", "unknown limit '" + key + "'");
        } catch (const std::logic_error&) {
            throw CLI::ValidationError("--limits", "bad number '" + val + "'");
        }
    }
    return lim;
}

bool consistent(const Kb& kb) { return kb.conflicts().empty() && kb.violations().empty(); }

// Messages often start with their own axiom label.
std::string labelled(const std::string& axiom, const std::string& msg) {
    if (msg.rfind(axiom + ":", 0) == 0) return msg;
    return axiom + ": " + msg;
}

void print_report(const Kb& kb, std::ostream& os) {
    for (const auto& c : kb.conflicts()) {
        os << "inconsistent: " << labelled(c.axiom, c.message) << "\n";
        for (FactId f : {c.positive, c.negative})
            if (f != kNone) os << explain_text(kb, f);
    }
    for (const auto& v : kb.violations())
        os << "inconsistent: " << labelled(v.axiom, v.message) << " at " << v.loc.str() << "\n";
}

json header(const std::string& command) { return {{"format", kJsonFormat}, {"command", command}}; }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// Literals print as written; merged names would hide which direction was asked about.
std::string verdict_line(const std::string& shown, const Verdict& v) {
    std::string s = shown + ": " + std::string(status_name(v.status));
    if (!v.case_tag.empty()) s += " [" + v.case_tag + "]";
    if (!v.failed.empty()) s += " failed " + v.failed;
    if (!v.note.empty()) s += " (" + v.note + ")";
    for (const auto& w : v.witness) s += " witness " + w;
    if (v.proof.valid()) s += " proof #" + std::to_string(v.proof.fact);
    return s;
}

int cmd_infer(const std::vector<std::string>& files, const Flags& f) {
    json out = header("infer");
    out["scenes"] = json::array();
    int rc = kOk;
    for (const auto& file : files) {
        auto scene = dsl::load_file(file);
        auto res = scene.kb.saturate(apply_limits(scene.limits, f.limits));
        if (!consistent(scene.kb)) rc = kInconsistent;
        std::vector<std::string> lits;
        for (FactId id = 0; id < scene.kb.fact_count(); ++id) {
            const Fact& fact = scene.kb.fact(id);
            if (fact.alias_of != kNone || fact.rule == RuleId::Asserted) continue;
            if (fact.atom.rel == Rel::Allen) {
                auto best = scene.kb.allen_fact(fact.atom.a[0], fact.atom.a[1], fact.atom.a[2]);
                if (!best || *best != id) continue;
            }
            lits.push_back(scene.kb.atom_str(fact.atom, fact.positive));
        }
        std::sort(lits.begin(), lits.end());
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
        if (f.json) {
            out["scenes"].push_back({{"file", file},
                                     {"consistent", consistent(scene.kb)},
                                     {"saturation", saturation_json(res)},
                                     {"entities", entities_json(scene.kb)},
                                     {"derived", lits},
                                     {"conflicts", conflicts_json(scene.kb)}});
        } else {
            std::cout << "# " << file << ": " << lits.size() << " derived literals"
                      << (res.partial ? " (partial: limits reached)" : "") << "\n";
            for (const auto& l : lits) std::cout << l << "\n";
            for (const auto& d : res.defaults_applied) std::cout << "default applied: " << d << "\n";
            for (const auto& d : res.defaults_blocked) std::cout << "default blocked: " << d << "\n";
            print_report(scene.kb, std::cout);
        }
    }
    if (f.json) emit(out);
    return rc;
}

int cmd_query(const std::string& file, const std::vector<std::string>& texts, const Flags& f) {
    auto scene = dsl::load_file(file);
    auto lim = apply_limits(scene.limits, f.limits);
    std::optional<Status> forced;
    if (!f.expect.empty()) {
        forced = parse_status(f.expect);
        if (!forced) throw CLI::ValidationError("--expect", "verdict must be entailed, refuted or unknown");
    }
    std::vector<dsl::QueryItem> items;
    if (texts.empty()) {
        items = scene.queries;
    } else {
        for (const auto& t : texts) {
            dsl::QueryItem q;
            q.lit = dsl::resolve_literal(scene.kb, dsl::parse_literal(t));
            q.text = t;
            items.push_back(q);
        }
    }
    json out = header("query");
    out["file"] = file;
    out["pragmatics"] = "not evaluated";
    out["verdicts"] = json::array();
    int rc = kOk;
    for (auto& q : items) {
        Verdict v = scene.kb.query(q.lit, lim);
        auto want = forced ? forced : q.expect;
        bool ok = !want || *want == v.status;
        if (!ok) rc = kMismatch;
        if (f.json) {
            json j = verdict_json(scene.kb, q.lit, v);
            j["literal"] = q.text;
            if (want) {
                j["expect"] = std::string(status_name(*want));
                j["match"] = ok;
            }
            out["verdicts"].push_back(j);
        } else {
            std::cout << verdict_line(q.text, v);
            if (want) std::cout << (ok ? "  ok" : "  MISMATCH expected " + std::string(status_name(*want)));
            std::cout << "\n";
        }
    }
    bool cons = consistent(scene.kb);
    if (f.json) {
        out["consistent"] = cons;
        out["conflicts"] = conflicts_json(scene.kb);
        emit(out);
    } else {
        print_report(scene.kb, std::cerr);
    }
    if (rc == kOk && !cons) rc = kInconsistent;
    return rc;
}

int cmd_check(const std::vector<std::string>& files, const Flags& f) {
    std::optional<bool> want;
    if (f.expect == "consistent") want = true;
    else if (f.expect == "inconsistent") want = false;
    else if (!f.expect.empty())
        throw CLI::ValidationError("--expect", "check expects 'consistent' or 'inconsistent'");
    json out = header("check");
    out["scenes"] = json::array();
    int rc = kOk;
    for (const auto& file : files) {
        auto scene = dsl::load_file(file);
        auto res = scene.kb.saturate(apply_limits(scene.limits, f.limits));
        bool cons = consistent(scene.kb);
        std::vector<std::string> axioms;
        for (const auto& c : scene.kb.conflicts()) axioms.push_back(c.axiom);
        for (const auto& v : scene.kb.violations()) axioms.push_back(v.axiom);
        std::sort(axioms.begin(), axioms.end());
        axioms.erase(std::unique(axioms.begin(), axioms.end()), axioms.end());
        if (want) {
            if (*want != cons) rc = std::max(rc, int(kMismatch));
        } else if (!cons) {
            rc = std::max(rc, int(kInconsistent));
        }
        if (f.json) {
            out["scenes"].push_back({{"file", file},
                                     {"consistent", cons},
                                     {"axioms", axioms},
                                     {"partial", res.partial},
                                     {"conflicts", conflicts_json(scene.kb)}});
        } else {
            std::cout << file << ": " << (cons ? "consistent" : "inconsistent");
            for (size_t i = 0; i < axioms.size(); ++i) std::cout << (i ? "; " : " [") << axioms[i];
            if (!axioms.empty()) std::cout << "]";
            std::cout << "\n";
            print_report(scene.kb, std::cout);
        }
    }
    if (f.json) emit(out);
    return rc;
}

int cmd_explain(const std::string& file, const std::string& text, const Flags& f) {
    auto scene = dsl::load_file(file);
    Literal lit = dsl::resolve_literal(scene.kb, dsl::parse_literal(text));
    Verdict v = scene.kb.query(lit, apply_limits(scene.limits, f.limits));
    if (f.json) {
        json out = header("explain");
        out["verdict"] = verdict_json(scene.kb, lit, v);
        out["verdict"]["literal"] = text;
        if (v.proof.valid()) {
            out["rules"] = rules_used(scene.kb, v.proof.fact);
            out["compositions"] = composition_steps(scene.kb, v.proof.fact);
        }
        emit(out);
    } else {
        std::cout << verdict_line(text, v) << "\n";
        if (v.proof.valid()) std::cout << explain_text(scene.kb, v.proof);
    }
    return consistent(scene.kb) ? kOk : kInconsistent;
}

int cmd_oracle(const std::string& suite, const std::vector<std::string>& models, int scenes, uint64_t seed,
               const Flags& f) {
    oracle::SuiteOptions opts;
    opts.seed = seed;
    if (scenes >= 0) opts.metric_scenes = scenes;
    for (const auto& m : models)
        for (auto& ns : oracle::load_models(m)) opts.extra_spaces.push_back(std::move(ns));
    auto results = oracle::run_suite(suite, opts);
    bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
    if (f.json) {
        json out = header("oracle-verify");
        out["suite"] = suite;
        out["pass"] = all;
        out["results"] = oracle::results_json(results);
        emit(out);
    } else {
        for (const auto& r : results) {
            std::printf("%-4s %-10s %-20s %8zu cases %7.2fs  %s", r.pass ? "PASS" : "FAIL", r.suite.c_str(),
                        r.id.c_str(), r.cases, r.seconds, r.scope.c_str());
            if (!r.detail.empty()) std::printf("  -- %s", r.detail.c_str());
            std::printf("\n");
        }
        std::printf("%s: %zu checks, %s\n", suite.c_str(), results.size(), all ? "all pass" : "FAILURES");
    }
    return all ? kOk : kInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"topos: qualitative spatial reasoning over scene files"};
    app.require_subcommand(1);
    Flags flags;

    std::vector<std::string> files;
    auto* infer = app.add_subcommand("infer", "saturate scenes and print derived literals");
    infer->add_option("files", files, "scene files")->required()->check(CLI::ExistingFile);
    add_common(infer, flags);

    std::string scene;
    std::vector<std::string> literals;
    auto* query = app.add_subcommand("query", "evaluate literals (default: the scene's own queries)");
    query->add_option("scene", scene, "scene file")->required()->check(CLI::ExistingFile);
    query->add_option("literals", literals, "literals such as \"Dans(livre, table)\"");
    query->add_option("--expect", flags.expect, "entailed | refuted | unknown");
    add_common(query, flags);

    auto* check = app.add_subcommand("check", "consistency report");
    check->add_option("files", files, "scene files")->required()->check(CLI::ExistingFile);
    check->add_option("--expect", flags.expect, "consistent | inconsistent");
    add_common(check, flags);

    std::string literal;
    auto* explain = app.add_subcommand("explain", "derivation tree for one literal");
    explain->add_option("scene", scene, "scene file")->required()->check(CLI::ExistingFile);
    explain->add_option("literal", literal, "literal")->required();
    add_common(explain, flags);

    std::string suite = "geometry";
    std::vector<std::string> models;
    int scenes = -1;
    uint64_t seed = oracle::SuiteOptions{}.seed;
    auto* verify = app.add_subcommand("oracle-verify", "run a theorem suite against the finite models");
    verify->add_option("--suite", suite, "suite name")->check(CLI::IsMember(oracle::suite_names()));
    verify->add_option("--model", models, ".model files with extra spaces")->check(CLI::ExistingFile);
    verify->add_option("--scenes", scenes, "random metric-line scenes for the embedding suite");
    verify->add_option("--seed", seed, "generator seed");
    add_common(verify, flags);

    auto* rules = app.add_subcommand("dump-rules", "list the rule base");
    add_common(rules, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kInconsistent;
    }

    try {
        if (*infer) return cmd_infer(files, flags);
        if (*query) return cmd_query(scene, literals, flags);
        if (*check) return cmd_check(files, flags);
        if (*explain) return cmd_explain(scene, literal, flags);
        if (*verify) return cmd_oracle(suite, models, scenes, seed, flags);
        if (*rules) {
            if (flags.json) {
                json out = header("dump-rules");
                out["rules"] = dump_rules_json();
                emit(out);
            } else {
                std::cout << dump_rules();
            }
            return kOk;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInconsistent;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInconsistent;
    }
    return kOk;
}
