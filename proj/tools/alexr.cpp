// Command-line front end: evaluate cobordism and knot description files,
// extract the classical invariants, and run the randomized verification
// suites.  Exit codes: 0 success, 1 check failure, 2 input error.

#include "alexr/corpus.hpp"
#include "alexr/io.hpp"
#include "alexr/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace alexr;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct EvalResult {
    GradedMap value;
    CobObject source, target;
    int src_genus = 0, dst_genus = 0;
};

EvalResult evaluate(const InputDocument& doc) {
    if (doc.kind == "heegaard-word") {
        const HeegaardWord& w = doc.word();
        return {eval_word(w), w.source(), w.target(), w.source().genus, w.target().genus};
    }
    if (doc.kind == "presented-cobordism") {
        const PresentedCobordism& p = doc.presented();
        return {eval_presented(p), p.source(), p.target(), p.g_minus, p.g_plus};
    }
    throw std::invalid_argument("document kind '" + doc.kind + "' is not evaluable");
}

void print_eval(const EvalResult& r, const SessionConfig& cfg) {
    GradedMap n = normalize_global(r.value);
    bool integral = integrality_check(r.value);
    if (cfg.json_output) {
        Json j = graded_map_json(n, r.src_genus, r.dst_genus);
        j["integral"] = integral;
        try {
            MagnusData md = magnus_extract(n);
            j["tau"] = render(normalize_unit(md.tau).first);
            Json rows = Json::array();
            for (int rr = 0; rr < md.r.rows; ++rr) {
                Json row = Json::array();
                for (int cc = 0; cc < md.r.cols; ++cc) row.push_back(render(md.r.at(rr, cc)));
                rows.push_back(std::move(row));
            }
            j["magnus"] = std::move(rows);
        } catch (const std::exception&) {
        }
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << render_graded_map(n, r.src_genus, r.dst_genus);
    std::cout << "integral: " << (integral ? "yes" : "no") << "\n";
    if (r.value.degree == 0 && r.src_genus == r.dst_genus) {
        try {
            MagnusData md = magnus_extract(n);
            std::cout << "tau(M, top) = " << render(normalize_unit(md.tau).first)
                      << " (up to ±t^k)\n";
            std::cout << "magnus matrix:\n";
            for (int rr = 0; rr < md.r.rows; ++rr) {
                std::cout << "  [";
                for (int cc = 0; cc < md.r.cols; ++cc) {
                    if (cc) std::cout << ", ";
                    std::cout << render(md.r.at(rr, cc));
                }
                std::cout << "]\n";
            }
        } catch (const std::exception&) {
        }
    }
}

int check_vars(const InputDocument& doc, SessionConfig& cfg, bool vars_set) {
    if (vars_set && cfg.vars != doc.vars) {
        std::cerr << "error: --vars " << cfg.vars << " conflicts with document vars " << doc.vars
                  << "\n";
        return kExitInputError;
    }
    cfg.vars = doc.vars;
    return kExitOk;
}

Json error_json(const std::string& code, const std::string& message) {
    return Json{{"error", code}, {"message", message}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact evaluator for Alexander/Reidemeister invariants of cobordisms"};
    app.require_subcommand(1);
    app.fallthrough();

    SessionConfig cfg;
    bool vars_set = false;
    app.add_flag("--json", cfg.json_output, "machine-readable output");
    app.add_option("--vars", cfg.vars, "number of variables (must match documents)")
        ->each([&](const std::string&) { vars_set = true; });
    app.add_option("--seed", cfg.seed, "seed for randomized suites");

    std::string file, file_b, suite_name, replay_file;
    int instances = 0;

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a cobordism document");
    eval_cmd->add_option("file", file)->required();
    CLI::App* knot_cmd = app.add_subcommand("knot", "Alexander polynomial of a knot document");
    knot_cmd->add_option("file", file)->required();
    CLI::App* closed_cmd = app.add_subcommand("closed", "torsion of a closed manifold document");
    closed_cmd->add_option("file", file)->required();
    CLI::App* magnus_cmd = app.add_subcommand("magnus", "Magnus/torsion factorization of a document");
    magnus_cmd->add_option("file", file)->required();
    CLI::App* compose_cmd = app.add_subcommand("compose", "evaluate the composite of two documents");
    compose_cmd->add_option("fileA", file)->required();
    compose_cmd->add_option("fileB", file_b)->required();
    CLI::App* dual_cmd = app.add_subcommand("dual", "emit the time-reversed Heegaard word");
    dual_cmd->add_option("file", file)->required();
    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", suite_name)->required();
    verify_cmd->add_option("--instances", instances, "instance count override");
    verify_cmd->add_option("--replay", replay_file, "re-run a serialized counterexample");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval_cmd->parsed()) {
            InputDocument doc = load_document(file);
            if (int rc = check_vars(doc, cfg, vars_set)) return rc;
            print_eval(evaluate(doc), cfg);
            return kExitOk;
        }
        if (magnus_cmd->parsed()) {
            InputDocument doc = load_document(file);
            if (int rc = check_vars(doc, cfg, vars_set)) return rc;
            EvalResult r = evaluate(doc);
            magnus_extract(r.value);  // errors out unless the value factors
            print_eval(r, cfg);
            return kExitOk;
        }
        if (knot_cmd->parsed()) {
            InputDocument doc = load_document(file);
            if (doc.kind != "knot") throw std::invalid_argument("knot subcommand expects a knot document");
            if (int rc = check_vars(doc, cfg, vars_set)) return rc;
            LaurentPoly delta = knot_alexander(doc.knot());
            if (cfg.json_output) {
                std::cout << Json{{"delta", render(delta)},
                                  {"delta_at_one_unit", alexander_at_one_ok(delta)}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "Delta = " << render(delta) << " (up to ±t^k)\n";
                if (!alexander_at_one_ok(delta))
                    std::cout << "note: Delta(1) is not ±1 (input may not be a knot group in a homology sphere)\n";
            }
            return kExitOk;
        }
        if (closed_cmd->parsed()) {
            InputDocument doc = load_document(file);
            if (doc.kind != "closed-manifold")
                throw std::invalid_argument("closed subcommand expects a closed-manifold document");
            if (int rc = check_vars(doc, cfg, vars_set)) return rc;
            RatFunc tau = closed_torsion(doc.knot());
            if (cfg.json_output)
                std::cout << Json{{"tau", render(normalize_unit(tau).first)}}.dump(2) << "\n";
            else
                std::cout << "tau(N) = " << render(normalize_unit(tau).first) << " (up to ±t^k)\n";
            return kExitOk;
        }
        if (compose_cmd->parsed()) {
            InputDocument a = load_document(file);
            InputDocument b = load_document(file_b);
            if (int rc = check_vars(a, cfg, vars_set)) return rc;
            if (b.vars != a.vars) throw std::invalid_argument("documents use different variable counts");
            EvalResult ra = evaluate(a), rb = evaluate(b);
            if (!(ra.target == rb.source))
                throw std::invalid_argument("compose: boundary objects of the documents differ");
            EvalResult out{compose(rb.value, ra.value), ra.source, rb.target, ra.src_genus,
                           rb.dst_genus};
            print_eval(out, cfg);
            return kExitOk;
        }
        if (dual_cmd->parsed()) {
            InputDocument doc = load_document(file);
            if (doc.kind != "heegaard-word")
                throw std::invalid_argument("dual subcommand expects a heegaard-word document");
            if (int rc = check_vars(doc, cfg, vars_set)) return rc;
            std::cout << to_json(dual_word(doc.word())).dump(2) << "\n";
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            if (!replay_file.empty()) {
                std::ifstream in(replay_file);
                if (!in) throw std::invalid_argument("cannot open '" + replay_file + "'");
                Json ce = Json::parse(in);
                bool reproduced = replay_counterexample(ce);
                std::cout << (reproduced ? "failure reproduced\n" : "failure did NOT reproduce\n");
                return reproduced ? kExitCheckFailed : kExitOk;
            }
            SuiteResult r = run_suite(suite_name, cfg, instances);
            if (cfg.json_output)
                std::cout << report_json(r, cfg).dump(2) << "\n";
            else
                std::cout << render_report(r, cfg);
            return r.pass() ? kExitOk : kExitCheckFailed;
        }
    } catch (const std::exception& e) {
        if (cfg.json_output)
            std::cerr << error_json("input-error", e.what()).dump(2) << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
