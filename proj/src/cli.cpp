#include "tightcx/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "tightcx/acceptance.hpp"
#include "tightcx/corpus.hpp"
#include "tightcx/errors.hpp"
#include "tightcx/flips.hpp"
#include "tightcx/homology.hpp"
#include "tightcx/io.hpp"
#include "tightcx/membership.hpp"
#include "tightcx/parallel.hpp"
#include "tightcx/sigma_mu.hpp"
#include "tightcx/theorems.hpp"
#include "tightcx/tightness.hpp"

namespace tightcx::cli {

namespace {

Json jz(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

Json jq(const RationalVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

Json jv(const IntVector& v) {
    Json a = Json::array();
    for (const auto& x : v.entries()) a.push_back(jz(x));
    return a;
}

Json jmove(const BistellarMove& m) { return Json{{"alpha", m.alpha}, {"beta", m.beta}, {"index", m.index()}}; }

// Face counts f_0..f_d without the empty face.
Json jf(const Complex& x) {
    const auto f = f_vector(x);
    Json a = Json::array();
    for (std::size_t i = 1; i < f.entries().size(); ++i) a.push_back(jz(f.entries()[i]));
    return a;
}

Json jtheorem(const TheoremReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"label", c.label},
                          {"lhs", to_string(c.lhs)},
                          {"relation", to_string(c.relation)},
                          {"rhs", to_string(c.rhs)},
                          {"holds", c.holds}});
    }
    Json values = Json::object();
    for (const auto& [k, v] : r.values) values[k] = v;
    return Json{{"theorem", r.id},
                {"hypotheses_satisfied", r.hypotheses_satisfied},
                {"hypotheses", r.hypotheses},
                {"values", values},
                {"checks", checks},
                {"holds", r.holds()}};
}

bool scalar_array(const Json& j) {
    if (!j.is_array()) return false;
    for (const auto& e : j) {
        if (e.is_structured()) return false;
    }
    return true;
}

std::string scalar(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

void render(const Json& j, std::ostream& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (indent == 0 && it.key() == "schema") continue;
        const Json& v = it.value();
        if (scalar_array(v)) {
            std::string s = "(";
            for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar(v[i]);
            out << pad << it.key() << ": " << s << ")\n";
        } else if (v.is_object()) {
            out << pad << it.key() << ":\n";
            render(v, out, indent + 2);
        } else if (v.is_array()) {
            out << pad << it.key() << ":\n";
            for (const auto& e : v) {
                if (e.is_object()) {
                    out << pad << "  -\n";
                    render(e, out, indent + 4);
                } else {
                    out << pad << "  - " << scalar(e) << "\n";
                }
            }
        } else {
            out << pad << it.key() << ": " << scalar(v) << "\n";
        }
    }
}

std::vector<std::string> split_labels(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError(path + ": cannot write file");
    f << text;
}

// JSON for *.json paths, plain text otherwise.
void write_complex(const std::string& path, const Complex& x, const std::string& name) {
    const bool json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
    write_file(path, json ? serialize_json({name, "", x, Json::object(), {}}) : serialize_text(x));
}

struct Globals {
    bool json = false;
    std::size_t threads = 0;
    int cap = kDefaultSweepCap;
    std::string corpus;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Simplicial complexes: homology, sigma- and mu-vectors, tightness and bistellar flips"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "Emit the report as JSON (schema 1)");
    app.add_option("--threads", g.threads, "Worker threads (default: all cores)");
    app.add_option("--cap", g.cap, "Vertex cap for exhaustive subset sweeps (at most 22)")
        ->check(CLI::Range(1, kMaxSweepCap));
    app.add_option("--corpus", g.corpus, "Corpus directory (overrides TIGHTCX_CORPUS)");

    std::string file;
    std::string field_text = "q";
    std::string method;
    std::string alpha_text, beta_text, output, certificate_out, certificate_in, theorem, class_text = "w";
    std::string filter;
    int k = 1;
    std::optional<int> k_opt, l_opt;
    std::size_t budget = 100000;
    int sphere_d = -1, cycle_n = -1;
    std::vector<long long> random_args;
    bool quick = false;

    auto add_file = [&](CLI::App* c) { c->add_option("file", file, "Complex file (JSON or text)")->required(); };
    auto add_field = [&](CLI::App* c) { c->add_option("--field", field_text, "q, f2, f3, ... fP"); };

    auto* info = app.add_subcommand("info", "Face numbers and structure");
    add_file(info);
    auto* homology = app.add_subcommand("homology", "Betti numbers");
    add_file(homology);
    add_field(homology);
    auto* sigma = app.add_subcommand("sigma", "Sigma-vector");
    add_file(sigma);
    add_field(sigma);
    auto* mu = app.add_subcommand("mu", "Mu-vector");
    add_file(mu);
    add_field(mu);
    mu->add_option("--method", method, "def or relative")->check(CLI::IsMember({"def", "relative"}));
    auto* tight = app.add_subcommand("tight", "Tightness decision");
    add_file(tight);
    add_field(tight);
    tight->add_option("--method", method, "mu or direct")->check(CLI::IsMember({"mu", "direct"}));
    auto* move = app.add_subcommand("move", "Apply a bistellar move");
    add_file(move);
    move->add_option("--alpha", alpha_text, "Comma-separated labels")->required();
    move->add_option("--beta", beta_text, "Comma-separated labels")->required();
    move->add_option("-o,--output", output, "Output file (.json or text)");
    auto* flips = app.add_subcommand("flips", "List bistellar moves");
    add_file(flips);
    auto* stellated = app.add_subcommand("stellated", "Search a reduction to the standard sphere");
    add_file(stellated);
    stellated->add_option("-k", k, "Moves of index < k")->required();
    stellated->add_option("--budget", budget, "State budget");
    stellated->add_option("--certificate", certificate_out, "Write the certificate (JSON)");
    auto* gen = app.add_subcommand("gen", "Generate a complex");
    auto* g_sphere = gen->add_option("--sphere", sphere_d, "Standard sphere of dimension D");
    auto* g_cycle = gen->add_option("--cycle", cycle_n, "N-cycle");
    auto* g_random = gen->add_option("--random-stellated", random_args, "D K MOVES SEED")->expected(4);
    g_sphere->excludes(g_cycle)->excludes(g_random);
    g_cycle->excludes(g_random);
    gen->add_option("-o,--output", output, "Output file")->required();
    gen->add_option("--certificate", certificate_out, "Write the flip certificate (JSON)");
    auto* klass = app.add_subcommand("class", "W_k / K_k membership");
    add_file(klass);
    klass->add_option("-k", k, "Class index")->required();
    klass->add_option("--class", class_text, "w or k")->check(CLI::IsMember({"w", "k", "W", "K"}));
    klass->add_option("--budget", budget, "State budget per link");
    auto* verify_cmd = app.add_subcommand("verify", "Check a theorem");
    verify_cmd->add_option("file", file, "Complex file (not needed for EQ12)");
    verify_cmd->add_option("--theorem", theorem, "Theorem id")->required();
    add_field(verify_cmd);
    verify_cmd->add_option("-k", k_opt, "Class index k");
    verify_cmd->add_option("-l", l_opt, "Neighbourliness parameter l");
    verify_cmd->add_option("--certificate", certificate_in, "Flip certificate (JSON)");
    verify_cmd->add_option("--budget", budget, "State budget");
    auto* corpus_check = app.add_subcommand("corpus-check", "Check the corpus and run the acceptance suite");
    corpus_check->add_option("--filter", filter, "Only entries whose name contains this text");
    corpus_check->add_flag("--quick", quick, "Skip the acceptance suite");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kComputed;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kComputed;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    if (g.threads > 0) set_thread_count(g.threads);
    if (!g.corpus.empty()) setenv("TIGHTCX_CORPUS", g.corpus.c_str(), 1);
    const SweepOptions sweep{g.cap};

    Json report{{"schema", 1}};
    int code = kComputed;
    auto emit = [&]() {
        if (g.json) {
            out << report.dump(2) << "\n";
        } else {
            render(report, out, 0);
        }
    };

    try {
        const FieldSpec field = FieldSpec::parse(field_text);
        auto load = [&]() { return load_complex(file); };
        CLI::App* cmd = app.get_subcommands().front();
        report["command"] = cmd->get_name();

        if (cmd == info) {
            const auto cf = load();
            const auto& x = cf.complex;
            const auto s = structure_report(x);
            report["name"] = cf.name;
            report["dim"] = x.dim();
            report["vertices"] = x.num_vertices();
            report["facets"] = x.facets().size();
            report["f"] = jf(x);
            report["g"] = jv(g_vector(x));
            report["pure"] = s.pure;
            report["weak_pseudomanifold"] = s.weak_pseudomanifold;
            report["pseudomanifold"] = s.pseudomanifold;
            report["closed"] = s.closed;
            report["connected"] = s.connected;
            report["neighbourliness"] = s.neighbourliness;
            report["euler_characteristic"] = jz(s.euler_characteristic);
            report["hash"] = content_hash(x);
            if (!cf.warnings.empty()) report["warnings"] = cf.warnings;
        } else if (cmd == homology) {
            const auto x = load().complex;
            report["field"] = field.name();
            const auto t = betti(x, field);
            report["betti"] = t.betti;
            report["reduced"] = t.reduced;
        } else if (cmd == sigma) {
            const auto x = load().complex;
            report["field"] = field.name();
            report["sigma"] = jq(sigma_vector(x, field, sweep));
        } else if (cmd == mu) {
            const auto x = load().complex;
            report["field"] = field.name();
            report["method"] = method.empty() ? "def" : method;
            report["mu"] = jq(method == "relative" ? mu_via_relative(x, field, sweep) : mu_vector(x, field, sweep));
        } else if (cmd == tight) {
            const auto x = load().complex;
            report["field"] = field.name();
            report["method"] = method.empty() ? "mu" : method;
            if (method == "direct") {
                const auto r = tight_direct(x, field, sweep);
                report["tight"] = r.tight;
                if (r.witness) report["witness"] = {{"subset", r.witness->subset}, {"degree", r.witness->degree}};
                if (!r.reason.empty()) report["reason"] = r.reason;
            } else {
                const auto r = tight_mu(x, field, sweep);
                report["tight"] = r.tight;
                report["two_neighbourly"] = r.two_neighbourly;
                report["mu"] = jq(r.mu);
                report["betti"] = r.betti.betti;
                report["mu_equals_beta"] = r.mu_equals_beta;
            }
        } else if (cmd == move) {
            const auto cf = load();
            const BistellarMove m{split_labels(alpha_text), split_labels(beta_text)};
            const auto y = apply_move(cf.complex, m);
            report["move"] = jmove(m);
            report["f"] = jf(y);
            if (!output.empty()) {
                write_complex(output, y, cf.name);
                report["output"] = output;
            } else {
                report["complex"] = complex_to_json(y, cf.name);
            }
        } else if (cmd == flips) {
            const auto x = load().complex;
            const auto e = enumerate_moves(x);
            Json moves = Json::array();
            for (const auto& m : e.proper) moves.push_back(jmove(m));
            report["proper_moves"] = moves;
            report["zero_move_sites"] = e.zero_move_sites.size();
        } else if (cmd == stellated) {
            const auto x = load().complex;
            const auto r = stellated_reduction(x, k, budget);
            report["k"] = k;
            report["verdict"] = to_string(r.verdict);
            report["states"] = r.states;
            if (!r.reason.empty()) report["reason"] = r.reason;
            if (r.verdict == Verdict::Yes) {
                Json moves = Json::array();
                for (const auto& m : r.certificate.moves) moves.push_back(jmove(m));
                report["moves"] = moves;
                if (!certificate_out.empty()) {
                    write_file(certificate_out, certificate_to_json(r.certificate).dump(2) + "\n");
                    report["certificate"] = certificate_out;
                }
            }
            if (r.verdict == Verdict::Unknown) code = kBudgetExhausted;
        } else if (cmd == gen) {
            Complex x;
            std::optional<FlipCertificate> cert;
            if (sphere_d >= 0) {
                x = standard_sphere(sphere_d);
            } else if (cycle_n >= 0) {
                x = cycle(cycle_n);
            } else if (random_args.size() == 4) {
                cert = random_stellated_sphere(static_cast<int>(random_args[0]), static_cast<int>(random_args[1]),
                                               static_cast<int>(random_args[2]),
                                               static_cast<std::uint64_t>(random_args[3]));
                x = cert->end;
                report["moves_applied"] = cert->moves.size();
                report["max_index"] = cert->max_index;
            } else {
                throw PreconditionError("gen needs --sphere, --cycle or --random-stellated");
            }
            write_complex(output, x, "");
            report["output"] = output;
            report["f"] = jf(x);
            if (cert && !certificate_out.empty()) {
                write_file(certificate_out, certificate_to_json(*cert).dump(2) + "\n");
                report["certificate"] = certificate_out;
            }
        } else if (cmd == klass) {
            const auto x = load().complex;
            const ClassKind kind = (class_text == "k" || class_text == "K") ? ClassKind::K : ClassKind::W;
            const auto v = class_membership(x, k, kind, budget);
            report["class"] = to_string(kind) + "_" + std::to_string(k) + "(" + std::to_string(x.dim()) + ")";
            report["verdict"] = to_string(v.verdict);
            report["states"] = v.states;
            if (!v.reason.empty()) report["reason"] = v.reason;
            Json links = Json::array();
            for (const auto& l : v.links) {
                Json e{{"vertex", l.vertex}, {"verdict", to_string(l.verdict)}};
                if (l.flips) e["moves"] = l.flips->moves.size();
                if (!l.reason.empty()) e["reason"] = l.reason;
                links.push_back(e);
            }
            report["links"] = links;
            if (v.verdict == Verdict::Unknown) code = kBudgetExhausted;
        } else if (cmd == verify_cmd) {
            TheoremParams params;
            params.k = k_opt;
            params.l = l_opt;
            params.budget = budget;
            params.sweep = sweep;
            if (!certificate_in.empty()) {
                std::ifstream in(certificate_in);
                if (!in) throw ParseError(certificate_in + ": cannot open file");
                std::stringstream ss;
                ss << in.rdbuf();
                try {
                    params.certificate = certificate_from_json(Json::parse(ss.str()));
                } catch (const nlohmann::json::parse_error&) {
                    throw ParseError(certificate_in + ": malformed JSON");
                }
            }
            Complex x;
            if (theorem != "EQ12") {
                if (file.empty()) throw PreconditionError("verify needs a complex file for " + theorem);
                x = load().complex;
            }
            const auto r = verify(x, theorem, field, params);
            report["field"] = field.name();
            report.update(jtheorem(r));
            if (r.hypotheses_satisfied && !r.holds()) code = kViolated;
        } else if (cmd == corpus_check) {
            Json entries = Json::array();
            bool ok = true;
            for (const auto& e : corpus()) {
                if (!filter.empty() && e.name.find(filter) == std::string::npos) continue;
                Json row{{"name", e.name}};
                std::vector<std::string> failures;
                const auto& x = e.complex;
                if (e.expected.contains("f") && jf(x) != e.expected["f"]) failures.push_back("f-vector");
                if (e.expected.contains("neighbourliness") &&
                    neighbourliness(x) != e.expected["neighbourliness"].get<int>()) {
                    failures.push_back("neighbourliness");
                }
                if (e.expected.contains("betti")) {
                    for (const auto& [key, value] : e.expected["betti"].items()) {
                        if (Json(betti(x, FieldSpec::parse(key)).betti) != value) failures.push_back("betti " + key);
                    }
                }
                if (e.expected.contains("tight")) {
                    for (const auto& [key, value] : e.expected["tight"].items()) {
                        if (x.num_vertices() > 0 && tight_mu(x, FieldSpec::parse(key), sweep).tight != value.get<bool>()) {
                            failures.push_back("tight " + key);
                        }
                    }
                }
                row["ok"] = failures.empty();
                if (!failures.empty()) row["failures"] = failures;
                ok = ok && failures.empty();
                entries.push_back(row);
            }
            report["corpus_dir"] = corpus_dir();
            report["entries"] = entries;
            if (!quick) {
                Json criteria = Json::array();
                for (const auto& r : run_acceptance()) {
                    criteria.push_back(format_result(r));
                    ok = ok && r.passed;
                }
                report["acceptance"] = criteria;
            }
            report["ok"] = ok;
            if (!ok) code = kViolated;
        }
    } catch (const Error& e) {
        err << "error (" << e.kind() << "): " << e.what() << "\n";
        return kInputError;
    }
    emit();
    return code;
}

}  // namespace tightcx::cli
