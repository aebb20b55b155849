// achro: exact solver and verifier for complete proper colourings of
// Cartesian products of complete graphs (rook's grids).
//
// Exit codes: 0 success / verified / found, 1 valid negative result
// (refuted, bracket, not total, no extension), 2 usage or parse error.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "achro/bounds.hpp"
#include "achro/ledger.hpp"
#include "achro/lemmas.hpp"
#include "achro/matrix.hpp"
#include "achro/search.hpp"
#include "achro/stats.hpp"

using nlohmann::json;
using namespace achro;

namespace {

constexpr const char* kToolVersion = "1.0.0";
constexpr int kJsonSchemaVersion = 1;

std::string echo_command(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

// durations: plain seconds, or suffixed like 90s / 15m / 2h
double parse_duration(const std::string& text) {
    if (text.empty()) throw CLI::ValidationError("budget", "empty duration");
    double mult = 1.0;
    std::string num = text;
    switch (text.back()) {
        case 's': mult = 1; num.pop_back(); break;
        case 'm': mult = 60; num.pop_back(); break;
        case 'h': mult = 3600; num.pop_back(); break;
        default: break;
    }
    size_t pos = 0;
    const double v = std::stod(num, &pos);
    if (pos != num.size() || v < 0)
        throw CLI::ValidationError("budget", "bad duration '" + text + "'");
    return v * mult;
}

json prune_json(const PruneCounters& c) {
    return json{{"coverage_potential", c.coverage_potential},
                {"frequency_envelope", c.frequency_envelope},
                {"dead_pair", c.dead_pair},
                {"grow_blocked", c.grow_blocked},
                {"forbidden_type", c.forbidden_type},
                {"share_cap", c.share_cap},
                {"q_sequence", c.q_sequence}};
}

void print_prunes(const PruneCounters& c) {
    std::printf("prunes: potential=%llu envelope=%llu dead-pair=%llu grow=%llu "
                "type=%llu share-cap=%llu q-seq=%llu\n",
                (unsigned long long)c.coverage_potential,
                (unsigned long long)c.frequency_envelope,
                (unsigned long long)c.dead_pair, (unsigned long long)c.grow_blocked,
                (unsigned long long)c.forbidden_type, (unsigned long long)c.share_cap,
                (unsigned long long)c.q_sequence);
}

std::string profile_line(const FrequencyProfile& prof) {
    std::ostringstream os;
    bool any = false;
    for (int l = 1; l <= prof.max_freq(); ++l)
        if (prof.c(l) > 0) {
            if (any) os << ' ';
            os << "c_" << l << '=' << prof.c(l);
            any = true;
        }
    if (!any) os << "empty";
    return os.str();
}

struct CommonOpts {
    double budget = 0;
    uint64_t nodes = 0;
    int threads = 1;
    uint64_t seed = 0;
    bool lemmas = false;
    bool as_json = false;
    std::string out_path;
};

SearchConfig to_config(const CommonOpts& o) {
    SearchConfig cfg;
    cfg.time_budget = o.budget;
    cfg.node_budget = o.nodes;
    cfg.parallel_width = o.threads;
    cfg.seed = o.seed;
    cfg.use_lemma_pruning = o.lemmas;
    return cfg;
}

json base_report(const std::string& echo, const CommonOpts& o) {
    return json{{"schema_version", kJsonSchemaVersion},
                {"tool_version", kToolVersion},
                {"command", echo},
                {"seed", o.seed}};
}

int emit(const json& report, bool as_json, int code) {
    if (as_json) std::cout << report.dump(2) << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact complete-colouring toolkit for products of cliques"};
    app.require_subcommand(1);
    const std::string echo = echo_command(argc, argv);

    CommonOpts opt;
    std::string in_path;
    int p = 0, q = 0, k = 0;
    int r2 = 0, pivot = 0;
    std::string budget_text;

    auto add_search_flags = [&](CLI::App* cmd) {
        cmd->add_option("--budget", budget_text, "time budget (e.g. 90, 90s, 15m, 1h)");
        cmd->add_option("--nodes", opt.nodes, "node budget (0 = unlimited)");
        cmd->add_option("--threads", opt.threads, "parallel workers")
            ->check(CLI::Range(1, 256));
        cmd->add_option("--seed", opt.seed, "seed for value-order tie shuffling");
        cmd->add_flag("--json", opt.as_json, "machine-readable output");
    };

    auto* cmd_verify = app.add_subcommand("verify", "check a matrix file");
    cmd_verify->add_option("file", in_path)->required();
    cmd_verify->add_flag("--json", opt.as_json, "machine-readable output");

    auto* cmd_find = app.add_subcommand("find", "search one (p,q,k) instance");
    cmd_find->add_option("-p", p)->required();
    cmd_find->add_option("-q", q)->required();
    cmd_find->add_option("-k", k)->required();
    cmd_find->add_flag("--lemmas", opt.lemmas, "structural-rule pruning (6x7/19 only)");
    cmd_find->add_option("-o", opt.out_path, "witness output path");
    add_search_flags(cmd_find);

    auto* cmd_achr = app.add_subcommand("achromatic", "largest feasible palette");
    cmd_achr->add_option("-p", p)->required();
    cmd_achr->add_option("-q", q)->required();
    cmd_achr->add_option("-o", opt.out_path, "witness output path");
    add_search_flags(cmd_achr);

    auto* cmd_refute = app.add_subcommand("refute", "search the 6x7 grid for 19 colours");
    cmd_refute->add_flag("--lemmas", opt.lemmas, "enable structural-rule pruning");
    cmd_refute->add_option("-o", opt.out_path, "alarm witness output path");
    add_search_flags(cmd_refute);

    auto* cmd_qsets = app.add_subcommand("qsets", "first-row q-sequence catalogue");
    cmd_qsets->add_option("r2", r2, "first-row 2-colour count in [5,7]")->required();
    cmd_qsets->add_option("pivot", pivot, "pivot row index")->required();
    cmd_qsets->add_flag("--json", opt.as_json);

    auto* cmd_prof = app.add_subcommand("profiles", "feasible frequency profiles");
    cmd_prof->add_option("p", p)->required();
    cmd_prof->add_option("q", q)->required();
    cmd_prof->add_option("k", k)->required();
    cmd_prof->add_flag("--json", opt.as_json);

    auto* cmd_extend = app.add_subcommand("extend", "append a column to a witness");
    cmd_extend->add_option("file", in_path)->required();
    cmd_extend->add_option("-o", opt.out_path, "output path");
    cmd_extend->add_flag("--json", opt.as_json);

    try {
        app.parse(argc, argv);
        if (!budget_text.empty()) opt.budget = parse_duration(budget_text);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    json report = base_report(echo, opt);

    try {
        if (*cmd_verify) {
            ParseOutcome parsed = parse_matrix_file(in_path);
            if (!parsed.matrix) {
                std::cerr << in_path << ':' << parsed.line << ':' << parsed.column
                          << ": " << parsed.error << '\n';
                return 2;
            }
            const ColorMatrix& m = *parsed.matrix;
            const FamilyCheck chk = check_family(m, m.rows, m.cols, m.palette);
            report["instance"] = {{"p", m.rows}, {"q", m.cols}, {"k", m.palette}};
            report["proper"] = is_proper(m);
            report["total"] = m.total();
            report["verdict"] = to_string(chk);
            if (m.total() && is_proper(m)) {
                const FrequencyProfile prof = frequency_profile(m);
                const PairLedger led = build_ledger(m);
                report["complete"] = (chk == FamilyCheck::Ok);
                report["profile"] = profile_line(prof);
                report["pairs_good"] = led.covered_pairs();
                report["pairs_needed"] =
                    (uint64_t)m.palette * (m.palette - 1) / 2;
                report["witnesses"] = led.total_witnesses();
                if (!opt.as_json) {
                    std::printf("instance: p=%d q=%d k=%d\n", m.rows, m.cols, m.palette);
                    std::printf("proper: yes\ntotal: yes\n");
                    std::printf("frequency profile: %s\n", profile_line(prof).c_str());
                    std::printf("pair coverage: %llu/%llu good, %llu witnesses\n",
                                (unsigned long long)led.covered_pairs(),
                                (unsigned long long)((uint64_t)m.palette *
                                                     (m.palette - 1) / 2),
                                (unsigned long long)led.total_witnesses());
                    std::printf("verdict: %s\n", to_string(chk));
                }
            } else if (!opt.as_json) {
                std::printf("instance: p=%d q=%d k=%d\n", m.rows, m.cols, m.palette);
                std::printf("proper: %s\ntotal: %s\n", is_proper(m) ? "yes" : "no",
                            m.total() ? "yes" : "no");
                std::printf("verdict: %s\n", to_string(chk));
            }
            return emit(report, opt.as_json, chk == FamilyCheck::Ok ? 0 : 1);
        }

        if (*cmd_find || *cmd_refute) {
            int pp = p, qq = q, kk = k;
            if (*cmd_refute) {
                pp = p = kRuleScope.rows;
                qq = q = kRuleScope.cols;
                kk = kRuleScope.palette;
            }
            const bool transposed = pp > qq;
            if (transposed) std::swap(pp, qq);
            const SearchOutcome out = find_coloring(pp, qq, kk, to_config(opt));
            report["instance"] = {{"p", p}, {"q", q}, {"k", kk}};
            report["status"] = to_string(out.status);
            report["nodes"] = out.nodes_expanded;
            report["seconds"] = out.wall_time;
            report["prunes"] = prune_json(out.prunes);
            std::string wpath;
            if (out.witness) {
                ColorMatrix w = transposed ? transpose(*out.witness) : *out.witness;
                wpath = !opt.out_path.empty()
                            ? opt.out_path
                            : (*cmd_refute ? std::string("refute_alarm_witness.mat")
                                           : "witness_" + std::to_string(p) + "x" +
                                                 std::to_string(q) + "_k" +
                                                 std::to_string(kk) + ".mat");
                write_matrix_file(w, wpath);
                report["witness_path"] = wpath;
            }
            if (!opt.as_json) {
                std::printf("command: %s\nseed: %llu\n", echo.c_str(),
                            (unsigned long long)opt.seed);
                std::printf("instance: p=%d q=%d k=%d\n", p, q, kk);
                std::printf("status: %s\n", to_string(out.status));
                std::printf("nodes: %llu\ntime: %.3fs\n",
                            (unsigned long long)out.nodes_expanded, out.wall_time);
                print_prunes(out.prunes);
                if (!wpath.empty()) std::printf("witness: %s\n", wpath.c_str());
            }
            if (*cmd_refute) {
                if (out.status == SearchStatus::Found) {
                    std::fprintf(stderr,
                                 "ALARM: search produced a 19-colour matrix; this "
                                 "contradicts the established value 18 and signals a "
                                 "solver bug; witness dumped to %s for audit\n",
                                 wpath.c_str());
                    return emit(report, opt.as_json, 2);
                }
                return emit(report, opt.as_json, 1);  // refuted or budget: negative result
            }
            return emit(report, opt.as_json,
                        out.status == SearchStatus::Found ? 0 : 1);
        }

        if (*cmd_achr) {
            int pp = p, qq = q;
            const bool transposed = pp > qq;
            if (transposed) std::swap(pp, qq);
            const AchromaticResult res = achromatic(pp, qq, to_config(opt));
            report["instance"] = {{"p", pp}, {"q", qq}};
            report["exact"] = res.exact;
            report["value"] = res.value;
            report["upper"] = res.upper;
            report["nodes"] = res.nodes_expanded;
            report["seconds"] = res.wall_time;
            std::string wpath;
            if (res.witness) {
                ColorMatrix w = transposed ? transpose(*res.witness) : *res.witness;
                wpath = !opt.out_path.empty() ? opt.out_path
                                              : "witness_" + std::to_string(p) + "x" +
                                                    std::to_string(q) + "_k" +
                                                    std::to_string(res.value) + ".mat";
                write_matrix_file(w, wpath);
                report["witness_path"] = wpath;
            }
            if (!opt.as_json) {
                std::printf("command: %s\nseed: %llu\n", echo.c_str(),
                            (unsigned long long)opt.seed);
                if (res.exact)
                    std::printf("achromatic(%d,%d) = %d\n", p, q, res.value);
                else
                    std::printf("achromatic(%d,%d) in [%d, %d]\n", p, q, res.value,
                                res.upper);
                std::printf("nodes: %llu\ntime: %.3fs\n",
                            (unsigned long long)res.nodes_expanded, res.wall_time);
                if (!wpath.empty()) std::printf("witness: %s\n", wpath.c_str());
            }
            return emit(report, opt.as_json, res.exact ? 0 : 1);
        }

        if (*cmd_qsets) {
            const auto seqs = q_sequences(r2, pivot);
            report["r2"] = r2;
            report["pivot"] = pivot;
            json arr = json::array();
            for (const auto& s : seqs) arr.push_back(s.values);
            report["sequences"] = arr;
            if (!opt.as_json) {
                std::printf("Q(%d,%d) size=%zu\n", r2, pivot, seqs.size());
                for (const auto& s : seqs) {
                    std::string line;
                    for (size_t i = 0; i < s.values.size(); ++i) {
                        if (i) line += ',';
                        line += std::to_string(s.values[i]);
                    }
                    std::printf("%s\n", line.c_str());
                }
            }
            return emit(report, opt.as_json, 0);
        }

        if (*cmd_prof) {
            if (p > q) std::swap(p, q);  // the family is transpose-symmetric
            const auto profs = feasible_frequency_profiles(p, q, k);
            report["instance"] = {{"p", p}, {"q", q}, {"k", k}};
            report["count"] = profs.size();
            json arr = json::array();
            for (const auto& prof : profs) {
                json one = json::object();
                for (int l = 1; l <= prof.max_freq(); ++l)
                    if (prof.c(l)) one["c_" + std::to_string(l)] = prof.c(l);
                arr.push_back(one);
            }
            report["profiles"] = arr;
            if (!opt.as_json) {
                std::printf("%zu profiles\n", profs.size());
                for (const auto& prof : profs)
                    std::printf("%s\n", profile_line(prof).c_str());
            }
            return emit(report, opt.as_json, profs.empty() ? 1 : 0);
        }

        if (*cmd_extend) {
            ParseOutcome parsed = parse_matrix_file(in_path);
            if (!parsed.matrix) {
                std::cerr << in_path << ':' << parsed.line << ':' << parsed.column
                          << ": " << parsed.error << '\n';
                return 2;
            }
            const ExtendOutcome out = extend_coloring(*parsed.matrix);
            if (!out.ok) {
                report["error"] = out.error;
                if (!opt.as_json) std::printf("extend failed: %s\n", out.error.c_str());
                return emit(report, opt.as_json, 1);
            }
            std::string wpath = opt.out_path;
            if (wpath.empty()) {
                wpath = in_path;
                const size_t dot = wpath.find_last_of('.');
                wpath = (dot == std::string::npos ? wpath : wpath.substr(0, dot)) +
                        "_ext.mat";
            }
            write_matrix_file(out.matrix, wpath);
            report["instance"] = {{"p", out.matrix.rows},
                                  {"q", out.matrix.cols},
                                  {"k", out.matrix.palette}};
            report["witness_path"] = wpath;
            if (!opt.as_json)
                std::printf("extended to %dx%d, written to %s\n", out.matrix.rows,
                            out.matrix.cols, wpath.c_str());
            return emit(report, opt.as_json, 0);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
