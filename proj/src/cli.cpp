#include "tfvs/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tfvs/bounds.hpp"
#include "tfvs/enumerate.hpp"
#include "tfvs/generators.hpp"
#include "tfvs/score_sequence.hpp"
#include "tfvs/tourn_io.hpp"

namespace tfvs::cli {

namespace {

enum class Format { kText, kLines };

/// Options shared by every subcommand.
struct RunConfig {
    std::optional<std::uint64_t> seed;
    Format format = Format::kText;
    unsigned workers = 1;
    bool relabel_by_score = false;
    bool debug_parent_check = false;

    std::string input_path;
    std::string generator;

    EnumOptions enum_options() const {
        EnumOptions o;
        o.relabel_by_score = relabel_by_score;
        o.debug_parent_check = debug_parent_check;
        return o;
    }
};

/// Emits "key value" lines in text mode and one "#summary k=v ..." record in
/// machine mode.
class Summary {
public:
    Summary(std::ostream& out, Format format) : out_(out), format_(format) {}
    ~Summary() {
        if (format_ == Format::kLines && !fields_.empty()) out_ << "#summary " << fields_ << '\n';
    }
    template <class T>
    Summary& add(const std::string& key, const T& value) {
        std::ostringstream os;
        os << value;
        if (format_ == Format::kText) {
            out_ << key << ' ' << os.str() << '\n';
        } else {
            if (!fields_.empty()) fields_ += ' ';
            fields_ += key + '=' + os.str();
        }
        return *this;
    }

private:
    std::ostream& out_;
    Format format_;
    std::string fields_;
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Tournament load_input(const RunConfig& cfg) {
    const bool has_file = !cfg.input_path.empty();
    const bool has_gen = !cfg.generator.empty();
    if (has_file == has_gen) throw InputError("give exactly one input: a TOURN file or --gen EXPR");
    if (has_gen) return parse_generator(cfg.generator);
    return read_tourn_file(cfg.input_path);
}

void add_input_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("file", cfg.input_path, "TOURN input file");
    cmd->add_option("--gen", cfg.generator, "generator expression instead of a file, e.g. 'pq(st7)'");
}

// Builds a generator expression from the `generate` subcommand's arguments.
std::string generator_expression(const std::string& name, std::optional<int> n, const std::vector<int>& residues,
                                 const std::string& inner, std::optional<int> copies, const RunConfig& cfg) {
    auto need_n = [&] {
        if (!n) throw InputError("generator '" + name + "' needs -n");
        return std::to_string(*n);
    };
    auto need_inner = [&] {
        if (inner.empty()) throw InputError("generator '" + name + "' needs --inner");
        return inner;
    };
    if (name == "st7" || name == "st6" || name == "rt5" || name == "c3") return name;
    if (name == "transitive" || name == "tt") return "tt(" + need_n() + ")";
    if (name == "u") return "u(" + need_n() + ")";
    if (name == "circular") {
        std::string e = "circular(" + need_n();
        for (int r : residues) e += "," + std::to_string(r);
        return e + ")";
    }
    if (name == "pq") return "pq(" + need_inner() + ")";
    if (name == "copies" || name == "sum") {
        if (!copies) throw InputError("generator '" + name + "' needs --copies");
        return "copies(" + need_inner() + "," + std::to_string(*copies) + ")";
    }
    if (name == "random") {
        if (!cfg.seed) throw InputError("random generation requires --seed");
        return "random(" + need_n() + "," + std::to_string(*cfg.seed) + ")";
    }
    // Anything else is taken as a full expression.
    return name;
}

void print_check(std::ostream& out, bool ok, const std::string& label, const std::string& detail) {
    out << (ok ? "PASS " : "FAIL ") << label << (detail.empty() ? "" : " " + detail) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimal feedback vertex sets in tournaments"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    std::string format_name = "text";
    app.add_option("--seed", cfg.seed, "seed for randomized generators and sampling suites");
    app.add_option("--format", format_name, "output format: text | lines")->check(CLI::IsMember({"text", "lines"}));
    app.add_option("--workers", cfg.workers, "worker threads for exhaustive suites")->check(CLI::Range(1U, 1024U));
    app.add_flag("--relabel-by-score", cfg.relabel_by_score, "process vertices by descending score");
    app.add_flag("--debug-parent-check", cfg.debug_parent_check, "re-verify every enumeration tree node");

    // generate
    auto* gen = app.add_subcommand("generate", "write a generated tournament in TOURN format");
    std::string gen_name;
    std::optional<int> gen_n;
    std::vector<int> gen_residues;
    std::string gen_inner;
    std::optional<int> gen_copies;
    std::string gen_output;
    gen->add_option("name", gen_name, "generator name or expression")->required();
    gen->add_option("-n", gen_n, "vertex count");
    gen->add_option("--residues", gen_residues, "residues for circular")->delimiter(',');
    gen->add_option("--inner", gen_inner, "inner generator expression for pq / copies");
    gen->add_option("--copies", gen_copies, "number of copies for copies / sum");
    gen->add_option("-o,--output", gen_output, "output file (default: standard output)");

    auto* enumerate = app.add_subcommand("enumerate", "stream minimal FVSs, one per line");
    bool enum_acyclic = false;
    add_input_options(enumerate, cfg);
    enumerate->add_flag("--acyclic", enum_acyclic, "emit maximal acyclic vertex sets instead");

    auto* minfvs = app.add_subcommand("minfvs", "minimum feedback vertex set");
    add_input_options(minfvs, cfg);

    auto* count = app.add_subcommand("count", "number of minimal FVSs");
    bool count_direct = false;
    add_input_options(count, cfg);
    count->add_flag("--direct", count_direct, "count on the whole tournament instead of per strong factor");

    auto* banks = app.add_subcommand("banks", "Banks winners");
    add_input_options(banks, cfg);

    auto* profile = app.add_subcommand("profile", "delay and space profile of the enumeration");
    add_input_options(profile, cfg);

    auto* verify = app.add_subcommand("verify", "run an extremal-lab suite: table1 | lower-family | mstar | score-cap | sigma");
    std::string suite;
    std::vector<int> verify_n;
    std::vector<int> verify_k;
    std::uint64_t samples = 100000;
    double beta = kBeta;
    std::string checkpoint;
    std::string summary_path;
    bool allow_long_run = false;
    verify->add_option("suite", suite, "suite name")->required();
    verify->add_option("-n", verify_n, "vertex counts")->delimiter(',');
    verify->add_option("-k", verify_k, "copies for lower-family")->delimiter(',');
    verify->add_option("--samples", samples, "strong samples per n for score-cap");
    verify->add_option("--beta", beta, "base of the upper bound");
    verify->add_option("--checkpoint", checkpoint, "checkpoint file for exhaustive scans (resumed if present)");
    verify->add_option("--summary", summary_path, "write a JSON summary");
    verify->add_flag("--allow-long-run", allow_long_run, "lift the cost guard on exhaustive scans");

    try {
        std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
        std::reverse(reversed.begin(), reversed.end());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputError;
    }
    cfg.format = format_name == "lines" ? Format::kLines : Format::kText;

    try {
        if (*gen) {
            const Tournament t = parse_generator(generator_expression(gen_name, gen_n, gen_residues, gen_inner, gen_copies, cfg));
            if (gen_output.empty()) {
                write_tourn(out, t);
            } else {
                std::ofstream file(gen_output);
                if (!file) throw InputError("cannot write " + gen_output);
                write_tourn(file, t);
            }
            return kSuccess;
        }

        if (*enumerate) {
            const Tournament t = load_input(cfg);
            std::uint64_t emitted = 0;
            MaximalAcyclicEnumerator e(t, cfg.enum_options());
            VertexSet s;
            while (e.next(s)) {
                out << (enum_acyclic ? s : s.complement()).to_string() << '\n' << std::flush;
                ++emitted;
            }
            Summary(out, cfg.format).add("count", emitted);
            return kSuccess;
        }

        if (*minfvs) {
            const Tournament t = load_input(cfg);
            const VertexSet best = min_fvs(t);
            out << best.to_string() << '\n';
            Summary(out, cfg.format).add("size", best.size());
            return kSuccess;
        }

        if (*count) {
            const Tournament t = load_input(cfg);
            if (count_direct)
                Summary(out, cfg.format).add("count", count_maximal_acyclic_direct(t, cfg.enum_options()));
            else
                Summary(out, cfg.format).add("count", count_minimal_fvs(t, cfg.workers));
            return kSuccess;
        }

        if (*banks) {
            const Tournament t = load_input(cfg);
            out << banks_winners(t).to_string() << '\n';
            return kSuccess;
        }

        if (*profile) {
            const Tournament t = load_input(cfg);
            const DelayProfile p = delay_profile(t, cfg.enum_options());
            const int n = p.n;
            Summary s(out, cfg.format);
            s.add("n", n)
                .add("outputs", p.stats.outputs)
                .add("tree_nodes", p.stats.nodes)
                .add("edge_traversals", p.stats.edge_traversals)
                .add("max_edges_between_outputs", p.stats.max_edges_between_outputs)
                .add("trailing_edges", p.stats.trailing_edges)
                .add("delay_bound", 2 * n)
                .add("peak_resident_labels", p.stats.peak_resident_labels)
                .add("space_bound", (n + 1) * (n / 2 + 2))
                .add("max_children", p.stats.max_children)
                .add("child_cap_exceeded", p.stats.cap_violations)
                .add("total_ns", p.total_time.count())
                .add("max_output_ns", p.max_output_time.count())
                .add("mean_output_ns", p.mean_output_time.count());
            return kSuccess;
        }

        if (*verify) {
            nlohmann::json summary;
            summary["suite"] = suite;
            bool all_ok = true;
            auto record = [&](bool ok, const std::string& label, const std::string& detail, nlohmann::json extra = {}) {
                print_check(out, ok, label, detail);
                all_ok = all_ok && ok;
                extra["check"] = label;
                extra["pass"] = ok;
                summary["checks"].push_back(std::move(extra));
            };

            if (suite == "table1") {
                static constexpr std::uint64_t kExpected[] = {0, 1, 1, 3, 3, 7, 12, 21};
                std::vector<int> ns = verify_n;
                if (ns.empty()) ns = {1, 2, 3, 4, 5, 6, 7};
                ScanOptions opts;
                opts.workers = cfg.workers;
                opts.allow_long_run = allow_long_run;
                if (!checkpoint.empty()) opts.checkpoint = checkpoint;
                for (int n : ns) {
                    if (n < 1 || n > 7) throw InputError("table1 scans n in 1..7");
                    const ExtremalReport r = exact_max_count(n, opts);
                    std::ostringstream witness;
                    witness << *r.witness_scores.begin();
                    record(r.max_count == kExpected[n], "M(" + std::to_string(n) + ")",
                           "found=" + std::to_string(r.max_count) + " expected=" + std::to_string(kExpected[n]) +
                               " scanned=" + std::to_string(r.scanned) + " witness_scores=" + witness.str(),
                           {{"n", n}, {"max", r.max_count}, {"scanned", r.scanned}});
                }
                const BigInt f8 = count_minimal_fvs(pq(st6()), cfg.workers);
                record(f8 == 25, "f(pq(ST_6))", "found=" + f8.str() + " expected=25");
                const BigInt f9 = count_minimal_fvs(pq(st7()), cfg.workers);
                record(f9 == 43, "f(pq(ST_7))", "found=" + f9.str() + " expected=43");
            } else if (suite == "lower-family") {
                std::vector<int> ks = verify_k;
                if (ks.empty()) ks = {1, 2, 3, 4, 5, 6};
                for (int k : ks) {
                    if (k < 1 || k > 6) throw InputError("lower-family supports k in 1..6");
                    const LowerFamilyReport r = lower_bound_family(k);
                    std::string detail = "count=" + r.factorized.str() + " expected=" + r.expected.str();
                    if (r.direct_checked) detail += " direct=" + std::to_string(r.direct);
                    record(r.ok, "k=" + std::to_string(k), detail, {{"k", k}, {"count", r.factorized.str()}});
                }
            } else if (suite == "mstar") {
                std::vector<int> ns = verify_n;
                if (ns.empty()) ns = {3, 4, 5, 6};
                ScanOptions opts;
                opts.workers = cfg.workers;
                opts.allow_long_run = allow_long_run;
                for (int n : ns) {
                    const std::uint64_t m = exact_min_count_strong(n, opts);
                    record(m == 3, "m*(" + std::to_string(n) + ")", "found=" + std::to_string(m) + " expected=3", {{"n", n}, {"min", m}});
                }
                bool family_ok = true;
                for (int n = 3; n <= 40; ++n) family_ok = family_ok && count_minimal_fvs(u_family(n)) == 3 && is_strong(u_family(n));
                record(family_ok, "f(U_n)=3", "n=3..40");
            } else if (suite == "score-cap") {
                std::vector<int> ns = verify_n;
                if (ns.empty()) ns = {8, 9, 10, 11, 12, 13, 14, 15, 16};
                const std::uint64_t seed = cfg.seed.value_or(kDefaultCampaignSeed);
                for (int n : ns) {
                    if (n < 8) throw InputError("score-cap needs n >= 8");
                    const ScoreCapCampaign c = score_cap_campaign(n, samples, seed + static_cast<std::uint64_t>(n));
                    record(c.violations == 0, "n=" + std::to_string(n),
                           "strong_samples=" + std::to_string(c.strong_samples) + " violations=" + std::to_string(c.violations) +
                               " seed=" + std::to_string(c.seed),
                           {{"n", n}, {"samples", c.strong_samples}, {"violations", c.violations}, {"seed", c.seed}});
                }
            } else if (suite == "sigma") {
                std::vector<int> ns = verify_n;
                if (ns.empty()) ns = {11, 12, 13};
                for (int n : ns) {
                    if (n < 11) throw InputError("sigma needs n >= 11");
                    const SigmaReport r = sigma_report(n, beta);
                    std::ostringstream detail;
                    detail << std::setprecision(12) << "sequences=" << r.sequences << " G(sigma)=" << r.sigma_value
                           << " unique=" << (r.unique_argmax ? "yes" : "no") << " top=";
                    for (std::size_t i = 0; i < r.top.size(); ++i) detail << (i ? "|" : "") << r.top[i].second << ':' << r.top[i].first;
                    record(r.maximizes && r.unique_argmax, "sigma(" + std::to_string(n) + ")", detail.str(),
                           {{"n", n}, {"sequences", r.sequences}, {"g_sigma", r.sigma_value}});
                }
            } else {
                err << "unknown suite '" << suite << "' (expected table1, lower-family, mstar, score-cap, sigma)\n";
                return kInputError;
            }
            summary["pass"] = all_ok;
            if (!summary_path.empty()) {
                std::ofstream file(summary_path);
                file << summary.dump(2) << '\n';
            }
            Summary(out, cfg.format).add("result", all_ok ? "PASS" : "FAIL");
            return all_ok ? kSuccess : kVerificationFailed;
        }
    } catch (const ParseError& e) {
        err << "parse error";
        if (e.line() > 0) err << " at line " << e.line() << ", column " << e.column();
        err << ": " << e.what() << '\n';
        return kInputError;
    } catch (const TournamentError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace tfvs::cli
