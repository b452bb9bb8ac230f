// Command-line front end: enumerate, fingerprint, check, fibers, render.
//
// Exit codes: 0 success / suite passed, 1 invariant violation, 2 usage error.

#include "fingerprint/blocks.hpp"
#include "fingerprint/catalog.hpp"
#include "fingerprint/checks.hpp"
#include "fingerprint/engine.hpp"
#include "fingerprint/partition.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace fingerprint;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOptions {
    std::string theory;
    int rank = -1;
    std::string mode = "interleave";
    std::string iii;
    std::string tie_break = "prime";
    std::string conditions = "i,ii,iii";
    bool json = false;
    std::string out;
    int rank_limit = -1;
};

Theory theory_or_throw(const std::string& text)
{
    auto t = parse_theory(text);
    if (!t)
        throw UsageError("--theory must be one of B, C, D");
    return *t;
}

FingerprintOptions options_or_throw(const CommonOptions& c)
{
    FingerprintOptions o;
    if (c.mode == "interleave")
        o.combine_mode = CombineMode::Interleave;
    else if (c.mode == "sum")
        o.combine_mode = CombineMode::Componentwise;
    else
        throw UsageError("--mode must be interleave or sum");
    if (c.tie_break == "prime")
        o.tie_break = TieBreak::PrimeFirst;
    else if (c.tie_break == "dprime")
        o.tie_break = TieBreak::DprimeFirst;
    else
        throw UsageError("--tie-break must be prime or dprime");
    if (!c.iii.empty()) {
        o.iii_variant = parse_iii_variant(c.iii);
        if (!o.iii_variant)
            throw UsageError("--iii must be so, sp or vacuous");
    }
    try {
        o.conditions = parse_conditions(c.conditions);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return o;
}

void check_rank(int rank, int limit, const char* what)
{
    if (rank < 0)
        throw UsageError("--rank must be >= 0");
    if (rank > limit)
        throw UsageError(std::string(what) + " rank " + std::to_string(rank) +
                         " exceeds the guard " + std::to_string(limit) + " (raise with --rank-limit)");
}

OperatorPair pair_or_throw(Theory theory, const std::string& prime, const std::string& dprime)
{
    try {
        return OperatorPair(parse_partition(prime), parse_partition(dprime), theory);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::string pair_json_line(const OperatorPair& pair)
{
    nlohmann::ordered_json j;
    j["theory"] = std::string(to_string(pair.theory()));
    j["rank"] = pair.rank();
    j["lambda_prime"] = partition_json(pair.lambda_prime());
    j["lambda_dprime"] = partition_json(pair.lambda_dprime());
    return j.dump();
}

std::string weyl_json(const WeylPair& w)
{
    nlohmann::ordered_json j;
    j["alpha"] = partition_json(w.alpha);
    j["beta"] = partition_json(w.beta);
    return j.dump();
}

int run_enumerate(const CommonOptions& c, bool pairs, std::ostream& out)
{
    const Theory t = theory_or_throw(c.theory);
    check_rank(c.rank, c.rank_limit >= 0 ? c.rank_limit : (pairs ? 8 : 12),
               pairs ? "pair enumeration" : "enumeration");
    if (pairs) {
        for (const auto& pair : enumerate_rigid_pairs(t, c.rank))
            out << (c.json ? pair_json_line(pair) : format_pair(pair)) << "\n";
        return exit_ok;
    }
    // Listed shortest-first: the reverse of the library's descending order.
    auto listing = enumerate_rigid(t, c.rank);
    std::reverse(listing.begin(), listing.end());
    for (const auto& p : listing) {
        if (c.json) {
            nlohmann::ordered_json j;
            j["theory"] = std::string(to_string(t));
            j["rank"] = c.rank;
            j["partition"] = partition_json(p);
            out << j.dump() << "\n";
        } else {
            out << (p.empty() ? "∅" : format_exponent(p)) << "\n";
        }
    }
    return exit_ok;
}

std::string side(const Partition& p)
{
    return p.empty() ? "∅" : format_exponent(p);
}

void print_record_text(const FingerprintResult& res, std::ostream& out)
{
    const auto rec = make_record(res);
    out << "theory " << to_string(rec.theory) << "  rank " << rec.rank << "\n";
    out << "lambda' = " << side(rec.lambda_prime) << "\n";
    out << "lambda'' = " << side(rec.lambda_dprime) << "\n";
    out << "options: mode " << to_string(rec.combine_mode) << ", tie-break "
        << to_string(rec.tie_break) << ", iii " << to_string(rec.iii_variant) << ", conditions "
        << format_conditions(rec.conditions) << "\n";
    out << "lambda = " << format_exponent(res.tagged.as_partition()) << "\n";
    out << "mu = " << format_exponent(rec.mu) << "\n";
    for (const auto& [value, entry] : res.tau) {
        out << "tau(" << value << ") = " << (entry.tau > 0 ? "+1" : "-1");
        if (entry.witness)
            out << " via (" << to_string(*entry.witness) << ") at row " << *entry.witness_index + 1;
        out << "\n";
    }
    if (rec.alpha) {
        out << "alpha: " << format_exponent(*rec.alpha) << "\n";
        out << "beta: " << format_exponent(*rec.beta) << "\n";
    }
    for (const auto& d : rec.diagnostics)
        out << "diagnostic: " << d.message() << "\n";
    if (!rec.blocks.empty()) {
        out << "blocks:";
        for (const auto& b : rec.blocks) {
            out << " [" << b.begin + 1 << "-" << b.end << "] " << b.kind;
            if (b.operator_label)
                out << " " << *b.operator_label;
            out << ";";
        }
        out << "\n";
    }
    if (!res.prime_rigid() || !res.dprime_rigid())
        out << "note: input pair is not rigid\n";
}

int run_fingerprint(const CommonOptions& c, const std::string& prime, const std::string& dprime,
                    bool compare, std::ostream& out)
{
    const Theory t = theory_or_throw(c.theory);
    const auto pair = pair_or_throw(t, prime, dprime);
    const auto opts = options_or_throw(c);
    if (!compare) {
        const auto res = fingerprint::fingerprint(pair, opts);
        if (c.json)
            out << to_jsonl(make_record(res)) << "\n";
        else
            print_record_text(res, out);
        return exit_ok;
    }
    // Every convention side by side; conditions are kept from the flags.
    for (auto mode : {CombineMode::Interleave, CombineMode::Componentwise})
        for (auto tb : {TieBreak::PrimeFirst, TieBreak::DprimeFirst}) {
            if (mode == CombineMode::Componentwise && tb == TieBreak::DprimeFirst)
                continue;
            for (auto v : {IiiVariant::So, IiiVariant::Sp, IiiVariant::Vacuous}) {
                FingerprintOptions o = opts;
                o.combine_mode = mode;
                o.tie_break = tb;
                o.iii_variant = v;
                const auto res = fingerprint::fingerprint(pair, o);
                if (c.json) {
                    out << to_jsonl(make_record(res)) << "\n";
                    continue;
                }
                std::ostringstream line;
                line << std::left << std::setw(11) << to_string(mode) << std::setw(7)
                     << (mode == CombineMode::Interleave ? to_string(tb) : "-") << std::setw(8)
                     << to_string(v) << " mu=" << format_exponent(res.trace.mu_partition()) << "  ";
                if (res.ok())
                    line << format_weyl(res.weyl());
                else
                    line << "diagnostic: " << res.diagnostic().message();
                out << line.str() << "\n";
            }
        }
    return exit_ok;
}

int run_check_cmd(const std::string& suite, int rank, bool json, std::ostream& out)
{
    const auto& suites = check_suites();
    if (std::find(suites.begin(), suites.end(), suite) == suites.end())
        throw UsageError("unknown suite '" + suite + "'");
    if (rank < -1)
        throw UsageError("--rank must be >= 0");
    const auto report = run_check(suite, rank >= 0 ? std::optional<int>(rank) : std::nullopt);
    if (json) {
        nlohmann::ordered_json j;
        j["suite"] = report.suite;
        j["max_rank"] = report.max_rank;
        j["cases"] = report.cases;
        j["passed"] = report.passed();
        j["counterexamples"] = report.counterexamples;
        j["notes"] = report.notes;
        out << j.dump() << "\n";
    } else {
        out << report.suite << " (rank <= " << report.max_rank << ", " << report.cases
            << " cases): " << (report.passed() ? "PASS" : "FAIL") << "\n";
        for (const auto& n : report.notes)
            out << "  note: " << n << "\n";
        for (const auto& ce : report.counterexamples)
            out << "  counterexample: " << ce << "\n";
    }
    return report.passed() ? exit_ok : exit_violation;
}

int run_fibers(const CommonOptions& c, std::ostream& out)
{
    const Theory t = theory_or_throw(c.theory);
    check_rank(c.rank, c.rank_limit >= 0 ? c.rank_limit : 8, "fiber");
    const auto opts = options_or_throw(c);
    const auto report = compute_fibers(t, c.rank, opts);
    for (const auto& f : report.fibers) {
        if (c.json) {
            nlohmann::ordered_json j;
            j["theory"] = std::string(to_string(t));
            j["rank"] = c.rank;
            j["fingerprint"] = nlohmann::ordered_json::parse(weyl_json(f.weyl));
            auto members = nlohmann::ordered_json::array();
            for (const auto& m : f.members)
                members.push_back(nlohmann::ordered_json::parse(pair_json_line(m)));
            j["members"] = std::move(members);
            out << j.dump() << "\n";
        } else {
            out << format_weyl(f.weyl) << " <- " << f.members.size() << " classes:";
            for (const auto& m : f.members)
                out << " " << format_pair(m);
            out << "\n";
        }
    }
    if (!c.json && !report.failed.empty())
        out << "# " << report.failed.size() << " of " << report.classes
            << " classes had extraction diagnostics and are not grouped\n";
    return exit_ok;
}

int run_render(const CommonOptions& c, const std::string& prime, const std::string& dprime,
               std::ostream& out)
{
    const Theory t = theory_or_throw(c.theory);
    const auto pair = pair_or_throw(t, prime, dprime);
    const auto opts = options_or_throw(c);
    const auto res = fingerprint::fingerprint(pair, opts);
    std::vector<Block> blocks;
    if (opts.combine_mode == CombineMode::Interleave)
        blocks = decompose_blocks(res.tagged, t);
    out << render_diagram(res, blocks);
    return exit_ok;
}

void add_common(CLI::App* cmd, CommonOptions& c, bool with_rank, bool with_convention)
{
    cmd->add_option("--theory", c.theory, "B, C or D")->required();
    if (with_rank) {
        cmd->add_option("--rank", c.rank, "rank n")->required();
        cmd->add_option("--rank-limit", c.rank_limit, "override the rank guard");
    }
    if (with_convention) {
        cmd->add_option("--mode", c.mode, "interleave | sum");
        cmd->add_option("--iii", c.iii, "so | sp | vacuous (default: theory's own)");
        cmd->add_option("--tie-break", c.tie_break, "prime | dprime");
        cmd->add_option("--conditions", c.conditions, "subset of i,ii,iii");
    }
    cmd->add_flag("--json", c.json, "emit JSONL");
    cmd->add_option("--out", c.out, "write output to FILE");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Fingerprint invariant of rigid operators in the B/C/D theories"};
    app.require_subcommand(1);

    CommonOptions enum_opts, fp_opts, fiber_opts, render_opts;
    bool pairs = false, compare = false;
    std::string fp_prime, fp_dprime, render_prime, render_dprime, suite, check_out;
    int check_rank_value = -1;
    bool check_json = false;

    auto* enumerate = app.add_subcommand("enumerate", "list rigid partitions or rigid pairs");
    add_common(enumerate, enum_opts, true, false);
    enumerate->add_flag("--pairs", pairs, "enumerate rigid pairs (lambda'; lambda'')");

    auto* fp = app.add_subcommand("fingerprint", "compute [alpha; beta] of one operator");
    add_common(fp, fp_opts, false, true);
    fp->add_option("lambda_prime", fp_prime, "lambda', e.g. \"2^2 1\"")->required();
    fp->add_option("lambda_dprime", fp_dprime, "lambda'' (default empty)");
    fp->add_flag("--compare", compare, "show every convention side by side");

    auto* check = app.add_subcommand("check", "run an invariant suite");
    check->add_option("suite", suite, "suite name")->required();
    check->add_option("--rank", check_rank_value, "maximum rank");
    check->add_flag("--json", check_json, "emit a JSON report");
    check->add_option("--out", check_out, "write output to FILE");

    auto* fibers = app.add_subcommand("fibers", "group rigid pairs by fingerprint");
    add_common(fibers, fiber_opts, true, true);

    auto* render = app.add_subcommand("render", "ASCII Young diagram of lambda and mu");
    add_common(render, render_opts, false, true);
    render->add_option("lambda_prime", render_prime)->required();
    render->add_option("lambda_dprime", render_dprime);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    auto with_output = [](const std::string& path, auto&& body) -> int {
        if (path.empty())
            return body(std::cout);
        std::ofstream file(path);
        if (!file)
            throw UsageError("cannot open '" + path + "' for writing");
        return body(file);
    };

    try {
        if (*enumerate)
            return with_output(enum_opts.out, [&](std::ostream& o) { return run_enumerate(enum_opts, pairs, o); });
        if (*fp)
            return with_output(fp_opts.out, [&](std::ostream& o) {
                return run_fingerprint(fp_opts, fp_prime, fp_dprime, compare, o);
            });
        if (*check)
            return with_output(check_out, [&](std::ostream& o) {
                return run_check_cmd(suite, check_rank_value, check_json, o);
            });
        if (*fibers)
            return with_output(fiber_opts.out, [&](std::ostream& o) { return run_fibers(fiber_opts, o); });
        if (*render)
            return with_output(render_opts.out, [&](std::ostream& o) {
                return run_render(render_opts, render_prime, render_dprime, o);
            });
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
