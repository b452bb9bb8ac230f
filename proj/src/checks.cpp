#include "fingerprint/checks.hpp"

#include "fingerprint/blocks.hpp"
#include "fingerprint/catalog.hpp"
#include "fingerprint/unipotent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fingerprint {

namespace {

constexpr std::size_t max_counterexamples = 10;
constexpr Theory all_theories[] = {Theory::B, Theory::C, Theory::D};
constexpr CombineMode all_modes[] = {CombineMode::Interleave, CombineMode::Componentwise};

std::string describe(const OperatorPair& pair, const FingerprintOptions& opts)
{
    std::ostringstream out;
    out << to_string(pair.theory()) << " " << format_pair(pair) << " mode="
        << to_string(opts.combine_mode) << " tie=" << to_string(opts.tie_break)
        << " iii=" << to_string(opts.resolved_variant(pair.theory()))
        << " conditions=" << format_conditions(opts.conditions);
    return out.str();
}

std::string describe(const Extraction& e)
{
    if (const auto* w = std::get_if<WeylPair>(&e))
        return format_weyl(*w);
    return "diagnostic(" + std::get<ExtractionDiagnostic>(e).message() + ")";
}

std::string list(const std::vector<int>& v)
{
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? "," : "") << v[i];
    out << ")";
    return out.str();
}

// Every theory-valid partition (any theory) with total <= max_total.
template <class F>
void for_each_valid_partition(int max_total, F&& f)
{
    for (int n = 0; n <= max_total; ++n)
        for (const auto& p : partitions_of(n))
            for (Theory t : all_theories)
                if (is_theory_member(p, t))
                    f(p, t);
}

template <class F>
void for_each_rigid_pair(int max_rank, F&& f)
{
    for (Theory t : all_theories)
        for (int n = 0; n <= max_rank; ++n)
            for (const auto& pair : enumerate_rigid_pairs(t, n))
                f(pair);
}

void check_structure(CheckReport& r)
{
    for (Theory t : all_theories)
        for (int n = 0; n <= r.max_rank; ++n)
            for (const auto& p : enumerate_rigid(t, n)) {
                ++r.cases;
                if (!transpose_pattern_holds(p, t))
                    r.fail(std::string(to_string(t)) + " " + format_exponent(p) + ": transpose " +
                           format_list(transpose(p)) + " breaks the row pattern");
            }
}

void check_locality(CheckReport& r)
{
    for_each_valid_partition(2 * r.max_rank, [&](const Partition& p, Theory t) {
        ++r.cases;
        const auto trace = sp_map(p.parts());
        if (!sp_changes_local(trace))
            r.fail(std::string(to_string(t)) + " " + list(trace.lambda) + " -> " + list(trace.mu) +
                   ": change away from a group boundary");
        for (int d : trace.partial_sum_delta)
            if (d != 0 && d != -1) {
                r.fail(std::string(to_string(t)) + " " + list(trace.lambda) +
                       ": partial sum delta " + std::to_string(d));
                break;
            }
    });
}

void check_parity(CheckReport& r)
{
    for_each_valid_partition(2 * r.max_rank, [&](const Partition& p, Theory t) {
        ++r.cases;
        const auto trace = sp_map(p.parts());
        if (!sp_odd_values_paired(trace))
            r.fail(std::string(to_string(t)) + " " + list(trace.lambda) + " -> " + list(trace.mu) +
                   ": odd value with odd multiplicity");
    });
}

void check_rank_identity(CheckReport& r)
{
    std::map<std::string, std::size_t> diag_counts;
    for_each_rigid_pair(r.max_rank, [&](const OperatorPair& pair) {
        for (CombineMode mode : all_modes) {
            FingerprintOptions opts;
            opts.combine_mode = mode;
            ++r.cases;
            const auto res = fingerprint(pair, opts);
            const int final_delta =
                res.trace.partial_sum_delta.empty() ? 0 : res.trace.partial_sum_delta.back();
            const int expected_delta = -(res.tagged.total() % 2);
            if (final_delta != expected_delta)
                r.fail(describe(pair, opts) + ": final partial-sum delta " +
                       std::to_string(final_delta) + ", expected " + std::to_string(expected_delta));
            if (res.ok()) {
                if (!res.weyl().rank_consistent())
                    r.fail(describe(pair, opts) + ": |alpha|+|beta| != " +
                           std::to_string(pair.rank()) + " for " + format_weyl(res.weyl()));
            } else {
                const std::string key = std::string(to_string(pair.theory())) + "/" +
                                        std::string(to_string(mode)) + "/" +
                                        std::string(to_string(res.options.resolved_variant(pair.theory())));
                ++diag_counts[key];
                if (pair.theory() != Theory::C && mode == CombineMode::Interleave)
                    r.fail(describe(pair, opts) + ": unexpected " + describe(res.outcome));
            }
        }
    });
    for (const auto& [key, n] : diag_counts)
        r.notes.push_back("extraction diagnostics " + key + ": " + std::to_string(n));
}

void check_condition_ii(CheckReport& r)
{
    for_each_rigid_pair(r.max_rank, [&](const OperatorPair& pair) {
        for (CombineMode mode : all_modes)
            for (IiiVariant v : {IiiVariant::So, IiiVariant::Sp, IiiVariant::Vacuous}) {
                FingerprintOptions full;
                full.combine_mode = mode;
                full.iii_variant = v;
                FingerprintOptions reduced = full;
                reduced.conditions.ii = false;
                ++r.cases;
                const auto a = fingerprint(pair, full);
                const auto b = fingerprint(pair, reduced);
                if (a.outcome != b.outcome)
                    r.fail(describe(pair, full) + ": {i,ii,iii} gives " + describe(a.outcome) +
                           ", {i,iii} gives " + describe(b.outcome));
            }
    });
    std::size_t examined = 0;
    const auto gapped = condition_ii_sensitive_cases(20, &examined);
    r.notes.push_back("gapped partitions of total <= 20 examined: " + std::to_string(examined) +
                      ", condition-(ii)-sensitive: " + std::to_string(gapped.size()));
    for (std::size_t k = 0; k < gapped.size() && k < 5; ++k)
        r.notes.push_back("  " + std::string(to_string(gapped[k].theory)) + " " +
                          format_exponent(gapped[k].partition) + ": with (ii) " +
                          describe(gapped[k].with_ii) + ", without " + describe(gapped[k].without_ii));
}

void check_shift(CheckReport& r)
{
    for_each_rigid_pair(r.max_rank, [&](const OperatorPair& pair) {
        for (CombineMode mode : all_modes) {
            FingerprintOptions opts;
            opts.combine_mode = mode;
            ++r.cases;
            const auto base = fingerprint(pair, opts);
            const auto shifted_tags = shift_rows(base.tagged, 2);
            const auto shifted_trace = sp_map(shifted_tags.values());
            for (std::size_t i = 0; i < base.trace.size(); ++i)
                if (shifted_trace.mu[i] != base.trace.mu[i] + 2) {
                    r.fail(describe(pair, opts) + ": Sp(lambda+2) != Sp(lambda)+2 at row " +
                           std::to_string(i));
                    return;
                }
            const int theta = pair.theory() == Theory::B ? 1 : 0;
            const auto tau = tau_table(shifted_trace, shifted_tags, pair.theory(), base.options);
            const auto outcome =
                extract_weyl_pair(shifted_trace, tau, (shifted_tags.total() - theta) / 2);
            if (!base.ok() || !std::holds_alternative<WeylPair>(outcome))
                continue;
            auto predicted = predicted_shift(base.weyl(), base.trace);
            const auto& got = std::get<WeylPair>(outcome);
            predicted.rank = got.rank;
            if (!(predicted == got))
                r.fail(describe(pair, opts) + ": shifted fingerprint " + format_weyl(got) +
                       ", predicted " + format_weyl(predicted));
        }
    });
}

void check_factorization(CheckReport& r)
{
    for (Theory t : all_theories)
        for (int n = 0; n <= r.max_rank; ++n)
            for (const auto& p : enumerate_rigid(t, n)) {
                ++r.cases;
                const auto direct = sp_map(p.parts()).mu_partition();
                const auto factored = unipotent_mu_factored(p, t);
                if (direct != factored)
                    r.fail(std::string(to_string(t)) + " " + format_exponent(p) + ": Sp gives " +
                           format_exponent(direct) + ", factored " + format_exponent(factored));
                if (t == Theory::C && direct != p)
                    r.fail("C " + format_exponent(p) + ": Sp is not the identity");
            }
}

void check_path_equivalence(CheckReport& r)
{
    for_each_rigid_pair(r.max_rank, [&](const OperatorPair& pair) {
        for (TieBreak tb : {TieBreak::PrimeFirst, TieBreak::DprimeFirst}) {
            FingerprintOptions opts;
            opts.tie_break = tb;
            ++r.cases;
            const auto direct = fingerprint(pair, opts);
            const auto via_blocks = block_fingerprint(pair, opts);
            if (!(direct.trace == via_blocks.trace))
                r.fail(describe(pair, opts) + ": block trace differs from direct trace");
            if (direct.outcome != via_blocks.outcome || direct.tau != via_blocks.tau)
                r.fail(describe(pair, opts) + ": direct " + describe(direct.outcome) + ", blocks " +
                       describe(via_blocks.outcome));

            const auto blocks = decompose_blocks(direct.tagged, pair.theory());
            std::size_t expect = 0;
            int cumulative = 0;
            int odd_blocks = 0;
            bool has_i = false;
            for (const auto& b : blocks) {
                if (b.begin != expect || b.end <= b.begin) {
                    r.fail(describe(pair, opts) + ": blocks do not tile the rows");
                    break;
                }
                if (b.begin > 0 && (cumulative % 2 != 0 ||
                                    direct.tagged.rows[b.begin - 1].value ==
                                        direct.tagged.rows[b.begin].value))
                    r.fail(describe(pair, opts) + ": bad block boundary at row " +
                           std::to_string(b.begin));
                cumulative += b.boxes;
                expect = b.end;
                odd_blocks += b.boxes % 2;
                has_i = has_i || b.kind == BlockKind::I;
            }
            if (expect != direct.tagged.rows.size())
                r.fail(describe(pair, opts) + ": blocks do not cover all rows");
            if (pair.theory() == Theory::C && has_i)
                r.fail(describe(pair, opts) + ": type I block in C theory");
            if (odd_blocks != (pair.theory() == Theory::B ? 1 : 0))
                r.fail(describe(pair, opts) + ": " + std::to_string(odd_blocks) +
                       " blocks with an odd box count");
        }
    });
}

void check_closed_form(CheckReport& r)
{
    for (Theory t : {Theory::B, Theory::D})
        for (int n = 0; n <= r.max_rank; ++n)
            for (const auto& p : enumerate_rigid(t, n)) {
                ++r.cases;
                const OperatorPair pair(p, {}, t);
                const auto res = fingerprint(pair);
                const auto closed = closed_form_fingerprint_BD(p, t);
                if (!res.ok() || !(res.weyl() == closed))
                    r.fail(std::string(to_string(t)) + " " + format_exponent(p) + ": pipeline " +
                           describe(res.outcome) + ", closed form " + format_weyl(closed));
            }
    for (int n = 0; n <= r.max_rank; ++n)
        for (const auto& p : enumerate_rigid(Theory::C, n)) {
            bool all_even = true;
            for (int v : p)
                all_even = all_even && p.multiplicity(v) % 2 == 0;
            if (!all_even)
                continue;
            ++r.cases;
            FingerprintOptions opts;
            opts.iii_variant = IiiVariant::Vacuous;
            const auto res = fingerprint(OperatorPair(p, {}, Theory::C), opts);
            const auto closed = closed_form_fingerprint_C(p);
            if (!res.ok() || !(res.weyl() == closed))
                r.fail("C " + format_exponent(p) + ": pipeline " + describe(res.outcome) +
                       ", closed form " + format_weyl(closed));
        }
}

bool all_even_rows(const Partition& p)
{
    const auto t = transpose(p);
    return std::all_of(t.begin(), t.end(), [](int v) { return v % 2 == 0; });
}

void check_collapse(CheckReport& r)
{
    for (Theory t : {Theory::B, Theory::D})
        for (int n = 0; n <= r.max_rank; ++n)
            for (const auto& p : enumerate_rigid(t, n)) {
                ++r.cases;
                const auto sigma = split_parity(p).odd_part;
                const auto image = t == Theory::B ? xs_map(sigma) : ys_map(sigma);
                const auto back = t == Theory::B ? xs_inverse(image) : ys_inverse(image);
                const int lost = sigma.total() - image.total();
                const std::string where = std::string(to_string(t)) + " odd part " +
                                          format_exponent(sigma) + " of " + format_exponent(p);
                if (lost != (t == Theory::B ? 1 : 0))
                    r.fail(where + ": collapse lost " + std::to_string(lost) + " boxes");
                if (back != sigma)
                    r.fail(where + ": inverse returned " + format_exponent(back));
                if (!all_even_rows(image))
                    r.fail(where + ": image " + format_exponent(image) + " has an odd transpose row");
                const Theory image_theory = t == Theory::B ? Theory::C : Theory::D;
                if (!is_theory_member(image, image_theory))
                    r.fail(where + ": image " + format_exponent(image) + " is not " +
                           std::string(to_string(image_theory)) + "-type");
            }
}

}  // namespace

void CheckReport::fail(std::string what)
{
    if (counterexamples.size() < max_counterexamples)
        counterexamples.push_back(std::move(what));
    else if (counterexamples.size() == max_counterexamples)
        counterexamples.push_back("...");
}

const std::vector<std::string>& check_suites()
{
    static const std::vector<std::string> names = {
        "structure", "sp-locality",      "parity",      "rank-identity", "condition-ii",
        "shift",     "factorization",    "path-equivalence", "closed-form", "collapse-bijection"};
    return names;
}

int default_check_rank(std::string_view suite)
{
    if (suite == "rank-identity" || suite == "condition-ii" || suite == "path-equivalence")
        return 8;
    if (suite == "shift")
        return 6;
    return 12;
}

CheckReport run_check(std::string_view suite, std::optional<int> max_rank)
{
    CheckReport r;
    r.suite = std::string(suite);
    r.max_rank = max_rank.value_or(default_check_rank(suite));
    if (suite == "structure")
        check_structure(r);
    else if (suite == "sp-locality")
        check_locality(r);
    else if (suite == "parity")
        check_parity(r);
    else if (suite == "rank-identity")
        check_rank_identity(r);
    else if (suite == "condition-ii")
        check_condition_ii(r);
    else if (suite == "shift")
        check_shift(r);
    else if (suite == "factorization")
        check_factorization(r);
    else if (suite == "path-equivalence")
        check_path_equivalence(r);
    else if (suite == "closed-form")
        check_closed_form(r);
    else if (suite == "collapse-bijection")
        check_collapse(r);
    else
        throw std::invalid_argument("unknown check suite '" + std::string(suite) + "'");
    return r;
}

bool transpose_pattern_holds(const Partition& p, Theory t)
{
    const auto rows = transpose(p);
    if (rows.empty())
        return true;
    // B and D have an unpaired longest row; C pairs from the first row.
    std::size_t start = 0;
    if (t != Theory::C) {
        const int want = t == Theory::B ? 1 : 0;
        if (rows[0] % 2 != want)
            return false;
        start = 1;
    }
    std::size_t k = start;
    for (; k + 1 < rows.length(); k += 2)
        if (rows[k] % 2 != rows[k + 1] % 2)
            return false;
    // A leftover unpaired shortest row must be even.
    if (k < rows.length() && rows[k] % 2 != 0)
        return false;
    return true;
}

bool sp_changes_local(const SpTrace& trace)
{
    const auto n = trace.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!trace.changed(i))
            continue;
        const int v = trace.lambda[i];
        if (trace.mu[i] == v + 1) {
            const bool first_of_group = i == 0 || trace.lambda[i - 1] != v;
            if (!first_of_group || trace.sign[i] != 1)
                return false;
        } else if (trace.mu[i] == v - 1) {
            const bool last_of_group = i + 1 == n || trace.lambda[i + 1] != v;
            if (!last_of_group || trace.sign[i] != -1)
                return false;
        } else {
            return false;
        }
        if (v % 2 == 0)
            return false;
    }
    return true;
}

bool sp_odd_values_paired(const SpTrace& trace)
{
    std::map<int, int> counts;
    for (int v : trace.mu)
        if (v > 0)
            ++counts[v];
    return std::all_of(counts.begin(), counts.end(),
                       [](auto kv) { return kv.first % 2 == 0 || kv.second % 2 == 0; });
}

WeylPair predicted_shift(const WeylPair& w, const SpTrace& trace)
{
    std::vector<int> alpha, beta;
    for (int v : w.alpha)
        alpha.push_back(v + 2);
    for (int v : w.beta)
        beta.push_back(v + 1);
    for (int m : trace.mu)
        if (m == 0)
            beta.push_back(1);
    const int rank = static_cast<int>(Partition::from_unsorted(alpha).total() +
                                      Partition::from_unsorted(beta).total());
    return WeylPair{Partition::from_unsorted(std::move(alpha)),
                    Partition::from_unsorted(std::move(beta)), rank};
}

std::vector<GappedCase> condition_ii_sensitive_cases(int max_total, std::size_t* examined)
{
    std::vector<GappedCase> out;
    std::size_t count = 0;
    for_each_valid_partition(max_total, [&](const Partition& p, Theory t) {
        bool gapped = false;
        for (std::size_t i = 0; i < p.length(); ++i)
            gapped = gapped || p[i] - p.at_or_zero(i + 1) > 1;
        if (!gapped || p.empty())
            return;
        ++count;
        const OperatorPair pair(p, {}, t);
        FingerprintOptions reduced;
        reduced.conditions.ii = false;
        const auto with_ii = fingerprint(pair).outcome;
        const auto without_ii = fingerprint(pair, reduced).outcome;
        if (with_ii != without_ii)
            out.push_back(GappedCase{p, t, with_ii, without_ii});
    });
    if (examined)
        *examined = count;
    return out;
}

}  // namespace fingerprint
