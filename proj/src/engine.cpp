#include "fingerprint/engine.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace fingerprint {

Partition SpTrace::mu_partition() const
{
    std::vector<int> parts;
    for (int v : mu)
        if (v > 0)
            parts.push_back(v);
    return Partition(std::move(parts));
}

std::string_view to_string(Condition c)
{
    switch (c) {
    case Condition::I: return "i";
    case Condition::II: return "ii";
    case Condition::III: return "iii";
    }
    return "?";
}

bool ConditionSet::contains(Condition c) const
{
    switch (c) {
    case Condition::I: return i;
    case Condition::II: return ii;
    case Condition::III: return iii;
    }
    return false;
}

ConditionSet parse_conditions(std::string_view text)
{
    ConditionSet out{false, false, false};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        if (tok == "i" || tok == "I")
            out.i = true;
        else if (tok == "ii" || tok == "II")
            out.ii = true;
        else if (tok == "iii" || tok == "III")
            out.iii = true;
        else if (!tok.empty())
            throw std::invalid_argument("unknown condition '" + std::string(tok) + "'");
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

std::string format_conditions(const ConditionSet& c)
{
    std::string out;
    auto add = [&](bool on, const char* name) {
        if (!on)
            return;
        if (!out.empty())
            out += ',';
        out += name;
    };
    add(c.i, "i");
    add(c.ii, "ii");
    add(c.iii, "iii");
    return out;
}

std::string_view to_string(IiiVariant v)
{
    switch (v) {
    case IiiVariant::So: return "so";
    case IiiVariant::Sp: return "sp";
    case IiiVariant::Vacuous: return "vacuous";
    }
    return "?";
}

std::optional<IiiVariant> parse_iii_variant(std::string_view text)
{
    if (text == "so" || text == "SO")
        return IiiVariant::So;
    if (text == "sp" || text == "Sp" || text == "SP")
        return IiiVariant::Sp;
    if (text == "vacuous")
        return IiiVariant::Vacuous;
    return std::nullopt;
}

IiiVariant default_iii_variant(Theory t)
{
    return t == Theory::C ? IiiVariant::Sp : IiiVariant::So;
}

std::string ExtractionDiagnostic::message() const
{
    std::ostringstream out;
    out << "unpaired " << (value % 2 ? "odd" : "even") << " value " << value << " (multiplicity "
        << multiplicity;
    if (value % 2 == 0)
        out << ", tau=" << (tau > 0 ? "+1" : "-1");
    out << ")";
    return out.str();
}

std::vector<int> prefix_signs(std::span<const int> values)
{
    std::vector<int> signs;
    signs.reserve(values.size());
    int sum = 0;
    for (int v : values) {
        sum += v;
        signs.push_back(sum % 2 == 0 ? 1 : -1);
    }
    return signs;
}

SpTrace sp_map(std::span<const int> values)
{
    SpTrace t;
    t.lambda.assign(values.begin(), values.end());
    t.sign = prefix_signs(values);
    const auto n = static_cast<std::ptrdiff_t>(values.size());
    auto lambda_at = [&](std::ptrdiff_t k) -> int {
        // k == -1 is only reachable with p = +1 at the first index, which
        // needs an even first part; such a part never changes.
        if (k < 0)
            return 0;
        return k < n ? values[static_cast<std::size_t>(k)] : 0;
    };
    int delta = 0;
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const int li = values[static_cast<std::size_t>(i)];
        const int p = t.sign[static_cast<std::size_t>(i)];
        int mu = li;
        if (li % 2 != 0 && li != lambda_at(i - p))
            mu = li + p;
        t.mu.push_back(mu);
        delta += mu - li;
        t.partial_sum_delta.push_back(delta);
    }
    return t;
}

namespace {

bool condition_iii_holds(const TaggedRow& row, IiiVariant variant)
{
    if (!row.prime_part)
        return false;
    switch (variant) {
    case IiiVariant::So: return *row.prime_part % 2 != 0;
    case IiiVariant::Sp: return *row.prime_part % 2 == 0;
    case IiiVariant::Vacuous: return false;
    }
    return false;
}

}  // namespace

TauTable tau_table(const SpTrace& trace, const TaggedPartition& tags, Theory theory,
                   const FingerprintOptions& opts)
{
    if (tags.rows.size() != trace.size())
        throw std::invalid_argument("tau_table: trace and tagged partition differ in length");
    const IiiVariant variant = opts.resolved_variant(theory);
    TauTable table;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const int m = trace.mu[i];
        if (m <= 0 || m % 2 != 0)
            continue;
        auto& entry = table[m];
        if (entry.tau == -1)
            continue;
        std::optional<Condition> hit;
        if (opts.conditions.i && trace.mu[i] != trace.lambda[i])
            hit = Condition::I;
        else if (opts.conditions.ii && trace.partial_sum_delta[i] != 0)
            hit = Condition::II;
        else if (opts.conditions.iii && condition_iii_holds(tags.rows[i], variant))
            hit = Condition::III;
        if (hit) {
            entry.tau = -1;
            entry.witness = hit;
            entry.witness_index = i;
        }
    }
    return table;
}

Extraction extract_weyl_pair(const SpTrace& trace, const TauTable& tau, int rank)
{
    std::map<int, int, std::greater<>> counts;
    for (int v : trace.mu)
        if (v > 0)
            ++counts[v];

    std::vector<int> alpha, beta;
    for (auto [value, count] : counts) {
        int t = 1;
        if (value % 2 == 0) {
            auto it = tau.find(value);
            if (it != tau.end())
                t = it->second.tau;
        }
        if (t == 1) {
            if (count % 2 != 0)
                return ExtractionDiagnostic{value, count, t};
            alpha.insert(alpha.end(), static_cast<std::size_t>(count / 2), value);
        } else {
            beta.insert(beta.end(), static_cast<std::size_t>(count), value / 2);
        }
    }
    return WeylPair{Partition::from_unsorted(std::move(alpha)),
                    Partition::from_unsorted(std::move(beta)), rank};
}

FingerprintResult finish_fingerprint(const OperatorPair& pair, const FingerprintOptions& opts,
                                     TaggedPartition tagged, SpTrace trace)
{
    FingerprintOptions resolved = opts;
    resolved.iii_variant = opts.resolved_variant(pair.theory());
    TauTable tau = tau_table(trace, tagged, pair.theory(), resolved);
    Extraction outcome = extract_weyl_pair(trace, tau, pair.rank());
    return FingerprintResult{pair,          resolved,       std::move(tagged),
                             std::move(trace), std::move(tau), std::move(outcome)};
}

FingerprintResult fingerprint(const OperatorPair& pair, const FingerprintOptions& opts)
{
    TaggedPartition tagged = combine(pair, opts.combine_mode, opts.tie_break);
    SpTrace trace = sp_map(tagged.values());
    return finish_fingerprint(pair, opts, std::move(tagged), std::move(trace));
}

}  // namespace fingerprint
