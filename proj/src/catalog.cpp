#include "fingerprint/catalog.hpp"

#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace fingerprint {

using nlohmann::ordered_json;

CatalogRecord make_record(const FingerprintResult& result)
{
    CatalogRecord r;
    r.theory = result.pair.theory();
    r.rank = result.pair.rank();
    r.lambda_prime = result.pair.lambda_prime();
    r.lambda_dprime = result.pair.lambda_dprime();
    r.combine_mode = result.options.combine_mode;
    r.iii_variant = result.options.resolved_variant(r.theory);
    r.tie_break = result.options.tie_break;
    r.conditions = result.options.conditions;
    r.mu = result.trace.mu_partition();
    if (result.ok()) {
        r.alpha = result.weyl().alpha;
        r.beta = result.weyl().beta;
    } else {
        r.diagnostics.push_back(result.diagnostic());
    }
    if (result.tagged.mode == CombineMode::Interleave) {
        for (const auto& b : decompose_blocks(result.tagged, r.theory)) {
            BlockInfo info{b.begin, b.end, std::string(to_string(b.kind)), std::nullopt};
            if (b.label)
                info.operator_label = std::string(to_string(*b.label));
            r.blocks.push_back(std::move(info));
        }
    }
    return r;
}

ordered_json partition_json(const Partition& p)
{
    ordered_json a = ordered_json::array();
    for (int v : p)
        a.push_back(v);
    return a;
}

ordered_json to_json(const CatalogRecord& r)
{
    ordered_json j;
    j["theory"] = std::string(to_string(r.theory));
    j["rank"] = r.rank;
    j["lambda_prime"] = partition_json(r.lambda_prime);
    j["lambda_dprime"] = partition_json(r.lambda_dprime);
    j["combine_mode"] = std::string(to_string(r.combine_mode));
    j["iii_variant"] = std::string(to_string(r.iii_variant));
    j["tie_break"] = std::string(to_string(r.tie_break));
    j["conditions"] = format_conditions(r.conditions);
    j["mu"] = partition_json(r.mu);
    j["alpha"] = r.alpha ? partition_json(*r.alpha) : ordered_json(nullptr);
    j["beta"] = r.beta ? partition_json(*r.beta) : ordered_json(nullptr);
    ordered_json diags = ordered_json::array();
    for (const auto& d : r.diagnostics) {
        ordered_json dj;
        dj["value"] = d.value;
        dj["multiplicity"] = d.multiplicity;
        dj["tau"] = d.tau;
        dj["message"] = d.message();
        diags.push_back(std::move(dj));
    }
    j["diagnostics"] = std::move(diags);
    ordered_json blocks = ordered_json::array();
    for (const auto& b : r.blocks) {
        ordered_json bj;
        bj["range"] = ordered_json::array({b.begin, b.end});
        bj["kind"] = b.kind;
        bj["operator_label"] = b.operator_label ? ordered_json(*b.operator_label) : ordered_json(nullptr);
        blocks.push_back(std::move(bj));
    }
    j["blocks"] = std::move(blocks);
    return j;
}

namespace {

Partition partition_from_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("partition must be a JSON array");
    return Partition(j.get<std::vector<int>>());
}

template <class T, class Parse>
T enum_from_json(const nlohmann::json& j, const char* field, Parse parse)
{
    auto v = parse(j.at(field).get<std::string>());
    if (!v)
        throw std::invalid_argument(std::string("bad value for ") + field);
    return *v;
}

}  // namespace

CatalogRecord record_from_json(const nlohmann::json& j)
{
    try {
        CatalogRecord r;
        r.theory = enum_from_json<Theory>(j, "theory", parse_theory);
        r.rank = j.at("rank").get<int>();
        r.lambda_prime = partition_from_json(j.at("lambda_prime"));
        r.lambda_dprime = partition_from_json(j.at("lambda_dprime"));
        r.combine_mode = enum_from_json<CombineMode>(j, "combine_mode", [](const std::string& s) {
            return s == "interleave" ? std::optional(CombineMode::Interleave)
                 : s == "sum"        ? std::optional(CombineMode::Componentwise)
                                     : std::nullopt;
        });
        r.iii_variant = enum_from_json<IiiVariant>(j, "iii_variant", [](const std::string& s) {
            return parse_iii_variant(s);
        });
        r.tie_break = enum_from_json<TieBreak>(j, "tie_break", [](const std::string& s) {
            return s == "prime"  ? std::optional(TieBreak::PrimeFirst)
                 : s == "dprime" ? std::optional(TieBreak::DprimeFirst)
                                 : std::nullopt;
        });
        r.conditions = parse_conditions(j.at("conditions").get<std::string>());
        r.mu = partition_from_json(j.at("mu"));
        if (!j.at("alpha").is_null())
            r.alpha = partition_from_json(j.at("alpha"));
        if (!j.at("beta").is_null())
            r.beta = partition_from_json(j.at("beta"));
        for (const auto& d : j.at("diagnostics"))
            r.diagnostics.push_back({d.at("value").get<int>(), d.at("multiplicity").get<int>(),
                                     d.at("tau").get<int>()});
        for (const auto& b : j.at("blocks")) {
            BlockInfo info;
            info.begin = b.at("range").at(0).get<std::size_t>();
            info.end = b.at("range").at(1).get<std::size_t>();
            info.kind = b.at("kind").get<std::string>();
            if (!b.at("operator_label").is_null())
                info.operator_label = b.at("operator_label").get<std::string>();
            r.blocks.push_back(std::move(info));
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed catalog record: ") + e.what());
    }
}

std::string to_jsonl(const CatalogRecord& r)
{
    return to_json(r).dump();
}

FiberReport compute_fibers(Theory theory, int rank, const FingerprintOptions& opts)
{
    FiberReport report;
    std::vector<Fiber> all;
    std::map<std::pair<Partition, Partition>, std::size_t> index;
    std::set<std::pair<Partition, Partition>> seen;
    for (const auto& pair : enumerate_rigid_pairs(theory, rank)) {
        // In D both sides share a theory and (l'; l'') ~ (l''; l').
        if (theory == Theory::D) {
            auto key = std::minmax(pair.lambda_prime(), pair.lambda_dprime());
            if (!seen.emplace(key.first, key.second).second)
                continue;
        }
        ++report.classes;
        auto result = fingerprint(pair, opts);
        if (!result.ok()) {
            report.failed.push_back(pair);
            continue;
        }
        const auto& w = result.weyl();
        auto key = std::make_pair(w.alpha, w.beta);
        auto it = index.find(key);
        if (it == index.end()) {
            index.emplace(key, all.size());
            all.push_back(Fiber{w, {pair}});
        } else {
            all[it->second].members.push_back(pair);
        }
    }
    for (auto& f : all)
        if (f.members.size() >= 2)
            report.fibers.push_back(std::move(f));
    return report;
}

namespace {

std::string side(const Partition& p)
{
    return p.empty() ? "∅" : format_exponent(p);
}

}  // namespace

std::string format_pair(const OperatorPair& pair)
{
    return "(" + side(pair.lambda_prime()) + " ; " + side(pair.lambda_dprime()) + ")";
}

std::string format_weyl(const WeylPair& w)
{
    return "[" + side(w.alpha) + " ; " + side(w.beta) + "]";
}

std::string render_diagram(const FingerprintResult& result, const std::vector<Block>& blocks)
{
    std::ostringstream out;
    const auto& rows = result.tagged.rows;
    int width = 0;
    for (const auto& r : rows)
        width = std::max(width, r.value + 1);

    out << "lambda = " << format_pair(result.pair) << "  theory " << to_string(result.pair.theory())
        << ", mode " << to_string(result.options.combine_mode) << "\n";
    auto block_at = [&](std::size_t i) -> const Block* {
        for (const auto& b : blocks)
            if (b.begin == i)
                return &b;
        return nullptr;
    };
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (const Block* b = block_at(i)) {
            out << std::string(static_cast<std::size_t>(width), '-') << " block "
                << to_string(b->kind);
            if (b->label)
                out << " " << to_string(*b->label);
            out << "\n";
        }
        const char glyph = rows[i].origin == Origin::Dprime ? '*' : '#';
        std::string line(static_cast<std::size_t>(rows[i].value), glyph);
        line.resize(static_cast<std::size_t>(width), ' ');
        const int mu = result.trace.mu[i];
        out << line << (result.trace.sign[i] > 0 ? " + " : " - ") << std::setw(3) << rows[i].value;
        if (mu != rows[i].value)
            out << " -> " << mu;
        out << "\n";
    }
    out << "mu\n";
    for (int v : result.trace.mu_partition())
        out << std::string(static_cast<std::size_t>(v), '#') << "\n";
    if (result.ok())
        out << "fingerprint " << format_weyl(result.weyl()) << "\n";
    else
        out << "diagnostic: " << result.diagnostic().message() << "\n";
    return out.str();
}

}  // namespace fingerprint
