#include "fingerprint/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace fingerprint {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_unsorted(std::vector<int> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

int Partition::total() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int value) const
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::string_view to_string(Theory t)
{
    switch (t) {
    case Theory::B: return "B";
    case Theory::C: return "C";
    case Theory::D: return "D";
    }
    return "?";
}

std::optional<Theory> parse_theory(std::string_view text)
{
    if (text.size() != 1)
        return std::nullopt;
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'B': return Theory::B;
    case 'C': return Theory::C;
    case 'D': return Theory::D;
    default: return std::nullopt;
    }
}

namespace {

std::optional<int> parse_positive(std::string_view s)
{
    if (s.empty())
        return std::nullopt;
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v <= 0)
        return std::nullopt;
    return v;
}

std::vector<std::string_view> tokenize(std::string_view text)
{
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
    while (i < text.size()) {
        while (i < text.size() && is_sep(text[i]))
            ++i;
        std::size_t j = i;
        while (j < text.size() && !is_sep(text[j]))
            ++j;
        if (j > i)
            tokens.push_back(text.substr(i, j - i));
        i = j;
    }
    return tokens;
}

}  // namespace

Partition parse_partition(std::string_view text)
{
    // Optional surrounding parentheses, as in "(3,2,2,1)".
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
        text = text.substr(1, text.size() - 2);
    auto tokens = tokenize(text);
    if (tokens.empty() || (tokens.size() == 1 && tokens[0] == "∅"))
        return {};

    std::vector<int> parts;
    for (auto tok : tokens) {
        auto caret = tok.find('^');
        std::optional<int> value;
        std::optional<int> count = 1;
        if (caret == std::string_view::npos) {
            value = parse_positive(tok);
        } else {
            value = parse_positive(tok.substr(0, caret));
            count = parse_positive(tok.substr(caret + 1));
        }
        if (!value || !count)
            throw ParseError("malformed partition token '" + std::string(tok) + "'");
        if (!parts.empty() && *value > parts.back())
            throw ParseError("partition not weakly decreasing at token '" + std::string(tok) + "'");
        parts.insert(parts.end(), static_cast<std::size_t>(*count), *value);
    }
    return Partition(std::move(parts));
}

std::string format_exponent(const Partition& p)
{
    std::ostringstream out;
    std::size_t i = 0;
    bool first = true;
    while (i < p.length()) {
        std::size_t j = i;
        while (j < p.length() && p[j] == p[i])
            ++j;
        if (!first)
            out << ' ';
        first = false;
        out << p[i];
        if (j - i > 1)
            out << '^' << (j - i);
        i = j;
    }
    return out.str();
}

std::string format_list(const Partition& p)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i)
            out << ',';
        out << p[i];
    }
    return out.str();
}

bool is_theory_member(const Partition& p, Theory t)
{
    const int total = p.total();
    std::map<int, int> mult;
    for (int v : p)
        ++mult[v];
    // Values of this parity must come in pairs.
    const int paired_parity = (t == Theory::C) ? 1 : 0;
    for (auto [v, n] : mult)
        if (v % 2 == paired_parity && n % 2 != 0)
            return false;
    if (t == Theory::B)
        return total % 2 == 1;
    return total % 2 == 0;
}

bool is_rigid(const Partition& p, Theory t)
{
    if (t == Theory::D && p == Partition{1, 1})
        return true;
    for (std::size_t i = 0; i < p.length(); ++i)
        if (p[i] - p.at_or_zero(i + 1) > 1)
            return false;
    const int forbidden_parity = (t == Theory::C) ? 0 : 1;
    std::size_t i = 0;
    while (i < p.length()) {
        std::size_t j = i;
        while (j < p.length() && p[j] == p[i])
            ++j;
        if (p[i] % 2 == forbidden_parity && j - i == 2)
            return false;
        i = j;
    }
    return true;
}

Partition transpose(const Partition& p)
{
    std::vector<int> cols;
    for (int r = 1; r <= p.largest(); ++r) {
        int count = 0;
        for (int v : p)
            if (v >= r)
                ++count;
        cols.push_back(count);
    }
    return Partition(std::move(cols));
}

int rank_of(const Partition& p, Theory t)
{
    return (p.total() - (t == Theory::B ? 1 : 0)) / 2;
}

int boxes_for_rank(Theory t, int rank)
{
    return 2 * rank + (t == Theory::B ? 1 : 0);
}

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    if (n < 0)
        return out;
    std::vector<int> current;
    // Depth-first with the largest first part first gives descending lex order.
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int k = std::min(remaining, cap); k >= 1; --k) {
            current.push_back(k);
            rec(remaining - k, k);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Partition> enumerate_rigid(Theory t, int rank)
{
    std::vector<Partition> out;
    if (rank < 0)
        return out;
    for (auto& p : partitions_of(boxes_for_rank(t, rank)))
        if (is_theory_member(p, t) && is_rigid(p, t))
            out.push_back(std::move(p));
    return out;
}

Theory prime_side_theory(Theory t)
{
    return t;
}

Theory dprime_side_theory(Theory t)
{
    return t == Theory::B ? Theory::D : t;
}

OperatorPair::OperatorPair(Partition lambda_prime, Partition lambda_dprime, Theory theory)
    : prime_(std::move(lambda_prime)), dprime_(std::move(lambda_dprime)), theory_(theory)
{
    auto check = [](const Partition& p, Theory t, const char* name) {
        if (!p.empty() && !is_theory_member(p, t))
            throw std::invalid_argument(std::string(name) + " = (" + format_list(p) + ") is not a " +
                                        std::string(to_string(t)) + "-type partition");
    };
    check(prime_, prime_theory(), "lambda'");
    check(dprime_, dprime_theory(), "lambda''");
    if (prime_.total() + dprime_.total() < (theory_ == Theory::B ? 1 : 0))
        throw std::invalid_argument("a B-theory operator needs at least one box");
}

Theory OperatorPair::prime_theory() const
{
    return dprime_.empty() ? theory_ : prime_side_theory(theory_);
}

Theory OperatorPair::dprime_theory() const
{
    return prime_.empty() ? theory_ : dprime_side_theory(theory_);
}

int OperatorPair::rank() const
{
    return (prime_.total() + dprime_.total() - (theory_ == Theory::B ? 1 : 0)) / 2;
}

bool OperatorPair::prime_rigid() const
{
    return prime_.empty() || is_rigid(prime_, prime_theory());
}

bool OperatorPair::dprime_rigid() const
{
    return dprime_.empty() || is_rigid(dprime_, dprime_theory());
}

std::vector<OperatorPair> enumerate_rigid_pairs(Theory t, int rank)
{
    std::vector<OperatorPair> out;
    for (int n1 = rank; n1 >= 0; --n1) {
        auto left = enumerate_rigid(prime_side_theory(t), n1);
        auto right = enumerate_rigid(dprime_side_theory(t), rank - n1);
        for (const auto& a : left)
            for (const auto& b : right)
                out.emplace_back(a, b, t);
    }
    return out;
}

std::string_view to_string(CombineMode m)
{
    return m == CombineMode::Interleave ? "interleave" : "sum";
}

std::string_view to_string(TieBreak t)
{
    return t == TieBreak::PrimeFirst ? "prime" : "dprime";
}

std::string_view to_string(Origin o)
{
    switch (o) {
    case Origin::Prime: return "prime";
    case Origin::Dprime: return "dprime";
    case Origin::Sum: return "sum";
    }
    return "?";
}

std::vector<int> TaggedPartition::values() const
{
    std::vector<int> v;
    v.reserve(rows.size());
    for (const auto& r : rows)
        v.push_back(r.value);
    return v;
}

int TaggedPartition::total() const
{
    int s = 0;
    for (const auto& r : rows)
        s += r.value;
    return s;
}

TaggedPartition combine(const OperatorPair& pair, CombineMode mode, TieBreak tie_break)
{
    const auto& a = pair.lambda_prime();
    const auto& b = pair.lambda_dprime();
    TaggedPartition tp;
    tp.mode = mode;

    if (mode == CombineMode::Componentwise) {
        const std::size_t len = std::max(a.length(), b.length());
        for (std::size_t i = 0; i < len; ++i) {
            TaggedRow row{a.at_or_zero(i) + b.at_or_zero(i), Origin::Sum, std::nullopt};
            if (i < a.length())
                row.prime_part = a[i];
            tp.rows.push_back(row);
        }
        return tp;
    }

    const bool prime_first = tie_break == TieBreak::PrimeFirst;
    std::size_t i = 0, j = 0;
    while (i < a.length() || j < b.length()) {
        bool take_prime;
        if (i == a.length())
            take_prime = false;
        else if (j == b.length())
            take_prime = true;
        else if (a[i] != b[j])
            take_prime = a[i] > b[j];
        else
            take_prime = prime_first;
        if (take_prime) {
            tp.rows.push_back({a[i], Origin::Prime, a[i]});
            ++i;
        } else {
            tp.rows.push_back({b[j], Origin::Dprime, std::nullopt});
            ++j;
        }
    }
    return tp;
}

TaggedPartition shift_rows(const TaggedPartition& tp, int k)
{
    TaggedPartition out = tp;
    for (auto& r : out.rows) {
        r.value += k;
        if (r.prime_part)
            *r.prime_part += k;
    }
    return out;
}

}  // namespace fingerprint
