#include "fingerprint/unipotent.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace fingerprint {

ParitySplit split_parity(const Partition& p)
{
    std::vector<int> odd, even;
    for (int v : p)
        (v % 2 ? odd : even).push_back(v);
    return {Partition(std::move(odd)), Partition(std::move(even))};
}

Partition merge_parts(const Partition& a, const Partition& b)
{
    std::vector<int> all(a.begin(), a.end());
    all.insert(all.end(), b.begin(), b.end());
    return Partition::from_unsorted(std::move(all));
}

namespace {

void require_all_odd(const Partition& sigma, int total_parity, const char* map)
{
    for (int v : sigma)
        if (v % 2 == 0)
            throw std::domain_error(std::string(map) + ": part " + std::to_string(v) +
                                    " is even; the domain is all-odd partitions");
    if (sigma.total() % 2 != total_parity)
        throw std::domain_error(std::string(map) + ": total " + std::to_string(sigma.total()) +
                                (total_parity ? " is even, expected odd" : " is odd, expected even"));
}

// All partitions of n into odd parts, descending lexicographic order.
std::vector<Partition> odd_part_partitions(int n)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(remaining, cap); k >= 1; --k) {
            if (k % 2 == 0)
                continue;
            cur.push_back(k);
            rec(remaining - k, k);
            cur.pop_back();
        }
    };
    if (n >= 0)
        rec(n, n);
    return out;
}

Partition invert_by_search(const Partition& image, int source_total,
                           Partition (*forward)(const Partition&), const char* name)
{
    // Sources are bounded by the image's largest part plus one.
    for (const auto& sigma : odd_part_partitions(source_total)) {
        if (sigma.largest() > image.largest() + 1)
            continue;
        if (forward(sigma) == image)
            return sigma;
    }
    throw std::domain_error(std::string(name) + ": (" + format_list(image) +
                            ") is not in the image of the collapse");
}

}  // namespace

Partition xs_map(const Partition& sigma)
{
    require_all_odd(sigma, 1, "xs_map");
    return sp_map(sigma.parts()).mu_partition();
}

Partition ys_map(const Partition& sigma)
{
    require_all_odd(sigma, 0, "ys_map");
    return sp_map(sigma.parts()).mu_partition();
}

Partition xs_inverse(const Partition& image)
{
    return invert_by_search(image, image.total() + 1, &xs_map, "xs_inverse");
}

Partition ys_inverse(const Partition& image)
{
    return invert_by_search(image, image.total(), &ys_map, "ys_inverse");
}

Partition unipotent_mu_factored(const Partition& p, Theory t)
{
    if (!is_theory_member(p, t))
        throw std::domain_error("unipotent_mu_factored: (" + format_list(p) + ") is not a " +
                                std::string(to_string(t)) + "-type partition");
    if (t == Theory::C)
        return p;
    const auto split = split_parity(p);
    const Partition collapsed = t == Theory::B ? xs_map(split.odd_part) : ys_map(split.odd_part);
    return merge_parts(collapsed, split.even_part);
}

WeylPair closed_form_fingerprint_C(const Partition& p)
{
    if (!is_theory_member(p, Theory::C) || !is_rigid(p, Theory::C))
        throw std::domain_error("closed_form_fingerprint_C: (" + format_list(p) +
                                ") is not a rigid C partition");
    std::vector<int> alpha;
    std::size_t i = 0;
    while (i < p.length()) {
        std::size_t j = i;
        while (j < p.length() && p[j] == p[i])
            ++j;
        const auto n = j - i;
        if (n % 2 != 0)
            throw std::domain_error("closed_form_fingerprint_C: multiplicity " + std::to_string(n) +
                                    " of " + std::to_string(p[i]) +
                                    " is odd, exponent n_i/2 is not integral");
        alpha.insert(alpha.end(), n / 2, p[i]);
        i = j;
    }
    return WeylPair{Partition(std::move(alpha)), Partition{}, rank_of(p, Theory::C)};
}

WeylPair closed_form_fingerprint_BD(const Partition& p, Theory t)
{
    if (t == Theory::C)
        throw std::domain_error("closed_form_fingerprint_BD: theory must be B or D");
    if (!is_theory_member(p, t) || !is_rigid(p, t))
        throw std::domain_error("closed_form_fingerprint_BD: (" + format_list(p) +
                                ") is not a rigid " + std::string(to_string(t)) + " partition");

    std::map<int, int, std::greater<>> mult;
    for (int v : p)
        ++mult[v];

    // Walk the value groups top-down. For an odd value i with n_i copies
    // and entry parity e (boxes above the group):
    //   e odd,  n_i even : first copy -> i+1, last copy -> i-1, i^{(n_i-2)/2}
    //   e odd,  n_i odd  : first copy -> i+1,                   i^{(n_i-1)/2}
    //   e even, n_i odd  : last copy -> i-1,                    i^{(n_i-1)/2}
    //   e even, n_i even : unchanged,                           i^{n_i/2}
    // An even value that received a moved box has tau = -1 and all of its
    // copies feed beta as halves; otherwise its copies pair into alpha.
    std::map<int, int, std::greater<>> gained;  // even value -> boxes moved in
    std::vector<int> alpha, beta;
    int above = 0;
    for (auto [value, n] : mult) {
        if (value % 2 != 0) {
            const bool raise_first = above % 2 != 0;
            const bool lower_last = (above + value * n) % 2 != 0;
            const int kept = n - (raise_first ? 1 : 0) - (lower_last ? 1 : 0);
            alpha.insert(alpha.end(), static_cast<std::size_t>(kept / 2), value);
            if (raise_first)
                ++gained[value + 1];
            if (lower_last && value > 1)
                ++gained[value - 1];
        }
        above += value * n;
    }
    for (int value = p.largest() + 1; value >= 2; --value) {
        if (value % 2 != 0)
            continue;
        const int own = mult.count(value) ? mult.at(value) : 0;
        const int moved = gained.count(value) ? gained.at(value) : 0;
        if (moved > 0)
            beta.insert(beta.end(), static_cast<std::size_t>(own + moved), value / 2);
        else
            alpha.insert(alpha.end(), static_cast<std::size_t>(own / 2), value);
    }
    return WeylPair{Partition::from_unsorted(std::move(alpha)),
                    Partition::from_unsorted(std::move(beta)), rank_of(p, t)};
}

}  // namespace fingerprint
