#pragma once

// Integer partitions labelling classes in the B_n / C_n / D_n theories,
// rigidity tests, enumeration and the merge of an operator pair into a
// single tagged partition.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fingerprint {

/// Raised by parse_partition; the message names the offending token.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A weakly decreasing sequence of positive integers. The empty partition
/// is a valid value.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly
    /// decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    /// Sorts arbitrary positive parts into descending order.
    static Partition from_unsorted(std::vector<int> parts);

    [[nodiscard]] std::span<const int> parts() const { return parts_; }
    [[nodiscard]] const std::vector<int>& vector() const { return parts_; }
    [[nodiscard]] std::size_t length() const { return parts_.size(); }
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    [[nodiscard]] int total() const;
    [[nodiscard]] int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    [[nodiscard]] int multiplicity(int value) const;
    /// Part i (0-based); zero past the end, matching lambda_{l+1} = 0.
    [[nodiscard]] int at_or_zero(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    int operator[](std::size_t i) const { return parts_[i]; }

    [[nodiscard]] auto begin() const { return parts_.begin(); }
    [[nodiscard]] auto end() const { return parts_.end(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

enum class Theory { B, C, D };

[[nodiscard]] std::string_view to_string(Theory t);
/// Accepts "B", "C", "D" (case-insensitive).
[[nodiscard]] std::optional<Theory> parse_theory(std::string_view text);

/// Parses "3,2,2,1", "3 2 2 1" or exponent form "2^4 1^2". The empty
/// string, "()" and "∅" denote the empty partition.
[[nodiscard]] Partition parse_partition(std::string_view text);

/// Exponent form with exponent 1 omitted: (2,2,1) -> "2^2 1"; () -> "".
[[nodiscard]] std::string format_exponent(const Partition& p);
/// Comma separated list: (3,2,2,1) -> "3,2,2,1"; () -> "".
[[nodiscard]] std::string format_list(const Partition& p);

/// B: odd total, even values with even multiplicity.
/// D: even total, even values with even multiplicity.
/// C: even total, odd values with even multiplicity.
[[nodiscard]] bool is_theory_member(const Partition& p, Theory t);

/// Rigidity for a partition already known to lie in theory t: no gaps down
/// to zero, and no odd (B/D) or even (C) value of multiplicity exactly two.
/// The lone partition 1^2 of D_1 is rigid (so(2) has no proper Levi).
[[nodiscard]] bool is_rigid(const Partition& p, Theory t);

[[nodiscard]] Partition transpose(const Partition& p);

/// Rank n of a partition in theory t: (total - theta) / 2, theta = 1 for B.
[[nodiscard]] int rank_of(const Partition& p, Theory t);

/// Number of boxes for a class of rank n: 2n+1 for B, 2n otherwise.
[[nodiscard]] int boxes_for_rank(Theory t, int rank);

/// Every partition of n in lexicographically descending order.
[[nodiscard]] std::vector<Partition> partitions_of(int n);

/// Rigid partitions of rank n in lexicographically descending order.
[[nodiscard]] std::vector<Partition> enumerate_rigid(Theory t, int rank);

/// The theory each side of an operator pair must belong to.
[[nodiscard]] Theory prime_side_theory(Theory t);
[[nodiscard]] Theory dprime_side_theory(Theory t);

/// A pair (lambda'; lambda'') labelling a semisimple operator. Unipotent
/// operators have one side empty.
class OperatorPair {
public:
    /// Throws std::invalid_argument if a side violates its theory. Box
    /// parity follows from side membership.
    OperatorPair(Partition lambda_prime, Partition lambda_dprime, Theory theory);

    [[nodiscard]] const Partition& lambda_prime() const { return prime_; }
    [[nodiscard]] const Partition& lambda_dprime() const { return dprime_; }
    [[nodiscard]] Theory theory() const { return theory_; }
    /// Theory each side is validated against. A unipotent operator keeps
    /// the ambient theory on its non-empty side, so B accepts (;lambda).
    [[nodiscard]] Theory prime_theory() const;
    [[nodiscard]] Theory dprime_theory() const;
    [[nodiscard]] int rank() const;
    [[nodiscard]] bool prime_rigid() const;
    [[nodiscard]] bool dprime_rigid() const;
    [[nodiscard]] bool rigid() const { return prime_rigid() && dprime_rigid(); }

    friend bool operator==(const OperatorPair&, const OperatorPair&) = default;

private:
    Partition prime_;
    Partition dprime_;
    Theory theory_;
};

/// Rigid pairs of total rank n, ordered by descending rank of lambda', then
/// lexicographically descending on each side. Empty sides allowed.
[[nodiscard]] std::vector<OperatorPair> enumerate_rigid_pairs(Theory t, int rank);

enum class CombineMode { Interleave, Componentwise };
enum class TieBreak { PrimeFirst, DprimeFirst };
enum class Origin { Prime, Dprime, Sum };

[[nodiscard]] std::string_view to_string(CombineMode m);
[[nodiscard]] std::string_view to_string(TieBreak t);
[[nodiscard]] std::string_view to_string(Origin o);

struct TaggedRow {
    int value = 0;
    Origin origin = Origin::Prime;
    /// The lambda' part sitting on this row, read by condition (iii).
    /// Interleave: the row's own value when it came from lambda'.
    /// Componentwise: lambda'_i, absent on zero padding.
    std::optional<int> prime_part;

    friend bool operator==(const TaggedRow&, const TaggedRow&) = default;
};

struct TaggedPartition {
    std::vector<TaggedRow> rows;
    CombineMode mode = CombineMode::Interleave;

    [[nodiscard]] std::vector<int> values() const;
    [[nodiscard]] Partition as_partition() const { return Partition(values()); }
    [[nodiscard]] int total() const;

    friend bool operator==(const TaggedPartition&, const TaggedPartition&) = default;
};

[[nodiscard]] TaggedPartition combine(const OperatorPair& pair, CombineMode mode,
                                      TieBreak tie_break = TieBreak::PrimeFirst);

/// Adds k to every row, keeping tags (and lambda' parities) unchanged.
[[nodiscard]] TaggedPartition shift_rows(const TaggedPartition& tp, int k);

}  // namespace fingerprint
