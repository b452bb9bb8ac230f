#pragma once

// Structure of the Sp map on unipotent classes: the parity split, the
// collapse maps X_S / Y_S with their inverse expansions, and closed-form
// fingerprints that serve as oracles for the pipeline.

#include "fingerprint/engine.hpp"
#include "fingerprint/partition.hpp"

namespace fingerprint {

struct ParitySplit {
    Partition odd_part;
    Partition even_part;

    friend bool operator==(const ParitySplit&, const ParitySplit&) = default;
};

[[nodiscard]] ParitySplit split_parity(const Partition& p);

/// Multiset union, sorted descending.
[[nodiscard]] Partition merge_parts(const Partition& a, const Partition& b);

/// p_C collapse. Domain: all parts odd, odd total. Loses exactly one box.
/// Throws std::domain_error outside the domain.
[[nodiscard]] Partition xs_map(const Partition& sigma);
/// p_D collapse. Domain: all parts odd, even total. Box count preserved.
[[nodiscard]] Partition ys_map(const Partition& sigma);

/// p^B expansion: the unique all-odd partition of |image|+1 with
/// xs_map(sigma) == image. Throws std::domain_error if image is not in the
/// range of xs_map.
[[nodiscard]] Partition xs_inverse(const Partition& image);
/// p^C expansion: the unique all-odd partition of |image| with
/// ys_map(sigma) == image.
[[nodiscard]] Partition ys_inverse(const Partition& image);

/// mu of a unipotent class assembled from its parity split: X_S or Y_S on
/// the odd parts, even parts untouched; mu = p for C.
[[nodiscard]] Partition unipotent_mu_factored(const Partition& p, Theory t);

/// [prod i^{n_i/2}; empty] for a rigid C partition whose multiplicities
/// are all even. Throws std::domain_error otherwise.
[[nodiscard]] WeylPair closed_form_fingerprint_C(const Partition& p);

/// Group-by-group assembly of [alpha; beta] for a rigid B or D partition.
/// Throws std::domain_error for theory C or a non-rigid input.
[[nodiscard]] WeylPair closed_form_fingerprint_BD(const Partition& p, Theory t);

}  // namespace fingerprint
