#pragma once

#include <utility>
#include <vector>

#include "wgcoe/comb/partition.hpp"
#include "wgcoe/exact/polynomial.hpp"
#include "wgcoe/memo.hpp"

namespace wgcoe::comb {

// chi^lambda on the class of cycle type rho, by the Murnaghan-Nakayama rule
// (border strips removed via beta-sets, memoized on the remaining
// (shape, cycle type)). Throws DomainError when |lambda| != |rho|.
long irreducible_character(const Partition& lambda, const Partition& rho);

// f^lambda from the hook length formula.
long dimension(const Partition& lambda);

// prod over cells (i, j) of lambda of (N + j - i).
exact::Polynomial content_product(const Partition& lambda);

// Number of semistandard tableaux of shape lambda and weight mu, by filling
// the values 1..l(mu) as successive horizontal strips with memoization.
// Throws DomainError when |lambda| != |mu|.
long kostka(const Partition& lambda, const Partition& mu);

// |C_rho| = n! / z_rho.
BigInt class_size(const Partition& rho);

using CharacterKey = std::pair<Partition, Partition>;
Memo<CharacterKey, long>& character_memo();
Memo<CharacterKey, long>& kostka_memo();

}  // namespace wgcoe::comb
