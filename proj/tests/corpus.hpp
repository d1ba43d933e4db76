#pragma once

#include <string>
#include <vector>

#include "mvstone/algebra.hpp"

namespace mvstone::testing {

struct CorpusEntry {
  std::string name;
  MvAlgebra algebra;
};

/// The twenty-algebra reference corpus: full chains, full products, and
/// generated subalgebras of products.
const std::vector<CorpusEntry>& corpus();

/// Corpus entries with carrier size at most `max_size`.
std::vector<const CorpusEntry*> corpus_up_to(size_t max_size);

/// Every full product of chains with at most `max_factors` factors and
/// factor orders drawn from `orders` (with repetition, order-insensitive).
std::vector<MvAlgebra> full_products(const std::vector<int>& orders, int max_factors);

}  // namespace mvstone::testing
