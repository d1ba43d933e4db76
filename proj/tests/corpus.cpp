#include "corpus.hpp"

namespace mvstone::testing {

namespace {

MvAlgebra gen(std::vector<int> orders, std::vector<MvElem> gens) {
  return MvAlgebra::generate(Signature(std::move(orders)), gens);
}

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> c;
  c.push_back({"L2", MvAlgebra::chain_algebra(2)});
  c.push_back({"L3", MvAlgebra::chain_algebra(3)});
  c.push_back({"L4", MvAlgebra::chain_algebra(4)});
  c.push_back({"L5", MvAlgebra::chain_algebra(5)});
  c.push_back({"L6", MvAlgebra::chain_algebra(6)});
  c.push_back({"L7", MvAlgebra::chain_algebra(7)});
  c.push_back({"L2xL2", MvAlgebra::full_product(Signature({2, 2}))});
  c.push_back({"L2xL3", MvAlgebra::full_product(Signature({2, 3}))});
  c.push_back({"L2xL4", MvAlgebra::full_product(Signature({2, 4}))});
  c.push_back({"L3xL3", MvAlgebra::full_product(Signature({3, 3}))});
  c.push_back({"L3xL4", MvAlgebra::full_product(Signature({3, 4}))});
  c.push_back({"L2xL2xL2", MvAlgebra::full_product(Signature({2, 2, 2}))});
  c.push_back({"L2^4", MvAlgebra::full_product(Signature({2, 2, 2, 2}))});
  c.push_back({"L2xL3xL5", MvAlgebra::full_product(Signature({2, 3, 5}))});
  // Generated subalgebras.
  c.push_back({"diag_L3", gen({3, 3}, {{1, 1}})});
  c.push_back({"sub_L3xL2", gen({3, 2}, {{1, 0}})});
  c.push_back({"diag_L3_xL2", gen({3, 3, 2}, {{1, 1, 0}})});
  c.push_back({"sub_L4xL4", gen({4, 4}, {{1, 2}})});
  c.push_back({"sub_L3xL4", gen({3, 4}, {{1, 1}})});
  c.push_back({"sub_L2xL2xL3", gen({2, 2, 3}, {{1, 0, 1}})});
  return c;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = build();
  return c;
}

std::vector<const CorpusEntry*> corpus_up_to(size_t max_size) {
  std::vector<const CorpusEntry*> out;
  for (const auto& e : corpus())
    if (e.algebra.size() <= max_size) out.push_back(&e);
  return out;
}

std::vector<MvAlgebra> full_products(const std::vector<int>& orders, int max_factors) {
  std::vector<MvAlgebra> out;
  std::vector<std::vector<int>> sigs;
  std::vector<int> cur;
  // All ordered factor tuples up to max_factors.
  auto rec = [&](auto&& self) -> void {
    if (!cur.empty()) sigs.push_back(cur);
    if (cur.size() == static_cast<size_t>(max_factors)) return;
    for (int o : orders) {
      cur.push_back(o);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  for (auto& s : sigs) out.push_back(MvAlgebra::full_product(Signature(s)));
  return out;
}

}  // namespace mvstone::testing
