#include "blring/refalg.hpp"

#include <algorithm>

namespace blring {

namespace {

std::vector<std::uint8_t> chain_leq(std::size_t n) {
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) leq[x * n + y] = 1;
  return leq;
}

/// Product of two chains; index = cols*i + j.
std::vector<std::uint8_t> grid_leq(std::size_t rows, std::size_t cols) {
  const std::size_t n = rows * cols;
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      leq[x * n + y] =
          (x / cols <= y / cols && x % cols <= y % cols) ? 1 : 0;
  return leq;
}

ResLat make(std::size_t n, std::vector<std::uint8_t> leq,
            std::vector<Elem> odot, std::vector<Elem> arrow,
            std::vector<std::string> labels) {
  AlgebraTableSpec spec;
  spec.size = n;
  spec.leq = std::move(leq);
  spec.odot = std::move(odot);
  spec.arrow = std::move(arrow);
  spec.labels = std::move(labels);
  return from_tables(spec);
}

std::vector<ReferenceAlgebra> build_catalog() {
  std::vector<ReferenceAlgebra> cat;

  cat.push_back({"3.1", "MV chain of order 3",
                 make(3, chain_leq(3),
                      {0, 0, 0,  //
                       0, 0, 1,  //
                       0, 1, 2},
                      {2, 2, 2,  //
                       1, 2, 2,  //
                       0, 1, 2},
                      {"0", "I", "R"})});

  cat.push_back({"3.2", "idempotent chain of order 3",
                 make(3, chain_leq(3),
                      {0, 0, 0,  //
                       0, 1, 1,  //
                       0, 1, 2},
                      {2, 2, 2,  //
                       0, 2, 2,  //
                       0, 1, 2},
                      {"0", "I", "R"})});

  // diamond: 0 < I, J < R with I, J incomparable
  std::vector<std::uint8_t> diamond(16, 0);
  for (Elem x = 0; x < 4; ++x) {
    diamond[std::size_t(x) * 4 + x] = 1;
    diamond[std::size_t(0) * 4 + x] = 1;
    diamond[std::size_t(x) * 4 + 3] = 1;
  }
  cat.push_back({"3.3", "Boolean diamond of order 4",
                 make(4, diamond,
                      {0, 0, 0, 0,  //
                       0, 1, 0, 1,  //
                       0, 0, 2, 2,  //
                       0, 1, 2, 3},
                      {3, 3, 3, 3,  //
                       2, 3, 2, 3,  //
                       1, 1, 3, 3,  //
                       0, 1, 2, 3},
                      {"0", "I", "J", "R"})});

  cat.push_back({"3.4", "MV chain of order 4",
                 make(4, chain_leq(4),
                      {0, 0, 0, 0,  //
                       0, 0, 0, 1,  //
                       0, 0, 1, 2,  //
                       0, 1, 2, 3},
                      {3, 3, 3, 3,  //
                       2, 3, 3, 3,  //
                       1, 2, 3, 3,  //
                       0, 1, 2, 3},
                      {"0", "I", "J", "R"})});

  cat.push_back({"3.5", "four-chain with I*I=0, J*J=J",
                 make(4, chain_leq(4),
                      {0, 0, 0, 0,  //
                       0, 0, 1, 1,  //
                       0, 1, 2, 2,  //
                       0, 1, 2, 3},
                      {3, 3, 3, 3,  //
                       1, 3, 3, 3,  //
                       0, 1, 3, 3,  //
                       0, 1, 2, 3},
                      {"0", "I", "J", "R"})});

  cat.push_back({"3.6", "four-chain with I*I=I, J*J=I",
                 make(4, chain_leq(4),
                      {0, 0, 0, 0,  //
                       0, 1, 1, 1,  //
                       0, 1, 1, 2,  //
                       0, 1, 2, 3},
                      {3, 3, 3, 3,  //
                       0, 3, 3, 3,  //
                       0, 2, 3, 3,  //
                       0, 1, 2, 3},
                      {"0", "I", "J", "R"})});

  cat.push_back({"3.7", "idempotent chain of order 4",
                 make(4, chain_leq(4),
                      {0, 0, 0, 0,  //
                       0, 1, 1, 1,  //
                       0, 1, 2, 2,  //
                       0, 1, 2, 3},
                      {3, 3, 3, 3,  //
                       0, 3, 3, 3,  //
                       0, 1, 3, 3,  //
                       0, 1, 2, 3},
                      {"0", "I", "J", "R"})});

  cat.push_back(
      {"3.8", "square of the order-3 idempotent chain",
       make(9, grid_leq(3, 3),
            {0, 0, 0, 0, 0, 0, 0, 0, 0,  //
             0, 1, 1, 0, 1, 1, 0, 1, 1,  //
             0, 1, 2, 0, 1, 2, 0, 1, 2,  //
             0, 0, 0, 3, 3, 3, 3, 3, 3,  //
             0, 1, 1, 3, 4, 4, 3, 4, 4,  //
             0, 1, 2, 3, 4, 5, 3, 4, 5,  //
             0, 0, 0, 3, 3, 3, 6, 6, 6,  //
             0, 1, 1, 3, 4, 4, 6, 7, 7,  //
             0, 1, 2, 3, 4, 5, 6, 7, 8},
            {8, 8, 8, 8, 8, 8, 8, 8, 8,  //
             6, 8, 8, 6, 8, 8, 6, 8, 8,  //
             6, 7, 8, 6, 7, 8, 6, 7, 8,  //
             2, 2, 2, 8, 8, 8, 8, 8, 8,  //
             0, 2, 2, 6, 8, 8, 6, 8, 8,  //
             0, 1, 2, 6, 7, 8, 6, 7, 8,  //
             2, 2, 2, 5, 5, 5, 8, 8, 8,  //
             0, 2, 2, 3, 5, 5, 6, 8, 8,  //
             0, 1, 2, 3, 4, 5, 6, 7, 8},
            {"O", "A", "B", "C", "D", "E", "F", "G", "Z"})});

  // order-5 comet: O < D < E, G < Z with E, G incomparable
  std::vector<std::uint8_t> comet(25, 0);
  auto set_le = [&comet](Elem x, Elem y) { comet[std::size_t(x) * 5 + y] = 1; };
  for (Elem x = 0; x < 5; ++x) {
    set_le(x, x);
    set_le(0, x);
    set_le(x, 4);
  }
  set_le(1, 2);
  set_le(1, 3);
  cat.push_back({"3.11-comet5", "order-5 comet in the square",
                 make(5, comet,
                      {0, 0, 0, 0, 0,  //
                       0, 1, 1, 1, 1,  //
                       0, 1, 2, 1, 2,  //
                       0, 1, 1, 3, 3,  //
                       0, 1, 2, 3, 4},
                      {4, 4, 4, 4, 4,  //
                       0, 4, 4, 4, 4,  //
                       0, 3, 4, 3, 4,  //
                       0, 2, 2, 4, 4,  //
                       0, 1, 2, 3, 4},
                      {"O", "D", "E", "G", "Z"})});

  cat.push_back({"3.11-interval6", "order-6 upper interval of the square",
                 make(6, grid_leq(2, 3),
                      {0, 0, 0, 0, 0, 0,  //
                       0, 1, 1, 0, 1, 1,  //
                       0, 1, 2, 0, 1, 2,  //
                       0, 0, 0, 3, 3, 3,  //
                       0, 1, 1, 3, 4, 4,  //
                       0, 1, 2, 3, 4, 5},
                      {5, 5, 5, 5, 5, 5,  //
                       3, 5, 5, 3, 5, 5,  //
                       3, 4, 5, 3, 4, 5,  //
                       2, 2, 2, 5, 5, 5,  //
                       0, 2, 2, 3, 5, 5,  //
                       0, 1, 2, 3, 4, 5},
                      {"C", "D", "E", "F", "G", "Z"})});

  return cat;
}

}  // namespace

const std::vector<ReferenceAlgebra>& ref_tables() {
  static const std::vector<ReferenceAlgebra> catalog = build_catalog();
  return catalog;
}

const ReferenceAlgebra& ref_table(const std::string& id) {
  for (const auto& ref : ref_tables())
    if (ref.id == id) return ref;
  throw Error("ref_table: unknown id " + id);
}

ResLat lukasiewicz_chain(std::size_t n) {
  if (n < 2) throw Error("lukasiewicz_chain: order must be >= 2");
  AlgebraTableSpec spec;
  spec.size = n;
  spec.leq = chain_leq(n);
  spec.odot.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      spec.odot[x * n + y] = Elem(x + y < n - 1 ? 0 : x + y - (n - 1));
  spec.labels.resize(n);
  for (std::size_t i = 0; i < n; ++i) spec.labels[i] = std::to_string(i);
  return from_tables(spec);
}

ResLat godel_chain(std::size_t n) {
  if (n < 2) throw Error("godel_chain: order must be >= 2");
  AlgebraTableSpec spec;
  spec.size = n;
  spec.leq = chain_leq(n);
  spec.odot.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      spec.odot[x * n + y] = Elem(std::min(x, y));
  spec.labels.resize(n);
  for (std::size_t i = 0; i < n; ++i) spec.labels[i] = std::to_string(i);
  return from_tables(spec);
}

std::string match_ref_table(const ResLat& l) {
  for (const auto& ref : ref_tables()) {
    if (ref.algebra.size != l.size) continue;
    if (are_isomorphic(ref.algebra, l)) return ref.id;
  }
  return "";
}

}  // namespace blring
