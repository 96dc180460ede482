#ifndef BLRING_IDEALS_HPP
#define BLRING_IDEALS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "blring/finring.hpp"

namespace blring {

/// An ideal of a finite ring, stored as a member bitset plus a small
/// generating set (used to keep quotient/product computations near-linear).
/// Equality and ordering look at the members only.
struct Ideal {
  const FiniteRing* ring = nullptr;
  MemberSet members;
  std::vector<Elem> gens;

  std::size_t size() const { return members.count(); }
  bool contains(Elem a) const { return members.test(a); }
  bool is_zero_ideal() const { return members.count() == 1; }
  bool is_whole_ring() const { return members.count() == ring->order; }
  std::string label() const;  // "{0}", "(2)", "(2,X)", "R"
};

bool same_ring(const Ideal& a, const Ideal& b);

/// {r*a : r in R} — smallest ideal containing a (R unitary).
/// Ideals point at their ring; temporaries cannot bind.
Ideal principal_ideal(const FiniteRing& r, Elem a);
Ideal principal_ideal(FiniteRing&&, Elem) = delete;

/// Ideal generated by a set of elements (sum of their principal ideals).
Ideal ideal_generated_by(const FiniteRing& r, const std::vector<Elem>& gens);
Ideal ideal_generated_by(FiniteRing&&, const std::vector<Elem>&) = delete;

Ideal ideal_sum(const Ideal& i, const Ideal& j);
Ideal ideal_product(const Ideal& i, const Ideal& j);
Ideal ideal_intersect(const Ideal& i, const Ideal& j);
/// (i : j) = {x in R : x*J ⊆ I}
Ideal ideal_quotient(const Ideal& i, const Ideal& j);
/// Ann(i) = ({0} : i)
Ideal annihilator(const Ideal& i);

/// Throws NotAnIdealError unless `members` contains zero, is closed under
/// addition and absorbs ring multiplication.
void validate_ideal(const FiniteRing& r, const MemberSet& members);

/// The complete inclusion-ordered family Id(R), canonically sorted by
/// (size, member bitset).  Index 0 is {0}; the last index is R.  The four
/// ideal operations are tabulated over lattice indices at construction,
/// which doubles as the closure (fixpoint) check.
struct IdealLattice {
  const FiniteRing* ring = nullptr;
  std::vector<Ideal> ideals;
  std::size_t bottom = 0;
  std::size_t top = 0;
  std::vector<std::uint8_t> leq;  // n x n inclusion table
  std::vector<Elem> sum_tab;      // lattice-index tables for +, ⊗, ∩, (:)
  std::vector<Elem> prod_tab;
  std::vector<Elem> meet_tab;
  std::vector<Elem> quot_tab;  // quot_tab[i][j] = (I_i : I_j)

  std::size_t size() const { return ideals.size(); }
  bool included(std::size_t i, std::size_t j) const {
    return leq[i * ideals.size() + j] != 0;
  }
  Elem sum_of(std::size_t i, std::size_t j) const {
    return sum_tab[i * ideals.size() + j];
  }
  Elem product_of(std::size_t i, std::size_t j) const {
    return prod_tab[i * ideals.size() + j];
  }
  Elem intersect_of(std::size_t i, std::size_t j) const {
    return meet_tab[i * ideals.size() + j];
  }
  Elem quotient_of(std::size_t i, std::size_t j) const {
    return quot_tab[i * ideals.size() + j];
  }
  /// Index of an ideal with the given member set; throws if absent.
  std::size_t index_of(const MemberSet& members) const;
};

/// Enumerates Id(R) as the closure of all principal ideals under pairwise
/// sum.  Throws DegenerateRingError for the order-1 ring and OrderCapError
/// if the ring order exceeds `order_cap`.  The lattice points at the ring,
/// so temporaries cannot bind.
IdealLattice all_ideals(const FiniteRing& r,
                        std::size_t order_cap = kDefaultRingOrderCap);
IdealLattice all_ideals(FiniteRing&&,
                        std::size_t order_cap = kDefaultRingOrderCap) = delete;

struct IdealClass {
  bool maximal = false;
  bool prime = false;
  bool minimal = false;
};

struct IdealCounts {
  std::size_t n_m = 0;  // maximal
  std::size_t n_p = 0;  // prime
  std::size_t n_i = 0;  // all ideals
};

IdealClass classify_ideal(const IdealLattice& lat, std::size_t idx);
IdealCounts ideal_counts(const IdealLattice& lat);
bool is_local(const IdealLattice& lat);
/// True iff every inclusion I ⊆ J is realized as I = J ⊗ K for some ideal K.
bool is_multiplication_ring(const IdealLattice& lat);

}  // namespace blring

#endif
