#ifndef BLRING_RENDER_HPP
#define BLRING_RENDER_HPP

#include <string>
#include <utility>
#include <vector>

#include "blring/ideals.hpp"
#include "blring/resalg.hpp"

namespace blring {

/// → and ⊗ tables side by side with label headers; byte-deterministic.
/// `labels` overrides the algebra's own labels when non-empty.
std::string render_tables(const ResLat& l,
                          const std::vector<std::string>& labels = {});

/// Addition and multiplication Cayley tables of a ring, aligned, with
/// row/column headers.
std::string render_cayley(const FiniteRing& r);

/// Covering-pair edges (i covered-by j) of a leq relation.
std::vector<std::pair<Elem, Elem>> hasse_edges(std::size_t size,
                                               const std::vector<std::uint8_t>& leq);

/// Member lists, Hasse edges and the inclusion matrix of an ideal lattice.
std::string render_ideal_lattice(const IdealLattice& lat);

/// Default display labels for an ideal lattice: 0/I/J/R for up to four
/// ideals, 0/I1/../R otherwise.
std::vector<std::string> ideal_lattice_labels(std::size_t n);

}  // namespace blring

#endif
