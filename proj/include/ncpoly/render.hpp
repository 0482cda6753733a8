#pragma once

#include <string>

#include "ncpoly/monodromy.hpp"
#include "ncpoly/nc_lattice.hpp"

namespace ncpoly {

/// Subdivided rectangle: grid lines at the distinct critical-value
/// coordinates, critical values marked.
std::string svg_qprime(const Rectangle& rect, const NumericMultiset& cvl);

/// Chord diagram of a matching: 2d points on a circle, one chord per block.
std::string svg_chords(const NCMatching& m);

/// Schematic banyan: the left chain drawn as columns of merging blocks.
std::string svg_banyan(const NCChain& chain, const std::vector<double>& weights);

/// Schematic cactus: the stripped constellation drawn as a bouquet of cycles.
std::string svg_cactus(const std::vector<Permutation>& constellation);

}  // namespace ncpoly
