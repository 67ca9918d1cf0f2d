#pragma once

// The three explicit PDS constructions: the triangular graphs T_q for
// q = 3 mod 4, the two order-27 sets, and the Hermitian-quadrangle family
// with parameters godsil_params(q, r).

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pdslab/cayley_graph.hpp"
#include "pdslab/finite_field.hpp"
#include "pdslab/group.hpp"
#include "pdslab/group_ring.hpp"
#include "pdslab/hermitian.hpp"
#include "pdslab/srg_params.hpp"

namespace pdslab {

struct TriangularConstruction {
  std::int64_t q = 0;
  std::int64_t t = 0;
  FieldPtr field;
  FieldElem m;  // square of the least primitive element
  std::vector<std::pair<FieldElem, FieldElem>> vertices;  // 2-subsets, lexicographic by value
  std::vector<Permutation> sigma;  // translations by the GF(p)-basis 1, x, x^2, ...
  Permutation tau;                 // multiplication by m
  PermutationGroup group;          // generators sigma..., tau; labels are normal forms
  Graph graph;
  PdsExtraction pds;
  PdsCertificate certificate;
  SrgCheck srg;
};

/**
 * Builds the regular action of C_p^d x| C_t on the 2-subsets of GF(q) and
 * extracts the PDS at v0 = {0, 1}. Throws std::invalid_argument for even q,
 * non prime powers, and q = 1 mod 4 (reporting the orbit of {0, 1}), and
 * std::runtime_error if either oracle rejects the result.
 */
TriangularConstruction triangular_pds(std::int64_t q);

enum class Order27Variant { heisenberg, c9_semidirect };

struct Order27Construction {
  GroupPtr group;
  std::map<std::string, Index, std::less<>> alphabet;  // x, y (and z)
  std::vector<std::string> words;                      // the ten words of S
  PdsCandidate pds;
  PdsCertificate certificate;
  SrgCheck srg;
};

/// G1 = Heisenberg group of order 27 or G2 = C9 x|_4 C3 with their (27,10,1,5) sets.
Order27Construction order27_pds(Order27Variant which);

struct GodsilConstruction {
  std::int64_t q = 0;
  std::int64_t r = 0;
  HermitianGeometry geometry;
  FieldElem gamma;
  Matrix g;
  MatrixGroup unitary_sylow;
  std::vector<std::uint32_t> line_orbit;                    // line -> <g>-orbit id
  std::vector<std::vector<std::uint32_t>> orbits;           // orbit id -> lines
  std::vector<std::uint32_t> orbits_through_p0;
  std::vector<std::uint32_t> fixed_orbits_through_p0;       // fixed by the q^3-group
  std::uint32_t ell0 = 0;
  std::vector<std::uint32_t> vertices;                      // vertex -> orbit id
  Graph graph;
  PdsExtraction pds;
  GodsilParams expected;
  PdsCertificate certificate;
  SrgCheck srg;
  std::int64_t exponent = 0;
};

/**
 * Runs the whole pipeline for 1 < r < q+1, r | q+1, asserting each
 * structural fact along the way (std::runtime_error names the one that
 * fails). q is limited by the geometry cap.
 */
GodsilConstruction godsil_pds(std::int64_t q, std::int64_t r, std::int64_t cap = kDefaultGeometryCap);

}  // namespace pdslab
