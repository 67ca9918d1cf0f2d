#pragma once

// Plain-text file formats.
//
// group file:   group-table v
//               gens i j ...
//               [labels a b ...]
//               v rows of v indices (row a holds a*b), identity 0
// pc file:      pc n / order i o / pow i = WORD / comm j i = WORD
//               (1-based generators, WORD = fA*fB^2*... or 1, '#' comments)
// subset file:  one word per line, or a bracket list "[ w1, w2, ... ]",
//               or "subset-indices k" followed by k indices

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pdslab/group.hpp"
#include "pdslab/group_ring.hpp"
#include "pdslab/pc_presentation.hpp"

namespace pdslab {

/// Malformed input. Carries a line number when one applies.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string write_group_file(const FiniteGroup& g);
/// Throws FormatError for bad headers, dimensions, out-of-range entries and
/// non-Latin rows/columns (naming the row and column).
GroupPtr parse_group_file(std::string_view text, std::size_t max_order = kDefaultMaxOrder);

std::string write_pc_file(const PcPresentation& pc);
PcPresentation parse_pc_file(std::string_view text);

/// Either format, chosen by the first keyword.
GroupPtr parse_any_group_file(std::string_view text, std::size_t max_order = kDefaultMaxOrder);

/// Throws FormatError on unknown labels, bad indices and duplicates.
std::vector<Index> parse_subset(std::string_view text, const FiniteGroup& g,
                                WordOrder order = WordOrder::left_to_right);
std::string write_subset_words(const PdsCandidate& c);
std::string write_subset_indices(const PdsCandidate& c);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace pdslab
