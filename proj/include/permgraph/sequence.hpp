#ifndef PERMGRAPH_SEQUENCE_HPP
#define PERMGRAPH_SEQUENCE_HPP

#include <string>
#include <vector>

#include "permgraph/bigint.hpp"

namespace permgraph {

enum class SeqKind { independent, matching };

// A 1-indexed sequence of nonnegative counts (i_k) or (m_k). Index 0 is never
// stored: the count of the empty set is 1 for every graph. The length is
// exactly alpha(G) resp. nu(G), so the last stored entry is positive.
struct CountSequence {
  SeqKind kind = SeqKind::independent;
  std::vector<Big> values;  // values[k-1] is the count at size k

  int length() const { return static_cast<int>(values.size()); }

  // at(0) == 1; at(k) for k past the end is 0.
  Big at(int k) const {
    if (k == 0) return 1;
    if (k < 0 || k > length()) return 0;
    return values[static_cast<std::size_t>(k - 1)];
  }

  bool operator==(const CountSequence& o) const { return values == o.values; }
};

// Builds a sequence from the coefficient list of a counting polynomial
// (poly[k] = count at size k, poly[0] = 1): drops index 0, trims trailing
// zeros so the length is the top nonzero size.
CountSequence sequence_from_poly(SeqKind kind, const std::vector<Big>& poly);

// "4,6,4,1" -> sequence (values must be nonnegative decimal integers).
CountSequence parse_sequence(SeqKind kind, const std::string& csv);

std::string sequence_to_csv(const CountSequence& s);

}  // namespace permgraph

#endif
