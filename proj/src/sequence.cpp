#include "permgraph/sequence.hpp"

#include <sstream>

namespace permgraph {

CountSequence sequence_from_poly(SeqKind kind, const std::vector<Big>& poly) {
  CountSequence s;
  s.kind = kind;
  std::size_t top = poly.size();
  while (top > 1 && poly[top - 1] == 0) --top;
  for (std::size_t k = 1; k < top; ++k) s.values.push_back(poly[k]);
  return s;
}

CountSequence parse_sequence(SeqKind kind, const std::string& csv) {
  CountSequence s;
  s.kind = kind;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t a = item.find_first_not_of(" \t");
    std::size_t b = item.find_last_not_of(" \t");
    if (a == std::string::npos) throw DomainError("empty entry in sequence '" + csv + "'");
    Big v = big_from_str(item.substr(a, b - a + 1));
    if (v < 0) throw DomainError("negative count in sequence '" + csv + "'");
    s.values.push_back(v);
  }
  if (s.values.empty()) throw DomainError("empty sequence");
  return s;
}

std::string sequence_to_csv(const CountSequence& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    if (i) out << ",";
    out << s.values[i].get_str();
  }
  return out.str();
}

}  // namespace permgraph
