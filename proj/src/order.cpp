#include "permgraph/order.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace permgraph {

Permutation::Permutation(std::vector<int> v) : vals(std::move(v)) {
  std::vector<bool> seen(vals.size() + 1, false);
  for (int x : vals) {
    if (x < 1 || x > size() || seen[static_cast<std::size_t>(x)])
      throw DomainError("not a permutation of 1.." + std::to_string(size()));
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(vals.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>(at(i) - 1)] = i;
  return Permutation(inv);
}

Permutation parse_permutation(const std::string& csv) {
  std::vector<int> v;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      v.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw DomainError("bad permutation entry '" + item + "'");
    }
  }
  if (v.empty()) throw DomainError("empty permutation");
  return Permutation(v);
}

std::string permutation_to_csv(const Permutation& p) {
  std::ostringstream out;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) out << ",";
    out << p.at(i);
  }
  return out.str();
}

WeakOrder::WeakOrder(std::vector<std::vector<int>> b) : blocks(std::move(b)) {
  int m = 0;
  for (auto& blk : blocks) {
    if (blk.empty()) throw DomainError("weak order with an empty block");
    std::sort(blk.begin(), blk.end());
    m += static_cast<int>(blk.size());
  }
  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  for (const auto& blk : blocks)
    for (int x : blk) {
      if (x < 1 || x > m || seen[static_cast<std::size_t>(x)])
        throw DomainError("weak order blocks must partition 1.." + std::to_string(m));
      seen[static_cast<std::size_t>(x)] = true;
    }
  if (blocks.empty()) throw DomainError("weak order needs at least one block");
}

int WeakOrder::ground_size() const {
  int m = 0;
  for (const auto& blk : blocks) m += static_cast<int>(blk.size());
  return m;
}

WeakOrder parse_weak_order(const std::string& text) {
  std::vector<std::vector<int>> blocks;
  std::istringstream in(text);
  std::string blk;
  while (std::getline(in, blk, '|')) {
    std::vector<int> b;
    std::istringstream bin(blk);
    std::string item;
    while (std::getline(bin, item, ',')) {
      try {
        b.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw DomainError("bad weak order entry '" + item + "'");
      }
    }
    blocks.push_back(std::move(b));
  }
  return WeakOrder(blocks);
}

std::string weak_order_to_string(const WeakOrder& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.blocks.size(); ++i) {
    if (i) out << "|";
    for (std::size_t j = 0; j < w.blocks[i].size(); ++j) {
      if (j) out << ",";
      out << w.blocks[i][j];
    }
  }
  return out.str();
}

WeakOrder induced_weak_order(const CountSequence& seq) {
  if (seq.values.empty()) throw DomainError("cannot induce a weak order from an empty sequence");
  std::map<Big, std::vector<int>> by_value;
  for (int k = 1; k <= seq.length(); ++k) by_value[seq.at(k)].push_back(k);
  std::vector<std::vector<int>> blocks;
  for (auto& [value, idxs] : by_value) blocks.push_back(std::move(idxs));
  return WeakOrder(blocks);
}

Big associated_count(const CountSequence& seq) {
  Big total = 1;
  for (const auto& blk : induced_weak_order(seq).blocks) {
    Big f;
    mpz_fac_ui(f.get_mpz_t(), blk.size());
    total *= f;
  }
  return total;
}

AssociatedPermutationStream::AssociatedPermutationStream(const CountSequence& seq) {
  for (const auto& blk : induced_weak_order(seq).blocks) start_.push_back(blk);
  reset();
}

void AssociatedPermutationStream::reset() {
  state_ = start_;
  exhausted_ = start_.empty();
  fresh_ = true;
}

std::optional<Permutation> AssociatedPermutationStream::next() {
  if (exhausted_) return std::nullopt;
  if (!fresh_) {
    // odometer over per-block permutations, last block fastest
    std::size_t i = state_.size();
    while (i > 0) {
      --i;
      if (std::next_permutation(state_[i].begin(), state_[i].end())) break;
      if (i == 0) {
        exhausted_ = true;
        return std::nullopt;
      }
    }
  }
  fresh_ = false;
  std::vector<int> flat;
  for (const auto& blk : state_) flat.insert(flat.end(), blk.begin(), blk.end());
  return Permutation(flat);
}

std::vector<Permutation> enumerate_associated(const CountSequence& seq, std::size_t limit,
                                              bool strict_limit) {
  AssociatedPermutationStream stream(seq);
  std::vector<Permutation> out;
  while (auto p = stream.next()) {
    if (out.size() == limit) {
      if (strict_limit)
        throw DomainError("associated permutation count exceeds limit " +
                          std::to_string(limit));
      break;
    }
    out.push_back(std::move(*p));
  }
  return out;
}

bool check_chain(const CountSequence& seq, const Permutation& pi, bool strict) {
  if (seq.length() != pi.size())
    throw DomainError("sequence length " + std::to_string(seq.length()) +
                      " != permutation size " + std::to_string(pi.size()));
  for (int i = 1; i < pi.size(); ++i) {
    const Big& a = seq.at(pi.at(i));
    const Big& b = seq.at(pi.at(i + 1));
    if (strict ? !(a < b) : !(a <= b)) return false;
  }
  return true;
}

UnimodalCheck is_unimodal_perm(const Permutation& pi) {
  int n = pi.size();
  if (n == 0) return {true, 0};
  int mode = pi.at(n);
  Permutation inv = pi.inverse();
  for (int v = 1; v + 1 <= mode - 1; ++v)
    if (inv.at(v) >= inv.at(v + 1)) return {false, mode};
  for (int v = n; v - 1 >= mode + 1; --v)
    if (inv.at(v) >= inv.at(v - 1)) return {false, mode};
  return {true, mode};
}

UnimodalPermutationStream::UnimodalPermutationStream(int n) : n_(n) {
  if (n < 1) throw DomainError("enumerate_unimodal: n must be >= 1");
  if (n > 63) throw DomainError("enumerate_unimodal: n too large to enumerate");
  total_ = std::uint64_t{1} << (n - 1);
}

std::optional<Permutation> UnimodalPermutationStream::next() {
  if (cursor_ >= total_) return std::nullopt;
  std::string ud(static_cast<std::size_t>(n_ - 1), 'U');
  for (int i = 0; i < n_ - 1; ++i)
    if (cursor_ >> i & 1) ud[static_cast<std::size_t>(i)] = 'D';
  ++cursor_;
  return ud_decode(ud);
}

Permutation ud_decode(const std::string& ud) {
  int n = static_cast<int>(ud.size()) + 1;
  int ups = 0;
  for (char c : ud) {
    if (c != 'U' && c != 'D') throw DomainError("U-D string may only contain 'U' and 'D'");
    if (c == 'U') ++ups;
  }
  int mode = ups + 1;
  std::vector<int> v;
  int low = 1, high = n;
  for (char c : ud) v.push_back(c == 'U' ? low++ : high--);
  v.push_back(mode);
  return Permutation(v);
}

std::string ud_encode(const Permutation& pi) {
  if (!is_unimodal_perm(pi).ok)
    throw DomainError("ud_encode: permutation is not unimodal");
  int n = pi.size();
  int mode = pi.at(n);
  std::string ud;
  for (int i = 1; i < n; ++i) ud.push_back(pi.at(i) < mode ? 'U' : 'D');
  return ud;
}

namespace {

// paths of `len` +-1 steps from 0 staying >= floor. heights[h] indexed by
// h - floor.
Big bounded_walk_count(long long len, long long floor) {
  if (len < 0) throw DomainError("negative string length");
  std::size_t width = static_cast<std::size_t>(len - floor) + 1;
  std::vector<Big> cur(width), next(width);
  cur[static_cast<std::size_t>(-floor)] = 1;
  for (long long step = 0; step < len; ++step) {
    std::fill(next.begin(), next.end(), Big(0));
    for (std::size_t h = 0; h < width; ++h) {
      if (cur[h] == 0) continue;
      if (h + 1 < width) next[h + 1] += cur[h];
      if (h > 0) next[h - 1] += cur[h];
    }
    std::swap(cur, next);
  }
  Big total = 0;
  for (const Big& x : cur) total += x;
  return total;
}

}  // namespace

Big admissible_count(long long len) { return bounded_walk_count(len, -2); }

Big admissible_count_brute(int len) {
  if (len < 0) throw DomainError("negative string length");
  if (len > 24) throw DomainError("admissible_count_brute: length over enumeration cap");
  Big total = 0;
  std::uint64_t strings = std::uint64_t{1} << len;
  for (std::uint64_t s = 0; s < strings; ++s) {
    int height = 0;
    bool ok = true;
    for (int i = 0; i < len; ++i) {
      height += (s >> i & 1) ? -1 : 1;
      if (height <= -3) {
        ok = false;
        break;
      }
    }
    if (ok) total += 1;
  }
  return total;
}

Big admissible_count_closed(long long len) {
  if (len < 0) throw DomainError("negative string length");
  if (len == 0) return 1;
  if (len % 2 == 0) return 2 * admissible_count_closed(len - 1);
  long long n = len + 1;  // even
  Big numer = Big(static_cast<long>(3 * (n / 2) + 1)) *
              binomial(static_cast<long>(n + 1), static_cast<long>(n / 2 + 1));
  Big denom = static_cast<long>(2 * n + 2);
  if (numer % denom != 0)
    throw VerifyError("admissible closed form did not divide evenly at length " +
                      std::to_string(len));
  return numer / denom;
}

Big dyck_left_factor_count(long long len) {
  Big dp = bounded_walk_count(len, 0);
  Big formula = binomial(len, len / 2);
  if (dp != formula)
    throw VerifyError("dyck left-factor DP disagrees with binomial formula at length " +
                      std::to_string(len));
  return dp;
}

MnBounds mn_upper_bounds(int n) {
  if (n < 1) throw DomainError("mn_upper_bounds: n must be >= 1");
  MnBounds b{0, 0, 0};
  for (long long k = std::max(0LL, static_cast<long long>(n / 2) - 1); k <= n - 1; ++k)
    b.mode_sum += binomial(n - 1, k);
  b.admissible = admissible_count(n - 1);
  b.dyck = dyck_left_factor_count(n + 1);
  return b;
}

std::vector<std::pair<int, int>> theorem32_check(const CountSequence& seq, int n) {
  if (n > seq.length())
    throw DomainError("theorem32_check: n exceeds sequence length");
  std::vector<std::pair<int, int>> violations;
  for (int k = 0; k <= n / 2 - 1; ++k)
    for (int l = k + 1; l < n - k; ++l)
      if (seq.at(k) >= seq.at(l)) violations.emplace_back(k, l);
  return violations;
}

namespace {

template <typename T>
bool strongly_unimodal_impl(const std::vector<T>& v) {
  std::size_t len = v.size();
  if (len <= 1) return true;
  std::size_t t = 0;  // longest strictly increasing prefix ends at index t
  while (t + 1 < len && v[t] < v[t + 1]) ++t;
  // v[t] >= v[t+1] is the one non-strict step allowed, at the mode only
  for (std::size_t j = t + 1; j + 1 < len; ++j)
    if (!(v[j] > v[j + 1])) return false;
  return true;
}

}  // namespace

bool schwenk_check(const CountSequence& seq) { return strongly_unimodal_impl(seq.values); }

bool strongly_unimodal(const std::vector<Rat>& vals) { return strongly_unimodal_impl(vals); }

std::vector<Rat> esp_coefficients(const std::vector<Rat>& roots) {
  for (const Rat& r : roots)
    if (r < 0) throw DomainError("esp_coefficients: negative root");
  std::vector<Rat> poly{Rat(1)};
  for (const Rat& r : roots) {
    std::vector<Rat> next(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + 1] += poly[i] * r;
    }
    poly = std::move(next);
  }
  return {poly.begin() + 1, poly.end()};
}

std::vector<WeakOrder> enumerate_weak_orders(int m) {
  if (m < 1) throw DomainError("enumerate_weak_orders: m must be >= 1");
  std::vector<WeakOrder> out;
  std::vector<std::vector<int>> blocks;
  // place elements 1..m one at a time: into an existing block, or a new
  // block inserted at any position
  auto rec = [&](auto&& self, int next) -> void {
    if (next > m) {
      out.emplace_back(blocks);
      return;
    }
    // index-based: deeper calls grow and shrink `blocks` around each return
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      blocks[i].push_back(next);
      self(self, next + 1);
      blocks[i].pop_back();
    }
    for (std::size_t pos = 0; pos <= blocks.size(); ++pos) {
      blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(pos), {next});
      self(self, next + 1);
      blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(pos));
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(),
            [](const WeakOrder& a, const WeakOrder& b) { return a.blocks < b.blocks; });
  return out;
}

}  // namespace permgraph
