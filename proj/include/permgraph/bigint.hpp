#ifndef PERMGRAPH_BIGINT_HPP
#define PERMGRAPH_BIGINT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace permgraph {

// All counts are exact; Big is the only integer type used for them.
using Big = mpz_class;
using Rat = mpq_class;

// Recoverable input/precondition problems (bad files, caps exceeded, ...).
// The CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A self-check failed: a construction post-condition did not hold, two
// independent computation routes disagreed, or a campaign found a
// counterexample. The CLI maps these to exit code 2.
class VerifyError : public std::runtime_error {
 public:
  explicit VerifyError(const std::string& what) : std::runtime_error(what) {}
};

inline Big big_pow(const Big& base, unsigned long exp) {
  Big r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Big big_pow(long base, unsigned long exp) { return big_pow(Big(base), exp); }

// C(n, k) with the usual convention C(n, k) = 0 for k < 0 or k > n.
inline Big binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  Big r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

// Smallest r >= 0 with r^k >= x (x >= 0, k >= 1).
inline Big ceil_kth_root(const Big& x, unsigned long k) {
  if (x < 0) throw DomainError("ceil_kth_root: negative argument");
  if (k == 0) throw DomainError("ceil_kth_root: zero index");
  Big r;
  int exact = mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
  if (!exact) r += 1;
  return r;
}

inline std::string big_str(const Big& x) { return x.get_str(); }

inline Big big_from_str(const std::string& s) {
  try {
    return Big(s);
  } catch (const std::invalid_argument&) {
    throw DomainError("not a decimal integer: '" + s + "'");
  }
}

// Parses "p/q" or "p"; rejects a zero denominator.
inline Rat rat_from_str(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw DomainError("not a rational: '" + s + "'");
  if (q.get_den() == 0) throw DomainError("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace permgraph

#endif
