#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "syt/errors.hpp"

namespace syt {

// Arbitrary-precision integer and rational. All counting and probability
// values in this library are exact; doubles appear only in fields whose
// name carries an `_approx` suffix.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
  Rat r;
  mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
  return r;
}

// min/max materializing GMP expression templates
inline Rat rat_min(Rat a, Rat b) { return a < b ? a : b; }
inline Rat rat_max(Rat a, Rat b) { return a < b ? b : a; }

// Exact integer quotient; the divisibility assertion guards against
// implementation bugs in product formulas that must yield integers.
inline Int exact_div(const Int& num, const Int& den, const char* what) {
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) fail(errc::non_integer_result, std::string(what) + ": division is not exact");
  return q;
}

inline Int rat_to_int(const Rat& q, const char* what) {
  return exact_div(q.get_num(), q.get_den(), what);
}

inline Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

// Serialized form: "num" when integral, "num/den" otherwise.
inline std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat parse_rat(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) fail(errc::malformed_syntax, "bad rational: " + s);
  q.canonicalize();
  return q;
}

// Elements a + b*sqrt(root) of a real quadratic extension, enough for the
// exact comparisons against sqrt(n) and sqrt(2) thresholds used by the
// block-decomposition estimates. root >= 0.
struct Surd {
  Rat a;
  Rat b;
  Int root;

  static Surd of(const Rat& a, const Int& root) { return Surd{a, Rat(0), root}; }
  static Surd sqrt(const Int& root) { return Surd{Rat(0), Rat(1), root}; }

  Surd operator+(const Surd& o) const { return {a + o.a, b + o.b, root}; }
  Surd operator+(const Rat& r) const { return {a + r, b, root}; }
  Surd operator*(const Rat& r) const { return {a * r, b * r, root}; }
  Surd operator*(const Surd& o) const {
    return {a * o.a + b * o.b * Rat(root), a * o.b + b * o.a, root};
  }

  // sign of a + b*sqrt(root)
  int sign() const {
    int sa = sgn(a), sb = sgn(b);
    if (root == 0 || sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 against b^2*root
    Rat lhs = a * a, rhs = b * b * Rat(root);
    int c = cmp(lhs, rhs);
    if (c == 0) return 0;
    return (c > 0) ? sa : sb;
  }

  bool operator<=(const Surd& o) const { return ((*this) - o).sign() <= 0; }
  bool operator<(const Surd& o) const { return ((*this) - o).sign() < 0; }
  Surd operator-(const Surd& o) const { return {a - o.a, b - o.b, root}; }
};

inline bool rat_le_surd(const Rat& r, const Surd& s) { return (s - Surd::of(r, s.root)).sign() >= 0; }
inline bool surd_le_rat(const Surd& s, const Rat& r) { return (Surd::of(r, s.root) - s).sign() >= 0; }

}  // namespace syt
