#include "cantordim/numeric.hpp"

#include <cctype>
#include <cmath>
#include <utility>

#include "cantordim/errors.hpp"

namespace cantordim {

Rational pow2(long e) {
  Integer p = pow2_int(static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(p);
  Rational r(Integer(1), p);
  r.canonicalize();
  return r;
}

Integer pow2_int(unsigned long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
  return p;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return InputError("invalid rational literal '" + s + "'"); };
  if (s.empty()) throw bad();
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+' ||
          c == '.')) {
      throw bad();
    }
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    if (s.find('/') != std::string::npos || s.find('.', dot + 1) != std::string::npos) throw bad();
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") throw bad();
    Integer num;
    if (num.set_str(digits[0] == '+' ? digits.substr(1) : digits, 10) != 0) throw bad();
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  Rational q;
  if (q.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) throw bad();
  if (q.get_den() == 0) throw bad();
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

long floor_log2(const Rational& q) {
  if (sgn(q) <= 0) throw InputError("log2 of a nonpositive number");
  long e = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
  // 2^(e-1) < q < 2^(e+1); settle the exact value by comparison.
  while (pow2(e) > q) --e;
  while (pow2(e + 1) <= q) ++e;
  return e;
}

long ceil_log2(const Rational& q) {
  long f = floor_log2(q);
  return pow2(f) == q ? f : f + 1;
}

double log2_double(const Integer& z) {
  if (sgn(z) <= 0) return -INFINITY;
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp);
}

double to_double(const Rational& q) { return q.get_d(); }

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw InputError("interval with lo > hi");
}

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(Rational(a.lo + b.lo), Rational(a.hi + b.hi));
}

Interval operator*(const Interval& a, const Interval& b) {
  return Interval(Rational(a.lo * b.lo), Rational(a.hi * b.hi));
}

Interval min(const Interval& a, const Interval& b) {
  return Interval(a.lo < b.lo ? a.lo : b.lo, a.hi < b.hi ? a.hi : b.hi);
}

Interval max(const Interval& a, const Interval& b) {
  return Interval(a.lo > b.lo ? a.lo : b.lo, a.hi > b.hi ? a.hi : b.hi);
}

Interval scale(const Interval& a, const Rational& factor) {
  if (sgn(factor) < 0) return Interval(Rational(a.hi * factor), Rational(a.lo * factor));
  return Interval(Rational(a.lo * factor), Rational(a.hi * factor));
}

Interval root_interval(const Rational& x, unsigned long q, unsigned bits) {
  if (sgn(x) < 0) throw InputError("root of a negative number");
  if (q == 0) throw InputError("zeroth root");
  if (sgn(x) == 0) return Interval(Rational(0));
  if (q == 1) return Interval(x);
  // Scale so the root has at least `bits` significant binary digits.
  long lg = floor_log2(x);
  long shift = static_cast<long>(bits);
  if (lg < 0) shift += (-lg) / static_cast<long>(q) + 1;
  // Y = floor(x * 2^(q*shift)); a = floor(Y^(1/q)).
  Rational scaled = x * pow2(static_cast<long>(q) * shift);
  Integer y = floor(scaled);
  Integer a;
  int exact = mpz_root(a.get_mpz_t(), y.get_mpz_t(), q);
  Rational unit = pow2(-shift);
  Rational lo = Rational(a) * unit;
  if (exact != 0 && Rational(y) == scaled) return Interval(lo);
  Rational hi = Rational(a + 1) * unit;
  return Interval(lo, hi);
}

Interval pow2_interval(const Rational& e, unsigned bits) {
  Integer whole = floor(e);
  Rational frac = e - Rational(whole);
  Rational base = pow2(whole.get_si());
  if (sgn(frac) == 0) return Interval(base);
  // 2^(r/q) = (2^r)^(1/q)
  unsigned long r = frac.get_num().get_ui();
  unsigned long q = frac.get_den().get_ui();
  Interval root = root_interval(Rational(pow2_int(r)), q, bits);
  return scale(root, base);
}

Interval pow_interval(const Rational& x, const Rational& t, unsigned bits) {
  if (sgn(x) <= 0) throw InputError("pow of a nonpositive base");
  if (sgn(t) == 0) return Interval(Rational(1));
  long p = t.get_num().get_si();
  unsigned long q = t.get_den().get_ui();
  Rational xp(1);
  Rational base = p >= 0 ? x : Rational(1 / x);
  for (long i = 0; i < (p >= 0 ? p : -p); ++i) xp *= base;
  return root_interval(xp, q, bits);
}

}  // namespace cantordim
