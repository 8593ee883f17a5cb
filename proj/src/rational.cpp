#include "wrlat/rational.hpp"

#include <cctype>

#include "wrlat/errors.hpp"

namespace wrlat {

Rat make_rat(Int num, Int den) {
  if (den == 0) throw ParseError("rational with zero denominator");
  Rat r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& s) {
  // Accepted: [-]digits or [-]digits/digits.  No whitespace, no floats.
  auto is_digits = [](const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string body = s;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body = body.substr(1);
  }
  std::string num = body, den = "1";
  if (auto slash = body.find('/'); slash != std::string::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!is_digits(num) || !is_digits(den))
    throw ParseError("malformed rational '" + s + "'");
  Rat r = make_rat(Int(num), Int(den));
  return negative ? Rat(-r) : r;
}

std::string to_string(const Rat& x) { return x.get_str(); }

std::string to_string(const Int& x) { return x.get_str(); }

Int floor_rat(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Int ceil_rat(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Int isqrt_floor(const Int& x) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

Int floor_sqrt_plus(const Rat& r, const Rat& t) {
  // sqrt(p/q) = sqrt(p*q)/q, so with g = floor(sqrt(p*q)) we have
  // g/q <= sqrt(r) < (g+1)/q: the answer is floor(g/q + t) or one more.
  const Int& p = r.get_num();
  const Int& q = r.get_den();
  Int g = isqrt_floor(p * q);
  Int m = floor_rat(make_rat(g, q) + t);
  // m+1 is the answer iff m+1 <= sqrt(r) + t, i.e. (m+1-t) <= sqrt(r).
  Rat x = Rat(m + 1) - t;
  if (x <= 0 || x * x <= r) return m + 1;
  return m;
}

Int ceil_minus_sqrt_plus(const Rat& r, const Rat& t) {
  // ceil(t - sqrt(r)) = -floor(sqrt(r) - t)
  return -floor_sqrt_plus(r, -t);
}

}  // namespace wrlat
