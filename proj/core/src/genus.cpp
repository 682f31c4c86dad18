#include "capitula/genus.hpp"

#include <stdexcept>

#include "capitula/gaussian.hpp"

namespace capitula {

PrimeTriple make_triple(const Integer& p1, const Integer& p2, const Integer& q) {
  auto fail = [](const std::string& msg) {
    throw std::invalid_argument("make_triple: " + msg);
  };
  if (!is_prime(p1)) fail("p1 is not prime");
  if (!is_prime(p2)) fail("p2 is not prime");
  if (!is_prime(q)) fail("q is not prime");
  if (mpz_fdiv_ui(p1.get_mpz_t(), 4) != 1) fail("p1 must be 1 mod 4");
  if (mpz_fdiv_ui(p2.get_mpz_t(), 4) != 1) fail("p2 must be 1 mod 4");
  if (mpz_fdiv_ui(q.get_mpz_t(), 4) != 3) fail("q must be 3 mod 4");
  if (p1 == p2 || p1 == q || p2 == q) fail("primes must be distinct");

  PrimeTriple t;
  t.p1 = p1;
  t.p2 = p2;
  t.q = q;
  t.d = p1 * p2 * q;
  const GaussianInt pi1 = canonical_prime_over(p1);
  const GaussianInt pi3 = canonical_prime_over(p2);
  t.e = pi1.re;
  t.f = pi1.im / 2;
  t.g = pi3.re;
  t.h = pi3.im / 2;
  return t;
}

bool i_is_norm(const PrimeTriple& t) {
  return mpz_fdiv_ui(t.p1.get_mpz_t(), 8) == 1 &&
         mpz_fdiv_ui(t.p2.get_mpz_t(), 8) == 1;
}

GenusReport genus_report(const PrimeTriple& t, DPattern pattern) {
  GenusReport rep;
  rep.i_norm = i_is_norm(t);
  rep.e_exp = rep.i_norm ? 0 : 1;
  rep.r = rep.t - rep.e_exp - 1;
  rep.am_order = 1u << rep.r;

  const ClassWord H1 = ClassWord::H(1), H2 = ClassWord::H(2),
                  H3 = ClassWord::H(3), H4 = ClassWord::H(4);

  if (pattern == DPattern::OneD) {
    if (!rep.i_norm)
      throw std::domain_error(
          "genus_report: pattern {1,d} requires p1 = p2 = 1 mod 8");
    rep.ams_order = rep.am_order;
    rep.ams_generators = {{H1, H2, H3, H4}};
    rep.am_generators = rep.ams_generators;
  } else {
    rep.ams_order = rep.i_norm ? rep.am_order / 2 : rep.am_order;
    rep.ams_generators = {{H1, H2, H3}, {H1, H3, H4}};
    if (rep.i_norm) {
      // An unambiguous ideal I of order 2 extends Am_s to Am.
      const ClassWord I = ClassWord::ideal_I();
      rep.am_generators = {{H1, H2, H3, I}, {H1, H3, H4, I}};
    } else {
      rep.am_generators = rep.ams_generators;
    }
  }

  const RelationSet rel = relations_for(pattern);
  rep.model_degenerate = true;
  for (const WordList& alt : rep.ams_generators)
    if (span_order(alt, rel) == rep.ams_order) rep.model_degenerate = false;
  return rep;
}

GenusReport genus_report(const PrimeTriple& t, const SquareClassPair& scp_d) {
  return genus_report(t, classify_d_pattern(scp_d, t.p1, t.p2, t.q));
}

}  // namespace capitula
