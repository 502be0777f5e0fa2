#pragma once

#include <gmpxx.h>

#include <vector>

#include "dgmoduli/ring.hpp"

namespace dgm {

/// Dense univariate polynomial over a field ring (F_p or Q), little-endian
/// coefficients, always trimmed.
struct Poly {
    Ring ring;
    std::vector<mpq_class> c;

    int deg() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c.empty(); }
    mpq_class lead() const { return c.back(); }
};

Poly p_make(const Ring& ring, std::vector<mpq_class> coeffs);
Poly p_zero(const Ring& ring);
Poly p_const(const Ring& ring, const mpq_class& v);
Poly p_x_minus(const Ring& ring, const mpq_class& c);  // t - c

Poly p_add(const Poly& a, const Poly& b);
Poly p_sub(const Poly& a, const Poly& b);
Poly p_mul(const Poly& a, const Poly& b);
Poly p_scale(const Poly& a, const mpq_class& s);
Poly p_monic(const Poly& a);
/// Quotient and remainder.
std::pair<Poly, Poly> p_divmod(const Poly& a, const Poly& b);
Poly p_gcd(const Poly& a, const Poly& b);  // monic
/// g = gcd(a,b) together with u,v such that u a + v b = g.
struct XgcdResult {
    Poly g, u, v;
};
XgcdResult p_xgcd(const Poly& a, const Poly& b);
mpq_class p_eval(const Poly& a, const mpq_class& x);
/// base^e mod m.
Poly p_powmod(const Poly& base, const mpz_class& e, const Poly& m);

/// All roots in F_p of a polynomial that splits into distinct linear factors
/// (callers pass gcd(m, t^p - t) to guarantee this).
std::vector<mpq_class> split_roots_fp(const Poly& m);

/// Roots of m over the ring: F_p via split part of m, Q via rational root
/// extraction.  Returns distinct roots only.
std::vector<mpq_class> field_roots(const Poly& m);

}  // namespace dgm
