#include "dgmoduli/poly.hpp"

#include <algorithm>

#include "dgmoduli/error.hpp"
#include "dgmoduli/matrix.hpp"

namespace dgm {

namespace {

mpq_class fnorm(const Ring& r, const mpq_class& v) {
    if (r.kind != RingKind::Fp) return v;
    mpz_class p(r.p);
    if (v.get_den() == 1) {
        mpz_class x = v.get_num() % p;
        if (x < 0) x += p;
        return mpq_class(x);
    }
    mpz_class num = v.get_num() % p, den = v.get_den() % p, inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        throw InputError("denominator not invertible mod p");
    mpz_class x = (num * inv) % p;
    if (x < 0) x += p;
    return mpq_class(x);
}

Poly trim(Poly a) {
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
    return a;
}

}  // namespace

Poly p_make(const Ring& ring, std::vector<mpq_class> coeffs) {
    Poly p{ring, std::move(coeffs)};
    for (auto& v : p.c) v = fnorm(ring, v);
    return trim(std::move(p));
}

Poly p_zero(const Ring& ring) { return Poly{ring, {}}; }
Poly p_const(const Ring& ring, const mpq_class& v) { return p_make(ring, {v}); }
Poly p_x_minus(const Ring& ring, const mpq_class& c) { return p_make(ring, {-c, 1}); }

Poly p_add(const Poly& a, const Poly& b) {
    std::vector<mpq_class> c(std::max(a.c.size(), b.c.size()), mpq_class(0));
    for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
    return p_make(a.ring, std::move(c));
}

Poly p_sub(const Poly& a, const Poly& b) {
    std::vector<mpq_class> c(std::max(a.c.size(), b.c.size()), mpq_class(0));
    for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
    return p_make(a.ring, std::move(c));
}

Poly p_mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return p_zero(a.ring);
    std::vector<mpq_class> c(a.c.size() + b.c.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
    }
    return p_make(a.ring, std::move(c));
}

Poly p_scale(const Poly& a, const mpq_class& s) {
    std::vector<mpq_class> c = a.c;
    for (auto& v : c) v *= s;
    return p_make(a.ring, std::move(c));
}

Poly p_monic(const Poly& a) {
    if (a.is_zero()) return a;
    return p_scale(a, field_inv(a.ring, a.lead()));
}

std::pair<Poly, Poly> p_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw InputError("polynomial division by zero");
    Poly r = a, q = p_zero(a.ring);
    q.c.assign(a.c.size(), mpq_class(0));
    const mpq_class lead_inv = field_inv(a.ring, b.lead());
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int shift = r.deg() - b.deg();
        mpq_class f = fnorm(a.ring, r.c.back() * lead_inv);
        q.c[shift] = f;
        for (int i = 0; i <= b.deg(); ++i)
            r.c[shift + i] = fnorm(a.ring, r.c[shift + i] - f * b.c[i]);
        r = trim(std::move(r));
    }
    return {trim(std::move(q)), r};
}

Poly p_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = p_divmod(x, y).second;
        x = y;
        y = r;
    }
    return p_monic(x);
}

XgcdResult p_xgcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly s0 = p_const(a.ring, 1), s1 = p_zero(a.ring);
    Poly t0 = p_zero(a.ring), t1 = p_const(a.ring, 1);
    while (!r1.is_zero()) {
        auto [q, r] = p_divmod(r0, r1);
        r0 = r1;
        r1 = r;
        Poly s = p_sub(s0, p_mul(q, s1));
        s0 = s1;
        s1 = s;
        Poly t = p_sub(t0, p_mul(q, t1));
        t0 = t1;
        t1 = t;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    mpq_class inv = field_inv(a.ring, r0.lead());
    return {p_scale(r0, inv), p_scale(s0, inv), p_scale(t0, inv)};
}

mpq_class p_eval(const Poly& a, const mpq_class& x) {
    mpq_class v = 0;
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) v = fnorm(a.ring, v * x + *it);
    return v;
}

Poly p_powmod(const Poly& base, const mpz_class& e, const Poly& m) {
    Poly acc = p_const(base.ring, 1);
    Poly b = p_divmod(base, m).second;
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = p_divmod(p_mul(acc, b), m).second;
        b = p_divmod(p_mul(b, b), m).second;
        k >>= 1;
    }
    return acc;
}

namespace {

void split_roots_rec(const Poly& m, std::vector<mpq_class>& out, unsigned long& state) {
    if (m.deg() <= 0) return;
    const long p = m.ring.p;
    if (m.deg() == 1) {
        // t + c0 (monic): root = -c0
        out.push_back(fnorm(m.ring, -m.c[0]));
        return;
    }
    // random splitting via gcd(m, (t+a)^((p-1)/2) - 1); p is odd and large here
    for (int attempt = 0; attempt < 128; ++attempt) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        mpq_class a(static_cast<long>(state % static_cast<unsigned long>(p)));
        Poly shifted = p_make(m.ring, {a, 1});
        Poly pw = p_powmod(shifted, mpz_class((p - 1) / 2), m);
        Poly g = p_gcd(p_sub(pw, p_const(m.ring, 1)), m);
        if (g.deg() > 0 && g.deg() < m.deg()) {
            split_roots_rec(g, out, state);
            split_roots_rec(p_divmod(m, g).first, out, state);
            return;
        }
    }
    throw UndeterminedError("random root splitting failed to converge");
}

}  // namespace

std::vector<mpq_class> split_roots_fp(const Poly& m) {
    if (m.ring.kind != RingKind::Fp) throw InputError("split_roots_fp needs F_p");
    std::vector<mpq_class> roots;
    if (m.deg() <= 0) return roots;
    const long p = m.ring.p;
    if (p <= 4096) {
        for (long c = 0; c < p; ++c)
            if (p_eval(m, mpq_class(c)) == 0) roots.push_back(mpq_class(c));
        return roots;
    }
    unsigned long state = 0x9e3779b97f4a7c15ULL ^ static_cast<unsigned long>(p);
    split_roots_rec(p_monic(m), roots, state);
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<mpq_class> field_roots(const Poly& m) {
    if (m.is_zero()) throw InputError("roots of the zero polynomial");
    if (m.ring.kind == RingKind::Fp) {
        // roots of m = roots of gcd(m, t^p - t), which splits and is squarefree
        Poly t = p_make(m.ring, {0, 1});
        Poly frob = p_powmod(t, mpz_class(m.ring.p), m);
        Poly g = p_gcd(p_sub(frob, t), m);
        return split_roots_fp(g);
    }
    // Q: rational root extraction on the scaled integer polynomial
    std::vector<mpq_class> roots;
    Poly w = p_monic(m);
    mpz_class den_lcm = 1;
    for (const auto& v : w.c) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    // candidates a/b: a | c0*L, b | lead*L; desk-scale values keep this cheap
    bool progress = true;
    while (progress && w.deg() >= 1) {
        progress = false;
        // constant root
        if (w.c[0] == 0) {
            roots.push_back(0);
            w = p_divmod(w, p_make(w.ring, {0, 1})).first;
            progress = true;
            continue;
        }
        mpz_class L = 1;
        for (const auto& v : w.c) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), v.get_den().get_mpz_t());
        mpz_class a0 = w.c[0].get_num() * (L / w.c[0].get_den());
        mpz_class an = w.c.back().get_num() * (L / w.c.back().get_den());
        a0 = abs(a0);
        an = abs(an);
        auto divisors = [](const mpz_class& n) {
            std::vector<mpz_class> ds;
            if (n > 1000000000) return ds;  // beyond desk scale; handled by caller
            long nn = n.get_si();
            for (long d = 1; static_cast<long long>(d) * d <= nn; ++d)
                if (nn % d == 0) {
                    ds.push_back(d);
                    if (d != nn / d) ds.push_back(nn / d);
                }
            return ds;
        };
        std::vector<mpz_class> num_divs = divisors(a0), den_divs = divisors(an);
        if (num_divs.empty() || den_divs.empty())
            throw UndeterminedError("rational root search out of range");
        for (const auto& a : num_divs) {
            for (const auto& b : den_divs) {
                for (int sign = 0; sign < 2 && !progress; ++sign) {
                    mpq_class r(sign ? -a : a, b);
                    r.canonicalize();
                    if (p_eval(w, r) == 0) {
                        roots.push_back(r);
                        w = p_divmod(w, p_x_minus(w.ring, r)).first;
                        progress = true;
                    }
                }
                if (progress) break;
            }
            if (progress) break;
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace dgm
