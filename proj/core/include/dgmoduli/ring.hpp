#pragma once

#include <string>

#include "dgmoduli/error.hpp"

namespace dgm {

/// Deterministic primality test, valid for all n < 3.3e14.
bool is_prime(long n);

enum class RingKind { Fp, Q, Z };

/// Coefficient ring of a matrix: a prime field F_p, the rationals, or the
/// integers.  The field cases form the FieldSpec of algebras and modules.
struct Ring {
    RingKind kind = RingKind::Q;
    long p = 0;  // modulus, meaningful only for Fp

    static Ring fp(long p) {
        if (p < 2 || !is_prime(p))
            throw InputError("F_p modulus must be prime, got " + std::to_string(p));
        return Ring{RingKind::Fp, p};
    }
    static Ring rationals() { return Ring{RingKind::Q, 0}; }
    static Ring integers() { return Ring{RingKind::Z, 0}; }

    bool is_field() const { return kind != RingKind::Z; }
    bool operator==(const Ring& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    std::string str() const {
        switch (kind) {
            case RingKind::Fp: return "F" + std::to_string(p);
            case RingKind::Q: return "Q";
            default: return "Z";
        }
    }
};

inline void require_same_ring(const Ring& a, const Ring& b, const char* where) {
    if (a != b)
        throw InputError(std::string(where) + ": coefficient mismatch (" + a.str() + " vs " + b.str() + ")");
}

}  // namespace dgm
