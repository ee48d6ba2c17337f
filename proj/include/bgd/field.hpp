#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bgd {

/// Exact field element. For the rational field this is an arbitrary-precision
/// fraction in lowest terms; for F_p it is a residue with denominator 1.
using Scalar = mpq_class;

enum class FieldKind { rationals, prime_field };

struct FieldCfg {
    FieldKind kind = FieldKind::rationals;
    unsigned long p = 0;  // modulus, prime_field only
};

/// Scalar arithmetic over Q or F_p. Every operation returns a canonical
/// representative (lowest terms / residue in 0..p-1), so scalar equality is
/// plain value equality and all downstream matrix comparisons are exact.
class Field {
public:
    Field() = default;
    explicit Field(FieldCfg cfg);

    static Field rationals() { return Field(FieldCfg{FieldKind::rationals, 0}); }
    static Field prime(unsigned long p) { return Field(FieldCfg{FieldKind::prime_field, p}); }

    const FieldCfg& cfg() const { return cfg_; }
    bool is_prime_field() const { return cfg_.kind == FieldKind::prime_field; }
    unsigned long modulus() const { return cfg_.p; }

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }
    Scalar from_long(long v) const;

    /// Canonical representative of an arbitrary exact value.
    Scalar reduce(const Scalar& v) const;

    // rational arithmetic is already canonical, so only F_p pays for the
    // residue normalization
    Scalar add(const Scalar& a, const Scalar& b) const {
        return cfg_.kind == FieldKind::rationals ? a + b : reduce(a + b);
    }
    Scalar sub(const Scalar& a, const Scalar& b) const {
        return cfg_.kind == FieldKind::rationals ? a - b : reduce(a - b);
    }
    Scalar mul(const Scalar& a, const Scalar& b) const {
        return cfg_.kind == FieldKind::rationals ? a * b : reduce(a * b);
    }
    Scalar neg(const Scalar& a) const {
        return cfg_.kind == FieldKind::rationals ? -a : reduce(-a);
    }
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    /// In-place a -= b * c and a += b * c through a reused scratch value,
    /// avoiding per-operation allocation; the workhorses of the echelon and
    /// accumulation loops.
    void submul(Scalar& a, const Scalar& b, const Scalar& c) const {
        static thread_local Scalar scratch;
        mpq_mul(scratch.get_mpq_t(), b.get_mpq_t(), c.get_mpq_t());
        mpq_sub(a.get_mpq_t(), a.get_mpq_t(), scratch.get_mpq_t());
        if (cfg_.kind != FieldKind::rationals) a = reduce(a);
    }
    void addmul(Scalar& a, const Scalar& b, const Scalar& c) const {
        static thread_local Scalar scratch;
        mpq_mul(scratch.get_mpq_t(), b.get_mpq_t(), c.get_mpq_t());
        mpq_add(a.get_mpq_t(), a.get_mpq_t(), scratch.get_mpq_t());
        if (cfg_.kind != FieldKind::rationals) a = reduce(a);
    }

    static bool is_zero(const Scalar& a) { return sgn(a) == 0; }

    /// Serialized form: "p/q" in lowest terms (plain "p" when q = 1) for the
    /// rationals, a bare integer 0..p-1 for F_p.
    std::string str(const Scalar& v) const;
    Scalar parse(const std::string& s) const;

    bool operator==(const Field& o) const {
        return cfg_.kind == o.cfg_.kind && cfg_.p == o.cfg_.p;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

private:
    FieldCfg cfg_{};
};

bool is_prime(unsigned long n);

}  // namespace bgd
