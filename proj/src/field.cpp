#include "bgd/field.hpp"

namespace bgd {

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field::Field(FieldCfg cfg) : cfg_(cfg) {
    if (cfg_.kind == FieldKind::prime_field && !is_prime(cfg_.p))
        throw std::invalid_argument("field modulus " + std::to_string(cfg_.p) + " is not prime");
    if (cfg_.kind == FieldKind::rationals) cfg_.p = 0;
}

Scalar Field::from_long(long v) const { return reduce(Scalar(v)); }

Scalar Field::reduce(const Scalar& v) const {
    if (cfg_.kind == FieldKind::rationals) {
        Scalar r = v;
        r.canonicalize();
        return r;
    }
    // F_p: clear the denominator with a modular inverse, then take the
    // least nonnegative residue.
    mpz_class p(cfg_.p);
    mpz_class num = v.get_num();
    mpz_class den = v.get_den();
    mpz_class dmod = den % p;
    if (dmod < 0) dmod += p;
    if (dmod == 0) throw std::domain_error("denominator divisible by field characteristic");
    if (dmod != 1) {
        mpz_class dinv;
        if (mpz_invert(dinv.get_mpz_t(), dmod.get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::domain_error("non-invertible denominator in F_p");
        num *= dinv;
    }
    mpz_class r = num % p;
    if (r < 0) r += p;
    return Scalar(r);
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a)) throw std::domain_error("division by zero");
    if (cfg_.kind == FieldKind::rationals) {
        Scalar r = 1 / a;
        r.canonicalize();
        return r;
    }
    Scalar c = reduce(a);
    mpz_class p(cfg_.p), r;
    if (mpz_invert(r.get_mpz_t(), c.get_num().get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::domain_error("non-invertible element in F_p");
    return Scalar(r);
}

std::string Field::str(const Scalar& v) const {
    Scalar c = reduce(v);
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Scalar Field::parse(const std::string& s) const {
    if (s.empty()) throw std::invalid_argument("empty field element");
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw std::invalid_argument("bad field element '" + s + "'");
    if (v.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    v.canonicalize();
    return reduce(v);
}

}  // namespace bgd
