#include "curvesing/field.hpp"

#include <stdexcept>

namespace curvesing {

std::string to_string(const Rational& r) { return r.get_str(); }

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime(p))
        throw std::invalid_argument("field modulus " + std::to_string(p) + " is not a supported prime");
    return Field(p);
}

std::string Field::to_string() const {
    return is_rational() ? std::string("Q") : "F_" + std::to_string(p_);
}

FieldElem::FieldElem(Field f, long long n) {
    if (f.is_rational()) {
        v_ = Rational(static_cast<long>(n));
    } else {
        const long long p = f.characteristic();
        long long r = n % p;
        if (r < 0) r += p;
        v_ = Residue{static_cast<std::uint32_t>(r), f.characteristic()};
    }
}

FieldElem::FieldElem(Field f, const Rational& r) {
    if (f.is_rational()) {
        v_ = r;
        v_canonicalize();
    } else {
        *this = reduce_rational(r, f.characteristic());
    }
}

FieldElem::FieldElem(Residue r) : v_(r) {
    if (r.value >= r.modulus) throw std::invalid_argument("residue out of range");
}

void FieldElem::v_canonicalize() {
    if (auto* q = std::get_if<Rational>(&v_)) q->canonicalize();
}

Field FieldElem::field() const {
    if (auto* r = std::get_if<Residue>(&v_)) return Field(r->modulus);
    return Field::rationals();
}

bool FieldElem::is_zero() const {
    if (auto* r = std::get_if<Residue>(&v_)) return r->value == 0;
    return sgn(std::get<Rational>(v_)) == 0;
}

bool FieldElem::is_one() const {
    if (auto* r = std::get_if<Residue>(&v_)) return r->value == 1;
    return std::get<Rational>(v_) == 1;
}

const Rational& FieldElem::rational() const {
    if (auto* q = std::get_if<Rational>(&v_)) return *q;
    throw FieldMismatch("rational() on an F_p element");
}

std::uint32_t FieldElem::residue() const {
    if (auto* r = std::get_if<Residue>(&v_)) return r->value;
    throw FieldMismatch("residue() on a rational element");
}

void FieldElem::check_same(const FieldElem& o) const {
    const auto* a = std::get_if<Residue>(&v_);
    const auto* b = std::get_if<Residue>(&o.v_);
    if ((a == nullptr) != (b == nullptr) || (a && a->modulus != b->modulus))
        throw FieldMismatch("arithmetic between " + field().to_string() + " and " +
                            o.field().to_string());
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    if (auto* x = std::get_if<Residue>(&r.v_)) {
        if (x->value != 0) x->value = x->modulus - x->value;
    } else {
        auto& q = std::get<Rational>(r.v_);
        q = -q;
    }
    return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
    check_same(o);
    if (auto* x = std::get_if<Residue>(&v_)) {
        std::uint64_t s = std::uint64_t(x->value) + std::get<Residue>(o.v_).value;
        x->value = static_cast<std::uint32_t>(s % x->modulus);
    } else {
        std::get<Rational>(v_) += std::get<Rational>(o.v_);
    }
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this += -o; }

FieldElem& FieldElem::operator*=(const FieldElem& o) {
    check_same(o);
    if (auto* x = std::get_if<Residue>(&v_)) {
        std::uint64_t s = std::uint64_t(x->value) * std::get<Residue>(o.v_).value;
        x->value = static_cast<std::uint32_t>(s % x->modulus);
    } else {
        std::get<Rational>(v_) *= std::get<Rational>(o.v_);
    }
    return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this *= o.inverse(); }

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (auto* x = std::get_if<Residue>(&v_)) {
        // Fermat: a^(p-2)
        return pow(x->modulus - 2);
    }
    return FieldElem(Rational(1) / std::get<Rational>(v_));
}

FieldElem FieldElem::pow(unsigned long long e) const {
    FieldElem base = *this;
    FieldElem acc = FieldElem::one(field());
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    if (a.v_.index() != b.v_.index()) return false;
    if (auto* x = std::get_if<Residue>(&a.v_)) return *x == std::get<Residue>(b.v_);
    return std::get<Rational>(a.v_) == std::get<Rational>(b.v_);
}

bool canonical_less(const FieldElem& a, const FieldElem& b) {
    a.check_same(b);
    if (auto* x = std::get_if<Residue>(&a.v_)) return x->value < std::get<Residue>(b.v_).value;
    return std::get<Rational>(a.v_) < std::get<Rational>(b.v_);
}

std::string FieldElem::to_string() const {
    if (auto* x = std::get_if<Residue>(&v_)) return std::to_string(x->value);
    return std::get<Rational>(v_).get_str();
}

FieldElem reduce_rational(const Rational& r, std::uint32_t p) {
    Integer num = r.get_num();
    Integer den = r.get_den();
    Integer pz = p;
    if (den % pz == 0) throw BadDenominator(p);
    Integer n = num % pz;
    if (n < 0) n += pz;
    Integer d = den % pz;
    Integer dinv;
    mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t());
    Integer v = (n * dinv) % pz;
    return FieldElem(Residue{static_cast<std::uint32_t>(v.get_ui()), p});
}

} // namespace curvesing
