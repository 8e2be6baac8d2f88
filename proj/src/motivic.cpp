#include "curvesing/motivic.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "curvesing/errors.hpp"

namespace curvesing {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("MotClass coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("MotClass coefficient overflow");
    return r;
}

} // namespace

MotClass::MotClass(std::int64_t n) { add_term(0, n); }

MotClass MotClass::L_power(int e) {
    MotClass c;
    c.add_term(e, 1);
    return c;
}

void MotClass::add_term(int e, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

std::int64_t MotClass::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

int MotClass::min_exponent() const {
    if (terms_.empty()) throw std::domain_error("exponent of the zero class");
    return terms_.begin()->first;
}

int MotClass::max_exponent() const {
    if (terms_.empty()) throw std::domain_error("exponent of the zero class");
    return terms_.rbegin()->first;
}

MotClass MotClass::operator-() const {
    MotClass r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, checked_mul(c, -1));
    return r;
}

MotClass& MotClass::operator+=(const MotClass& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MotClass& MotClass::operator-=(const MotClass& o) { return *this += -o; }

MotClass operator*(const MotClass& a, const MotClass& b) {
    MotClass r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, checked_mul(ca, cb));
    return r;
}

MotClass MotClass::shifted(int e) const {
    MotClass r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k + e, c);
    return r;
}

MotClass MotClass::pow(unsigned e) const {
    MotClass acc(1);
    MotClass base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

MotClass MotClass::exact_div(const MotClass& d) const {
    if (d.is_zero()) throw std::domain_error("division by the zero class");
    if (is_zero()) return {};
    // Long division from the top exponent down; the Laurent shift is implicit.
    MotClass rem = *this;
    MotClass quo;
    const int dtop = d.max_exponent();
    const int dlow = d.min_exponent();
    const std::int64_t lead = d.terms_.rbegin()->second;
    while (!rem.is_zero() && rem.max_exponent() - dtop >= rem.min_exponent() - dlow) {
        const int e = rem.max_exponent();
        const std::int64_t c = rem.terms_.rbegin()->second;
        if (c % lead != 0) break;
        MotClass step = L_power(e - dtop) * MotClass(c / lead);
        quo += step;
        rem -= step * d;
    }
    if (!rem.is_zero())
        throw ExactDivisionFailure("(" + to_string() + ") is not divisible by (" + d.to_string() + ")");
    return quo;
}

Rational MotClass::evaluate(std::int64_t q) const {
    if (q < 2) throw std::invalid_argument("counting specialization needs q >= 2");
    Rational acc = 0;
    const Integer qz = static_cast<long>(q);
    for (const auto& [e, c] : terms_) {
        Integer pw;
        mpz_pow_ui(pw.get_mpz_t(), qz.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
        Rational term = e >= 0 ? Rational(pw) : Rational(Integer(1), pw);
        term.canonicalize();
        acc += Rational(Integer(static_cast<long>(c))) * term;
    }
    return acc;
}

std::string MotClass::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto [e, c] = *it;
        const bool negative = c < 0;
        const std::int64_t mag = negative ? -c : c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << '*';
        os << 'L';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

// ---------------------------------------------------------------- MotSeries

int norm1(const std::vector<int>& n) { return std::accumulate(n.begin(), n.end(), 0); }

MotSeries::MotSeries(int variables, int bound) : d_(variables), bound_(bound) {
    if (variables < 1) throw std::invalid_argument("MotSeries needs at least one variable");
    if (bound < 0) throw std::invalid_argument("MotSeries bound must be non-negative");
}

MotClass MotSeries::coeff(const Exponent& n) const {
    auto it = terms_.find(n);
    return it == terms_.end() ? MotClass{} : it->second;
}

void MotSeries::add(const Exponent& n, const MotClass& c) {
    if (static_cast<int>(n.size()) != d_) throw std::invalid_argument("exponent arity mismatch");
    for (int v : n)
        if (v < 0) throw std::invalid_argument("negative exponent in MotSeries");
    if (norm1(n) > bound_ || c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(n, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MotSeries MotSeries::scaled(const MotClass& c) const {
    MotSeries r(d_, bound_);
    for (const auto& [n, v] : terms_) r.add(n, v * c);
    return r;
}

MotSeries MotSeries::diagonal() const {
    MotSeries r(1, bound_);
    for (const auto& [n, v] : terms_) r.add({norm1(n)}, v);
    return r;
}

} // namespace curvesing
