#include "curvesing/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace curvesing {

// ---------------------------------------------------------------- BivarPoly

BivarPoly BivarPoly::constant(const FieldElem& c) { return monomial(c, 0, 0); }

BivarPoly BivarPoly::var_x(Field f) { return monomial(FieldElem::one(f), 1, 0); }

BivarPoly BivarPoly::var_y(Field f) { return monomial(FieldElem::one(f), 0, 1); }

BivarPoly BivarPoly::monomial(const FieldElem& c, int a, int b) {
    BivarPoly p(c.field());
    p.add_term({a, b}, c);
    return p;
}

FieldElem BivarPoly::coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? FieldElem::zero(field_) : it->second;
}

void BivarPoly::add_term(Monomial m, const FieldElem& c) {
    if (m.x < 0 || m.y < 0) throw std::invalid_argument("negative exponent");
    if (!(c.field() == field_)) throw FieldMismatch("term over " + c.field().to_string());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int BivarPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

int BivarPoly::degree_x() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.x);
    return d;
}

int BivarPoly::degree_y() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.y);
    return d;
}

int BivarPoly::order() const {
    if (terms_.empty()) return -1;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_) d = std::min(d, m.degree());
    return d;
}

BivarPoly BivarPoly::homogeneous_part(int k) const {
    BivarPoly r(field_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == k) r.terms_.emplace(m, c);
    return r;
}

void BivarPoly::check_same(const BivarPoly& o) const {
    if (!(field_ == o.field_))
        throw FieldMismatch("polynomials over " + field_.to_string() + " and " + o.field_.to_string());
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly r(field_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    a.check_same(b);
    BivarPoly r(a.field_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term({ma.x + mb.x, ma.y + mb.y}, ca * cb);
    return r;
}

BivarPoly operator*(const FieldElem& c, const BivarPoly& a) {
    BivarPoly r(a.field_);
    for (const auto& [m, ca] : a.terms_) r.add_term(m, c * ca);
    return r;
}

BivarPoly BivarPoly::pow(unsigned e) const {
    BivarPoly acc = constant(FieldElem::one(field_));
    BivarPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

BivarPoly BivarPoly::dx() const {
    BivarPoly r(field_);
    for (const auto& [m, c] : terms_)
        if (m.x > 0) r.add_term({m.x - 1, m.y}, FieldElem(field_, m.x) * c);
    return r;
}

BivarPoly BivarPoly::dy() const {
    BivarPoly r(field_);
    for (const auto& [m, c] : terms_)
        if (m.y > 0) r.add_term({m.x, m.y - 1}, FieldElem(field_, m.y) * c);
    return r;
}

FieldElem BivarPoly::evaluate(const FieldElem& x, const FieldElem& y) const {
    FieldElem acc = FieldElem::zero(field_);
    for (const auto& [m, c] : terms_) acc += c * x.pow(m.x) * y.pow(m.y);
    return acc;
}

namespace {

// Binomial expansion coefficients of (v + s)^n: C(n,k) s^(n-k) for k = 0..n.
std::vector<FieldElem> shifted_powers(const FieldElem& s, int n) {
    const Field f = s.field();
    std::vector<FieldElem> out;
    out.reserve(n + 1);
    Integer binom = 1;
    for (int k = 0; k <= n; ++k) {
        out.push_back(FieldElem(f, Rational(binom)) * s.pow(n - k));
        binom = binom * (n - k) / (k + 1);
    }
    return out;
}

} // namespace

BivarPoly BivarPoly::translate(const FieldElem& a, const FieldElem& b) const {
    if (a.is_zero() && b.is_zero()) return *this;
    BivarPoly r(field_);
    for (const auto& [m, c] : terms_) {
        const auto px = shifted_powers(a, m.x);
        const auto py = shifted_powers(b, m.y);
        for (int i = 0; i <= m.x; ++i) {
            if (px[i].is_zero()) continue;
            for (int j = 0; j <= m.y; ++j) {
                if (py[j].is_zero()) continue;
                r.add_term({i, j}, c * px[i] * py[j]);
            }
        }
    }
    return r;
}

BivarPoly BivarPoly::swap_xy() const {
    BivarPoly r(field_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.y, m.x}, c);
    return r;
}

BivarPoly BivarPoly::chart1_strict(int m) const {
    BivarPoly r(field_);
    for (const auto& [mono, c] : terms_) {
        const int e = mono.x + mono.y - m;
        if (e < 0) throw std::logic_error("chart1_strict: order below blow-up multiplicity");
        r.terms_.emplace(Monomial{e, mono.y}, c);
    }
    return r;
}

BivarPoly BivarPoly::chart2_strict(int m) const {
    BivarPoly r(field_);
    for (const auto& [mono, c] : terms_) {
        const int e = mono.x + mono.y - m;
        if (e < 0) throw std::logic_error("chart2_strict: order below blow-up multiplicity");
        r.terms_.emplace(Monomial{mono.x, e}, c);
    }
    return r;
}

std::string BivarPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, FieldElem>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
        if (l.first.degree() != r.first.degree()) return l.first.degree() < r.first.degree();
        return l.first.y > r.first.y;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : ordered) {
        std::string coef = c.to_string();
        bool negative = field_.is_rational() && !coef.empty() && coef[0] == '-';
        if (negative) coef.erase(0, 1);
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const bool has_var = m.x > 0 || m.y > 0;
        if (!has_var || coef != "1") {
            os << coef;
            if (has_var) os << '*';
        }
        bool need_star = false;
        if (m.x > 0) {
            os << 'x';
            if (m.x > 1) os << '^' << m.x;
            need_star = true;
        }
        if (m.y > 0) {
            if (need_star) os << '*';
            os << 'y';
            if (m.y > 1) os << '^' << m.y;
        }
    }
    return os.str();
}

// -------------------------------------------------------------------- UPoly

UPoly::UPoly(Field f, std::vector<FieldElem> coeffs) : field_(f), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (!(c.field() == field_)) throw FieldMismatch("UPoly coefficient field");
    trim();
}

UPoly UPoly::constant(const FieldElem& c) { return UPoly(c.field(), {c}); }

UPoly UPoly::linear(const FieldElem& c0, const FieldElem& c1) { return UPoly(c0.field(), {c0, c1}); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElem UPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return FieldElem::zero(field_);
    return c_[k];
}

const FieldElem& UPoly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch("UPoly fields differ");
    const std::size_t n = std::max(a.c_.size(), b.c_.size());
    std::vector<FieldElem> out(n, FieldElem::zero(a.field_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return UPoly(a.field_, std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch("UPoly fields differ");
    if (a.is_zero() || b.is_zero()) return UPoly(a.field_);
    std::vector<FieldElem> out(a.c_.size() + b.c_.size() - 1, FieldElem::zero(a.field_));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return UPoly(a.field_, std::move(out));
}

UPoly operator*(const FieldElem& c, const UPoly& a) {
    UPoly r = a;
    for (auto& x : r.c_) x *= c;
    r.trim();
    return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<FieldElem> rem = c_;
    const int dd = d.degree();
    const int n = degree();
    if (n < dd) return {UPoly(field_), *this};
    std::vector<FieldElem> quo(n - dd + 1, FieldElem::zero(field_));
    const FieldElem inv = d.leading().inverse();
    for (int k = n - dd; k >= 0; --k) {
        const FieldElem q = rem[k + dd] * inv;
        quo[k] = q;
        if (q.is_zero()) continue;
        for (int j = 0; j <= dd; ++j) rem[k + j] -= q * d.c_[j];
    }
    return {UPoly(field_, std::move(quo)), UPoly(field_, std::move(rem))};
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return leading().inverse() * *this;
}

UPoly UPoly::derivative() const {
    std::vector<FieldElem> out;
    for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(FieldElem(field_, static_cast<long long>(i)) * c_[i]);
    return UPoly(field_, std::move(out));
}

FieldElem UPoly::evaluate(const FieldElem& x) const {
    FieldElem acc = FieldElem::zero(field_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

// Positive divisors of |n|. Trial division; coefficients arising from germs
// are small, and we refuse rather than guess when a cofactor stays unfactored.
std::vector<Integer> divisors(Integer n) {
    if (n < 0) n = -n;
    if (n == 0) throw std::logic_error("divisors(0)");
    std::vector<std::pair<Integer, int>> factors;
    for (Integer d = 2; d * d <= n && d <= 1000000; ++d) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) factors.emplace_back(d, e);
    }
    if (n > 1) {
        if (n > Integer(1000000) * Integer(1000000) && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
            throw std::runtime_error("rational root search: coefficient too large to factor");
        factors.emplace_back(n, 1);
    }
    std::vector<Integer> out{1};
    for (const auto& [p, e] : factors) {
        const std::size_t base = out.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int strip_root(UPoly& u, const FieldElem& r) {
    int mult = 0;
    const UPoly lin = UPoly::linear(-r, FieldElem::one(u.field()));
    while (u.degree() >= 1) {
        auto [q, rem] = u.divmod(lin);
        if (!rem.is_zero()) break;
        u = std::move(q);
        ++mult;
    }
    return mult;
}

} // namespace

std::vector<Root> ground_field_roots(const UPoly& poly) {
    if (poly.is_zero()) throw std::domain_error("roots of the zero polynomial");
    const Field f = poly.field();
    std::vector<Root> out;
    UPoly u = poly;

    if (f.is_finite()) {
        for (std::uint32_t v = 0; v < f.characteristic() && u.degree() >= 1; ++v) {
            FieldElem r(f, static_cast<long long>(v));
            if (!u.evaluate(r).is_zero()) continue;
            out.push_back({r, strip_root(u, r)});
        }
        return out;
    }

    // zero root first, then clear denominators for the rational-root test
    FieldElem zero = FieldElem::zero(f);
    if (int m = strip_root(u, zero); m > 0) out.push_back({zero, m});
    if (u.degree() >= 1) {
        Integer lcm_den = 1;
        for (const auto& c : u.coefficients()) {
            const Integer& den = c.rational().get_den();
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
        }
        const Integer a0 = Rational(u.coefficients().front().rational() * lcm_den).get_num();
        const Integer an = Rational(u.leading().rational() * lcm_den).get_num();
        const auto num_div = divisors(a0);
        const auto den_div = divisors(an);
        std::vector<Rational> candidates;
        for (const auto& p : num_div)
            for (const auto& q : den_div) {
                Rational c(p, q);
                c.canonicalize();
                candidates.push_back(c);
                candidates.push_back(-c);
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& c : candidates) {
            if (u.degree() < 1) break;
            FieldElem r(c);
            if (!u.evaluate(r).is_zero()) continue;
            out.push_back({r, strip_root(u, r)});
        }
    }
    std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) { return canonical_less(a.value, b.value); });
    return out;
}

} // namespace curvesing
