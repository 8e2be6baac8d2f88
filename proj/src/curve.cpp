#include "curvesing/curve.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "curvesing/errors.hpp"

namespace curvesing {

// ------------------------------------------------------------------- parser

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    BivarPoly run() {
        BivarPoly p = expr();
        skip_ws();
        if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_ + 1, what); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    BivarPoly expr() {
        BivarPoly acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    BivarPoly term() {
        BivarPoly acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                skip_ws();
                const std::size_t at = pos_;
                BivarPoly d = unary();
                if (d.total_degree() != 0) {
                    pos_ = at;
                    fail(d.is_zero() ? "division by zero" : "division by a non-constant");
                }
                acc = d.coeff(0, 0).inverse() * acc;
            } else {
                return acc;
            }
        }
    }

    BivarPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    BivarPoly power() {
        BivarPoly base = primary();
        if (!accept('^')) return base;
        skip_ws();
        const std::size_t at = pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected a non-negative integer exponent");
        const Integer e = digits();
        if (e > 10000) {
            pos_ = at;
            fail("exponent too large");
        }
        return base.pow(static_cast<unsigned>(e.get_ui()));
    }

    Integer digits() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    BivarPoly primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        const Field q = Field::rationals();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return BivarPoly::constant(FieldElem(q, Rational(digits())));
        if (c == 'x') {
            ++pos_;
            return BivarPoly::var_x(q);
        }
        if (c == 'y') {
            ++pos_;
            return BivarPoly::var_y(q);
        }
        if (c == '(') {
            ++pos_;
            BivarPoly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

BivarPoly parse_curve(std::string_view text) {
    BivarPoly p = Parser(text).run();
    if (p.is_zero()) throw ZeroPolynomial();
    return p;
}

// ------------------------------------------------------------ bivariate gcd

namespace {

// Polynomial in y with coefficients in k[x]; index = power of y, no trailing zeros.
using YPoly = std::vector<UPoly>;

YPoly to_y(const BivarPoly& f) {
    const Field k = f.field();
    YPoly out(f.degree_y() + 1, UPoly(k));
    std::vector<std::vector<FieldElem>> dense(out.size());
    for (const auto& [m, c] : f.terms()) {
        auto& row = dense[m.y];
        if (static_cast<int>(row.size()) <= m.x) row.resize(m.x + 1, FieldElem::zero(k));
        row[m.x] = c;
    }
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = UPoly(k, std::move(dense[j]));
    return out;
}

BivarPoly from_y(const YPoly& p, Field k) {
    BivarPoly f(k);
    for (std::size_t j = 0; j < p.size(); ++j)
        for (int i = 0; i <= p[j].degree(); ++i) f.add_term({i, static_cast<int>(j)}, p[j].coeff(i));
    return f;
}

void trim(YPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly content(const YPoly& p, Field k) {
    UPoly g(k);
    for (const auto& c : p) g = gcd(g, c);
    return g;
}

YPoly divide_by(const YPoly& p, const UPoly& c) {
    YPoly out;
    for (const auto& a : p) {
        auto [q, r] = a.divmod(c);
        if (!r.is_zero()) throw std::logic_error("content division not exact");
        out.push_back(std::move(q));
    }
    return out;
}

YPoly primitive(const YPoly& p, Field k) {
    if (p.empty()) return p;
    return divide_by(p, content(p, k));
}

// Pseudo-remainder of a by b in k[x][y].
YPoly prem(YPoly a, const YPoly& b) {
    const std::size_t m = b.size() - 1;
    const UPoly& lc = b.back();
    while (a.size() > m) {
        const std::size_t shift = a.size() - 1 - m;
        const UPoly lead = a.back();
        for (auto& c : a) c = lc * c;
        for (std::size_t j = 0; j <= m; ++j) a[j + shift] = a[j + shift] - lead * b[j];
        trim(a);
    }
    return a;
}

BivarPoly normalized(const BivarPoly& f) {
    if (f.is_zero()) return f;
    // Leading term: highest y power, then highest x power.
    const Monomial* lead = nullptr;
    for (const auto& [m, c] : f.terms())
        if (!lead || m.y > lead->y || (m.y == lead->y && m.x > lead->x)) lead = &m;
    return f.coeff(lead->x, lead->y).inverse() * f;
}

} // namespace

BivarPoly bivariate_gcd(const BivarPoly& a, const BivarPoly& b) {
    if (!(a.field() == b.field())) throw FieldMismatch("gcd over different fields");
    const Field k = a.field();
    if (a.is_zero()) return normalized(b);
    if (b.is_zero()) return normalized(a);
    YPoly A = to_y(a);
    YPoly B = to_y(b);
    const UPoly c = gcd(content(A, k), content(B, k));
    A = primitive(A, k);
    B = primitive(B, k);
    if (A.size() < B.size()) std::swap(A, B);
    while (!B.empty()) {
        YPoly R = prem(A, B);
        A = std::move(B);
        B = primitive(R, k);
    }
    YPoly g = primitive(A, k);
    for (auto& coeff : g) coeff = c * coeff;
    return normalized(from_y(g, k));
}

bool is_squarefree(const BivarPoly& f) {
    if (f.is_zero()) return false;
    const BivarPoly g = bivariate_gcd(bivariate_gcd(f, f.dx()), f.dy());
    return g.total_degree() == 0;
}

BivarPoly reduce_mod_p(const BivarPoly& f, std::uint32_t p) {
    if (!f.field().is_rational()) throw FieldMismatch("reduce_mod_p expects a polynomial over Q");
    const Field fp = Field::prime(p);
    BivarPoly r(fp);
    for (const auto& [m, c] : f.terms()) r.add_term(m, reduce_rational(c.rational(), p));
    if (r.is_zero()) throw DegenerateReduction("image modulo " + std::to_string(p) + " is zero");
    if (!is_squarefree(r))
        throw DegenerateReduction("image modulo " + std::to_string(p) + " has a repeated factor");
    return r;
}

// --------------------------------------------------------------------- germ

CurveGerm::CurveGerm(BivarPoly f) : f_(std::move(f)) {
    if (f_.is_zero()) throw ZeroPolynomial();
    if (!f_.coeff(0, 0).is_zero()) throw std::invalid_argument("the base point is not on the curve");
    if (!is_squarefree(f_)) throw NotSquarefree("curve equation " + f_.to_string() + " has a repeated factor");
}

CurveGerm CurveGerm::at(const BivarPoly& f, const FieldElem& a, const FieldElem& b) {
    return CurveGerm(f.translate(a, b));
}

std::string to_string(ReductionStatus s) {
    switch (s) {
    case ReductionStatus::Good: return "Good";
    case ReductionStatus::BadDenominator: return "BadDenominator";
    case ReductionStatus::DegenerateReduction: return "DegenerateReduction";
    case ReductionStatus::NotTotallyRational: return "NotTotallyRational";
    case ReductionStatus::BadProcess: return "BadProcess";
    case ReductionStatus::BadSemigroup: return "BadSemigroup";
    case ReductionStatus::WildFailure: return "WildFailure";
    }
    return "?";
}

// --------------------------------------------------------- projective curve

std::string ProjPoint::to_string() const {
    std::ostringstream os;
    os << '(' << c[0] << ':' << c[1] << ':' << c[2] << ')';
    return os.str();
}

namespace {

std::uint64_t powmod(std::uint64_t b, int e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// Value of F and its three partials at a point of P^2(F_p).
std::array<std::uint64_t, 4> eval_with_gradient(const std::vector<HomogTerm>& F, const ProjPoint& pt,
                                                std::uint64_t p) {
    std::array<std::uint64_t, 4> out{};
    for (const auto& t : F) {
        std::uint64_t pw[3];
        for (int i = 0; i < 3; ++i) pw[i] = powmod(pt.c[i], t.e[i], p);
        out[0] = (out[0] + t.coeff * (pw[0] * pw[1] % p * pw[2] % p)) % p;
        for (int i = 0; i < 3; ++i) {
            if (t.e[i] == 0) continue;
            std::uint64_t v = t.coeff * (static_cast<std::uint64_t>(t.e[i]) % p) % p;
            for (int j = 0; j < 3; ++j) v = v * (j == i ? powmod(pt.c[j], t.e[j] - 1, p) : pw[j]) % p;
            out[i + 1] = (out[i + 1] + v) % p;
        }
    }
    return out;
}

} // namespace

std::vector<ProjPoint> find_singular_points(const std::vector<HomogTerm>& F, std::uint32_t q,
                                            std::uint64_t budget) {
    int deg = 0;
    for (const auto& t : F) deg = std::max(deg, t.e[0] + t.e[1] + t.e[2]);
    const std::uint64_t work = static_cast<std::uint64_t>(q) * q * static_cast<std::uint64_t>(std::max(deg, 1));
    if (work > budget)
        throw BudgetExceeded("singular point search needs " + std::to_string(work) + " evaluations, budget " +
                             std::to_string(budget));
    std::vector<ProjPoint> out;
    auto check = [&](ProjPoint pt) {
        const auto v = eval_with_gradient(F, pt, q);
        if (v[0] == 0 && v[1] == 0 && v[2] == 0 && v[3] == 0) out.push_back(pt);
    };
    check({{0, 0, 1}});
    for (std::uint32_t c = 0; c < q; ++c) check({{0, 1, c}});
    for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; ++c) check({{1, b, c}});
    return out;
}

GlobalCurve::GlobalCurve(const BivarPoly& affine, std::uint64_t budget) : affine_(affine) {
    const Field k = affine.field();
    if (!k.is_finite()) throw FieldMismatch("a global curve needs a prime field");
    if (affine.is_zero()) throw ZeroPolynomial();
    if (!is_squarefree(affine)) throw NotSquarefree("curve equation has a repeated factor");
    q_ = k.characteristic();
    deg_ = affine.total_degree();
    if (deg_ < 1) throw std::invalid_argument("a global curve needs positive degree");
    for (const auto& [m, c] : affine.terms()) terms_.push_back({{m.x, m.y, deg_ - m.degree()}, c.residue()});

    for (const ProjPoint& pt : find_singular_points(terms_, q_, budget)) {
        const auto& [a, b, c] = pt.c;
        const auto el = [&](std::uint32_t v) { return FieldElem(k, static_cast<long long>(v)); };
        if (c != 0) {
            const FieldElem ic = el(c).inverse();
            sing_.push_back({pt, Chart::Z, CurveGerm::at(chart_equation(Chart::Z), el(a) * ic, el(b) * ic)});
        } else if (b != 0) {
            sing_.push_back({pt, Chart::Y, CurveGerm::at(chart_equation(Chart::Y), el(a) * el(b).inverse(),
                                                         FieldElem::zero(k))});
        } else {
            sing_.push_back({pt, Chart::X, CurveGerm::at(chart_equation(Chart::X), FieldElem::zero(k),
                                                         FieldElem::zero(k))});
        }
    }
}

BivarPoly GlobalCurve::chart_equation(Chart chart) const {
    const Field k = affine_.field();
    BivarPoly g(k);
    for (const auto& t : terms_) {
        const FieldElem c(k, static_cast<long long>(t.coeff));
        switch (chart) {
        case Chart::Z: g.add_term({t.e[0], t.e[1]}, c); break;
        case Chart::Y: g.add_term({t.e[0], t.e[2]}, c); break;
        case Chart::X: g.add_term({t.e[1], t.e[2]}, c); break;
        }
    }
    return g;
}

} // namespace curvesing
