// curvesing: command-line front end.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "curvesing/curve.hpp"
#include "curvesing/errors.hpp"
#include "curvesing/oracle.hpp"
#include "curvesing/report_json.hpp"
#include "curvesing/semigroup.hpp"
#include "curvesing/zeta_global.hpp"
#include "curvesing/zeta_local.hpp"

using namespace curvesing;

namespace {

enum Exit { kOk = 0, kInternal = 1, kInput = 2, kBudget = 3, kMismatch = 4 };

struct Options {
    std::string curve;
    std::string field = "Q";
    std::string primes = "2..31";
    std::optional<int> bound;
    std::vector<std::int64_t> q;
    std::uint64_t budget = 10'000'000;
    std::string format = "json";
    std::optional<std::string> point;
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Field parse_field(const std::string& s) {
    if (s == "Q" || s == "QQ") return Field::rationals();
    std::string digits = s;
    if (digits.rfind("F_", 0) == 0) digits = digits.substr(2);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("field must be Q or a prime, got '" + s + "'");
    const unsigned long p = std::stoul(digits);
    if (!is_prime(p) || p >= (1ul << 31)) throw InputError("field characteristic must be prime, got " + digits);
    return Field::prime(static_cast<std::uint32_t>(p));
}

PrimeRange parse_primes(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) throw InputError("prime range must look like A..B");
    try {
        PrimeRange r{static_cast<std::uint32_t>(std::stoul(s.substr(0, dots))),
                     static_cast<std::uint32_t>(std::stoul(s.substr(dots + 2)))};
        if (r.lo > r.hi) throw InputError("empty prime range " + s);
        return r;
    } catch (const std::logic_error&) {
        throw InputError("prime range must look like A..B");
    }
}

BivarPoly curve_over(const Options& o, Field f) {
    BivarPoly g = parse_curve(o.curve);
    if (f.is_finite()) g = reduce_mod_p(g, f.characteristic());
    return g;
}

FieldElem parse_coordinate(const std::string& s, Field f) {
    Rational r;
    try {
        r = Rational(s);
        r.canonicalize();
    } catch (const std::invalid_argument&) {
        throw InputError("bad coordinate '" + s + "'");
    }
    if (f.is_finite()) return reduce_rational(r, f.characteristic());
    return FieldElem(r);
}

CurveGerm germ_of(const Options& o, Field f) {
    BivarPoly g = curve_over(o, f);
    if (!o.point) return CurveGerm(g);
    const auto comma = o.point->find(',');
    if (comma == std::string::npos) throw InputError("point must look like \"a,b\"");
    const FieldElem a = parse_coordinate(o.point->substr(0, comma), f);
    const FieldElem b = parse_coordinate(o.point->substr(comma + 1), f);
    if (!g.evaluate(a, b).is_zero()) throw InputError("point does not lie on the curve");
    return CurveGerm::at(g, a, b);
}

std::uint32_t require_prime(Field f, const char* command) {
    if (!f.is_finite()) throw InputError(std::string(command) + " needs --field p");
    return f.characteristic();
}

void print_text(const Json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            print_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (j.is_array() && !j.empty() && j.front().is_object()) {
        for (std::size_t i = 0; i < j.size(); ++i) print_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

void emit(const Json& j, const Options& o) {
    if (o.format == "text")
        print_text(j, "", std::cout);
    else
        std::cout << j.dump(2) << '\n';
}

int cmd_analyze(const Options& o) {
    const Field f = parse_field(o.field);
    const CurveGerm g = germ_of(o, f);
    LocalRing ring(g);
    const ValueSemigroup s = value_semigroup(ring);
    Json branches = Json::array();
    for (const auto& b : ring.branches()) branches.push_back(to_json(b));
    Json j{{"curve", g.equation().to_string()},
           {"field", f.to_string()},
           {"multiplicity", g.multiplicity()},
           {"branch_count", ring.branch_count()},
           {"delta", s.delta},
           {"conductor", s.conductor}};
    if (s.d == 1) j["generators"] = s.generators;
    j["process"] = to_json(ring.process());
    j["semigroup"] = to_json(s);
    j["branches"] = branches;
    emit(j, o);
    return kOk;
}

int cmd_reduce_scan(const Options& o) {
    const PrimeRange range = parse_primes(o.primes);
    const BivarPoly f = parse_curve(o.curve);
    const auto rows = reduction_scan(f, range);
    Json reports = Json::array();
    Json bad = Json::array();
    bool coherent = true;
    for (const auto& r : rows) {
        reports.push_back(Json{{"prime", r.semigroup.prime},
                               {"process", to_string(r.process.status)},
                               {"semigroup", to_string(r.semigroup.status)},
                               {"detail", r.semigroup.detail}});
        if (r.semigroup.status != ReductionStatus::Good || r.process.status != ReductionStatus::Good)
            bad.push_back(r.semigroup.prime);
        coherent = coherent && ((r.process.status == ReductionStatus::Good) ==
                                (r.semigroup.status == ReductionStatus::Good));
    }
    emit(Json{{"curve", f.to_string()},
              {"primes", Json::array({range.lo, range.hi})},
              {"bad", bad},
              {"coherent", coherent},
              {"reports", reports}},
         o);
    return kOk;
}

int cmd_zeta(const Options& o) {
    const Field f = parse_field(o.field);
    const CurveGerm g = germ_of(o, f);
    LocalRing ring(g);
    const ValueSemigroup s = value_semigroup(ring);
    const int bound = o.bound.value_or(norm1(s.conductor) + 4);
    if (bound < 0) throw InputError("bound must be nonnegative");
    const LocalZeta z = local_zeta(ring, s, bound);
    std::vector<std::int64_t> qs = o.q;
    if (qs.empty() && f.is_finite()) qs.push_back(f.characteristic());
    Json specialized = Json::array();
    for (std::int64_t q : qs) {
        if (q < 2) throw InputError("q must be at least 2");
        specialized.push_back(to_json(counting_specialization(z.joint, q), q));
    }
    emit(Json{{"curve", g.equation().to_string()},
              {"field", f.to_string()},
              {"delta", z.delta},
              {"conductor", z.conductor},
              {"zeta", to_json(z.joint)},
              {"single", to_json(z.single)},
              {"poincare", to_json(poincare_series(z))},
              {"specializations", specialized}},
         o);
    return kOk;
}

int cmd_oracle(const Options& o) {
    const Field f = parse_field(o.field);
    const std::uint32_t q = require_prime(f, "oracle");
    const CurveGerm g = germ_of(o, f);
    LocalRing ring(g);
    const ValueSemigroup s = value_semigroup(ring);
    const int bound = o.bound.value_or(norm1(s.conductor) + 2);
    const OracleCounts c = brute_force_ideal_counts(g, s.conductor, bound, o.budget);
    bool agree = true;
    Json cmp = Json::array();
    for (const auto& [n, count] : c.ideals) {
        const Rational formula = ideal_class(ring, s, n).evaluate(q);
        const bool ok = formula == Rational(static_cast<unsigned long>(count));
        agree = agree && ok;
        cmp.push_back(Json{{"n", n}, {"oracle", count}, {"formula", to_string(formula)}, {"agree", ok}});
    }
    emit(Json{{"curve", g.equation().to_string()},
              {"q", q},
              {"agree", agree},
              {"comparison", cmp},
              {"counts", to_json(c)}},
         o);
    return agree ? kOk : kMismatch;
}

int cmd_global_verify(const Options& o) {
    const Field f = parse_field(o.field);
    require_prime(f, "global-verify");
    const GlobalCurve X(curve_over(o, f), o.budget);
    const FactorizationReport r = verify_global_factorization(X, o.bound.value_or(6), o.budget);
    Json j = to_json(r);
    Json pts = Json::array();
    for (const auto& p : X.singular_points()) pts.push_back(p.point.to_string());
    j["singular_locus"] = pts;
    emit(j, o);
    return r.equal && r.unit_index_form ? kOk : kMismatch;
}

int cmd_unit_index(const Options& o) {
    const Field f = parse_field(o.field);
    require_prime(f, "unit-index");
    const CurveGerm g = germ_of(o, f);
    Json j = to_json(unit_index(g, o.budget));
    j["curve"] = g.equation().to_string();
    j["q"] = f.characteristic();
    emit(j, o);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Plane curve singularity invariants and zeta functions"};
    app.require_subcommand(1);
    Options o;

    auto common = [&o](CLI::App* sub) {
        sub->add_option("curve", o.curve, "Equation in x and y")->required();
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    };
    auto with_field = [&o](CLI::App* sub) { sub->add_option("--field", o.field, "Q or a prime p"); };
    auto with_point = [&o](CLI::App* sub) { sub->add_option("--point", o.point, "Base point \"a,b\""); };
    auto with_bound = [&o](CLI::App* sub) {
        sub->add_option("--bound", o.bound, "Total-degree bound")->check(CLI::NonNegativeNumber);
    };
    auto with_budget = [&o](CLI::App* sub) {
        sub->add_option("--budget", o.budget, "Enumeration budget")->check(CLI::PositiveNumber);
    };

    auto* analyze = app.add_subcommand("analyze", "Branches, resolution and value semigroup of a germ");
    common(analyze), with_field(analyze), with_point(analyze);

    auto* scan = app.add_subcommand("reduce-scan", "Compare reductions modulo primes with the rational germ");
    common(scan);
    scan->add_option("--primes", o.primes, "Prime range A..B");

    auto* zeta = app.add_subcommand("zeta", "Motivic local zeta function and Poincare series");
    common(zeta), with_field(zeta), with_point(zeta), with_bound(zeta);
    zeta->add_option("--q", o.q, "Counting specializations")->delimiter(',');

    auto* oracle = app.add_subcommand("oracle", "Brute-force principal ideal counts against the formula");
    common(oracle), with_field(oracle), with_point(oracle), with_bound(oracle), with_budget(oracle);

    auto* global = app.add_subcommand("global-verify", "Factorization of the divisor zeta of a projective curve");
    common(global), with_field(global), with_bound(global), with_budget(global);

    auto* units = app.add_subcommand("unit-index", "Unit index of the normalization, formula and enumeration");
    common(units), with_field(units), with_point(units), with_budget(units);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInput;
    }

    try {
        if (*analyze) return cmd_analyze(o);
        if (*scan) return cmd_reduce_scan(o);
        if (*zeta) return cmd_zeta(o);
        if (*oracle) return cmd_oracle(o);
        if (*global) return cmd_global_verify(o);
        if (*units) return cmd_unit_index(o);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const IndexMismatch& e) {
        std::cerr << "verification mismatch: " << e.what() << '\n';
        return kMismatch;
    } catch (const InconsistentCounts& e) {
        std::cerr << "verification mismatch: " << e.what() << '\n';
        return kMismatch;
    } catch (const ExactDivisionFailure& e) {
        std::cerr << "verification mismatch: " << e.what() << '\n';
        return kMismatch;
    } catch (const NonStabilized& e) {
        std::cerr << "verification mismatch: " << e.what() << '\n';
        return kMismatch;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kInput;
}
