#include "mzvreg/identities.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "mzvreg/bell.hpp"
#include "mzvreg/error.hpp"
#include "mzvreg/series_reg.hpp"

namespace mzvreg {

using nlohmann::json;

std::string to_string(Flavor f) {
    switch (f) {
        case Flavor::harm:
            return "harm";
        case Flavor::sh:
            return "sh";
        case Flavor::star_harm:
            return "star-harm";
        case Flavor::star_sh:
            return "star-sh";
    }
    return "?";
}

Flavor parse_flavor(const std::string& text) {
    if (text == "harm")
        return Flavor::harm;
    if (text == "sh" || text == "shuffle")
        return Flavor::sh;
    if (text == "star-harm")
        return Flavor::star_harm;
    if (text == "star-sh")
        return Flavor::star_sh;
    throw ParseError("unknown flavor '" + text + "' (expected harm, shuffle, star-harm or star-sh)");
}

// ---------------------------------------------------------------- both sides

MzvSymbolPoly zeta_part(const Index& k, const SetPartition& pi, bool shuffle) {
    if (pi.ground() != range_set(k.depth()))
        throw DomainError("partition " + pi.to_text() + " is not a partition of {1.." + std::to_string(k.depth()) + "}");
    MzvSymbolPoly out(ZetaExpr(Rational(1)));
    for (const auto& block : pi.blocks()) {
        int sum = 0;
        bool all_ones = true;
        for (int p : block) {
            const int kp = k[static_cast<std::size_t>(p - 1)];
            sum += kp;
            all_ones = all_ones && kp == 1;
        }
        if (shuffle && block.size() > 1 && all_ones)
            return {};
        out = out * e_poly(sum);
    }
    return out;
}

MzvSymbolPoly regularized(const Index& k, Flavor f, ShuffleRoute route, int series_order) {
    switch (f) {
        case Flavor::harm:
            return reg_harm(k);
        case Flavor::star_harm:
            return reg_harm_star(k);
        case Flavor::sh:
            if (route == ShuffleRoute::direct)
                return reg_shuffle(k);
            return rho<ZetaExpr>(reg_harm(k), symbolic_zeta, series_order);
        case Flavor::star_sh:
            return rho_bar_star<ZetaExpr>(reg_harm_star(k), symbolic_zeta, series_order);
    }
    throw DomainError("unknown flavor");
}

MzvSymbolPoly symmetric_sum_symbolic(const Index& k, Flavor f, const IdentityLimits& limits, ShuffleRoute route) {
    if (k.depth() > limits.max_perm_depth)
        throw CapacityError("symmetric sum over depth " + std::to_string(k.depth()) + " exceeds the bound " +
                            std::to_string(limits.max_perm_depth));
    // Each distinct ordering occurs prod(multiplicity!) times among the r! permutations.
    std::vector<int> parts = k.parts();
    std::sort(parts.begin(), parts.end());
    Integer weight = 1;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        weight *= factorial(static_cast<unsigned>(j - i));
        i = j;
    }
    MzvSymbolPoly out;
    do {
        out += regularized(Index(parts), f, route);
    } while (std::next_permutation(parts.begin(), parts.end()));
    return out.scaled(Rational(weight));
}

MzvSymbolPoly partition_sum_symbolic(const Index& k, Flavor f, const IdentityLimits& limits) {
    if (k.depth() > limits.max_partition_size)
        throw CapacityError("partition sum over depth " + std::to_string(k.depth()) + " exceeds the bound " +
                            std::to_string(limits.max_partition_size));
    const bool star = f == Flavor::star_harm || f == Flavor::star_sh;
    const bool shuffle = f == Flavor::sh || f == Flavor::star_sh;
    const std::vector<int> ground = range_set(k.depth());
    MzvSymbolPoly out;
    for_each_set_partition(ground, [&](const SetPartition& pi) {
        const Integer c = star ? coeff_c_star(pi) : coeff_c(pi);
        out += zeta_part(k, pi, shuffle).scaled(Rational(c));
    });
    return out;
}

TPoly<Approx> symmetric_sum(const Index& k, Flavor f, const ZetaEvaluator& ev, const IdentityLimits& limits,
                            ShuffleRoute route) {
    return ev.evaluate(symmetric_sum_symbolic(k, f, limits, route));
}

TPoly<Approx> partition_sum(const Index& k, Flavor f, const ZetaEvaluator& ev, const IdentityLimits& limits) {
    return ev.evaluate(partition_sum_symbolic(k, f, limits));
}

// ---------------------------------------------------------------- reports

namespace {

std::string num(const Real& x, int digits) { return x.to_string(digits); }

json report_json(const IdentityReport& r) {
    json params = json::object();
    for (const auto& [key, value] : r.params)
        params[key] = value;
    json coeffs = json::array();
    for (const auto& c : r.coefficients) {
        coeffs.push_back({{"power", c.power},
                          {"lhs", c.lhs},
                          {"rhs", c.rhs},
                          {"deviation", c.deviation},
                          {"bound", c.bound},
                          {"pass", c.pass}});
    }
    return {{"identity", r.identity},
            {"params", params},
            {"exact", r.exact},
            {"pass", r.pass},
            {"max_deviation", r.max_deviation},
            {"bound", r.bound},
            {"tolerance", r.tolerance},
            {"elapsed", r.elapsed},
            {"note", r.note},
            {"coefficients", coeffs}};
}

std::string params_text(const IdentityReport& r) {
    std::string out;
    for (const auto& [key, value] : r.params) {
        if (!out.empty())
            out += ' ';
        out += key + "=" + value;
    }
    return out;
}

// Coefficientwise numeric comparison: a coefficient passes when its deviation
// is within the summed error bounds of both sides and that bound is within tol.
void compare_numeric(IdentityReport& rep, const TPoly<Approx>& lhs, const TPoly<Approx>& rhs, double tol) {
    rep.exact = false;
    rep.tolerance = tol;
    const Real tol_r(tol);
    const int top = std::max(lhs.degree(), rhs.degree());
    Real max_dev, max_bound;
    bool pass = true;
    for (int n = 0; n <= std::max(top, 0); ++n) {
        const Approx a = lhs.coefficient(n);
        const Approx b = rhs.coefficient(n);
        Real dev = abs(a.value - b.value);
        Real bound = a.bound + b.bound + rounding_unit(dev);
        CoefficientCheck c;
        c.power = n;
        c.lhs = num(a.value, 20);
        c.rhs = num(b.value, 20);
        c.deviation = num(dev, 3);
        c.bound = num(bound, 3);
        c.pass = dev <= bound && bound <= tol_r;
        pass = pass && c.pass;
        if (dev > max_dev)
            max_dev = dev;
        if (bound > max_bound)
            max_bound = bound;
        rep.coefficients.push_back(std::move(c));
    }
    rep.max_deviation = num(max_dev, 3);
    rep.bound = num(max_bound, 3);
    rep.pass = pass;
}

void compare_symbolic(IdentityReport& rep, const MzvSymbolPoly& lhs, const MzvSymbolPoly& rhs) {
    rep.exact = true;
    rep.tolerance = 0;
    const int top = std::max(lhs.degree(), rhs.degree());
    bool pass = true;
    for (int n = 0; n <= std::max(top, 0); ++n) {
        const ZetaExpr a = lhs.coefficient(n);
        const ZetaExpr b = rhs.coefficient(n);
        CoefficientCheck c;
        c.power = n;
        c.lhs = to_string(a);
        c.rhs = to_string(b);
        c.pass = a == b;
        c.deviation = c.pass ? "0" : to_string(ZetaExpr(a - b));
        c.bound = "0";
        pass = pass && c.pass;
        rep.coefficients.push_back(std::move(c));
    }
    rep.max_deviation = pass ? "0" : "nonzero";
    rep.bound = "0";
    rep.pass = pass;
}

// Exact comparison of counts or integers; each entry is (label, lhs, rhs).
void compare_integers(IdentityReport& rep, const std::vector<std::tuple<int, Integer, Integer>>& rows) {
    rep.exact = true;
    rep.tolerance = 0;
    bool pass = true;
    for (const auto& [label, a, b] : rows) {
        CoefficientCheck c;
        c.power = label;
        c.lhs = a.get_str();
        c.rhs = b.get_str();
        c.pass = a == b;
        c.deviation = Integer(abs(a - b)).get_str();
        c.bound = "0";
        pass = pass && c.pass;
        rep.coefficients.push_back(std::move(c));
    }
    rep.max_deviation = pass ? "0" : "nonzero";
    rep.bound = "0";
    rep.pass = pass;
}

int need(const std::optional<int>& v, const char* name, const std::string& identity) {
    if (!v)
        throw DomainError(identity + " needs parameter " + name);
    return *v;
}

const Index& need_index(const VerifyParams& p, const std::string& identity) {
    if (!p.index)
        throw DomainError(identity + " needs parameter index");
    return *p.index;
}

std::string set_text(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

// Every subset of {1..r} except {1..r} itself, in bitmask order.
std::vector<std::vector<int>> proper_subsets(int r) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask + 1 < (1u << r); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i))
                s.push_back(i + 1);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::vector<int>> subsets_for(int r, const std::optional<std::vector<int>>& given) {
    if (given) {
        std::vector<int> b = normalize_set(*given);
        if (!b.empty() && b.back() > r)
            throw DomainError("B = " + set_text(b) + " is not a subset of {1.." + std::to_string(r) + "}");
        if (static_cast<int>(b.size()) >= r)
            throw DomainError("B must be a proper subset of {1.." + std::to_string(r) + "}");
        return {b};
    }
    return proper_subsets(r);
}

void check_partition_bound(int r, const IdentityLimits& limits) {
    if (r < 1)
        throw DomainError("r must be at least 1");
    if (r > limits.max_partition_size)
        throw CapacityError("r = " + std::to_string(r) + " exceeds the partition bound " +
                            std::to_string(limits.max_partition_size));
}

Index ones_with(int k, int i, int r) {
    std::vector<int> parts(static_cast<std::size_t>(r), 1);
    parts[static_cast<std::size_t>(i)] = k;
    return Index(parts);
}

// ---------------------------------------------------------------- verifiers

using Verifier = std::function<void(IdentityReport&, const VerifyParams&, const ZetaEvaluator&, double,
                                    const IdentityLimits&)>;

void flavor_identity(IdentityReport& rep, const Index& k, Flavor f, ShuffleRoute route, const ZetaEvaluator& ev,
                     double tol, const IdentityLimits& limits) {
    rep.params.emplace_back("index", k.to_string());
    const auto lhs = symmetric_sum(k, f, ev, limits, route);
    const auto rhs = partition_sum(k, f, ev, limits);
    compare_numeric(rep, lhs, rhs, tol);
}

void v_theorem1(IdentityReport& rep, const VerifyParams& p, const ZetaEvaluator& ev, double tol,
                const IdentityLimits& limits) {
    flavor_identity(rep, need_index(p, rep.identity), Flavor::star_sh, ShuffleRoute::direct, ev, tol, limits);
}

void v_hoffman_harm(IdentityReport& rep, const VerifyParams& p, const ZetaEvaluator& ev, double tol,
                    const IdentityLimits& limits) {
    flavor_identity(rep, need_index(p, rep.identity), Flavor::harm, ShuffleRoute::direct, ev, tol, limits);
}

void v_hoffman_star_harm(IdentityReport& rep, const VerifyParams& p, const ZetaEvaluator& ev, double tol,
                         const IdentityLimits& limits) {
    flavor_identity(rep, need_index(p, rep.identity), Flavor::star_harm, ShuffleRoute::direct, ev, tol, limits);
}

void v_shuffle_mzv(IdentityReport& rep, const VerifyParams& p, const ZetaEvaluator& ev, double tol,
                   const IdentityLimits& limits) {
    flavor_identity(rep, need_index(p, rep.identity), Flavor::sh, p.route, ev, tol, limits);
    rep.params.emplace_back("route", p.route == ShuffleRoute::direct ? "direct" : "rho");
    rep.note = "externally sourced: right side taken as sum of c(Pi) H_sh(K;Pi;T)";
}

void v_corollary1(IdentityReport& rep, const VerifyParams& p, const ZetaEvaluator& ev, double tol,
                  const IdentityLimits& limits) {
    const int k = need(p.k, "k", rep.identity);
    const int r = need(p.r, "r", rep.identity);
    rep.params.emplace_back("k", std::to_string(k));
    rep.params.emplace_back("r", std::to_string(r));
    if (k < 2 || r < 1)
        throw DomainError("corollary1 needs k >= 2 and r >= 1");
    if (r > limits.max_perm_depth)
        throw CapacityError("r = " + std::to_string(r) + " exceeds the permutation bound " +
                            std::to_string(limits.max_perm_depth));
    MzvSymbolPoly lhs;
    for (int i = 0; i < r; ++i)
        lhs += regularized(ones_with(k, i, r), Flavor::star_sh);
    MzvSymbolPoly rhs;
    for (int j = 0; j < r; ++j)
        rhs += MzvSymbolPoly::monomial(j, zeta_symbol(Index{k + r - 1 - j}))
                   .scaled(Rational(1, factorial(static_cast<unsigned>(j))));
    compare_numeric(rep, ev.evaluate(lhs), ev.evaluate(rhs), tol);
}

void v_cor1_count(IdentityReport& rep, const VerifyParams& p, const ZetaEvaluator&, double,
                  const IdentityLimits& limits) {
    const int r = need(p.r, "r", rep.identity);
    rep.params.emplace_back("r", std::to_string(r));
    check_partition_bound(r, limits);
    // X_j: the block containing 1 has j elements and every other block is a singleton.
    std::vector<Integer> counts(static_cast<std::size_t>(r + 1), 0);
    for_each_set_partition(range_set(r), [&](const SetPartition& pi) {
        const auto& first = pi.blocks().front();
        for (std::size_t i = 1; i < pi.blocks().size(); ++i)
            if (pi.blocks()[i].size() != 1)
                return;
        counts[first.size()] += 1;
    });
    std::vector<std::tuple<int, Integer, Integer>> rows;
    for (int j = 1; j <= r; ++j)
        rows.emplace_back(j, counts[static_cast<std::size_t>(j)],
                          binomial(static_cast<unsigned>(r - 1), static_cast<unsigned>(r - j)));
    compare_integers(rep, rows);
    rep.note = "entry j: |X_j| against C(r-1, r-j)";
}

void v_prop3_1(IdentityReport& rep, const VerifyParams& p, const ZetaEvaluator& ev, double tol,
               const IdentityLimits& limits) {
    const int r = need(p.r, "r", rep.identity);
    rep.params.emplace_back("r", std::to_string(r));
    check_partition_bound(r, limits);
    const MzvSymbolPoly lhs = partition_sum_symbolic(Index::ones(r), Flavor::star_harm, limits);
    const MzvSymbolPoly rhs = rho_bar_star_inverse<ZetaExpr>(MzvSymbolPoly::monomial(r), symbolic_zeta);
    compare_numeric(rep, ev.evaluate(lhs), ev.evaluate(rhs), tol);
    rep.note = lhs == rhs ? "sides also agree symbol by symbol" : "sides differ as symbol polynomials";
}

void v_prop3_2(IdentityReport& rep, const VerifyParams& p, const ZetaEvaluator&, double,
               const IdentityLimits& limits) {
    const int r = need(p.r, "r", rep.identity);
    rep.params.emplace_back("r", std::to_string(r));
    check_partition_bound(r, limits);
    compare_symbolic(rep, partition_sum_symbolic(Index::ones(r), Flavor::star_sh, limits), MzvSymbolPoly::monomial(r));
}

std::vector<MzvSymbolPoly> bell_arguments(int r) {
    std::vector<MzvSymbolPoly> xs;
    for (int i = 1; i <= r; ++i)
        xs.push_back(e_poly(i).scaled(Rational(factorial(static_cast<unsigned>(i - 1)))));
    return xs;
}

void v_lemma1(IdentityReport& rep, const VerifyParams& p, const ZetaEvaluator&, double, const IdentityLimits& limits) {
    const int r = need(p.r, "r", rep.identity);
    rep.params.emplace_back("r", std::to_string(r));
    check_partition_bound(r, limits);
    const auto xs = bell_arguments(r);
    compare_symbolic(rep, partition_sum_symbolic(Index::ones(r), Flavor::star_harm, limits),
                     bell_complete<MzvSymbolPoly>(r, xs));
}

void v_remark_bell(IdentityReport& rep, const VerifyParams& p, const ZetaEvaluator&, double, const IdentityLimits&) {
    const int r = need(p.r, "r", rep.identity);
    rep.params.emplace_back("r", std::to_string(r));
    if (r < 1 || r > 40)
        throw DomainError("remark-bell needs 1 <= r <= 40");
    std::vector<Integer> xs;
    for (int i = 0; i < r; ++i)
        xs.push_back(factorial(static_cast<unsigned>(i)));
    compare_integers(rep, {{r, factorial(static_cast<unsigned>(r)), bell_complete<Integer>(r, xs)}});
}

void v_remark_star(IdentityReport& rep, const VerifyParams& p, const ZetaEvaluator& ev, double tol,
                   const IdentityLimits& limits) {
    const int r = need(p.r, "r", rep.identity);
    rep.params.emplace_back("r", std::to_string(r));
    check_partition_bound(r, limits);
    const MzvSymbolPoly lhs = reg_harm_star(Index::ones(r)).scaled(Rational(factorial(static_cast<unsigned>(r))));
    const auto xs = bell_arguments(r);
    compare_numeric(rep, ev.evaluate(lhs), ev.evaluate(bell_complete<MzvSymbolPoly>(r, xs)), tol);
}

void v_prop1(IdentityReport& rep, const VerifyParams& p, const ZetaEvaluator&, double, const IdentityLimits& limits) {
    const int r = need(p.r, "r", rep.identity);
    rep.params.emplace_back("r", std::to_string(r));
    if (p.subset)
        rep.params.emplace_back("B", set_text(normalize_set(*p.subset)));
    check_partition_bound(r, limits);
    std::vector<SetPartition> all = enum_set_partitions(range_set(r));
    std::sort(all.begin(), all.end());
    std::vector<std::tuple<int, Integer, Integer>> rows;
    int label = 0;
    for (const auto& b : subsets_for(r, p.subset)) {
        std::vector<SetPartition> images;
        for (const auto& t : prop1_decomposition(r, b))
            images.push_back(disjoint_union(t.inner, t.outer));
        std::sort(images.begin(), images.end());
        const bool distinct = std::adjacent_find(images.begin(), images.end()) == images.end();
        // Row: number of images that are distinct partitions of {1..r} found in the
        // full enumeration, against Bell(r); a duplicate or stray image breaks equality.
        Integer matched = 0;
        if (distinct && images == all)
            matched = static_cast<long>(images.size());
        else
            matched = -static_cast<long>(images.size());
        rows.emplace_back(label++, matched, Integer(static_cast<long>(all.size())));
    }
    compare_integers(rep, rows);
    rep.note = "row per subset B in bitmask order: images of (A, Xi, Delta) against Bell(r)";
}

void v_prop2(IdentityReport& rep, const VerifyParams& p, const ZetaEvaluator&, double, const IdentityLimits& limits) {
    const int r = need(p.r, "r", rep.identity);
    rep.params.emplace_back("r", std::to_string(r));
    if (p.subset)
        rep.params.emplace_back("B", set_text(normalize_set(*p.subset)));
    check_partition_bound(r, limits);
    std::vector<std::tuple<int, Integer, Integer>> rows;
    int label = 0;
    for (const auto& b : subsets_for(r, p.subset)) {
        // K has k_a = 1 exactly on B; the other parts vary between 2 and 3.
        std::vector<int> parts(static_cast<std::size_t>(r));
        for (int a = 1; a <= r; ++a)
            parts[static_cast<std::size_t>(a - 1)] =
                std::binary_search(b.begin(), b.end(), a) ? 1 : 2 + (a % 2);
        const Index k(parts);
        long checks = 0, ok = 0;
        for (const auto& t : prop1_decomposition(r, b)) {
            const SetPartition whole = disjoint_union(t.inner, t.outer);
            ++checks;
            ok += coeff_c_star(whole) == coeff_c_star(t.inner) * coeff_c_star(t.outer) ? 1 : 0;
            ++checks;
            ok += coeff_c(whole) == coeff_c(t.inner) * coeff_c(t.outer) ? 1 : 0;
            MzvSymbolPoly outer_factor(ZetaExpr(Rational(1)));
            for (const auto& q : t.outer.blocks()) {
                int s = 0;
                for (int e : q)
                    s += k[static_cast<std::size_t>(e - 1)];
                outer_factor = outer_factor * MzvSymbolPoly(zeta_symbol(Index{s}));
            }
            const Index ones = Index::ones(static_cast<int>(t.subset.size()));
            const SetPartition relabeled = relabel_partition(t.subset, t.inner);
            for (bool shuffle : {false, true}) {
                ++checks;
                ok += zeta_part(k, whole, shuffle) == outer_factor * zeta_part(ones, relabeled, shuffle) ? 1 : 0;
            }
        }
        rows.emplace_back(label++, Integer(ok), Integer(checks));
    }
    compare_integers(rep, rows);
    rep.note = "row per subset B: passing checks of c*, c and H_harm, H_sh factorization against total";
}

void v_reg_theorem(IdentityReport& rep, const VerifyParams& p, const ZetaEvaluator& ev, double tol,
                   const IdentityLimits&) {
    const Index& k = need_index(p, rep.identity);
    rep.params.emplace_back("index", k.to_string());
    compare_numeric(rep, ev.evaluate(regularized(k, Flavor::sh, ShuffleRoute::direct)),
                    ev.evaluate(regularized(k, Flavor::sh, ShuffleRoute::via_rho)), tol);
    rep.note = "left: word recursion; right: rho applied to the stuffle regularization";
}

const std::map<std::string, Verifier>& verifiers() {
    static const std::map<std::string, Verifier> table = {
        {"theorem1", v_theorem1},
        {"corollary1", v_corollary1},
        {"hoffman-harm", v_hoffman_harm},
        {"hoffman-star-harm", v_hoffman_star_harm},
        {"shuffle-mzv", v_shuffle_mzv},
        {"prop3-1", v_prop3_1},
        {"prop3-2", v_prop3_2},
        {"lemma1", v_lemma1},
        {"remark-bell", v_remark_bell},
        {"remark-star", v_remark_star},
        {"prop1", v_prop1},
        {"prop2", v_prop2},
        {"reg-theorem", v_reg_theorem},
        {"cor1-count", v_cor1_count},
    };
    return table;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::string IdentityReport::to_json() const { return report_json(*this).dump(); }

std::string IdentityReport::to_text() const {
    std::ostringstream os;
    os << (pass ? "PASS" : "FAIL") << "  " << identity;
    const std::string ps = params_text(*this);
    if (!ps.empty())
        os << "  " << ps;
    os << "  [" << (exact ? "exact" : "numeric") << "]";
    if (!exact)
        os << "  max_dev=" << max_deviation << "  bound=" << bound;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", elapsed);
    os << "  " << buf << "s";
    if (!note.empty())
        os << "\n    note: " << note;
    for (const auto& c : coefficients) {
        os << "\n    " << (exact ? "#" : "T^") << c.power << ": " << c.lhs << "  vs  " << c.rhs;
        if (!exact)
            os << "  dev=" << c.deviation << " bound=" << c.bound;
        if (!c.pass)
            os << "  <-- mismatch";
    }
    return os.str();
}

VerifyParams VerifyParams::from_json(const std::string& text) {
    VerifyParams p;
    if (text.empty())
        return p;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("params: ") + e.what());
    }
    if (!doc.is_object())
        throw ParseError("params must be a JSON object");
    try {
        for (const auto& [key, value] : doc.items()) {
            if (key == "index")
                p.index = Index::parse(value.get<std::string>());
            else if (key == "k")
                p.k = value.get<int>();
            else if (key == "l")
                p.l = value.get<int>();
            else if (key == "r")
                p.r = value.get<int>();
            else if (key == "B")
                p.subset = value.get<std::vector<int>>();
            else if (key == "route") {
                const auto s = value.get<std::string>();
                if (s == "direct")
                    p.route = ShuffleRoute::direct;
                else if (s == "rho")
                    p.route = ShuffleRoute::via_rho;
                else
                    throw ParseError("route must be 'direct' or 'rho'");
            } else {
                throw ParseError("unknown parameter '" + key + "'");
            }
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("params: ") + e.what());
    }
    return p;
}

const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names = {
        "theorem1",   "corollary1", "cor1-count",   "hoffman-harm", "hoffman-star-harm",
        "shuffle-mzv", "reg-theorem", "prop3-1",    "prop3-2",      "lemma1",
        "remark-bell", "remark-star", "prop1",      "prop2",
    };
    return names;
}

IdentityReport verify(const std::string& name, const VerifyParams& params, const ZetaEvaluator& ev,
                      const VerifyOptions& options) {
    const auto& table = verifiers();
    auto it = table.find(name);
    if (it == table.end())
        throw DomainError("unknown identity '" + name + "'");
    PrecisionScope scope(ev.config().prec_bits);
    const double tol = options.tolerance > 0 ? options.tolerance : ev.config().tolerance;
    IdentityReport rep;
    rep.identity = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        it->second(rep, params, ev, tol, options.limits);
    } catch (const CapacityError& e) {
        rep.pass = false;
        rep.note = std::string("capacity: ") + e.what();
    } catch (const AccuracyError& e) {
        rep.pass = false;
        rep.note = std::string("accuracy: ") + e.what();
    }
    rep.elapsed = seconds_since(t0);
    return rep;
}

// ---------------------------------------------------------------- Example 1

namespace {

// Left side of a display: the sum over the listed orderings, with admissible
// terms as zeta-star values and the others as star shuffle regularizations.
TPoly<Approx> star_terms(const std::vector<std::pair<Index, int>>& terms, const ZetaEvaluator& ev) {
    TPoly<Approx> out;
    for (const auto& [k, mult] : terms) {
        TPoly<Approx> v = k.admissible() ? TPoly<Approx>(ev.mzsv(k)) : ev.evaluate(regularized(k, Flavor::star_sh));
        out += v.scaled(Rational(mult));
    }
    return out;
}

ZetaExpr z(int k) { return zeta_symbol(Index{k}); }

}  // namespace

std::vector<IdentityReport> example1_table(const std::vector<int>& ks, const std::vector<int>& ls,
                                           const ZetaEvaluator& ev, const VerifyOptions& options) {
    for (int v : ks)
        if (v < 2)
            throw DomainError("Example 1 needs k >= 2");
    for (int v : ls)
        if (v < 2)
            throw DomainError("Example 1 needs l >= 2");
    PrecisionScope scope(ev.config().prec_bits);
    const double tol = options.tolerance > 0 ? options.tolerance : ev.config().tolerance;
    std::vector<IdentityReport> rows;
    auto run = [&](const std::string& name, std::vector<std::pair<std::string, std::string>> params,
                   const std::vector<std::pair<Index, int>>& lhs_terms, const MzvSymbolPoly& rhs) {
        IdentityReport rep;
        rep.identity = name;
        rep.params = std::move(params);
        const auto t0 = std::chrono::steady_clock::now();
        try {
            compare_numeric(rep, star_terms(lhs_terms, ev), ev.evaluate(rhs), tol);
        } catch (const AccuracyError& e) {
            rep.pass = false;
            rep.note = std::string("accuracy: ") + e.what();
        }
        rep.elapsed = seconds_since(t0);
        rows.push_back(std::move(rep));
    };
    const MzvSymbolPoly T = MzvSymbolPoly::T();
    for (int k : ks) {
        // zeta*(1,k) + zeta*_sh(k,1;T) = zeta(k) T + zeta(k+1)
        run("example1-row1", {{"k", std::to_string(k)}}, {{Index{1, k}, 1}, {Index{k, 1}, 1}},
            T.times(z(k)) + MzvSymbolPoly(z(k + 1)));
    }
    for (int k : ks) {
        for (int l : ls) {
            const MzvSymbolPoly rhs = T.times(z(k) * z(l) + z(k + l)) +
                                      MzvSymbolPoly(z(k) * z(l + 1) + z(l) * z(k + 1) + z(k + l + 1).scaled(2));
            run("example1-row2", {{"k", std::to_string(k)}, {"l", std::to_string(l)}},
                {{Index{1, k, l}, 1},
                 {Index{1, l, k}, 1},
                 {Index{k, 1, l}, 1},
                 {Index{l, 1, k}, 1},
                 {Index{k, l, 1}, 1},
                 {Index{l, k, 1}, 1}},
                rhs);
        }
    }
    for (int k : ks) {
        const MzvSymbolPoly rhs = MzvSymbolPoly::monomial(2, z(k)) + T.times(z(k + 1).scaled(2)) +
                                  MzvSymbolPoly(z(k + 2).scaled(2));
        run("example1-row3", {{"k", std::to_string(k)}}, {{Index{1, 1, k}, 2}, {Index{1, k, 1}, 2}, {Index{k, 1, 1}, 2}},
            rhs);
    }
    return rows;
}

std::string example1_table_text(const std::vector<IdentityReport>& rows) {
    std::ostringstream os;
    os << "row  params      power  lhs                         rhs                         deviation  bound      ok\n";
    for (const auto& r : rows) {
        const std::string row = r.identity.substr(r.identity.size() - 1);
        for (const auto& c : r.coefficients) {
            char line[256];
            std::snprintf(line, sizeof line, "%-4s %-11s T^%-4d %-27s %-27s %-10s %-10s %s\n", row.c_str(),
                          params_text(r).c_str(), c.power, c.lhs.c_str(), c.rhs.c_str(),
                          c.deviation.c_str(), c.bound.c_str(), c.pass ? "yes" : "NO");
            os << line;
        }
        if (!r.note.empty())
            os << "     note: " << r.note << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------- suite

namespace {

std::vector<Index> compositions(int max_weight, int max_depth) {
    std::vector<Index> out;
    std::function<void(std::vector<int>&, int)> grow = [&](std::vector<int>& parts, int weight) {
        if (!parts.empty())
            out.emplace_back(parts);
        if (static_cast<int>(parts.size()) == max_depth)
            return;
        for (int k = 1; weight + k <= max_weight; ++k) {
            parts.push_back(k);
            grow(parts, weight + k);
            parts.pop_back();
        }
    };
    std::vector<int> parts;
    grow(parts, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

SuiteResult run_suite(const ZetaEvaluator& ev, int jobs, const VerifyOptions& options) {
    struct Task {
        std::string name;
        VerifyParams params;
        double tolerance;
    };
    std::vector<Task> tasks;
    auto add = [&](const std::string& name, VerifyParams p, double tol) { tasks.push_back({name, std::move(p), tol}); };
    auto with_index = [](const Index& k) {
        VerifyParams p;
        p.index = k;
        return p;
    };
    auto with_r = [](int r) {
        VerifyParams p;
        p.r = r;
        return p;
    };
    for (const Index& k : compositions(7, 4)) {
        add("theorem1", with_index(k), 1e-7);
        add("hoffman-harm", with_index(k), 1e-7);
        add("hoffman-star-harm", with_index(k), 1e-7);
        add("shuffle-mzv", with_index(k), 1e-7);
    }
    for (int k = 2; k <= 5; ++k) {
        for (int r = 1; r <= 5; ++r) {
            VerifyParams p;
            p.k = k;
            p.r = r;
            add("corollary1", p, 1e-8);
        }
    }
    for (int r = 1; r <= 8; ++r)
        add("cor1-count", with_r(r), 0);
    for (int r = 1; r <= 6; ++r)
        add("prop3-1", with_r(r), 1e-10);
    for (int r = 1; r <= 8; ++r)
        add("prop3-2", with_r(r), 0);
    for (int r = 1; r <= 7; ++r)
        add("lemma1", with_r(r), 0);
    for (int r = 1; r <= 12; ++r)
        add("remark-bell", with_r(r), 0);
    for (int r = 1; r <= 6; ++r)
        add("remark-star", with_r(r), 1e-10);
    for (int r = 1; r <= 7; ++r) {
        add("prop1", with_r(r), 0);
        add("prop2", with_r(r), 0);
    }
    for (const Index& k : compositions(6, 3))
        add("reg-theorem", with_index(k), 1e-7);

    SuiteResult result;
    std::vector<IdentityReport> reports(tasks.size());
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                VerifyOptions o = options;
                if (o.tolerance <= 0 && tasks[i].tolerance > 0)
                    o.tolerance = tasks[i].tolerance;
                reports[i] = verify(tasks[i].name, tasks[i].params, ev, o);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        }
    };
    jobs = std::max(1, jobs);
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);

    VerifyOptions table_opts = options;
    if (table_opts.tolerance <= 0)
        table_opts.tolerance = 1e-8;
    for (auto& row : example1_table({2, 3, 4}, {2, 3}, ev, table_opts))
        reports.push_back(std::move(row));

    for (auto& r : reports) {
        (r.pass ? result.passed : result.failed) += 1;
        result.reports.push_back(std::move(r));
    }
    return result;
}

}  // namespace mzvreg
