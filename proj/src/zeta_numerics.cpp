#include "mzvreg/zeta_numerics.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>

#include "mzvreg/error.hpp"
#include "mzvreg/products.hpp"

namespace mzvreg {

using nlohmann::json;

void PrecisionConfig::validate() const {
    if (prec_bits < 24 || prec_bits > 65536)
        throw DomainError("prec_bits must lie in [24, 65536], got " + std::to_string(prec_bits));
    if (trunc < 10 || trunc > 1000000000L)
        throw DomainError("trunc must lie in [10, 1e9], got " + std::to_string(trunc));
    if (tail_order < 0 || tail_order > 64)
        throw DomainError("tail_order must lie in [0, 64], got " + std::to_string(tail_order));
    if (!(tolerance > 0) || !std::isfinite(tolerance))
        throw DomainError("tolerance must be a positive finite number");
}

std::string PrecisionConfig::describe() const {
    std::ostringstream os;
    os << "prec_bits=" << prec_bits << " trunc=" << trunc << " tail_order=" << tail_order
       << " tolerance=" << tolerance;
    return os.str();
}

// ---------------------------------------------------------------- cache

std::optional<Approx> ZetaCache::find(const NumericKey& key, const Index& k) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find({key, k});
    if (it == entries_.end())
        return std::nullopt;
    return it->second;
}

void ZetaCache::insert(const NumericKey& key, const Index& k, const Approx& value) {
    std::unique_lock lock(mutex_);
    entries_.insert_or_assign({key, k}, value);
}

std::size_t ZetaCache::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

void ZetaCache::clear() {
    std::unique_lock lock(mutex_);
    entries_.clear();
}

std::string ZetaCache::to_json() const {
    std::shared_lock lock(mutex_);
    json out = json::array();
    for (const auto& [key, v] : entries_) {
        out.push_back({{"prec_bits", key.first.prec_bits},
                       {"trunc", key.first.trunc},
                       {"tail_order", key.first.tail_order},
                       {"index", key.second.to_string()},
                       {"value", v.value.to_string()},
                       {"bound", v.bound.to_string()}});
    }
    return out.dump(1);
}

void ZetaCache::merge_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("cache file: ") + e.what());
    }
    if (!doc.is_array())
        throw ParseError("cache file: expected a JSON array");
    std::vector<std::pair<std::pair<NumericKey, Index>, Approx>> parsed;
    for (const auto& e : doc) {
        try {
            NumericKey key{e.at("prec_bits").get<long>(), e.at("trunc").get<long>(), e.at("tail_order").get<int>()};
            const Index k = Index::parse(e.at("index").get<std::string>());
            if (!k.admissible())
                throw ParseError("cache entry with non-admissible index " + k.to_string());
            PrecisionScope scope(key.prec_bits);
            Approx v(Real::from_string(e.at("value").get<std::string>()),
                     Real::from_string(e.at("bound").get<std::string>()));
            parsed.emplace_back(std::make_pair(key, k), std::move(v));
        } catch (const json::exception& ex) {
            throw ParseError(std::string("cache entry: ") + ex.what());
        } catch (const DomainError& ex) {
            throw ParseError(std::string("cache entry: ") + ex.what());
        }
    }
    std::unique_lock lock(mutex_);
    for (auto& [key, v] : parsed)
        entries_.insert_or_assign(key, std::move(v));
}

void ZetaCache::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out)
        throw DomainError("cannot write cache file " + path);
    out << to_json() << '\n';
}

std::size_t ZetaCache::load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        return 0;
    std::stringstream ss;
    ss << in.rdbuf();
    const std::size_t before = size();
    merge_json(ss.str());
    return size() - before;
}

// ---------------------------------------------------------------- tails

namespace {

// B_0 .. B_n by sum_{j<=m} C(m+1, j) B_j = 0.
std::vector<Rational> bernoulli_table(int n) {
    std::vector<Rational> b(static_cast<std::size_t>(n + 1));
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rational acc = 0;
        for (int j = 0; j < m; ++j)
            acc += Rational(binomial(static_cast<unsigned>(m + 1), static_cast<unsigned>(j))) * b[static_cast<std::size_t>(j)];
        b[static_cast<std::size_t>(m)] = -acc / (m + 1);
    }
    return b;
}

const Rational& bernoulli(int n) {
    static const std::vector<Rational> table = bernoulli_table(160);
    if (n > 160)
        throw CapacityError("Bernoulli number index " + std::to_string(n) + " beyond table");
    return table[static_cast<std::size_t>(n)];
}

// s (s+1) ... (s+n-1).
Integer rising(int s, int n) {
    Integer out = 1;
    for (int i = 0; i < n; ++i)
        out *= s + i;
    return out;
}

}  // namespace

std::map<int, Rational> tail_expansion(const Index& j, int max_power) {
    std::map<int, Rational> out;
    if (j.empty()) {
        if (max_power >= 0)
            out[0] = 1;
        return out;
    }
    if (!j.admissible())
        throw DomainError("tail of non-admissible index (" + j.to_string() + ") diverges");
    const int j1 = j[0];
    // Inner powers p' contribute only to powers >= j1 + p' - 1 >= p'.
    const std::map<int, Rational> inner = tail_expansion(j.suffix_from(1), max_power);
    for (const auto& [p, a] : inner) {
        // sum_{m > N} m^{-s} ~ N^{1-s}/(s-1) - N^{-s}/2 + sum_k B_2k/(2k)! (s)_{2k-1} N^{1-s-2k}
        const int s = j1 + p;
        if (s - 1 <= max_power)
            out[s - 1] += a / (s - 1);
        if (s <= max_power)
            out[s] -= a / 2;
        for (int k = 1; s + 2 * k - 1 <= max_power; ++k) {
            const Rational c = bernoulli(2 * k) / Rational(factorial(static_cast<unsigned>(2 * k))) *
                               Rational(rising(s, 2 * k - 1));
            out[s + 2 * k - 1] += a * c;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
    return out;
}

Rational truncated_sum_exact(const Index& k, long n) {
    const int r = k.depth();
    std::vector<Rational> s(static_cast<std::size_t>(r + 1), Rational(0));
    s[0] = 1;
    for (long m = 1; m <= n; ++m) {
        for (int i = r; i >= 1; --i) {
            Integer pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k[static_cast<std::size_t>(i - 1)]));
            s[static_cast<std::size_t>(i)] += s[static_cast<std::size_t>(i - 1)] / Rational(pw);
        }
    }
    return s[static_cast<std::size_t>(r)];
}

// ---------------------------------------------------------------- evaluator

namespace {

// RAII array of MPFR variables at one precision.
class MpfrArray {
public:
    MpfrArray(std::size_t n, long prec) : v_(n) {
        for (auto& x : v_) {
            mpfr_init2(x.x, prec);
            mpfr_set_zero(x.x, 1);
        }
    }
    ~MpfrArray() {
        for (auto& x : v_)
            mpfr_clear(x.x);
    }
    MpfrArray(const MpfrArray&) = delete;
    MpfrArray& operator=(const MpfrArray&) = delete;
    mpfr_ptr operator[](std::size_t i) { return v_[i].x; }

private:
    struct Slot {
        mpfr_t x;
    };
    std::vector<Slot> v_;
};

// Prefix sums S_i(N) = sum_{0 < m_1 < ... < m_i <= N} prod m^{-k}, i = 0..r.
std::vector<Real> prefix_sums(const Index& k, long n, long prec) {
    const int r = k.depth();
    std::vector<int> exps(k.parts());
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    std::vector<std::size_t> slot(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        slot[static_cast<std::size_t>(i)] = static_cast<std::size_t>(
            std::lower_bound(exps.begin(), exps.end(), k[static_cast<std::size_t>(i)]) - exps.begin());

    MpfrArray s(static_cast<std::size_t>(r + 1), prec);
    MpfrArray pw(exps.size(), prec);
    MpfrArray tmp(1, prec);
    mpfr_set_ui(s[0], 1, MPFR_RNDN);
    for (long m = 1; m <= n; ++m) {
        for (std::size_t e = 0; e < exps.size(); ++e) {
            mpfr_ui_pow_ui(tmp[0], static_cast<unsigned long>(m), static_cast<unsigned long>(exps[e]), MPFR_RNDN);
            mpfr_ui_div(pw[e], 1, tmp[0], MPFR_RNDN);
        }
        const int top = static_cast<int>(std::min<long>(r, m));
        for (int i = top; i >= 1; --i) {
            mpfr_mul(tmp[0], pw[slot[static_cast<std::size_t>(i - 1)]], s[static_cast<std::size_t>(i - 1)], MPFR_RNDN);
            mpfr_add(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i)], tmp[0], MPFR_RNDN);
        }
    }
    std::vector<Real> out;
    out.reserve(static_cast<std::size_t>(r + 1));
    for (int i = 0; i <= r; ++i) {
        Real x;
        mpfr_set(x.get(), s[static_cast<std::size_t>(i)], MPFR_RNDN);
        out.push_back(std::move(x));
    }
    return out;
}

constexpr int kEstimateTerms = 4;

}  // namespace

ZetaEvaluator::ZetaEvaluator(PrecisionConfig cfg, std::shared_ptr<ZetaCache> cache)
    : cfg_(cfg), cache_(std::move(cache)) {
    cfg_.validate();
}

Approx ZetaEvaluator::compute(const Index& k) const {
    PrecisionScope scope(cfg_.prec_bits);
    const int r = k.depth();
    const long n = cfg_.trunc;
    const std::vector<Real> s = prefix_sums(k, n, cfg_.prec_bits);

    const Real inv_n = Real(1L) / Real(n);
    Real value, trunc_err, magnitude;
    for (int i = 0; i <= r; ++i) {
        const Index tail = k.suffix_from(i);
        const int lead = tail.weight() - tail.depth();
        const int keep = lead + cfg_.tail_order;
        Real t, est;
        if (tail.empty()) {
            t = Real(1L);
        } else {
            for (const auto& [p, c] : tail_expansion(tail, keep + kEstimateTerms)) {
                const Real term = Real(c) * pow(inv_n, p);
                if (p <= keep)
                    t += term;
                else
                    est += abs(term);
            }
        }
        const Real contrib = s[static_cast<std::size_t>(i)] * t;
        value += contrib;
        magnitude += abs(contrib);
        trunc_err += Real(2L) * est * s[static_cast<std::size_t>(i)];
    }
    // First-order rounding: each prefix level adds N terms with three roundings
    // each; the tail and final combination add O(r + tail_order) more.
    const long ops = 2L * (r + 1) * (n + cfg_.tail_order + 3 * r + 16);
    Real rounding = magnitude * Real(ops) * Real::exp2(-cfg_.prec_bits);
    Real bound = trunc_err + rounding;
    mpfr_nextabove(bound.get());
    return Approx(std::move(value), std::move(bound));
}

Approx ZetaEvaluator::mzv(const Index& k) const {
    if (k.empty()) {
        PrecisionScope scope(cfg_.prec_bits);
        return Approx(Real(1L), Real());
    }
    if (!k.admissible())
        throw DomainError("non-admissible index (" + k.to_string() + "): the series diverges");
    const NumericKey key = NumericKey::of(cfg_);
    if (cache_) {
        if (auto hit = cache_->find(key, k))
            return *hit;
    }
    Approx v = compute(k);
    if (v.bound > Real(cfg_.tolerance))
        throw AccuracyError("zeta(" + k.to_string() + "): error bound " + v.bound.to_string(4) + " exceeds tolerance " +
                            Real(cfg_.tolerance).to_string(4) + " with " + cfg_.describe());
    if (cache_)
        cache_->insert(key, k, v);
    return v;
}

Approx ZetaEvaluator::zeta_single(int m) const {
    if (m < 2)
        throw DomainError("zeta(" + std::to_string(m) + ") needs m >= 2");
    return mzv(Index{m});
}

Approx ZetaEvaluator::mzsv(const Index& k) const {
    if (!k.empty() && !k.admissible())
        throw DomainError("non-admissible index (" + k.to_string() + "): the star series diverges");
    PrecisionScope scope(cfg_.prec_bits);
    Approx acc{Real(), Real()};
    for (const Index& c : contractions(k))
        acc += mzv(c);
    return acc;
}

Approx ZetaEvaluator::evaluate(const ZetaExpr& e) const {
    PrecisionScope scope(cfg_.prec_bits);
    return e.evaluate<Approx>([this](const Index& k) { return mzv(k); });
}

TPoly<Approx> ZetaEvaluator::evaluate(const MzvSymbolPoly& p) const {
    PrecisionScope scope(cfg_.prec_bits);
    return p.map<Approx>([this](const ZetaExpr& c) { return evaluate(c); });
}

ZetaProvider<Approx> ZetaEvaluator::single_provider() const {
    return [this](int m) { return zeta_single(m); };
}

}  // namespace mzvreg
