#pragma once

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "mzvreg/index.hpp"
#include "mzvreg/rational.hpp"
#include "mzvreg/real.hpp"
#include "mzvreg/regularize.hpp"
#include "mzvreg/series_reg.hpp"
#include "mzvreg/tpoly.hpp"

namespace mzvreg {

struct PrecisionConfig {
    long prec_bits = 128;    // working precision of every real operation
    long trunc = 100000;     // N: nested sums are taken over variables <= N
    int tail_order = 8;      // powers of 1/N kept beyond the leading tail term
    double tolerance = 1e-9;  // largest acceptable error bound per value

    /// Throws DomainError when a field is out of range.
    void validate() const;
    /// "prec_bits=128 trunc=100000 tail_order=8 tolerance=1e-09".
    std::string describe() const;

    friend bool operator==(const PrecisionConfig&, const PrecisionConfig&) = default;
};

/// The part of a configuration that determines computed values bit for bit.
struct NumericKey {
    long prec_bits = 0;
    long trunc = 0;
    int tail_order = 0;

    static NumericKey of(const PrecisionConfig& cfg) { return {cfg.prec_bits, cfg.trunc, cfg.tail_order}; }
    friend auto operator<=>(const NumericKey&, const NumericKey&) = default;
};

/// Concurrent map (configuration, admissible index) -> value with error bound.
/// Lookups take a shared lock; inserts overwrite (last writer wins).
class ZetaCache {
public:
    std::optional<Approx> find(const NumericKey& key, const Index& k) const;
    void insert(const NumericKey& key, const Index& k, const Approx& value);
    std::size_t size() const;
    void clear();

    /// JSON array of {"prec_bits","trunc","tail_order","index","value","bound"}.
    /// Values carry enough digits to reload bit-identically.
    std::string to_json() const;
    /// Adds every entry of a document produced by to_json. Throws ParseError.
    void merge_json(const std::string& text);
    void save(const std::string& path) const;
    /// Missing file is not an error; returns the number of entries read.
    std::size_t load(const std::string& path);

private:
    mutable std::shared_mutex mutex_;
    std::map<std::pair<NumericKey, Index>, Approx> entries_;
};

/// Asymptotic expansion of the tail sum
///   t_N(J) = sum_{N < m_1 < ... < m_s} m_1^{-j_1} ... m_s^{-j_s}
/// as sum_p c_p N^{-p}, with exact coefficients for every p <= max_power.
/// J must be empty (t = 1) or admissible. Leading power is weight(J) - depth(J).
std::map<int, Rational> tail_expansion(const Index& j, int max_power);

/// Exact truncated nested sum Z_N(K) = sum_{0 < m_1 < ... < m_r <= N} prod m_i^{-k_i}.
Rational truncated_sum_exact(const Index& k, long n);

/// Numeric evaluation of zeta values by prefix sums up to N plus the tail
/// expansion above for every split point m_i <= N < m_{i+1}. Every result
/// carries an absolute error bound covering rounding and tail truncation.
class ZetaEvaluator {
public:
    explicit ZetaEvaluator(PrecisionConfig cfg = {}, std::shared_ptr<ZetaCache> cache = nullptr);

    const PrecisionConfig& config() const noexcept { return cfg_; }
    const std::shared_ptr<ZetaCache>& cache() const noexcept { return cache_; }

    /// zeta(m), m >= 2.
    Approx zeta_single(int m) const;
    /// zeta(K) for admissible K; the empty index gives exactly 1.
    Approx mzv(const Index& k) const;
    /// zeta*(K) as the sum over contractions of mzv.
    Approx mzsv(const Index& k) const;

    Approx evaluate(const ZetaExpr& e) const;
    TPoly<Approx> evaluate(const MzvSymbolPoly& p) const;

    ZetaProvider<Approx> single_provider() const;

private:
    Approx compute(const Index& k) const;

    PrecisionConfig cfg_;
    std::shared_ptr<ZetaCache> cache_;
};

}  // namespace mzvreg
