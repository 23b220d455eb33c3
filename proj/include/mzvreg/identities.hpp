#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mzvreg/index.hpp"
#include "mzvreg/regularize.hpp"
#include "mzvreg/set_partition.hpp"
#include "mzvreg/tpoly.hpp"
#include "mzvreg/zeta_numerics.hpp"

namespace mzvreg {

/// Regularization flavor: harmonic, shuffle, and their star versions.
enum class Flavor { harm, sh, star_harm, star_sh };

/// "harm", "sh", "star-harm", "star-sh".
std::string to_string(Flavor f);
/// Also accepts "shuffle" for sh. Throws ParseError.
Flavor parse_flavor(const std::string& text);

/// How the sh flavor is computed: by the word recursion, or as rho(zeta_harm).
enum class ShuffleRoute { direct, via_rho };

struct IdentityLimits {
    int max_perm_depth = 5;      // symmetric sums run over r! orderings
    int max_partition_size = 8;  // partition sums run over Bell(r) partitions
};

/// H(K; Pi; T): product over blocks P of e(sum_{p in P} k_p; T). With
/// shuffle = true each factor is multiplied by chi*, which vanishes on a block of
/// two or more positions whose parts are all 1.
MzvSymbolPoly zeta_part(const Index& k, const SetPartition& pi, bool shuffle);

/// The regularized polynomial of a single index in the given flavor.
///   harm:      stuffle recursion
///   star-harm: sum of harm over contractions
///   sh:        word recursion, or rho(harm) with ShuffleRoute::via_rho
///   star-sh:   rho_bar*(star-harm)
/// series_order < 0 lets the series maps pick the polynomial degree.
MzvSymbolPoly regularized(const Index& k, Flavor f, ShuffleRoute route = ShuffleRoute::direct, int series_order = -1);

/// Sum over all r! orderings of K of the regularized polynomial.
MzvSymbolPoly symmetric_sum_symbolic(const Index& k, Flavor f, const IdentityLimits& limits = {},
                                     ShuffleRoute route = ShuffleRoute::direct);
/// Sum over partitions Pi of {1..r} of c(Pi) H (harm, sh) or c*(Pi) H (star flavors),
/// with H the harmonic part for harm flavors and the chi*-weighted part otherwise.
MzvSymbolPoly partition_sum_symbolic(const Index& k, Flavor f, const IdentityLimits& limits = {});

TPoly<Approx> symmetric_sum(const Index& k, Flavor f, const ZetaEvaluator& ev, const IdentityLimits& limits = {},
                            ShuffleRoute route = ShuffleRoute::direct);
TPoly<Approx> partition_sum(const Index& k, Flavor f, const ZetaEvaluator& ev, const IdentityLimits& limits = {});

/// One compared coefficient of T^power.
struct CoefficientCheck {
    int power = 0;
    std::string lhs;        // decimal value (or exact text)
    std::string rhs;
    std::string deviation;  // |lhs - rhs|
    std::string bound;      // summed error bound of both sides
    bool pass = false;
};

struct IdentityReport {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> params;
    bool exact = false;  // compared exactly rather than numerically
    bool pass = false;
    std::vector<CoefficientCheck> coefficients;
    std::string max_deviation = "0";
    std::string bound = "0";
    double tolerance = 0;
    double elapsed = 0;  // seconds
    std::string note;

    /// {identity, params, exact, pass, max_deviation, bound, tolerance, elapsed, note, coefficients}.
    std::string to_json() const;
    /// One summary line plus one line per coefficient.
    std::string to_text() const;
};

/// Parameters understood by verify; unused fields are ignored.
struct VerifyParams {
    std::optional<Index> index;
    std::optional<int> k;
    std::optional<int> l;
    std::optional<int> r;
    std::optional<std::vector<int>> subset;  // B for prop1/prop2
    ShuffleRoute route = ShuffleRoute::direct;

    /// {"index": "1,2", "k": 2, "l": 3, "r": 4, "B": [3,4], "route": "direct"|"rho"}.
    static VerifyParams from_json(const std::string& text);
};

struct VerifyOptions {
    /// Largest accepted per-coefficient deviation and error bound; <= 0 uses the
    /// evaluator tolerance.
    double tolerance = 0;
    IdentityLimits limits;
};

/// Names accepted by verify, in suite order.
const std::vector<std::string>& identity_names();

/// Builds both sides of the named identity and compares them. Capacity and
/// accuracy failures are reported as failed checks with the reason in `note`;
/// unknown names and missing parameters raise DomainError.
IdentityReport verify(const std::string& name, const VerifyParams& params, const ZetaEvaluator& ev,
                      const VerifyOptions& options = {});

/// The three Example 1 displays for k in ks (rows 1 and 3) and pairs (k, l) in
/// ks x ls (row 2). Each report compares the literal right-hand side built from
/// single zeta values against the left-hand side built by the star regularizations.
std::vector<IdentityReport> example1_table(const std::vector<int>& ks, const std::vector<int>& ls,
                                           const ZetaEvaluator& ev, const VerifyOptions& options = {});
std::string example1_table_text(const std::vector<IdentityReport>& rows);

struct SuiteResult {
    std::vector<IdentityReport> reports;
    int passed = 0;
    int failed = 0;
};

/// The full acceptance matrix, run on `jobs` threads sharing the evaluator cache.
SuiteResult run_suite(const ZetaEvaluator& ev, int jobs = 1, const VerifyOptions& options = {});

}  // namespace mzvreg
