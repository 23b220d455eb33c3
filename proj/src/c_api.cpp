#include "mzvreg/mzvreg.h"

#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "json_io.hpp"
#include "mzvreg/bell.hpp"
#include "mzvreg/error.hpp"
#include "mzvreg/identities.hpp"
#include "mzvreg/poly_expr.hpp"
#include "mzvreg/zeta_numerics.hpp"

using nlohmann::json;
using namespace mzvreg;

struct mzvreg_context {
    mzvreg_config cfg;
    std::shared_ptr<ZetaCache> cache;
    std::unique_ptr<ZetaEvaluator> ev;
    VerifyOptions options;
};

namespace {

thread_local std::string t_last_error;

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

mzvreg_status fail(mzvreg_status code, const std::string& msg) {
    t_last_error = msg;
    return code;
}

template <class F>
mzvreg_status guarded(F&& body) {
    t_last_error.clear();
    try {
        body();
        return MZVREG_OK;
    } catch (const Error& e) {
        switch (e.code()) {
            case ErrorCode::domain:
                return fail(MZVREG_ERR_DOMAIN, e.what());
            case ErrorCode::capacity:
                return fail(MZVREG_ERR_CAPACITY, e.what());
            case ErrorCode::accuracy:
                return fail(MZVREG_ERR_ACCURACY, e.what());
            case ErrorCode::parse:
                return fail(MZVREG_ERR_PARSE, e.what());
        }
        return fail(MZVREG_ERR_INTERNAL, e.what());
    } catch (const std::bad_alloc&) {
        return fail(MZVREG_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(MZVREG_ERR_INTERNAL, e.what());
    }
}

void require(bool ok, const char* what) {
    if (!ok)
        throw DomainError(what);
}

std::vector<int> parse_int_list(const char* text) {
    const Index k = Index::parse(text ? text : "");
    return k.parts();
}

std::vector<int> parse_set(const char* text) {
    std::string s = text ? text : "";
    std::vector<int> out;
    std::size_t start = 0;
    while (start < s.size()) {
        std::size_t c = s.find(',', start);
        if (c == std::string::npos)
            c = s.size();
        const std::string tok = s.substr(start, c - start);
        char* end = nullptr;
        const long v = std::strtol(tok.c_str(), &end, 10);
        if (tok.empty() || *end != '\0')
            throw ParseError("malformed set '" + s + "'");
        out.push_back(static_cast<int>(v));
        start = c + 1;
    }
    return normalize_set(out);
}

std::string numeric_text(const TPoly<Approx>& p) {
    return format_tpoly<Approx>(p, [](const Approx& a) {
        const bool neg = a.value.sign() < 0;
        return std::vector<std::pair<bool, std::string>>{{neg, abs(a.value).to_string(20)}};
    });
}

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string poly_text(const PolyExpr<int>& p) {
    return p.to_string([](const int& i) { return "x" + std::to_string(i); }, "·");
}

}  // namespace

extern "C" {

void mzvreg_config_default(mzvreg_config* cfg) {
    if (!cfg)
        return;
    const PrecisionConfig pc;
    const IdentityLimits lim;
    cfg->prec_bits = pc.prec_bits;
    cfg->trunc = pc.trunc;
    cfg->tail_order = pc.tail_order;
    cfg->series_order = -1;
    cfg->tolerance = pc.tolerance;
    cfg->jobs = 1;
    cfg->max_perm_depth = lim.max_perm_depth;
    cfg->max_partition_size = lim.max_partition_size;
}

const char* mzvreg_version(void) { return "1.0.0"; }

mzvreg_status mzvreg_context_create(const mzvreg_config* cfg, mzvreg_context** out) {
    if (!out)
        return fail(MZVREG_ERR_ARGUMENT, "null output pointer");
    *out = nullptr;
    mzvreg_config c;
    mzvreg_config_default(&c);
    if (cfg)
        c = *cfg;
    if (c.jobs < 1 || c.max_perm_depth < 1 || c.max_partition_size < 1 || c.series_order < -1)
        return fail(MZVREG_ERR_ARGUMENT, "jobs, max_perm_depth and max_partition_size must be positive; series_order >= -1");
    PrecisionConfig pc{c.prec_bits, c.trunc, c.tail_order, c.tolerance};
    try {
        pc.validate();
    } catch (const Error& e) {
        return fail(MZVREG_ERR_ARGUMENT, e.what());
    }
    return guarded([&] {
        auto ctx = std::make_unique<mzvreg_context>();
        ctx->cfg = c;
        ctx->cache = std::make_shared<ZetaCache>();
        ctx->ev = std::make_unique<ZetaEvaluator>(pc, ctx->cache);
        ctx->options.limits = {c.max_perm_depth, c.max_partition_size};
        *out = ctx.release();
    });
}

void mzvreg_context_destroy(mzvreg_context* ctx) { delete ctx; }

const char* mzvreg_last_error(const mzvreg_context*) { return t_last_error.c_str(); }

void mzvreg_string_free(char* s) { std::free(s); }

mzvreg_status mzvreg_describe_config(mzvreg_context* ctx, char** out) {
    if (!ctx || !out)
        return fail(MZVREG_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        std::ostringstream os;
        os << ctx->ev->config().describe() << " series_order="
           << (ctx->cfg.series_order < 0 ? std::string("auto") : std::to_string(ctx->cfg.series_order))
           << " jobs=" << ctx->cfg.jobs << " max_perm_depth=" << ctx->cfg.max_perm_depth
           << " max_partition_size=" << ctx->cfg.max_partition_size;
        *out = dup(os.str());
    });
}

mzvreg_status mzvreg_eval(mzvreg_context* ctx, const char* kind, const char* index, char** out_json) {
    if (!ctx || !kind || !index || !out_json)
        return fail(MZVREG_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const std::string kd = kind;
        const Index k = Index::parse(index);
        const auto t0 = std::chrono::steady_clock::now();
        Approx v;
        if (kd == "mzv") {
            require(!k.empty(), "empty index");
            v = ctx->ev->mzv(k);
        } else if (kd == "mzsv") {
            require(!k.empty(), "empty index");
            v = ctx->ev->mzsv(k);
        } else if (kd == "zeta") {
            require(k.depth() == 1, "zeta takes a single integer m >= 2");
            v = ctx->ev->zeta_single(k[0]);
        } else {
            throw ParseError("unknown kind '" + kd + "' (expected mzv, mzsv or zeta)");
        }
        json j = jsonio::to_json(v);
        j["kind"] = kd;
        j["index"] = k.to_string();
        j["elapsed"] = since(t0);
        *out_json = dup(j.dump());
    });
}

mzvreg_status mzvreg_reg(mzvreg_context* ctx, const char* flavor, const char* index, const char* route,
                         char** out_json) {
    if (!ctx || !flavor || !index || !out_json)
        return fail(MZVREG_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const Flavor f = parse_flavor(flavor);
        ShuffleRoute rt = ShuffleRoute::direct;
        if (route && std::string(route) == "rho")
            rt = ShuffleRoute::via_rho;
        else if (route && std::string(route) != "direct")
            throw ParseError(std::string("route must be 'direct' or 'rho', got '") + route + "'");
        const Index k = Index::parse(index);
        require(!k.empty(), "empty index");
        const auto t0 = std::chrono::steady_clock::now();
        const MzvSymbolPoly p = regularized(k, f, rt, ctx->cfg.series_order);
        const TPoly<Approx> num = ctx->ev->evaluate(p);
        json j = {{"flavor", to_string(f)},
                  {"index", k.to_string()},
                  {"symbolic", to_string(p)},
                  {"coefficients", jsonio::to_json(p)},
                  {"numeric_text", numeric_text(num)},
                  {"numeric", jsonio::to_json(num)},
                  {"elapsed", since(t0)}};
        *out_json = dup(j.dump());
    });
}

mzvreg_status mzvreg_verify(mzvreg_context* ctx, const char* name, const char* params_json, char** out_json,
                            char** out_text, int* passed) {
    if (!ctx || !name || !out_json)
        return fail(MZVREG_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const VerifyParams params = VerifyParams::from_json(params_json ? params_json : "");
        const IdentityReport rep = verify(name, params, *ctx->ev, ctx->options);
        *out_json = dup(rep.to_json());
        if (out_text)
            *out_text = dup(rep.to_text());
        if (passed)
            *passed = rep.pass ? 1 : 0;
    });
}

mzvreg_status mzvreg_example1_table(mzvreg_context* ctx, const char* ks, const char* ls, char** out_json,
                                    char** out_text, int* all_passed) {
    if (!ctx || !ks || !ls || !out_json)
        return fail(MZVREG_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const auto rows = example1_table(parse_int_list(ks), parse_int_list(ls), *ctx->ev, ctx->options);
        json arr = json::array();
        bool ok = true;
        for (const auto& r : rows) {
            arr.push_back(json::parse(r.to_json()));
            ok = ok && r.pass;
        }
        *out_json = dup(arr.dump());
        if (out_text)
            *out_text = dup(example1_table_text(rows));
        if (all_passed)
            *all_passed = ok ? 1 : 0;
    });
}

mzvreg_status mzvreg_partitions(mzvreg_context* ctx, const char* set, const char* restrict_to, char** out_json) {
    if (!ctx || !set || !out_json)
        return fail(MZVREG_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const std::vector<int> a = parse_set(set);
        std::vector<SetPartition> parts;
        json j;
        if (restrict_to) {
            const std::vector<int> b = parse_set(restrict_to);
            parts = enum_restricted_partitions(a, b);
            j["restrict"] = b;
        } else {
            parts = enum_set_partitions(a);
            j["restrict"] = nullptr;
        }
        j["set"] = a;
        j["count"] = parts.size();
        json arr = json::array();
        for (const auto& pi : parts) {
            arr.push_back({{"blocks", jsonio::to_json(pi)},
                           {"text", pi.to_text()},
                           {"c", coeff_c(pi).get_str()},
                           {"c_star", coeff_c_star(pi).get_str()}});
        }
        j["partitions"] = arr;
        *out_json = dup(j.dump());
    });
}

mzvreg_status mzvreg_bell(mzvreg_context* ctx, int r, int k, char** out_json) {
    if (!ctx || !out_json)
        return fail(MZVREG_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        if (r < 0 || r > 30)
            throw DomainError("bell needs 0 <= r <= 30");
        std::vector<PolyExpr<int>> xs;
        for (int i = 1; i <= std::max(r, 1); ++i)
            xs.push_back(PolyExpr<int>::symbol(i));
        json j = {{"r", r}, {"bell_number", bell_number(r).get_str()}};
        if (k > 0) {
            j["k"] = k;
            j["partial"] = poly_text(bell_partial<PolyExpr<int>>(r, k, xs));
            j["stirling_first"] = stirling_first_unsigned(r, k).get_str();
            j["stirling_second"] = stirling_second(r, k).get_str();
            json shapes = json::array();
            for (const auto& shape : partition_shapes(r, k))
                shapes.push_back({{"shape", shape}, {"count", partition_shape_count(r, k, shape).get_str()}});
            j["shapes"] = shapes;
        } else {
            j["complete"] = poly_text(bell_complete<PolyExpr<int>>(r, xs));
            json s1 = json::array(), s2 = json::array();
            for (int kk = 1; kk <= r; ++kk) {
                s1.push_back(stirling_first_unsigned(r, kk).get_str());
                s2.push_back(stirling_second(r, kk).get_str());
            }
            j["stirling_first"] = s1;
            j["stirling_second"] = s2;
        }
        *out_json = dup(j.dump());
    });
}

mzvreg_status mzvreg_suite(mzvreg_context* ctx, char** out_json, char** out_text, int* passed, int* failed) {
    if (!ctx || !out_json)
        return fail(MZVREG_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const SuiteResult res = run_suite(*ctx->ev, ctx->cfg.jobs, ctx->options);
        json arr = json::array();
        std::string text;
        for (const auto& r : res.reports) {
            arr.push_back(json::parse(r.to_json()));
            text += r.to_text() + "\n";
        }
        *out_json = dup(json{{"passed", res.passed}, {"failed", res.failed}, {"reports", arr}}.dump());
        if (out_text)
            *out_text = dup(text);
        if (passed)
            *passed = res.passed;
        if (failed)
            *failed = res.failed;
    });
}

mzvreg_status mzvreg_cache_load(mzvreg_context* ctx, const char* path, size_t* loaded) {
    if (!ctx || !path)
        return fail(MZVREG_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        const std::size_t n = ctx->cache->load(path);
        if (loaded)
            *loaded = n;
    });
}

mzvreg_status mzvreg_cache_save(mzvreg_context* ctx, const char* path) {
    if (!ctx || !path)
        return fail(MZVREG_ERR_ARGUMENT, "null argument");
    return guarded([&] { ctx->cache->save(path); });
}

mzvreg_status mzvreg_identity_names(mzvreg_context* ctx, char** out) {
    if (!ctx || !out)
        return fail(MZVREG_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        std::string s;
        for (const auto& n : identity_names())
            s += n + "\n";
        *out = dup(s);
    });
}

}  // extern "C"
