// Command-line front end. Talks to the library only through the C interface.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "mzvreg/mzvreg.h"

using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Owns a string returned by the library.
struct LibString {
    char* p = nullptr;
    ~LibString() { mzvreg_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

struct Options {
    mzvreg_config cfg{};
    bool json_out = false;
    std::string cache_path;
};

int report_error(mzvreg_status st, const std::string& context) {
    std::cerr << "error: " << context << ": " << mzvreg_last_error(nullptr) << " (status " << st << ")\n";
    return kExitUsage;
}

std::string index_symbol(const std::string& kind, const std::string& index) {
    if (kind == "mzsv")
        return "ζ*(" + index + ")";
    return "ζ(" + index + ")";
}

std::string short_num(const std::string& s) {
    // Decimal strings from the library use scientific notation; keep them as is.
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    mzvreg_config_default(&opt.cfg);

    CLI::App app{"Regularized multiple zeta values and symmetric-sum identity checks"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--prec-bits", opt.cfg.prec_bits, "working precision in bits")->check(CLI::Range(24L, 65536L));
    app.add_option("--trunc", opt.cfg.trunc, "truncation cap N of the nested sums")->check(CLI::Range(10L, 1000000000L));
    app.add_option("--tail-order", opt.cfg.tail_order, "order of the 1/N tail expansion")->check(CLI::Range(0, 64));
    app.add_option("--series-order", opt.cfg.series_order, "order of the rho-type series (-1: polynomial degree)")
        ->check(CLI::Range(-1, 64));
    app.add_option("--tol", opt.cfg.tolerance, "accepted error bound")->check(CLI::PositiveNumber);
    app.add_option("--jobs", opt.cfg.jobs, "worker threads for suite")->check(CLI::Range(1, 256));
    app.add_option("--max-depth", opt.cfg.max_perm_depth, "largest depth for symmetric sums")->check(CLI::Range(1, 9));
    app.add_option("--max-partition", opt.cfg.max_partition_size, "largest r for partition sums")
        ->check(CLI::Range(1, 14));
    app.add_flag("--json", opt.json_out, "emit JSON lines");
    app.add_option("--cache", opt.cache_path, "zeta cache file: loaded before and saved after the run");

    std::string eval_kind, eval_index;
    auto* eval = app.add_subcommand("eval", "evaluate zeta(m), an MZV or an MZSV");
    eval->add_option("kind", eval_kind, "mzv | mzsv | zeta")->required()->check(CLI::IsMember({"mzv", "mzsv", "zeta"}));
    eval->add_option("index", eval_index, "k1,k2,...,kr (the last part is the one on the largest variable)")
        ->required();

    std::string reg_flavor, reg_index, reg_route = "direct";
    auto* reg = app.add_subcommand("reg", "regularization polynomial in T");
    reg->add_option("flavor", reg_flavor, "harm | star-harm | shuffle | star-sh")
        ->required()
        ->check(CLI::IsMember({"harm", "star-harm", "shuffle", "sh", "star-sh"}));
    reg->add_option("index", reg_index, "k1,k2,...,kr")->required();
    reg->add_option("--route", reg_route, "shuffle route: direct | rho")->check(CLI::IsMember({"direct", "rho"}));

    std::string v_name, v_index, v_set, v_route;
    std::optional<int> v_k, v_l, v_r;
    bool v_list = false;
    auto* ver = app.add_subcommand("verify", "verify one identity");
    ver->add_option("identity", v_name, "identity name (see --list)");
    ver->add_flag("--list", v_list, "list identity names");
    ver->add_option("--index", v_index, "index k1,...,kr");
    ver->add_option("--k", v_k, "parameter k");
    ver->add_option("--l", v_l, "parameter l");
    ver->add_option("--r", v_r, "parameter r");
    ver->add_option("--B", v_set, "proper subset B of {1..r}, comma separated");
    ver->add_option("--route", v_route, "shuffle route: direct | rho")->check(CLI::IsMember({"direct", "rho"}));

    std::string t_ks = "2,3,4", t_ls = "2,3";
    auto* table = app.add_subcommand("table", "Example 1 reproduction");
    table->add_option("which", "table name (example1)")->check(CLI::IsMember({"example1"}));
    table->add_option("--k", t_ks, "values of k, comma separated");
    table->add_option("--l", t_ls, "values of l, comma separated");

    std::string p_set, p_restrict;
    auto* parts = app.add_subcommand("partitions", "enumerate set partitions with c and c*");
    parts->add_option("set", p_set, "comma separated set, e.g. 1,2,3")->required();
    parts->add_option("--restrict", p_restrict, "keep partitions with no block inside this set");

    int b_r = 0, b_k = 0;
    auto* bell = app.add_subcommand("bell", "Bell polynomials and Stirling numbers");
    bell->add_option("r", b_r, "r >= 0")->required();
    bell->add_option("k", b_k, "block count for the partial polynomial (optional)");

    app.add_subcommand("suite", "run the full verification matrix");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    mzvreg_context* ctx = nullptr;
    if (mzvreg_status st = mzvreg_context_create(&opt.cfg, &ctx); st != MZVREG_OK)
        return report_error(st, "configuration");
    struct Guard {
        mzvreg_context* c;
        ~Guard() { mzvreg_context_destroy(c); }
    } guard{ctx};

    {
        LibString cfg_text;
        mzvreg_describe_config(ctx, &cfg_text.p);
        if (opt.json_out)
            std::cout << json{{"config", cfg_text.str()}}.dump() << '\n';
        else
            std::cout << "# config: " << cfg_text.str() << '\n';
    }
    if (!opt.cache_path.empty()) {
        std::size_t loaded = 0;
        if (mzvreg_status st = mzvreg_cache_load(ctx, opt.cache_path.c_str(), &loaded); st != MZVREG_OK)
            return report_error(st, "cache");
        if (!opt.json_out)
            std::cout << "# cache: " << loaded << " entries loaded from " << opt.cache_path << '\n';
    }

    int code = kExitPass;
    const std::string sub = app.get_subcommands().front()->get_name();

    if (sub == "eval") {
        LibString out;
        if (auto st = mzvreg_eval(ctx, eval_kind.c_str(), eval_index.c_str(), &out.p); st != MZVREG_OK)
            return report_error(st, "eval");
        const json j = json::parse(out.str());
        if (opt.json_out) {
            std::cout << out.str() << '\n';
        } else {
            std::printf("%s = %s ± %s  (%.3f s)\n", index_symbol(eval_kind, j["index"]).c_str(),
                        j["value"].get<std::string>().c_str(), j["bound"].get<std::string>().c_str(),
                        j["elapsed"].get<double>());
        }
    } else if (sub == "reg") {
        LibString out;
        if (auto st = mzvreg_reg(ctx, reg_flavor.c_str(), reg_index.c_str(), reg_route.c_str(), &out.p);
            st != MZVREG_OK)
            return report_error(st, "reg");
        const json j = json::parse(out.str());
        if (opt.json_out) {
            std::cout << out.str() << '\n';
        } else {
            std::cout << "symbolic: " << j["symbolic"].get<std::string>() << '\n';
            std::cout << "numeric:  " << j["numeric_text"].get<std::string>() << '\n';
            std::printf("(%.3f s)\n", j["elapsed"].get<double>());
        }
    } else if (sub == "verify") {
        if (v_list) {
            LibString names;
            mzvreg_identity_names(ctx, &names.p);
            std::cout << names.str();
            return kExitPass;
        }
        if (v_name.empty()) {
            std::cerr << "error: verify needs an identity name (see verify --list)\n";
            return kExitUsage;
        }
        json params = json::object();
        if (!v_index.empty())
            params["index"] = v_index;
        if (v_k)
            params["k"] = *v_k;
        if (v_l)
            params["l"] = *v_l;
        if (v_r)
            params["r"] = *v_r;
        if (!v_route.empty())
            params["route"] = v_route;
        if (!v_set.empty()) {
            json b = json::array();
            std::size_t start = 0;
            while (start <= v_set.size()) {
                std::size_t c = v_set.find(',', start);
                if (c == std::string::npos)
                    c = v_set.size();
                try {
                    b.push_back(std::stoi(v_set.substr(start, c - start)));
                } catch (const std::exception&) {
                    std::cerr << "error: malformed --B '" << v_set << "'\n";
                    return kExitUsage;
                }
                start = c + 1;
            }
            params["B"] = b;
        }
        LibString out, text;
        int passed = 0;
        if (auto st = mzvreg_verify(ctx, v_name.c_str(), params.dump().c_str(), &out.p, &text.p, &passed);
            st != MZVREG_OK)
            return report_error(st, "verify");
        std::cout << (opt.json_out ? out.str() : text.str()) << '\n';
        code = passed ? kExitPass : kExitFail;
    } else if (sub == "table") {
        LibString out, text;
        int ok = 0;
        if (auto st = mzvreg_example1_table(ctx, t_ks.c_str(), t_ls.c_str(), &out.p, &text.p, &ok); st != MZVREG_OK)
            return report_error(st, "table");
        if (opt.json_out) {
            for (const auto& row : json::parse(out.str()))
                std::cout << row.dump() << '\n';
        } else {
            std::cout << text.str();
        }
        code = ok ? kExitPass : kExitFail;
    } else if (sub == "partitions") {
        LibString out;
        if (auto st = mzvreg_partitions(ctx, p_set.c_str(), p_restrict.empty() ? nullptr : p_restrict.c_str(), &out.p);
            st != MZVREG_OK)
            return report_error(st, "partitions");
        if (opt.json_out) {
            std::cout << out.str() << '\n';
        } else {
            const json j = json::parse(out.str());
            for (const auto& p : j["partitions"])
                std::printf("%-16s c=%-6s c*=%s\n", p["text"].get<std::string>().c_str(),
                            p["c"].get<std::string>().c_str(), p["c_star"].get<std::string>().c_str());
            std::cout << "count: " << j["count"].get<std::size_t>() << '\n';
        }
    } else if (sub == "bell") {
        LibString out;
        if (auto st = mzvreg_bell(ctx, b_r, b_k, &out.p); st != MZVREG_OK)
            return report_error(st, "bell");
        if (opt.json_out) {
            std::cout << out.str() << '\n';
        } else {
            const json j = json::parse(out.str());
            if (j.contains("partial")) {
                std::cout << "B_{" << b_r << "," << b_k << "} = " << j["partial"].get<std::string>() << '\n';
                std::cout << "unsigned Stirling first kind: " << j["stirling_first"].get<std::string>() << '\n';
                std::cout << "Stirling second kind: " << j["stirling_second"].get<std::string>() << '\n';
                for (const auto& s : j["shapes"])
                    std::cout << "shape " << s["shape"].dump() << ": " << s["count"].get<std::string>() << '\n';
            } else {
                std::cout << "Y_" << b_r << " = " << j["complete"].get<std::string>() << '\n';
                std::cout << "Bell(" << b_r << ") = " << j["bell_number"].get<std::string>() << '\n';
                std::cout << "unsigned Stirling first kind, k=1..r: " << j["stirling_first"].dump() << '\n';
                std::cout << "Stirling second kind, k=1..r: " << j["stirling_second"].dump() << '\n';
            }
        }
    } else if (sub == "suite") {
        LibString out, text;
        int passed = 0, failed = 0;
        if (auto st = mzvreg_suite(ctx, &out.p, &text.p, &passed, &failed); st != MZVREG_OK)
            return report_error(st, "suite");
        if (opt.json_out) {
            const json j = json::parse(out.str());
            for (const auto& r : j["reports"])
                std::cout << r.dump() << '\n';
            std::cout << json{{"passed", passed}, {"failed", failed}}.dump() << '\n';
        } else {
            std::cout << text.str();
            std::cout << "passed " << passed << ", failed " << failed << '\n';
        }
        code = failed == 0 ? kExitPass : kExitFail;
    }

    if (!opt.cache_path.empty()) {
        if (auto st = mzvreg_cache_save(ctx, opt.cache_path.c_str()); st != MZVREG_OK)
            return report_error(st, "cache");
    }
    return code;
}
