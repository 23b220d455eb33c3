#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <string>
#include <thread>
#include <vector>

#include "mzvreg/mzvreg.h"

using nlohmann::json;

namespace {

struct Ctx {
    mzvreg_context* ctx = nullptr;
    explicit Ctx(const mzvreg_config* cfg = nullptr) {
        mzvreg_config def;
        mzvreg_config_default(&def);
        REQUIRE(mzvreg_context_create(cfg ? cfg : &def, &ctx) == MZVREG_OK);
    }
    ~Ctx() { mzvreg_context_destroy(ctx); }
};

std::string take(char* s) {
    std::string out = s ? s : "";
    mzvreg_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("defaults and configuration errors") {
    mzvreg_config cfg;
    mzvreg_config_default(&cfg);
    CHECK(cfg.prec_bits == 128);
    CHECK(cfg.trunc == 100000);
    CHECK(cfg.tail_order == 8);
    CHECK(cfg.series_order == -1);
    CHECK(cfg.tolerance == 1e-9);
    CHECK(std::string(mzvreg_version()).size() > 0);

    mzvreg_context* ctx = nullptr;
    cfg.prec_bits = 2;
    CHECK(mzvreg_context_create(&cfg, &ctx) == MZVREG_ERR_ARGUMENT);
    CHECK(ctx == nullptr);
    CHECK(std::string(mzvreg_last_error(nullptr)).size() > 0);
    CHECK(mzvreg_context_create(nullptr, &ctx) == MZVREG_OK);  // defaults
    mzvreg_context_destroy(ctx);
    CHECK(mzvreg_context_create(&cfg, nullptr) == MZVREG_ERR_ARGUMENT);

    Ctx c;
    char* out = nullptr;
    REQUIRE(mzvreg_describe_config(c.ctx, &out) == MZVREG_OK);
    CHECK(take(out).find("prec_bits=128") != std::string::npos);
}

TEST_CASE("eval") {
    Ctx c;
    char* out = nullptr;
    REQUIRE(mzvreg_eval(c.ctx, "mzv", "1,2", &out) == MZVREG_OK);
    json j = json::parse(take(out));
    CHECK(std::stod(j["value"].get<std::string>()) == doctest::Approx(1.2020569031595942));
    CHECK(std::stod(j["bound"].get<std::string>()) < 1e-9);

    REQUIRE(mzvreg_eval(c.ctx, "zeta", "2", &out) == MZVREG_OK);
    CHECK(std::stod(json::parse(take(out))["value"].get<std::string>()) == doctest::Approx(1.6449340668482264));
    REQUIRE(mzvreg_eval(c.ctx, "mzsv", "2,2", &out) == MZVREG_OK);
    CHECK(std::stod(json::parse(take(out))["value"].get<std::string>()) == doctest::Approx(1.8940656589944918));

    CHECK(mzvreg_eval(c.ctx, "mzv", "2,1", &out) == MZVREG_ERR_DOMAIN);
    CHECK(std::string(mzvreg_last_error(c.ctx)).find("non-admissible") != std::string::npos);
    CHECK(mzvreg_eval(c.ctx, "mzv", "1,,2", &out) == MZVREG_ERR_PARSE);
    CHECK(mzvreg_eval(c.ctx, "bogus", "2", &out) == MZVREG_ERR_PARSE);
    CHECK(mzvreg_eval(c.ctx, "zeta", "1", &out) == MZVREG_ERR_DOMAIN);
    CHECK(mzvreg_eval(nullptr, "mzv", "2", &out) == MZVREG_ERR_ARGUMENT);
    CHECK(mzvreg_eval(c.ctx, "mzv", "2", nullptr) == MZVREG_ERR_ARGUMENT);
}

TEST_CASE("accuracy errors surface as a status") {
    mzvreg_config cfg;
    mzvreg_config_default(&cfg);
    cfg.prec_bits = 64;
    cfg.trunc = 100;
    cfg.tail_order = 1;
    cfg.tolerance = 1e-30;
    Ctx c(&cfg);
    char* out = nullptr;
    CHECK(mzvreg_eval(c.ctx, "mzv", "1,2", &out) == MZVREG_ERR_ACCURACY);
}

TEST_CASE("reg") {
    Ctx c;
    char* out = nullptr;
    REQUIRE(mzvreg_reg(c.ctx, "star-sh", "2,1", nullptr, &out) == MZVREG_OK);
    json j = json::parse(take(out));
    CHECK(j["symbolic"] == "ζ(2)·T − ζ(1,2)");
    REQUIRE(j["numeric"].size() == 2);
    REQUIRE(mzvreg_reg(c.ctx, "harm", "1", nullptr, &out) == MZVREG_OK);
    CHECK(json::parse(take(out))["symbolic"] == "T");
    REQUIRE(mzvreg_reg(c.ctx, "shuffle", "2,1", "direct", &out) == MZVREG_OK);
    CHECK(json::parse(take(out))["symbolic"] == "ζ(2)·T − 2ζ(1,2)");
    REQUIRE(mzvreg_reg(c.ctx, "shuffle", "2,1", "rho", &out) == MZVREG_OK);
    CHECK(json::parse(take(out))["symbolic"] == "ζ(2)·T − ζ(3) − ζ(1,2)");
    CHECK(mzvreg_reg(c.ctx, "shuffle", "2,1", "sideways", &out) == MZVREG_ERR_PARSE);
    CHECK(mzvreg_reg(c.ctx, "nope", "2,1", nullptr, &out) == MZVREG_ERR_PARSE);
}

TEST_CASE("verify and the example table") {
    Ctx c;
    char *out = nullptr, *text = nullptr;
    int passed = 0;
    REQUIRE(mzvreg_verify(c.ctx, "theorem1", R"({"index":"1,2"})", &out, &text, &passed) == MZVREG_OK);
    CHECK(passed == 1);
    const std::string js = take(out);
    CHECK(json::parse(js).dump() == js);
    CHECK(take(text).rfind("PASS", 0) == 0);
    REQUIRE(mzvreg_verify(c.ctx, "remark-bell", R"({"r":5})", &out, nullptr, &passed) == MZVREG_OK);
    take(out);
    CHECK(passed == 1);
    CHECK(mzvreg_verify(c.ctx, "nonsense", "{}", &out, nullptr, &passed) == MZVREG_ERR_DOMAIN);
    CHECK(mzvreg_verify(c.ctx, "theorem1", "{oops", &out, nullptr, &passed) == MZVREG_ERR_PARSE);

    int ok = 0;
    REQUIRE(mzvreg_example1_table(c.ctx, "2,3", "2", &out, &text, &ok) == MZVREG_OK);
    CHECK(ok == 1);
    CHECK(json::parse(take(out)).size() == 2 + 2 + 2);
    take(text);
    CHECK(mzvreg_example1_table(c.ctx, "1", "2", &out, &text, &ok) == MZVREG_ERR_DOMAIN);
}

TEST_CASE("partitions and Bell data") {
    Ctx c;
    char* out = nullptr;
    REQUIRE(mzvreg_partitions(c.ctx, "1,2,3", "3,4", &out) == MZVREG_OK);
    json j = json::parse(take(out));
    CHECK(j["count"] == 3);
    REQUIRE(mzvreg_partitions(c.ctx, "1,2,3,4", nullptr, &out) == MZVREG_OK);
    j = json::parse(take(out));
    CHECK(j["count"] == 15);
    CHECK(j["partitions"][0]["blocks"].is_array());
    CHECK(mzvreg_partitions(c.ctx, "1,1", nullptr, &out) == MZVREG_ERR_DOMAIN);

    REQUIRE(mzvreg_bell(c.ctx, 4, 2, &out) == MZVREG_OK);
    j = json::parse(take(out));
    CHECK(j["partial"] == "4·x1·x3 + 3·x2^2");
    CHECK(j["stirling_second"] == "7");
    REQUIRE(mzvreg_bell(c.ctx, 5, 0, &out) == MZVREG_OK);
    j = json::parse(take(out));
    CHECK(j["bell_number"] == "52");
    CHECK(mzvreg_bell(c.ctx, 3, 4, &out) == MZVREG_ERR_DOMAIN);
}

TEST_CASE("identity names") {
    Ctx c;
    char* out = nullptr;
    REQUIRE(mzvreg_identity_names(c.ctx, &out) == MZVREG_OK);
    const std::string names = take(out);
    for (const char* n : {"theorem1", "corollary1", "prop3-1", "lemma1", "remark-bell", "prop1", "prop2"})
        CHECK(names.find(n) != std::string::npos);
}

TEST_CASE("cache persistence") {
    const auto path = (std::filesystem::temp_directory_path() / "mzvreg_c_api_cache.json").string();
    std::filesystem::remove(path);
    std::string first;
    {
        Ctx c;
        size_t loaded = 7;
        REQUIRE(mzvreg_cache_load(c.ctx, path.c_str(), &loaded) == MZVREG_OK);
        CHECK(loaded == 0);
        char* out = nullptr;
        REQUIRE(mzvreg_eval(c.ctx, "mzv", "1,1,2", &out) == MZVREG_OK);
        first = json::parse(take(out))["value"];
        REQUIRE(mzvreg_cache_save(c.ctx, path.c_str()) == MZVREG_OK);
    }
    {
        Ctx c;
        size_t loaded = 0;
        REQUIRE(mzvreg_cache_load(c.ctx, path.c_str(), &loaded) == MZVREG_OK);
        CHECK(loaded >= 1);
        char* out = nullptr;
        REQUIRE(mzvreg_eval(c.ctx, "mzv", "1,1,2", &out) == MZVREG_OK);
        CHECK(json::parse(take(out))["value"] == first);
    }
    std::filesystem::remove(path);
}

TEST_CASE("a context is shared across threads") {
    Ctx c;
    std::vector<std::string> values(4);
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < values.size(); ++i)
        threads.emplace_back([&, i] {
            char* out = nullptr;
            if (mzvreg_eval(c.ctx, "mzv", "1,2,2", &out) == MZVREG_OK)
                values[i] = json::parse(take(out))["value"];
        });
    for (auto& t : threads)
        t.join();
    for (const auto& v : values)
        CHECK(v == values.front());
    CHECK_FALSE(values.front().empty());
}
