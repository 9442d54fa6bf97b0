#include <halfpot.h>

#include <doctest.h>

#include <json.hpp>

#include <cstring>
#include <string>

namespace {

struct Str {
    char* p = nullptr;
    ~Str() { hp_string_free(p); }
    std::string get() const { return p ? std::string(p) : std::string(); }
};

}  // namespace

TEST_CASE("chain handle lifecycle and accessors") {
    hp_chain* chain = nullptr;
    REQUIRE(hp_chain_build(3, -2, 3, &chain) == HP_OK);
    REQUIRE(chain != nullptr);
    CHECK(hp_chain_ambient_dim(chain) == 3);
    CHECK(hp_chain_from(chain) == -2);
    CHECK(hp_chain_to(chain) == 3);
    hp_chain_free(chain);
}

TEST_CASE("invalid arguments surface as status codes with messages") {
    hp_chain* chain = nullptr;
    CHECK(hp_chain_build(5, -1, 1, &chain) == HP_ERROR_INVALID_ARGUMENT);
    CHECK(chain == nullptr);
    CHECK(std::strlen(hp_last_error()) > 0);
    CHECK(hp_chain_build(3, 4, -4, &chain) == HP_ERROR_INVALID_ARGUMENT);
    CHECK(hp_chain_build(3, 0, 1, nullptr) == HP_ERROR_INVALID_ARGUMENT);

    REQUIRE(hp_chain_build(4, -1, 1, &chain) == HP_OK);
    Str out;
    CHECK(hp_chain_render(chain, "yaml", &out.p) == HP_ERROR_INVALID_ARGUMENT);
    hp_chain_free(chain);
}

TEST_CASE("render formats") {
    hp_chain* chain = nullptr;
    REQUIRE(hp_chain_build(3, -2, 2, &chain) == HP_OK);

    Str json, latex, text, boundary, formulas;
    REQUIRE(hp_chain_render(chain, "json", &json.p) == HP_OK);
    REQUIRE(hp_chain_render(chain, "latex", &latex.p) == HP_OK);
    REQUIRE(hp_chain_render(chain, "text", &text.p) == HP_OK);
    REQUIRE(hp_chain_boundary(chain, "text", &boundary.p) == HP_OK);
    REQUIRE(hp_chain_formulas(chain, "latex", &formulas.p) == HP_OK);

    auto parsed = nlohmann::json::parse(json.get());
    CHECK(parsed["ambient_dimension"] == 3);
    CHECK(latex.get().find("\\documentclass") != std::string::npos);
    CHECK(text.get().find("level 0") != std::string::npos);
    CHECK(boundary.get().find("E_{0}") != std::string::npos);
    CHECK(formulas.get().find("2\\pi A_2") != std::string::npos);
    hp_chain_free(chain);
}

TEST_CASE("identical builds render byte-identically") {
    hp_chain *a = nullptr, *b = nullptr;
    REQUIRE(hp_chain_build(4, -3, 3, &a) == HP_OK);
    REQUIRE(hp_chain_build(4, -3, 3, &b) == HP_OK);
    Str ja, jb;
    REQUIRE(hp_chain_render(a, "json", &ja.p) == HP_OK);
    REQUIRE(hp_chain_render(b, "json", &jb.p) == HP_OK);
    CHECK(ja.get() == jb.get());
    hp_chain_free(a);
    hp_chain_free(b);
}

TEST_CASE("verification through the C surface") {
    hp_chain* chain = nullptr;
    REQUIRE(hp_chain_build(3, -3, 3, &chain) == HP_OK);
    int all_pass = 0;
    Str report;
    REQUIRE(hp_chain_verify(chain, 0, &all_pass, &report.p) == HP_OK);
    CHECK(all_pass == 1);
    auto parsed = nlohmann::json::parse(report.get());
    CHECK(parsed["all_pass"] == true);
    CHECK(parsed["items"].size() > 0);
    hp_chain_free(chain);
}

TEST_CASE("version string") {
    CHECK(std::strlen(hp_version()) > 0);
}
