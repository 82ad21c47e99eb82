#include <catch2/catch_amalgamated.hpp>

#include <srglab/catalog.hpp>
#include <srglab/feasibility.hpp>
#include <srglab/theta.hpp>

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <map>
#include <set>

using namespace srglab;

TEST_CASE("builtin catalog is well formed") {
    const auto& cat = builtin_catalog();
    CHECK(cat.size() == 21);
    std::set<std::string> names;
    for (const auto& e : cat) {
        CAPTURE(e.name);
        CHECK(names.insert(e.name).second); // unique
        CHECK_NOTHROW(validate(e.params));
        CHECK(feasibility(e.params).feasible);
        CHECK(std::abs(product_identity_check(e.params)) < 1e-9);
    }
    CHECK(catalog_lookup("petersen").has_value());
    CHECK(catalog_lookup("petersen")->params == SrgParams{10, 3, 0, 1});
    CHECK_FALSE(catalog_lookup("nonesuch").has_value());
}

TEST_CASE("symplectic complement entries match the closed forms") {
    for (const auto& e : builtin_catalog()) {
        if (e.name.rfind("sp-complement-", 0) != 0) continue;
        auto rest = e.name.substr(14);
        auto dash = rest.find('-');
        int n = std::stoi(rest.substr(0, dash));
        long long q = std::stoll(rest.substr(dash + 1));
        CHECK(e.params == symplectic_complement_params(n, q));
        // known alpha equals theta(H) exactly
        CHECK(static_cast<double>(e.known.at("alpha")) ==
              Catch::Approx(theta_srg(e.params)).margin(1e-9));
        CHECK(static_cast<double>(e.known.at("chi")) ==
              Catch::Approx(theta_srg_complement(e.params)).margin(1e-9));
    }
}

TEST_CASE("bundled catalog file mirrors the builtin table") {
    std::ifstream in(SRGLAB_CATALOG_FILE);
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    REQUIRE(j.contains("families"));
    const auto& fams = j["families"];
    const auto& cat = builtin_catalog();
    REQUIRE(fams.size() == cat.size());
    for (size_t i = 0; i < cat.size(); ++i) {
        CAPTURE(cat[i].name);
        CHECK(fams[i]["name"] == cat[i].name);
        CHECK(fams[i]["note"] == cat[i].note);
        REQUIRE(fams[i]["params"].size() == 4);
        CHECK(fams[i]["params"][0] == cat[i].params.n);
        CHECK(fams[i]["params"][1] == cat[i].params.d);
        CHECK(fams[i]["params"][2] == cat[i].params.lambda);
        CHECK(fams[i]["params"][3] == cat[i].params.mu);
        std::map<std::string, long long> known;
        for (auto& [k, v] : fams[i]["known"].items()) known[k] = v.get<long long>();
        CHECK(known == cat[i].known);
    }
}
