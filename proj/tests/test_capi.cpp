// Exercises the shared-library surface exactly as an external consumer
// would: through the C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include <json.hpp>

#include "hatsiegel/hatsiegel.h"

using nlohmann::json;

TEST_CASE("session lifecycle and tolerances") {
    CHECK(std::string(hs_version()) == "1.0.0");

    hs_session* s = hs_session_new();
    REQUIRE(s != nullptr);
    CHECK(std::string(hs_last_error(s)).empty());

    CHECK(hs_session_set_tolerance(s, 1e-12, 1e-11) == HS_OK);
    CHECK(hs_session_set_tolerance(s, -1.0, 1e-9) == HS_ERROR);
    CHECK_FALSE(std::string(hs_last_error(s)).empty());

    CHECK(hs_session_set_seed(s, 7) == HS_OK);
    hs_session_free(s);
    hs_session_free(nullptr); // harmless
}

TEST_CASE("typed entry points") {
    hs_session* s = hs_session_new();

    int inside = 0;
    CHECK(hs_point_check(s, 0, 2, 0, 1, &inside) == HS_OK);
    CHECK(inside == 1);
    CHECK(hs_point_check(s, 0, 1, 0, 2, &inside) == HS_OK);
    CHECK(inside == 0);

    double rho = 0;
    CHECK(hs_distance(s, 0, 1, 0, 0, 0, 2, 0, 0, &rho) == HS_OK);
    CHECK(std::abs(rho - std::sqrt(2.0) * std::log(2.0)) < 1e-12);
    CHECK(hs_distance(s, 0, -1, 0, 0, 0, 2, 0, 0, &rho) == HS_ERROR);

    int64_t dim = 0;
    CHECK(hs_section_dimension(s, "omega", 0.3, 2, 0.1, 1, &dim) == HS_OK);
    CHECK(dim == 3);
    CHECK(hs_section_dimension(s, "tau", 0.3, 2, 0.1, 0, &dim) == HS_OK);
    CHECK(dim == 1);
    CHECK(hs_section_dimension(s, "banana", 0, 2, 0, 1, &dim) == HS_ERROR);

    int64_t j4[16] = {0, 0, 1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 0, 0};
    int64_t pf = 0;
    CHECK(hs_pfaffian4(s, j4, &pf) == HS_OK);
    CHECK(pf == -1);

    int64_t gram21[16] = {0, 0, 2, 1, 0, 0, 1, 2, -2, -1, 0, 0, -1, -2, 0, 0};
    int64_t divisors[4] = {0, 0, 0, 0};
    CHECK(hs_smith_divisors4(s, gram21, divisors) == HS_OK);
    CHECK(divisors[0] == 1);
    CHECK(divisors[1] == 1);
    CHECK(divisors[2] == 3);
    CHECK(divisors[3] == 3);

    double re = 0, im = 0, tail = 0;
    CHECK(hs_theta(s, 0, 1, 0, 0, 0, 0, 0, 0, 0, &re, &im, &tail) == HS_OK);
    double jacobi = 0;
    for (int n = -40; n <= 40; ++n) jacobi += std::exp(-3.14159265358979323846 * n * n);
    CHECK(std::abs(re - jacobi * jacobi) < 1e-12);
    CHECK(std::abs(im) < 1e-14);
    CHECK(tail <= 1e-12);
    // radius too small for the accuracy contract
    CHECK(hs_theta(s, 0, 1, 0, 0, 0, 0, 0, 0, 1, &re, &im, &tail) == HS_CHECK_FAILED);

    hs_session_free(s);
}

TEST_CASE("json dispatch through the C surface") {
    hs_session* s = hs_session_new();
    hs_session_set_seed(s, 7);

    const char* request =
        "{\"subcommand\":\"dist\",\"payload\":{"
        "\"p1\":{\"tau\":{\"re\":0,\"im\":1},\"z\":{\"re\":0,\"im\":0}},"
        "\"p2\":{\"tau\":{\"re\":0,\"im\":2},\"z\":{\"re\":0,\"im\":0}}}}";
    char* response = nullptr;
    CHECK(hs_dispatch_json(s, request, &response) == HS_OK);
    REQUIRE(response != nullptr);
    json parsed = json::parse(response);
    CHECK(parsed["result"]["rho"].get<double>() ==
          doctest::Approx(std::sqrt(2.0) * std::log(2.0)).epsilon(1e-12));
    // session seed is threaded into the envelope
    CHECK(parsed["diagnostics"]["seed"] == 7);
    hs_string_free(response);

    response = nullptr;
    CHECK(hs_dispatch_json(s, "{broken", &response) == HS_ERROR);
    REQUIRE(response != nullptr);
    CHECK(json::parse(response)["error"]["type"] == "bad_request");
    CHECK_FALSE(std::string(hs_last_error(s)).empty());
    hs_string_free(response);

    hs_session_free(s);
}

TEST_CASE("verify through the C surface") {
    hs_session* s = hs_session_new();
    hs_session_set_seed(s, 7);
    int failures = -1;
    CHECK(hs_verify(s, "distance-closed-form", &failures) == HS_OK);
    CHECK(failures == 0);
    CHECK(hs_verify(s, "nonexistent", &failures) == HS_ERROR);
    hs_session_free(s);
}
