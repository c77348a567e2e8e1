#include "doctest.h"

#include <sstream>

#include "cli.hpp"
#include "dsrpm/report.hpp"

using dsrpm::Json;
namespace cli = dsrpm::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("family emits graph6") {
    const Result r = call({"family", "--n", "14", "--k", "1", "--emit", "g6"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out == "MtmCKMF`{No~`~`~_\n");
}

TEST_CASE("spectra JSON report") {
    const Result r = call({"spectra", "--g6", "Bw", "--json"});
    REQUIRE(r.code == cli::kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j["schema_version"] == "1.0");
    CHECK(j["results"][0]["order"] == 3);
    CHECK(j["results"][0]["wiener"] == 3);
    CHECK(j["violations"].empty());
}

TEST_CASE("spectra on K4") {
    const Json j = Json::parse(call({"spectra", "--g6", "C~", "--json"}).out)["results"][0];
    CHECK(j["wiener"] == 6);
    CHECK(std::stod(j["mu"]["value"].get<std::string>()) == doctest::Approx(3.0));
    CHECK(std::stod(j["mu"]["lo"].get<std::string>()) <= 3.0 + 1e-9);
    CHECK(std::stod(j["mu"]["hi"].get<std::string>()) >= 3.0 - 1e-9);
}

TEST_CASE("violation exit code tracks the violations array") {
    // the sweep below 8k + 6 is exploratory; whatever it finds, the exit code must agree
    const Result r = call({"verify", "probe13", "--k", "1", "--sweep", "--trials", "30", "--json"});
    const Json j = Json::parse(r.out);
    CHECK(r.code == (j["violations"].empty() ? cli::kExitOk : cli::kExitViolation));
}

TEST_CASE("matching and fractional certificates") {
    Json j = Json::parse(call({"matching", "--n", "14", "--k", "1", "--json"}).out);
    CHECK(j["results"][0]["perfect_matching"] == false);
    CHECK(j["results"][0]["tutte_certificate"]["S"] == Json::array({0}));
    j = Json::parse(call({"fractional", "--g6", "Bw", "--json"}).out);
    CHECK(j["results"][0]["fractional_pm"] == true);
    j = Json::parse(call({"fractional", "--g6", "Bo", "--json"}).out);
    CHECK(j["results"][0]["fractional_pm"] == false);
    CHECK(j["results"][0]["violation"]["isolated"] == 2);
}

TEST_CASE("quotient coefficients and closed form") {
    const Json j = Json::parse(call({"quotient", "--n", "14", "--k", "1", "--json"}).out);
    CHECK(j["results"][0]["char_poly"] == Json::array({1, -10, -153, -368, -172}));
    CHECK(j["results"][0]["closed_form_matches"] == true);
    const Json b = Json::parse(call({"quotient", "--g6", "C~", "--blocks", "0,1|2,3", "--json"}).out);
    CHECK(b["results"][0]["equitable"] == true);
    CHECK(b["results"][0]["char_poly"] == Json::array({1, -2, -3}));
}

TEST_CASE("verify suites exit zero without violations") {
    CHECK(call({"verify", "theorem13-family", "--n", "14", "--k", "1"}).code == cli::kExitOk);
    const Result r = call({"verify", "theorem11", "--n", "4", "--json"});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(Json::parse(r.out)["suite"]["cases"] == 38);
    CHECK(call({"enumerate", "--n", "4", "--chunk", "1/3"}).code == cli::kExitOk);
    CHECK(call({"verify", "probe13", "--n", "14", "--k", "1", "--trials", "20", "--seed", "3"}).code == cli::kExitOk);
    CHECK(call({"verify", "ordering-chain", "--n", "14", "--s", "1", "--parts", "1,3,9", "--k", "1"}).code == cli::kExitOk);
}

TEST_CASE("usage errors exit 2") {
    CHECK(call({}).code == cli::kExitUsage);
    CHECK(call({"frobnicate"}).code == cli::kExitUsage);
    CHECK(call({"spectra"}).code == cli::kExitUsage);
    CHECK(call({"spectra", "--g6", "B"}).code == cli::kExitUsage);
    CHECK(call({"spectra", "--g6", "B_"}).code == cli::kExitUsage);  // disconnected
    CHECK(call({"family", "--n", "13", "--k", "1"}).code == cli::kExitUsage);
    CHECK(call({"verify", "nonsense"}).code == cli::kExitUsage);
    CHECK(call({"verify", "probe13", "--n", "12", "--k", "1"}).code == cli::kExitUsage);
    CHECK(call({"enumerate", "--n", "4", "--chunk", "3"}).code == cli::kExitUsage);
    const Result r = call({"spectra", "--g6", "B"});
    CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("help exits zero") {
    const Result r = call({"--help"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("verify") != std::string::npos);
}
