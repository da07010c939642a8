#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "engine.hpp"

using namespace wh;
namespace fs = std::filesystem;

namespace {

std::string strip_timestamp(std::string json_text)
{
    auto j = nlohmann::ordered_json::parse(json_text);
    j.erase("generated_at");
    return j.dump(2);
}

struct TempDir {
    fs::path path;
    TempDir()
    {
        path = fs::temp_directory_path() /
               ("wh_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter()
    {
        static int c = 0;
        return c;
    }
};

}  // namespace

TEST_CASE("basis and poincare tables")
{
    Engine engine;
    auto j = nlohmann::json::parse(engine.basis_json(1, 4));
    // suspended grading: sigma bQ^i has degree i+1, so degree 1 is empty
    std::vector<int> counts;
    for (const auto& row : j["rows"])
        counts.push_back(row["count"].get<int>());
    CHECK(counts == std::vector<int>{0, 1, 1, 1});

    auto p = nlohmann::json::parse(engine.poincare_json(2, 8));
    std::vector<int> dims;
    for (const auto& row : p["dims"])
        dims.push_back(row["dim"].get<int>());
    CHECK(dims == std::vector<int>{0, 0, 0, 0, 1, 1, 1, 2});

    auto p0 = nlohmann::json::parse(engine.poincare_json(0, 3));
    dims.clear();
    for (const auto& row : p0["dims"])
        dims.push_back(row["dim"].get<int>());
    CHECK(dims == std::vector<int>{1, 0, 0});

    // k = 3 dimensions vanish below degree 12
    auto p3 = nlohmann::json::parse(engine.poincare_json(3, 12));
    for (const auto& row : p3["dims"]) {
        if (row["degree"].get<int>() < 12)
            CHECK(row["dim"].get<int>() == 0);
        else
            CHECK(row["dim"].get<int>() == 1);
    }
}

TEST_CASE("verify small caps pass and certificates are well-formed")
{
    Engine engine;
    Certificate cert = engine.verify("homotopy", 1, 8, 0);
    CHECK(cert.pass);
    bool saw_coker = false;
    for (const CheckRecord& r : cert.checks) {
        CHECK(r.pass);
        if (r.check == "homotopy-coker" && r.degree == 1)
            saw_coker = true;
    }
    CHECK(saw_coker);

    std::string json_text = certificate_to_json(cert);
    auto j = nlohmann::ordered_json::parse(json_text);
    CHECK(j["verdict"] == "pass");
    CHECK(j["parameters"]["check"] == "homotopy");
    CHECK(j.contains("generated_at"));
    bool saw_block = false;
    for (const auto& rec : j["checks"])
        if (rec["check"] == "homotopy") {
            CHECK(rec.contains("unitriangular"));
            saw_block = true;
        }
    CHECK(saw_block);
}

TEST_CASE("verify rejects unknown checks and bad caps")
{
    Engine engine;
    CHECK_THROWS_AS(engine.verify("bogus", 1, 8, 0), std::invalid_argument);
    CHECK_THROWS_AS(engine.verify("chain", 1, 0, 0), std::invalid_argument);
}

TEST_CASE("exactness and the combined run pass at small caps")
{
    Engine engine;
    CHECK(engine.verify("exactness", 2, 12, 0).pass);
    Certificate all = engine.verify("all", 2, 12, 0);
    CHECK(all.pass);
    std::set<std::string> seen;
    for (const CheckRecord& r : all.checks)
        seen.insert(r.check);
    for (const char* name : {"chain", "homotopy", "homotopy-coker",
                             "homotopy-retraction", "exactness", "idempotent",
                             "alpha"})
        CHECK(seen.count(name) == 1);
}

TEST_CASE("max_weight cap restricts the verified bidegrees")
{
    Engine engine;
    Certificate cert = engine.verify("homotopy", 1, 12, 4);
    CHECK(cert.pass);
    for (const CheckRecord& r : cert.checks)
        CHECK(r.weight <= 4);
}

TEST_CASE("cache transparency: warm results byte-identical to cold")
{
    TempDir tmp;
    std::string cold, warm;
    {
        Engine engine({.fuel = 1'000'000, .cache_dir = tmp.path.string(), .jobs = 1});
        cold = strip_timestamp(
            certificate_to_json(engine.verify("idempotent", 2, 12, 0)));
    }
    CHECK(!fs::is_empty(tmp.path));
    {
        Engine engine({.fuel = 1'000'000, .cache_dir = tmp.path.string(), .jobs = 1});
        warm = strip_timestamp(
            certificate_to_json(engine.verify("idempotent", 2, 12, 0)));
    }
    CHECK(cold == warm);

    // and identical to the no-cache run
    Engine plain;
    CHECK(strip_timestamp(certificate_to_json(plain.verify("idempotent", 2, 12, 0))) ==
          cold);
}

TEST_CASE("disk cache round-trips e_k blocks")
{
    TempDir tmp;
    EkDiskCache cache(tmp.path.string());
    EkBlock block = compute_ek_block(3, 14);
    cache.store(block);
    auto loaded = cache.load(3, 14);
    REQUIRE(loaded.has_value());
    CHECK(loaded->basis == block.basis);
    CHECK(loaded->rows == block.rows);
    CHECK(!cache.load(3, 15).has_value());
}

TEST_CASE("stale cache entries are ignored")
{
    TempDir tmp;
    EkDiskCache cache(tmp.path.string());
    std::string path = cache.path_for(2, 6);
    {
        std::ofstream f(path);
        f << "whitehead ek-cache v1\ncode something-else\nk 2 degree 6 dim 2\n";
    }
    CHECK(!cache.load(2, 6).has_value());
    // a fresh engine recomputes and the verify still passes
    Engine engine({.fuel = 1'000'000, .cache_dir = tmp.path.string(), .jobs = 1});
    CHECK(engine.verify("idempotent", 2, 6, 0).pass);
}

TEST_CASE("parallel verification matches serial")
{
    Engine serial({.fuel = 1'000'000, .cache_dir = "", .jobs = 1});
    Engine parallel({.fuel = 1'000'000, .cache_dir = "", .jobs = 4});
    CHECK(strip_timestamp(certificate_to_json(serial.verify("chain", 1, 10, 0))) ==
          strip_timestamp(certificate_to_json(parallel.verify("chain", 1, 10, 0))));
}

TEST_CASE("apply_text surface")
{
    Engine engine;
    CHECK(engine.apply_text(MapTag::Delta, 0, "Q^4 Q^2 i", false) ==
          "Q^5 s^1 bQ^1 i + Q^4 s^1 bQ^2 i");
    CHECK(engine.apply_text(MapTag::D, 0, "s^1 bQ^2 i", false) == "Q^2 i");
    CHECK(engine.apply_text(MapTag::D, 0, "Q^7 s^1 bQ^2 i", false) ==
          "Q^4 i * Q^4 i");
    CHECK(engine.apply_text(MapTag::D, 0, "0", false) == "0");
    // delta on a decomposable needs the e0 flag
    CHECK_THROWS_AS(engine.apply_text(MapTag::Delta, 0, "Q^2 i * Q^2 i", false),
                    std::invalid_argument);
    CHECK(engine.apply_text(MapTag::Delta, 0, "Q^2 i * Q^2 i", true) ==
          "s^1 bQ^2 i * s^1 bQ^2 i");
    // non-homogeneous input
    CHECK_THROWS_AS(engine.apply_text(MapTag::D, 0, "s^1 bQ^2 i + s^1 bQ^3 i + i",
                                      false),
                    std::invalid_argument);
    // wrong level
    CHECK_THROWS_AS(engine.apply_text(MapTag::Delta, 1, "Q^2 i", false),
                    std::invalid_argument);
}
