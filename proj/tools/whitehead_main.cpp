// Command-line front end; talks to the engine exclusively through the
// C API in whitehead.h.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "whitehead.h"

namespace {

// Exit codes: 0 pass, 1 verification failure, 2 usage/parse error,
// 3 resource exhaustion.
constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct SessionDeleter {
    void operator()(wh_session* s) const { wh_session_free(s); }
};
using Session = std::unique_ptr<wh_session, SessionDeleter>;

struct StringDeleter {
    void operator()(char* p) const { wh_string_free(p); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

int status_to_exit(wh_status st)
{
    switch (st) {
    case WH_OK:
        return kExitPass;
    case WH_ERR_FUEL:
        return kExitResource;
    case WH_ERR_IO:
        return kExitUsage;
    default:
        return kExitUsage;
    }
}

int fail(const Session& session, wh_status st)
{
    std::cerr << "whitehead: " << wh_last_error(session.get()) << "\n";
    return status_to_exit(st);
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

void render_basis(const nlohmann::json& j, const std::string& format, std::ostream& os)
{
    if (format == "csv") {
        os << "degree,count,elements\n";
        for (const auto& row : j["rows"]) {
            std::string elems;
            for (const auto& e : row["elements"]) {
                if (!elems.empty())
                    elems += "; ";
                elems += e.get<std::string>();
            }
            os << row["degree"] << ',' << row["count"] << ',' << csv_escape(elems)
               << '\n';
        }
        return;
    }
    os << "# k = " << j["k"] << "\n";
    for (const auto& row : j["rows"]) {
        os << "degree " << row["degree"] << "  count " << row["count"];
        std::string elems;
        for (const auto& e : row["elements"]) {
            if (!elems.empty())
                elems += ", ";
            elems += e.get<std::string>();
        }
        if (!elems.empty())
            os << "  [" << elems << "]";
        os << "\n";
    }
}

void render_poincare(const nlohmann::json& j, const std::string& format,
                     std::ostream& os)
{
    if (format == "csv") {
        os << "degree,dim\n";
        for (const auto& row : j["dims"])
            os << row["degree"] << ',' << row["dim"] << '\n';
        return;
    }
    os << "# k = " << j["k"] << "\n";
    std::string dims;
    for (const auto& row : j["dims"]) {
        if (!dims.empty())
            dims += ",";
        dims += std::to_string(row["dim"].get<int>());
    }
    os << dims << "\n";
}

void render_matrix(const nlohmann::json& j, const char* src_key, const char* tgt_key,
                   const std::string& format, std::ostream& os)
{
    const auto& source = j[src_key];
    const auto& target = j[tgt_key];
    const auto& images = j.contains("images") ? j["images"] : j["rows"];
    if (format == "csv") {
        os << "source";
        for (const auto& t : target)
            os << ',' << csv_escape(t.get<std::string>());
        os << '\n';
        for (size_t col = 0; col < source.size(); ++col) {
            os << csv_escape(source[col].get<std::string>());
            std::vector<int> bits = images[col].get<std::vector<int>>();
            for (size_t row = 0; row < target.size(); ++row) {
                bool on = std::find(bits.begin(), bits.end(), static_cast<int>(row)) !=
                          bits.end();
                os << ',' << (on ? 1 : 0);
            }
            os << '\n';
        }
        return;
    }
    for (const auto& [key, value] : j.items()) {
        if (key == src_key || key == tgt_key || key == "images" || key == "rows")
            continue;
        os << key << " = " << value << "\n";
    }
    for (size_t col = 0; col < source.size(); ++col) {
        os << source[col].get<std::string>() << "  ->  ";
        std::vector<int> bits = images[col].get<std::vector<int>>();
        if (bits.empty()) {
            os << "0\n";
            continue;
        }
        std::string sum;
        for (int b : bits) {
            if (!sum.empty())
                sum += " + ";
            sum += target[b].get<std::string>();
        }
        os << sum << "\n";
    }
}

void render_certificate(const nlohmann::json& j, const std::string& format,
                        std::ostream& os)
{
    if (format == "csv") {
        os << "check,k,degree,weight,dim,rank,pass\n";
        for (const auto& r : j["checks"])
            os << r["check"].get<std::string>() << ',' << r["k"] << ','
               << r["degree"] << ',' << r["weight"] << ',' << r["dim"] << ','
               << r["rank"] << ',' << (r["pass"].get<bool>() ? 1 : 0) << '\n';
        return;
    }
    for (const auto& r : j["checks"]) {
        os << (r["pass"].get<bool>() ? "pass" : "FAIL") << "  "
           << r["check"].get<std::string>() << "  k=" << r["k"]
           << " degree=" << r["degree"] << " weight=" << r["weight"]
           << " dim=" << r["dim"] << " rank=" << r["rank"];
        if (r.contains("note"))
            os << "  (" << r["note"].get<std::string>() << ")";
        os << "\n";
    }
    os << "verdict: " << j["verdict"].get<std::string>() << "\n";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Homology-level verifier for the mod-2 Whitehead sequence"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("whitehead ") + wh_version());

    std::string format = "text";
    std::string cache_dir;
    unsigned long long fuel = 1'000'000;
    int jobs = 1;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--cache-dir", cache_dir, "Directory for cached e_k matrices");
    app.add_option("--fuel", fuel, "Rewrite steps allowed per normalization")
        ->capture_default_str();
    app.add_option("--jobs", jobs, "Worker threads for verification")
        ->capture_default_str();

    int k = 0;
    int max_k = 2;
    int degree = 0;
    int max_degree = 20;
    long long weight = 0;
    long long max_weight = 0;
    std::string which = "d";
    std::string check = "all";
    std::string element;
    std::string out_path;
    bool e0 = false;

    CLI::App* basis = app.add_subcommand("basis", "Admissible basis per degree");
    basis->add_option("--k", k, "Filtration level")->required();
    basis->add_option("--max-degree", max_degree, "Largest degree to list")
        ->capture_default_str();

    CLI::App* poincare = app.add_subcommand("poincare", "Dimension table per degree");
    poincare->add_option("--k", k, "Filtration level")->required();
    poincare->add_option("--max-degree", max_degree, "Largest degree to list")
        ->capture_default_str();

    CLI::App* idem = app.add_subcommand("idempotent", "Idempotent matrix on a piece");
    idem->add_option("--k", k, "Word length")->required();
    idem->add_option("--degree", degree, "Degree of the graded piece")->required();

    CLI::App* map_cmd = app.add_subcommand("map", "Matrix on indecomposables");
    map_cmd->add_option("--which", which, "Map to print")
        ->check(CLI::IsMember({"d", "delta"}))
        ->required();
    map_cmd->add_option("--k", k, "Level of the map")->required();
    map_cmd->add_option("--degree", degree, "Degree of the bidegree")->required();
    map_cmd->add_option("--weight", weight, "Weight of the bidegree")->required();

    CLI::App* apply = app.add_subcommand("apply", "Apply d or delta to an element");
    apply->add_option("--which", which, "Map to apply")
        ->check(CLI::IsMember({"d", "delta"}))
        ->required();
    apply->add_option("--k", k, "Level of the element")->required();
    apply->add_option("element", element, "Element in the shared grammar")->required();
    apply->add_flag("--e0", e0, "Graded multiplicative extension for delta");

    CLI::App* verify = app.add_subcommand("verify", "Run one verification");
    verify->add_option("--check", check, "Which property to verify")
        ->check(CLI::IsMember({"chain", "homotopy", "exactness", "idempotent",
                               "alpha", "all"}))
        ->required();
    verify->add_option("--max-k", max_k, "Level cap")->capture_default_str();
    verify->add_option("--max-degree", max_degree, "Degree cap")
        ->capture_default_str();
    verify->add_option("--max-weight", max_weight, "Weight cap (0 = unlimited)")
        ->capture_default_str();
    verify->add_option("--out", out_path, "Write the certificate to this file");

    CLI::App* certify = app.add_subcommand("certify", "Run every check");
    certify->add_option("--max-k", max_k, "Level cap")->capture_default_str();
    certify->add_option("--max-degree", max_degree, "Degree cap")
        ->capture_default_str();
    certify->add_option("--max-weight", max_weight, "Weight cap (0 = unlimited)")
        ->capture_default_str();
    certify->add_option("--out", out_path, "Write the certificate to this file");

    for (CLI::App* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    Session session(wh_session_new());
    if (!session) {
        std::cerr << "whitehead: failed to create session\n";
        return kExitUsage;
    }
    wh_set_fuel(session.get(), fuel);
    wh_set_jobs(session.get(), jobs);
    if (!cache_dir.empty())
        wh_set_cache_dir(session.get(), cache_dir.c_str());

    auto emit = [&](const char* raw, auto render) {
        if (format == "json") {
            std::cout << raw;
            return;
        }
        render(nlohmann::json::parse(raw), format, std::cout);
    };

    char* raw = nullptr;
    wh_status st = WH_OK;
    if (*basis) {
        st = wh_basis_json(session.get(), k, max_degree, &raw);
        ApiString guard(raw);
        if (st != WH_OK)
            return fail(session, st);
        emit(raw, render_basis);
    } else if (*poincare) {
        st = wh_poincare_json(session.get(), k, max_degree, &raw);
        ApiString guard(raw);
        if (st != WH_OK)
            return fail(session, st);
        emit(raw, render_poincare);
    } else if (*idem) {
        st = wh_idempotent_json(session.get(), k, degree, &raw);
        ApiString guard(raw);
        if (st != WH_OK)
            return fail(session, st);
        emit(raw, [](const nlohmann::json& j, const std::string& f, std::ostream& os) {
            render_matrix(j, "basis", "basis", f, os);
        });
    } else if (*map_cmd) {
        st = wh_e0_matrix_json(session.get(), which.c_str(), k, degree, weight, &raw);
        ApiString guard(raw);
        if (st != WH_OK)
            return fail(session, st);
        emit(raw, [](const nlohmann::json& j, const std::string& f, std::ostream& os) {
            render_matrix(j, "source", "target", f, os);
        });
    } else if (*apply) {
        st = wh_apply(session.get(), which.c_str(), k, element.c_str(), e0 ? 1 : 0,
                      &raw);
        ApiString guard(raw);
        if (st != WH_OK)
            return fail(session, st);
        if (format == "json") {
            nlohmann::ordered_json j;
            j["which"] = which;
            j["k"] = k;
            j["input"] = element;
            j["output"] = raw;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << raw << "\n";
        }
    } else {
        // verify / certify
        if (*certify)
            check = "all";
        int pass = 0;
        st = wh_verify_json(session.get(), check.c_str(), max_k, max_degree,
                            max_weight, &pass, &raw);
        ApiString guard(raw);
        if (st != WH_OK)
            return fail(session, st);
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            f << raw;
            if (!f.good()) {
                std::cerr << "whitehead: cannot write " << out_path << "\n";
                return kExitUsage;
            }
        }
        emit(raw, render_certificate);
        return pass ? kExitPass : kExitVerifyFail;
    }
    return kExitPass;
}
