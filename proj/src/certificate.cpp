#include "certificate.hpp"

#include <ctime>

#include <json.hpp>

namespace wh {

void Certificate::add(CheckRecord r)
{
    pass = pass && r.pass;
    checks.push_back(std::move(r));
}

std::string certificate_to_json(const Certificate& c)
{
    nlohmann::ordered_json j;
    j["version"] = c.version;
    j["generated_at"] = c.generated_at;
    j["parameters"] = {
        {"check", c.check},   {"max_k", c.max_k}, {"max_degree", c.max_degree},
        {"max_weight", c.max_weight}, {"fuel", c.fuel},
    };
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckRecord& r : c.checks) {
        nlohmann::ordered_json rec;
        rec["check"] = r.check;
        rec["k"] = r.k;
        rec["degree"] = r.degree;
        rec["weight"] = r.weight;
        rec["dim"] = r.dim;
        rec["rank"] = r.rank;
        rec["pass"] = r.pass;
        if (r.has_unitriangular)
            rec["unitriangular"] = r.unitriangular;
        if (!r.note.empty())
            rec["note"] = r.note;
        j["checks"].push_back(std::move(rec));
    }
    j["verdict"] = c.pass ? "pass" : "fail";
    return j.dump(2) + "\n";
}

std::string iso8601_now()
{
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

}  // namespace wh
