#pragma once

#include <string>
#include <vector>

namespace wh {

struct CheckRecord {
    std::string check;
    int k = 0;
    int degree = 0;
    long long weight = 0;
    int dim = 0;
    int rank = 0;
    bool pass = false;
    bool unitriangular = false;  // reported for homotopy blocks only
    bool has_unitriangular = false;
    std::string note;
};

struct Certificate {
    std::string version;
    std::string generated_at;  // timestamps live here and nowhere else
    std::string check;
    int max_k = 0;
    int max_degree = 0;
    long long max_weight = 0;  // 0 = derived from the degree cap
    unsigned long long fuel = 0;
    std::vector<CheckRecord> checks;
    bool pass = true;

    void add(CheckRecord r);
};

/* Stable key order, two-space indent; suitable for byte-diff regression. */
std::string certificate_to_json(const Certificate& c);

std::string iso8601_now();

}  // namespace wh
