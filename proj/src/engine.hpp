#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "cache.hpp"
#include "certificate.hpp"
#include "maps.hpp"

namespace wh {

struct EngineConfig {
    std::uint64_t fuel = 1'000'000;
    std::string cache_dir;  // empty disables the disk cache
    int jobs = 1;
};

/* Session state: configuration plus the memoized e_k blocks.  The block
** map only grows and blocks are immutable once inserted, so readers may
** hold references across calls. */
class Engine {
public:
    explicit Engine(EngineConfig cfg = {}) : cfg_(std::move(cfg)) {}

    const EngineConfig& config() const { return cfg_; }
    void set_fuel(std::uint64_t fuel) { cfg_.fuel = fuel; }
    void set_cache_dir(std::string dir) { cfg_.cache_dir = std::move(dir); }
    void set_jobs(int jobs) { cfg_.jobs = jobs; }

    const EkBlock& ek_block(int k, int degree);
    BarOptions bar_options() const;
    MapOptions map_options();

    /* CLI/API surfaces; all tables are JSON documents with stable keys. */
    std::string basis_json(int k, int max_degree);
    std::string poincare_json(int k, int max_degree);
    std::string idempotent_json(int k, int degree);
    std::string e0_matrix_json(MapTag tag, int k, int degree, long long weight);
    std::string apply_text(MapTag tag, int k, const std::string& element, bool e0);

    Certificate verify(const std::string& check, int max_k, int max_degree,
                       long long max_weight);

private:
    void run_chain(Certificate& cert, int max_k, int max_degree, long long max_weight);
    void run_homotopy(Certificate& cert, int max_k, int max_degree,
                      long long max_weight);
    void run_exactness(Certificate& cert, int max_k, int max_degree,
                       long long max_weight);
    void run_idempotent(Certificate& cert, int max_k, int max_degree);
    void run_alpha(Certificate& cert, int max_k, int max_degree);

    EngineConfig cfg_;
    std::mutex mu_;
    std::map<std::pair<int, int>, std::unique_ptr<EkBlock>> blocks_;
};

}  // namespace wh
