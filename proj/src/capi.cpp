#include "whitehead.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "engine.hpp"
#include "grammar.hpp"
#include "version.hpp"

#if defined(__GNUC__)
#define WH_EXPORT __attribute__((visibility("default")))
#else
#define WH_EXPORT
#endif

struct wh_session {
    wh::Engine engine;
    std::string last_error;
};

namespace {

char* dup_string(const std::string& s)
{
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p)
        std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

template <class F>
wh_status guarded(wh_session* s, char** out, F&& body)
{
    if (!s)
        return WH_ERR_INVALID;
    if (out)
        *out = nullptr;
    try {
        std::string result = body();
        if (out) {
            *out = dup_string(result);
            if (!*out) {
                s->last_error = "out of memory";
                return WH_ERR_INTERNAL;
            }
        }
        s->last_error.clear();
        return WH_OK;
    } catch (const wh::ParseError& e) {
        s->last_error = e.what();
        return WH_ERR_PARSE;
    } catch (const wh::FuelError& e) {
        s->last_error = e.what();
        return WH_ERR_FUEL;
    } catch (const std::invalid_argument& e) {
        s->last_error = e.what();
        return WH_ERR_INVALID;
    } catch (const std::exception& e) {
        s->last_error = e.what();
        return WH_ERR_INTERNAL;
    }
}

wh_status parse_tag(wh_session* s, const char* which, wh::MapTag& tag)
{
    if (which && std::strcmp(which, "d") == 0) {
        tag = wh::MapTag::D;
        return WH_OK;
    }
    if (which && std::strcmp(which, "delta") == 0) {
        tag = wh::MapTag::Delta;
        return WH_OK;
    }
    s->last_error = "which must be \"d\" or \"delta\"";
    return WH_ERR_INVALID;
}

}  // namespace

extern "C" {

WH_EXPORT const char* wh_version(void)
{
    return wh::kVersion;
}

WH_EXPORT wh_session* wh_session_new(void)
{
    try {
        return new wh_session;
    } catch (...) {
        return nullptr;
    }
}

WH_EXPORT void wh_session_free(wh_session* s)
{
    delete s;
}

WH_EXPORT const char* wh_last_error(const wh_session* s)
{
    return s ? s->last_error.c_str() : "null session";
}

WH_EXPORT wh_status wh_set_fuel(wh_session* s, unsigned long long fuel)
{
    if (!s)
        return WH_ERR_INVALID;
    if (fuel == 0) {
        s->last_error = "fuel must be positive";
        return WH_ERR_INVALID;
    }
    s->engine.set_fuel(fuel);
    return WH_OK;
}

WH_EXPORT wh_status wh_set_cache_dir(wh_session* s, const char* dir)
{
    if (!s)
        return WH_ERR_INVALID;
    s->engine.set_cache_dir(dir ? dir : "");
    return WH_OK;
}

WH_EXPORT wh_status wh_set_jobs(wh_session* s, int jobs)
{
    if (!s)
        return WH_ERR_INVALID;
    if (jobs < 1) {
        s->last_error = "jobs must be at least 1";
        return WH_ERR_INVALID;
    }
    s->engine.set_jobs(jobs);
    return WH_OK;
}

WH_EXPORT wh_status wh_basis_json(wh_session* s, int k, int max_degree, char** out)
{
    return guarded(s, out, [&] { return s->engine.basis_json(k, max_degree); });
}

WH_EXPORT wh_status wh_poincare_json(wh_session* s, int k, int max_degree, char** out)
{
    return guarded(s, out, [&] { return s->engine.poincare_json(k, max_degree); });
}

WH_EXPORT wh_status wh_idempotent_json(wh_session* s, int k, int degree, char** out)
{
    return guarded(s, out, [&] { return s->engine.idempotent_json(k, degree); });
}

WH_EXPORT wh_status wh_e0_matrix_json(wh_session* s, const char* which, int k,
                                      int degree, long long weight, char** out)
{
    wh::MapTag tag;
    if (wh_status st = parse_tag(s, which, tag); st != WH_OK)
        return st;
    return guarded(s, out,
                   [&] { return s->engine.e0_matrix_json(tag, k, degree, weight); });
}

WH_EXPORT wh_status wh_apply(wh_session* s, const char* which, int k,
                             const char* element, int e0, char** out)
{
    wh::MapTag tag;
    if (wh_status st = parse_tag(s, which, tag); st != WH_OK)
        return st;
    if (!element) {
        s->last_error = "element must not be null";
        return WH_ERR_INVALID;
    }
    return guarded(s, out,
                   [&] { return s->engine.apply_text(tag, k, element, e0 != 0); });
}

WH_EXPORT wh_status wh_verify_json(wh_session* s, const char* check, int max_k,
                                   int max_degree, long long max_weight,
                                   int* out_pass, char** out)
{
    if (!check) {
        if (s)
            s->last_error = "check must not be null";
        return WH_ERR_INVALID;
    }
    if (out_pass)
        *out_pass = 0;
    return guarded(s, out, [&] {
        wh::Certificate cert =
            s->engine.verify(check, max_k, max_degree, max_weight);
        if (out_pass)
            *out_pass = cert.pass ? 1 : 0;
        return wh::certificate_to_json(cert);
    });
}

WH_EXPORT void wh_string_free(char* p)
{
    std::free(p);
}

}  // extern "C"
