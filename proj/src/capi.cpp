#include "halfpot.h"

#include "render.hpp"

#include <cstring>
#include <string>

using namespace halfpot;

struct hp_chain {
    Chain chain;
};

namespace {

thread_local std::string g_last_error;

hp_status fail(hp_status st, const char* message) {
    g_last_error = message;
    return st;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
hp_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        return fail(HP_ERROR_INVALID_ARGUMENT, e.what());
    } catch (const ConsistencyError& e) {
        return fail(HP_ERROR_CONSISTENCY, e.what());
    } catch (const EvalError& e) {
        return fail(HP_ERROR_EVAL, e.what());
    } catch (const std::exception& e) {
        return fail(HP_ERROR_INTERNAL, e.what());
    } catch (...) {
        return fail(HP_ERROR_INTERNAL, "unknown error");
    }
}

hp_status render_with(const hp_chain* chain, const char* format, char** out,
                      std::string (*json_fn)(const Chain&),
                      std::string (*latex_fn)(const Chain&),
                      std::string (*text_fn)(const Chain&)) {
    if (!chain || !format || !out)
        return fail(HP_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        std::string f(format);
        std::string result;
        if (f == "json" && json_fn)
            result = json_fn(chain->chain);
        else if (f == "latex" && latex_fn)
            result = latex_fn(chain->chain);
        else if (f == "text" && text_fn)
            result = text_fn(chain->chain);
        else
            return fail(HP_ERROR_INVALID_ARGUMENT, "unknown format");
        *out = dup_string(result);
        return *out ? HP_OK : fail(HP_ERROR_INTERNAL, "allocation failed");
    });
}

}  // namespace

extern "C" {

const char* hp_version(void) { return "1.0.0"; }

const char* hp_last_error(void) { return g_last_error.c_str(); }

hp_status hp_chain_build(int ambient_dim, int from_level, int to_level,
                         hp_chain** out) {
    if (!out) return fail(HP_ERROR_INVALID_ARGUMENT, "null output pointer");
    *out = nullptr;
    if (ambient_dim != 3 && ambient_dim != 4)
        return fail(HP_ERROR_INVALID_ARGUMENT, "ambient dimension must be 3 or 4");
    if (from_level > to_level)
        return fail(HP_ERROR_INVALID_ARGUMENT, "from_level must be <= to_level");
    return guarded([&] {
        auto chain = new hp_chain{Chain::build(ambient_dim - 1, from_level, to_level)};
        *out = chain;
        return HP_OK;
    });
}

void hp_chain_free(hp_chain* chain) { delete chain; }

int hp_chain_ambient_dim(const hp_chain* chain) {
    return chain ? chain->chain.m() + 1 : 0;
}

int hp_chain_from(const hp_chain* chain) { return chain ? chain->chain.lo() : 0; }

int hp_chain_to(const hp_chain* chain) { return chain ? chain->chain.hi() : 0; }

hp_status hp_chain_render(const hp_chain* chain, const char* format, char** out) {
    return render_with(chain, format, out, chain_json, chain_latex, chain_text);
}

hp_status hp_chain_formulas(const hp_chain* chain, const char* format, char** out) {
    return render_with(chain, format, out, formulas_json, formulas_latex,
                       formulas_text);
}

hp_status hp_chain_boundary(const hp_chain* chain, const char* format, char** out) {
    return render_with(chain, format, out, boundary_json, nullptr, boundary_text);
}

hp_status hp_chain_verify(const hp_chain* chain, int include_numeric,
                          int* all_pass, char** report_json_out) {
    if (!chain || !all_pass)
        return fail(HP_ERROR_INVALID_ARGUMENT, "null argument");
    *all_pass = 0;
    return guarded([&] {
        VerifyReport symbolic = verify_chain(chain->chain);
        std::vector<ResidualReport> numeric;
        if (include_numeric) {
            // the numeric tolerances are calibrated for levels -4..6; the
            // symbolic suite covers every level exactly
            const double h = 1e-4;
            auto points = log_grid(1e-2, 1e2, 10, 10, 10 * h);
            numeric = numeric_identity_suite(chain->chain, -4, 6, points, h, 1e-6);
        }
        bool numeric_pass = true;
        for (const auto& it : numeric) numeric_pass = numeric_pass && it.pass;
        *all_pass = (symbolic.all_pass() && numeric_pass) ? 1 : 0;
        if (report_json_out) {
            *report_json_out = dup_string(report_json(symbolic, numeric));
            if (!*report_json_out)
                return fail(HP_ERROR_INTERNAL, "allocation failed");
        }
        return HP_OK;
    });
}

void hp_string_free(char* s) { std::free(s); }

}  // extern "C"
