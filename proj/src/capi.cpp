#include "hatsiegel/hatsiegel.h"

#include <cstring>
#include <string>

#include "dispatch.hpp"
#include "exact.hpp"
#include "geometry.hpp"
#include "polarization.hpp"
#include "theta.hpp"
#include "verify.hpp"

struct hs_session {
    hs::Tolerance tol;
    std::uint64_t seed = 0;
    std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
hs_status guarded(hs_session* s, Fn&& fn) {
    if (!s) return HS_ERROR;
    s->last_error.clear();
    try {
        return fn();
    } catch (const std::exception& e) {
        s->last_error = e.what();
        return HS_ERROR;
    }
}

} // namespace

extern "C" {

const char* hs_version(void) { return hs::kVersion; }

hs_session* hs_session_new(void) { return new hs_session(); }

void hs_session_free(hs_session* s) { delete s; }

hs_status hs_session_set_tolerance(hs_session* s, double abs_tol, double rel_tol) {
    return guarded(s, [&] {
        s->tol = hs::Tolerance(abs_tol, rel_tol);
        return HS_OK;
    });
}

hs_status hs_session_set_seed(hs_session* s, uint64_t seed) {
    return guarded(s, [&] {
        s->seed = seed;
        return HS_OK;
    });
}

const char* hs_last_error(const hs_session* s) { return s ? s->last_error.c_str() : "null session"; }

hs_status hs_dispatch_json(hs_session* s, const char* request_json, char** response) {
    if (!s || !request_json || !response) return HS_ERROR;
    s->last_error.clear();
    try {
        hs::json request = hs::json::parse(request_json, nullptr, false);
        if (request.is_discarded()) {
            int status = 2;
            std::string body = hs::dispatch_json(request_json, status);
            *response = dup_string(body);
            s->last_error = "malformed JSON request";
            return static_cast<hs_status>(status);
        }
        if (!request.contains("seed")) request["seed"] = s->seed;
        if (!request.contains("abs_tol")) request["abs_tol"] = s->tol.abs_tol;
        if (!request.contains("rel_tol")) request["rel_tol"] = s->tol.rel_tol;
        hs::DispatchResult r = hs::dispatch(request);
        *response = dup_string(r.response.dump());
        if (r.status != 0 && r.response.contains("error"))
            s->last_error = r.response["error"]["message"].get<std::string>();
        return static_cast<hs_status>(r.status);
    } catch (const std::exception& e) {
        s->last_error = e.what();
        *response = dup_string(std::string("{\"version\":\"") + hs::kVersion +
                               "\",\"error\":{\"type\":\"internal\",\"message\":\"dispatch failed\"}}");
        return HS_ERROR;
    }
}

void hs_string_free(char* str) { delete[] str; }

hs_status hs_point_check(hs_session* s, double tau_re, double tau_im, double z_re, double z_im,
                         int* in_domain) {
    return guarded(s, [&] {
        if (!in_domain) throw std::domain_error("hs_point_check: null output");
        hs::HatPoint p{hs::cplx(tau_re, tau_im), hs::cplx(z_re, z_im)};
        *in_domain = hs::in_hat_h2(p.matrix(), s->tol) ? 1 : 0;
        return HS_OK;
    });
}

hs_status hs_distance(hs_session* s, double tau1_re, double tau1_im, double z1_re, double z1_im,
                      double tau2_re, double tau2_im, double z2_re, double z2_im, double* rho) {
    return guarded(s, [&] {
        if (!rho) throw std::domain_error("hs_distance: null output");
        hs::HatPoint p1{hs::cplx(tau1_re, tau1_im), hs::cplx(z1_re, z1_im)};
        hs::HatPoint p2{hs::cplx(tau2_re, tau2_im), hs::cplx(z2_re, z2_im)};
        *rho = hs::distance(p1, p2, s->tol).rho;
        return HS_OK;
    });
}

hs_status hs_section_dimension(hs_session* s, const char* kind, double tau_re, double tau_im,
                               double z_re, double z_im, int64_t* dimension) {
    return guarded(s, [&] {
        if (!kind || !dimension) throw std::domain_error("hs_section_dimension: null argument");
        hs::HatPoint omega{hs::cplx(tau_re, tau_im), hs::cplx(z_re, z_im)};
        hs::RiemannFormSpec spec = hs::make_form(hs::form_kind_from_name(kind), omega, s->tol);
        *dimension = hs::section_dimension(spec, s->tol);
        return HS_OK;
    });
}

hs_status hs_pfaffian4(hs_session* s, const int64_t entries[16], int64_t* pfaffian) {
    return guarded(s, [&] {
        if (!entries || !pfaffian) throw std::domain_error("hs_pfaffian4: null argument");
        hs::IMat4 e{};
        for (int i = 0; i < 16; ++i) e[static_cast<size_t>(i)] = entries[i];
        *pfaffian = hs::pfaffian4(e);
        return HS_OK;
    });
}

hs_status hs_smith_divisors4(hs_session* s, const int64_t entries[16], int64_t divisors[4]) {
    return guarded(s, [&] {
        if (!entries || !divisors) throw std::domain_error("hs_smith_divisors4: null argument");
        hs::IMat4 e{};
        for (int i = 0; i < 16; ++i) e[static_cast<size_t>(i)] = entries[i];
        hs::SnfResult r = hs::smith_normal_form4(e);
        for (int i = 0; i < 4; ++i) divisors[i] = r.divisors[static_cast<size_t>(i)];
        return HS_OK;
    });
}

hs_status hs_theta(hs_session* s, double tau_re, double tau_im, double z_re, double z_im,
                   double z1_re, double z1_im, double z2_re, double z2_im, int radius,
                   double* value_re, double* value_im, double* tail_bound) {
    return guarded(s, [&] {
        if (!value_re || !value_im || !tail_bound) throw std::domain_error("hs_theta: null output");
        hs::HatPoint omega{hs::cplx(tau_re, tau_im), hs::cplx(z_re, z_im)};
        hs::CVec2 z{hs::cplx(z1_re, z1_im), hs::cplx(z2_re, z2_im)};
        hs::ThetaTruncation trunc = (radius > 0)
                                        ? hs::ThetaTruncation{radius, hs::theta_tail_bound(omega, z, radius)}
                                        : hs::choose_truncation(omega, z, 1e-12);
        hs::ThetaValue v = hs::theta_series(omega, z, trunc);
        *value_re = v.value.real();
        *value_im = v.value.imag();
        *tail_bound = v.tail_bound;
        return v.accurate ? HS_OK : HS_CHECK_FAILED;
    });
}

hs_status hs_verify(hs_session* s, const char* suite, int* failures) {
    return guarded(s, [&] {
        if (!suite || !failures) throw std::domain_error("hs_verify: null argument");
        int bad = 0;
        for (const hs::SuiteResult& r : hs::run_verify(suite, s->seed))
            if (!r.passed) ++bad;
        *failures = bad;
        return bad == 0 ? HS_OK : HS_CHECK_FAILED;
    });
}

} // extern "C"
