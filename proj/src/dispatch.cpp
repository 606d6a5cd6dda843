#include "dispatch.hpp"

#include <cmath>

#include "exact.hpp"
#include "geometry.hpp"
#include "group.hpp"
#include "picard.hpp"
#include "polarization.hpp"
#include "theta.hpp"
#include "verify.hpp"

namespace hs {

namespace {

RiemannFormSpec form_from_payload(const json& p, const Tolerance& tol) {
    FormKind kind = form_kind_from_name(p.value("kind", "omega"));
    HatPoint omega = hat_point_from_json(p.at("omega"));
    if (kind == FormKind::Custom) return make_custom_form(cmat_from_json(p.at("h")), omega, tol);
    return make_form(kind, omega, tol);
}

ScalarField named_field(const std::string& name) {
    if (name == "const") return [](const HatPoint&) { return 1.0; };
    if (name == "x") return [](const HatPoint& p) { return p.tau.real(); };
    if (name == "logdet")
        return [](const HatPoint& p) { return std::log(p.y() * p.y() - p.v() * p.v()); };
    if (name == "gaussian")
        return [](const HatPoint& p) {
            double x = p.tau.real(), y = p.tau.imag(), u = p.z.real(), v = p.z.imag();
            return std::exp(-(x * x + y * y + u * u + v * v) / 4.0);
        };
    throw std::domain_error("laplacian: unknown field '" + name +
                            "' (expected const, x, logdet or gaussian)");
}

json suites_to_json(const std::vector<SuiteResult>& suites, int& failures) {
    json arr = json::array();
    failures = 0;
    for (const SuiteResult& s : suites) {
        if (!s.passed) ++failures;
        arr.push_back(json{{"name", s.name}, {"passed", s.passed}, {"detail", s.detail}});
    }
    return arr;
}

json route(const std::string& cmd, const json& p, std::uint64_t seed, const Tolerance& tol,
           int& status) {
    if (cmd == "point") {
        HatPoint pt = hat_point_from_json(p);
        bool ok = in_hat_h2(pt.matrix(), tol);
        json r{{"in_hat_h2", ok}};
        if (ok) r["gap"] = pt.y() - std::abs(pt.v());
        return r;
    }
    if (cmd == "act") {
        Mat4d m = mat4d_from_json(p.at("matrix"));
        CMat img = symplectic_act(m, hat_point_from_json(p.at("point")).matrix(), tol);
        json r{{"omega", to_json(img)}, {"in_hat_h2", in_hat_h2(img, tol)}};
        if (in_hat_h2(img, tol))
            r["point"] = to_json(HatPoint{0.5 * (img.at(0, 0) + img.at(1, 1)),
                                          0.5 * (img.at(0, 1) + img.at(1, 0))});
        return r;
    }
    if (cmd == "cayley") {
        std::string dir = p.value("direction", "to_disk");
        if (dir == "to_disk") {
            CMat omega = p.contains("point") ? hat_point_from_json(p.at("point")).matrix()
                                             : cmat_from_json(p.at("omega"));
            CMat w = cayley_to_disk(omega, tol);
            return json{{"w", to_json(w)}, {"in_disk_hat", in_disk_hat(w, tol)}};
        }
        if (dir == "to_halfspace") {
            CMat omega = cayley_to_halfspace(cmat_from_json(p.at("w")), tol);
            json r{{"omega", to_json(omega)}, {"in_hat_h2", in_hat_h2(omega, tol)}};
            if (in_hat_h2(omega, tol))
                r["point"] = to_json(HatPoint{0.5 * (omega.at(0, 0) + omega.at(1, 1)),
                                              0.5 * (omega.at(0, 1) + omega.at(1, 0))});
            return r;
        }
        throw std::domain_error("cayley: direction must be to_disk or to_halfspace");
    }
    if (cmd == "group.check") {
        Mat4d m = mat4d_from_json(p.at("matrix"));
        auto eps = in_g_hat(m, tol);
        json r{{"in_g_hat", eps.has_value()}};
        if (eps) {
            r["epsilon"] = *eps;
            r["in_stabilizer"] = in_stabilizer(GHatElement{m, *eps}, tol);
        }
        return r;
    }
    if (cmd == "group.split") {
        GHatElement g = make_g_hat(mat4d_from_json(p.at("matrix")), tol);
        Sl2Pair pair = decompose_sl2_pair(g, tol);
        return to_json(pair);
    }
    if (cmd == "group.fuse") {
        GHatElement g = compose_sl2_pair(sl2_pair_from_json(p), tol);
        return to_json(g);
    }
    if (cmd == "group.sample") {
        return to_json(sample_g_hat_plus(seed));
    }
    if (cmd == "dist") {
        DistanceBreakdown d = distance(hat_point_from_json(p.at("p1")),
                                       hat_point_from_json(p.at("p2")), tol);
        return json{{"rho", d.rho}, {"A", d.A}, {"B", d.B}, {"lambda", d.lambda}, {"mu", d.mu}};
    }
    if (cmd == "geodesic") {
        HatPoint p1 = hat_point_from_json(p.at("p1"));
        HatPoint p2 = hat_point_from_json(p.at("p2"));
        double s0 = distance(p1, p2, tol).rho;
        json r{{"s0", s0}};
        if (p.contains("s")) {
            r["point"] = to_json(geodesic_point(p1, p2, p.at("s").get<double>(), tol));
        } else {
            int samples = p.value("samples", 8);
            if (samples < 1 || samples > 100000)
                throw std::domain_error("geodesic: samples must lie in [1, 100000]");
            json pts = json::array();
            for (int i = 0; i <= samples; ++i)
                pts.push_back(to_json(geodesic_point(p1, p2, s0 * i / samples, tol)));
            r["points"] = pts;
        }
        return r;
    }
    if (cmd == "volume") {
        // evaluate before the braced init: a throwing expression inside a
        // json initializer list leaks the partially built node
        double density = volume_density(hat_point_from_json(p.at("point")), tol);
        return json{{"density", density}};
    }
    if (cmd == "laplacian") {
        HatPoint pt = hat_point_from_json(p.at("point"));
        double h = p.value("h", 1e-3);
        double value = laplacian_apply(named_field(p.value("field", "logdet")), pt, h, tol);
        return json{{"value", value}};
    }
    if (cmd == "bundle.gram") {
        RiemannFormSpec spec = form_from_payload(p, tol);
        GramMatrices g = gram_matrices(spec);
        RiemannCheck c = is_riemann_form(spec, tol);
        json r{{"S", to_json(g.s)}, {"E", to_json(g.e)}, {"integral", c.integral}};
        if (c.integral) r["E_int"] = to_json(integral_alternating_gram(spec, tol));
        return r;
    }
    if (cmd == "bundle.check") {
        RiemannCheck c = is_riemann_form(form_from_payload(p, tol), tol);
        return json{{"is_riemann_form", c.ok},
                    {"nondegenerate", c.nondegenerate},
                    {"integral", c.integral},
                    {"reason", c.reason}};
    }
    if (cmd == "bundle.dim") {
        std::int64_t dim = section_dimension(form_from_payload(p, tol), tol);
        return json{{"dimension", dim}};
    }
    if (cmd == "bundle.semichar") {
        RiemannFormSpec spec = form_from_payload(p, tol);
        SemiCharacter chi = canonical_semicharacter(spec, tol);
        json r{{"chi", to_json(chi)}};
        if (p.contains("n")) r["value"] = to_json(chi.value(lattice_index_from_json(p.at("n"))));
        return r;
    }
    if (cmd == "bundle.factor") {
        RiemannFormSpec spec = form_from_payload(p, tol);
        SemiCharacter chi = canonical_semicharacter(spec, tol);
        LatticeIndex alpha = lattice_index_from_json(p.at("alpha"));
        CVec2 z = cvec2_from_json(p.at("z"));
        cplx lg = log_automorphic_factor(spec, chi, alpha, z);
        json r{{"log", to_json(lg)}};
        if (lg.real() < 700.0) r["value"] = to_json(std::exp(lg));
        return r;
    }
    if (cmd == "theta.eval") {
        HatPoint omega = hat_point_from_json(p.at("omega"));
        CVec2 z = cvec2_from_json(p.at("z"));
        ThetaTruncation trunc;
        if (p.contains("radius"))
            trunc = ThetaTruncation{p.at("radius").get<int>(),
                                    theta_tail_bound(omega, z, p.at("radius").get<int>())};
        else
            trunc = choose_truncation(omega, z, p.value("target", 1e-12));
        ThetaValue v = theta_series(omega, z, trunc);
        if (!v.accurate) status = 1; // accuracy warning
        return json{{"value", to_json(v.value)},
                    {"radius", v.radius},
                    {"tail_bound", v.tail_bound},
                    {"accurate", v.accurate}};
    }
    if (cmd == "theta.qp") {
        HatPoint omega = hat_point_from_json(p.at("omega"));
        CVec2 z = cvec2_from_json(p.at("z"));
        std::array<int, 2> m{p.at("m")[0].get<int>(), p.at("m")[1].get<int>()};
        std::array<int, 2> k{p.at("k")[0].get<int>(), p.at("k")[1].get<int>()};
        ThetaTruncation trunc = choose_truncation(omega, z, 1e-12);
        ResidualReport rep = quasi_periodicity_residual(omega, z, m, k, trunc, tol);
        if (!rep.conclusive) status = 1;
        return json{{"residual", rep.residual},
                    {"conclusive", rep.conclusive},
                    {"retries", rep.retries},
                    {"radius", trunc.radius}};
    }
    if (cmd == "theta.bridge") {
        HatPoint omega = hat_point_from_json(p.at("omega"));
        CVec2 z = cvec2_from_json(p.at("z"));
        LatticeIndex alpha = lattice_index_from_json(p.at("alpha"));
        BridgeResult br = principal_bridge_residual(omega, z, alpha, ThetaTruncation{10, 0.0}, tol);
        if (!br.conclusive) status = 1;
        json tw = json::array();
        for (const cplx& t : br.twist) tw.push_back(to_json(t));
        return json{{"residual", br.residual}, {"twist", tw}, {"conclusive", br.conclusive}};
    }
    if (cmd == "picard.dual") {
        LatticeBasis lat = make_lattice(hat_point_from_json(p.at("omega")), tol);
        auto duals = dual_basis(lat, tol);
        double worst = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                double want = (i == j) ? 1.0 : 0.0;
                worst = std::max(worst,
                                 std::abs(duals[static_cast<size_t>(i)](lat.basis_vector(j)).imag() - want));
            }
        json arr = json::array();
        for (const DualPoint& l : duals) arr.push_back(to_json(l));
        return json{{"duals", arr}, {"pairing_residual", worst}};
    }
    if (cmd == "picard.poincare") {
        LatticeBasis lat = make_lattice(hat_point_from_json(p.at("omega")), tol);
        auto duals = dual_basis(lat, tol);
        LatticeIndex alpha = lattice_index_from_json(p.at("alpha"));
        DualPoint ellhat = dual_lattice_point(duals, lattice_index_from_json(p.at("ellhat")));
        CVec2 z = cvec2_from_json(p.at("z"));
        DualPoint ell = p.contains("ell") ? dual_point_from_json(p.at("ell")) : DualPoint{};
        cplx lg = log_poincare_factor(lat, alpha, ellhat, z, ell);
        json r{{"log", to_json(lg)}};
        if (lg.real() < 700.0) r["value"] = to_json(std::exp(lg));
        return r;
    }
    if (cmd == "picard.translate") {
        RiemannFormSpec spec = form_from_payload(p, tol);
        SemiCharacter chi = canonical_semicharacter(spec, tol);
        CVec2 a = cvec2_from_json(p.at("a"));
        TranslationCharacter tc = translation_character(spec, a, tol);
        json vals = json::array();
        for (const cplx& v : tc.values()) vals.push_back(to_json(v));
        json r{{"character_exponents", json::array({tc.exponent[0], tc.exponent[1], tc.exponent[2], tc.exponent[3]})},
               {"character_values", vals},
               {"trivial", tc.is_trivial(tol)}};
        if (p.contains("alpha") && p.contains("z")) {
            cplx lg = log_translate_factor(spec, chi, a, lattice_index_from_json(p.at("alpha")),
                                           cvec2_from_json(p.at("z")));
            r["log"] = to_json(lg);
            if (lg.real() < 700.0) r["value"] = to_json(std::exp(lg));
        }
        return r;
    }
    if (cmd == "picard.kernel") {
        KernelStructure k = kernel_subgroup(form_from_payload(p, tol), tol);
        return json{{"divisors", json::array({k.divisors[0], k.divisors[1], k.divisors[2], k.divisors[3]})},
                    {"order", k.order},
                    {"structure", k.structure}};
    }
    if (cmd == "picard.square") {
        RiemannFormSpec spec = form_from_payload(p, tol);
        SemiCharacter chi = canonical_semicharacter(spec, tol);
        double res = square_theorem_residual(spec, chi, cvec2_from_json(p.at("a")),
                                             cvec2_from_json(p.at("b")), p.value("trials", 100), seed);
        return json{{"residual", res}};
    }
    if (cmd == "picard.curvature") {
        CurvatureResult c = curvature_matrix(form_from_payload(p, tol), seed, tol);
        return json{{"c", to_json(c.c)}, {"constancy_residual", c.constancy_residual}};
    }
    if (cmd == "picard.hodge") {
        HodgeTable t = hodge_numbers();
        json h = json::array();
        for (int pp = 0; pp <= 2; ++pp)
            h.push_back(json::array({t.h[static_cast<size_t>(pp)][0], t.h[static_cast<size_t>(pp)][1],
                                     t.h[static_cast<size_t>(pp)][2]}));
        return json{{"h", h},
                    {"betti", json::array({t.betti[0], t.betti[1], t.betti[2], t.betti[3], t.betti[4]})},
                    {"euler", t.euler()}};
    }
    if (cmd == "verify") {
        std::string suite = p.value("suite", "all");
        int failures = 0;
        json arr = suites_to_json(run_verify(suite, seed), failures);
        if (failures > 0) status = 1;
        return json{{"suites", arr}, {"failures", failures}};
    }
    throw std::domain_error("unknown subcommand: " + cmd);
}

} // namespace

DispatchResult dispatch(const json& request) {
    DispatchResult out;
    out.status = 0;
    json envelope{{"version", kVersion}};
    try {
        std::string cmd = request.at("subcommand").get<std::string>();
        json payload = request.value("payload", json::object());
        std::uint64_t seed = request.value("seed", 0ULL);
        Tolerance tol(request.value("abs_tol", 1e-10), request.value("rel_tol", 1e-9));

        json result = route(cmd, payload, seed, tol, out.status);
        envelope["result"] = result;
        envelope["diagnostics"] =
            json{{"abs_tol", tol.abs_tol}, {"rel_tol", tol.rel_tol}, {"seed", seed}};
    } catch (const json::exception& e) {
        envelope["error"] = json{{"type", "bad_request"}, {"message", e.what()}};
        out.status = 2;
    } catch (const std::domain_error& e) {
        envelope["error"] = json{{"type", "domain_error"}, {"message", e.what()}};
        out.status = 2;
    } catch (const std::invalid_argument& e) {
        envelope["error"] = json{{"type", "usage_error"}, {"message", e.what()}};
        out.status = 2;
    } catch (const std::exception& e) {
        envelope["error"] = json{{"type", "numeric_error"}, {"message", e.what()}};
        out.status = 2;
    }
    out.response = envelope;
    return out;
}

std::string dispatch_json(const std::string& request_json, int& status) {
    json request = json::parse(request_json, nullptr, false);
    if (request.is_discarded()) {
        status = 2;
        return json{{"version", kVersion},
                    {"error", {{"type", "bad_request"}, {"message", "malformed JSON request"}}}}
            .dump();
    }
    DispatchResult r = dispatch(request);
    status = r.status;
    return r.response.dump();
}

} // namespace hs
