// Command-line front end. Builds a JSON request from flags (or --input),
// hands it to the shared library through the C interface, prints the
// response and exits with the dispatch status (0 ok, 1 check failure,
// 2 domain/usage error).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hatsiegel/hatsiegel.h"

namespace {

using json = nlohmann::json;

struct CommonOpts {
    std::optional<std::string> input;
    std::optional<std::uint64_t> seed;
    std::optional<double> abs_tol;
    std::optional<double> rel_tol;
    bool pretty = false;
};

struct PointFlags {
    std::optional<double> retau, imtau, rez, imz;

    bool any() const { return retau || imtau || rez || imz; }
    json to_point() const {
        json tau{{"re", retau.value_or(0.0)}, {"im", imtau.value_or(0.0)}};
        json z{{"re", rez.value_or(0.0)}, {"im", imz.value_or(0.0)}};
        return json{{"tau", tau}, {"z", z}};
    }
};

void add_point_flags(CLI::App* cmd, PointFlags& f, const std::string& what) {
    cmd->add_option("--retau", f.retau, "Re(tau) of " + what);
    cmd->add_option("--imtau", f.imtau, "Im(tau) of " + what);
    cmd->add_option("--rez", f.rez, "Re(z) of " + what);
    cmd->add_option("--imz", f.imz, "Im(z) of " + what);
}

json parse_json_text(const std::string& text, const std::string& what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw CLI::ValidationError(what + ": malformed JSON");
    return j;
}

json load_input(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw CLI::ValidationError("--input: cannot open " + path);
        buf << in.rdbuf();
    }
    return parse_json_text(buf.str(), "--input");
}

int run_request(const CommonOpts& common, const std::string& subcommand, json payload) {
    json request{{"subcommand", subcommand}, {"payload", payload}};
    if (common.seed) request["seed"] = *common.seed;
    if (common.abs_tol) request["abs_tol"] = *common.abs_tol;
    if (common.rel_tol) request["rel_tol"] = *common.rel_tol;

    hs_session* session = hs_session_new();
    char* response = nullptr;
    hs_status status = hs_dispatch_json(session, request.dump().c_str(), &response);
    if (response) {
        if (common.pretty)
            std::cout << json::parse(response).dump(2) << "\n";
        else
            std::cout << response << "\n";
        hs_string_free(response);
    }
    hs_session_free(session);
    return static_cast<int>(status);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"special Siegel half-space geometry and abelian-surface line bundles"};
    app.set_version_flag("--version", hs_version());
    app.require_subcommand(1);

    CommonOpts common;
    app.add_option("--seed", common.seed, "seed for pseudo-random streams")->group("Global");
    app.add_option("--abs-tol", common.abs_tol, "absolute comparison tolerance")->group("Global");
    app.add_option("--rel-tol", common.rel_tol, "relative comparison tolerance")->group("Global");
    app.add_flag("--pretty", common.pretty, "pretty-print the response")->group("Global");

    // every leaf command: payload from --input (file or '-') overlaid by flags
    struct Leaf {
        CLI::App* cmd;
        std::string name; // dispatch subcommand
        std::optional<std::string> input;
        PointFlags omega;
        std::optional<std::string> kind;
        std::optional<std::string> matrix, m1, m2, p1, p2, point, w, z, alpha, n, a, b, ell, ellhat, mvec, kvec, h;
        std::optional<double> s, step, target;
        std::optional<int> samples, radius, trials;
        std::optional<std::string> direction, field, suite;
    };
    std::vector<std::unique_ptr<Leaf>> storage;
    std::vector<Leaf*> leaves;

    auto make_leaf = [&](CLI::App* parent, const std::string& cli_name, const std::string& dispatch_name,
                         const std::string& desc) {
        storage.push_back(std::make_unique<Leaf>());
        Leaf* leaf = storage.back().get();
        leaf->cmd = parent->add_subcommand(cli_name, desc);
        leaf->name = dispatch_name;
        leaf->cmd->add_option("--input,-i", leaf->input, "payload JSON file ('-' for stdin)");
        leaves.push_back(leaf);
        return leaf;
    };

    Leaf* point = make_leaf(&app, "point", "point", "membership in the special half-space");
    add_point_flags(point->cmd, point->omega, "the point");

    Leaf* act = make_leaf(&app, "act", "act", "apply a symplectic matrix to a point");
    act->cmd->add_option("--matrix", act->matrix, "4x4 real matrix (JSON)");
    act->cmd->add_option("--point", act->point, "base point (JSON)");
    add_point_flags(act->cmd, act->omega, "the base point");

    Leaf* cayley = make_leaf(&app, "cayley", "cayley", "Cayley transform between domain models");
    cayley->cmd->add_option("--direction", cayley->direction, "to_disk or to_halfspace");
    cayley->cmd->add_option("--w", cayley->w, "bounded-domain point (JSON 2x2)");
    add_point_flags(cayley->cmd, cayley->omega, "the half-space point");

    CLI::App* group = app.add_subcommand("group", "symmetry-group operations");
    group->require_subcommand(1);
    Leaf* gcheck = make_leaf(group, "check", "group.check", "membership and sign detection");
    gcheck->cmd->add_option("--matrix", gcheck->matrix, "4x4 real matrix (JSON)");
    Leaf* gsplit = make_leaf(group, "split", "group.split", "split into two unimodular factors");
    gsplit->cmd->add_option("--matrix", gsplit->matrix, "4x4 real matrix (JSON)");
    Leaf* gfuse = make_leaf(group, "fuse", "group.fuse", "fuse two unimodular factors");
    gfuse->cmd->add_option("--m1", gfuse->m1, "first 2x2 factor (JSON)");
    gfuse->cmd->add_option("--m2", gfuse->m2, "second 2x2 factor (JSON)");
    Leaf* gsample = make_leaf(group, "sample", "group.sample", "seeded pseudo-random element");
    (void)gsample;

    Leaf* dist = make_leaf(&app, "dist", "dist", "invariant distance between two points");
    dist->cmd->add_option("--p1", dist->p1, "first point (JSON)");
    dist->cmd->add_option("--p2", dist->p2, "second point (JSON)");

    Leaf* geodesic = make_leaf(&app, "geodesic", "geodesic", "geodesic sampling between two points");
    geodesic->cmd->add_option("--p1", geodesic->p1, "first point (JSON)");
    geodesic->cmd->add_option("--p2", geodesic->p2, "second point (JSON)");
    geodesic->cmd->add_option("--samples", geodesic->samples, "number of arc subdivisions");
    geodesic->cmd->add_option("--s", geodesic->s, "single arc-length parameter");

    Leaf* volume = make_leaf(&app, "volume", "volume", "invariant volume density at a point");
    volume->cmd->add_option("--point", volume->point, "point (JSON)");
    add_point_flags(volume->cmd, volume->omega, "the point");

    Leaf* laplacian = make_leaf(&app, "laplacian", "laplacian", "invariant Laplacian of a named field");
    laplacian->cmd->add_option("--point", laplacian->point, "point (JSON)");
    add_point_flags(laplacian->cmd, laplacian->omega, "the point");
    laplacian->cmd->add_option("--field", laplacian->field, "const, x, logdet or gaussian");
    laplacian->cmd->add_option("--step", laplacian->step, "finite-difference step");

    CLI::App* bundle = app.add_subcommand("bundle", "Riemann forms and automorphic factors");
    bundle->require_subcommand(1);
    auto add_form_flags = [&](Leaf* leaf) {
        leaf->cmd->add_option("--kind", leaf->kind, "omega, tau, star or custom");
        add_point_flags(leaf->cmd, leaf->omega, "the base point");
        leaf->cmd->add_option("--hmat", leaf->h, "custom 2x2 Hermitian coefficient matrix (JSON)");
    };
    Leaf* bgram = make_leaf(bundle, "gram", "bundle.gram", "Gram matrices of the form");
    add_form_flags(bgram);
    Leaf* bcheck = make_leaf(bundle, "check", "bundle.check", "Riemann-form conditions");
    add_form_flags(bcheck);
    Leaf* bdim = make_leaf(bundle, "dim", "bundle.dim", "section-space dimension");
    add_form_flags(bdim);
    Leaf* bsemi = make_leaf(bundle, "semichar", "bundle.semichar", "canonical semi-character");
    add_form_flags(bsemi);
    bsemi->cmd->add_option("--n", bsemi->n, "lattice index (JSON [n1,n2,n3,n4])");
    Leaf* bfactor = make_leaf(bundle, "factor", "bundle.factor", "automorphic factor value");
    add_form_flags(bfactor);
    bfactor->cmd->add_option("--alpha", bfactor->alpha, "lattice index (JSON)");
    bfactor->cmd->add_option("--z", bfactor->z, "evaluation point (JSON [z1, z2])");

    CLI::App* theta = app.add_subcommand("theta", "theta series");
    theta->require_subcommand(1);
    Leaf* teval = make_leaf(theta, "eval", "theta.eval", "truncated series value");
    add_point_flags(teval->cmd, teval->omega, "the period point");
    teval->cmd->add_option("--z", teval->z, "argument (JSON [z1, z2])");
    teval->cmd->add_option("--radius", teval->radius, "summation radius");
    teval->cmd->add_option("--target", teval->target, "tail-bound target");
    Leaf* tqp = make_leaf(theta, "qp", "theta.qp", "quasi-periodicity residual");
    add_point_flags(tqp->cmd, tqp->omega, "the period point");
    tqp->cmd->add_option("--z", tqp->z, "argument (JSON [z1, z2])");
    tqp->cmd->add_option("--m", tqp->mvec, "period shift (JSON [m1, m2])");
    tqp->cmd->add_option("--k", tqp->kvec, "integer shift (JSON [k1, k2])");
    Leaf* tbridge = make_leaf(theta, "bridge", "theta.bridge", "principal-case factor bridge residual");
    add_point_flags(tbridge->cmd, tbridge->omega, "the period point");
    tbridge->cmd->add_option("--z", tbridge->z, "argument (JSON [z1, z2])");
    tbridge->cmd->add_option("--alpha", tbridge->alpha, "lattice index (JSON)");

    CLI::App* picard = app.add_subcommand("picard", "dual surface and universal bundle");
    picard->require_subcommand(1);
    Leaf* pdual = make_leaf(picard, "dual", "picard.dual", "dual-lattice basis");
    add_point_flags(pdual->cmd, pdual->omega, "the base point");
    Leaf* ppoin = make_leaf(picard, "poincare", "picard.poincare", "universal-bundle factor");
    add_point_flags(ppoin->cmd, ppoin->omega, "the base point");
    ppoin->cmd->add_option("--alpha", ppoin->alpha, "lattice index (JSON)");
    ppoin->cmd->add_option("--ellhat", ppoin->ellhat, "dual-lattice index (JSON)");
    ppoin->cmd->add_option("--z", ppoin->z, "argument (JSON [z1, z2])");
    ppoin->cmd->add_option("--ell", ppoin->ell, "dual point (JSON {\"c\": [c1, c2]})");
    Leaf* ptrans = make_leaf(picard, "translate", "picard.translate", "translated factor and character");
    add_form_flags(ptrans);
    ptrans->cmd->add_option("--a", ptrans->a, "translation (JSON [a1, a2])");
    ptrans->cmd->add_option("--alpha", ptrans->alpha, "lattice index (JSON)");
    ptrans->cmd->add_option("--z", ptrans->z, "argument (JSON [z1, z2])");
    Leaf* pkernel = make_leaf(picard, "kernel", "picard.kernel", "kernel subgroup of the polarization");
    add_form_flags(pkernel);
    Leaf* psquare = make_leaf(picard, "square", "picard.square", "square-theorem residual");
    add_form_flags(psquare);
    psquare->cmd->add_option("--a", psquare->a, "first translation (JSON [a1, a2])");
    psquare->cmd->add_option("--b", psquare->b, "second translation (JSON [a1, a2])");
    psquare->cmd->add_option("--trials", psquare->trials, "number of random trials");
    Leaf* pcurv = make_leaf(picard, "curvature", "picard.curvature", "constant curvature coefficients");
    add_form_flags(pcurv);
    Leaf* phodge = make_leaf(picard, "hodge", "picard.hodge", "Hodge and Betti numbers");
    (void)phodge;

    Leaf* verify = make_leaf(&app, "verify", "verify", "run the property suites");
    verify->cmd->add_option("--suite", verify->suite, "suite name or 'all'");

    // let the global flags appear after the subcommand as well
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        a->fallthrough();
        for (CLI::App* sub : a->get_subcommands({})) enable_fallthrough(sub);
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // flag misuse is a usage error
    }

    try {
        for (Leaf* leaf : leaves) {
            if (!leaf->cmd->parsed()) continue;
            json payload = leaf->input ? load_input(*leaf->input) : json::object();

            if (leaf->omega.any()) {
                // point-style commands take the point itself; form/theta
                // commands take it as the period point "omega"
                if (leaf->name == "point")
                    payload.merge_patch(leaf->omega.to_point());
                else if (leaf->name == "act" || leaf->name == "volume" || leaf->name == "laplacian")
                    payload["point"] = leaf->omega.to_point();
                else if (leaf->name == "cayley")
                    payload["point"] = leaf->omega.to_point();
                else
                    payload["omega"] = leaf->omega.to_point();
            }
            auto set_json = [&](const char* key, const std::optional<std::string>& text) {
                if (text) payload[key] = parse_json_text(*text, key);
            };
            set_json("matrix", leaf->matrix);
            set_json("m1", leaf->m1);
            set_json("m2", leaf->m2);
            set_json("p1", leaf->p1);
            set_json("p2", leaf->p2);
            set_json("point", leaf->point);
            set_json("w", leaf->w);
            set_json("z", leaf->z);
            set_json("alpha", leaf->alpha);
            set_json("n", leaf->n);
            set_json("a", leaf->a);
            set_json("b", leaf->b);
            set_json("ell", leaf->ell);
            set_json("ellhat", leaf->ellhat);
            set_json("m", leaf->mvec);
            set_json("k", leaf->kvec);
            set_json("h", leaf->h);
            if (leaf->kind) payload["kind"] = *leaf->kind;
            if (leaf->direction) payload["direction"] = *leaf->direction;
            if (leaf->field) payload["field"] = *leaf->field;
            if (leaf->suite) payload["suite"] = *leaf->suite;
            if (leaf->s) payload["s"] = *leaf->s;
            if (leaf->step) payload["h"] = *leaf->step;
            if (leaf->target) payload["target"] = *leaf->target;
            if (leaf->samples) payload["samples"] = *leaf->samples;
            if (leaf->radius) payload["radius"] = *leaf->radius;
            if (leaf->trials) payload["trials"] = *leaf->trials;

            return run_request(common, leaf->name, payload);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    std::cerr << "no subcommand selected\n";
    return 2;
}
