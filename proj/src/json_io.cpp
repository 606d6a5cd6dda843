#include "json_io.hpp"

namespace hs {

json to_json(const cplx& v) { return json{{"re", v.real()}, {"im", v.imag()}}; }

cplx cplx_from_json(const json& j) {
    if (j.is_number()) return cplx(j.get<double>(), 0.0);
    return cplx(j.at("re").get<double>(), j.value("im", 0.0));
}

json to_json(const CMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int jj = 0; jj < m.cols; ++jj) row.push_back(to_json(m.at(i, jj)));
        rows.push_back(row);
    }
    return rows;
}

CMat cmat_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw std::domain_error("complex matrix: nested array expected");
    int r = static_cast<int>(j.size());
    int c = static_cast<int>(j[0].size());
    CMat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(j[static_cast<size_t>(i)].size()) != c)
            throw std::domain_error("complex matrix: ragged rows");
        for (int jj = 0; jj < c; ++jj) m.at(i, jj) = cplx_from_json(j[static_cast<size_t>(i)][static_cast<size_t>(jj)]);
    }
    return m;
}

json to_json(const Mat4d& m) {
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
        json row = json::array();
        for (int jj = 0; jj < 4; ++jj) row.push_back(rat(m, i, jj));
        rows.push_back(row);
    }
    return rows;
}

Mat4d mat4d_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw std::domain_error("real 4x4 matrix expected");
    Mat4d m{};
    for (int i = 0; i < 4; ++i) {
        const json& row = j[static_cast<size_t>(i)];
        if (!row.is_array() || row.size() != 4) throw std::domain_error("real 4x4 matrix expected");
        for (int jj = 0; jj < 4; ++jj) rat(m, i, jj) = row[static_cast<size_t>(jj)].get<double>();
    }
    return m;
}

json to_json(const IMat4& m) {
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
        json row = json::array();
        for (int jj = 0; jj < 4; ++jj) row.push_back(iat(m, i, jj));
        rows.push_back(row);
    }
    return rows;
}

IMat4 imat4_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw std::domain_error("integer 4x4 matrix expected");
    IMat4 m{};
    for (int i = 0; i < 4; ++i) {
        const json& row = j[static_cast<size_t>(i)];
        if (!row.is_array() || row.size() != 4) throw std::domain_error("integer 4x4 matrix expected");
        for (int jj = 0; jj < 4; ++jj) iat(m, i, jj) = row[static_cast<size_t>(jj)].get<std::int64_t>();
    }
    return m;
}

json to_json(const HatPoint& p) { return json{{"tau", to_json(p.tau)}, {"z", to_json(p.z)}}; }

HatPoint hat_point_from_json(const json& j) {
    return HatPoint{cplx_from_json(j.at("tau")), cplx_from_json(j.at("z"))};
}

json to_json(const DiskPoint& w) { return json{{"w", to_json(w.matrix())}}; }

DiskPoint disk_point_from_json(const json& j) {
    CMat m = cmat_from_json(j.at("w"));
    if (m.rows != 2 || m.cols != 2) throw std::domain_error("disk point: 2x2 matrix expected");
    return DiskPoint{m.at(0, 0), m.at(0, 1)};
}

json to_json(const GHatElement& g) {
    return json{{"matrix", to_json(g.m)}, {"epsilon", g.epsilon}};
}

GHatElement g_hat_from_json(const json& j) {
    Mat4d m = mat4d_from_json(j.at("matrix"));
    return make_g_hat(m); // epsilon is re-detected, never trusted from the wire
}

json to_json(const Sl2& m) {
    return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})});
}

Sl2 sl2_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || j[0].size() != 2 || j[1].size() != 2)
        throw std::domain_error("2x2 real matrix expected");
    return Sl2{j[0][0].get<double>(), j[0][1].get<double>(), j[1][0].get<double>(), j[1][1].get<double>()};
}

json to_json(const Sl2Pair& p) { return json{{"m1", to_json(p.m1)}, {"m2", to_json(p.m2)}}; }

Sl2Pair sl2_pair_from_json(const json& j) {
    return Sl2Pair{sl2_from_json(j.at("m1")), sl2_from_json(j.at("m2"))};
}

json to_json(const RiemannFormSpec& spec) {
    return json{{"kind", form_kind_name(spec.kind)},
                {"h", to_json(spec.h)},
                {"omega", to_json(spec.lattice.omega)}};
}

RiemannFormSpec form_from_json(const json& j) {
    FormKind kind = form_kind_from_name(j.at("kind").get<std::string>());
    HatPoint omega = hat_point_from_json(j.at("omega"));
    if (kind == FormKind::Custom) return make_custom_form(cmat_from_json(j.at("h")), omega);
    return make_form(kind, omega);
}

json to_json(const SemiCharacter& chi) {
    json base = json::array();
    for (int i = 0; i < 4; ++i) base.push_back(to_json(chi.base_value(i)));
    return json{{"base", base}, {"e", to_json(chi.e)}};
}

json to_json(const CVec2& v) { return json::array({to_json(v[0]), to_json(v[1])}); }

CVec2 cvec2_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::domain_error("complex 2-vector expected");
    return CVec2{cplx_from_json(j[0]), cplx_from_json(j[1])};
}

json to_json(const DualPoint& l) { return json{{"c", json::array({to_json(l.c1), to_json(l.c2)})}}; }

DualPoint dual_point_from_json(const json& j) {
    const json& c = j.at("c");
    if (!c.is_array() || c.size() != 2) throw std::domain_error("dual point: 2 coefficients expected");
    return DualPoint{cplx_from_json(c[0]), cplx_from_json(c[1])};
}

json to_json(const LatticeIndex& n) { return json::array({n[0], n[1], n[2], n[3]}); }

LatticeIndex lattice_index_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw std::domain_error("lattice index: 4 integers expected");
    LatticeIndex n{};
    for (int i = 0; i < 4; ++i) n[static_cast<size_t>(i)] = j[static_cast<size_t>(i)].get<int>();
    return n;
}

} // namespace hs
