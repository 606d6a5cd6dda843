#pragma once

#include <json.hpp>

#include "exact.hpp"
#include "group.hpp"
#include "halfspace.hpp"
#include "picard.hpp"
#include "polarization.hpp"
#include "smallmat.hpp"

// Wire formats:
//   complex scalar        {"re": f, "im": f}
//   complex matrix        row-major nested arrays of complex scalars
//   real matrix           nested arrays of floats
//   HatPoint              {"tau": cplx, "z": cplx}
//   GHatElement           {"matrix": 4x4 floats, "epsilon": +-1}
//   Sl2Pair               {"m1": 2x2 floats, "m2": 2x2 floats}
//   RiemannFormSpec       {"kind": "omega|tau|star|custom", "h": 2x2 cplx, "omega": HatPoint}

namespace hs {

using json = nlohmann::json;

json to_json(const cplx& v);
cplx cplx_from_json(const json& j);

json to_json(const CMat& m);
CMat cmat_from_json(const json& j);

json to_json(const Mat4d& m);
Mat4d mat4d_from_json(const json& j);

json to_json(const IMat4& m);
IMat4 imat4_from_json(const json& j);

json to_json(const HatPoint& p);
HatPoint hat_point_from_json(const json& j);

json to_json(const DiskPoint& w);
DiskPoint disk_point_from_json(const json& j);

json to_json(const GHatElement& g);
GHatElement g_hat_from_json(const json& j);

json to_json(const Sl2& m);
Sl2 sl2_from_json(const json& j);

json to_json(const Sl2Pair& p);
Sl2Pair sl2_pair_from_json(const json& j);

json to_json(const RiemannFormSpec& spec);
RiemannFormSpec form_from_json(const json& j);

json to_json(const SemiCharacter& chi);

json to_json(const CVec2& v);
CVec2 cvec2_from_json(const json& j);

json to_json(const DualPoint& l);
DualPoint dual_point_from_json(const json& j);

json to_json(const LatticeIndex& n);
LatticeIndex lattice_index_from_json(const json& j);

} // namespace hs
