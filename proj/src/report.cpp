#include <jfs/report.hpp>

namespace jfs {

using nlohmann::json;

json to_json(const Rational& r) { return to_string(r); }

json to_json(const Vec& v)
{
    json a = json::array();
    for (const Rational& x : v)
        a.push_back(to_string(x));
    return a;
}

json to_json(const std::vector<Vec>& vs)
{
    json a = json::array();
    for (const Vec& v : vs)
        a.push_back(to_json(v));
    return a;
}

json to_json(const Subspace& s) { return {{"dim", s.dim()}, {"basis", to_json(s.basis())}}; }

json to_json(const VRegion& r)
{
    if (r.is_empty())
        return {{"empty", true}};
    return {{"points", to_json(r.points)}, {"rays", to_json(r.rays)}, {"lineality", to_json(r.lineality)}};
}

json to_json(const ExtRational& v)
{
    switch (v.kind)
    {
    case ExtRational::Kind::NegInf: return "-inf";
    case ExtRational::Kind::PosInf: return "+inf";
    case ExtRational::Kind::Finite: break;
    }
    return to_string(v.value);
}

json to_json(const JFS& j)
{
    json out = {{"T", to_json(j.T)}, {"T_a_dim", j.T_a_dim}};
    out["base_point"] = j.base_point ? to_json(*j.base_point) : json(nullptr);
    return out;
}

json to_json(const ReductionTrace& t)
{
    json steps = json::array();
    for (const ReductionStep& s : t.steps)
        steps.push_back({{"T", to_json(s.T)}, {"K_span", to_json(s.K_span)}, {"K_elements", to_json(s.K_elements)}});
    return {{"variant", t.variant == ReductionVariant::Nested ? "nested" : "pointwise"}, {"ell", t.ell}, {"steps", steps}};
}

}  // namespace jfs
