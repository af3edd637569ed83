#pragma once

#include <jfs/facial.hpp>
#include <jfs/hpolyhedron.hpp>
#include <jfs/polyfunc.hpp>
#include <jfs/subspace.hpp>
#include <jfs/vregion.hpp>

#include <json.hpp>

namespace jfs {

// JSON views of library values. Rationals are strings ("p/q") so no precision is lost.
nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const Vec& v);
nlohmann::json to_json(const std::vector<Vec>& vs);
nlohmann::json to_json(const Subspace& s);
nlohmann::json to_json(const VRegion& r);
nlohmann::json to_json(const ExtRational& v);
nlohmann::json to_json(const JFS& j);
nlohmann::json to_json(const ReductionTrace& t);

}  // namespace jfs
