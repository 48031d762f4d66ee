#pragma once

#include "json.hpp"
#include "mgq/ncpoly.hpp"

namespace mgq::detail {

using ojson = nlohmann::ordered_json;

ojson poly_json(const Poly& p);
Poly poly_from(const ojson& j);
ojson relation_json(const Relation& r);
Relation relation_from(const ojson& j);

}  // namespace mgq::detail
