#pragma once

#include <json.hpp>

#include "hlroots/partition.hpp"
#include "hlroots/qpoly.hpp"
#include "hlroots/ribbon_tableau.hpp"
#include "hlroots/rigged_config.hpp"
#include "hlroots/symfunc.hpp"
#include "hlroots/tuple_tableau.hpp"

namespace hlroots {

using Json = nlohmann::json;

Json to_json(const Partition& lambda);
Json to_json(const PartitionTuple& tuple);
/// Exponent -> coefficient map; coefficients beyond 64 bits become strings.
Json to_json(const IntPolynomial& p);
Json to_json(const RatPolynomial& p);
/// {"order": k, "residue": polynomial map}.
Json to_json(const Cyclotomic<Rational>& v);
/// {"shape", "k", "ribbons": [{"label", "cells": [[r, c], ...]}]}.
Json to_json(const RibbonTableau& t);
/// One list of rows per component.
Json to_json(const TupleTableau& t);
Json to_json(const DiagonalVector& d);
/// {"shapes": [...], "riggings": [[[...], ...], ...]}.
Json to_json(const RiggedConfiguration& rc);
Json to_json(const IntMatrix& m);
/// {"basis", "degree", "terms": [{"partition", "coeff"}]}.
Json to_json(const QSymFunction& f);
Json to_json(const RootSymFunction& f);

Partition partition_from_json(const Json& j);
PartitionTuple partition_tuple_from_json(const Json& j);
IntPolynomial polynomial_from_json(const Json& j);
RibbonTableau ribbon_tableau_from_json(const Json& j);
/// Accepts one list of rows per component; a component given as a flat
/// list of labels is read as a single row.
TupleTableau tuple_from_json(const Json& j, const std::vector<int>& content_offsets = {});
RiggedConfiguration rigged_configuration_from_json(const Json& j, const Partition& lambda,
                                                   const Partition& mu);

}  // namespace hlroots
