#pragma once

#include <json.hpp>

#include "qinterp/habiro.hpp"
#include "qinterp/interp.hpp"
#include "qinterp/knot.hpp"
#include "qinterp/laurent.hpp"
#include "qinterp/partition.hpp"
#include "qinterp/rational.hpp"
#include "qinterp/sympoly.hpp"

namespace qinterp {

using Json = nlohmann::json;

// {"var":"v","coeffs":{"<v-exponent>":"<decimal integer>"}}
Json laurent_to_json(const LaurentV& p);
LaurentV laurent_from_json(const Json& j);

// {"num":<LaurentV>,"den":<LaurentV>}
Json rational_to_json(const RationalQ& r);
RationalQ rational_from_json(const Json& j);

// [3,2]; "[3,2]" when used as a map key.
Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);
Partition partition_from_key(const std::string& key);

// {"nvars":N,"terms":{"[a1,a2,...]":<LaurentV>}}
Json sympoly_to_json(const SymPoly& f);
SymPoly sympoly_from_json(const Json& j);

// {"trunc":T,"rep":<LaurentV>}
Json habiro_to_json(const HabiroElement& h);
HabiroElement habiro_from_json(const Json& j);

// {"N":..,"bound":[..],"entries":{"inner|outer":<LaurentV / RationalQ>}}
Json cmatrix_to_json(const CMatrix& m);
CMatrix cmatrix_from_json(const Json& j);
Json dmatrix_to_json(const DMatrix& m);
DMatrix dmatrix_from_json(const Json& j);

// {"N":..,"normalization":"unknot=1","values":{"[2,1]":<LaurentV>,...}}
Json knot_table_to_json(const KnotTable& t);
KnotTable knot_table_from_json(const Json& j);

Json cyclo_coeffs_to_json(const CycloCoeffs& c);

}  // namespace qinterp
