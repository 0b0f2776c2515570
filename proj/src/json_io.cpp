#include "qinterp/json_io.hpp"

#include <sstream>
#include <stdexcept>

#include "qinterp/errors.hpp"

namespace qinterp {

Json laurent_to_json(const LaurentV& p) {
    Json coeffs = Json::object();
    for (const auto& [e, c] : p.terms()) coeffs[std::to_string(e)] = c.str();
    return Json{{"var", "v"}, {"coeffs", coeffs}};
}

LaurentV laurent_from_json(const Json& j) {
    if (!j.is_object() || j.value("var", "") != std::string("v") || !j.contains("coeffs"))
        throw TableError("BadLaurent", "expected {\"var\":\"v\",\"coeffs\":{...}}");
    LaurentV p;
    for (const auto& [key, val] : j.at("coeffs").items()) {
        const int e = std::stoi(key);
        p.add_term(e, Int(val.get<std::string>()));
    }
    return p;
}

Json rational_to_json(const RationalQ& r) {
    return Json{{"num", laurent_to_json(r.num())}, {"den", laurent_to_json(r.den())}};
}

RationalQ rational_from_json(const Json& j) {
    return RationalQ(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

Json partition_to_json(const Partition& p) {
    Json out = Json::array();
    for (int x : p.parts()) out.push_back(x);
    return out;
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw TableError("BadPartition", "expected an integer array");
    std::vector<int> parts;
    for (const auto& x : j) parts.push_back(x.get<int>());
    return Partition(std::move(parts));
}

Partition partition_from_key(const std::string& key) {
    return partition_from_json(Json::parse(key));
}

Json sympoly_to_json(const SymPoly& f) {
    Json terms = Json::object();
    for (const auto& [key, c] : f.terms())
        terms[Partition(key).str()] = laurent_to_json(c);
    return Json{{"nvars", f.nvars()}, {"terms", terms}};
}

SymPoly sympoly_from_json(const Json& j) {
    SymPoly f(j.at("nvars").get<int>());
    for (const auto& [key, val] : j.at("terms").items())
        f.add_term(partition_from_key(key).parts(), laurent_from_json(val));
    return f;
}

Json habiro_to_json(const HabiroElement& h) {
    return Json{{"trunc", h.trunc()}, {"rep", laurent_to_json(h.rep())}};
}

HabiroElement habiro_from_json(const Json& j) {
    return HabiroElement::embed(laurent_from_json(j.at("rep")), j.at("trunc").get<int>());
}

namespace {

std::string pair_key(const Partition& inner, const Partition& outer) {
    return inner.str() + "|" + outer.str();
}

std::pair<Partition, Partition> parse_pair_key(const std::string& key) {
    const auto bar = key.find('|');
    if (bar == std::string::npos)
        throw TableError("BadEntryKey", "expected \"inner|outer\" key, got " + key);
    return {partition_from_key(key.substr(0, bar)), partition_from_key(key.substr(bar + 1))};
}

}  // namespace

Json cmatrix_to_json(const CMatrix& m) {
    Json entries = Json::object();
    for (const auto& [key, val] : m.entries)
        entries[pair_key(key.first, key.second)] = laurent_to_json(val);
    return Json{{"N", m.N}, {"bound", partition_to_json(m.bound)}, {"entries", entries}};
}

CMatrix cmatrix_from_json(const Json& j) {
    CMatrix m;
    m.N = j.at("N").get<int>();
    m.bound = partition_from_json(j.at("bound"));
    for (const auto& [key, val] : j.at("entries").items())
        m.entries.emplace(parse_pair_key(key), laurent_from_json(val));
    return m;
}

Json dmatrix_to_json(const DMatrix& m) {
    Json entries = Json::object();
    for (const auto& [key, val] : m.entries)
        entries[pair_key(key.first, key.second)] = rational_to_json(val);
    return Json{{"N", m.N}, {"bound", partition_to_json(m.bound)}, {"entries", entries}};
}

DMatrix dmatrix_from_json(const Json& j) {
    DMatrix m;
    m.N = j.at("N").get<int>();
    m.bound = partition_from_json(j.at("bound"));
    for (const auto& [key, val] : j.at("entries").items())
        m.entries.emplace(parse_pair_key(key), rational_from_json(val));
    return m;
}

Json knot_table_to_json(const KnotTable& t) {
    Json values = Json::object();
    for (const auto& [mu, val] : t.values()) values[mu.str()] = laurent_to_json(val);
    return Json{{"N", t.N()},
                {"normalization", "unknot=1"},
                {"provenance",
                 t.provenance() == KnotTable::Provenance::builtin ? "builtin" : "ingested"},
                {"values", values}};
}

KnotTable knot_table_from_json(const Json& j) {
    if (j.value("normalization", "") != std::string("unknot=1"))
        throw TableError("BadNormalization", "table must declare normalization \"unknot=1\"");
    const int N = j.at("N").get<int>();
    std::map<Partition, LaurentV> values;
    for (const auto& [key, val] : j.at("values").items())
        values.emplace(partition_from_key(key), laurent_from_json(val));
    return KnotTable(N, std::move(values), KnotTable::Provenance::ingested, N == 2);
}

Json cyclo_coeffs_to_json(const CycloCoeffs& c) {
    Json coeffs = Json::object();
    for (const auto& [lam, val] : c.coeffs) coeffs[lam.str()] = laurent_to_json(val);
    return Json{{"N", c.N}, {"coeffs", coeffs}};
}

}  // namespace qinterp
