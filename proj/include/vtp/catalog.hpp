#pragma once

#include "vtp/builder.hpp"
#include "vtp/cayley.hpp"
#include "vtp/enumerator.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace vtp {

inline constexpr int kCatalogVersion = 1;

struct CatalogRecord {
    std::string id;
    LabelingScheme scheme;
    std::string ptv;
    bool aperiodic = false;
    std::string connectivity;
    Stabilizer stabilizer;
    std::vector<std::string> edge_classes;  // a_i^k, k = 1 when crossing reverses rotation
    std::vector<std::string> borders;       // one per face orbit
    int degree() const { return scheme.degree(); }
    bool operator==(const CatalogRecord &o) const;
};

struct Catalog {
    int degree = 0;
    int periodic = 0;
    int aperiodic = 0;
    std::vector<CatalogRecord> records;
};

std::string family_id(const SchemeKey &key);
CatalogRecord make_record(const SchemeFamily &f);
Catalog make_catalog(int degree, const std::vector<SchemeFamily> &fams, bool include_aperiodic);

nlohmann::ordered_json pair_to_json(const VectorPair &p);
VectorPair pair_from_json(const nlohmann::json &j);
nlohmann::ordered_json scheme_to_json(const LabelingScheme &s);
LabelingScheme scheme_from_json(const nlohmann::json &j);
nlohmann::ordered_json record_to_json(const CatalogRecord &r);
CatalogRecord record_from_json(const nlohmann::json &j);

std::string serialize(const Catalog &c);
Catalog parse_catalog(const std::string &text);
Catalog load_catalog(const std::string &path);
void save_text(const std::string &path, const std::string &text);
std::string load_text(const std::string &path);

// Scheme file: a bare scheme object or a catalog record.
LabelingScheme load_scheme(const std::string &path);
const CatalogRecord *find_record(const Catalog &c, const std::string &id);

nlohmann::ordered_json ball_to_json(const GraphBall &b);

} // namespace vtp
