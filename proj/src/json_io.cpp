#include "hopfkit/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hopfkit {

namespace {

std::size_t get_dim(const Json& j) {
  std::size_t d = j.at("dim").get<std::size_t>();
  if (d == 0) throw std::invalid_argument("json: dim must be positive");
  return d;
}

// name/dim/unit/mult block shared by finalg, hopf and weakhopf schemas
void algebra_fields(Json& j, const FinAlgebra& a) {
  j["name"] = a.name;
  j["dim"] = a.dim;
  j["unit"] = vec_to_json(a.unit);
  Json mult = Json::array();
  for (std::size_t i = 0; i < a.dim; ++i) {
    Json plane = Json::array();
    for (std::size_t k = 0; k < a.dim; ++k) {
      Json row = Json::array();
      for (std::size_t l = 0; l < a.dim; ++l) row.push_back(rat_to_string(a.c(i, k, l)));
      plane.push_back(std::move(row));
    }
    mult.push_back(std::move(plane));
  }
  j["mult"] = std::move(mult);
}

FinAlgebra algebra_from_fields(const Json& j) {
  FinAlgebra a(j.at("name").get<std::string>(), get_dim(j));
  a.unit = vec_from_json(j.at("unit"));
  if (a.unit.size() != a.dim) throw std::invalid_argument("json: unit length != dim");
  const Json& mult = j.at("mult");
  if (mult.size() != a.dim) throw std::invalid_argument("json: mult shape");
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (mult[i].size() != a.dim) throw std::invalid_argument("json: mult shape");
    for (std::size_t k = 0; k < a.dim; ++k) {
      if (mult[i][k].size() != a.dim) throw std::invalid_argument("json: mult shape");
      for (std::size_t l = 0; l < a.dim; ++l)
        a.c(i, k, l) = rat_from_string(mult[i][k][l].get<std::string>());
    }
  }
  return a;
}

void coalgebra_fields(Json& j, const Matrix& comult, const Vec& counit, const Matrix& antipode) {
  j["comult"] = matrix_to_json(comult);
  j["counit"] = vec_to_json(counit);
  j["antipode"] = matrix_to_json(antipode);
}

}  // namespace

Json vec_to_json(const Vec& v) {
  Json j = Json::array();
  for (const Rat& x : v) j.push_back(rat_to_string(x));
  return j;
}

Vec vec_from_json(const Json& j) {
  Vec v;
  v.reserve(j.size());
  for (const Json& e : j) v.push_back(rat_from_string(e.get<std::string>()));
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols; ++k) row.push_back(rat_to_string(m.at(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  std::size_t rows = j.size();
  std::size_t cols = rows == 0 ? 0 : j[0].size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols) throw std::invalid_argument("json: ragged matrix");
    for (std::size_t k = 0; k < cols; ++k)
      m.at(i, k) = rat_from_string(j[i][k].get<std::string>());
  }
  return m;
}

Json group_to_json(const GroupTable& g) {
  Json j;
  j["schema"] = "group/v1";
  j["name"] = g.name;
  j["order"] = g.order;
  j["table"] = g.table;
  return j;
}

GroupTable group_from_json(const Json& j) {
  require_schema(j, "group/v1");
  GroupTable g;
  g.name = j.at("name").get<std::string>();
  g.order = j.at("order").get<std::size_t>();
  g.table = j.at("table").get<std::vector<std::vector<std::size_t>>>();
  validate_group_table(g);
  return g;
}

Json algebra_to_json(const FinAlgebra& a) {
  Json j;
  j["schema"] = "finalg/v1";
  algebra_fields(j, a);
  return j;
}

FinAlgebra algebra_from_json(const Json& j) {
  require_schema(j, "finalg/v1");
  return algebra_from_fields(j);
}

Json hopf_to_json(const HopfStructure& h) {
  Json j;
  j["schema"] = "hopf/v1";
  algebra_fields(j, h.alg);
  coalgebra_fields(j, h.comult, h.counit, h.antipode);
  return j;
}

HopfStructure hopf_from_json(const Json& j) {
  require_schema(j, "hopf/v1");
  HopfStructure h;
  h.alg = algebra_from_fields(j);
  h.comult = matrix_from_json(j.at("comult"));
  h.counit = vec_from_json(j.at("counit"));
  h.antipode = matrix_from_json(j.at("antipode"));
  return h;
}

Json weakhopf_to_json(const WeakHopfStructure& w) {
  Json j;
  j["schema"] = "weakhopf/v1";
  algebra_fields(j, w.alg);
  coalgebra_fields(j, w.comult, w.counit, w.antipode);
  return j;
}

WeakHopfStructure weakhopf_from_json(const Json& j) {
  require_schema(j, "weakhopf/v1");
  WeakHopfStructure w;
  w.alg = algebra_from_fields(j);
  w.comult = matrix_from_json(j.at("comult"));
  w.counit = vec_from_json(j.at("counit"));
  w.antipode = matrix_from_json(j.at("antipode"));
  return w;
}

Json pair_to_json(const ExtensionPair& p) {
  Json j;
  j["schema"] = "pair/v1";
  Json big, small;
  algebra_fields(big, p.big);
  algebra_fields(small, p.small);
  j["big"] = std::move(big);
  j["small"] = std::move(small);
  j["embed"] = matrix_to_json(p.embed);
  return j;
}

ExtensionPair pair_from_json(const Json& j) {
  require_schema(j, "pair/v1");
  // make_extension_pair re-validates the embedding
  return make_extension_pair(algebra_from_fields(j.at("big")),
                             algebra_from_fields(j.at("small")),
                             matrix_from_json(j.at("embed")));
}

Json certificate_to_json(const QuasibaseCertificate& c, const ExtensionPair& p) {
  Json j;
  j["schema"] = "quasibase-cert/v1";
  j["section"] = section_convention;
  j["side"] = c.side;
  j["pair"] = pair_to_json(p);
  Json pairs = Json::array();
  for (const QuasibasePair& qp : c.pairs) {
    Json e;
    e["t"] = vec_to_json(qp.t);
    e["beta"] = matrix_to_json(qp.beta);
    pairs.push_back(std::move(e));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

CertificateFile certificate_from_json(const Json& j) {
  require_schema(j, "quasibase-cert/v1");
  std::string sect = j.at("section").get<std::string>();
  if (sect != section_convention)
    throw std::invalid_argument("certificate section convention " + sect +
                                " does not match " + section_convention);
  CertificateFile f{pair_from_json(j.at("pair")), {}};
  f.cert.side = j.at("side").get<std::string>();
  for (const Json& e : j.at("pairs"))
    f.cert.pairs.push_back({vec_from_json(e.at("t")), matrix_from_json(e.at("beta"))});
  return f;
}

Json report_to_json(const AuditReport& r) {
  Json arr = Json::array();
  for (const AuditClause& c : r.clauses) {
    Json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["witness"] = c.witness;
    arr.push_back(std::move(e));
  }
  return arr;
}

std::string content_hash(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << data;
}

Json load_json(const std::string& path) { return Json::parse(read_file(path)); }

void require_schema(const Json& j, const std::string& expected) {
  std::string got = j.contains("schema") ? j.at("schema").get<std::string>() : "(missing)";
  if (got != expected)
    throw std::invalid_argument("expected schema " + expected + ", file has " + got);
}

}  // namespace hopfkit
