#pragma once

// JSON interchange for every artifact the CLI reads or writes.  Schemas are
// versioned ("group/v1", "finalg/v1", "hopf/v1", "weakhopf/v1", "pair/v1",
// "quasibase-cert/v1"); loaders reject anything else by throwing
// std::invalid_argument with the offending tag.  Rationals travel as strings
// "p/q" (or "p" when the denominator is 1) so nothing ever rounds.
//
// nlohmann::json keeps object keys sorted, so dumps are canonical: the same
// value always serializes to the same bytes.  Certificates embed the
// tensor-square section convention ("rref-complement/v1") and the full
// extension pair, so a certificate file revalidates on its own.

#include "hopfkit/depth2.hpp"
#include "hopfkit/hopf.hpp"
#include "hopfkit/report.hpp"
#include "hopfkit/weakhopf.hpp"

#include <json.hpp>

#include <string>

namespace hopfkit {

using Json = nlohmann::json;

inline constexpr const char* toolkit_version = "0.1.0";
inline constexpr const char* section_convention = "rref-complement/v1";

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json group_to_json(const GroupTable& g);
GroupTable group_from_json(const Json& j);

Json algebra_to_json(const FinAlgebra& a);
FinAlgebra algebra_from_json(const Json& j);

Json hopf_to_json(const HopfStructure& h);
HopfStructure hopf_from_json(const Json& j);

Json weakhopf_to_json(const WeakHopfStructure& w);
WeakHopfStructure weakhopf_from_json(const Json& j);

Json pair_to_json(const ExtensionPair& p);
ExtensionPair pair_from_json(const Json& j);

// The certificate file embeds the pair it certifies.
Json certificate_to_json(const QuasibaseCertificate& c, const ExtensionPair& p);
struct CertificateFile {
  ExtensionPair pair;
  QuasibaseCertificate cert;
};
CertificateFile certificate_from_json(const Json& j);

Json report_to_json(const AuditReport& r);

// FNV-1a 64 over the raw bytes, as 16 hex digits.
std::string content_hash(const std::string& bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& data);
Json load_json(const std::string& path);

void require_schema(const Json& j, const std::string& expected);

}  // namespace hopfkit
