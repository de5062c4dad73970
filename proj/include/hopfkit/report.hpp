#pragma once

// Clause-by-clause audit results shared by the hopf / frobenius / weakhopf
// auditors.  A clause is a named boolean with an optional witness (the basis
// element or pair where the check first failed).

#include <string>
#include <vector>

namespace hopfkit {

struct AuditClause {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct AuditReport {
  std::vector<AuditClause> clauses;

  void add(std::string name, bool pass, std::string witness = "") {
    clauses.push_back({std::move(name), pass, std::move(witness)});
  }
  bool ok() const {
    for (const AuditClause& c : clauses)
      if (!c.pass) return false;
    return true;
  }
  const AuditClause* find(const std::string& name) const {
    for (const AuditClause& c : clauses)
      if (c.name == name) return &c;
    return nullptr;
  }
  std::string first_failure() const {
    for (const AuditClause& c : clauses)
      if (!c.pass) return c.name + (c.witness.empty() ? "" : " (" + c.witness + ")");
    return "";
  }
};

}  // namespace hopfkit
