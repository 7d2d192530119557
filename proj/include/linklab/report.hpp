#pragma once
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "linklab/ideal.hpp"

namespace linklab {

enum class Conclusion { Pass, Fail, Inapplicable };
const char* conclusion_name(Conclusion c);

// A theorem hypothesis is either decided by the engine or taken on the
// user's word; both kinds are listed so certificates stay honest.
struct Hypothesis {
  std::string name;
  bool asserted = false;  // true: user-supplied flag; false: checked here
  bool pass = false;
};

// Equality claims carry the two reduced bases that witness the verdict, so a
// report can be re-checked without rerunning the engine.
struct Certificate {
  std::string claim;
  std::vector<std::string> lhs;
  std::vector<std::string> rhs;
  bool pass = false;
};

struct VerificationReport {
  std::string check;  // which verifier produced this
  std::vector<Hypothesis> hypotheses;
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  std::vector<Certificate> certificates;
  std::vector<std::string> claims_failed;
  Conclusion conclusion = Conclusion::Inapplicable;

  void hypothesis(const std::string& name, bool pass, bool asserted = false);
  bool hypotheses_ok() const;
  // Records the certificate and the claim verdict; returns the verdict.
  bool certify_equals(const std::string& claim, const Ideal& lhs, const Ideal& rhs);
  // Numeric/boolean claim without a basis certificate.
  bool claim(const std::string& name, bool pass);
  // Pass when hypotheses and claims all hold, Fail when only claims broke,
  // Inapplicable when a hypothesis (checked or asserted) is missing.
  void conclude();

  nlohmann::ordered_json to_json() const;
};

}  // namespace linklab
