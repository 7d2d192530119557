#include "linklab/report.hpp"

namespace linklab {

const char* conclusion_name(Conclusion c) {
  switch (c) {
    case Conclusion::Pass: return "pass";
    case Conclusion::Fail: return "fail";
    case Conclusion::Inapplicable: return "inapplicable";
  }
  return "?";
}

void VerificationReport::hypothesis(const std::string& name, bool pass, bool asserted) {
  hypotheses.push_back({name, asserted, pass});
}

bool VerificationReport::hypotheses_ok() const {
  for (const Hypothesis& h : hypotheses)
    if (!h.pass) return false;
  return true;
}

bool VerificationReport::certify_equals(const std::string& name, const Ideal& lhs,
                                        const Ideal& rhs) {
  bool pass = equals(lhs, rhs);
  certificates.push_back({name, lhs.gb_strings(), rhs.gb_strings(), pass});
  return claim(name, pass);
}

bool VerificationReport::claim(const std::string& name, bool pass) {
  if (!pass) claims_failed.push_back(name);
  return pass;
}

void VerificationReport::conclude() {
  if (!hypotheses_ok())
    conclusion = Conclusion::Inapplicable;
  else
    conclusion = claims_failed.empty() ? Conclusion::Pass : Conclusion::Fail;
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  auto hyps = nlohmann::ordered_json::array();
  for (const Hypothesis& h : hypotheses) {
    nlohmann::ordered_json e;
    e["name"] = h.name;
    e["status"] = h.asserted ? "asserted" : "checked";
    e["pass"] = h.pass;
    hyps.push_back(std::move(e));
  }
  j["hypotheses"] = std::move(hyps);
  j["values"] = values;
  auto certs = nlohmann::ordered_json::array();
  for (const Certificate& c : certificates) {
    nlohmann::ordered_json e;
    e["claim"] = c.claim;
    e["lhs_basis"] = c.lhs;
    e["rhs_basis"] = c.rhs;
    e["pass"] = c.pass;
    certs.push_back(std::move(e));
  }
  j["certificates"] = std::move(certs);
  j["claims_failed"] = claims_failed;
  j["conclusion"] = conclusion_name(conclusion);
  return j;
}

}  // namespace linklab
