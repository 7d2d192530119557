#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linklab/linkage.hpp"

namespace linklab {

inline constexpr const char* kEngineVersion = "1.0.0";

struct SessionOptions {
  unsigned n_max = 5;      // reduction-number search cap
  unsigned s_budget = 40;  // multiplicity sample-row budget
  unsigned j_depth = 0;    // canonical truncation depth; 0 = per-check default
  unsigned k_max = 0;      // canonical components compared; 0 = per-check default
  std::optional<std::string> field_override;  // "QQ" or "FF(p)"
  bool timings = false;    // append wall-clock data (breaks byte determinism)
};

// "QQ" or "FF(p)".
FieldSpec parse_field_spec(const std::string& text);

struct IdealFlags {
  bool prime = false;
  bool cm = false;
  bool licci = false;
  bool gorenstein = false;
};

struct SessionCommand {
  std::string verb;                  // "link", "check link-theorem", ...
  std::vector<std::string> idents;   // name arguments in source order
  std::string ring_name;             // for commands taking a sequence list
  std::vector<Polynomial> z;         // parsed sequence polynomials
  bool expect_fail = false;
  std::string display;
};

// A parsed script: declarations are resolved eagerly, commands run later in
// order (a `link` binds its result for the commands after it).
struct Session {
  std::vector<std::string> lines;  // verbatim script echo
  std::map<std::string, PresPtr> rings;
  std::map<std::string, Ideal> ideals;        // declared by `ideal`
  std::map<std::string, std::string> homes;   // ideal name -> ring name
  std::map<std::string, IdealFlags> flags;
  std::vector<SessionCommand> commands;
};

// Grammar (line comments start with '#'):
//   ring R = QQ[x,y,z] / (x^2 - y^2);      quotient part optional; FF(p) fields
//   ideal J = (x, y^2);                    bound to the last declared ring
//   assert prime|cm|licci|gorenstein J;
//   link I = J : p;
//   check link-theorem R p (x, y^2, z^2);
//   check canonical I J;   check multiplicity R (x, y^2, z^2);
//   check bound I J;       check delta R (x);   check gorenstein I J;
//   compute reduction-number I J;   compute rees I;   compute multiplicity A q;
//   expect fail <check ...>;
Session parse_session(const std::string& text, const SessionOptions& opt = {});

struct SessionResult {
  nlohmann::ordered_json report;
  int exit_code = 0;  // 0 all ok, 1 some check failed, 2 engine error
};

SessionResult run_session(const Session& s, const SessionOptions& opt = {});
SessionResult run_session_text(const std::string& text, const SessionOptions& opt = {});

// Human-readable rendering, derived from the JSON only.
std::string render_text(const nlohmann::ordered_json& report);

}  // namespace linklab
