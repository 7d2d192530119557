#include "linklab/session.hpp"

#include <chrono>
#include <sstream>

#include "linklab/io.hpp"
#include "linklab/kernels.hpp"

namespace linklab {

FieldSpec parse_field_spec(const std::string& text) {
  if (text == "QQ") return {};
  if (text.rfind("FF(", 0) == 0 && text.back() == ')') {
    std::string inner = text.substr(3, text.size() - 4);
    if (!inner.empty() && inner.find_first_not_of("0123456789") == std::string::npos)
      return FieldSpec{static_cast<std::uint32_t>(std::stoul(inner))};
  }
  throw DomainError("unrecognized field \"" + text + "\" (use QQ or FF(p))");
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

struct Parser {
  Lexer lex;
  const SessionOptions& opt;
  Session s;
  std::string active_ring;
  // names usable as ideal arguments; link results join before they exist
  std::map<std::string, bool> declared;  // value: true if bound by `ideal`

  explicit Parser(const std::string& text, const SessionOptions& o) : lex(text), opt(o) {}

  Token expect_ident(const char* what) {
    Token t = lex.next();
    if (t.kind != Token::Kind::Ident) Lexer::fail_at(std::string("expected ") + what, t);
    return t;
  }

  void expect_sym(char c) {
    Token t = lex.next();
    if (!t.is_sym(c)) Lexer::fail_at(std::string("expected '") + c + "'", t);
  }

  // idents joined by '-' make one command word (link-theorem, reduction-number)
  std::string command_word() {
    std::string word = expect_ident("command word").text;
    while (lex.peek(0).is_sym('-') && lex.peek(1).kind == Token::Kind::Ident) {
      lex.next();
      word += "-" + lex.next().text;
    }
    return word;
  }

  std::string known_ideal(const Token& t) {
    if (!declared.count(t.text)) Lexer::fail_at("undeclared: " + t.text, t);
    return t.text;
  }

  PresPtr known_ring(const Token& t) {
    auto it = s.rings.find(t.text);
    if (it == s.rings.end()) Lexer::fail_at("undeclared ring: " + t.text, t);
    return it->second;
  }

  std::vector<Polynomial> poly_list(const RingPtr& ring) {
    expect_sym('(');
    std::vector<Polynomial> polys;
    if (lex.peek().is_sym(')')) {
      lex.next();
      return polys;
    }
    while (true) {
      polys.push_back(parse_polynomial(ring, lex));
      Token t = lex.next();
      if (t.is_sym(')')) break;
      if (!t.is_sym(',')) Lexer::fail_at("expected ',' or ')'", t);
    }
    return polys;
  }

  static std::string poly_list_text(const std::vector<Polynomial>& polys) {
    std::string out = "(";
    for (std::size_t i = 0; i < polys.size(); ++i) {
      if (i) out += ", ";
      out += to_string(polys[i]);
    }
    return out + ")";
  }

  void ring_decl() {
    Token name = expect_ident("ring name");
    if (s.rings.count(name.text)) Lexer::fail_at("ring already declared: " + name.text, name);
    expect_sym('=');
    Token f = expect_ident("field (QQ or FF)");
    FieldSpec field;
    if (f.text == "QQ") {
      field = {};
    } else if (f.text == "FF") {
      expect_sym('(');
      Token p = lex.next();
      if (p.kind != Token::Kind::Int) Lexer::fail_at("expected a prime", p);
      field = FieldSpec{static_cast<std::uint32_t>(std::stoul(p.text))};
      expect_sym(')');
    } else {
      Lexer::fail_at("unknown field " + f.text, f);
    }
    if (opt.field_override) field = parse_field_spec(*opt.field_override);
    expect_sym('[');
    std::vector<std::string> vars;
    while (true) {
      vars.push_back(expect_ident("variable name").text);
      Token t = lex.next();
      if (t.is_sym(']')) break;
      if (!t.is_sym(',')) Lexer::fail_at("expected ',' or ']'", t);
    }
    RingPtr ambient;
    try {
      ambient = PolyRing::make(vars, field);
    } catch (const Error& e) {
      Lexer::fail_at(e.what(), name);
    }
    std::vector<Polynomial> quotient;
    if (lex.peek().is_sym('/')) {
      lex.next();
      quotient = poly_list(ambient);
    }
    expect_sym(';');
    s.rings[name.text] = RingPresentation::make(ambient, std::move(quotient));
    active_ring = name.text;
  }

  void ideal_decl() {
    Token name = expect_ident("ideal name");
    if (declared.count(name.text)) Lexer::fail_at("name already declared: " + name.text, name);
    expect_sym('=');
    if (active_ring.empty()) Lexer::fail_at("no ring declared yet", name);
    PresPtr ring = s.rings.at(active_ring);
    std::vector<Polynomial> gens = poly_list(ring->ambient());
    expect_sym(';');
    s.ideals.emplace(name.text, Ideal(ring, std::move(gens)));
    s.homes[name.text] = active_ring;
    declared[name.text] = true;
  }

  void assert_decl() {
    Token flavor = expect_ident("assertion kind");
    Token name = expect_ident("ideal name");
    known_ideal(name);
    expect_sym(';');
    IdealFlags& fl = s.flags[name.text];
    if (flavor.text == "prime")
      fl.prime = true;
    else if (flavor.text == "cm")
      fl.cm = true;
    else if (flavor.text == "licci")
      fl.licci = true;
    else if (flavor.text == "gorenstein")
      fl.gorenstein = true;
    else
      Lexer::fail_at("unknown assertion " + flavor.text +
                         " (expected prime, cm, licci, or gorenstein)",
                     flavor);
  }

  void link_decl() {
    Token name = expect_ident("link name");
    if (declared.count(name.text)) Lexer::fail_at("name already declared: " + name.text, name);
    expect_sym('=');
    Token jn = expect_ident("ideal name");
    known_ideal(jn);
    expect_sym(':');
    Token pn = expect_ident("ideal name");
    known_ideal(pn);
    expect_sym(';');
    SessionCommand c;
    c.verb = "link";
    c.idents = {name.text, jn.text, pn.text};
    c.display = "link " + name.text + " = " + jn.text + " : " + pn.text;
    s.commands.push_back(std::move(c));
    declared[name.text] = false;
  }

  void check_decl(bool expect_fail) {
    std::string word = command_word();
    SessionCommand c;
    c.expect_fail = expect_fail;
    c.verb = "check " + word;
    if (word == "link-theorem" || word == "multiplicity" || word == "delta") {
      Token rn = lex.next();
      PresPtr ring = known_ring(rn);
      c.ring_name = rn.text;
      if (word == "link-theorem") {
        Token pn = lex.next();
        c.idents.push_back(known_ideal(pn));
      }
      c.z = poly_list(ring->ambient());
      c.display = c.verb + " " + c.ring_name +
                  (c.idents.empty() ? "" : " " + c.idents[0]) + " " + poly_list_text(c.z);
    } else if (word == "canonical" || word == "bound" || word == "gorenstein") {
      Token a = lex.next();
      c.idents.push_back(known_ideal(a));
      Token b = lex.next();
      c.idents.push_back(known_ideal(b));
      c.display = c.verb + " " + c.idents[0] + " " + c.idents[1];
    } else {
      lex.fail("unknown check \"" + word + "\"");
    }
    expect_sym(';');
    if (expect_fail) c.display = "expect fail " + c.display;
    s.commands.push_back(std::move(c));
  }

  void compute_decl() {
    std::string word = command_word();
    SessionCommand c;
    c.verb = "compute " + word;
    if (word == "reduction-number" || word == "multiplicity") {
      Token a = lex.next();
      c.idents.push_back(known_ideal(a));
      Token b = lex.next();
      c.idents.push_back(known_ideal(b));
      c.display = c.verb + " " + c.idents[0] + " " + c.idents[1];
    } else if (word == "rees") {
      Token a = lex.next();
      c.idents.push_back(known_ideal(a));
      c.display = c.verb + " " + c.idents[0];
    } else {
      lex.fail("unknown compute \"" + word + "\"");
    }
    expect_sym(';');
    s.commands.push_back(std::move(c));
  }

  void run() {
    while (true) {
      Token t = lex.peek();
      if (t.kind == Token::Kind::End) break;
      if (t.kind != Token::Kind::Ident) Lexer::fail_at("expected a statement", t);
      lex.next();
      if (t.text == "ring")
        ring_decl();
      else if (t.text == "ideal")
        ideal_decl();
      else if (t.text == "assert")
        assert_decl();
      else if (t.text == "link")
        link_decl();
      else if (t.text == "check")
        check_decl(false);
      else if (t.text == "compute")
        compute_decl();
      else if (t.text == "expect") {
        Token f = expect_ident("'fail'");
        if (f.text != "fail") Lexer::fail_at("expected 'fail'", f);
        Token k = expect_ident("'check'");
        if (k.text != "check") Lexer::fail_at("only check commands take expect fail", k);
        check_decl(true);
      } else {
        Lexer::fail_at("unknown statement " + t.text, t);
      }
    }
  }
};

struct LinkOrigin {
  Ideal target;
  bool target_prime = false;
};

}  // namespace

Session parse_session(const std::string& text, const SessionOptions& opt) {
  Parser p(text, opt);
  p.s.lines = split_lines(text);
  p.run();
  return std::move(p.s);
}

namespace {

nlohmann::ordered_json options_json(const SessionOptions& opt) {
  nlohmann::ordered_json j;
  j["n_max"] = opt.n_max;
  j["s_budget"] = opt.s_budget;
  j["j_depth"] = opt.j_depth;
  j["k_max"] = opt.k_max;
  if (opt.field_override)
    j["field"] = *opt.field_override;
  else
    j["field"] = nullptr;
  return j;
}

class Executor {
 public:
  Executor(const Session& s, const SessionOptions& opt) : s_(s), opt_(opt), ideals_(s.ideals) {}

  SessionResult run() {
    nlohmann::ordered_json report;
    report["tool"] = "linkage-lab";
    report["version"] = kEngineVersion;
    report["options"] = options_json(opt_);
    report["script"] = s_.lines;
    auto cmds = nlohmann::ordered_json::array();
    std::vector<double> times;
    int exit = 0;
    unsigned ok_count = 0;
    for (const SessionCommand& cmd : s_.commands) {
      nlohmann::ordered_json c;
      c["command"] = cmd.display;
      auto t0 = std::chrono::steady_clock::now();
      try {
        bool ok = dispatch(cmd, c);
        c["ok"] = ok;
        if (ok)
          ++ok_count;
        else
          exit = std::max(exit, 1);
      } catch (const BudgetError& e) {
        c["ok"] = false;
        c["error"] = e.what();
        c["partial_table"] = e.partial.to_json();
        exit = 2;
      } catch (const StabilizationError& e) {
        c["ok"] = false;
        c["error"] = e.what();
        c["candidates"] = {{"shallow", e.shallow}, {"deep", e.deep}};
        exit = 2;
      } catch (const Error& e) {
        c["ok"] = false;
        c["error"] = e.what();
        exit = 2;
      }
      times.push_back(std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count());
      cmds.push_back(std::move(c));
      if (exit == 2) break;  // engine errors abort the session
    }
    report["commands"] = std::move(cmds);
    nlohmann::ordered_json summary;
    summary["commands"] = s_.commands.size();
    summary["executed"] = times.size();
    summary["ok"] = ok_count;
    summary["exit"] = exit;
    report["summary"] = std::move(summary);
    if (opt_.timings) {
      double total = 0;
      for (double t : times) total += t;
      nlohmann::ordered_json tj;
      tj["per_command_ms"] = times;
      tj["total_ms"] = total;
      report["timings"] = std::move(tj);
    }
    return {std::move(report), exit};
  }

 private:
  const Ideal& ideal_arg(const std::string& name) {
    auto it = ideals_.find(name);
    if (it == ideals_.end())
      throw StructuralError("ideal " + name + " was never bound (its link command failed?)");
    return it->second;
  }

  IdealFlags flags_of(const std::string& name) const {
    auto it = s_.flags.find(name);
    return it == s_.flags.end() ? IdealFlags{} : it->second;
  }

  VerifyOptions base_options() const {
    VerifyOptions vo;
    vo.n_max = opt_.n_max;
    vo.s_budget = opt_.s_budget;
    vo.k_max = opt_.k_max;
    vo.j_depth = opt_.j_depth;
    return vo;
  }

  PresPtr ring_checked(const SessionCommand& cmd, const Ideal& bound) {
    PresPtr ring = s_.rings.at(cmd.ring_name);
    if (!bound.ring()->same_as(*ring))
      throw StructuralError("ideal argument is not bound to ring " + cmd.ring_name);
    return ring;
  }

  bool check_outcome(const SessionCommand& cmd, nlohmann::ordered_json& c,
                     const VerificationReport& rep) {
    c["expect_fail"] = cmd.expect_fail;
    c["report"] = rep.to_json();
    bool passed = rep.conclusion == Conclusion::Pass;
    return cmd.expect_fail ? !passed : passed;
  }

  bool dispatch(const SessionCommand& cmd, nlohmann::ordered_json& c) {
    if (cmd.verb == "link") {
      const Ideal& J = ideal_arg(cmd.idents[1]);
      const Ideal& p = ideal_arg(cmd.idents[2]);
      LinkData ld = link(p, J.gens());
      bool prime_ok =
          flags_of(cmd.idents[2]).prime || equals(p, Ideal::of_variables(p.ring()));
      origins_.emplace(cmd.idents[0], LinkOrigin{p, prime_ok});
      nlohmann::ordered_json result;
      result["I_basis"] = ld.I.gb_strings();
      result["J_basis"] = ld.J.gb_strings();
      c["result"] = std::move(result);
      ideals_.emplace(cmd.idents[0], std::move(ld.I));
      return true;
    }
    if (cmd.verb == "check link-theorem") {
      const Ideal& p = ideal_arg(cmd.idents[0]);
      PresPtr ring = ring_checked(cmd, p);
      VerifyOptions vo = base_options();
      vo.target_prime_asserted = flags_of(cmd.idents[0]).prime;
      return check_outcome(cmd, c, verify_link_theorem(ring, p, cmd.z, vo));
    }
    if (cmd.verb == "check canonical") {
      const Ideal& I = ideal_arg(cmd.idents[0]);
      const Ideal& J = ideal_arg(cmd.idents[1]);
      VerifyOptions vo = base_options();
      vo.ideal_cm_asserted = flags_of(cmd.idents[0]).cm;
      std::optional<Ideal> p;
      auto it = origins_.find(cmd.idents[0]);
      if (it != origins_.end() && it->second.target_prime) p = it->second.target;
      return check_outcome(cmd, c, verify_canonical_form(I, J, p, vo));
    }
    if (cmd.verb == "check multiplicity") {
      PresPtr ring = s_.rings.at(cmd.ring_name);
      return check_outcome(
          cmd, c,
          verify_multiplicity_theorem(ring, Ideal::of_variables(ring), cmd.z, base_options()));
    }
    if (cmd.verb == "check bound") {
      const Ideal& I = ideal_arg(cmd.idents[0]);
      const Ideal& J = ideal_arg(cmd.idents[1]);
      VerifyOptions vo = base_options();
      vo.licci_asserted = flags_of(cmd.idents[0]).licci;
      vo.generically_gorenstein_asserted = flags_of(cmd.idents[0]).gorenstein;
      return check_outcome(cmd, c, multiplicity_bound_check(I.ring(), I, J, vo));
    }
    if (cmd.verb == "check gorenstein") {
      const Ideal& I = ideal_arg(cmd.idents[0]);
      const Ideal& J = ideal_arg(cmd.idents[1]);
      VerifyOptions vo = base_options();
      vo.ideal_cm_asserted = flags_of(cmd.idents[0]).cm;
      return check_outcome(cmd, c, gorenstein_gr_check(I, J, vo));
    }
    if (cmd.verb == "check delta") {
      PresPtr ring = s_.rings.at(cmd.ring_name);
      return check_outcome(cmd, c, delta_length(ring, cmd.z, base_options()));
    }
    if (cmd.verb == "compute reduction-number") {
      const Ideal& I = ideal_arg(cmd.idents[0]);
      const Ideal& J = ideal_arg(cmd.idents[1]);
      std::optional<unsigned> rn = reduction_number(I, J, opt_.n_max);
      nlohmann::ordered_json result;
      if (rn)
        result["reduction_number"] = *rn;
      else
        result["reduction_number"] = nullptr;
      result["searched_up_to"] = opt_.n_max;
      c["result"] = std::move(result);
      return true;
    }
    if (cmd.verb == "compute rees") {
      const Ideal& I = ideal_arg(cmd.idents[0]);
      ReesPresentation rp = rees_presentation(I);
      nlohmann::ordered_json result;
      result["variables"] = rp.ring->ambient()->vars();
      auto gens = nlohmann::ordered_json::array();
      for (const Polynomial& f : rp.gens) gens.push_back(to_string(f));
      result["generators"] = std::move(gens);
      result["presentation_basis"] = rp.presentation.gb_strings();
      result["analytic_spread"] = analytic_spread(I);
      c["result"] = std::move(result);
      return true;
    }
    if (cmd.verb == "compute multiplicity") {
      const Ideal& A = ideal_arg(cmd.idents[0]);
      const Ideal& q = ideal_arg(cmd.idents[1]);
      auto [e, table] = multiplicity_with_table(A, q, opt_.s_budget);
      nlohmann::ordered_json result;
      result["multiplicity"] = e;
      result["table"] = table.to_json();
      c["result"] = std::move(result);
      return true;
    }
    throw StructuralError("unknown command " + cmd.verb);
  }

  const Session& s_;
  const SessionOptions& opt_;
  std::map<std::string, Ideal> ideals_;
  std::map<std::string, LinkOrigin> origins_;
};

}  // namespace

SessionResult run_session(const Session& s, const SessionOptions& opt) {
  return Executor(s, opt).run();
}

SessionResult run_session_text(const std::string& text, const SessionOptions& opt) {
  return run_session(parse_session(text, opt), opt);
}

namespace {

bool scalar_value(const nlohmann::ordered_json& v) {
  return v.is_boolean() || v.is_number() || v.is_string() || v.is_null();
}

bool string_list(const nlohmann::ordered_json& v) {
  if (!v.is_array()) return false;
  for (const auto& x : v)
    if (!x.is_string()) return false;
  return true;
}

// Scalars and flat string lists (bases, generators); tables stay JSON-only.
void render_value(std::ostringstream& out, const std::string& key,
                  const nlohmann::ordered_json& val) {
  if (scalar_value(val)) {
    out << "  " << key << " = " << val.dump() << "\n";
  } else if (string_list(val)) {
    out << "  " << key << " = (";
    for (std::size_t i = 0; i < val.size(); ++i)
      out << (i ? ", " : "") << val[i].get<std::string>();
    out << ")\n";
  }
}

void render_report(std::ostringstream& out, const nlohmann::ordered_json& rep) {
  out << "  conclusion: " << rep.at("conclusion").get<std::string>() << "\n";
  for (const auto& h : rep.at("hypotheses")) {
    out << "  hypothesis " << h.at("name").get<std::string>() << " ["
        << h.at("status").get<std::string>() << "]: "
        << (h.at("pass").get<bool>() ? "ok" : "FAIL") << "\n";
  }
  for (const auto& [key, val] : rep.at("values").items()) render_value(out, key, val);
  for (const auto& cert : rep.at("certificates"))
    out << "  claim " << cert.at("claim").get<std::string>() << ": "
        << (cert.at("pass").get<bool>() ? "ok" : "FAIL") << "\n";
  for (const auto& claim : rep.at("claims_failed"))
    out << "  claim failed: " << claim.get<std::string>() << "\n";
}

}  // namespace

std::string render_text(const nlohmann::ordered_json& report) {
  std::ostringstream out;
  out << report.at("tool").get<std::string>() << " " << report.at("version").get<std::string>()
      << "\n";
  for (const auto& c : report.at("commands")) {
    out << "> " << c.at("command").get<std::string>() << "\n";
    if (c.contains("error")) {
      out << "  error: " << c.at("error").get<std::string>() << "\n";
    } else if (c.contains("report")) {
      render_report(out, c.at("report"));
    } else if (c.contains("result")) {
      for (const auto& [key, val] : c.at("result").items()) render_value(out, key, val);
    }
    out << "  => " << (c.at("ok").get<bool>() ? "ok" : "FAIL") << "\n";
  }
  const auto& sum = report.at("summary");
  out << "summary: " << sum.at("executed") << "/" << sum.at("commands") << " commands, "
      << sum.at("ok") << " ok, exit " << sum.at("exit") << "\n";
  return out.str();
}

}  // namespace linklab
