#include "hgfm/report.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace hgfm {

void VerificationReport::finalize() {
  pass = true;
  for (const auto& h : hypotheses)
    if (!h.satisfied) pass = false;
  for (const auto& p : probes)
    if (!p.pass) pass = false;
}

double VerificationReport::max_rel_residual() const {
  double r = 0.0;
  for (const auto& p : probes) r = std::max(r, p.rel_residual);
  return r;
}

std::string VerificationReport::to_json_string(int indent) const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["identity"] = identity;
  j["backend"] = backend;
  j["tolerance"] = tolerance;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : parameters) params[k] = v;
  j["parameters"] = std::move(params);
  j["hypotheses"] = nlohmann::ordered_json::array();
  for (const auto& h : hypotheses)
    j["hypotheses"].push_back({{"name", h.name},
                               {"satisfied", h.satisfied},
                               {"position", h.position},
                               {"detail", h.detail}});
  j["probes"] = nlohmann::ordered_json::array();
  for (const auto& p : probes)
    j["probes"].push_back({{"probe", p.desc},
                           {"lhs", p.lhs},
                           {"rhs", p.rhs},
                           {"abs_residual", p.abs_residual},
                           {"rel_residual", p.rel_residual},
                           {"pass", p.pass},
                           {"note", p.note}});
  j["pass"] = pass;
  return j.dump(indent);
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string VerificationReport::to_csv() const {
  std::ostringstream os;
  os << "identity,backend,probe,lhs,rhs,abs_residual,rel_residual,pass\n";
  for (const auto& p : probes) {
    os << csv_escape(identity) << ',' << backend << ',' << csv_escape(p.desc) << ','
       << csv_escape(p.lhs) << ',' << csv_escape(p.rhs) << ',' << p.abs_residual << ','
       << p.rel_residual << ',' << (p.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "identity: " << identity << "  [" << backend << "]  tolerance " << tolerance << "\n";
  if (!parameters.empty()) {
    os << "parameters:";
    for (const auto& [k, v] : parameters) os << ' ' << k << '=' << v;
    os << '\n';
  }
  for (const auto& h : hypotheses) {
    os << "hypothesis " << h.name << ": " << (h.satisfied ? "satisfied" : "VIOLATED");
    if (h.position) os << " (j=" << h.position << ")";
    if (!h.detail.empty()) os << "  " << h.detail;
    os << '\n';
  }
  for (const auto& p : probes) {
    os << (p.pass ? "  ok   " : "  FAIL ") << p.desc << "  lhs=" << p.lhs << " rhs=" << p.rhs
       << " rel=" << p.rel_residual;
    if (!p.note.empty()) os << "  (" << p.note << ")";
    os << '\n';
  }
  os << (pass ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace hgfm
