#include "braidbench/report.hpp"

#include <sstream>

namespace braidbench {

bool Report::all_pass() const {
  for (const auto& c : checks_)
    if (!c.pass) return false;
  return true;
}

const CheckResult* Report::find(const std::string& key) const {
  for (const auto& c : checks_)
    if (c.key == key) return &c;
  return nullptr;
}

void Report::add_bool(const std::string& key, bool pass,
                      const std::string& note) {
  checks_.push_back({key, pass, std::nullopt, note});
}

void Report::add_equal(const std::string& key, const GrMorphism& lhs,
                       const GrMorphism& rhs) {
  auto diff = GrMorphism::first_diff(lhs, rhs);
  CheckResult r;
  r.key = key;
  r.pass = !diff.has_value();
  if (diff) {
    if (lhs.src() != rhs.src() || lhs.dst() != rhs.dst()) {
      r.note = "shape mismatch";
    } else {
      Counterexample ce;
      ce.row = diff->first;
      ce.col = diff->second;
      ce.lhs = lhs.get(ce.row, ce.col).str();
      ce.rhs = rhs.get(ce.row, ce.col).str();
      r.witness = ce;
    }
  }
  checks_.push_back(std::move(r));
}

void Report::add_timing(const std::string& key, double seconds) {
  timings_.emplace_back(key, seconds);
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (auto c : other.checks_) {
    c.key = prefix.empty() ? c.key : prefix + "." + c.key;
    checks_.push_back(std::move(c));
  }
  for (const auto& [k, s] : other.timings_)
    timings_.emplace_back(prefix.empty() ? k : prefix + "." + k, s);
}

json Report::to_json(bool with_timings) const {
  json out;
  out["subject"] = subject_;
  out["pass"] = all_pass();
  json checks = json::array();
  for (const auto& c : checks_) {
    json jc;
    jc["key"] = c.key;
    jc["pass"] = c.pass;
    if (c.witness) {
      jc["counterexample"] = {{"row", c.witness->row},
                              {"col", c.witness->col},
                              {"lhs", c.witness->lhs},
                              {"rhs", c.witness->rhs}};
    }
    if (!c.note.empty()) jc["note"] = c.note;
    checks.push_back(std::move(jc));
  }
  out["checks"] = std::move(checks);
  if (with_timings) {
    json jt = json::array();
    for (const auto& [k, s] : timings_)
      jt.push_back({{"key", k}, {"seconds", s}});
    out["timings"] = std::move(jt);
  }
  return out;
}

std::string Report::to_text(bool with_timings) const {
  std::ostringstream out;
  out << "== " << subject_ << " ==\n";
  for (const auto& c : checks_) {
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.key;
    if (!c.note.empty()) out << "  (" << c.note << ")";
    out << "\n";
    if (c.witness) {
      out << "      at entry (" << c.witness->row << ", " << c.witness->col
          << "): lhs = " << c.witness->lhs << ", rhs = " << c.witness->rhs
          << "\n";
    }
  }
  out << (all_pass() ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  if (with_timings) {
    for (const auto& [k, s] : timings_)
      out << "time  " << k << "  " << s << "s\n";
  }
  return out.str();
}

json obj_to_json(const GrObject& x) {
  json out;
  out["n"] = x.n;
  out["dims"] = x.dims();
  out["degs"] = x.degs;
  return out;
}

GrObject obj_from_json(const json& j) {
  unsigned n = j.at("n").get<unsigned>();
  if (j.contains("degs"))
    return GrObject(n, j.at("degs").get<std::vector<unsigned>>());
  return GrObject::from_dims(n, j.at("dims").get<std::vector<unsigned>>());
}

json mor_to_json(const GrMorphism& f) {
  json out;
  out["src"] = obj_to_json(f.src());
  out["dst"] = obj_to_json(f.dst());
  json entries = json::array();
  for (unsigned i = 0; i < f.rows().size(); ++i)
    for (const auto& [j, v] : f.rows()[i])
      entries.push_back(json::array({i, j, v.str()}));
  out["entries"] = std::move(entries);
  return out;
}

GrMorphism mor_from_json(const json& j) {
  GrObject src = obj_from_json(j.at("src"));
  GrObject dst = obj_from_json(j.at("dst"));
  GrMorphism f(src, dst);
  for (const auto& e : j.at("entries")) {
    f.set(e.at(0).get<unsigned>(), e.at(1).get<unsigned>(),
          Cyc::parse(src.n, e.at(2).get<std::string>()));
  }
  return f;
}

}  // namespace braidbench
