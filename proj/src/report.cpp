#include "planeaut/report.hpp"

#include <json.hpp>

namespace planeaut {

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks_) n += c.pass ? 0 : 1;
  return n;
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& c : checks_) {
    out += c.check;
    if (!c.parameters.empty()) out += " [" + c.parameters + "]";
    out += " expected=" + c.expected + " got=" + c.got + (c.pass ? " pass" : " FAIL") + "\n";
  }
  return out;
}

std::string Report::to_json_lines() const {
  std::string out;
  for (const auto& c : checks_) {
    const nlohmann::ordered_json j{{"check", c.check},
                                   {"parameters", c.parameters},
                                   {"expected", c.expected},
                                   {"got", c.got},
                                   {"pass", c.pass}};
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace planeaut
