#include "qpentagon/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qpentagon {

bool all_hold(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.holds(); });
}

std::string to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["identity"] = report.identity;
  j["degree"] = report.degree;
  j["q_mode"] = report.q_mode;
  j["status"] = report.holds() ? "holds" : "fails";
  if (report.witness) {
    j["witness"] = {{"m", report.witness->m},
                    {"n", report.witness->n},
                    {"lhs", report.witness->lhs},
                    {"rhs", report.witness->rhs}};
  }
  j["elapsed_millis"] = report.elapsed_millis;
  return j.dump();
}

VerificationReport report_from_json(std::string_view json) {
  try {
    const auto j = nlohmann::json::parse(json);
    VerificationReport r;
    r.identity = j.at("identity").get<std::string>();
    r.degree = j.at("degree").get<int>();
    r.q_mode = j.at("q_mode").get<std::string>();
    const auto status = j.at("status").get<std::string>();
    if (status != "holds" && status != "fails") throw std::invalid_argument("unknown status '" + status + "'");
    r.status = status == "holds" ? Status::holds : Status::fails;
    if (j.contains("witness")) {
      const auto& w = j.at("witness");
      r.witness = Witness{w.at("m").get<int>(), w.at("n").get<int>(), w.at("lhs").get<std::string>(),
                          w.at("rhs").get<std::string>()};
    }
    r.elapsed_millis = j.at("elapsed_millis").get<std::int64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(22) << report.identity << " degree " << std::setw(3) << report.degree << " q "
      << std::setw(9) << report.q_mode << ' ' << std::setw(5) << (report.holds() ? "holds" : "FAILS") << ' '
      << std::right << std::setw(7) << report.elapsed_millis << " ms";
  if (report.witness) {
    out << "  at x^" << report.witness->m << " y^" << report.witness->n << ": lhs " << report.witness->lhs
        << " rhs " << report.witness->rhs;
  }
  return out.str();
}

}  // namespace qpentagon
