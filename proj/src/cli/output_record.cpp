#include "stirling/cli/output_record.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace stirling::cli {

namespace {

using nlohmann::json;

json real_to_json(double x) {
  if (std::isfinite(x)) {
    return x;
  }
  return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
}

double real_from_json(const json& j) {
  if (j.is_number()) {
    return j.get<double>();
  }
  const std::string s = j.get<std::string>();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  throw std::invalid_argument("not a real: " + s);
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "jsonl") return Format::Jsonl;
  throw std::invalid_argument("unknown format " + std::string(name));
}

std::string format_real(double x) {
  if (std::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

OutputRecord make_record(const Index& idx, const BoundBracket& bracket, std::string_view regime) {
  OutputRecord r;
  r.n = idx.n();
  r.m = idx.m();
  r.method = std::string(to_string(bracket.method));
  r.lower_log = static_cast<double>(bracket.lower_log);
  r.upper_log = static_cast<double>(bracket.upper_log);
  r.rel_width = static_cast<double>(bracket.width());
  r.regime = std::string(regime);
  return r;
}

std::string csv_header() { return "n,m,method,lower_log,upper_log,rel_width,regime,verified"; }

std::string to_csv(const OutputRecord& r, bool linear) {
  std::ostringstream os;
  const bool show_exact = linear && r.exact.has_value();
  os << r.n << ',' << r.m << ',' << r.method << ',' << (show_exact ? *r.exact : format_real(r.lower_log)) << ','
     << (show_exact ? *r.exact : format_real(r.upper_log)) << ',' << format_real(r.rel_width) << ',' << r.regime
     << ',';
  if (r.verified) {
    os << (*r.verified ? "true" : "false");
  }
  return os.str();
}

std::string to_jsonl(const OutputRecord& r) {
  json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["method"] = r.method;
  j["lower_log"] = real_to_json(r.lower_log);
  j["upper_log"] = real_to_json(r.upper_log);
  j["rel_width"] = real_to_json(r.rel_width);
  j["regime"] = r.regime;
  j["verified"] = r.verified ? json(*r.verified) : json(nullptr);
  j["exact"] = r.exact ? json(*r.exact) : json(nullptr);
  return j.dump();
}

OutputRecord parse_jsonl(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
    OutputRecord r;
    r.n = j.at("n").get<unsigned>();
    r.m = j.at("m").get<unsigned>();
    r.method = j.at("method").get<std::string>();
    r.lower_log = real_from_json(j.at("lower_log"));
    r.upper_log = real_from_json(j.at("upper_log"));
    r.rel_width = real_from_json(j.at("rel_width"));
    r.regime = j.at("regime").get<std::string>();
    if (!j.at("verified").is_null()) {
      r.verified = j.at("verified").get<bool>();
    }
    if (!j.at("exact").is_null()) {
      r.exact = j.at("exact").get<std::string>();
    }
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed record: ") + e.what());
  }
}

std::string to_text(const OutputRecord& r, bool linear) {
  std::ostringstream os;
  os << "S(" << r.n << "," << r.m << ")";
  if (r.exact && (linear || r.exact->size() <= 40)) {
    os << " = " << *r.exact;
  } else if (r.exact) {
    os << " = exp(" << format_real(r.lower_log) << ")";
  } else {
    os << " in [exp(" << format_real(r.lower_log) << "), exp(" << format_real(r.upper_log) << ")]";
  }
  os << "  method=" << r.method << " rel_width=" << format_real(r.rel_width) << " regime=" << r.regime;
  if (r.verified) {
    os << " verified=" << (*r.verified ? "yes" : "NO");
  }
  return os.str();
}

}  // namespace stirling::cli
