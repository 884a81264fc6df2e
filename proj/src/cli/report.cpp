#include "pascal2/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace pascal2 {

namespace {

constexpr const char* kSep = " | ";

// Escapes the characters the text layout uses as delimiters.
std::string escape(const std::string& s, bool space_too) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '\\': out += "\\\\"; break;
      case '|': out += "\\p"; break;
      case '\n': out += "\\n"; break;
      case ' ':
        if (space_too) out += "\\s";
        else out += ' ';
        break;
      default: out += ch;
    }
  }
  return out;
}

std::string unescape(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\') {
      out += s[i];
      continue;
    }
    if (++i == s.size()) throw std::invalid_argument("report: dangling escape");
    switch (s[i]) {
      case '\\': out += '\\'; break;
      case 'p': out += '|'; break;
      case 'n': out += '\n'; break;
      case 's': out += ' '; break;
      default: throw std::invalid_argument(std::string("report: bad escape \\") + s[i]);
    }
  }
  return out;
}

std::string params_text(const Params& p) {
  std::string out;
  for (const auto& [k, v] : p) {
    if (!out.empty()) out += ' ';
    out += escape(k, true) + "=" + escape(v, true);
  }
  return out;
}

Params parse_params(const std::string& s) {
  Params p;
  std::istringstream in(s);
  std::string item;
  while (in >> item) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("report: bad param '" + item + "'");
    p.emplace(unescape(item.substr(0, eq)), unescape(item.substr(eq + 1)));
  }
  return p;
}

std::vector<std::string> split(const std::string& line, const std::string& sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t at; (at = line.find(sep, start)) != std::string::npos; start = at + sep.size())
    parts.push_back(line.substr(start, at - start));
  parts.push_back(line.substr(start));
  return parts;
}

std::string after_prefix(const std::string& line, const std::string& prefix) {
  if (line.rfind(prefix, 0) != 0) throw std::invalid_argument("report: expected '" + prefix + "'");
  return line.substr(prefix.size());
}

}  // namespace

bool Report::pass() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

std::string abbreviate(const std::string& value, std::size_t limit) {
  if (value.size() <= limit) return value;
  const std::size_t keep = (limit - 16) / 2;
  return value.substr(0, keep) + "..." + value.substr(value.size() - keep) + " (" +
         std::to_string(value.size()) + " chars)";
}

void Report::add(std::string id, Params p, bool ok, std::string lhs, std::string rhs) {
  if (ok) {
    lhs = abbreviate(lhs);
    rhs = abbreviate(rhs);
  }
  checks.push_back({std::move(id), std::move(p), ok, std::move(lhs), std::move(rhs)});
}

Report Report::sorted() const {
  Report out = *this;
  std::stable_sort(out.checks.begin(), out.checks.end(),
                   [](const Check& a, const Check& b) { return a.id < b.id; });
  return out;
}

std::string to_text(const Report& report) {
  const Report r = report.sorted();
  std::ostringstream out;
  out << "suite: " << escape(r.suite, false) << '\n';
  out << "params: " << params_text(r.params) << '\n';
  for (const Check& c : r.checks)
    out << (c.pass ? "PASS" : "FAIL") << kSep << escape(c.id, false) << kSep << params_text(c.params)
        << kSep << escape(c.lhs, false) << kSep << escape(c.rhs, false) << '\n';
  out << "status: " << (r.pass() ? "PASS" : "FAIL") << " (" << r.checks.size() << " checks, "
      << r.failures() << " failed)\n";
  return out.str();
}

std::string to_json(const Report& report) {
  const Report r = report.sorted();
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["params"] = r.params;
  j["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["id"] = c.id;
    cj["params"] = c.params;
    cj["pass"] = c.pass;
    cj["lhs"] = c.lhs;
    cj["rhs"] = c.rhs;
    j["checks"].push_back(std::move(cj));
  }
  j["pass"] = r.pass();
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    Report r;
    r.suite = j.at("suite").get<std::string>();
    r.params = j.at("params").get<Params>();
    for (const auto& cj : j.at("checks"))
      r.checks.push_back({cj.at("id").get<std::string>(), cj.at("params").get<Params>(),
                          cj.at("pass").get<bool>(), cj.at("lhs").get<std::string>(),
                          cj.at("rhs").get<std::string>()});
    if (j.at("pass").get<bool>() != r.pass())
      throw std::invalid_argument("report: overall status disagrees with checks");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("report: bad JSON: ") + e.what());
  }
}

Report report_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Report r;
  if (!std::getline(in, line)) throw std::invalid_argument("report: empty text");
  r.suite = unescape(after_prefix(line, "suite: "));
  if (!std::getline(in, line)) throw std::invalid_argument("report: missing params line");
  r.params = parse_params(after_prefix(line, "params: "));
  bool saw_status = false;
  while (std::getline(in, line)) {
    if (line.rfind("status: ", 0) == 0) {
      const bool claimed = line.rfind("status: PASS", 0) == 0;
      if (claimed != r.pass()) throw std::invalid_argument("report: overall status disagrees with checks");
      saw_status = true;
      break;
    }
    const auto parts = split(line, kSep);
    if (parts.size() != 5 || (parts[0] != "PASS" && parts[0] != "FAIL"))
      throw std::invalid_argument("report: malformed check line '" + line + "'");
    r.checks.push_back({unescape(parts[1]), parse_params(parts[2]), parts[0] == "PASS",
                        unescape(parts[3]), unescape(parts[4])});
  }
  if (!saw_status) throw std::invalid_argument("report: missing status line");
  return r;
}

}  // namespace pascal2
