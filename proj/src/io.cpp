#include "fockcanon/io.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fockcanon {

using Json = nlohmann::ordered_json;

const std::string_view kConventionFingerprint =
    "reading=component-asc;exponent=after;signature=cancel-minus-plus;peel=good-node;reduce=two-sided;v1";

namespace {

Json coeff_to_json(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(c));
  return Json(c.str());
}

BigInt coeff_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos)
      throw std::invalid_argument("matrix_from_json: bad coefficient \"" + s + "\"");
    return BigInt(s);
  }
  throw std::invalid_argument("matrix_from_json: coefficient must be an integer or a decimal string");
}

Json poly_to_json(const LaurentPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(coeff_to_json(c));
  return Json{{"min_deg", p.is_zero() ? 0 : p.min_deg()}, {"coeffs", std::move(coeffs)}};
}

LaurentPoly poly_from_json(const Json& j) {
  std::vector<BigInt> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(coeff_from_json(c));
  return LaurentPoly::from_coeffs(j.at("min_deg").get<int>(), std::move(coeffs));
}

Json context_json(const FockContext& ctx) {
  return ctx.e.is_finite() ? Json(ctx.e.value()) : Json("inf");
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string to_json(const DecompositionMatrix& d, bool with_audit) {
  Json j;
  j["e"] = context_json(d.context());
  j["charge"] = d.context().charge.kappas;
  j["n"] = d.n();
  Json rows = Json::array();
  for (const auto& la : d.rows()) rows.push_back(to_string(la));
  Json cols = Json::array();
  for (const auto& mu : d.cols()) cols.push_back(to_string(mu));
  j["rows"] = std::move(rows);
  j["cols"] = std::move(cols);
  Json entries = Json::array();
  for (const auto& [rc, p] : d.entries())
    entries.push_back(Json{{"row", rc.first}, {"col", rc.second}, {"poly", poly_to_json(p)}});
  j["entries"] = std::move(entries);
  if (with_audit) {
    j["intermediate_degrees"] = d.intermediate_degrees();
    j["fingerprint"] = std::string(kConventionFingerprint);
  }
  return j.dump(2) + "\n";
}

DecompositionMatrix matrix_from_json(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    const Json& je = j.at("e");
    const Characteristic e = je.is_string() ? Characteristic::parse(je.get<std::string>()) : Characteristic(je.get<int>());
    FockContext ctx(e, Charge{j.at("charge").get<std::vector<int>>()});
    const int n = j.at("n").get<int>();
    std::vector<Multipartition> rows;
    for (const auto& s : j.at("rows")) rows.push_back(parse_multipartition(s.get<std::string>()));
    std::vector<Multipartition> cols;
    for (const auto& s : j.at("cols")) cols.push_back(parse_multipartition(s.get<std::string>()));
    DecompositionMatrix d(ctx, n, std::move(rows), std::move(cols));
    for (const auto& entry : j.at("entries")) {
      const auto r = entry.at("row").get<std::size_t>();
      const auto c = entry.at("col").get<std::size_t>();
      if (r >= d.rows().size() || c >= d.cols().size())
        throw std::invalid_argument("matrix_from_json: entry index out of range");
      d.set_entry(r, c, poly_from_json(entry.at("poly")));
    }
    if (j.contains("intermediate_degrees"))
      d.set_intermediate_degrees(j.at("intermediate_degrees").get<std::vector<int>>());
    return d;
  } catch (const Json::exception& ex) {
    throw std::invalid_argument(std::string("matrix_from_json: ") + ex.what());
  }
}

void write_csv(std::ostream& os, const DecompositionMatrix& d) {
  for (const auto& [rc, p] : d.entries())
    os << quoted(to_string(d.rows()[rc.first])) << ',' << quoted(to_string(d.cols()[rc.second])) << ','
       << to_string(p) << '\n';
}

void write_table(std::ostream& os, const DecompositionMatrix& d) {
  const auto& ctx = d.context();
  os << "e=" << ctx.e.to_string() << " charge=" << to_string(ctx.charge) << " n=" << d.n() << '\n';
  std::vector<std::string> row_labels;
  std::size_t label_width = 0;
  for (const auto& la : d.rows()) {
    row_labels.push_back(to_string(la));
    label_width = std::max(label_width, row_labels.back().size());
  }
  std::vector<std::vector<std::string>> cells(d.rows().size(), std::vector<std::string>(d.cols().size(), "."));
  std::vector<std::size_t> widths;
  for (const auto& mu : d.cols()) widths.push_back(to_string(mu).size());
  for (const auto& [rc, p] : d.entries()) {
    cells[rc.first][rc.second] = to_string(p);
    widths[rc.second] = std::max(widths[rc.second], cells[rc.first][rc.second].size());
  }
  auto emit = [&](const std::string& label, auto&& cell) {
    std::ostringstream line;
    line << std::left << std::setw(static_cast<int>(label_width)) << label;
    for (std::size_t c = 0; c < d.cols().size(); ++c) line << "  " << std::setw(static_cast<int>(widths[c])) << cell(c);
    std::string text = line.str();
    text.erase(text.find_last_not_of(' ') + 1);
    os << text << '\n';
  };
  emit("", [&](std::size_t c) { return to_string(d.cols()[c]); });
  for (std::size_t r = 0; r < d.rows().size(); ++r) emit(row_labels[r], [&](std::size_t c) { return cells[r][c]; });
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string cache_key(const FockContext& ctx, int n) {
  std::ostringstream os;
  os << ctx.e.to_string() << ';' << to_string(ctx.charge) << ';' << n << ';' << kConventionFingerprint;
  std::ostringstream key;
  key << "canon-" << std::hex << std::setw(16) << std::setfill('0') << fnv1a(os.str());
  return key.str();
}

std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  if (const char* env = std::getenv("FOCKCANON_CACHE"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

std::optional<DecompositionMatrix> load_cached(const std::filesystem::path& dir, const FockContext& ctx, int n) {
  std::ifstream f(dir / (cache_key(ctx, n) + ".json"), std::ios::binary);
  if (!f) return std::nullopt;
  std::stringstream buf;
  buf << f.rdbuf();
  try {
    const Json j = Json::parse(buf.str());
    if (!j.contains("fingerprint") || j.at("fingerprint").get<std::string>() != kConventionFingerprint)
      return std::nullopt;
    auto d = matrix_from_json(buf.str());
    if (!(d.context() == ctx) || d.n() != n) return std::nullopt;
    return d;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void store_cached(const std::filesystem::path& dir, const DecompositionMatrix& d) {
  write_file_atomic(dir / (cache_key(d.context(), d.n()) + ".json"), to_json(d, true));
}

}  // namespace fockcanon
