#include "fockcanon/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "fockcanon/crystal.hpp"
#include "fockcanon/errors.hpp"
#include "fockcanon/io.hpp"
#include "fockcanon/verification.hpp"
#include "json.hpp"

namespace fockcanon::cli {

namespace {

using Json = nlohmann::ordered_json;

struct JobSpec {
  std::string e;
  std::string charge;
  int n = 0;
  std::string format = "table";
  std::optional<std::string> out;
  std::optional<std::string> cache_dir;
  std::string mu;
  std::string la;
  int samples = 200;
  std::uint64_t seed = 20240501;
  bool verbose = false;
};

FockContext context_of(const JobSpec& job) {
  return FockContext(Characteristic::parse(job.e), parse_charge(job.charge));
}

Multipartition multipartition_arg(const std::string& text, const FockContext& ctx) {
  auto la = parse_multipartition(text);
  if (la.level() != ctx.level())
    throw std::invalid_argument("multipartition " + text + " has level " + std::to_string(la.level()) +
                                " but the charge has level " + std::to_string(ctx.level()));
  return la;
}

Json integer_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

DecompositionMatrix matrix_for(const JobSpec& job, const FockContext& ctx) {
  const auto dir = resolve_cache_dir(job.cache_dir);
  if (dir)
    if (auto hit = load_cached(*dir, ctx, job.n)) return std::move(*hit);
  auto d = canonical_basis(job.n, ctx);
  if (dir) store_cached(*dir, d);
  return d;
}

std::string emit_canon(const JobSpec& job) {
  const auto ctx = context_of(job);
  const auto d = matrix_for(job, ctx);
  if (job.format == "json") return to_json(d);
  std::ostringstream os;
  if (job.format == "csv")
    write_csv(os, d);
  else
    write_table(os, d);
  return os.str();
}

std::string emit_kleshchev(const JobSpec& job) {
  const auto ctx = context_of(job);
  const auto klesh = enumerate_kleshchev(job.n, ctx);
  if (job.format == "json") {
    Json arr = Json::array();
    for (const auto& mu : klesh) arr.push_back(to_string(mu));
    return arr.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& mu : klesh) os << (job.format == "csv" ? quoted(to_string(mu)) : to_string(mu)) << '\n';
  return os.str();
}

std::string emit_mullineux(const JobSpec& job) {
  const auto ctx = context_of(job);
  const auto mu = multipartition_arg(job.mu, ctx);
  const auto path = crystal_path(mu, ctx);
  const auto image = mullineux(mu, ctx);
  if (job.format == "json") {
    Json j;
    j["mu"] = to_string(mu);
    j["path"] = path;
    j["image"] = to_string(image);
    return j.dump(2) + "\n";
  }
  if (job.format == "csv") return quoted(to_string(mu)) + "," + quoted(to_string(image)) + "\n";
  return to_string(image) + "\n";
}

std::string emit_defect(const JobSpec& job) {
  const auto ctx = context_of(job);
  const auto la = multipartition_arg(job.la, ctx);
  const int def = defect(la, ctx);
  if (job.format == "json") {
    Json j;
    j["la"] = to_string(la);
    j["beta"] = to_string(beta(la, ctx));
    j["defect"] = def;
    return j.dump(2) + "\n";
  }
  if (job.format == "csv") return quoted(to_string(la)) + "," + std::to_string(def) + "\n";
  return std::to_string(def) + "\n";
}

std::string emit_blocks(const JobSpec& job) {
  const auto ctx = context_of(job);
  const auto blocks = block_decomposition(job.n, ctx);
  if (job.format == "json") {
    Json arr = Json::array();
    for (const auto& b : blocks) {
      Json members = Json::array();
      for (const auto& la : b.members) members.push_back(to_string(la));
      arr.push_back(Json{{"beta", to_string(b.beta)}, {"defect", b.defect}, {"members", std::move(members)}});
    }
    return arr.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& b : blocks) {
    if (job.format == "csv") {
      for (const auto& la : b.members) os << quoted(to_string(b.beta)) << ',' << b.defect << ',' << quoted(to_string(la)) << '\n';
      continue;
    }
    os << "beta " << to_string(b.beta) << "  defect " << b.defect << "  {";
    for (std::size_t k = 0; k < b.members.size(); ++k) os << (k ? "; " : "") << to_string(b.members[k]);
    os << "}\n";
  }
  return os.str();
}

std::string emit_dims(const JobSpec& job) {
  const auto ctx = context_of(job);
  const auto d = matrix_for(job, ctx);
  const auto at_one = decomposition_at_one(d);
  if (job.format == "json") {
    Json arr = Json::array();
    for (const auto& mu : d.cols()) arr.push_back(Json{{"mu", to_string(mu)}, {"dim", integer_json(at_one.dims.at(mu))}});
    return arr.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& mu : d.cols()) {
    if (job.format == "csv")
      os << quoted(to_string(mu)) << ',' << at_one.dims.at(mu) << '\n';
    else
      os << to_string(mu) << "  " << at_one.dims.at(mu) << '\n';
  }
  return os.str();
}

// Every size up to n, then the commutator guard once for the context.
bool run_verify(const JobSpec& job, std::ostream& os) {
  const auto ctx = context_of(job);
  std::vector<Report> reports;
  for (int m = 0; m <= job.n; ++m) {
    const auto d = canonical_basis(m, ctx);
    Report rep("n = " + std::to_string(m));
    rep.merge(verify_structure(d));
    rep.merge(verify_fayers(d));
    rep.merge(verify_uniqueness(d));
    rep.merge(verify_dimensions(d));
    rep.merge(verify_mullineux(m, ctx));
    rep.merge(audit_report(degree_audit(d)));
    reports.push_back(std::move(rep));
  }
  reports.push_back(verify_commutators(ctx, job.samples, std::max(job.n, 1), job.seed));
  bool ok = true;
  for (const auto& r : reports) {
    print(os, r, job.verbose);
    ok = ok && r.passed();
  }
  os << (ok ? "verify: all checks passed\n" : "verify: FAILED\n");
  return ok;
}

void add_context_options(CLI::App* sub, JobSpec& job, bool needs_n) {
  sub->add_option("--e", job.e, "quantum characteristic: integer >= 2 or inf")->required();
  sub->add_option("--charge", job.charge, "multicharge, comma-separated integers")->required();
  if (needs_n) sub->add_option("--n", job.n, "size")->required()->check(CLI::NonNegativeNumber);
  sub->add_option("--format", job.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  sub->add_option("--out", job.out, "write to this file instead of stdout");
  sub->add_option("--cache-dir", job.cache_dir, "matrix cache directory (default: $FOCKCANON_CACHE)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Canonical bases and graded decomposition matrices of level-l Fock spaces", "fockcanon");
  app.require_subcommand(1);
  JobSpec job;

  auto* canon = app.add_subcommand("canon", "graded decomposition matrix");
  add_context_options(canon, job, true);
  auto* verify = app.add_subcommand("verify", "run every check for all sizes up to n");
  add_context_options(verify, job, true);
  verify->add_option("--samples", job.samples, "commutator samples")->check(CLI::PositiveNumber);
  verify->add_option("--seed", job.seed, "commutator sampling seed");
  verify->add_flag("--verbose", job.verbose, "list passing checks too");
  auto* kleshchev = app.add_subcommand("kleshchev", "Kleshchev multipartitions of n");
  add_context_options(kleshchev, job, true);
  auto* mull = app.add_subcommand("mullineux", "Mullineux image of a Kleshchev multipartition");
  add_context_options(mull, job, false);
  mull->add_option("--mu", job.mu, "multipartition, e.g. 2,1|1")->required();
  auto* def = app.add_subcommand("defect", "defect of a multipartition");
  add_context_options(def, job, false);
  def->add_option("--la", job.la, "multipartition, e.g. 2,1|1")->required();
  auto* blocks = app.add_subcommand("blocks", "block decomposition of the multipartitions of n");
  add_context_options(blocks, job, true);
  auto* dims = app.add_subcommand("dims", "dimensions of simple modules from the matrix at q = 1");
  add_context_options(dims, job, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (verify->parsed()) {
      std::ostringstream os;
      const bool ok = run_verify(job, os);
      if (job.out)
        write_file_atomic(*job.out, os.str());
      else
        out << os.str();
      return ok ? kOk : kVerificationFailed;
    }
    std::string text;
    if (canon->parsed()) text = emit_canon(job);
    else if (kleshchev->parsed()) text = emit_kleshchev(job);
    else if (mull->parsed()) text = emit_mullineux(job);
    else if (def->parsed()) text = emit_defect(job);
    else if (blocks->parsed()) text = emit_blocks(job);
    else text = emit_dims(job);
    if (job.out)
      write_file_atomic(*job.out, text);
    else
      out << text;
    return kOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const ConventionFault& e) {
    err << "convention fault: " << e.what() << '\n';
    return kConventionFault;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace fockcanon::cli
