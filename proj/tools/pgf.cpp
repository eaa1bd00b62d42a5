// Copyright 2026 The pgroup-family Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// pgf: command-line front end.
//
// Exit codes: 0 success, 1 computation failure, 2 usage or input error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pgf/pgf.hpp"

#ifndef PGF_DATA_DIR
#define PGF_DATA_DIR ""
#endif

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

constexpr const char* kFooter = R"help(Certificates:
  cert := C(p,k)                 cyclic group of order p^k
        | D(cert,cert)           direct product
        | W(cert,cert)           regular wreath product, inner first
        | Q(cert;word{,word})    quotient by the normal closure of the words,
                                 which must lie in the Frattini subgroup
  word := g<i> | 1 | word*word | word^<int> | [word,word] | (word)
  Generators of a node: C has one; D and W list the left child's, then the
  right child's; Q keeps the child's.

Examples:
  pgf build "W(C(2,1),C(2,1))"          order=8 rank=2 dl=2
  pgf build "D(C(2,2),W(C(3,1),C(3,1)))"
  pgf semiabelian "Q(W(C(2,1),C(2,2));[g1,g2])"
  pgf semiabelian data/order64.pc#200
  pgf census data/order64.pc --cache cache --format csv
  pgf bounds "W(C(5,1),C(5,1))"
  pgf verify --long

Environment:
  PGF_CACHE  census cache directory when --cache is not given)help";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<pgf::PcEntry> load_pc(const std::filesystem::path& path) {
  try {
    return pgf::parse_pc_file(read_file(path));
  } catch (const pgf::ParseError& e) {
    throw UsageError(path.string() + ": " + e.what());
  }
}

pgf::Cert load_cert(const std::string& text) {
  try {
    return pgf::parse_cert(text);
  } catch (const pgf::ParseError& e) {
    throw UsageError("certificate '" + text + "': " + e.what());
  }
}

pgf::ReportFormat report_format(const std::string& f) {
  return f == "csv" ? pgf::ReportFormat::csv : pgf::ReportFormat::json;
}

// Generators in cycle notation; large regular representations are summarized.
std::string gens_text(const pgf::PermGroup& g) {
  if (g.is_trivial()) return "()";
  if (g.degree() > 32) {
    const std::size_t n = g.generators().size();
    return std::to_string(n) + (n == 1 ? " generator on " : " generators on ") +
           std::to_string(g.degree()) + " points";
  }
  std::string out;
  for (const pgf::Perm& s : g.generators()) {
    if (s.is_identity()) continue;
    if (!out.empty()) out += ", ";
    out += s.to_string();
  }
  return out.empty() ? "()" : out;
}

// A subject of `semiabelian`: a certificate or `file#index`.
struct Subject {
  std::string name;
  pgf::PermGroup group;
};

Subject load_subject(const std::string& arg) {
  const auto hash = arg.rfind('#');
  if (hash != std::string::npos && std::filesystem::exists(arg.substr(0, hash))) {
    std::uint64_t index = 0;
    try {
      index = std::stoull(arg.substr(hash + 1));
    } catch (const std::exception&) {
      throw UsageError("bad group index in '" + arg + "'");
    }
    for (const pgf::PcEntry& e : load_pc(arg.substr(0, hash))) {
      if (e.id.index == index) return {e.id.to_string(), pgf::pc_to_perm(e.presentation)};
    }
    throw UsageError("no group with index " + std::to_string(index) + " in " + arg.substr(0, hash));
  }
  pgf::Cert c = load_cert(arg);
  return {pgf::to_string(c), pgf::eval_cert(c)};
}

int cmd_build(const std::string& text, const std::string& format) {
  pgf::Cert c = load_cert(text);
  pgf::CertGroup g = pgf::eval_cert_checked(c);
  const unsigned dl = pgf::derived_length(g.group);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["cert"] = pgf::to_string(c);
    j["prime"] = g.prime;
    j["order"] = g.group.order();
    j["degree"] = g.group.degree();
    j["rank"] = g.rank;
    j["dl"] = dl;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "order=" << g.group.order() << " rank=" << g.rank << " dl=" << dl << '\n';
  }
  return 0;
}

int cmd_semiabelian(const std::string& arg, std::uint64_t order_cap) {
  Subject s = load_subject(arg);
  pgf::SemiabelianVerdict v = pgf::is_semiabelian(s.group, order_cap);
  if (v.flag && !pgf::validate_witness(s.group, v)) {
    std::cerr << "error: " << s.name << ": witness failed validation\n";
    return kExitFailure;
  }
  std::cout << s.name << ": " << (v.flag ? "true" : "false") << '\n';
  if (v.flag) {
    std::uint64_t cur = s.group.order();
    for (std::size_t k = 0; k < v.witness.size(); ++k) {
      const pgf::SemiabelianStep& st = v.witness[k];
      const std::string cur_name = k == 0 ? "G" : "H" + std::to_string(k);
      std::cout << "  step " << k + 1 << ": " << cur_name << " = A" << k + 1 << " H" << k + 1
                << ", |" << cur_name << "|=" << cur << ", |A" << k + 1 << "|=" << st.a.order()
                << " <" << gens_text(st.a) << ">, |H" << k + 1 << "|=" << st.h.order() << " <"
                << gens_text(st.h) << ">\n";
      cur = st.h.order();
    }
  } else {
    std::cout << "  " << v.summary() << '\n';
  }
  return 0;
}

int cmd_census(const std::string& file, const std::optional<std::string>& cache, unsigned jobs,
               const std::string& format, bool timing, std::uint64_t order_cap,
               std::optional<std::size_t> limit, std::string provenance) {
  std::vector<pgf::PcEntry> entries = load_pc(file);
  pgf::CensusOptions opt;
  opt.provenance = provenance.empty() ? std::filesystem::path(file).filename().string() : provenance;
  opt.jobs = jobs;
  opt.cache_dir = pgf::resolve_cache_dir(cache ? std::optional<std::filesystem::path>(*cache)
                                               : std::nullopt);
  opt.order_cap = order_cap;
  opt.timing = timing;
  opt.limit = limit;
  pgf::CensusResult r = pgf::run_census(entries, opt);
  if (format == "text") {
    std::cout << "dataset=" << r.summary.dataset << " order=" << r.summary.order
              << " total=" << r.summary.total << " non_semiabelian=" << r.summary.non_semiabelian
              << " from_cache=" << r.summary.from_cache << " complete="
              << (r.summary.complete ? "true" : "false") << " wall_time_ms=" << r.summary.wall_time_ms
              << '\n';
    for (const pgf::CensusRecord& rec : r.records) {
      if (!rec.semiabelian) {
        std::cout << "  not semiabelian: " << rec.id.to_string() << " rank=" << rec.rank
                  << " dl=" << rec.derived_length << '\n';
      }
    }
  } else {
    std::cout << pgf::emit_report(r.records, r.summary, report_format(format));
  }
  for (const pgf::CensusFailure& f : r.summary.failures) {
    std::cerr << "failure: group " << f.id.to_string() << ": " << f.message << '\n';
  }
  return r.summary.failures.empty() ? 0 : kExitFailure;
}

int cmd_ramification(const std::string& text, const std::string& format) {
  pgf::RamReport r = pgf::min_ramified_primes(load_cert(text));
  if (format == "json") {
    std::cout << pgf::to_json(r).dump(2) << '\n';
    return 0;
  }
  std::cout << "certificate: " << r.descriptor << '\n'
            << "prime: " << r.prime << '\n'
            << "rank: " << r.rank << '\n'
            << "minimal number of tamely ramified primes: " << r.claim_text() << '\n'
            << "  " << r.rank_lower_bound_note << '\n'
            << "Plans bound, excluding first factor: " << r.plans_bound_excluding_first << '\n'
            << "Plans bound, excluding last factor: " << r.plans_bound_excluding_last << '\n';
  return 0;
}

int cmd_bounds(const std::vector<std::string>& certs, const std::string& format) {
  if (format == "text") {
    std::vector<pgf::BoundsRow> rows;
    for (const std::string& c : certs) rows.push_back(pgf::compare_bounds(load_cert(c)));
    std::cout << pgf::format_bounds_table(rows);
    return 0;
  }
  std::vector<pgf::RamRow> rows;
  for (std::size_t k = 0; k < certs.size(); ++k) rows.push_back(pgf::ram_row(load_cert(certs[k]), k + 1));
  std::cout << pgf::emit_ram_rows(rows, report_format(format));
  return 0;
}

int cmd_verify(const std::string& data_dir, bool include_long, unsigned jobs,
               const std::optional<std::string>& cache, const std::string& format) {
  pgf::VerifyOptions opt;
  if (!data_dir.empty()) opt.data_dir = data_dir;
  opt.include_long = include_long;
  opt.jobs = jobs;
  opt.cache_dir = pgf::resolve_cache_dir(cache ? std::optional<std::filesystem::path>(*cache)
                                               : std::nullopt);
  const bool text = format == "text";
  pgf::VerifyReport rep = pgf::run_verify(opt, [&](const pgf::ClaimResult& c) {
    if (text) std::cout << pgf::VerifyReport{{c}}.table() << std::flush;
  });
  if (!text) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const pgf::ClaimResult& c : rep.claims) {
      arr.push_back({{"id", c.id},
                     {"title", c.title},
                     {"status", pgf::to_string(c.status)},
                     {"gating", c.gating},
                     {"detail", c.detail},
                     {"seconds", c.seconds}});
    }
    std::cout << nlohmann::ordered_json{{"ok", rep.ok()}, {"claims", arr}}.dump(2) << '\n';
  } else {
    std::cout << (rep.ok() ? "all gating claims hold\n" : "some gating claims FAILED\n");
  }
  return rep.ok() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite p-group family toolkit: certificates, semiabelian tests, censuses."};
  app.footer(kFooter);
  app.require_subcommand(1);

  std::string cert_text, format = "text";
  std::uint64_t order_cap = pgf::kDefaultCensusOrderCap;

  auto* build = app.add_subcommand("build", "Evaluate a certificate; print order, rank, dl");
  build->add_option("cert", cert_text, "certificate")->required();
  build->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string subject;
  auto* semi = app.add_subcommand("semiabelian", "Decide semiabelianity, with a witness chain");
  semi->add_option("subject", subject, "certificate, or pcfile#index")->required();
  semi->add_option("--order-cap", order_cap, "largest order searched");

  std::string pcfile, provenance;
  std::optional<std::string> cache;
  unsigned jobs = 0;
  bool no_timing = false;
  std::optional<std::size_t> limit;
  auto* census = app.add_subcommand("census", "Classify every group of a pc dataset");
  census->add_option("pcfile", pcfile, "pc dataset")->required();
  census->add_option("--cache", cache, "resume cache directory (default: $PGF_CACHE)");
  census->add_option("--jobs", jobs, "worker threads (0: all cores)");
  census->add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  census->add_flag("--no-timing", no_timing, "write zero timings, for reproducible reports");
  census->add_option("--order-cap", order_cap, "largest order searched");
  census->add_option("--limit", limit, "classify at most this many new groups");
  census->add_option("--provenance", provenance, "dataset label (default: file name)");

  auto* ram = app.add_subcommand("ramification", "Rank and Plans bounds for a certificate");
  ram->add_option("cert", cert_text, "certificate")->required();
  ram->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> certs;
  auto* bounds = app.add_subcommand("bounds", "Compare rank with both Plans bounds");
  bounds->add_option("cert", certs, "certificates")->required();
  bounds->add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  std::string data_dir = PGF_DATA_DIR;
  bool include_long = false;
  auto* verify = app.add_subcommand("verify", "Run the claims suite");
  verify->add_option("--data-dir", data_dir, "directory holding order<N>.pc datasets");
  verify->add_flag("--long", include_long, "also run the long optional counts");
  verify->add_option("--jobs", jobs, "census worker threads (0: all cores)");
  verify->add_option("--cache", cache, "census cache directory (default: $PGF_CACHE)");
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*build) return cmd_build(cert_text, format);
    if (*semi) return cmd_semiabelian(subject, order_cap);
    if (*census) {
      return cmd_census(pcfile, cache, jobs, format, !no_timing, order_cap, limit, provenance);
    }
    if (*ram) return cmd_ramification(cert_text, format);
    if (*bounds) return cmd_bounds(certs, format);
    if (*verify) return cmd_verify(data_dir, include_long, jobs, cache, format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
