#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "derange/bijection.hpp"
#include "derange/enumerate.hpp"
#include "derange/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace derange;

json cardinalities_json(const CountRecord& r) {
  json doc{
      {"n", r.n},
      {"d", r.d_n.str()},
      {"d_rec2", r.d_rec2.str()},
      {"f", r.f_n.str()},
      {"dstar", r.dstar_n.str()},
      {"fstar", r.fstar_n.str()},
      {"rec_agree", r.rec_agree},
      {"consistent", r.consistent()},
  };
  doc["d_brute"] = r.d_brute ? json(*r.d_brute) : json(nullptr);
  doc["f_brute"] = r.f_brute ? json(*r.f_brute) : json(nullptr);
  doc["dstar_brute"] = r.dstar_brute ? json(*r.dstar_brute) : json(nullptr);
  doc["fstar_brute"] = r.fstar_brute ? json(*r.fstar_brute) : json(nullptr);
  doc["brute_agree"] = r.brute_agree ? json(*r.brute_agree) : json(nullptr);
  return doc;
}

json report_json(const VerifyReport& rep) {
  json failures = json::array();
  for (const VerifyFailure& f : rep.failures) {
    failures.push_back(
        {{"input", f.input}, {"context", f.context}, {"actual", f.actual}});
  }
  return json{
      {"n", rep.n},
      {"bijective", rep.bijective},
      {"inverse_ok", rep.inverse_ok},
      {"excluded_count_d", rep.excluded_count_d},
      {"excluded_count_f", rep.excluded_count_f},
      {"dstar_count", rep.dstar_count},
      {"fstar_count", rep.fstar_count},
      {"image_count", rep.image_count},
      {"cardinalities", cardinalities_json(rep.cardinalities)},
      {"failures", failures},
  };
}

void print_report_text(const VerifyReport& rep) {
  const CountRecord& c = rep.cardinalities;
  std::cout << "n=" << rep.n << " bijective=" << (rep.bijective ? "true" : "false")
            << " inverse_ok=" << (rep.inverse_ok ? "true" : "false")
            << " excluded_d=" << rep.excluded_count_d
            << " excluded_f=" << rep.excluded_count_f
            << " dstar=" << rep.dstar_count << " fstar=" << rep.fstar_count
            << " images=" << rep.image_count << " d=" << c.d_n
            << " f=" << c.f_n
            << " consistent=" << (c.consistent() ? "true" : "false") << "\n";
  for (const VerifyFailure& f : rep.failures) {
    std::cout << "  failure input=" << f.input << " context=\"" << f.context
              << "\" actual=" << f.actual << "\n";
  }
}

int cmd_map(const std::string& perm, bool structured) {
  const CycleForm input = parse_cycles(perm);
  const CycleForm image = psi(input);
  if (structured) {
    const BijectionCase bc = classify_case(input);
    const json doc{
        {"input", format_cycles(input)},
        {"n", input.n},
        {"case", map_case_name(bc.variant)},
        {"k", bc.k},
        {"a1", bc.a1},
        {"output", format_cycles(image, CycleFormat::FixedPointFirst)},
    };
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << format_cycles(image, CycleFormat::FixedPointFirst) << "\n";
  }
  return 0;
}

int cmd_invert(const std::string& perm, bool structured) {
  const CycleForm input = parse_cycles(perm);
  const CycleForm pre = psi_inverse(input);
  if (structured) {
    const BijectionCase bc = classify_case(pre);
    const json doc{
        {"input", format_cycles(input, CycleFormat::FixedPointFirst)},
        {"n", input.n},
        {"case", map_case_name(bc.variant)},
        {"k", bc.k},
        {"a1", bc.a1},
        {"output", format_cycles(pre)},
    };
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << format_cycles(pre) << "\n";
  }
  return 0;
}

int cmd_verify(int max_n, int jobs, bool structured) {
  if (max_n < 1) {
    std::cerr << "error: --max-n must be at least 1\n";
    return 2;
  }
  if (max_n > kDefaultEnumerationBound) {
    throw DomainError(Errc::BoundExceeded,
                      "--max-n " + std::to_string(max_n) +
                          " exceeds the enumeration bound " +
                          std::to_string(kDefaultEnumerationBound));
  }
  bool all_ok = true;
  std::vector<VerifyReport> reports;
  reports.reserve(static_cast<std::size_t>(max_n));
  for (int n = 1; n <= max_n; ++n) {
    reports.push_back(verify_n(n, jobs));
    const VerifyReport& rep = reports.back();
    all_ok = all_ok && rep.ok() && rep.cardinalities.consistent();
  }
  if (structured) {
    json docs = json::array();
    for (const VerifyReport& rep : reports) docs.push_back(report_json(rep));
    const json doc{{"max_n", max_n}, {"jobs", jobs}, {"reports", docs},
                   {"ok", all_ok}};
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const VerifyReport& rep : reports) print_report_text(rep);
    std::cout << (all_ok ? "all reports ok" : "FAILURES FOUND") << "\n";
  }
  return all_ok ? 0 : 1;
}

int cmd_count(int max_n, bool structured) {
  if (max_n < 0) {
    std::cerr << "error: --max-n must be at least 0\n";
    return 2;
  }
  const std::vector<CountRecord> rows = count_table(max_n);
  bool all_ok = true;
  for (const CountRecord& r : rows) all_ok = all_ok && r.consistent();

  if (structured) {
    json docs = json::array();
    for (const CountRecord& r : rows) docs.push_back(cardinalities_json(r));
    const json doc{{"max_n", max_n}, {"rows", docs}, {"ok", all_ok}};
    std::cout << doc.dump(2) << "\n";
    return all_ok ? 0 : 1;
  }

  std::size_t w = 8;
  for (const CountRecord& r : rows) {
    w = std::max(w, r.d_n.str().size() + 1);
  }
  const int width = static_cast<int>(w);
  std::cout << std::setw(4) << "n" << std::setw(width) << "d_rec1"
            << std::setw(width) << "d_rec2" << std::setw(12) << "d_brute"
            << std::setw(width) << "f" << std::setw(width) << "dstar"
            << std::setw(width) << "fstar" << std::setw(6) << "ok" << "\n";
  for (const CountRecord& r : rows) {
    std::cout << std::setw(4) << r.n << std::setw(width) << r.d_n.str()
              << std::setw(width) << r.d_rec2.str() << std::setw(12)
              << (r.d_brute ? std::to_string(*r.d_brute) : std::string("-"))
              << std::setw(width) << r.f_n.str() << std::setw(width)
              << r.dstar_n.str() << std::setw(width) << r.fstar_n.str()
              << std::setw(6) << (r.consistent() ? "yes" : "NO") << "\n";
  }
  return all_ok ? 0 : 1;
}

json golden_row_json(const GoldenRow& row) {
  json doc{{"pi", row.pi}, {"image", row.image}};
  doc["case"] = row.tag ? json(map_case_name(*row.tag)) : json(nullptr);
  doc["k"] = row.k ? json(*row.k) : json(nullptr);
  doc["a1"] = row.a1 ? json(*row.a1) : json(nullptr);
  return doc;
}

std::string golden_row_text(const GoldenRow& row) {
  std::ostringstream out;
  out << std::left << std::setw(11) << row.pi << " -> " << std::left
      << std::setw(13) << row.image << " case=" << std::left << std::setw(9)
      << (row.tag ? map_case_name(*row.tag) : "-")
      << " k=" << (row.k ? std::to_string(*row.k) : "-")
      << " a1=" << (row.a1 ? std::to_string(*row.a1) : "-");
  return out.str();
}

int cmd_table(bool structured) {
  const std::vector<GoldenComparison> rows = golden_compare();
  bool all_match = true;
  for (const GoldenComparison& cmp : rows) all_match = all_match && cmp.match;

  if (structured) {
    json docs = json::array();
    for (const GoldenComparison& cmp : rows) {
      docs.push_back({{"reference", golden_row_json(cmp.reference)},
                      {"computed", golden_row_json(cmp.computed)},
                      {"match", cmp.match}});
    }
    const json doc{{"rows", docs}, {"ok", all_match}};
    std::cout << doc.dump(2) << "\n";
    return all_match ? 0 : 1;
  }

  for (std::size_t i = 0; i < rows.size(); ++i) {
    const GoldenComparison& cmp = rows[i];
    std::cout << std::right << std::setw(2) << i + 1 << "  "
              << golden_row_text(cmp.reference) << "  "
              << (cmp.match ? "MATCH" : "MISMATCH") << "\n";
    if (!cmp.match) {
      std::cout << "    computed: " << golden_row_text(cmp.computed) << "\n";
    }
  }
  std::cout << (all_match ? "all rows match" : "MISMATCHES FOUND") << "\n";
  return all_match ? 0 : 1;
}

PermClass class_from_name(const std::string& name) {
  if (name == "s") return PermClass::S;
  if (name == "d") return PermClass::D;
  if (name == "f") return PermClass::F;
  if (name == "dstar") return PermClass::DStar;
  return PermClass::FStar;
}

int cmd_enumerate(int n, const std::string& cls_name, bool structured) {
  if (n < 0) {
    std::cerr << "error: --n must be at least 0\n";
    return 2;
  }
  if (n > kMaxEnumerationBound) {
    throw DomainError(Errc::BoundExceeded,
                      "--n " + std::to_string(n) +
                          " exceeds the hard enumeration ceiling " +
                          std::to_string(kMaxEnumerationBound));
  }
  ClassStream stream(n, class_from_name(cls_name));
  if (structured) {
    std::uint64_t count = 0;
    std::cout << "{\"class\":" << json(cls_name).dump() << ",\"n\":" << n
              << ",\"members\":[";
    while (auto p = stream.next()) {
      if (count != 0) std::cout << ",";
      std::cout << "\n  " << json(format_cycles(to_cycle_form(*p))).dump();
      ++count;
    }
    std::cout << (count != 0 ? "\n" : "") << "],\"count\":" << count << "}\n";
  } else {
    while (auto p = stream.next()) {
      std::cout << format_cycles(to_cycle_form(*p)) << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bijection between derangements and one-fixed-point permutations"};
  app.require_subcommand(1);

  std::string perm;
  int max_n = derange::kDefaultEnumerationBound;
  int count_max_n = 30;
  int jobs = 1;
  int en_n = 0;
  std::string en_class = "d";
  bool structured = false;

  CLI::App* map_cmd = app.add_subcommand(
      "map", "Map a derangement to a one-fixed-point permutation");
  map_cmd->add_option("--perm", perm, "Input in cycle notation, e.g. \"(1,3)(2,4)\"")
      ->required();

  CLI::App* invert_cmd = app.add_subcommand(
      "invert", "Map a one-fixed-point permutation back to a derangement");
  invert_cmd
      ->add_option("--perm", perm, "Input in cycle notation, e.g. \"(2)(1,3,4)\"")
      ->required();

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Exhaustively verify the bijection for every n up to --max-n");
  verify_cmd->add_option("--max-n", max_n, "Largest n to verify (at most 9)");
  verify_cmd->add_option("--jobs", jobs, "Worker threads per n")
      ->check(CLI::Range(1, 64));

  CLI::App* count_cmd = app.add_subcommand(
      "count", "Print the counting table for n = 0..--max-n");
  count_cmd->add_option("--max-n", count_max_n, "Largest n to count");

  CLI::App* table_cmd = app.add_subcommand(
      "table", "Compare the computed size-4 and size-5 tables against the "
               "embedded reference");

  CLI::App* enumerate_cmd = app.add_subcommand(
      "enumerate", "Stream the members of one class, one per line");
  enumerate_cmd->add_option("--n", en_n, "Ground set size")->required();
  enumerate_cmd
      ->add_option("--class", en_class, "One of s, d, f, dstar, fstar")
      ->check(CLI::IsMember({"s", "d", "f", "dstar", "fstar"}));

  for (CLI::App* sub :
       {map_cmd, invert_cmd, verify_cmd, count_cmd, table_cmd, enumerate_cmd}) {
    sub->add_flag("--structured", structured,
                  "Emit one machine-readable JSON document");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (map_cmd->parsed()) return cmd_map(perm, structured);
    if (invert_cmd->parsed()) return cmd_invert(perm, structured);
    if (verify_cmd->parsed()) return cmd_verify(max_n, jobs, structured);
    if (count_cmd->parsed()) return cmd_count(count_max_n, structured);
    if (table_cmd->parsed()) return cmd_table(structured);
    if (enumerate_cmd->parsed()) return cmd_enumerate(en_n, en_class, structured);
  } catch (const derange::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
