/*
 * Copyright 2026 The lowk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
// Command-line front end over the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <memory>
#include <string>

#include "lowk/lowk.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string format = "json";
  std::uint64_t max_brute_force = 5000;
};

struct Freer {
  void operator()(char* s) const { lowk_string_free(s); }
};
using CString = std::unique_ptr<char, Freer>;

// Runtime errors from the library surface on stderr; invalid arguments and
// unsupported requests count as usage errors.
int report_error(lowk_status st) {
  std::cerr << "error: " << lowk_last_error() << "\n";
  return st == LOWK_ERR_INVALID_ARGUMENT || st == LOWK_ERR_UNSUPPORTED ? kExitUsage : kExitCheckFailed;
}

void print_entry_text(const std::string& key, const Json& e) {
  std::cout << key << ": ";
  if (e.contains("text")) std::cout << e["text"].get<std::string>();
  else std::cout << e["status"].get<std::string>();
  if (e.contains("reason")) std::cout << " (" << e["reason"].get<std::string>() << ")";
  std::cout << "\n";
  for (auto it = e.begin(); it != e.end(); ++it) {
    const auto& k = it.key();
    if (k == "status" || k == "value" || k == "text" || k == "reason" || k == "provenance") continue;
    std::cout << "  " << k << ": " << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
              << "\n";
  }
}

void print_report_text(const Json& j) {
  std::cout << "group: " << j["group"].get<std::string>() << "\n";
  for (auto it = j["invariants"].begin(); it != j["invariants"].end(); ++it) print_entry_text(it.key(), it.value());
  if (j.contains("nil")) {
    for (auto it = j["nil"].begin(); it != j["nil"].end(); ++it)
      std::cout << it.key() << " = " << it.value()["text"].get<std::string>() << "\n";
  }
}

void print_descriptors(const char* title, const Json& list) {
  std::cout << title << ":\n";
  for (const auto& d : list) {
    std::cout << "  " << d["name"].get<std::string>();
    if (d.contains("maximal") && d["maximal"] != "unstated") std::cout << "  [" << d["maximal"].get<std::string>() << "]";
    if (d.contains("conjugacy_classes")) std::cout << "  conjugacy classes: " << d["conjugacy_classes"].get<std::string>();
    if (d.contains("isomorphism_classes"))
      std::cout << "  isomorphism classes: " << d["isomorphism_classes"].get<unsigned>();
    std::cout << "\n";
  }
}

void print_verify_text(const Json& j) {
  for (const auto& s : j["suites"]) {
    for (const auto& c : s["checks"]) {
      std::cout << (c["status"] == "pass" ? "PASS " : "FAIL ") << s["suite"].get<std::string>() << "/"
                << c["check_id"].get<std::string>() << "  " << c["statement"].get<std::string>();
      if (c.contains("witness_normal_form")) std::cout << "  [" << c["witness_normal_form"].get<std::string>() << "]";
      std::cout << "\n";
    }
  }
  std::cout << j["passed"].get<std::uint64_t>() << "/" << j["total"].get<std::uint64_t>() << " checks passed\n";
}

void emit(const Options& o, const Json& j, void (*text)(const Json&)) {
  if (o.format == "json") std::cout << j.dump(2) << "\n";
  else text(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lower algebraic K-theory of finite and virtually cyclic groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-brute-force", opt.max_brute_force, "Largest group order handled by enumeration")
      ->check(CLI::PositiveNumber);
  app.add_flag_callback("--version", [] {
    std::cout << lowk_version() << "\n";
    throw CLI::Success();
  });

  std::string family;
  std::uint64_t m = 0, k = 0;
  std::string invariants = "wh,k0,kminus1";
  std::string field = "Q";
  auto* group = app.add_subcommand("group", "Invariants of a finite group");
  group->add_option("family", family, "Group family")
      ->required()
      ->check(CLI::IsMember({"cyclic", "dicyclic", "quaternion", "tstar", "ostar", "istar"}));
  auto* m_opt = group->add_option("--m", m, "Cyclic order or dicyclic parameter");
  auto* k_opt = group->add_option("--k", k, "Quaternion exponent: Q_{2^k}");
  m_opt->excludes(k_opt);
  group->add_option("--invariants", invariants, "Comma-separated: wh,k0,kminus1,rf,wedderburn");
  group->add_option("--field", field, "Q, Qp:<p> or Fp:<p> (used by rf)");

  std::uint64_t lambda_m = 0;
  auto* lam = app.add_subcommand("lambda", "Q_2-classes of order-m elements of Dic_{4m}");
  lam->add_option("--m", lambda_m, "Odd prime")->required();

  std::uint64_t n = 0;
  bool vc = false;
  auto* classify = app.add_subcommand("classify", "Finite and virtually cyclic subgroups of B_n(S^2)");
  classify->add_option("--n", n, "Number of strings")->required();
  classify->add_flag("--vc", vc, "Include virtually cyclic classes");

  auto* b4 = app.add_subcommand("b4", "The group B_4(S^2)");
  b4->require_subcommand(1);
  std::string suite = "all";
  auto* verify = b4->add_subcommand("verify", "Run the B_4(S^2) check suites");
  verify->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"braid", "actions", "gamma", "kernel", "rs", "all"}));
  auto* report = b4->add_subcommand("report", "Lower K-groups of Z[B_4(S^2)]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (group->parsed()) {
    std::uint64_t param = 0;
    if (family == "cyclic" || family == "dicyclic") {
      if (!*m_opt) {
        std::cerr << "error: " << family << " needs --m\n";
        return kExitUsage;
      }
      param = m;
    } else if (family == "quaternion") {
      if (!*k_opt) {
        std::cerr << "error: quaternion needs --k\n";
        return kExitUsage;
      }
      param = k;
    } else if (*m_opt || *k_opt) {
      std::cerr << "error: " << family << " takes no parameter\n";
      return kExitUsage;
    }
    lowk_group* g = nullptr;
    if (auto st = lowk_group_create(family.c_str(), param, &g); st != LOWK_OK) return report_error(st);
    std::unique_ptr<lowk_group, void (*)(lowk_group*)> holder(g, lowk_group_destroy);
    char* out = nullptr;
    auto st = lowk_group_report(g, invariants.c_str(), field.c_str(), opt.max_brute_force, &out);
    if (st != LOWK_OK) return report_error(st);
    CString json(out);
    emit(opt, Json::parse(json.get()), print_report_text);
    return kExitOk;
  }

  if (lam->parsed()) {
    std::uint64_t value = 0;
    if (auto st = lowk_lambda(lambda_m, &value); st != LOWK_OK) return report_error(st);
    Json j;
    j["schema"] = "lowk/1";
    j["m"] = lambda_m;
    j["lambda"] = value;
    emit(opt, j, [](const Json& x) { std::cout << "lambda(" << x["m"] << ") = " << x["lambda"] << "\n"; });
    return kExitOk;
  }

  if (classify->parsed()) {
    char* out = nullptr;
    if (auto st = lowk_classify(n, vc ? 1 : 0, &out); st != LOWK_OK) return report_error(st);
    CString json(out);
    emit(opt, Json::parse(json.get()), [](const Json& j) {
      std::cout << "n = " << j["n"] << "\n";
      print_descriptors("maximal finite", j["maximal_finite"]);
      if (j.contains("virtually_cyclic")) print_descriptors("virtually cyclic", j["virtually_cyclic"]);
      if (j.contains("maximal_virtually_cyclic"))
        print_descriptors("maximal virtually cyclic", j["maximal_virtually_cyclic"]);
    });
    return kExitOk;
  }

  if (verify->parsed()) {
    char* out = nullptr;
    int all_passed = 0;
    if (auto st = lowk_b4_verify(suite.c_str(), &out, &all_passed); st != LOWK_OK) return report_error(st);
    CString json(out);
    emit(opt, Json::parse(json.get()), print_verify_text);
    return all_passed ? kExitOk : kExitCheckFailed;
  }

  if (report->parsed()) {
    char* out = nullptr;
    if (auto st = lowk_b4_report(&out); st != LOWK_OK) return report_error(st);
    CString json(out);
    emit(opt, Json::parse(json.get()), print_report_text);
    return kExitOk;
  }
  return kExitUsage;
}
