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

#include "lowk/abelian_group.hpp"

#include <algorithm>
#include <map>

#include "lowk/error.hpp"

namespace lowk {

Copies Copies::operator+(const Copies& o) const {
  if (countable || o.countable) return infinitely_many();
  return finite(count + o.count);
}

Copies Copies::scaled(std::uint64_t k) const {
  if (countable) return k == 0 ? finite(0) : infinitely_many();
  return finite(count * k);
}

namespace summand {
std::string nil_bass(int i) { return "NilBass_" + std::to_string(i); }
std::string nil_twisted(int i, int order) {
  return "NilTwisted_" + std::to_string(i) + "_" + std::to_string(order);
}
std::string nil(int i) { return "Nil_" + std::to_string(i); }
}  // namespace summand

AbelianGroupExpr AbelianGroupExpr::free(std::uint64_t rank) {
  AbelianGroupExpr e;
  e.rank_ = rank;
  return e;
}

AbelianGroupExpr AbelianGroupExpr::cyclic(std::uint64_t order) {
  if (order == 0) return free(1);
  AbelianGroupExpr e;
  if (order > 1) e.torsion_.push_back(order);
  return e;
}

AbelianGroupExpr AbelianGroupExpr::elementary(std::uint64_t order, std::uint64_t copies) {
  return cyclic(order).scaled(copies);
}

AbelianGroupExpr AbelianGroupExpr::named(const std::string& name, Copies copies) {
  AbelianGroupExpr e;
  e.infinite_.push_back({name, copies});
  e.canonicalize();
  return e;
}

AbelianGroupExpr AbelianGroupExpr::operator+(const AbelianGroupExpr& o) const {
  AbelianGroupExpr e = *this;
  e.rank_ += o.rank_;
  e.torsion_.insert(e.torsion_.end(), o.torsion_.begin(), o.torsion_.end());
  e.infinite_.insert(e.infinite_.end(), o.infinite_.begin(), o.infinite_.end());
  e.canonicalize();
  return e;
}

AbelianGroupExpr AbelianGroupExpr::scaled(std::uint64_t k) const {
  AbelianGroupExpr e;
  e.rank_ = rank_ * k;
  for (std::uint64_t i = 0; i < k; ++i) e.torsion_.insert(e.torsion_.end(), torsion_.begin(), torsion_.end());
  for (const auto& s : infinite_) e.infinite_.push_back({s.name, s.copies.scaled(k)});
  e.canonicalize();
  return e;
}

AbelianGroupExpr AbelianGroupExpr::countable_sum() const {
  AbelianGroupExpr e;
  if (rank_) e.infinite_.push_back({"Z_countable", Copies::infinitely_many()});
  for (auto t : torsion_) e.infinite_.push_back({"Z" + std::to_string(t) + "_countable", Copies::infinitely_many()});
  for (const auto& s : infinite_) e.infinite_.push_back({s.name, Copies::infinitely_many()});
  e.canonicalize();
  return e;
}

void AbelianGroupExpr::canonicalize() {
  std::sort(torsion_.begin(), torsion_.end());
  std::map<std::string, Copies> merged;
  for (const auto& s : infinite_) {
    if (!s.copies.countable && s.copies.count == 0) continue;
    auto [it, fresh] = merged.try_emplace(s.name, s.copies);
    if (!fresh) it->second = it->second + s.copies;
  }
  infinite_.clear();
  for (auto& [name, copies] : merged) infinite_.push_back({name, copies});
}

namespace {

std::string display_name(const std::string& name) {
  if (name == summand::kZ2Countable) return "(Z_2)^∞";
  if (name == summand::kW) return "W";
  if (name == "Z_countable") return "Z^∞";
  return name;
}

}  // namespace

std::string AbelianGroupExpr::to_string() const {
  std::vector<std::string> parts;
  if (rank_ == 1) parts.push_back("Z");
  else if (rank_ > 1) parts.push_back("Z^" + std::to_string(rank_));
  for (std::size_t i = 0; i < torsion_.size();) {
    std::size_t j = i;
    while (j < torsion_.size() && torsion_[j] == torsion_[i]) ++j;
    std::string z = "Z_" + std::to_string(torsion_[i]);
    parts.push_back(j - i == 1 ? z : "(" + z + ")^" + std::to_string(j - i));
    i = j;
  }
  // Countable torsion sums such as (Z_2)^oo print before other named summands.
  auto countable_torsion = [](const InfiniteSummand& s) {
    return s.name.size() > 10 && s.name[0] == 'Z' && s.name.substr(s.name.size() - 10) == "_countable";
  };
  std::vector<InfiniteSummand> ordered;
  for (const auto& s : infinite_)
    if (countable_torsion(s)) ordered.push_back(s);
  for (const auto& s : infinite_)
    if (!countable_torsion(s)) ordered.push_back(s);
  for (const auto& s : ordered) {
    std::string d = display_name(s.name);
    if (s.copies.countable) parts.push_back("⊕_∞ " + d);
    else if (s.copies.count == 1) parts.push_back(d);
    else parts.push_back(std::to_string(s.copies.count) + d);
  }
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " ⊕ " + parts[i];
  return out;
}

nlohmann::ordered_json AbelianGroupExpr::to_json() const {
  nlohmann::ordered_json j;
  j["rank"] = rank_;
  j["torsion"] = torsion_;
  auto inf = nlohmann::ordered_json::array();
  for (const auto& s : infinite_) {
    nlohmann::ordered_json e;
    e["name"] = s.name;
    if (s.copies.countable) e["copies"] = "countable";
    else e["copies"] = s.copies.count;
    inf.push_back(e);
  }
  j["infinite"] = inf;
  return j;
}

AbelianGroupExpr AbelianGroupExpr::from_json(const nlohmann::ordered_json& j) {
  AbelianGroupExpr e;
  try {
    e.rank_ = j.at("rank").get<std::uint64_t>();
    e.torsion_ = j.at("torsion").get<std::vector<std::uint64_t>>();
    for (const auto& s : j.at("infinite")) {
      const auto& c = s.at("copies");
      Copies copies = c.is_string() ? Copies::infinitely_many() : Copies::finite(c.get<std::uint64_t>());
      if (c.is_string() && c.get<std::string>() != "countable")
        fail(ErrorCode::InvalidArgument, "copies must be an integer or \"countable\"");
      e.infinite_.push_back({s.at("name").get<std::string>(), copies});
    }
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorCode::InvalidArgument, std::string("malformed abelian group expression: ") + ex.what());
  }
  for (auto t : e.torsion_)
    if (t < 2) fail(ErrorCode::InvalidArgument, "torsion coefficients must be >= 2");
  e.canonicalize();
  return e;
}

}  // namespace lowk
