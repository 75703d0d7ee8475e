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
#include "lowk/lowk.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "lowk/f_conjugacy.hpp"
#include "lowk/lower_k.hpp"
#include "lowk/report.hpp"

struct lowk_group {
  lowk::FiniteGroup group;
};

namespace {

thread_local std::string last_error;

lowk_status to_status(lowk::ErrorCode c) {
  switch (c) {
    case lowk::ErrorCode::InvalidArgument: return LOWK_ERR_INVALID_ARGUMENT;
    case lowk::ErrorCode::Unsupported: return LOWK_ERR_UNSUPPORTED;
    case lowk::ErrorCode::TooLarge: return LOWK_ERR_TOO_LARGE;
    case lowk::ErrorCode::Internal: return LOWK_ERR_INTERNAL;
  }
  return LOWK_ERR_INTERNAL;
}

template <class F>
lowk_status guard(F&& body) {
  last_error.clear();
  try {
    body();
    return LOWK_OK;
  } catch (const lowk::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return LOWK_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return LOWK_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) lowk::fail(lowk::ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

extern "C" {

const char* lowk_version(void) { return "0.1.0"; }

const char* lowk_last_error(void) { return last_error.c_str(); }

void lowk_string_free(char* s) { std::free(s); }

lowk_status lowk_group_create(const char* family, uint64_t param, lowk_group** out) {
  return guard([&] {
    need(family, "family");
    need(out, "out");
    *out = new lowk_group{lowk::build_family_group(family, param)};
  });
}

void lowk_group_destroy(lowk_group* g) { delete g; }

lowk_status lowk_group_order(const lowk_group* g, uint64_t* out) {
  return guard([&] {
    need(g, "group");
    need(out, "out");
    *out = g->group.order();
  });
}

lowk_status lowk_group_name(const lowk_group* g, char** out) {
  return guard([&] {
    need(g, "group");
    need(out, "out");
    *out = dup(g->group.name());
  });
}

lowk_status lowk_whitehead_rank(const lowk_group* g, uint64_t max_brute_force, uint64_t* out) {
  return guard([&] {
    need(g, "group");
    need(out, "out");
    *out = lowk::whitehead_rank(g->group, max_brute_force);
  });
}

lowk_status lowk_carter_rank(const lowk_group* g, uint64_t max_brute_force, uint64_t* out) {
  return guard([&] {
    need(g, "group");
    need(out, "out");
    *out = lowk::carter_rank(g->group, max_brute_force);
  });
}

lowk_status lowk_r_field(const lowk_group* g, const char* field, uint64_t max_brute_force, uint64_t* out) {
  return guard([&] {
    need(g, "group");
    need(field, "field");
    need(out, "out");
    *out = lowk::r_F(g->group, lowk::FieldDescriptor::parse(field), max_brute_force);
  });
}

lowk_status lowk_lambda(uint64_t m, uint64_t* out) {
  return guard([&] {
    need(out, "out");
    *out = lowk::lambda(m);
  });
}

lowk_status lowk_group_report(const lowk_group* g, const char* invariants, const char* field,
                              uint64_t max_brute_force, char** json_out) {
  return guard([&] {
    need(g, "group");
    need(json_out, "json_out");
    std::vector<std::string> inv =
        invariants ? split_csv(invariants) : std::vector<std::string>{"wh", "k0", "kminus1"};
    auto f = field ? lowk::FieldDescriptor::parse(field) : lowk::FieldDescriptor::rational();
    *json_out = dup(lowk::group_report(g->group, inv, f, max_brute_force).to_json().dump());
  });
}

lowk_status lowk_classify(uint64_t n, int vc, char** json_out) {
  return guard([&] {
    need(json_out, "json_out");
    *json_out = dup(lowk::classify_json(n, vc != 0).dump());
  });
}

lowk_status lowk_b4_verify(const char* suite, char** json_out, int* all_passed) {
  return guard([&] {
    need(suite, "suite");
    need(json_out, "json_out");
    auto j = lowk::b4_verify_json(suite);
    if (all_passed) *all_passed = j["all_passed"].get<bool>() ? 1 : 0;
    *json_out = dup(j.dump());
  });
}

lowk_status lowk_b4_report(char** json_out) {
  return guard([&] {
    need(json_out, "json_out");
    *json_out = dup(lowk::b4_lower_k_report().to_json().dump());
  });
}

}  // extern "C"
