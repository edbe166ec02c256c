// Copyright 2026 The bbb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bbb/instance_io.h"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace bbb {
namespace {

[[noreturn]] void Fail(const std::string& pointer, const std::string& what) {
  throw InputError(pointer + ": " + what);
}

void CheckKeys(const Json& obj, const std::string& pointer,
               const std::set<std::string>& allowed) {
  if (!obj.is_object()) Fail(pointer, "expected an object");
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) {
      Fail(pointer + "/" + item.key(), "unknown field");
    }
  }
  for (const std::string& key : allowed) {
    if (!obj.contains(key)) Fail(pointer + "/" + key, "missing field");
  }
}

const std::string& StringField(const Json& obj, const std::string& key,
                               const std::string& pointer) {
  const Json& v = obj.at(key);
  if (!v.is_string()) Fail(pointer + "/" + key, "expected a string");
  return v.get_ref<const std::string&>();
}

Rational WeightField(const Json& v, const std::string& pointer) {
  Rational w;
  if (v.is_number_integer()) {
    w = Rational(std::to_string(v.get<int64_t>()));
  } else if (v.is_string()) {
    try {
      w = ParseRational(v.get<std::string>());
    } catch (const InputError& e) {
      Fail(pointer, e.what());
    }
  } else {
    Fail(pointer, "expected an integer or a \"p/q\" string");
  }
  if (w < 0) Fail(pointer, "weight must be nonnegative");
  return w;
}

}  // namespace

Instance InstanceFromJson(const Json& doc) {
  CheckKeys(doc, "", {"vertices", "arcs"});
  const Json& vertices = doc.at("vertices");
  const Json& arcs = doc.at("arcs");
  if (!vertices.is_array()) Fail("/vertices", "expected an array");
  if (!arcs.is_array()) Fail("/arcs", "expected an array");
  Digraph d;
  std::vector<Side> side;
  DegreeVector b;
  for (size_t i = 0; i < vertices.size(); ++i) {
    const std::string p = "/vertices/" + std::to_string(i);
    const Json& v = vertices[i];
    CheckKeys(v, p, {"id", "side", "b"});
    const std::string& id = StringField(v, "id", p);
    if (id.empty()) Fail(p + "/id", "empty id");
    const std::string& s = StringField(v, "side", p);
    if (s != "S" && s != "T") Fail(p + "/side", "expected \"S\" or \"T\"");
    const Json& bv = v.at("b");
    if (!bv.is_number_integer() || bv.get<int64_t>() < 1 ||
        bv.get<int64_t>() > 1000000) {
      Fail(p + "/b", "expected a positive integer");
    }
    try {
      d.AddVertex(id);
    } catch (const InputError& e) {
      Fail(p + "/id", e.what());
    }
    side.push_back(s == "S" ? Side::kS : Side::kT);
    b.push_back(static_cast<int>(bv.get<int64_t>()));
  }
  std::vector<Rational> w;
  for (size_t i = 0; i < arcs.size(); ++i) {
    const std::string p = "/arcs/" + std::to_string(i);
    const Json& a = arcs[i];
    CheckKeys(a, p, {"tail", "head", "weight"});
    const std::string& tail = StringField(a, "tail", p);
    const std::string& head = StringField(a, "head", p);
    if (!d.HasVertex(tail)) Fail(p + "/tail", "unknown vertex '" + tail + "'");
    if (!d.HasVertex(head)) Fail(p + "/head", "unknown vertex '" + head + "'");
    if (side[d.VertexIndex(tail)] == Side::kT &&
        side[d.VertexIndex(head)] == Side::kS) {
      Fail(p, "arc from T to S");
    }
    try {
      d.AddArc(tail, head);
    } catch (const InputError& e) {
      Fail(p, e.what());
    }
    w.push_back(WeightField(a.at("weight"), p + "/weight"));
  }
  try {
    return Instance(std::move(d), std::move(side), std::move(b), std::move(w));
  } catch (const InputError& e) {
    Fail("/vertices", e.what());
  }
}

Instance ParseInstance(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return InstanceFromJson(doc);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Instance LoadInstance(const std::string& path) {
  return ParseInstance(ReadFile(path));
}

Json InstanceToJson(const Instance& inst) {
  const Digraph& d = inst.digraph();
  Json doc;
  doc["vertices"] = Json::array();
  for (int v = 0; v < d.num_vertices(); ++v) {
    Json item;
    item["id"] = d.vertex_id(v);
    item["side"] = inst.InS(v) ? "S" : "T";
    item["b"] = inst.b()[v];
    doc["vertices"].push_back(std::move(item));
  }
  doc["arcs"] = Json::array();
  for (int a = 0; a < d.num_arcs(); ++a) {
    Json item;
    item["tail"] = d.vertex_id(d.arc(a).tail);
    item["head"] = d.vertex_id(d.arc(a).head);
    item["weight"] = ToString(inst.weight(a));
    doc["arcs"].push_back(std::move(item));
  }
  return doc;
}

std::string SerializeInstance(const Instance& inst) {
  return InstanceToJson(inst).dump(2) + "\n";
}

ArcSet SolutionFromJson(const Instance& inst, const Json& doc) {
  CheckKeys(doc, "", {"arcs"});
  const Json& list = doc.at("arcs");
  if (!list.is_array()) Fail("/arcs", "expected an array");
  ArcSet arcs = inst.digraph().NoArcs();
  for (size_t i = 0; i < list.size(); ++i) {
    const std::string p = "/arcs/" + std::to_string(i);
    if (!list[i].is_number_integer()) Fail(p, "expected an arc index");
    int64_t a = list[i].get<int64_t>();
    if (a < 0 || a >= inst.num_arcs()) Fail(p, "arc index out of range");
    if (arcs.Contains(static_cast<int>(a))) Fail(p, "duplicate arc index");
    arcs.Insert(static_cast<int>(a));
  }
  return arcs;
}

ArcSet LoadSolution(const Instance& inst, const std::string& path) {
  Json doc;
  try {
    doc = Json::parse(ReadFile(path));
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return SolutionFromJson(inst, doc);
}

Json ArcsToJson(const ArcSet& arcs) {
  Json list = Json::array();
  for (int a : arcs.Members()) list.push_back(a);
  return list;
}

Json SolutionToJson(const ArcSet& arcs) {
  Json doc;
  doc["arcs"] = ArcsToJson(arcs);
  return doc;
}

Json RationalsToJson(const std::vector<Rational>& values) {
  Json list = Json::array();
  for (const Rational& r : values) list.push_back(ToString(r));
  return list;
}

std::string InstanceHash(const Instance& inst) {
  uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : SerializeInstance(inst)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(h));
  return hex;
}

}  // namespace bbb
