#pragma once

#include <map>
#include <string>
#include <vector>

#include "ldsk/error.hpp"
#include "ldsk/graph.hpp"

namespace ldsk {

/// Bijection between generated vertex ids and symbolic role names.
class RoleTable {
 public:
  Vertex add(std::string name) {
    if (ids_.count(name)) throw InternalError("duplicate role " + name);
    const auto v = static_cast<Vertex>(names_.size());
    ids_.emplace(name, v);
    names_.push_back(std::move(name));
    return v;
  }

  Vertex id(const std::string& name) const {
    auto it = ids_.find(name);
    if (it == ids_.end()) throw InvalidArgument("unknown role " + name);
    return it->second;
  }

  const std::string& name(Vertex v) const { return names_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  int size() const noexcept { return static_cast<int>(names_.size()); }

 private:
  std::vector<std::string> names_;
  std::map<std::string, Vertex> ids_;
};

namespace detail {

inline std::string role(const std::string& head, std::initializer_list<int> args) {
  std::string out = head + "(";
  bool first = true;
  for (int a : args) {
    if (!first) out += ',';
    out += std::to_string(a);
    first = false;
  }
  return out + ")";
}

}  // namespace detail

}  // namespace ldsk
