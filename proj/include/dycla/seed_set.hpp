#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "dycla/graph.hpp"

namespace dycla {

/// Sorted set of seed vertices. Duplicate selections collapse, so the
/// effective set can be smaller than the number of choices that produced it.
class SeedSet {
 public:
  SeedSet() = default;
  explicit SeedSet(std::vector<VertexId> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()),
                   members_.end());
  }

  static SeedSet single(VertexId v) { return SeedSet(std::vector<VertexId>{v}); }

  void insert(VertexId v) {
    const auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) members_.insert(it, v);
  }

  bool contains(VertexId v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }

  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  const std::vector<VertexId>& members() const { return members_; }

  /// Joined sorted indices, e.g. "3;17;42" — the CSV field format.
  std::string joined(char sep = ';') const {
    std::string out;
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (i > 0) out.push_back(sep);
      out += std::to_string(members_[i]);
    }
    return out;
  }

  friend bool operator==(const SeedSet&, const SeedSet&) = default;

 private:
  std::vector<VertexId> members_;
};

}  // namespace dycla
