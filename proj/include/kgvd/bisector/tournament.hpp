// Copyright 2026 The kgvd Authors.
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

#ifndef KGVD_BISECTOR_TOURNAMENT_HPP_
#define KGVD_BISECTOR_TOURNAMENT_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace kgvd {

// Entry of a tournament: an intersection of two extension segments.
// `value` is measured against the entry's own anchors; `anchor` is the
// offset of those anchors from a common reference, so value + anchor is
// comparable across entries.
struct EventPoint {
  double key = 0;   // position along the bisector
  int64_t id = 0;   // unique per tournament
  double value = 0;
  double anchor = 0;
};

// Treap over event points ordered by key. Every node keeps the maximum of
// its subtree expressed against its own anchors; the offset to a child is
// the difference of their anchors.
class OffsetTournament {
 public:
  OffsetTournament() = default;
  OffsetTournament(OffsetTournament&&) = default;
  OffsetTournament& operator=(OffsetTournament&&) = default;

  void insert(const EventPoint& ep);
  // Errors: UnknownEventPoint.
  void remove(const EventPoint& ep);
  // Moves every entry with key > `key` into the returned tournament.
  OffsetTournament split(double key);

  bool empty() const { return root_ == nullptr; }
  int size() const;
  // Subtree maximum at the root, against the root's anchors.
  std::optional<double> root_max() const;
  // Same value against the common reference (root_max + root anchor).
  std::optional<double> max_value() const;
  // Entry attaining the maximum.
  std::optional<EventPoint> argmax() const;
  std::optional<EventPoint> root_entry() const;
  std::vector<EventPoint> entries() const;  // in key order
  bool contains(const EventPoint& ep) const;

  // Number of node summaries recomputed so far.
  int64_t updates() const { return updates_; }

 private:
  struct Node {
    EventPoint ep;
    uint64_t prio = 0;
    double best = 0;  // against ep.anchor
    const Node* best_node = nullptr;
    std::unique_ptr<Node> left, right;
  };
  using Ptr = std::unique_ptr<Node>;

  void pull(Node* n);
  using GoesLeft = std::function<bool(const EventPoint&)>;
  void split_node(Ptr n, const GoesLeft& left, Ptr* l, Ptr* r);
  Ptr merge(Ptr a, Ptr b);
  bool erase(Ptr* n, const EventPoint& ep);

  Ptr root_;
  int64_t updates_ = 0;
};

// Flat recomputation used as a reference: max of value + anchor, minus
// `reference_anchor`.
double flat_max(const std::vector<EventPoint>& eps, double reference_anchor);

}  // namespace kgvd

#endif  // KGVD_BISECTOR_TOURNAMENT_HPP_
