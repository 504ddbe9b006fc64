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

#include "kgvd/bisector/tournament.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "kgvd/geom/error.hpp"

namespace kgvd {

namespace {

uint64_t mix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool before(const EventPoint& a, const EventPoint& b) {
  return a.key < b.key || (a.key == b.key && a.id < b.id);
}

}  // namespace

void OffsetTournament::pull(Node* n) {
  ++updates_;
  n->best = n->ep.value;
  n->best_node = n;
  for (Node* c : {n->left.get(), n->right.get()}) {
    if (!c) continue;
    double v = c->best + (c->ep.anchor - n->ep.anchor);
    if (v > n->best) {
      n->best = v;
      n->best_node = c->best_node;
    }
  }
}

void OffsetTournament::split_node(Ptr n, const GoesLeft& left, Ptr* l,
                                  Ptr* r) {
  if (!n) {
    l->reset();
    r->reset();
    return;
  }
  if (left(n->ep)) {
    Ptr rest;
    split_node(std::move(n->right), left, &n->right, &rest);
    pull(n.get());
    *l = std::move(n);
    *r = std::move(rest);
  } else {
    Ptr rest;
    split_node(std::move(n->left), left, &rest, &n->left);
    pull(n.get());
    *r = std::move(n);
    *l = std::move(rest);
  }
}

OffsetTournament::Ptr OffsetTournament::merge(Ptr a, Ptr b) {
  if (!a) return b;
  if (!b) return a;
  if (a->prio > b->prio) {
    a->right = merge(std::move(a->right), std::move(b));
    pull(a.get());
    return a;
  }
  b->left = merge(std::move(a), std::move(b->left));
  pull(b.get());
  return b;
}

void OffsetTournament::insert(const EventPoint& ep) {
  auto node = std::make_unique<Node>();
  node->ep = ep;
  node->prio = mix(static_cast<uint64_t>(ep.id) * 31 + 7);
  pull(node.get());
  Ptr l, r;
  split_node(std::move(root_), [&](const EventPoint& e) { return before(e, ep); },
             &l, &r);
  root_ = merge(merge(std::move(l), std::move(node)), std::move(r));
}

bool OffsetTournament::erase(Ptr* n, const EventPoint& ep) {
  Node* cur = n->get();
  if (!cur) return false;
  if (cur->ep.id == ep.id && cur->ep.key == ep.key) {
    *n = merge(std::move(cur->left), std::move(cur->right));
    return true;
  }
  bool ok = before(ep, cur->ep) ? erase(&cur->left, ep) : erase(&cur->right, ep);
  if (ok) pull(cur);
  return ok;
}

void OffsetTournament::remove(const EventPoint& ep) {
  if (!erase(&root_, ep))
    throw Error(ErrorKind::kUnknownEventPoint,
                "event point " + std::to_string(ep.id) + " not stored");
}

OffsetTournament OffsetTournament::split(double key) {
  Ptr l, r;
  split_node(std::move(root_), [&](const EventPoint& e) { return e.key <= key; },
             &l, &r);
  root_ = std::move(l);
  OffsetTournament out;
  out.root_ = std::move(r);
  return out;
}

int OffsetTournament::size() const {
  std::function<int(const Node*)> cnt = [&](const Node* n) {
    return n ? 1 + cnt(n->left.get()) + cnt(n->right.get()) : 0;
  };
  return cnt(root_.get());
}

std::optional<double> OffsetTournament::root_max() const {
  if (!root_) return std::nullopt;
  return root_->best;
}

std::optional<double> OffsetTournament::max_value() const {
  if (!root_) return std::nullopt;
  return root_->best + root_->ep.anchor;
}

std::optional<EventPoint> OffsetTournament::argmax() const {
  if (!root_) return std::nullopt;
  return root_->best_node->ep;
}

std::optional<EventPoint> OffsetTournament::root_entry() const {
  if (!root_) return std::nullopt;
  return root_->ep;
}

std::vector<EventPoint> OffsetTournament::entries() const {
  std::vector<EventPoint> out;
  std::function<void(const Node*)> walk = [&](const Node* n) {
    if (!n) return;
    walk(n->left.get());
    out.push_back(n->ep);
    walk(n->right.get());
  };
  walk(root_.get());
  return out;
}

bool OffsetTournament::contains(const EventPoint& ep) const {
  const Node* n = root_.get();
  while (n) {
    if (n->ep.id == ep.id && n->ep.key == ep.key) return true;
    n = before(ep, n->ep) ? n->left.get() : n->right.get();
  }
  return false;
}

double flat_max(const std::vector<EventPoint>& eps, double reference_anchor) {
  double best = -std::numeric_limits<double>::infinity();
  for (const EventPoint& e : eps) best = std::max(best, e.value + e.anchor);
  return best - reference_anchor;
}

}  // namespace kgvd
