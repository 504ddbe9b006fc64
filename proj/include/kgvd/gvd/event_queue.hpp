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

#ifndef KGVD_GVD_EVENT_QUEUE_HPP_
#define KGVD_GVD_EVENT_QUEUE_HPP_

#include <set>
#include <string>
#include <tuple>

namespace kgvd {

struct QueuedCertificate {
  double time = 0;
  int site = -1;
  int vertex = -1;
  std::string key;

  bool operator<(const QueuedCertificate& o) const {
    return std::tie(time, site, vertex, key) <
           std::tie(o.time, o.site, o.vertex, o.key);
  }
};

// Certificates by failure time; ties broken by site, vertex, then key.
class EventQueue {
 public:
  void push(QueuedCertificate c) { q_.insert(std::move(c)); }
  bool empty() const { return q_.empty(); }
  size_t size() const { return q_.size(); }
  const QueuedCertificate& top() const { return *q_.begin(); }
  QueuedCertificate pop() {
    QueuedCertificate c = *q_.begin();
    q_.erase(q_.begin());
    return c;
  }
  void clear() { q_.clear(); }

 private:
  std::multiset<QueuedCertificate> q_;
};

}  // namespace kgvd

#endif  // KGVD_GVD_EVENT_QUEUE_HPP_
