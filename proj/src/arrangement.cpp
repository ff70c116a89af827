// Copyright 2026 The arrangeops Authors
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

#include "arrangeops/arrangement.hpp"

#include <atomic>
#include <sstream>
#include <thread>

namespace arrangeops {

long SingularityProfile::total_points() const {
  long n = 0;
  for (const auto& [k, t] : counts) n += t;
  return n;
}

long SingularityProfile::pair_count() const {
  long n = 0;
  for (const auto& [k, t] : counts) n += t * k * (k - 1) / 2;
  return n;
}

std::string SingularityProfile::to_string() const {
  if (counts.empty()) return "empty";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, t] : counts) {
    if (!first) os << ' ';
    os << 't' << k << '=' << t;
    first = false;
  }
  return os.str();
}

SingularityProfile SingularityProfile::parse(const std::string& text) {
  SingularityProfile p;
  std::istringstream is(text);
  std::string token;
  while (is >> token) {
    if (token == "empty") continue;
    const auto eq = token.find('=');
    if (token.size() < 4 || token[0] != 't' || eq == std::string::npos) {
      throw std::invalid_argument("bad profile token '" + token + "'");
    }
    const int k = std::stoi(token.substr(1, eq - 1));
    const long t = std::stol(token.substr(eq + 1));
    if (k < 2 || t < 0) throw std::invalid_argument("bad profile token '" + token + "'");
    if (t > 0) p.counts[k] += t;
  }
  return p;
}

SingularityProfile make_profile(std::initializer_list<std::pair<const int, long>> counts) {
  SingularityProfile p;
  for (const auto& [k, t] : counts) {
    if (t != 0) p.counts[k] = t;
  }
  return p;
}

namespace {

template <class Obj>
struct PairEntry {
  Obj obj;
  int i;
  int j;
};

// Groups pair entries by object; returns each object with its sorted,
// distinct member indices.
template <class Obj>
std::vector<std::pair<Obj, std::vector<int>>> group_pairs(std::vector<PairEntry<Obj>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const PairEntry<Obj>& a, const PairEntry<Obj>& b) { return a.obj < b.obj; });
  std::vector<std::pair<Obj, std::vector<int>>> out;
  for (size_t s = 0; s < entries.size();) {
    size_t e = s;
    std::vector<int> idx;
    while (e < entries.size() && entries[e].obj == entries[s].obj) {
      idx.push_back(entries[e].i);
      idx.push_back(entries[e].j);
      ++e;
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    out.emplace_back(entries[s].obj, std::move(idx));
    s = e;
  }
  return out;
}

bool mode_accepts(int count, int k, Mode mode) {
  return mode == Mode::kExactly ? count == k : count >= k;
}

}  // namespace

std::vector<SingularPoint> singular_points(const Arrangement& a) {
  std::vector<PairEntry<ProjPoint>> entries;
  const int n = static_cast<int>(a.size());
  entries.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) entries.push_back({meet(a[i], a[j]), i, j});
  }
  std::vector<SingularPoint> out;
  for (auto& [p, idx] : group_pairs(std::move(entries))) out.push_back({p, std::move(idx)});
  return out;
}

SingularityProfile profile(const Arrangement& a) {
  SingularityProfile p;
  for (const auto& sp : singular_points(a)) ++p.counts[sp.multiplicity()];
  return p;
}

bool pair_count_identity(const Arrangement& a, const SingularityProfile& p) {
  const long n = static_cast<long>(a.size());
  return p.pair_count() == n * (n - 1) / 2;
}

PointSet points_with_multiplicity(const Arrangement& a, int k, Mode mode) {
  PointSet out(a.field());
  for (const auto& sp : singular_points(a)) {
    if (mode_accepts(sp.multiplicity(), k, mode)) out.add(sp.point);
  }
  return out;
}

Arrangement lines_through(const PointSet& pts, int k, Mode mode) {
  std::vector<PairEntry<ProjLine>> entries;
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) entries.push_back({join(pts[i], pts[j]), i, j});
  }
  Arrangement out(pts.field());
  for (auto& [line, idx] : group_pairs(std::move(entries))) {
    if (mode_accepts(static_cast<int>(idx.size()), k, mode)) out.add(line);
  }
  return out;
}

Arrangement lambda_op(const Arrangement& a, int m, int n) {
  return lines_through(points_with_multiplicity(a, m, Mode::kExactly), n, Mode::kExactly);
}

PointSet psi_op(const PointSet& pts, int m, int n) {
  return points_with_multiplicity(lines_through(pts, m, Mode::kExactly), n, Mode::kExactly);
}

PointSet dual_arrangement(const Arrangement& a) {
  PointSet out(a.field());
  for (const auto& l : a.items()) out.add(dualize(l));
  return out;
}

Arrangement dual_points(const PointSet& pts) {
  Arrangement out(pts.field());
  for (const auto& p : pts.items()) out.add(dualize(p));
  return out;
}

Arrangement union_of(const Arrangement& a, const Arrangement& b) {
  Arrangement out = a;
  for (const auto& l : b.items()) out.add(l);
  return out;
}

bool set_equal(const Arrangement& a, const Arrangement& b) {
  return a.size() == b.size() && a.sorted() == b.sorted();
}

bool set_equal(const PointSet& a, const PointSet& b) {
  return a.size() == b.size() && a.sorted() == b.sorted();
}

bool is_subset(const Arrangement& a, const Arrangement& b) {
  const auto sb = b.sorted();
  for (const auto& l : a.items()) {
    if (!std::binary_search(sb.begin(), sb.end(), l)) return false;
  }
  return true;
}

Arrangement transform(const ProjMap& g, const Arrangement& a) {
  Arrangement out(a.field());
  for (const auto& l : a.items()) out.add(g.apply(l));
  return out;
}

PointSet transform(const ProjMap& g, const PointSet& pts) {
  PointSet out(pts.field());
  for (const auto& p : pts.items()) out.add(g.apply(p));
  return out;
}

Arrangement subarrangement(const Arrangement& a, const std::vector<int>& indices) {
  Arrangement out(a.field());
  for (int i : indices) out.add(a[i]);
  return out;
}

std::vector<std::vector<int>> subsets_with_property(const Arrangement& a, int r,
                                                    const ArrangementPredicate& predicate,
                                                    const SubsetSearchOptions& options) {
  const int n = static_cast<int>(a.size());
  if (r < 0 || r > n) return {};
  if (r == 0) {
    if (predicate(Arrangement(a.field()))) return {{}};
    return {};
  }
  // Concurrent triples, read off the points of multiplicity >= 3.
  std::vector<char> concurrent_triple;
  if (options.nodal_only) {
    concurrent_triple.assign(static_cast<size_t>(n) * n * n, 0);
    for (const auto& sp : singular_points(a)) {
      const auto& idx = sp.lines;
      const size_t m = idx.size();
      if (m < 3) continue;
      for (size_t x = 0; x < m; ++x) {
        for (size_t y = x + 1; y < m; ++y) {
          for (size_t z = y + 1; z < m; ++z) {
            concurrent_triple[(static_cast<size_t>(idx[x]) * n + idx[y]) * n + idx[z]] = 1;
          }
        }
      }
    }
  }
  auto compatible = [&](const std::vector<int>& chosen, int j) {
    if (!options.nodal_only) return true;
    for (size_t x = 0; x < chosen.size(); ++x) {
      for (size_t y = x + 1; y < chosen.size(); ++y) {
        if (concurrent_triple[(static_cast<size_t>(chosen[x]) * n + chosen[y]) * n + j]) return false;
      }
    }
    return true;
  };

  // Subsets are enumerated per first index so workers can share the load.
  std::vector<std::vector<std::vector<int>>> per_first(n);
  auto run_first = [&](int first) {
    std::vector<int> chosen = {first};
    std::vector<std::vector<int>>& out = per_first[first];
    std::function<void(int)> extend = [&](int next) {
      if (static_cast<int>(chosen.size()) == r) {
        if (predicate(subarrangement(a, chosen))) out.push_back(chosen);
        return;
      }
      const int needed = r - static_cast<int>(chosen.size());
      for (int j = next; j <= n - needed; ++j) {
        if (!compatible(chosen, j)) continue;
        chosen.push_back(j);
        extend(j + 1);
        chosen.pop_back();
      }
    };
    extend(first + 1);
  };

  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    for (int first = 0; first <= n - r; ++first) run_first(first);
  } else {
    std::atomic<int> next_first{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (int first = next_first++; first <= n - r; first = next_first++) run_first(first);
      });
    }
    for (auto& t : pool) t.join();
  }
  std::vector<std::vector<int>> result;
  for (auto& v : per_first) {
    for (auto& s : v) result.push_back(std::move(s));
  }
  return result;
}

std::string to_string(const Arrangement& a) {
  std::ostringstream os;
  os << a.size() << " lines over " << describe(a.field());
  for (const auto& l : a.items()) os << "\n  " << l.to_string();
  return os.str();
}

}  // namespace arrangeops
