#include "sri/roles.hpp"

#include <algorithm>

#include "sri/errors.hpp"

namespace sri {

RoleSpace::RoleSpace(int n_roles, int n_primary)
    : n_roles_(n_roles), n_primary_(n_primary) {
  if (n_primary < 0) throw UsageError("role space: K must be >= 0");
  if (n_roles <= n_primary)
    throw UsageError("role space: N must be > K (need at least one SR)");
  if (n_roles > 200) throw UsageError("role space: N too large (max 200)");
}

RoleCode RoleSpace::primary(int k) const {
  if (k < 1 || k > n_primary_) throw InternalError("primary role out of range");
  return static_cast<RoleCode>(kFirstAssignable + k - 1);
}

RoleCode RoleSpace::secondary(int j) const {
  if (j < 1 || j > n_secondary())
    throw InternalError("secondary role out of range");
  return static_cast<RoleCode>(kFirstAssignable + n_primary_ + j - 1);
}

int RoleSpace::assignable_index(RoleCode c) const {
  if (!is_assignable(c)) throw InternalError("not an assignable role");
  return c - kFirstAssignable;
}

int RoleSpace::secondary_index(RoleCode c) const {
  if (!is_secondary(c)) throw InternalError("not a secondary role");
  return c - kFirstAssignable - n_primary_;
}

std::string RoleSpace::name(RoleCode c) const {
  switch (c) {
    case kStart: return "START";
    case kPred: return "PRED";
    case kEnd: return "END";
    default: break;
  }
  if (is_primary(c))
    return "P" + std::to_string(c - kFirstAssignable + 1);
  if (is_secondary(c))
    return "S" + std::to_string(secondary_index(c) + 1);
  throw InternalError("role code out of range");
}

std::optional<RoleCode> RoleSpace::parse(const std::string& s) const {
  if (s == "START") return kStart;
  if (s == "PRED") return kPred;
  if (s == "END") return kEnd;
  if (s.size() < 2 || (s[0] != 'P' && s[0] != 'S')) return std::nullopt;
  int idx = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return std::nullopt;
    idx = idx * 10 + (s[i] - '0');
  }
  if (idx < 1) return std::nullopt;
  if (s[0] == 'P') {
    if (idx > n_primary_) return std::nullopt;
    return primary(idx);
  }
  if (idx > n_secondary()) return std::nullopt;
  return secondary(idx);
}

bool ordering_valid(const RoleSpace& space, const Ordering& o) {
  if (o.size() < 3) return false;
  if (o.front() != kStart || o.back() != kEnd) return false;
  int preds = 0;
  std::vector<bool> seen(kFirstAssignable + space.n_primary(), false);
  for (std::size_t i = 0; i < o.size(); ++i) {
    const RoleCode c = o[i];
    if (!space.is_primary(c)) return false;
    if ((c == kStart && i != 0) || (c == kEnd && i + 1 != o.size()))
      return false;
    if (c == kPred) ++preds;
    if (seen[c]) return false;
    seen[c] = true;
  }
  return preds == 1;
}

std::vector<Ordering> enumerate_orderings(const RoleSpace& space) {
  const int k = space.n_primary();
  if (k > 8) throw UsageError("enumerate_orderings: K too large (max 8)");
  std::vector<Ordering> out;
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<RoleCode> members;
    members.push_back(kPred);
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) members.push_back(space.primary(i + 1));
    std::sort(members.begin(), members.end());
    do {
      Ordering o;
      o.reserve(members.size() + 2);
      o.push_back(kStart);
      o.insert(o.end(), members.begin(), members.end());
      o.push_back(kEnd);
      out.push_back(std::move(o));
    } while (std::next_permutation(members.begin(), members.end()));
  }
  return out;
}

namespace {
std::string ordering_bytes(const Ordering& o) {
  return std::string(reinterpret_cast<const char*>(o.data()), o.size());
}
}  // namespace

OrderingSpace::OrderingSpace(const RoleSpace& space)
    : orderings_(enumerate_orderings(space)) {
  index_.reserve(orderings_.size());
  for (std::size_t i = 0; i < orderings_.size(); ++i)
    index_.emplace(ordering_bytes(orderings_[i]), static_cast<int>(i));
}

int OrderingSpace::id_of(const Ordering& o) const {
  auto it = index_.find(ordering_bytes(o));
  if (it == index_.end())
    throw InternalError("ordering not in enumerated space");
  return it->second;
}

}  // namespace sri
