#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace sri {

// Role label encoding. START/PRED/END are the structural primary roles; they
// never label an argument. Assignable labels are P1..PK followed by
// S1..S(N-K), encoded contiguously from kFirstAssignable.
using RoleCode = std::uint8_t;

inline constexpr RoleCode kStart = 0;
inline constexpr RoleCode kPred = 1;
inline constexpr RoleCode kEnd = 2;
inline constexpr RoleCode kFirstAssignable = 3;

inline constexpr int kNumFeatureTypes = 3;  // deprel, head word, head POS

class RoleSpace {
 public:
  RoleSpace(int n_roles, int n_primary);

  int n_roles() const { return n_roles_; }         // N
  int n_primary() const { return n_primary_; }     // K
  int n_secondary() const { return n_roles_ - n_primary_; }

  bool is_structural(RoleCode c) const { return c < kFirstAssignable; }
  bool is_assignable(RoleCode c) const {
    return c >= kFirstAssignable && c < kFirstAssignable + n_roles_;
  }
  // primary = non-repeating, ordering-defining; includes START/PRED/END
  bool is_primary(RoleCode c) const {
    return c < kFirstAssignable + n_primary_;
  }
  bool is_secondary(RoleCode c) const {
    return c >= kFirstAssignable + n_primary_ &&
           c < kFirstAssignable + n_roles_;
  }

  RoleCode primary(int k) const;    // k in [1, K]
  RoleCode secondary(int j) const;  // j in [1, N-K]

  // 0-based index among assignable roles (P1=0 .. S(N-K)=N-1)
  int assignable_index(RoleCode c) const;
  // 0-based index among secondary roles
  int secondary_index(RoleCode c) const;

  std::string name(RoleCode c) const;
  std::optional<RoleCode> parse(const std::string& name) const;

 private:
  int n_roles_;
  int n_primary_;
};

// A global role ordering: (START, ..., PRED, ..., END) over primary roles.
using Ordering = std::vector<RoleCode>;

bool ordering_valid(const RoleSpace& space, const Ordering& o);

// Interval = pair of PRs consecutive in some ordering, packed into 16 bits.
using IntervalKey = std::uint16_t;
inline constexpr IntervalKey interval_key(RoleCode left, RoleCode right) {
  return static_cast<IntervalKey>((static_cast<IntervalKey>(left) << 8) |
                                  right);
}
inline constexpr RoleCode interval_left(IntervalKey k) {
  return static_cast<RoleCode>(k >> 8);
}
inline constexpr RoleCode interval_right(IntervalKey k) {
  return static_cast<RoleCode>(k & 0xff);
}

// All valid orderings for K primary roles: every subset of {P1..PK} arranged
// around PRED, between START and END. Count is sum_{m=0..K} C(K,m)*(m+1)!.
std::vector<Ordering> enumerate_orderings(const RoleSpace& space);

// Interned ordering inventory with a stable canonical enumeration order.
class OrderingSpace {
 public:
  explicit OrderingSpace(const RoleSpace& space);

  const std::vector<Ordering>& all() const { return orderings_; }
  int size() const { return static_cast<int>(orderings_.size()); }
  const Ordering& at(int id) const { return orderings_[id]; }
  int id_of(const Ordering& o) const;  // throws InternalError if unknown

 private:
  std::vector<Ordering> orderings_;
  std::unordered_map<std::string, int> index_;  // key = raw code bytes
};

}  // namespace sri
