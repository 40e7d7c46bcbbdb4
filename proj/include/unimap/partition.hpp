#pragma once

#include <algorithm>
#include <vector>

#include "unimap/errors.hpp"
#include "unimap/ints.hpp"

namespace unimap {

// Integer partition recorded as part multiplicities: mult[i] is the
// multiplicity of part i+1.
struct Partition {
  std::vector<long> mult;

  long weight() const {
    long w = 0;
    for (size_t i = 0; i < mult.size(); ++i)
      w += static_cast<long>(i + 1) * mult[i];
    return w;
  }

  long parts() const {
    long p = 0;
    for (long m : mult) p += m;
    return p;
  }

  // Parts as a descending list, e.g. {mult | 1:1, 2:1} -> [2,1].
  std::vector<long> part_list() const {
    std::vector<long> out;
    for (size_t i = mult.size(); i-- > 0;)
      for (long r = 0; r < mult[i]; ++r) out.push_back(static_cast<long>(i + 1));
    return out;
  }

  bool operator==(const Partition& o) const { return mult == o.mult; }
};

namespace detail {

template <class F>
void partitions_rec(long remaining, long parts_left, long max_part,
                    std::vector<long>& acc, F& f) {
  if (parts_left == 0) {
    if (remaining == 0) f(acc);
    return;
  }
  // Each remaining part is at least 1 and at most max_part.
  long hi = std::min(max_part, remaining - (parts_left - 1));
  for (long p = hi; p >= 1; --p) {
    acc.push_back(p);
    partitions_rec(remaining - p, parts_left - 1, p, acc, f);
    acc.pop_back();
  }
}

}  // namespace detail

// All partitions of g with exactly t parts, largest part first.
template <class F>
void for_each_partition_with_parts(long g, long t, F&& f) {
  if (g < 0 || t < 0) return;
  std::vector<long> acc;
  auto emit = [&](const std::vector<long>& parts) {
    Partition p;
    if (!parts.empty()) p.mult.assign(static_cast<size_t>(parts.front()), 0);
    for (long part : parts) p.mult[static_cast<size_t>(part - 1)] += 1;
    f(p);
  };
  detail::partitions_rec(g, t, g, acc, emit);
}

inline std::vector<Partition> partitions_with_parts(long g, long t) {
  std::vector<Partition> out;
  for_each_partition_with_parts(g, t, [&](const Partition& p) { out.push_back(p); });
  return out;
}

// All partitions of n into odd parts, as descending part lists.
template <class F>
void for_each_odd_partition(long n, F&& f) {
  std::vector<long> acc;
  auto rec = [&](auto&& self, long remaining, long max_part) -> void {
    if (remaining == 0) {
      f(acc);
      return;
    }
    long start = std::min(max_part, remaining);
    if (start % 2 == 0) --start;
    for (long p = start; p >= 1; p -= 2) {
      acc.push_back(p);
      self(self, remaining - p, p);
      acc.pop_back();
    }
  };
  rec(rec, n, n);
}

}  // namespace unimap
