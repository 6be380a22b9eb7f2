/*
 * Copyright 2026 The peridraw Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PERIDRAW_EXACT_GEOMETRY_HPP
#define PERIDRAW_EXACT_GEOMETRY_HPP

#include <algorithm>
#include <cstdint>

namespace peridraw {

// All predicates are exact over 64-bit integers.  Coordinates stay far below
// 2^30 in this library, so the cross products below cannot overflow.
struct Pt {
  int64_t x = 0, y = 0;
  bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
};

struct Segment {
  Pt a, b;
};

inline int64_t cross(const Pt& o, const Pt& p, const Pt& q) {
  return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x);
}

inline int sgn(int64_t v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

inline bool point_on_segment(const Pt& p, const Segment& s) {
  if (cross(s.a, s.b, p) != 0) return false;
  return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) &&
         std::min(s.a.y, s.b.y) <= p.y && p.y <= std::max(s.a.y, s.b.y);
}

// Improper contact between straight-line edges of a drawing: any shared
// point other than a common endpoint.  Segments that share exactly one
// endpoint and nothing else are fine; collinear overlap of positive length
// or an endpoint in the interior of the other segment are not.
inline bool segments_conflict(const Segment& s, const Segment& t) {
  int d1 = sgn(cross(s.a, s.b, t.a));
  int d2 = sgn(cross(s.a, s.b, t.b));
  int d3 = sgn(cross(t.a, t.b, s.a));
  int d4 = sgn(cross(t.a, t.b, s.b));

  if (d1 != d2 && d3 != d4 && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0)
    return true;  // proper crossing

  // Count endpoint incidences; tolerate a single shared endpoint.
  bool ta_on = point_on_segment(t.a, s);
  bool tb_on = point_on_segment(t.b, s);
  bool sa_on = point_on_segment(s.a, t);
  bool sb_on = point_on_segment(s.b, t);
  if (!ta_on && !tb_on && !sa_on && !sb_on) return false;

  auto shared_endpoint = [&](const Pt& p) {
    return (p == s.a || p == s.b) && (p == t.a || p == t.b);
  };
  if (ta_on && !shared_endpoint(t.a)) return true;
  if (tb_on && !shared_endpoint(t.b)) return true;
  if (sa_on && !shared_endpoint(s.a)) return true;
  if (sb_on && !shared_endpoint(s.b)) return true;

  // Only shared endpoints remain; collinear segments overlapping in more
  // than a point would have put a non-shared endpoint on the other segment,
  // except for the exact-duplicate case.
  if ((s.a == t.a && s.b == t.b) || (s.a == t.b && s.b == t.a)) return true;
  return false;
}

}  // namespace peridraw

#endif  // PERIDRAW_EXACT_GEOMETRY_HPP
