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

#ifndef PERIDRAW_ERRORS_HPP
#define PERIDRAW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace peridraw {

enum class errc {
  // map construction
  dangling_twin,
  not_a_permutation,
  unsupported_genus,
  // triangulation validation
  non_triangular_inner_face,
  non_triangular_face,
  contractible_short_cycle,
  two_loops_at_vertex,
  homotopic_loops_at_vertex,
  non_simple_boundary,
  // walks
  walk_not_closed,
  // layout preconditions
  chord_at_b1,
  // generation
  infeasible_parameters,
  // text formats
  syntax_error,
  // internal consistency (indicates a bug, not bad input)
  inconsistent_spans,
  tambourine_not_found,
  internal_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::dangling_twin: return "DanglingTwin";
    case errc::not_a_permutation: return "NotAPermutation";
    case errc::unsupported_genus: return "UnsupportedGenus";
    case errc::non_triangular_inner_face: return "NonTriangularInnerFace";
    case errc::non_triangular_face: return "NonTriangularFace";
    case errc::contractible_short_cycle: return "ContractibleShortCycle";
    case errc::two_loops_at_vertex: return "TwoLoopsAtVertex";
    case errc::homotopic_loops_at_vertex: return "HomotopicLoopsAtVertex";
    case errc::non_simple_boundary: return "NonSimpleBoundary";
    case errc::walk_not_closed: return "WalkNotClosed";
    case errc::chord_at_b1: return "ChordAtB1";
    case errc::infeasible_parameters: return "InfeasibleParameters";
    case errc::syntax_error: return "SyntaxError";
    case errc::inconsistent_spans: return "InconsistentSpans";
    case errc::tambourine_not_found: return "TambourineNotFound";
    case errc::internal_error: return "InternalError";
  }
  return "UnknownError";
}

// Thrown for invalid input: bad map data, violated preconditions, parse
// failures.  Carries the typed code so callers and tests can dispatch on it.
class map_error : public std::runtime_error {
 public:
  map_error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

// Thrown when an internal invariant fails.  These are assertions backed by
// the structure theorems; seeing one means a bug, not a bad instance.
class internal_error : public map_error {
 public:
  explicit internal_error(const std::string& what, errc code = errc::internal_error)
      : map_error(code, what) {}
};

inline void check_input(bool ok, errc code, const std::string& what) {
  if (!ok) throw map_error(code, what);
}

inline void check_internal(bool ok, const std::string& what,
                           errc code = errc::internal_error) {
  if (!ok) throw internal_error(what, code);
}

}  // namespace peridraw

#endif  // PERIDRAW_ERRORS_HPP
