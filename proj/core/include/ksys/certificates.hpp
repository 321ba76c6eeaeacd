#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "ksys/graph.hpp"
#include "ksys/ksystems.hpp"

namespace ksys {

enum class VerdictStatus { Verified, Refuted };

/// Which check of a certificate failed.
enum class RefutationReason {
  None,
  NotKSystem,
  NotAcyclic,
  CardinalityMismatch,
  NotLarger,
  NotSmaller,
  MultipleSinks,
};

std::string_view to_string(RefutationReason reason);

struct Verdict {
  VerdictStatus status = VerdictStatus::Refuted;
  RefutationReason reason = RefutationReason::None;
  std::string detail;

  bool verified() const noexcept { return status == VerdictStatus::Verified; }

  static Verdict ok(std::string detail) { return {VerdictStatus::Verified, RefutationReason::None, std::move(detail)}; }
  static Verdict refuted(RefutationReason why, std::string detail) {
    return {VerdictStatus::Refuted, why, std::move(detail)};
  }
};

/// Yes-certificate for "claimed_sets is the set of k-face vertex sets": a
/// k-system together with an acyclic orientation whose H^k equals its size.
struct FaceCertificate {
  int k = 0;
  SetSystem claimed_sets;
  Orientation witness_orientation;
};

/// Yes-certificate for "candidate is an AOF-orientation": a 2-system whose
/// size equals H^2 of the candidate.
struct AofCertificate {
  Orientation candidate_orientation;
  SetSystem witness_two_system;
};

struct UniqueSinkResult {
  bool unique = true;
  /// Index of the first member set with two or more sinks.
  std::optional<std::size_t> violating_set;
};

/// Checks that every member of s has exactly one sink under o. Requires an
/// acyclic orientation; s does not need to be a k-system.
UniqueSinkResult unique_sink_per_set(const PolytopeGraph& g, const Orientation& o, const SetSystem& s);

/// Accepts iff (a) claimed_sets is a k-system, (b) the witness is acyclic and
/// (c) |claimed_sets| == H^k(witness). Under the standing assumption that g is
/// the graph of a simple polytope, acceptance pins claimed_sets down as the
/// vertex sets of the k-faces.
Verdict verify_face_certificate(const PolytopeGraph& g, const FaceCertificate& c);

/// No-certificate: s_prime is a k-system strictly larger than s, so s cannot
/// be the (unique maximum) family of k-faces.
Verdict verify_larger_system(const PolytopeGraph& g, const SetSystem& s, const SetSystem& s_prime);

/// Accepts iff (a) the witness is a 2-system, (b) the candidate is acyclic and
/// (c) |witness| == H^2(candidate). For d == 2 the witness is ignored and the
/// candidate is checked directly (acyclic with one global sink).
Verdict verify_aof_certificate(const PolytopeGraph& g, const AofCertificate& c);

/// No-certificate for AOF-ness: an acyclic o_prime with H^2(o_prime) < H^2(o).
Verdict verify_smaller_h2(const PolytopeGraph& g, const Orientation& o, const Orientation& o_prime);

/// Rebuilds the facets from the 2-faces. For every edge {u,v}, the 2-faces
/// define a bijection between the other neighbors of u and the other
/// neighbors of v. A facet is grown from a vertex r and the one neighbor x it
/// omits, carrying the omitted edge across every traversed edge through that
/// bijection. Throws NotCycleSystem if f2 is not a 2-system of induced cycles
/// and InconsistentTransport if the transports disagree or the grown sets are
/// not facet-like.
SetSystem facets_from_2faces(const PolytopeGraph& g, const SetSystem& f2);

}  // namespace ksys
