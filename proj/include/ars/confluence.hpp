#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ars/core.hpp"

namespace ars {

/// A joining valley: two forward-monotone chains from the feet of a span
/// to a common vertex.
struct ExtendedCospan {
  Chain left;   ///< span.left.dst  ~>* meet, all steps Fwd
  Chain right;  ///< span.right.dst ~>* meet, all steps Fwd

  friend bool operator==(const ExtendedCospan&, const ExtendedCospan&) = default;
};

bool is_well_formed(const ExtendedCospan& c);

inline const VertexId& meet(const ExtendedCospan& c) { return chain_end(c.left); }

/// The cospan flattened into a single chain from left.start to right.start:
/// down the left leg, then back up the right leg.
Chain flatten_cospan(const ExtendedCospan& c);

/// A local-confluence structure: maps each span to a joining cospan.
/// Implementations must be pure and deterministic.
class Joiner {
 public:
  virtual ~Joiner() = default;

  /// Returns a cospan whose left leg starts at span.left.dst and whose
  /// right leg starts at span.right.dst. Throws NotLocallyConfluentError
  /// if the span cannot be joined, MalformedSpanError if it cannot be
  /// interpreted.
  virtual ExtendedCospan join(const Span& span) const = 0;
};

/// Thrown when a span has no joining cospan (within the search bound).
class NotLocallyConfluentError : public Error {
 public:
  NotLocallyConfluentError(const std::string& message, Span span)
      : Error(message), span_(std::move(span)) {}

  const Span& span() const { return span_; }

 private:
  Span span_;
};

/// Joins spans by forward breadth-first search from both feet, picking a
/// common descendant that minimizes total valley length; ties are broken by
/// the lexicographic edge-id sequence of the two legs, so equal inputs give
/// equal cospans.
class AutoJoiner final : public Joiner {
 public:
  struct SearchLimits {
    std::size_t max_depth = static_cast<std::size_t>(-1);
    std::size_t max_vertices = 1u << 20;
  };

  explicit AutoJoiner(const RewritingSystem& system) : system_(&system) {}
  AutoJoiner(const RewritingSystem& system, SearchLimits limits)
      : system_(&system), limits_(limits) {}

  ExtendedCospan join(const Span& span) const override;

 private:
  const RewritingSystem* system_;
  SearchLimits limits_;
};

/// Memoizes another joiner. Joiners are pure, so this is sound; it pays off
/// whenever many cycles share spans, e.g. when decomposing every cycle of a
/// bounded enumeration.
class CachingJoiner final : public Joiner {
 public:
  explicit CachingJoiner(const Joiner& inner) : inner_(&inner) {}

  ExtendedCospan join(const Span& span) const override;

 private:
  const Joiner* inner_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<EdgeId, EdgeId>, ExtendedCospan> memo_;
};

/// Outcome of validating one span against a joiner.
struct SpanCheckEntry {
  enum class Status {
    Ok,       ///< cospan produced and valid
    Invalid,  ///< cospan produced but malformed (wrong feet, not monotone, ...)
    Error,    ///< joiner raised (not locally confluent, malformed span, ...)
  };

  Span span;
  Status status = Status::Ok;
  std::optional<ExtendedCospan> cospan;
  std::string message;
};

struct ConfluenceReport {
  std::vector<SpanCheckEntry> entries;
  std::size_t failures = 0;

  bool ok() const { return failures == 0; }
};

/// Runs the joiner over the supplied span enumeration and validates every
/// returned cospan (well-formed, forward-monotone, correct feet, common
/// endpoint). Failures become report entries, never exceptions.
ConfluenceReport check_local_confluence(const RewritingSystem& system, const Joiner& joiner,
                                        std::span<const Span> spans);

/// Validates a single cospan against its span; returns a description of the
/// first problem, or nullopt when the cospan matches.
std::optional<std::string> validate_cospan(const Span& span, const ExtendedCospan& cospan);

/// Completes an extended span to a quadrangle: given two forward-monotone
/// legs leaving a common vertex, produces a cospan joining their endpoints.
/// This is the constructive content of Newman's lemma, by structural
/// recursion on the legs with the joiner supplying local confluence; the
/// fuel bounds the recursion because termination rests on the (unchecked)
/// assumption that the system is Noetherian.
ExtendedCospan newman_join(const RewritingSystem& system, const Joiner& joiner,
                           const Chain& left, const Chain& right, std::size_t fuel);

/// The confluence cycle of a span: Bwd over span.left, Fwd over span.right,
/// down the cospan's right leg and back up its left leg. Based at
/// span.left.dst and closed by construction.
Cycle confluence_cycle(const Span& span, const ExtendedCospan& cospan);

/// Convenience: joins the span first.
Cycle confluence_cycle(const Span& span, const Joiner& joiner);

}  // namespace ars
