// Distributed under the Apache License, Version 2.0.
// See LICENSE for details.

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace knotforge {

enum class SliceKind { PosCross, NegCross, Cup, Cap };

struct Slice {
  SliceKind kind;
  int position;  // 0-based from the left

  friend bool operator==(const Slice&, const Slice&) = default;
};

/// c + sum_k coeffs[k] * i_{k+1}, an integer linear form in the crossing
/// indices.
struct LinearForm {
  long constant = 0;
  std::vector<int> coeffs;

  long evaluate(std::span<const int> indices) const;
  /// Maximum over the box 0 <= i_k <= bound.
  long max_over_box(int bound) const;
  bool is_identically_zero() const;
  std::string to_string() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// One crossing of the traversal. The F-side strand gains +i_k, the E-side
/// strand loses i_k.
struct CrossingRecord {
  int sign;      // +1 or -1
  int index_id;  // k in 1..N, in slice order
  int slice;
  LinearForm f_side_in;
  LinearForm e_side_in;
};

enum class TurnKind { Cup, Cap };

struct CupCapRecord {
  TurnKind kind;
  int slice;
  LinearForm label;
  /// +1 for a clockwise cap, -1 for a counterclockwise cup: these carry the
  /// factor q^{+-(alpha - 2 eps)}. Zero for the other two turn-backs.
  int weight_sign;
};

struct Traversal {
  std::vector<CrossingRecord> crossings;
  std::vector<CupCapRecord> cupcaps;
  /// Per slice: index into crossings or cupcaps.
  std::vector<int> record_of_slice;
};

/// A validated 1-1 tangle diagram of a knot in Morse position. Immutable.
class TangleDiagram {
 public:
  /// Validates and precomputes the traversal; throws ValidationError.
  TangleDiagram(std::string name, std::vector<Slice> slices);

  const std::string& name() const noexcept { return name_; }
  const std::vector<Slice>& slices() const noexcept { return slices_; }
  int framing() const noexcept { return framing_; }
  int crossing_count() const noexcept { return crossing_count_; }
  int cupcap_count() const noexcept { return cupcap_count_; }
  const Traversal& traversal() const noexcept { return traversal_; }
  /// Circles of the oriented smoothing, with the tangle closed up.
  int seifert_circles() const noexcept { return seifert_circles_; }
  /// Largest strand count over the slices.
  int max_width() const noexcept { return max_width_; }

  /// DSL text that parses back to this diagram.
  std::string canonical_text() const;

 private:
  std::string name_;
  std::vector<Slice> slices_;
  int framing_ = 0;
  int crossing_count_ = 0;
  int cupcap_count_ = 0;
  int seifert_circles_ = 1;
  int max_width_ = 1;
  Traversal traversal_;
};

TangleDiagram parse_tangle(std::string_view text);

const Traversal& traverse_labels(const TangleDiagram& d);

/// The same knot with framing 0: |f| kinks of the opposite sign are added on
/// the open strand below the diagram.
TangleDiagram zero_framed(const TangleDiagram& d, const std::string& name);

/// Bundled diagrams.
std::vector<std::string> corpus_names();
bool is_corpus_name(std::string_view name);
const std::string& corpus_text(std::string_view name);
TangleDiagram corpus_diagram(std::string_view name);

}  // namespace knotforge
