#pragma once

// Finite carriers, boolean relations and the relation-algebra operators
// (identity, converse, composition, inclusion, residuals, function graphs)
// together with the powerset construction used by the functors.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "promrep/error.hpp"

namespace promrep {

inline constexpr std::size_t kDefaultPowersetCap = 12;

/// A named finite carrier. Element i is identified with label i.
///
/// Two carriers are the same carrier when their label sequences coincide;
/// the name is only used for display and serialization.
class FinSet {
 public:
  FinSet();
  FinSet(std::string name, std::vector<std::string> labels);

  /// Carrier with labels prefix0 .. prefix{n-1}.
  static FinSet indexed(std::string name, const std::string& prefix,
                        std::size_t n);

  const std::string& name() const noexcept;
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  const std::string& label(std::size_t i) const;
  const std::vector<std::string>& labels() const noexcept;
  std::optional<std::size_t> index_of(const std::string& label) const;

  /// Same carrier under a different display name.
  FinSet renamed(std::string name) const;

  bool same_carrier(const FinSet& other) const noexcept;
  /// Identity of the underlying storage, used as a cache key.
  const void* identity() const noexcept { return data_.get(); }

  friend bool operator==(const FinSet& a, const FinSet& b) noexcept {
    return a.same_carrier(b);
  }

 private:
  struct Data;
  explicit FinSet(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

/// A relation src ⇸ dst stored as a dense bit matrix, one packed row per
/// source element.
class Rel {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Rel() = default;
  Rel(FinSet src, FinSet dst);

  static Rel full(FinSet src, FinSet dst);
  static Rel from_pairs(FinSet src, FinSet dst,
                        std::span<const std::pair<std::size_t, std::size_t>> pairs);
  /// Relation whose cells are the low |src|·|dst| bits of `code`, row-major.
  /// Used by exhaustive enumeration; requires |src|·|dst| ≤ 64.
  static Rel from_code(FinSet src, FinSet dst, std::uint64_t code);

  const FinSet& src() const noexcept { return src_; }
  const FinSet& dst() const noexcept { return dst_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool test(std::size_t i, std::size_t j) const noexcept {
    return (bits_[i * words_ + j / kWordBits] >> (j % kWordBits)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool value = true) noexcept {
    Word& w = bits_[i * words_ + j / kWordBits];
    const Word mask = Word{1} << (j % kWordBits);
    w = value ? (w | mask) : (w & ~mask);
  }

  std::span<const Word> row(std::size_t i) const noexcept {
    return {bits_.data() + i * words_, words_};
  }
  std::span<Word> row(std::size_t i) noexcept {
    return {bits_.data() + i * words_, words_};
  }

  std::size_t count() const noexcept;
  bool none() const noexcept { return count() == 0; }
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  /// Pair-for-pair comparison; carriers must match (see `eq`).
  bool same_bits(const Rel& other) const noexcept { return bits_ == other.bits_; }

 private:
  void clear_padding() noexcept;

  FinSet src_;
  FinSet dst_;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
};

/// A total function src → dst given by the image index of each element.
class FnMap {
 public:
  FnMap() = default;
  FnMap(FinSet src, FinSet dst, std::vector<std::size_t> image);

  static FnMap identity(const FinSet& carrier);

  const FinSet& src() const noexcept { return src_; }
  const FinSet& dst() const noexcept { return dst_; }
  std::size_t operator()(std::size_t i) const noexcept { return image_[i]; }
  const std::vector<std::size_t>& image() const noexcept { return image_; }

  /// Pointwise equality; carriers must match.
  friend bool operator==(const FnMap& a, const FnMap& b) noexcept {
    return a.src_ == b.src_ && a.dst_ == b.dst_ && a.image_ == b.image_;
  }

 private:
  FinSet src_;
  FinSet dst_;
  std::vector<std::size_t> image_;
};

/// Powerset 2^base with its membership relation. Subset k of the carrier is
/// the subset whose bitmask over base order is k.
struct PowersetBundle {
  FinSet base;
  FinSet carrier;
  Rel mem;  // base ⇸ carrier
};

using PowersetPtr = std::shared_ptr<const PowersetBundle>;

// --- relation algebra -----------------------------------------------------

Rel identity(const FinSet& a);
Rel converse(const Rel& x);
Rel compose(const Rel& x, const Rel& y);
bool leq(const Rel& x, const Rel& y);
bool eq(const Rel& x, const Rel& y);
/// x\z: the pairs (b,c) with (a,b) ∈ x ⇒ (a,c) ∈ z for every a.
Rel left_residual(const Rel& x, const Rel& z);
/// z/y: the largest x with x⨾y ≤ z.
Rel right_residual(const Rel& z, const Rel& y);
Rel meet(const Rel& x, const Rel& y);
Rel join(const Rel& x, const Rel& y);

Rel graph_lower(const FnMap& f);
Rel graph_upper(const FnMap& f);
/// g∘f
FnMap compose_fn(const FnMap& g, const FnMap& f);

/// First pair of x missing from y, if any. Carriers must match.
std::optional<std::pair<std::size_t, std::size_t>> first_excess(const Rel& x,
                                                                const Rel& y);

// --- powersets ------------------------------------------------------------

/// Label of the subset with the given bitmask, e.g. "{m0,m2}" or "{}".
std::string subset_label(const FinSet& base, std::uint64_t mask);

/// Throws CapExceeded when |base| > cap. Bundles are memoized per carrier.
PowersetPtr powerset(const FinSet& base, std::size_t cap = kDefaultPowersetCap);

/// a ↦ {a}
FnMap singleton_map(const PowersetBundle& pw);

/// f = g decided through ∈⨾f^* = ∈⨾g^*.
bool fn_eq_into_powerset(const PowersetBundle& pw, const FnMap& f, const FnMap& g);

/// Throws CarrierMismatch unless the carriers coincide.
void require_same(const FinSet& a, const FinSet& b, const char* what);

}  // namespace promrep
