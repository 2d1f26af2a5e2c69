#include "promrep/rel_core.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

namespace promrep {

struct FinSet::Data {
  std::string name;
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::size_t> index;
};

FinSet::FinSet() {
  static const auto empty = std::make_shared<const Data>();
  data_ = empty;
}

FinSet::FinSet(std::string name, std::vector<std::string> labels) {
  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  d->index.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!d->index.emplace(labels[i], i).second) {
      throw Error(ErrorCode::InvalidStructure,
                  "duplicate label '" + labels[i] + "' in set '" + d->name + "'");
    }
  }
  d->labels = std::move(labels);
  data_ = std::move(d);
}

FinSet FinSet::indexed(std::string name, const std::string& prefix,
                       std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return FinSet(std::move(name), std::move(labels));
}

const std::string& FinSet::name() const noexcept { return data_->name; }
std::size_t FinSet::size() const noexcept { return data_->labels.size(); }
const std::vector<std::string>& FinSet::labels() const noexcept {
  return data_->labels;
}

const std::string& FinSet::label(std::size_t i) const {
  return data_->labels.at(i);
}

std::optional<std::size_t> FinSet::index_of(const std::string& label) const {
  auto it = data_->index.find(label);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

FinSet FinSet::renamed(std::string name) const {
  auto d = std::make_shared<Data>(*data_);
  d->name = std::move(name);
  return FinSet(std::shared_ptr<const Data>(std::move(d)));
}

bool FinSet::same_carrier(const FinSet& other) const noexcept {
  return data_ == other.data_ || data_->labels == other.data_->labels;
}

void require_same(const FinSet& a, const FinSet& b, const char* what) {
  if (!(a == b)) {
    throw Error(ErrorCode::CarrierMismatch,
                std::string(what) + ": carrier '" + a.name() +
                    "' does not match '" + b.name() + "'");
  }
}

// --- Rel --------------------------------------------------------------------

Rel::Rel(FinSet src, FinSet dst)
    : src_(std::move(src)),
      dst_(std::move(dst)),
      words_((dst_.size() + kWordBits - 1) / kWordBits),
      bits_(src_.size() * words_, 0) {}

void Rel::clear_padding() noexcept {
  const std::size_t tail = dst_.size() % kWordBits;
  if (tail == 0 || words_ == 0) return;
  const Word mask = (Word{1} << tail) - 1;
  for (std::size_t i = 0; i < src_.size(); ++i) bits_[i * words_ + words_ - 1] &= mask;
}

Rel Rel::full(FinSet src, FinSet dst) {
  Rel r(std::move(src), std::move(dst));
  std::fill(r.bits_.begin(), r.bits_.end(), ~Word{0});
  r.clear_padding();
  return r;
}

Rel Rel::from_pairs(FinSet src, FinSet dst,
                    std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  Rel r(std::move(src), std::move(dst));
  for (auto [i, j] : pairs) {
    if (i >= r.src_.size() || j >= r.dst_.size()) {
      throw Error(ErrorCode::InvalidArgument, "relation pair out of range");
    }
    r.set(i, j);
  }
  return r;
}

Rel Rel::from_code(FinSet src, FinSet dst, std::uint64_t code) {
  Rel r(std::move(src), std::move(dst));
  const std::size_t cols = r.dst_.size();
  if (r.src_.size() * cols > 64) {
    throw Error(ErrorCode::BoundsExceeded, "relation code wider than 64 cells");
  }
  if (cols == 0) return r;
  for (std::size_t i = 0; i < r.src_.size(); ++i) {
    r.bits_[i * r.words_] = (code >> (i * cols)) & ((cols == 64) ? ~Word{0} : ((Word{1} << cols) - 1));
  }
  return r;
}

std::size_t Rel::count() const noexcept {
  std::size_t n = 0;
  for (Word w : bits_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::pair<std::size_t, std::size_t>> Rel::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < src_.size(); ++i) {
    for (std::size_t j = 0; j < dst_.size(); ++j) {
      if (test(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

// --- FnMap ------------------------------------------------------------------

FnMap::FnMap(FinSet src, FinSet dst, std::vector<std::size_t> image)
    : src_(std::move(src)), dst_(std::move(dst)), image_(std::move(image)) {
  if (image_.size() != src_.size()) {
    throw Error(ErrorCode::InvalidStructure,
                "function from '" + src_.name() + "' is not total");
  }
  for (std::size_t v : image_) {
    if (v >= dst_.size()) {
      throw Error(ErrorCode::InvalidStructure,
                  "function image outside '" + dst_.name() + "'");
    }
  }
}

FnMap FnMap::identity(const FinSet& carrier) {
  std::vector<std::size_t> image(carrier.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
  return FnMap(carrier, carrier, std::move(image));
}

// --- operators ----------------------------------------------------------------

Rel identity(const FinSet& a) {
  Rel r(a, a);
  for (std::size_t i = 0; i < a.size(); ++i) r.set(i, i);
  return r;
}

Rel converse(const Rel& x) {
  Rel r(x.dst(), x.src());
  for (std::size_t i = 0; i < x.src().size(); ++i) {
    auto row = x.row(i);
    for (std::size_t w = 0; w < row.size(); ++w) {
      for (Rel::Word bits = row[w]; bits != 0; bits &= bits - 1) {
        r.set(w * Rel::kWordBits + static_cast<std::size_t>(std::countr_zero(bits)), i);
      }
    }
  }
  return r;
}

Rel compose(const Rel& x, const Rel& y) {
  require_same(x.dst(), y.src(), "compose");
  Rel r(x.src(), y.dst());
  for (std::size_t a = 0; a < x.src().size(); ++a) {
    auto out = r.row(a);
    auto xr = x.row(a);
    for (std::size_t w = 0; w < xr.size(); ++w) {
      for (Rel::Word bits = xr[w]; bits != 0; bits &= bits - 1) {
        auto yr = y.row(w * Rel::kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        for (std::size_t k = 0; k < out.size(); ++k) out[k] |= yr[k];
      }
    }
  }
  return r;
}

std::optional<std::pair<std::size_t, std::size_t>> first_excess(const Rel& x,
                                                                const Rel& y) {
  require_same(x.src(), y.src(), "leq (source)");
  require_same(x.dst(), y.dst(), "leq (target)");
  for (std::size_t i = 0; i < x.src().size(); ++i) {
    auto xr = x.row(i);
    auto yr = y.row(i);
    for (std::size_t w = 0; w < xr.size(); ++w) {
      if (Rel::Word extra = xr[w] & ~yr[w]; extra != 0) {
        return std::pair{i, w * Rel::kWordBits + static_cast<std::size_t>(std::countr_zero(extra))};
      }
    }
  }
  return std::nullopt;
}

bool leq(const Rel& x, const Rel& y) { return !first_excess(x, y).has_value(); }

bool eq(const Rel& x, const Rel& y) {
  require_same(x.src(), y.src(), "eq (source)");
  require_same(x.dst(), y.dst(), "eq (target)");
  return x.same_bits(y);
}

Rel left_residual(const Rel& x, const Rel& z) {
  require_same(x.src(), z.src(), "left_residual");
  Rel r = Rel::full(x.dst(), z.dst());
  // Row b of x\z is the meet of the z-rows of every a related to b.
  for (std::size_t a = 0; a < x.src().size(); ++a) {
    auto xr = x.row(a);
    auto zr = z.row(a);
    for (std::size_t w = 0; w < xr.size(); ++w) {
      for (Rel::Word bits = xr[w]; bits != 0; bits &= bits - 1) {
        auto out = r.row(w * Rel::kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        for (std::size_t k = 0; k < out.size(); ++k) out[k] &= zr[k];
      }
    }
  }
  return r;
}

Rel right_residual(const Rel& z, const Rel& y) {
  require_same(z.dst(), y.dst(), "right_residual");
  return converse(left_residual(converse(y), converse(z)));
}

Rel meet(const Rel& x, const Rel& y) {
  require_same(x.src(), y.src(), "meet (source)");
  require_same(x.dst(), y.dst(), "meet (target)");
  Rel r = x;
  for (std::size_t i = 0; i < x.src().size(); ++i) {
    auto out = r.row(i);
    auto yr = y.row(i);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] &= yr[k];
  }
  return r;
}

Rel join(const Rel& x, const Rel& y) {
  require_same(x.src(), y.src(), "join (source)");
  require_same(x.dst(), y.dst(), "join (target)");
  Rel r = x;
  for (std::size_t i = 0; i < x.src().size(); ++i) {
    auto out = r.row(i);
    auto yr = y.row(i);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] |= yr[k];
  }
  return r;
}

Rel graph_lower(const FnMap& f) {
  Rel r(f.src(), f.dst());
  for (std::size_t a = 0; a < f.src().size(); ++a) r.set(a, f(a));
  return r;
}

Rel graph_upper(const FnMap& f) {
  Rel r(f.dst(), f.src());
  for (std::size_t a = 0; a < f.src().size(); ++a) r.set(f(a), a);
  return r;
}

FnMap compose_fn(const FnMap& g, const FnMap& f) {
  require_same(f.dst(), g.src(), "compose_fn");
  std::vector<std::size_t> image(f.src().size());
  for (std::size_t a = 0; a < image.size(); ++a) image[a] = g(f(a));
  return FnMap(f.src(), g.dst(), std::move(image));
}

// --- powersets --------------------------------------------------------------

std::string subset_label(const FinSet& base, std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if ((mask >> i) & 1U) {
      if (!first) out += ',';
      out += base.label(i);
      first = false;
    }
  }
  out += '}';
  return out;
}

namespace {

PowersetPtr build_powerset(const FinSet& base) {
  const std::size_t n = base.size();
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::string> labels;
  labels.reserve(count);
  for (std::size_t k = 0; k < count; ++k) labels.push_back(subset_label(base, k));
  FinSet carrier("2^" + base.name(), std::move(labels));
  Rel mem(base, carrier);
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((k >> i) & 1U) mem.set(i, k);
    }
  }
  return std::make_shared<const PowersetBundle>(
      PowersetBundle{base, std::move(carrier), std::move(mem)});
}

}  // namespace

PowersetPtr powerset(const FinSet& base, std::size_t cap) {
  if (base.size() > cap) {
    throw Error(ErrorCode::CapExceeded,
                "powerset of '" + base.name() + "' needs " +
                    std::to_string(base.size()) + " base elements, cap is " +
                    std::to_string(cap));
  }
  // Per-thread memo keyed by carrier storage; keeps the carrier alive so the
  // key cannot be reused while cached.
  struct Entry {
    FinSet base;
    PowersetPtr bundle;
  };
  thread_local std::unordered_map<const void*, Entry> cache;
  if (auto it = cache.find(base.identity()); it != cache.end()) {
    return it->second.bundle;
  }
  if (cache.size() >= 256) cache.clear();
  PowersetPtr bundle = build_powerset(base);
  cache.emplace(base.identity(), Entry{base, bundle});
  return bundle;
}

FnMap singleton_map(const PowersetBundle& pw) {
  std::vector<std::size_t> image(pw.base.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = std::size_t{1} << i;
  return FnMap(pw.base, pw.carrier, std::move(image));
}

bool fn_eq_into_powerset(const PowersetBundle& pw, const FnMap& f, const FnMap& g) {
  require_same(f.dst(), pw.carrier, "fn_eq_into_powerset");
  require_same(g.dst(), pw.carrier, "fn_eq_into_powerset");
  require_same(f.src(), g.src(), "fn_eq_into_powerset");
  return eq(compose(pw.mem, graph_upper(f)), compose(pw.mem, graph_upper(g)));
}

}  // namespace promrep
