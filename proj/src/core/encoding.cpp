#include "nia/core/encoding.hpp"

#include <cmath>

#include "nia/core/errors.hpp"

namespace nia {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string_view to_string(EncodingKind kind) {
  switch (kind) {
    case EncodingKind::Bitstring: return "bitstring";
    case EncodingKind::Permutation: return "permutation";
    case EncodingKind::RealVector: return "real";
    case EncodingKind::MixedArray: return "mixed";
  }
  return "?";
}

EncodingKind kind_of(const Encoding& enc) { return static_cast<EncodingKind>(enc.index()); }

std::size_t length_of(const Encoding& enc) {
  return std::visit(overloaded{
                        [](const BitstringEncoding& e) { return e.length; },
                        [](const PermutationEncoding& e) { return e.length; },
                        [](const RealVectorEncoding& e) { return static_cast<std::size_t>(e.lower.size()); },
                        [](const MixedArrayEncoding& e) { return e.slots.size(); },
                    },
                    enc);
}

void check_encoding(const Encoding& enc) {
  if (length_of(enc) == 0) throw InvalidEncoding("encoding length must be >= 1");
  if (const auto* rv = std::get_if<RealVectorEncoding>(&enc)) {
    if (rv->lower.size() != rv->upper.size()) throw InvalidEncoding("bound vectors differ in length");
    for (Eigen::Index i = 0; i < rv->lower.size(); ++i) {
      if (!(rv->lower(i) < rv->upper(i))) throw InvalidEncoding("real bound requires lower < upper");
    }
  }
  if (const auto* mixed = std::get_if<MixedArrayEncoding>(&enc)) {
    for (const auto& slot : mixed->slots) {
      std::visit(overloaded{
                     [](const IntegerSlot& s) {
                       if (s.lo > s.hi) throw InvalidEncoding("integer slot range is empty");
                     },
                     [](const RealSlot& s) {
                       if (!(s.lo < s.hi)) throw InvalidEncoding("real slot requires lo < hi");
                     },
                 },
                 slot);
    }
  }
}

bool is_permutation_of_range(const Permutation& p) noexcept {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool conforms(const Genome& value, const Encoding& enc) noexcept {
  switch (kind_of(enc)) {
    case EncodingKind::Bitstring: {
      const auto* bits = std::get_if<BitString>(&value);
      if (!bits || bits->size() != std::get<BitstringEncoding>(enc).length) return false;
      for (auto b : *bits) {
        if (b > 1) return false;
      }
      return true;
    }
    case EncodingKind::Permutation: {
      const auto* perm = std::get_if<Permutation>(&value);
      return perm && perm->size() == std::get<PermutationEncoding>(enc).length && is_permutation_of_range(*perm);
    }
    case EncodingKind::RealVector: {
      const auto* x = std::get_if<Eigen::VectorXd>(&value);
      const auto& box = std::get<RealVectorEncoding>(enc);
      if (!x || x->size() != box.lower.size()) return false;
      return x->allFinite() && (x->array() >= box.lower.array()).all() && (x->array() <= box.upper.array()).all();
    }
    case EncodingKind::MixedArray: {
      const auto* x = std::get_if<Eigen::VectorXd>(&value);
      const auto& slots = std::get<MixedArrayEncoding>(enc).slots;
      if (!x || static_cast<std::size_t>(x->size()) != slots.size()) return false;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        const double v = (*x)(static_cast<Eigen::Index>(i));
        if (!std::isfinite(v)) return false;
        const bool ok = std::visit(overloaded{
                                       [v](const IntegerSlot& s) {
                                         return v == std::floor(v) && v >= static_cast<double>(s.lo) &&
                                                v <= static_cast<double>(s.hi);
                                       },
                                       [v](const RealSlot& s) { return v >= s.lo && v <= s.hi; },
                                   },
                                   slots[i]);
        if (!ok) return false;
      }
      return true;
    }
  }
  return false;
}

bool validate_solution(const CandidateSolution& sol, const Encoding& enc) noexcept { return conforms(sol.value, enc); }

Genome random_genome(const Encoding& enc, Rng& rng) {
  return std::visit(overloaded{
                        [&](const BitstringEncoding& e) -> Genome {
                          BitString bits(e.length);
                          for (auto& b : bits) b = static_cast<std::uint8_t>(rng.next() >> 63);
                          return bits;
                        },
                        [&](const PermutationEncoding& e) -> Genome {
                          Permutation p(e.length);
                          for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
                          rng.shuffle(std::span<int>(p));
                          return p;
                        },
                        [&](const RealVectorEncoding& e) -> Genome {
                          Eigen::VectorXd x(e.lower.size());
                          for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = rng.uniform(e.lower(i), e.upper(i));
                          return x;
                        },
                        [&](const MixedArrayEncoding& e) -> Genome {
                          Eigen::VectorXd x(static_cast<Eigen::Index>(e.slots.size()));
                          for (std::size_t i = 0; i < e.slots.size(); ++i) {
                            x(static_cast<Eigen::Index>(i)) = std::visit(
                                overloaded{
                                    [&](const IntegerSlot& s) { return static_cast<double>(rng.integer(s.lo, s.hi)); },
                                    [&](const RealSlot& s) { return rng.uniform(s.lo, s.hi); },
                                },
                                e.slots[i]);
                          }
                          return x;
                        },
                    },
                    enc);
}

bool genome_equal(const Genome& a, const Genome& b) {
  if (a.index() != b.index()) return false;
  if (const auto* x = std::get_if<Eigen::VectorXd>(&a)) {
    const auto& y = std::get<Eigen::VectorXd>(b);
    return x->size() == y.size() && (x->array() == y.array()).all();
  }
  return a == b;
}

}  // namespace nia
