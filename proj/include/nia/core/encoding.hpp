#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "nia/core/rng.hpp"

namespace nia {

struct BitstringEncoding {
  std::size_t length = 0;
};

struct PermutationEncoding {
  std::size_t length = 0;
};

/// Box-constrained real vector; `lower(i) < upper(i)` for every dimension.
struct RealVectorEncoding {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;

  static RealVectorEncoding cube(Eigen::Index dim, double lo, double hi) {
    return {Eigen::VectorXd::Constant(dim, lo), Eigen::VectorXd::Constant(dim, hi)};
  }
};

struct IntegerSlot {
  std::int64_t lo = 0;
  std::int64_t hi = 0;  // inclusive
};

struct RealSlot {
  double lo = 0.0;
  double hi = 1.0;
};

using MixedSlot = std::variant<IntegerSlot, RealSlot>;

/// Heterogeneous array: each slot is either an integer range or a real
/// interval. Values are stored in an Eigen::VectorXd with integral entries
/// in the integer slots.
struct MixedArrayEncoding {
  std::vector<MixedSlot> slots;
};

using Encoding = std::variant<BitstringEncoding, PermutationEncoding, RealVectorEncoding, MixedArrayEncoding>;

enum class EncodingKind { Bitstring, Permutation, RealVector, MixedArray };

std::string_view to_string(EncodingKind kind);
EncodingKind kind_of(const Encoding& enc);
std::size_t length_of(const Encoding& enc);

/// Throws InvalidEncoding when the encoding itself is malformed (empty,
/// inverted bounds, empty integer range).
void check_encoding(const Encoding& enc);

using BitString = std::vector<std::uint8_t>;
using Permutation = std::vector<int>;

/// Encoded value. RealVector and MixedArray encodings both use VectorXd.
using Genome = std::variant<BitString, Permutation, Eigen::VectorXd>;

struct CandidateSolution {
  Genome value;
  std::optional<double> fitness;
  bool feasible = true;
};

/// True iff `value` conforms to `enc` (alternative, length, bounds,
/// permutation property, integrality). Never throws.
bool conforms(const Genome& value, const Encoding& enc) noexcept;
bool validate_solution(const CandidateSolution& sol, const Encoding& enc) noexcept;

bool is_permutation_of_range(const Permutation& p) noexcept;

/// Uniform random point of the encoding's search space.
Genome random_genome(const Encoding& enc, Rng& rng);

/// Clamp every coordinate into [lower, upper].
template <typename Derived>
void clamp_to_box(Eigen::MatrixBase<Derived>& x, const RealVectorEncoding& box) {
  x = x.cwiseMax(box.lower).cwiseMin(box.upper);
}

bool genome_equal(const Genome& a, const Genome& b);

}  // namespace nia
