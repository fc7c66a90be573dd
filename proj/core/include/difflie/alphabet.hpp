#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace difflie {

using GeneratorId = std::uint32_t;
using OperatorId = std::uint32_t;

struct OperatorSpec {
  std::string name;
  unsigned arity = 1;

  friend bool operator==(const OperatorSpec&, const OperatorSpec&) = default;
};

// The ordered generator set X and operator set Omega.
//
// Declaration order is significant: an earlier entry is *greater* than a later
// one, so with generators {x1, x2} we have x1 > x2. Every operator ranks above
// the differential symbol D.
class Alphabet {
public:
  Alphabet(std::vector<std::string> generators, std::vector<OperatorSpec> operators);

  // Generators x1..xN and the given operators.
  static Alphabet numbered(unsigned generator_count,
                           std::vector<OperatorSpec> operators = {{"P", 1}});

  std::size_t generator_count() const noexcept { return generators_.size(); }
  std::size_t operator_count() const noexcept { return operators_.size(); }

  const std::string& generator_name(GeneratorId id) const;
  const std::string& operator_name(OperatorId id) const;
  unsigned arity(OperatorId id) const;

  std::optional<GeneratorId> find_generator(std::string_view name) const;
  std::optional<OperatorId> find_operator(std::string_view name) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
  std::vector<std::string> generators_;
  std::vector<OperatorSpec> operators_;
};

} // namespace difflie
