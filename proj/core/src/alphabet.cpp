#include "difflie/alphabet.hpp"

#include "difflie/error.hpp"

#include <algorithm>
#include <set>

namespace difflie {

Alphabet::Alphabet(std::vector<std::string> generators, std::vector<OperatorSpec> operators)
    : generators_(std::move(generators)), operators_(std::move(operators)) {
  std::set<std::string, std::less<>> seen;
  auto claim = [&](const std::string& name) {
    if (name.empty()) throw Error("empty symbol name");
    if (name == "D") throw Error("'D' is reserved for the differential operator");
    if (!seen.insert(name).second) throw Error("duplicate symbol '" + name + "'");
  };
  for (const auto& g : generators_) claim(g);
  for (const auto& op : operators_) {
    claim(op.name);
    if (op.arity == 0) throw Error("operator '" + op.name + "' must have arity >= 1");
  }
}

Alphabet Alphabet::numbered(unsigned generator_count, std::vector<OperatorSpec> operators) {
  std::vector<std::string> names;
  for (unsigned i = 1; i <= generator_count; ++i) names.push_back("x" + std::to_string(i));
  return Alphabet(std::move(names), std::move(operators));
}

const std::string& Alphabet::generator_name(GeneratorId id) const {
  if (id >= generators_.size()) throw Error("generator id out of range");
  return generators_[id];
}

const std::string& Alphabet::operator_name(OperatorId id) const {
  if (id >= operators_.size()) throw Error("operator id out of range");
  return operators_[id].name;
}

unsigned Alphabet::arity(OperatorId id) const {
  if (id >= operators_.size()) throw Error("operator id out of range");
  return operators_[id].arity;
}

std::optional<GeneratorId> Alphabet::find_generator(std::string_view name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) return std::nullopt;
  return static_cast<GeneratorId>(it - generators_.begin());
}

std::optional<OperatorId> Alphabet::find_operator(std::string_view name) const {
  auto it = std::find_if(operators_.begin(), operators_.end(),
                         [&](const OperatorSpec& op) { return op.name == name; });
  if (it == operators_.end()) return std::nullopt;
  return static_cast<OperatorId>(it - operators_.begin());
}

} // namespace difflie
