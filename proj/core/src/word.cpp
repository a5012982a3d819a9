#include "qsymkit/word.hpp"

#include <algorithm>

#include "qsymkit/errors.hpp"

namespace qsym {

GeneratorSet::GeneratorSet(std::vector<GeneratorSymbol> generators)
    : generators_(std::move(generators)) {
  for (int i = 0; i < static_cast<int>(generators_.size()); ++i) {
    if (generators_[i].id != i)
      throw DomainError("generator ids must be dense 0..g-1 (got id " +
                        std::to_string(generators_[i].id) + " at position " + std::to_string(i) +
                        ")");
    if (!by_name_.emplace(generators_[i].name, i).second)
      throw DomainError("duplicate generator name '" + generators_[i].name + "'");
  }
}

const GeneratorSymbol& GeneratorSet::at(int id) const {
  if (id < 0 || id >= size()) throw DomainError("generator id out of range");
  return generators_[id];
}

int GeneratorSet::id_of(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : it->second;
}

GeneratorSetPtr make_generators(std::vector<GeneratorSymbol> generators) {
  return std::make_shared<const GeneratorSet>(std::move(generators));
}

Word star_word(const Word& w, const GeneratorSet& gens) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    Letter l = *it;
    if (!gens.at(l.gen).selfadjoint) l.star = !l.star;
    out.push_back(l);
  }
  return out;
}

std::string word_text(const Word& w, const GeneratorSet& gens) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += gens.at(w[i].gen).name;
    if (w[i].star) out += '*';
  }
  return out;
}

}  // namespace qsym
