#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace qsym {

struct GeneratorSymbol {
  int id = 0;
  std::string name;
  bool selfadjoint = true;

  bool operator==(const GeneratorSymbol&) const = default;
};

// Immutable generator universe of a presentation. Ids are dense 0..g-1,
// names unique.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<GeneratorSymbol> generators);

  int size() const { return static_cast<int>(generators_.size()); }
  const GeneratorSymbol& at(int id) const;
  // -1 when absent.
  int id_of(const std::string& name) const;
  const std::vector<GeneratorSymbol>& all() const { return generators_; }

  bool operator==(const GeneratorSet& other) const { return generators_ == other.generators_; }

 private:
  std::vector<GeneratorSymbol> generators_;
  std::map<std::string, int> by_name_;
};

using GeneratorSetPtr = std::shared_ptr<const GeneratorSet>;

GeneratorSetPtr make_generators(std::vector<GeneratorSymbol> generators);

// One letter of a word: a generator or its adjoint. The star flag is never
// set on selfadjoint generators.
struct Letter {
  int gen = 0;
  bool star = false;

  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

// Degree first, then lexicographic on (generator id, star flag).
struct DegLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

inline int word_degree(const Word& w) { return static_cast<int>(w.size()); }

// Reverses the word and flips the star flag on non-selfadjoint letters.
Word star_word(const Word& w, const GeneratorSet& gens);

std::string word_text(const Word& w, const GeneratorSet& gens);

}  // namespace qsym
