#include "qsymkit/presentation.hpp"

#include <algorithm>
#include <sstream>

#include "qsymkit/errors.hpp"

namespace qsym {

bool RelationSet::contains(const NCPolynomial& p) const {
  const NCPolynomial m = p.monic();
  return std::any_of(relations.begin(), relations.end(),
                     [&](const NCPolynomial& r) { return r == m; });
}

RelationSet canonicalize_relations(std::vector<NCPolynomial> relations) {
  std::vector<NCPolynomial> out;
  out.reserve(relations.size());
  for (auto& r : relations)
    if (!r.is_zero()) out.push_back(r.monic());
  std::sort(out.begin(), out.end(),
            [](const NCPolynomial& a, const NCPolynomial& b) { return NCPolynomial::compare(a, b) < 0; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return RelationSet{std::move(out)};
}

std::vector<NCPolynomial> magic_block_relations(const MagicBlock& block, GeneratorSetPtr gens) {
  std::vector<NCPolynomial> rels;
  const NCPolynomial one = NCPolynomial::constant(gens, 1);
  for (int r = 0; r < block.rows; ++r)
    for (int c = 0; c < block.cols; ++c) {
      const NCPolynomial& e = block.at(r, c);
      rels.push_back(e * e - e);
    }
  for (int r = 0; r < block.rows; ++r) {
    NCPolynomial sum(gens);
    for (int c = 0; c < block.cols; ++c) sum += block.at(r, c);
    rels.push_back(sum - one);
  }
  for (int c = 0; c < block.cols; ++c) {
    NCPolynomial sum(gens);
    for (int r = 0; r < block.rows; ++r) sum += block.at(r, c);
    rels.push_back(sum - one);
  }
  // Orthogonality within rows and columns, both factor orders.
  for (int r = 0; r < block.rows; ++r)
    for (int c1 = 0; c1 < block.cols; ++c1)
      for (int c2 = 0; c2 < block.cols; ++c2)
        if (c1 != c2) rels.push_back(block.at(r, c1) * block.at(r, c2));
  for (int c = 0; c < block.cols; ++c)
    for (int r1 = 0; r1 < block.rows; ++r1)
      for (int r2 = 0; r2 < block.rows; ++r2)
        if (r1 != r2) rels.push_back(block.at(r1, c) * block.at(r2, c));
  std::erase_if(rels, [](const NCPolynomial& p) { return p.is_zero(); });
  return rels;
}

void validate_presentation(const Presentation& p) {
  for (const auto& r : p.relations.relations) {
    if (r.universe().get() != p.gens.get() && !(*r.universe() == *p.gens))
      throw DomainError("relation over a foreign generator universe");
  }
  for (const auto& b : p.blocks) {
    if (static_cast<int>(b.entries.size()) != b.rows * b.cols)
      throw DomainError("block entry count mismatch in '" + b.label + "'");
    for (const auto& e : b.entries)
      if (!e.is_affine())
        throw DomainError("non-affine block entry in '" + b.label + "': " + e.text());
    for (const auto& rel : magic_block_relations(b, p.gens))
      if (!p.relations.contains(rel))
        throw DomainError("missing magic-unitary relation for block '" + b.label +
                          "': " + rel.monic().text());
  }
}

std::string presentation_text(const Presentation& p) {
  std::ostringstream out;
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(p.input_hash));
  out << "# builder=" << (p.builder.empty() ? "none" : p.builder) << " input_hash=" << hash
      << "\n";
  out << "generators:";
  for (const auto& g : p.gens->all()) out << ' ' << g.name;
  out << "\n";
  std::string nonsa;
  for (const auto& g : p.gens->all())
    if (!g.selfadjoint) nonsa += ' ' + g.name;
  if (!nonsa.empty()) out << "nonselfadjoint:" << nonsa << "\n";
  for (const auto& b : p.blocks) {
    out << "block " << b.rows << "x" << b.cols;
    if (!b.label.empty()) out << ' ' << b.label;
    out << ":\n";
    for (int r = 0; r < b.rows; ++r) {
      out << "  ";
      for (int c = 0; c < b.cols; ++c) {
        if (c) out << " | ";
        out << b.at(r, c).text();
      }
      out << "\n";
    }
  }
  out << "relations:\n";
  for (const auto& r : p.relations.relations) out << r.text() << "\n";
  return out.str();
}

bool equal_up_to_renaming(const Presentation& a, const Presentation& b) {
  if (a.gens->size() != b.gens->size()) return false;
  for (int i = 0; i < a.gens->size(); ++i)
    if (a.gens->at(i).selfadjoint != b.gens->at(i).selfadjoint) return false;

  auto transplant = [&](const NCPolynomial& p) {
    NCPolynomial out(b.gens);
    for (const auto& [w, c] : p.terms()) out.add_term(w, c);
    return out;
  };
  if (a.relations.relations.size() != b.relations.relations.size()) return false;
  for (std::size_t i = 0; i < a.relations.relations.size(); ++i)
    if (!(transplant(a.relations.relations[i]) == b.relations.relations[i])) return false;
  return true;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace qsym
