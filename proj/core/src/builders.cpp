#include "qsymkit/builders.hpp"

#include <algorithm>
#include <sstream>

#include "qsymkit/errors.hpp"
#include "qsymkit/rewrite.hpp"

namespace qsym {

namespace {

Presentation finish(GeneratorSetPtr gens, std::vector<NCPolynomial> relations,
                    std::vector<MagicBlock> blocks, std::string builder,
                    const std::string& hash_seed) {
  Presentation p;
  p.gens = std::move(gens);
  p.relations = canonicalize_relations(std::move(relations));
  p.blocks = std::move(blocks);
  p.builder = std::move(builder);
  p.input_hash = fnv1a64(p.builder + "|" + hash_seed);
  return p;
}

GeneratorSetPtr square_generators(int n, const std::string& stem,
                                  const std::vector<std::string>& labels) {
  std::vector<GeneratorSymbol> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      gens.push_back({static_cast<int>(gens.size()), stem + "_" + labels[i] + "_" + labels[j], true});
  return make_generators(std::move(gens));
}

std::vector<std::string> index_labels(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

MagicBlock generator_block(GeneratorSetPtr gens, int n, int first_id, const std::string& label) {
  MagicBlock b{label, n, n, {}};
  for (int k = 0; k < n * n; ++k) b.entries.push_back(NCPolynomial::generator(gens, first_id + k));
  return b;
}

std::string metric_seed(const FiniteMetricSpace& x) {
  std::string seed = std::to_string(x.n);
  for (const auto& row : x.sqdist)
    for (const auto& v : row) seed += ":" + rational_text(v);
  return seed;
}

std::string graph_seed(const FiniteGraph& g) {
  std::string seed = std::to_string(g.size());
  for (const auto& row : g.adjacency)
    for (bool b : row) seed += b ? '1' : '0';
  return seed;
}

std::string tree_seed(const TreeDiagram& t, int n) {
  std::string seed = std::to_string(n);
  for (int l : t.levels) seed += ":" + std::to_string(l);
  for (const auto& pmap : t.parents)
    for (int p : pmap) seed += "," + std::to_string(p);
  return seed;
}

}  // namespace

Presentation magic_unitary_presentation(int n) {
  if (n < 1) throw DomainError("magic unitary needs n >= 1");
  GeneratorSetPtr gens = square_generators(n, "q", index_labels(n));
  MagicBlock block = generator_block(gens, n, 0, "");
  std::vector<NCPolynomial> rels = magic_block_relations(block, gens);
  return finish(gens, std::move(rels), {block}, "magic_unitary", std::to_string(n));
}

Presentation metric_commutation_presentation(const FiniteMetricSpace& x) {
  Presentation base = magic_unitary_presentation(x.n);
  auto q = [&](int i, int j) { return NCPolynomial::generator(base.gens, i * x.n + j); };
  std::vector<NCPolynomial> rels = base.relations.relations;
  for (int k = 0; k < x.n; ++k)
    for (int l = 0; l < x.n; ++l) {
      NCPolynomial rel(base.gens);
      for (int i = 0; i < x.n; ++i) rel += x.sqdist[i][l] * q(k, i) - x.sqdist[k][i] * q(i, l);
      rels.push_back(std::move(rel));
    }
  return finish(base.gens, std::move(rels), base.blocks, "metric_commutation", metric_seed(x));
}

Presentation graph_commutation_presentation(const FiniteGraph& g) {
  if (g.directed) throw DomainError("commutation scheme requires an undirected graph");
  const int n = g.size();
  Presentation base = magic_unitary_presentation(n);
  auto q = [&](int i, int j) { return NCPolynomial::generator(base.gens, i * n + j); };
  std::vector<NCPolynomial> rels = base.relations.relations;
  // Adjacency indicator and non-adjacency indicator, handled separately.
  for (int which = 0; which < 2; ++which) {
    auto weight = [&](int i, int j) -> Rational {
      if (i == j) return 0;
      const bool adjacent = g.edge(i, j);
      return (which == 0 ? adjacent : !adjacent) ? 1 : 0;
    };
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        NCPolynomial rel(base.gens);
        for (int i = 0; i < n; ++i) rel += weight(i, l) * q(k, i) - weight(k, i) * q(i, l);
        rels.push_back(std::move(rel));
      }
  }
  return finish(base.gens, std::move(rels), base.blocks, "graph_commutation", graph_seed(g));
}

Presentation qiso_quadratic_presentation(const FiniteMetricSpace& x) {
  Presentation base = magic_unitary_presentation(x.n);
  auto q = [&](int i, int j) { return NCPolynomial::generator(base.gens, i * x.n + j); };
  std::vector<NCPolynomial> rels = base.relations.relations;
  for (int k = 0; k < x.n; ++k)
    for (int l = 0; l < x.n; ++l) {
      NCPolynomial rel = -NCPolynomial::constant(base.gens, x.sqdist[k][l]);
      for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j)
          if (x.sqdist[i][j] != 0) rel += x.sqdist[i][j] * (q(k, i) * q(l, j));
      rels.push_back(std::move(rel));
    }
  return finish(base.gens, std::move(rels), base.blocks, "qiso_quadratic", metric_seed(x));
}

Presentation edge_orthogonality_presentation(const FiniteGraph& g) {
  if (g.directed) throw DomainError("edge scheme requires an undirected graph");
  const int n = g.size();
  Presentation base = magic_unitary_presentation(n);
  auto q = [&](int i, int j) { return NCPolynomial::generator(base.gens, i * n + j); };
  std::vector<NCPolynomial> rels = base.relations.relations;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (g.edge(a, b) != g.edge(i, j)) rels.push_back(q(a, i) * q(b, j));
  return finish(base.gens, std::move(rels), base.blocks, "edge_orthogonality", graph_seed(g));
}

Presentation tree_diagram_presentation(const TreeDiagram& t, int n) {
  if (n < 1 || n > t.depth()) throw DomainError("level out of range");

  std::vector<GeneratorSymbol> symbols;
  std::vector<int> first_id(n + 1, 0);  // per level
  for (int m = 1; m <= n; ++m) {
    first_id[m] = static_cast<int>(symbols.size());
    const std::string stem = "a" + std::to_string(m);
    for (int i = 0; i < t.levels[m]; ++i)
      for (int j = 0; j < t.levels[m]; ++j)
        symbols.push_back({static_cast<int>(symbols.size()),
                           stem + "_" + t.labels[m][i] + "_" + t.labels[m][j], true});
  }
  GeneratorSetPtr gens = make_generators(std::move(symbols));
  auto a = [&](int m, int i, int j) {
    return NCPolynomial::generator(gens, first_id[m] + i * t.levels[m] + j);
  };

  std::vector<MagicBlock> blocks;
  std::vector<NCPolynomial> rels;
  for (int m = 1; m <= n; ++m) {
    blocks.push_back(
        generator_block(gens, t.levels[m], first_id[m], "level " + std::to_string(m)));
    auto block_rels = magic_block_relations(blocks.back(), gens);
    rels.insert(rels.end(), block_rels.begin(), block_rels.end());
  }

  // a^m_{i,j} = sum over children r of i of a^{m+1}_{r,s}, one relation per
  // child s of j.
  for (int m = 1; m < n; ++m)
    for (int i = 0; i < t.levels[m]; ++i)
      for (int j = 0; j < t.levels[m]; ++j)
        for (int s : t.children(m + 1, j)) {
          NCPolynomial rel = a(m, i, j);
          for (int r : t.children(m + 1, i)) rel -= a(m + 1, r, s);
          rels.push_back(std::move(rel));
        }

  // Subordination-chain orthogonality, materialized as rules: an entry at
  // level m' sits under the entry of its level-m ancestors, so products
  // vanish whenever exactly one of the ancestor coordinates matches. Covers
  // the cross-level edge relations and their within-level analogue.
  std::vector<std::vector<std::vector<int>>> ancestor(n + 1);  // [level][vertex][target level]
  for (int m = 1; m <= n; ++m) {
    ancestor[m].resize(t.levels[m]);
    for (int v = 0; v < t.levels[m]; ++v) {
      ancestor[m][v].assign(m + 1, 0);
      ancestor[m][v][m] = v;
      int up = v;
      for (int j = m; j > 0; --j) {
        up = t.parents[j - 1][up];
        ancestor[m][v][j - 1] = up;
      }
    }
  }
  for (int m = 1; m <= n; ++m)
    for (int m2 = m + 1; m2 <= n; ++m2) {
      for (int i = 0; i < t.levels[m]; ++i)
        for (int j = 0; j < t.levels[m]; ++j)
          for (int k = 0; k < t.levels[m2]; ++k)
            for (int p = 0; p < t.levels[m2]; ++p) {
              const bool row_under = ancestor[m2][k][m] == i;
              const bool col_under = ancestor[m2][p][m] == j;
              if (row_under != col_under) {
                rels.push_back(a(m, i, j) * a(m2, k, p));
                rels.push_back(a(m2, k, p) * a(m, i, j));
              }
            }
      for (int k = 0; k < t.levels[m2]; ++k)
        for (int p = 0; p < t.levels[m2]; ++p)
          for (int k2 = 0; k2 < t.levels[m2]; ++k2)
            for (int p2 = 0; p2 < t.levels[m2]; ++p2) {
              const bool rows_related = ancestor[m2][k][m] == ancestor[m2][k2][m];
              const bool cols_related = ancestor[m2][p][m] == ancestor[m2][p2][m];
              if (rows_related != cols_related) rels.push_back(a(m2, k, p) * a(m2, k2, p2));
            }
    }
  return finish(gens, std::move(rels), std::move(blocks), "tree_diagram", tree_seed(t, n));
}

Presentation cantor_level_presentation(int n, CantorForm form) {
  if (n < 1) throw DomainError("cantor level needs n >= 1");
  if (form == CantorForm::Raw) {
    Presentation p = tree_diagram_presentation(uniform_tree_diagram(2, n), n);
    p.builder = "cantor_level_raw";
    p.input_hash = fnv1a64(p.builder + "|" + std::to_string(n));
    return p;
  }

  // Reduced form: generator p at level one; per deeper level one chosen
  // subprojection generator for each parent pair, complements affine.
  std::vector<GeneratorSymbol> symbols{{0, "p", true}};
  std::vector<std::vector<std::string>> multi{{"1", "2"}};
  for (int m = 2; m <= n; ++m) {
    std::vector<std::string> next;
    for (const auto& s : multi.back())
      for (const char* d : {"1", "2"}) next.push_back(s + d);
    multi.push_back(std::move(next));
  }
  std::vector<int> choice_first(n + 1, 0);
  for (int m = 2; m <= n; ++m) {
    choice_first[m] = static_cast<int>(symbols.size());
    const auto& prev = multi[m - 2];
    const int k = static_cast<int>(prev.size());
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        std::string name = m == 2 ? "q" + std::to_string(i * k + j + 1)
                                  : "q" + std::to_string(m) + "_" + prev[i] + "_" + prev[j];
        symbols.push_back({static_cast<int>(symbols.size()), name, true});
      }
  }
  GeneratorSetPtr gens = make_generators(std::move(symbols));

  const NCPolynomial one = NCPolynomial::constant(gens, 1);
  const NCPolynomial p0 = NCPolynomial::generator(gens, 0);
  std::vector<MagicBlock> blocks;
  blocks.push_back({"level 1", 2, 2, {p0, one - p0, one - p0, p0}});

  std::vector<NCPolynomial> rels{p0 * p0 - p0};
  for (int m = 2; m <= n; ++m) {
    const MagicBlock& prev = blocks.back();
    const int k = prev.rows;
    MagicBlock block{"level " + std::to_string(m), 2 * k, 2 * k, {}};
    block.entries.resize(4 * k * k, NCPolynomial(gens));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        const NCPolynomial parent = prev.at(i, j);
        const NCPolynomial c = NCPolynomial::generator(gens, choice_first[m] + i * k + j);
        rels.push_back(c * c - c);
        rels.push_back(c * parent - c);
        rels.push_back(parent * c - c);
        for (int r = 0; r < 2; ++r)
          for (int s = 0; s < 2; ++s)
            block.entries[(2 * i + r) * 2 * k + (2 * j + s)] = (r == s) ? c : parent - c;
      }
    auto block_rels = magic_block_relations(block, gens);
    rels.insert(rels.end(), block_rels.begin(), block_rels.end());
    blocks.push_back(std::move(block));
  }
  {
    auto level1 = magic_block_relations(blocks.front(), gens);
    rels.insert(rels.end(), level1.begin(), level1.end());
  }
  return finish(gens, std::move(rels), std::move(blocks), "cantor_level_reduced",
                std::to_string(n));
}

Presentation cantor_limit_presentation(int depth) {
  if (depth < 1) throw DomainError("cantor limit needs depth >= 1");
  std::vector<GeneratorSymbol> symbols{{0, "p", true}};
  std::vector<std::string> words{""};
  std::map<std::string, int> id_of{{"", 0}};
  for (int k = 1; k <= depth; ++k) {
    std::vector<std::string> next;
    for (const auto& w : words)
      if (static_cast<int>(w.size()) == k - 1)
        for (char d = '1'; d <= '4'; ++d) {
          std::string m = w + d;
          id_of[m] = static_cast<int>(symbols.size());
          symbols.push_back({static_cast<int>(symbols.size()), "p_" + m, true});
          next.push_back(m);
        }
    words.insert(words.end(), next.begin(), next.end());
  }
  GeneratorSetPtr gens = make_generators(std::move(symbols));

  std::vector<NCPolynomial> rels;
  for (int id = 0; id < gens->size(); ++id) {
    const NCPolynomial g = NCPolynomial::generator(gens, id);
    rels.push_back(g * g - g);
  }
  for (const auto& w : words) {
    if (w.empty()) continue;
    const std::string parent_word = w.substr(0, w.size() - 1);
    const NCPolynomial child = NCPolynomial::generator(gens, id_of.at(w));
    const NCPolynomial parent = NCPolynomial::generator(gens, id_of.at(parent_word));
    const char last = w.back();
    if (last == '1' || last == '2') {
      rels.push_back(child * parent - child);
      rels.push_back(parent * child - child);
    } else {
      rels.push_back(child * parent);
      rels.push_back(parent * child);
    }
  }
  return finish(gens, std::move(rels), {}, "cantor_limit", std::to_string(depth));
}

NCPolynomial substitute(const NCPolynomial& p, const std::map<int, NCPolynomial>& images,
                        GeneratorSetPtr target) {
  NCPolynomial out(target);
  for (const auto& [w, c] : p.terms()) {
    NCPolynomial prod = NCPolynomial::constant(target, c);
    for (const Letter& l : w) {
      auto it = images.find(l.gen);
      if (it == images.end()) throw DomainError("connecting map misses a generator image");
      prod = prod * (l.star ? it->second.star() : it->second);
    }
    out += prod;
  }
  return out;
}

Presentation inductive_limit_assemble(const std::vector<Presentation>& levels,
                                      const std::vector<ConnectingMap>& maps) {
  if (levels.empty()) throw DomainError("no levels to assemble");
  if (maps.size() + 1 != levels.size())
    throw DomainError("need exactly one connecting map per consecutive pair");

  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (static_cast<int>(maps[k].images.size()) != levels[k].gens->size())
      throw DomainError("connecting map must cover every source generator");
    for (const auto& [id, image] : maps[k].images)
      if (!image.is_affine())
        throw DomainError("image of '" + levels[k].gens->at(id).name + "' is not affine");
  }

  // Every substituted source relation must already hold in the next level.
  for (std::size_t k = 0; k < maps.size(); ++k) {
    Rewriter target(levels[k + 1].gens, levels[k + 1].relations, 4);
    for (const auto& rel : levels[k].relations.relations) {
      const NCPolynomial image = substitute(rel, maps[k].images, levels[k + 1].gens);
      if (!target.reduce(image).is_zero)
        throw DomainError("connecting map violates source relation: " + rel.text() +
                          " (image " + image.text() + ")");
    }
  }

  // Compose images down to the final level.
  const std::size_t last = levels.size() - 1;
  std::vector<std::map<int, NCPolynomial>> to_final(levels.size());
  for (int id = 0; id < levels[last].gens->size(); ++id)
    to_final[last].emplace(id, NCPolynomial::generator(levels[last].gens, id));
  for (std::size_t k = last; k-- > 0;)
    for (const auto& [id, image] : maps[k].images)
      to_final[k].emplace(id, substitute(image, to_final[k + 1], levels[last].gens));

  std::vector<NCPolynomial> rels = levels[last].relations.relations;
  for (std::size_t k = 0; k < last; ++k)
    for (const auto& rel : levels[k].relations.relations)
      rels.push_back(substitute(rel, to_final[k], levels[last].gens));

  std::vector<MagicBlock> blocks = levels[last].blocks;
  for (std::size_t k = 0; k < last; ++k)
    for (const auto& b : levels[k].blocks) {
      const bool label_taken = std::any_of(blocks.begin(), blocks.end(),
                                           [&](const MagicBlock& x) { return x.label == b.label; });
      if (label_taken) continue;
      MagicBlock imported{b.label, b.rows, b.cols, {}};
      for (const auto& e : b.entries)
        imported.entries.push_back(substitute(e, to_final[k], levels[last].gens));
      blocks.push_back(std::move(imported));
    }

  std::string seed;
  for (const auto& l : levels) seed += l.builder + ":" + std::to_string(l.input_hash) + ";";
  return finish(levels[last].gens, std::move(rels), std::move(blocks), "inductive_limit", seed);
}

ConnectingMap identity_connecting_map(const Presentation& source, const Presentation& target) {
  ConnectingMap map;
  for (int id = 0; id < source.gens->size(); ++id) {
    const int tid = target.gens->id_of(source.gens->at(id).name);
    if (tid < 0)
      throw DomainError("target misses generator '" + source.gens->at(id).name + "'");
    map.images.emplace(id, NCPolynomial::generator(target.gens, tid));
  }
  return map;
}

std::vector<ConnectingMap> cantor_connecting_maps(const std::vector<Presentation>& towers) {
  std::vector<ConnectingMap> maps;
  for (std::size_t k = 0; k + 1 < towers.size(); ++k) {
    const Presentation& src = towers[k];
    const Presentation& dst = towers[k + 1];
    ConnectingMap map;
    const int top = static_cast<int>(k) + 1;
    for (int id = 0; id < src.gens->size(); ++id) {
      const std::string& name = src.gens->at(id).name;
      const int level = name[1] - '0';
      if (level < top) {
        map.images.emplace(id, NCPolynomial::generator(dst.gens, dst.gens->id_of(name)));
        continue;
      }
      // a<m>_I_J -> a<m+1>_I1_J1 + a<m+1>_I2_J1
      const auto us = name.find('_');
      const auto vs = name.find('_', us + 1);
      const std::string i = name.substr(us + 1, vs - us - 1);
      const std::string j = name.substr(vs + 1);
      const std::string stem = "a" + std::to_string(level + 1) + "_";
      NCPolynomial image(dst.gens);
      for (const char* r : {"1", "2"})
        image += NCPolynomial::generator(dst.gens, dst.gens->id_of(stem + i + r + "_" + j + "1"));
      map.images.emplace(id, std::move(image));
    }
    maps.push_back(std::move(map));
  }
  return maps;
}

}  // namespace qsym
