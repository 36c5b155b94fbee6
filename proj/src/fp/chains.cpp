#include "qplab/fp/chains.hpp"

#include <algorithm>
#include <map>

#include "qplab/errors.hpp"
#include "qplab/groups/subgroups.hpp"

namespace qplab::fp {

namespace {

Word substitute(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (int l : w) {
    const Word& img = images[std::abs(l) - 1];
    if (l > 0)
      out.insert(out.end(), img.begin(), img.end());
    else {
      Word inv = inverse(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(out);
}

int limit_for(int expected, int factor) {
  long long v = static_cast<long long>(std::max(expected, 1)) * factor;
  return static_cast<int>(std::min<long long>(std::max<long long>(v, 1000), kHardCosetCap));
}

}  // namespace

ChainResult subgroup_from_homomorphism_chain(const Presentation& delta, const std::vector<ChainStep>& chain,
                                             int coset_factor) {
  ChainResult res;
  // names of the current subgroup as words in Delta
  std::vector<std::string> prev_names = delta.gen_names;
  std::vector<Word> prev_in_delta;
  for (int g = 0; g < delta.ngens(); ++g) prev_in_delta.push_back({g + 1});
  std::vector<Word> current_gens;  // generators of the current subgroup (Delta words)
  int current_index = 1;

  for (const auto& step : chain) {
    if (!step.target) throw Error(ErrorCode::InvalidArgument, "chain step without target group");
    if (step.names.size() != step.images.size())
      throw Error(ErrorCode::InvalidArgument, "chain step '" + step.label + "': names and images differ in length");
    ChainStepResult sr;
    sr.label = step.label;
    Presentation prev_alphabet{prev_names, {}};
    std::vector<Word> named;
    if (step.words.empty()) {
      if (step.names.size() != prev_names.size())
        throw Error(ErrorCode::InvalidArgument, "chain step '" + step.label + "' needs words for its names");
      named = prev_in_delta;
    } else {
      if (step.words.size() != step.names.size())
        throw Error(ErrorCode::InvalidArgument, "chain step '" + step.label + "': names and words differ in length");
      for (const auto& w : step.words) named.push_back(substitute(prev_alphabet.parse_word(w), prev_in_delta));
    }
    sr.named_in_delta = named;

    // The names must generate the current subgroup: same index and each
    // name lies in it.
    CosetTable tn = todd_coxeter(delta, named, limit_for(current_index, coset_factor));
    sr.index_of_named = tn.ncosets;
    if (!current_gens.empty() || current_index != 1) {
      CosetTable tc = todd_coxeter(delta, current_gens, limit_for(current_index, coset_factor));
      for (const auto& w : named)
        if (tc.act(0, w) != 0)
          throw Error(ErrorCode::ChainInconsistent, "step '" + step.label + "': a named element is not in the subgroup");
    }
    if (tn.ncosets != current_index)
      throw Error(ErrorCode::ChainInconsistent, "step '" + step.label + "': names generate a subgroup of index " +
                                                    std::to_string(tn.ncosets) + ", expected " +
                                                    std::to_string(current_index));

    // Schreier transversal of the right cosets L h, h in the image.
    const auto& T = *step.target;
    std::vector<int> Lset = step.target_subgroup.empty() ? std::vector<int>{0} : step.target_subgroup;
    std::sort(Lset.begin(), Lset.end());
    auto L = groups::subgroup_generated(T, Lset);
    if (L.order() != static_cast<int>(Lset.size()))
      throw Error(ErrorCode::InvalidArgument, "step '" + step.label + "': target subgroup is not closed");
    // coset key: the sorted set L h, identified by its minimal element
    auto key = [&](int h) {
      int mn = T.order();
      for (int l : L.elements) mn = std::min(mn, T.mul(l, h));
      return mn;
    };
    std::map<int, int> coset_id;
    std::vector<int> coset_elem;
    std::vector<Word> coset_word;  // in the names' alphabet
    coset_id[key(0)] = 0;
    coset_elem.push_back(0);
    coset_word.push_back({});
    const int k = static_cast<int>(step.names.size());
    std::vector<Word> schreier;  // in the names' alphabet
    for (std::size_t h = 0; h < coset_elem.size(); ++h) {
      for (int i = 0; i < k; ++i) {
        for (int sgn : {1, -1}) {
          int img = sgn > 0 ? step.images[i] : T.inv(step.images[i]);
          int e = T.mul(coset_elem[h], img);
          int kk = key(e);
          Word w = coset_word[h];
          w.push_back(sgn * (i + 1));
          auto it = coset_id.find(kk);
          if (it == coset_id.end()) {
            coset_id[kk] = static_cast<int>(coset_elem.size());
            coset_elem.push_back(e);
            coset_word.push_back(free_reduce(w));
          } else if (sgn > 0) {
            Word s = free_reduce(concat(w, inverse(coset_word[it->second])));
            if (!s.empty()) schreier.push_back(s);
          }
        }
      }
    }
    std::vector<int> img_elems;
    for (int i = 0; i < k; ++i) img_elems.push_back(step.images[i]);
    sr.image_order = groups::subgroup_generated(T, img_elems).order();
    sr.relative_index = static_cast<int>(coset_elem.size());

    std::vector<Word> next;
    for (const auto& s : schreier) {
      Word d = substitute(s, named);
      if (!d.empty()) next.push_back(d);
    }
    // dedupe
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    const int expected = current_index * sr.relative_index;
    CosetTable tk = todd_coxeter(delta, next, limit_for(expected, coset_factor));
    sr.index_after = tk.ncosets;
    sr.consistent = tk.ncosets == expected;
    res.steps.push_back(sr);
    if (!sr.consistent)
      throw Error(ErrorCode::ChainInconsistent, "step '" + step.label + "': preimage has index " +
                                                    std::to_string(tk.ncosets) + ", expected " + std::to_string(expected) +
                                                    " (map not well defined)");
    current_gens = next;
    current_index = expected;
    res.table = std::move(tk);
    prev_names = step.names;
    prev_in_delta = named;
  }
  res.generators = current_gens;
  res.index = current_index;
  if (chain.empty()) res.table = todd_coxeter(delta, prev_in_delta, 16);
  return res;
}

}  // namespace qplab::fp
