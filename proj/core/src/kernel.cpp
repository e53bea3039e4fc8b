#include "elliskernel/kernel.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "elliskernel/errors.hpp"

namespace elliskernel {

namespace {

std::vector<unsigned long long> prime_divisors(unsigned long long n) {
  std::vector<unsigned long long> out;
  for (unsigned long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) {
        n /= p;
      }
    }
  }
  if (n > 1) {
    out.push_back(n);
  }
  return out;
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    f *= i;
  }
  return f;
}

std::string map_name(const Substitution& s, const FiniteMap& f) {
  std::string out;
  for (std::uint8_t v : f.table()) {
    out += s.letter_name(v);
  }
  return out;
}

std::string seed_map_name(const FiniteMap& f) {
  std::string out = "s";
  for (std::size_t i = 0; i < f.degree(); ++i) {
    if (i) {
      out += '.';
    }
    out += std::to_string(f.table()[i]);
  }
  return out;
}

}  // namespace

MefDescriptor mef_descriptor(const Substitution& s) {
  if (!s.length()) {
    fail(errc::not_constant_length, "mef_descriptor requires constant length");
  }
  return MefDescriptor{prime_divisors(*s.length()), height(s)};
}

KernelData build_kernel(const Substitution& s) {
  if (!s.length()) {
    fail(errc::not_constant_length, "build_kernel requires constant length");
  }
  std::size_t c = column_rank(s);
  if (c == 1) {
    fail(errc::rank_one, "build_kernel: column rank 1");
  }
  if (!is_simplified(s)) {
    if (!is_quasi_bijective(s)) {
      fail(errc::not_quasi_bijective, "build_kernel: not quasi-bijective");
    }
    fail(errc::not_simplified, "build_kernel: substitution is not in simplified form");
  }

  std::vector<FiniteMap> cols = expand_columns(s);
  TransformationSemigroup S = TransformationSemigroup::close(cols);
  FiniteMap e_plus = cols.front();
  FiniteMap e_minus = cols.back();
  FiniteMap e_pm = corner_idempotent(S, e_plus, e_minus);
  FiniteMap e_mp = corner_idempotent(S, e_minus, e_plus);
  HClassGroup h_plus = h_class_group(S, e_plus);
  std::vector<FiniteMap> h_mp = h_class_members(S, e_minus, e_plus);
  FiniteMap phi = e_plus.after(e_minus);

  ConsecutivePairSet cp = consecutive_pairs(cols);
  std::vector<std::pair<FiniteMap, FiniteMap>> s2;
  for (const auto& [l, r] : cp.pairs) {
    if (std::find(h_mp.begin(), h_mp.end(), l) != h_mp.end() &&
        h_plus.contains(r)) {
      s2.emplace_back(l, r);
    }
  }

  std::vector<FiniteMap> index_set;
  for (const auto& [l, r] : s2) {
    FiniteMap i = l.after(h_plus.inverse_of(r));
    if (std::find(index_set.begin(), index_set.end(), i) == index_set.end()) {
      index_set.push_back(i);
    }
  }

  auto name = [&](const FiniteMap& f) { return map_name(s, f); };
  GroupTable group = GroupTable::from_h_class(h_plus, name);
  auto member_index = [&](const FiniteMap& f) {
    for (std::size_t i = 0; i < h_plus.members.size(); ++i) {
      if (h_plus.members[i] == f) {
        return static_cast<std::uint16_t>(i);
      }
    }
    throw std::logic_error("build_kernel: sandwich entry outside H+");
  };
  std::vector<std::string> col_labels;
  std::vector<std::uint16_t> row_plus, row_minus;
  for (const FiniteMap& i : index_set) {
    col_labels.push_back(name(i));
    row_plus.push_back(member_index(e_plus));
    row_minus.push_back(member_index(phi.after(i)));
  }
  ReesPresentation pres{group, {"+", "-"}, col_labels, {row_plus, row_minus}};

  return KernelData{s,    S,     e_plus,    e_minus, e_pm, e_mp,
                    phi,  h_plus, h_mp,     s2,      index_set, pres};
}

FibreAction fibre_action(const KernelData& k, const std::vector<Seed>& seeds) {
  std::map<Seed, std::uint8_t> seed_index;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    seed_index[seeds[i]] = static_cast<std::uint8_t>(i);
  }
  auto to_seed = [&](Letter left, Letter right) {
    auto it = seed_index.find(Seed{left, right});
    if (it == seed_index.end()) {
      fail(errc::seed_not_closed,
           "fibre_action: formula output " +
               k.substitution.render(Seed{left, right}) +
               " is not an allowed seed");
    }
    return it->second;
  };

  ReesSemigroup rs = enumerate(k.presentation);
  FibreAction out;
  out.seeds = seeds;
  out.maps.reserve(rs.size());
  for (const ReesElement& x : rs.elements()) {
    const FiniteMap& i = k.index_set[x.col];
    const FiniteMap& g = k.h_plus.members[x.g];
    std::vector<std::uint8_t> t(seeds.size());
    for (std::size_t sidx = 0; sidx < seeds.size(); ++sidx) {
      Letter a = seeds[sidx].left;
      Letter b = seeds[sidx].right;
      if (x.row == 0) {  // "+"
        Letter gb = g(b);
        t[sidx] = to_seed(i(gb), gb);
      } else {  // "-"
        Letter ga = g(k.phi(a));
        t[sidx] = to_seed(i(ga), ga);
      }
    }
    out.maps.emplace_back(std::move(t));
  }
  return out;
}

std::vector<FiniteMap> window_oracle(const Substitution& s, unsigned depth) {
  if (depth == 0) {
    throw std::invalid_argument("window_oracle: depth must be positive");
  }
  if (!s.length()) {
    fail(errc::not_constant_length, "window_oracle requires constant length");
  }
  std::vector<FiniteMap> cols = expand_columns(s);
  if (!cols.front().is_idempotent() || !cols.back().is_idempotent()) {
    fail(errc::not_simplified,
         "window_oracle: extreme columns must be idempotent");
  }
  FiniteMap e_plus = cols.front();
  FiniteMap e_minus = cols.back();
  std::vector<Seed> seeds = detail::fixed_point_seeds_unchecked(s);
  std::map<Seed, std::uint8_t> seed_index;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    seed_index[seeds[i]] = static_cast<std::uint8_t>(i);
  }
  auto to_seed = [&](Letter left, Letter right) {
    auto it = seed_index.find(Seed{left, right});
    if (it == seed_index.end()) {
      fail(errc::seed_not_closed, "window_oracle: window left the seed set");
    }
    return it->second;
  };

  std::set<FiniteMap> out;
  auto collect = [&](const std::pair<FiniteMap, FiniteMap>& pair) {
    const auto& [l, r] = pair;
    std::vector<std::uint8_t> fwd(seeds.size()), bwd(seeds.size());
    for (std::size_t sidx = 0; sidx < seeds.size(); ++sidx) {
      Letter a = seeds[sidx].left;
      Letter b = seeds[sidx].right;
      fwd[sidx] = to_seed(e_minus(l(b)), e_plus(r(b)));
      bwd[sidx] = to_seed(e_minus(l(a)), e_plus(r(a)));
    }
    out.insert(FiniteMap(std::move(fwd)));
    out.insert(FiniteMap(std::move(bwd)));
  };

  // Walk the expansion of theta^n level by level, keeping the distinct
  // columns and the distinct adjacent pairs: position i*l+j of the next
  // level is theta_j composed with column i, so the adjacent pairs are the
  // in-block pairs over every current column plus the block-boundary images
  // of the current pairs.
  std::set<FiniteMap> level_cols(cols.begin(), cols.end());
  std::set<std::pair<FiniteMap, FiniteMap>> level_pairs;
  for (std::size_t j = 1; j < cols.size(); ++j) {
    level_pairs.emplace(cols[j - 1], cols[j]);
  }
  for (const auto& p : level_pairs) {
    collect(p);
  }
  for (unsigned n = 2; n <= depth; ++n) {
    std::set<std::pair<FiniteMap, FiniteMap>> next_pairs;
    std::set<FiniteMap> next_cols;
    for (const FiniteMap& c : level_cols) {
      next_cols.insert(cols[0].after(c));
      for (std::size_t j = 1; j < cols.size(); ++j) {
        next_cols.insert(cols[j].after(c));
        next_pairs.emplace(cols[j - 1].after(c), cols[j].after(c));
      }
    }
    for (const auto& [l, r] : level_pairs) {
      next_pairs.emplace(cols.back().after(l), cols.front().after(r));
    }
    level_cols = std::move(next_cols);
    level_pairs = std::move(next_pairs);
    for (const auto& p : level_pairs) {
      collect(p);
    }
  }
  return std::vector<FiniteMap>(out.begin(), out.end());
}

NesFlags nes_check(const ReesPresentation& p, std::size_t action_degree) {
  std::vector<std::uint16_t> entries;
  for (const auto& row : p.sandwich) {
    entries.insert(entries.end(), row.begin(), row.end());
  }
  std::vector<std::uint16_t> ncl = p.group.normal_closure(entries);
  NesFlags flags;
  flags.nes_finite = ncl.size() == p.group.size();
  flags.full_symmetric = ncl.size() == factorial(action_degree);
  return flags;
}

NesFlags nes_check(const KernelData& k) {
  return nes_check(k.presentation, k.e_plus.rank());
}

ReesPresentation rees_decompose(
    const TransformationSemigroup& m,
    const std::function<std::string(const FiniteMap&)>& name) {
  std::size_t n = m.size();
  // Completely simple: every principal bilateral ideal is everything.
  for (std::uint32_t x = 0; x < n; ++x) {
    std::set<std::uint32_t> ideal{x};
    for (std::uint32_t a = 0; a < n; ++a) {
      ideal.insert(m.product(a, x));
      ideal.insert(m.product(x, a));
      for (std::uint32_t b = 0; b < n; ++b) {
        ideal.insert(m.product(m.product(a, x), b));
      }
    }
    if (ideal.size() != n) {
      fail(errc::not_completely_simple,
           "rees_decompose: the semigroup has a proper bilateral ideal");
    }
  }

  auto right_ideal = [&](std::uint32_t x) {
    std::set<std::uint32_t> s{x};
    for (std::uint32_t a = 0; a < n; ++a) {
      s.insert(m.product(x, a));
    }
    return s;
  };
  auto left_ideal = [&](std::uint32_t x) {
    std::set<std::uint32_t> s{x};
    for (std::uint32_t a = 0; a < n; ++a) {
      s.insert(m.product(a, x));
    }
    return s;
  };

  std::vector<std::set<std::uint32_t>> r_of(n), l_of(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    r_of[x] = right_ideal(x);
    l_of[x] = left_ideal(x);
  }
  // Class representatives in discovery order.
  std::vector<std::uint32_t> r_classes, l_classes;
  std::vector<std::size_t> r_id(n), l_id(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::size_t k = 0; k < r_classes.size(); ++k) {
      if (r_of[r_classes[k]] == r_of[x]) {
        r_id[x] = k;
        found = true;
        break;
      }
    }
    if (!found) {
      r_id[x] = r_classes.size();
      r_classes.push_back(x);
    }
    found = false;
    for (std::size_t k = 0; k < l_classes.size(); ++k) {
      if (l_of[l_classes[k]] == l_of[x]) {
        l_id[x] = k;
        found = true;
        break;
      }
    }
    if (!found) {
      l_id[x] = l_classes.size();
      l_classes.push_back(x);
    }
  }

  std::uint32_t e = n;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (m.product(x, x) == x) {
      e = x;
      break;
    }
  }
  if (e == n) {
    fail(errc::not_completely_simple, "rees_decompose: no idempotent");
  }
  std::size_t i0 = r_id[e];
  std::size_t l0 = l_id[e];

  auto h_class_rep = [&](std::size_t ri, std::size_t li) -> std::uint32_t {
    for (std::uint32_t x = 0; x < n; ++x) {
      if (r_id[x] == ri && l_id[x] == li) {
        return x;
      }
    }
    fail(errc::not_completely_simple, "rees_decompose: empty Green cell");
  };

  std::vector<std::uint32_t> col_reps(r_classes.size());  // r_i, in L-class of e
  std::vector<std::uint32_t> row_reps(l_classes.size());  // q_lambda, in R-class of e
  for (std::size_t i = 0; i < r_classes.size(); ++i) {
    col_reps[i] = i == i0 ? e : h_class_rep(i, l0);
  }
  for (std::size_t l = 0; l < l_classes.size(); ++l) {
    row_reps[l] = l == l0 ? e : h_class_rep(i0, l);
  }

  // The structure group H_e.
  std::vector<std::uint32_t> g_members;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (r_id[x] == i0 && l_id[x] == l0) {
      g_members.push_back(x);
    }
  }
  std::vector<int> g_index(n, -1);
  for (std::size_t i = 0; i < g_members.size(); ++i) {
    g_index[g_members[i]] = static_cast<int>(i);
  }
  std::size_t gs = g_members.size();
  std::vector<std::string> g_names(gs);
  std::vector<std::vector<std::uint16_t>> g_table(gs, std::vector<std::uint16_t>(gs));
  for (std::size_t a = 0; a < gs; ++a) {
    g_names[a] = name(m.elements()[g_members[a]]);
    for (std::size_t b = 0; b < gs; ++b) {
      int idx = g_index[m.product(g_members[a], g_members[b])];
      if (idx < 0) {
        fail(errc::not_completely_simple, "rees_decompose: H_e is not closed");
      }
      g_table[a][b] = static_cast<std::uint16_t>(idx);
    }
  }
  GroupTable group(std::move(g_names), std::move(g_table),
                   static_cast<std::uint16_t>(g_index[e]));

  std::vector<std::string> row_labels, col_labels;
  for (std::uint32_t q : row_reps) {
    row_labels.push_back(name(m.elements()[q]));
  }
  for (std::uint32_t r : col_reps) {
    col_labels.push_back(name(m.elements()[r]));
  }
  std::vector<std::vector<std::uint16_t>> sandwich(
      row_reps.size(), std::vector<std::uint16_t>(col_reps.size()));
  for (std::size_t l = 0; l < row_reps.size(); ++l) {
    for (std::size_t i = 0; i < col_reps.size(); ++i) {
      int idx = g_index[m.product(row_reps[l], col_reps[i])];
      if (idx < 0) {
        fail(errc::not_completely_simple,
             "rees_decompose: sandwich product escapes H_e");
      }
      sandwich[l][i] = static_cast<std::uint16_t>(idx);
    }
  }
  ReesPresentation pres{group, row_labels, col_labels, sandwich};

  // The decomposition map (i,g,lambda) -> r_i g q_lambda must be bijective.
  std::set<std::uint32_t> image;
  for (std::size_t i = 0; i < col_reps.size(); ++i) {
    for (std::uint32_t g : g_members) {
      for (std::size_t l = 0; l < row_reps.size(); ++l) {
        image.insert(m.product(m.product(col_reps[i], g), row_reps[l]));
      }
    }
  }
  if (image.size() != n) {
    fail(errc::not_completely_simple, "rees_decompose: grid map is not bijective");
  }
  return pres;
}

namespace {

// Smallest power with idempotent extreme columns and all seed cycles fixed;
// the rank condition of simplify is deliberately not required here.
unsigned coherence_exponent(const Substitution& s, unsigned max_power) {
  std::vector<FiniteMap> cols = expand_columns(s);
  IterationProfile pf = iteration_profile(cols.front());
  IterationProfile pl = iteration_profile(cols.back());
  unsigned long long step = std::lcm<unsigned long long>(pf.period, pl.period);
  Substitution probe = s;
  // Seed-cycle lengths via the simplified-form predicate on candidate powers.
  for (unsigned long long nn = step;; nn += step) {
    if (nn > max_power) {
      fail(errc::too_large, "analysis: power budget exceeded");
    }
    if (nn < std::max(pf.tail, pl.tail)) {
      continue;
    }
    Substitution cand = s.power(static_cast<unsigned>(nn));
    std::vector<FiniteMap> ccols = expand_columns(cand);
    if (!ccols.front().is_idempotent() || !ccols.back().is_idempotent()) {
      continue;
    }
    // All periodic seeds fixed?
    std::set<Word> two = language(cand, 2);
    const FiniteMap& first = ccols.front();
    const FiniteMap& last = ccols.back();
    bool ok = true;
    for (const Word& w : two) {
      Word x = w;
      for (std::size_t k = 0; k <= two.size(); ++k) {
        Word y(2, '\0');
        y[0] = static_cast<char>(last(static_cast<std::uint8_t>(x[0])));
        y[1] = static_cast<char>(first(static_cast<std::uint8_t>(x[1])));
        x = y;
      }
      Word y(2, '\0');
      y[0] = static_cast<char>(last(static_cast<std::uint8_t>(x[0])));
      y[1] = static_cast<char>(first(static_cast<std::uint8_t>(x[1])));
      if (y != x) {
        ok = false;
        break;
      }
    }
    if (ok) {
      return static_cast<unsigned>(nn);
    }
  }
}

std::vector<FiniteMap> stabilized_oracle(const Substitution& s, unsigned limit) {
  std::vector<FiniteMap> prev = window_oracle(s, 1);
  for (unsigned d = 2; d <= limit; ++d) {
    std::vector<FiniteMap> cur = window_oracle(s, d);
    if (cur == prev) {
      return cur;
    }
    prev = std::move(cur);
  }
  fail(errc::too_large, "window oracle did not stabilize within the depth limit");
}

std::string full_kernel_statement(const std::string& phi_desc) {
  return "M(I, G, {+,-}; A~" + phi_desc +
         ") where G extends the displayed structure group by the adic group "
         "Z_(l,h) and A~ takes the displayed sandwich values on the "
         "aut_eq-orbit of 0 and the identity on regular points";
}

}  // namespace

KernelReport kernel_report(const Substitution& s, const AnalyzeOptions& opt) {
  if (!s.length()) {
    fail(errc::not_constant_length, "analysis requires a constant-length substitution");
  }
  if (!is_primitive(s)) {
    fail(errc::not_primitive, "analysis requires a primitive substitution");
  }
  std::size_t bound = opt.complexity_bound.value_or(default_aperiodicity_bound(s));
  if (!is_aperiodic(s, bound)) {
    fail(errc::periodic, "analysis requires an aperiodic substitution");
  }
  std::size_t c = column_rank(s);
  if (c == 1) {
    fail(errc::rank_one, "analysis: column rank 1");
  }

  KernelReport rep;
  rep.mef = mef_descriptor(s);
  rep.aut_eq_orbit = opt.aut_eq_orbit;
  rep.notes = {
      "all groups are finite; topological normal closures are computed as "
      "plain normal closures",
      "full_symmetric is decided on the image of e+ inside the fixed-point "
      "fibre, not on the whole fibre",
  };

  if (is_quasi_bijective(s)) {
    SimplifyResult sim = simplify(s, opt.max_power);
    KernelData kd = build_kernel(sim.substitution);
    std::vector<Seed> seeds = fixed_point_seeds(sim.substitution);
    fibre_action(kd, seeds);  // validates seed closure
    NesFlags flags = nes_check(kd);
    rep.presentation = kd.presentation;
    for (std::uint16_t g : little_structure_group(kd.presentation)) {
      rep.gamma.push_back(kd.presentation.group.name(g));
    }
    rep.nes_finite = flags.nes_finite;
    rep.full_symmetric = flags.full_symmetric;
    rep.fibre_size = seeds.size();
    for (const Seed& sd : seeds) {
      rep.seeds.push_back(sim.substitution.render(sd));
    }
    rep.phi = map_name(sim.substitution, kd.phi);
    rep.exponent = sim.exponent;
    rep.method = "rees-structure";
    rep.full_kernel = full_kernel_statement("_phi, phi=" + rep.phi);
  } else {
    unsigned exponent = coherence_exponent(s, opt.max_power);
    Substitution sub = exponent == 1 ? s : s.power(exponent);
    std::vector<Seed> seeds = detail::fixed_point_seeds_unchecked(sub);
    std::vector<FiniteMap> maps = stabilized_oracle(sub, opt.oracle_depth_limit);
    TransformationSemigroup m = TransformationSemigroup::close(maps);
    ReesPresentation pres = rees_decompose(m, seed_map_name);
    // Degree of the faithful action: the identity idempotent's image size.
    std::size_t degree = 0;
    for (const FiniteMap& f : m.elements()) {
      if (f.is_idempotent()) {
        degree = f.rank();
        break;
      }
    }
    NesFlags flags = nes_check(pres, degree);
    rep.presentation = pres;
    for (std::uint16_t g : little_structure_group(pres)) {
      rep.gamma.push_back(pres.group.name(g));
    }
    rep.nes_finite = flags.nes_finite;
    rep.full_symmetric = flags.full_symmetric;
    rep.fibre_size = seeds.size();
    for (const Seed& sd : seeds) {
      rep.seeds.push_back(sub.render(sd));
    }
    rep.phi = "";
    rep.exponent = exponent;
    rep.method = "fibre-oracle";
    rep.full_kernel = full_kernel_statement("");
    rep.notes.push_back(
        "presentation obtained from the window-oracle fibre semigroup; the "
        "input is not quasi-bijective");
  }
  return rep;
}

const char* verdict_name(KernelVerdict v) {
  switch (v) {
    case KernelVerdict::algebraically_isomorphic:
      return "AlgebraicallyIsomorphicKernels";
    case KernelVerdict::not_isomorphic:
      return "NotIsomorphic";
    case KernelVerdict::inconclusive:
      return "Inconclusive";
  }
  return "?";
}

KernelComparison compare_kernels(const KernelReport& a, const KernelReport& b,
                                 std::size_t budget) {
  if (!a.full_symmetric || !b.full_symmetric) {
    return {KernelVerdict::inconclusive,
            "the normal closure of the little structure group is not the full "
            "symmetric group on at least one side; the comparison rule does "
            "not apply"};
  }
  if (!(a.mef == b.mef)) {
    return {KernelVerdict::not_isomorphic,
            "maximal equicontinuous factors differ"};
  }
  if (a.aut_eq_orbit != b.aut_eq_orbit) {
    return {KernelVerdict::not_isomorphic, "aut_eq orbit descriptors differ"};
  }
  ReesIsoResult iso = is_isomorphic(a.presentation, b.presentation, budget);
  if (iso.isomorphic) {
    return {KernelVerdict::algebraically_isomorphic,
            "equal MEF descriptors, equal aut_eq orbits, isomorphic "
            "fibre-kernel presentations"};
  }
  return {KernelVerdict::not_isomorphic,
          "fibre-kernel presentations are not isomorphic"};
}

}  // namespace elliskernel
