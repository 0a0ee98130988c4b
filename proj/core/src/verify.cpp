#include "sl2c3/verify.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <thread>

#include "sl2c3/decompose.hpp"
#include "sl2c3/tensor.hpp"

namespace sl2c3 {

std::vector<ModuleParams> module_list(const Field& f) {
  std::vector<ModuleParams> out{ModuleParams::one(), ModuleParams::two()};
  const auto els = f.elements();
  for (const auto& b : els)
    for (const auto& c : els)
      for (const auto& d : els)
        if (is_admissible(b, c, d)) out.push_back(ModuleParams::T(b, c, d));
  for (const auto& b : els)
    if (!b.is_zero()) out.push_back(ModuleParams::Tt(b, b.inv(), f.zero()));
  return out;
}

std::vector<ParamPair> all_pairs(const Field& f) {
  const auto mods = module_list(f);
  std::vector<ParamPair> out;
  out.reserve(mods.size() * (mods.size() + 1) / 2);
  for (std::size_t i = 0; i < mods.size(); ++i)
    for (std::size_t j = i; j < mods.size(); ++j) out.emplace_back(mods[i], mods[j]);
  return out;
}

HittingSet hitting_set(const Field& f) {
  const auto mods = module_list(f);
  std::map<CaseId, ParamPair> first;
  for (std::size_t i = 0; i < mods.size(); ++i)
    for (std::size_t j = i; j < mods.size(); ++j) {
      const CaseId id = classify(mods[i], mods[j], f);
      if (!first.count(id)) first.emplace(id, ParamPair{mods[i], mods[j]});
    }
  HittingSet hs;
  for (const auto& row : table_rows()) {
    if (row.id.row.find("printed caption") != std::string::npos) continue;
    auto it = first.find(row.id);
    if (it == first.end())
      hs.unreached.push_back(row.id);
    else
      hs.pairs.push_back(it->second);
  }
  return hs;
}

std::vector<ParamPair> sample_pairs(const Field& f, int m, std::uint64_t seed) {
  const auto mods = module_list(f);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, mods.size() - 1);
  std::vector<ParamPair> out;
  out.reserve(m);
  for (int t = 0; t < m; ++t) {
    const std::size_t i = pick(rng);
    const std::size_t j = pick(rng);
    out.emplace_back(mods[i], mods[j]);
  }
  return out;
}

PairRecord run_pair(const ModuleParams& left, const ModuleParams& right, const Field& f, bool literal) {
  const auto t0 = std::chrono::steady_clock::now();
  PairRecord rec;
  rec.left = left;
  rec.right = right;
  rec.field_degree = f.degree();

  const Rep rep = tensor(build(left, f), build(right, f));
  try {
    const Decomposition d = decompose_lifting(rep);
    rec.engine = d.descriptor;
    rec.engine_degree = d.field_degree;
  } catch (const Error& e) {
    rec.engine_error = e.what();
  }

  const Prediction p = predict(left, right, f, literal);
  rec.id = p.id;
  rec.oracle = p.descriptor;
  rec.oracle_degree = p.field_degree;
  rec.oracle_error = p.error;

  if (rec.engine && rec.oracle) {
    const int k = std::lcm(rec.engine_degree, rec.oracle_degree);
    if (k <= 6) {
      const Field& g = gf(k);
      rec.match = descriptor_equal(rec.engine->lifted(g), rec.oracle->lifted(g));
    } else {
      rec.oracle_error = "engine and oracle need fields of degree " + std::to_string(rec.engine_degree) + " and " +
                         std::to_string(rec.oracle_degree) + " with no common field";
    }
  }

  const CubeScalars cs = cube_scalars(rep);
  const auto closed = product_cube_scalars(left, right, f, literal);
  rec.cube_match = cs.plus && cs.minus && *cs.plus == closed.first && *cs.minus == closed.second;
  const HwLw hl = hw_lw_vectors(rep);
  rec.hw_iff = cs.plus && (!hl.highest.empty()) == cs.plus->is_zero();
  rec.lw_iff = cs.minus && (!hl.lowest.empty()) == cs.minus->is_zero();

  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

std::vector<PairRecord> run_pairs(const std::vector<ParamPair>& pairs, const Field& f, bool literal, int jobs) {
  std::vector<PairRecord> out(pairs.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      try {
        out[i] = run_pair(pairs[i].first, pairs[i].second, f, literal);
      } catch (const std::exception& e) {
        out[i].left = pairs[i].first;
        out[i].right = pairs[i].second;
        out[i].field_degree = f.degree();
        out[i].engine_error = e.what();
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(pairs.size())));
  if (n == 1) {
    work();
    return out;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < n; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  return out;
}

bool failure_is_misprint(const PairRecord& r, bool literal) {
  if (!literal) return false;
  if (!r.match && !is_misprint_row(r.id)) return false;
  if (r.match && r.cube_match) return r.hw_iff && r.lw_iff;
  if (!r.cube_match) {
    // Only the printed subscript of the T (x) T plus-scalar is documented.
    const Field& f = gf(r.field_degree);
    if (product_cube_scalars(r.left, r.right, f, false) == product_cube_scalars(r.left, r.right, f, true)) return false;
  }
  return r.hw_iff && r.lw_iff;
}

}  // namespace sl2c3
