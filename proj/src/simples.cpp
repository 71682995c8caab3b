#include "ncfin/simples.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>

namespace ncfin {

std::vector<std::vector<std::size_t>> subset_basis(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::string SimpleSpec::name() const {
  switch (kind) {
    case Kind::C: return "C" + std::to_string(k);
    case Kind::D0: return "D0";
    case Kind::D1: return "D1";
  }
  return "?";
}

namespace {

struct SubsetTables {
  std::vector<std::vector<std::vector<std::size_t>>> subsets;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index;
};

CatModule push_forward_module(Category cat, std::size_t k, std::size_t max_level) {
  if (k == 0) throw std::invalid_argument("C_k needs k >= 1");
  auto tables = std::make_shared<SubsetTables>();
  std::vector<std::size_t> dims(max_level + 1);
  tables->subsets.resize(max_level + 1);
  tables->index.resize(max_level + 1);
  for (std::size_t n = 0; n <= max_level; ++n) {
    tables->subsets[n] = subset_basis(n, k);
    dims[n] = tables->subsets[n].size();
    for (std::size_t j = 0; j < dims[n]; ++j) tables->index[n].emplace(tables->subsets[n][j], j);
  }
  return CatModule::from_rule(cat, max_level, std::move(dims), [tables, k](const NMor& f) {
    const auto& src = tables->subsets[f.dom()];
    Matrix out(tables->subsets[f.cod()].size(), src.size());
    std::vector<std::size_t> image;
    for (std::size_t j = 0; j < src.size(); ++j) {
      image.clear();
      for (std::size_t x : src[j]) image.push_back(f.map()(x));
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      if (image.size() == k) out(tables->index[f.cod()].at(image), j) = 1;
    }
    return out;
  });
}

}  // namespace

CatModule make_simple(SimpleSpec which, std::size_t max_level) {
  switch (which.kind) {
    case SimpleSpec::Kind::C:
      return push_forward_module(Category::N, which.k, max_level);
    case SimpleSpec::Kind::D1: {
      std::vector<std::size_t> dims(max_level + 1, 1);
      dims[0] = 0;
      return CatModule::from_rule(Category::N, max_level, std::move(dims), [](const NMor& f) {
        return f.dom() == 0 ? Matrix(f.cod() == 0 ? 0 : 1, 0) : Matrix::identity(1);
      });
    }
    case SimpleSpec::Kind::D0: {
      std::vector<std::size_t> dims(max_level + 1, 0);
      dims[0] = 1;
      return CatModule::from_rule(Category::N, max_level, std::move(dims), [](const NMor& f) {
        // Only id[0] lands in [0].
        Matrix out(f.cod() == 0 ? 1 : 0, f.dom() == 0 ? 1 : 0);
        if (f.cod() == 0) out(0, 0) = 1;
        return out;
      });
    }
  }
  throw std::logic_error("unreachable");
}

CatModule subset_module_f(std::size_t k, std::size_t max_level) {
  return push_forward_module(Category::F, k, max_level);
}

CatModule fiber_sign_module(std::size_t max_level) {
  std::vector<std::size_t> dims(max_level + 1, 1);
  return CatModule::from_rule(Category::N, max_level, std::move(dims), [](const NMor& f) {
    int sign = 1;
    for (const auto& fib : f.fibers())
      for (std::size_t i = 0; i < fib.size(); ++i)
        for (std::size_t j = i + 1; j < fib.size(); ++j)
          if (fib[i] > fib[j]) sign = -sign;
    Matrix out(1, 1);
    out(0, 0) = sign;
    return out;
  });
}

DescentReport descends_through_phi(const CatModule& v, std::size_t up_to) {
  if (v.category() != Category::N) throw std::invalid_argument("descends_through_phi needs an N-module");
  DescentReport report;
  up_to = std::min(up_to, v.max_level());
  for (std::size_t m = 0; m <= up_to; ++m)
    for (std::size_t n = 0; n <= up_to; ++n) {
      // Enumeration is sorted by values first, so lifts of one set map are adjacent.
      std::vector<NMor> homs = enumerate_hom(Category::N, m, n);
      std::size_t start = 0;
      while (start < homs.size()) {
        std::size_t end = start + 1;
        while (end < homs.size() && homs[end].map() == homs[start].map()) ++end;
        if (end - start > 1) {
          Matrix reference = v.act(homs[start]);
          for (std::size_t j = start + 1; j < end; ++j) {
            ++report.pairs_checked;
            if (v.act(homs[j]) != reference) {
              report.pass = false;
              report.witness = "f = " + format_morphism(homs[start]) + ", f' = " + format_morphism(homs[j]) +
                               ": equal underlying maps, different actions";
              return report;
            }
          }
        }
        start = end;
      }
    }
  return report;
}

}  // namespace ncfin
