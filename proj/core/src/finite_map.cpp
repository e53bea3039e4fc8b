#include "elliskernel/finite_map.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace elliskernel {

FiniteMap::FiniteMap(std::vector<std::uint8_t> table) : table_(std::move(table)) {
  for (std::uint8_t v : table_) {
    if (v >= table_.size()) {
      throw std::invalid_argument("FiniteMap: value out of range");
    }
  }
}

FiniteMap FiniteMap::identity(std::size_t n) {
  std::vector<std::uint8_t> t(n);
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = static_cast<std::uint8_t>(i);
  }
  return FiniteMap(std::move(t));
}

FiniteMap FiniteMap::after(const FiniteMap& g) const {
  assert(degree() == g.degree());
  std::vector<std::uint8_t> t(degree());
  for (std::size_t x = 0; x < degree(); ++x) {
    t[x] = table_[g.table_[x]];
  }
  return FiniteMap(std::move(t));
}

std::size_t FiniteMap::rank() const { return image().size(); }

std::vector<std::uint8_t> FiniteMap::image() const {
  std::vector<std::uint8_t> im(table_);
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return im;
}

bool FiniteMap::is_idempotent() const { return after(*this) == *this; }

std::vector<std::uint8_t> FiniteMap::kernel_signature() const {
  std::vector<std::uint8_t> sig(degree());
  std::vector<int> first_of_value(degree(), -1);
  for (std::size_t i = 0; i < degree(); ++i) {
    int& f = first_of_value[table_[i]];
    if (f < 0) {
      f = static_cast<int>(i);
    }
    sig[i] = static_cast<std::uint8_t>(f);
  }
  return sig;
}

FiniteMap omega_power(const FiniteMap& f) {
  IterationProfile pr = iteration_profile(f);
  unsigned m = pr.period;
  while (m < pr.tail) {
    m += pr.period;
  }
  FiniteMap p = f;
  for (unsigned i = 1; i < m; ++i) {
    p = p.after(f);
  }
  assert(p.is_idempotent());
  return p;
}

IterationProfile iteration_profile(const FiniteMap& f) {
  std::vector<FiniteMap> powers{f};
  FiniteMap cur = f;
  for (;;) {
    cur = cur.after(f);
    for (std::size_t t = 0; t < powers.size(); ++t) {
      if (powers[t] == cur) {
        return IterationProfile{static_cast<unsigned>(t + 1),
                                static_cast<unsigned>(powers.size() - t)};
      }
    }
    powers.push_back(cur);
  }
}

}  // namespace elliskernel
