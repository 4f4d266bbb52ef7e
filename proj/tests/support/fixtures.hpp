#pragma once

// Catalog entries with their fusion ring and center, built once per process.

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "mtc/catalog.hpp"
#include "mtc/center.hpp"
#include "mtc/fusion_ring.hpp"
#include "mtc/indicators.hpp"

namespace mtc::testing {

struct Bundle {
  std::string name;
  ModularData md;
  FusionRing fr;
  CenterData cd;
};

inline const Bundle& bundle(const std::string& name) {
  static std::mutex mutex;
  static std::map<std::string, std::unique_ptr<Bundle>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[name];
  if (!slot) {
    auto b = std::make_unique<Bundle>();
    b->name = name;
    b->md = catalog(name);
    b->fr = verlinde(b->md);
    b->cd = deligne_square(b->md, b->fr);
    slot = std::move(b);
  }
  return *slot;
}

/// Fixtures small enough for exhaustive sweeps over every center simple.
inline const std::vector<std::string>& small_fixtures() {
  static const std::vector<std::string> v = {"vec", "semion", "toric-code", "fibonacci"};
  return v;
}

}  // namespace mtc::testing
