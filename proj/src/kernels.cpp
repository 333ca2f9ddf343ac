#include "varrest/kernels.hpp"

#include <atomic>

#include "kernels_backends.hpp"

namespace varrest::kernels {
namespace {

const Ops* best_supported() {
#if defined(__x86_64__) || defined(_M_X64)
  if (const Ops* ops = avx2_ops()) return ops;
#endif
#if defined(__aarch64__) || defined(_M_ARM64)
  if (const Ops* ops = neon_ops()) return ops;
#endif
  return &scalar_ops();
}

std::atomic<const Ops*>& active_slot() {
  static std::atomic<const Ops*> slot{best_supported()};
  return slot;
}

}  // namespace

const Ops& active() { return *active_slot().load(std::memory_order_relaxed); }

bool set_active(std::string_view name) {
  if (name == "auto") {
    active_slot().store(best_supported(), std::memory_order_relaxed);
    return true;
  }
  for (const Ops* ops : available_backends()) {
    if (name == ops->name) {
      active_slot().store(ops, std::memory_order_relaxed);
      return true;
    }
  }
  return false;
}

std::vector<const Ops*> available_backends() {
  std::vector<const Ops*> out{&scalar_ops()};
#if defined(__x86_64__) || defined(_M_X64)
  if (const Ops* ops = avx2_ops()) out.push_back(ops);
#endif
#if defined(__aarch64__) || defined(_M_ARM64)
  if (const Ops* ops = neon_ops()) out.push_back(ops);
#endif
  return out;
}

}  // namespace varrest::kernels
