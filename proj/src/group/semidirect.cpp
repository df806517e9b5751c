#include "galmod/group/semidirect.hpp"

#include "galmod/error.hpp"

namespace galmod {

namespace {

void check_compatible(const SemidirectElement& a, const SemidirectElement& b) {
  if (!(a.ctx == b.ctx)) throw Error(ErrorKind::ContextMismatch, "semidirect elements over different groups");
  if (a.rank() != b.rank()) throw Error(ErrorKind::DimensionMismatch, "semidirect elements of different rank");
}

}  // namespace

SemidirectElement semidirect_identity(const GroupContext& ctx, std::size_t k) {
  return {ctx, std::vector<GroupAlgebraElement>(k, GroupAlgebraElement(ctx)), 0};
}

SemidirectElement multiply(const SemidirectElement& a, const SemidirectElement& b) {
  check_compatible(a, b);
  SemidirectElement out{a.ctx, {}, (a.j + b.j) % a.ctx.order()};
  out.m.reserve(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) out.m.push_back(a.m[i] + b.m[i].shifted(a.j));
  return out;
}

SemidirectElement inverse(const SemidirectElement& a) {
  SemidirectElement out{a.ctx, {}, (a.ctx.order() - a.j) % a.ctx.order()};
  for (const auto& x : a.m) out.m.push_back(-x.shifted(-static_cast<std::int64_t>(a.j)));
  return out;
}

SemidirectElement power(const SemidirectElement& a, std::int64_t e) {
  SemidirectElement base = e < 0 ? inverse(a) : a;
  std::uint64_t ue = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  SemidirectElement result = semidirect_identity(a.ctx, a.rank());
  while (ue > 0) {
    if (ue & 1) result = multiply(result, base);
    ue >>= 1;
    if (ue > 0) base = multiply(base, base);
  }
  return result;
}

std::uint64_t element_order(const SemidirectElement& a) {
  const SemidirectElement id = semidirect_identity(a.ctx, a.rank());
  SemidirectElement x = a;
  std::uint64_t e = 1;
  while (!(x == id)) {
    x = multiply(x, a);
    ++e;
  }
  return e;
}

std::uint64_t semidirect_order(const GroupContext& ctx, std::size_t k) {
  const std::uint64_t digits = k * ctx.order() + ctx.n();
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < digits; ++i) {
    if (r > (std::uint64_t{1} << 62) / ctx.p()) {
      throw Error(ErrorKind::TooLarge, "group order p^" + std::to_string(digits) + " exceeds 2^62");
    }
    r *= ctx.p();
  }
  return r;
}

SemidirectElement element_from_index(const GroupContext& ctx, std::size_t k, std::uint64_t index) {
  if (index >= semidirect_order(ctx, k)) throw Error(ErrorKind::OutOfRange, "element index out of range");
  SemidirectElement out{ctx, {}, 0};
  for (std::size_t i = 0; i < k; ++i) {
    VectorFp c(ctx.order());
    for (auto& x : c) {
      x = static_cast<std::uint32_t>(index % ctx.p());
      index /= ctx.p();
    }
    out.m.emplace_back(ctx, std::move(c));
  }
  out.j = static_cast<std::uint32_t>(index);
  return out;
}

std::uint64_t element_index(const SemidirectElement& a) {
  const std::uint64_t p = a.ctx.p();
  std::uint64_t index = a.j;
  for (std::size_t i = a.rank(); i-- > 0;) {
    const auto& c = a.m[i].coeffs();
    for (std::size_t s = c.size(); s-- > 0;) index = index * p + c[s];
  }
  return index;
}

nlohmann::json to_json(const SemidirectElement& a) {
  nlohmann::json m = nlohmann::json::array();
  for (const auto& x : a.m) m.push_back(x.coeffs());
  return {{"m", std::move(m)}, {"j", a.j}};
}

}  // namespace galmod
