#include "subsum/group.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "bits.hpp"
#include "subsum/errors.hpp"

namespace subsum {

struct AbelianGroup::Impl {
  std::vector<std::uint32_t> factors;
  std::vector<std::uint32_t> strides;  // strides[k] == order
  std::uint32_t order = 1;
  std::size_t words = 1;
  std::uint64_t key = 0;
  std::uint64_t tail = 0;
  GroupOptions options;
  std::vector<std::uint32_t> neg;
  std::vector<std::uint32_t> dbl;
  // masks[c][a * words + w]: keep-mask for rotating component c by a; empty if uncached.
  std::vector<std::vector<std::uint64_t>> masks;

  void build_mask(std::size_t c, std::uint32_t a, std::span<std::uint64_t> out) const {
    std::fill(out.begin(), out.end(), 0);
    const std::uint64_t seg = strides[c + 1];
    const std::uint64_t shift = std::uint64_t{a} * strides[c];
    for (std::uint64_t start = 0; start < order; start += seg) {
      for (std::uint64_t p = start + shift; p < start + seg; ++p) bits::set(out, static_cast<std::uint32_t>(p));
    }
  }
};

namespace {

std::uint64_t structural_key(std::span<const std::uint32_t> factors) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(factors.size());
  for (auto d : factors) mix(d);
  return h;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t ipow(std::uint64_t p, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= p;
  return r;
}

void partitions(unsigned remaining, unsigned max_part, std::vector<unsigned>& prefix,
                std::vector<std::vector<unsigned>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<std::uint32_t> invariant_factors, GroupOptions options) {
  auto impl = std::make_shared<Impl>();
  impl->options = options;
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    const auto d = invariant_factors[i];
    if (d < 2) throw PreconditionError("invariant factors must be at least 2");
    if (i > 0 && d % invariant_factors[i - 1] != 0) {
      throw PreconditionError("invariant factors must form a divisibility chain");
    }
    order *= d;
    if (order > options.max_order || order > (std::uint64_t{1} << 31)) {
      throw PreconditionError("group order exceeds the configured maximum of " +
                              std::to_string(options.max_order));
    }
  }
  impl->factors = std::move(invariant_factors);
  impl->order = static_cast<std::uint32_t>(order);
  impl->words = bits::words_for(order);
  impl->tail = bits::tail_mask(order);
  impl->key = structural_key(impl->factors);

  const std::size_t k = impl->factors.size();
  impl->strides.resize(k + 1);
  impl->strides[0] = 1;
  for (std::size_t i = 0; i < k; ++i) impl->strides[i + 1] = impl->strides[i] * impl->factors[i];

  impl->neg.resize(impl->order);
  impl->dbl.resize(impl->order);
  std::vector<std::uint32_t> digits(k, 0);
  for (std::uint32_t x = 0; x < impl->order; ++x) {
    std::uint32_t n = 0;
    std::uint32_t d2 = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const auto di = impl->factors[i];
      n += ((di - digits[i]) % di) * impl->strides[i];
      d2 += ((2 * digits[i]) % di) * impl->strides[i];
    }
    impl->neg[x] = n;
    impl->dbl[x] = d2;
    for (std::size_t i = 0; i < k; ++i) {
      if (++digits[i] < impl->factors[i]) break;
      digits[i] = 0;
    }
  }

  if (k >= 2) {
    std::size_t need = 0;
    for (std::size_t c = 0; c + 1 < k; ++c) need += impl->factors[c] * impl->words;
    if (need <= options.mask_cache_words) {
      impl->masks.resize(k - 1);
      for (std::size_t c = 0; c + 1 < k; ++c) {
        auto& m = impl->masks[c];
        m.assign(impl->factors[c] * impl->words, 0);
        for (std::uint32_t a = 1; a < impl->factors[c]; ++a) {
          impl->build_mask(c, a, std::span(m).subspan(a * impl->words, impl->words));
        }
      }
    }
  }
  impl_ = std::move(impl);
}

AbelianGroup AbelianGroup::cyclic(std::uint32_t n, GroupOptions options) {
  if (n == 0) throw PreconditionError("cyclic group order must be positive");
  if (n == 1) return AbelianGroup({}, options);
  return AbelianGroup({n}, options);
}

AbelianGroup AbelianGroup::product_of_cyclic(std::span<const std::uint64_t> orders,
                                             GroupOptions options) {
  std::uint64_t total = 1;
  for (auto n : orders) {
    if (n == 0) throw PreconditionError("cyclic factor of order 0");
    if (n > options.max_order || total > options.max_order / n) {
      throw PreconditionError("group order exceeds the configured maximum of " +
                              std::to_string(options.max_order));
    }
    total *= n;
  }
  // prime -> exponents of its cyclic p-components
  std::map<std::uint64_t, std::vector<unsigned>> components;
  for (auto n : orders) {
    for (auto [p, e] : factorize(n)) components[p].push_back(e);
  }
  std::size_t k = 0;
  for (auto& [p, exps] : components) {
    std::sort(exps.begin(), exps.end(), std::greater<>());
    k = std::max(k, exps.size());
  }
  // factors[k-1] collects the largest power of each prime, factors[k-2] the next, ...
  std::vector<std::uint32_t> factors(k, 1);
  for (const auto& [p, exps] : components) {
    for (std::size_t j = 0; j < exps.size(); ++j) {
      factors[k - 1 - j] *= static_cast<std::uint32_t>(ipow(p, exps[j]));
    }
  }
  return AbelianGroup(std::move(factors), options);
}

std::span<const std::uint32_t> AbelianGroup::invariant_factors() const noexcept { return impl_->factors; }
std::uint32_t AbelianGroup::order() const noexcept { return impl_->order; }
std::size_t AbelianGroup::rank() const noexcept { return impl_->factors.size(); }
std::uint64_t AbelianGroup::key() const noexcept { return impl_->key; }
std::size_t AbelianGroup::words() const noexcept { return impl_->words; }
const GroupOptions& AbelianGroup::options() const noexcept { return impl_->options; }

std::string AbelianGroup::to_string() const {
  if (impl_->factors.empty()) return "Z1";
  std::string out;
  for (std::size_t i = 0; i < impl_->factors.size(); ++i) {
    if (i > 0) out += 'x';
    out += 'Z';
    out += std::to_string(impl_->factors[i]);
  }
  return out;
}

GroupElement AbelianGroup::element(std::uint32_t index) const {
  if (index >= impl_->order) {
    throw PreconditionError("element index " + std::to_string(index) + " out of range for " + to_string());
  }
  return {index, impl_->key};
}

GroupElement AbelianGroup::from_tuple(std::span<const std::uint32_t> coords) const {
  if (coords.size() != impl_->factors.size()) {
    throw PreconditionError("tuple has " + std::to_string(coords.size()) + " coordinates, " + to_string() +
                            " needs " + std::to_string(impl_->factors.size()));
  }
  std::uint32_t index = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] >= impl_->factors[i]) throw PreconditionError("tuple coordinate out of range");
    index += coords[i] * impl_->strides[i];
  }
  return {index, impl_->key};
}

std::vector<std::uint32_t> AbelianGroup::to_tuple(GroupElement x) const {
  require_member(x);
  std::vector<std::uint32_t> out(impl_->factors.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (x.index / impl_->strides[i]) % impl_->factors[i];
  return out;
}

void AbelianGroup::require_member(GroupElement x) const {
  if (x.group_key != impl_->key) throw ForeignElementError("element belongs to a different group than " + to_string());
  if (x.index >= impl_->order) throw PreconditionError("element index out of range for " + to_string());
}

GroupElement AbelianGroup::add(GroupElement x, GroupElement y) const {
  require_member(x);
  require_member(y);
  return {add_index(x.index, y.index), impl_->key};
}

GroupElement AbelianGroup::neg(GroupElement x) const {
  require_member(x);
  return {impl_->neg[x.index], impl_->key};
}

std::uint32_t AbelianGroup::add_index(std::uint32_t x, std::uint32_t y) const noexcept {
  const auto& im = *impl_;
  if (im.factors.size() <= 1) {
    const std::uint32_t s = x + y;
    return s >= im.order ? s - im.order : s;
  }
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < im.factors.size(); ++i) {
    const auto d = im.factors[i];
    const auto xi = (x / im.strides[i]) % d;
    const auto yi = (y / im.strides[i]) % d;
    auto si = xi + yi;
    if (si >= d) si -= d;
    out += si * im.strides[i];
  }
  return out;
}

std::uint32_t AbelianGroup::neg_index(std::uint32_t x) const noexcept { return impl_->neg[x]; }
std::uint32_t AbelianGroup::double_index(std::uint32_t x) const noexcept { return impl_->dbl[x]; }

void AbelianGroup::translate(std::span<const std::uint64_t> src, std::uint32_t by,
                             std::span<std::uint64_t> dst) const {
  const auto& im = *impl_;
  const std::size_t nw = im.words;
  const std::size_t k = im.factors.size();

  if (k <= 1) {
    const std::uint64_t n = im.order;
    const std::uint64_t s = by;
    if (s == 0) {
      std::copy_n(src.begin(), nw, dst.begin());
      return;
    }
    if (nw == 1) {
      const std::uint64_t v = src[0];
      dst[0] = ((v << s) | (v >> (n - s))) & im.tail;
      return;
    }
    for (std::size_t w = 0; w < nw; ++w) dst[w] = bits::shl_word(src, w, s) | bits::shr_word(src, w, n - s);
    dst[nw - 1] &= im.tail;
    return;
  }

  thread_local std::vector<std::uint64_t> ping, pong, mask_buf;
  ping.resize(nw);
  pong.resize(nw);

  std::size_t active[32];
  std::uint32_t digit[32];
  std::size_t nactive = 0;
  for (std::size_t c = 0; c < k; ++c) {
    const auto a = (by / im.strides[c]) % im.factors[c];
    if (a != 0) {
      active[nactive] = c;
      digit[nactive] = a;
      ++nactive;
    }
  }
  if (nactive == 0) {
    std::copy_n(src.begin(), nw, dst.begin());
    return;
  }

  std::span<const std::uint64_t> cur = src;
  for (std::size_t j = 0; j < nactive; ++j) {
    const std::size_t c = active[j];
    std::span<std::uint64_t> out = (j + 1 == nactive) ? dst : (j % 2 == 0 ? std::span(ping) : std::span(pong));
    const std::uint64_t seg = im.strides[c + 1];
    const std::uint64_t s = std::uint64_t{digit[j]} * im.strides[c];
    if (c + 1 == k) {
      for (std::size_t w = 0; w < nw; ++w) out[w] = bits::shl_word(cur, w, s) | bits::shr_word(cur, w, seg - s);
      out[nw - 1] &= im.tail;
    } else {
      std::span<const std::uint64_t> keep;
      if (!im.masks.empty()) {
        keep = std::span(im.masks[c]).subspan(digit[j] * nw, nw);
      } else {
        mask_buf.resize(nw);
        im.build_mask(c, digit[j], mask_buf);
        keep = mask_buf;
      }
      for (std::size_t w = 0; w < nw; ++w) {
        out[w] = (bits::shl_word(cur, w, s) & keep[w]) | (bits::shr_word(cur, w, seg - s) & ~keep[w]);
      }
    }
    cur = out;
  }
}

void AbelianGroup::translate_or(std::span<const std::uint64_t> src, std::uint32_t by,
                                std::span<std::uint64_t> dst) const {
  thread_local std::vector<std::uint64_t> tmp;
  tmp.resize(impl_->words);
  translate(src, by, tmp);
  bits::or_into(dst, tmp);
}

bool operator==(const AbelianGroup& a, const AbelianGroup& b) noexcept {
  return a.impl_ == b.impl_ || a.impl_->factors == b.impl_->factors;
}

AbelianGroup parse_group_spec(std::string_view spec, GroupOptions options) {
  std::string compact;
  for (char ch : spec) {
    if (ch != ' ' && ch != '\t') compact += ch;
  }
  if (compact.empty()) throw SpecError("empty group spec");

  auto parse_number = [&](std::string_view text, std::string_view what) {
    std::uint64_t value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last) {
      throw SpecError("malformed " + std::string(what) + " in group spec '" + std::string(spec) + "'");
    }
    return value;
  };

  std::vector<std::uint64_t> orders;
  std::uint64_t total = 1;
  std::string_view rest = compact;
  while (true) {
    const auto cut = rest.find('x');
    const std::string_view atom = rest.substr(0, cut);
    if (atom.size() < 2 || atom.front() != 'Z') {
      throw SpecError("expected an atom of the form Z<n> in group spec '" + std::string(spec) + "'");
    }
    const auto caret = atom.find('^');
    const std::uint64_t n = parse_number(atom.substr(1, caret == std::string_view::npos ? atom.npos : caret - 1), "modulus");
    std::uint64_t e = 1;
    if (caret != std::string_view::npos) e = parse_number(atom.substr(caret + 1), "exponent");
    if (n < 2) throw SpecError("cyclic factor Z" + std::to_string(n) + " is not allowed; need n >= 2");
    if (e < 1) throw SpecError("exponent must be at least 1");
    for (std::uint64_t i = 0; i < e; ++i) {
      if (n > options.max_order || total > options.max_order / n) {
        throw SpecError("group '" + std::string(spec) + "' exceeds the maximum order " +
                        std::to_string(options.max_order));
      }
      total *= n;
      orders.push_back(n);
    }
    if (cut == std::string_view::npos) break;
    rest = rest.substr(cut + 1);
  }
  return AbelianGroup::product_of_cyclic(orders, options);
}

std::vector<AbelianGroup> enumerate_groups_of_order(std::uint64_t n, GroupOptions options) {
  if (n == 0) throw PreconditionError("group order must be at least 1");
  if (n > options.max_order) {
    throw PreconditionError("order " + std::to_string(n) + " exceeds the configured maximum");
  }
  const auto primes = factorize(n);
  std::vector<std::vector<std::vector<unsigned>>> per_prime;
  for (auto [p, e] : primes) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> prefix;
    partitions(e, e, prefix, parts);
    per_prime.push_back(std::move(parts));
  }

  std::vector<AbelianGroup> out;
  std::vector<std::size_t> choice(primes.size(), 0);
  while (true) {
    std::vector<std::uint64_t> powers;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      for (auto part : per_prime[i][choice[i]]) powers.push_back(ipow(primes[i].first, part));
    }
    out.push_back(AbelianGroup::product_of_cyclic(powers, options));
    // odometer with the last prime varying fastest
    std::size_t i = primes.size();
    while (i > 0) {
      --i;
      if (++choice[i] < per_prime[i].size()) break;
      choice[i] = 0;
      if (i == 0) return out;
    }
    if (primes.empty()) return out;
  }
}

}  // namespace subsum
