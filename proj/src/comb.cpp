#include "mcd/comb.hpp"

#include <limits>
#include <sstream>

namespace mcd {

std::string join_ints(const std::vector<int>& xs, const char* sep) {
  std::ostringstream os;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) os << sep;
    os << xs[i];
  }
  return os.str();
}

std::string block_str(const Block& b) {
  return "{" + join_ints(b, ",") + "}";
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    // r * num never overflows for the parameter ranges used here (v <= 256,
    // t <= 4), but guard anyway so misuse fails loudly.
    if (r > std::numeric_limits<std::uint64_t>::max() / num)
      throw InputError("binomial overflow: C(" + std::to_string(n) + "," +
                       std::to_string(k) + ")");
    r = r * num / i;
  }
  return r;
}

std::uint64_t subset_rank(const Block& b) {
  std::uint64_t r = 0;
  for (size_t i = 0; i < b.size(); ++i)
    r += binomial(b[i], static_cast<int>(i) + 1);
  return r;
}

Block subset_unrank(std::uint64_t rank, int v, int t) {
  Block b(t);
  for (int i = t; i >= 1; --i) {
    int x = v - 1;
    while (x >= i - 1 && binomial(x, i) > rank) --x;
    b[i - 1] = x;
    rank -= binomial(x, i);
  }
  return b;
}

static std::uint64_t exact_div(std::uint64_t num, std::uint64_t den,
                               const char* what) {
  if (den == 0 || num % den != 0)
    throw InputError(std::string("inadmissible parameters: ") + what);
  return num / den;
}

std::uint64_t expected_sqs_blocks(int v) {
  return exact_div(binomial(v, 3), 4, "C(v,3) not divisible by 4");
}

std::uint64_t expected_sts_blocks(int v) {
  return exact_div(binomial(v, 2), 3, "C(v,2) not divisible by 3");
}

std::uint64_t expected_cqs_blocks(int g, int n, int s) {
  std::uint64_t covered = binomial(g * n + s, 3);
  std::uint64_t holes = static_cast<std::uint64_t>(n) * binomial(g + s, 3);
  std::uint64_t overlap =
      static_cast<std::uint64_t>(n - 1) * binomial(s, 3);
  if (covered + overlap < holes)
    throw InputError("inadmissible parameters: negative block count");
  return exact_div(covered + overlap - holes, 4,
                   "CQS triple count not divisible by 4");
}

std::vector<Block> all_subsets(const std::vector<int>& ground, int t) {
  std::vector<Block> out;
  int n = static_cast<int>(ground.size());
  if (t > n || t < 0) return out;
  std::vector<int> idx(t);
  for (int i = 0; i < t; ++i) idx[i] = i;
  while (true) {
    Block b(t);
    for (int i = 0; i < t; ++i) b[i] = ground[idx[i]];
    out.push_back(std::move(b));
    int i = t - 1;
    while (i >= 0 && idx[i] == n - t + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace mcd
