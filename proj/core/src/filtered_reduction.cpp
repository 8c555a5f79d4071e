#include "legspec/filtered_reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace legspec {

void FilteredBoundary::push_back(std::uint8_t dim, std::span<const std::uint32_t> faces) {
  rows.insert(rows.end(), faces.begin(), faces.end());
  offsets.push_back(static_cast<std::uint32_t>(rows.size()));
  dims.push_back(dim);
}

namespace {

// a <- a xor b for sorted index sets.
void symmetric_difference(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                          std::vector<std::uint32_t>& scratch) {
  scratch.clear();
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(scratch));
  a.swap(scratch);
}

}  // namespace

FilteredReduction reduce_filtered(const FilteredBoundary& boundary, std::span<const std::uint64_t> tags) {
  const std::size_t n = boundary.size();
  if (tags.size() != n) throw std::invalid_argument("reduce_filtered: one tag per column required");

  std::uint8_t max_dim = 0;
  for (auto d : boundary.dims) max_dim = std::max(max_dim, d);
  std::vector<std::vector<std::uint32_t>> by_dim(max_dim + 1);
  for (std::size_t j = 0; j < n; ++j) by_dim[boundary.dims[j]].push_back(static_cast<std::uint32_t>(j));

  FilteredReduction out;
  out.partner.assign(n, -1);
  std::vector<std::int64_t> pivot_of_row(n, -1);
  std::vector<std::vector<std::uint32_t>> stored(n);
  std::vector<std::uint64_t> stored_tag(n, 0);
  std::vector<std::uint8_t> cleared(n, 0);
  std::vector<std::uint64_t> zero_tag(n, 0);
  std::vector<std::uint8_t> is_zero(n, 0);

  std::vector<std::uint32_t> work;
  std::vector<std::uint32_t> scratch;
  for (int d = max_dim; d >= 0; --d) {
    for (const auto j : by_dim[d]) {
      if (cleared[j]) continue;
      const auto col = boundary.column(j);
      work.assign(col.begin(), col.end());
      std::uint64_t tag = tags[j];
      while (!work.empty()) {
        const auto i = pivot_of_row[work.back()];
        if (i < 0) break;
        symmetric_difference(work, stored[i], scratch);
        tag ^= stored_tag[i];
      }
      if (work.empty()) {
        is_zero[j] = 1;
        zero_tag[j] = tag;
        continue;
      }
      const auto p = work.back();
      pivot_of_row[p] = j;
      out.partner[j] = p;
      out.partner[p] = j;
      cleared[p] = 1;
      stored[j] = work;
      stored_tag[j] = tag;
    }
  }

  for (std::size_t j = 0; j < n; ++j) {
    if (is_zero[j] && out.partner[j] < 0) {
      out.essential.push_back(static_cast<std::uint32_t>(j));
      out.essential_tags.push_back(zero_tag[j]);
    }
  }
  return out;
}

}  // namespace legspec
