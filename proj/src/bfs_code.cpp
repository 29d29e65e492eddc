#include "bfs_code.hpp"

#include <algorithm>

namespace fivecycles::detail {
namespace {

enum class Mode { Minimize, FindSmaller };

// Branch-and-bound over BFS labelings. Rows are compared against a reference
// code as soon as they are determined; a branch whose row exceeds the
// reference is cut.
class LabelingSearch {
 public:
  LabelingSearch(const PartialCubic& g, Mode mode)
      : g_(g), mode_(mode), label_(g.n, kOpen), order_(g.n, kOpen), code_(3 * g.n, 0) {}

  void set_reference(std::span<const int> reference, int rows) {
    reference_.assign(reference.begin(), reference.begin() + 3 * rows);
    reference_rows_ = rows;
  }

  bool found_smaller() {
    found_ = false;
    // `false` for "no branch has beaten the reference yet".
    step(0, /*below=*/false);
    return found_;
  }

  MinimalCode minimize() {
    reference_rows_ = 0;
    have_best_ = false;
    step(0, /*below=*/true);
    return {reference_, best_label_};
  }

 private:
  // `below` is true when the current prefix is already strictly smaller than
  // the reference (or no reference exists yet).
  void step(int pos, bool below) {
    if (found_) return;
    if (pos == g_.n) {
      if (mode_ == Mode::Minimize && (below || !have_best_)) {
        reference_ = code_;
        reference_rows_ = g_.n;
        best_label_ = label_;
        have_best_ = true;
        ++best_version_;
      }
      return;
    }
    if (pos == next_label_) {
      // Start (or restart) the search from an unlabeled root.
      for (int r = 0; r < g_.n; ++r) {
        if (label_[r] != kOpen) continue;
        label_[r] = pos;
        order_[pos] = r;
        ++next_label_;
        const auto version = best_version_;
        descend(pos, below);
        if (best_version_ != version) below = false;
        --next_label_;
        order_[pos] = kOpen;
        label_[r] = kOpen;
        if (found_) return;
      }
      return;
    }
    descend(pos, below);
  }

  void descend(int pos, bool below) {
    const int x = order_[pos];
    if (!g_.complete(x)) return;  // row undetermined: inconclusive

    std::array<int, 3> fresh{};
    int k = 0;
    for (int y : g_.nbr[x]) {
      if (label_[y] == kOpen && std::find(fresh.begin(), fresh.begin() + k, y) == fresh.begin() + k) {
        fresh[k++] = y;
      }
    }
    std::sort(fresh.begin(), fresh.begin() + k);

    const int base = next_label_;
    next_label_ += k;
    // With parallel edges the row depends on which child gets which label,
    // so each child order is compared separately.
    do {
      for (int i = 0; i < k; ++i) {
        label_[fresh[i]] = base + i;
        order_[base + i] = fresh[i];
      }
      std::array<int, 3> row{label_[g_.nbr[x][0]], label_[g_.nbr[x][1]], label_[g_.nbr[x][2]]};
      std::sort(row.begin(), row.end());

      bool child_below = below;
      if (!below) {
        if (pos >= reference_rows_) continue;  // nothing left to compare against
        const int c = compare_row(row, reference_.data() + 3 * pos);
        if (c > 0) continue;
        if (c < 0) {
          if (mode_ == Mode::FindSmaller) {
            found_ = true;
            break;
          }
          child_below = true;
        }
      }
      std::copy(row.begin(), row.end(), code_.begin() + 3 * pos);
      const auto version = best_version_;
      step(pos + 1, child_below);
      // A new best was recorded below us, so our prefix now equals it.
      if (best_version_ != version) below = false;
    } while (!found_ && std::next_permutation(fresh.begin(), fresh.begin() + k));

    next_label_ -= k;
    for (int i = 0; i < k; ++i) {
      label_[fresh[i]] = kOpen;
      order_[base + i] = kOpen;
    }
  }

  static int compare_row(const std::array<int, 3>& row, const int* ref) {
    for (int i = 0; i < 3; ++i) {
      if (row[i] != ref[i]) return row[i] < ref[i] ? -1 : 1;
    }
    return 0;
  }

  const PartialCubic& g_;
  Mode mode_;
  std::vector<int> label_;
  std::vector<int> order_;
  std::vector<int> code_;
  int next_label_ = 0;

  std::vector<int> reference_;
  int reference_rows_ = 0;
  std::vector<int> best_label_;
  bool have_best_ = false;
  unsigned best_version_ = 0;
  bool found_ = false;
};

}  // namespace

MinimalCode minimal_code(const PartialCubic& g) {
  LabelingSearch search(g, Mode::Minimize);
  return search.minimize();
}

bool exists_smaller_code(const PartialCubic& g, std::span<const int> reference,
                         int reference_rows) {
  LabelingSearch search(g, Mode::FindSmaller);
  search.set_reference(reference, reference_rows);
  return search.found_smaller();
}

std::vector<int> identity_code(const PartialCubic& g, int rows) {
  std::vector<int> code;
  code.reserve(3 * rows);
  for (int v = 0; v < rows; ++v) {
    auto row = g.nbr[v];
    std::sort(row.begin(), row.end());
    code.insert(code.end(), row.begin(), row.end());
  }
  return code;
}

}  // namespace fivecycles::detail
