#include "domcrit/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstring>

#include "domcrit/graph6.hpp"

namespace domcrit {

namespace {

// Ordered partition of the vertices: order[] lists vertices grouped by cell.
struct Partition {
  std::array<std::int8_t, 64> order{};
  std::array<std::int8_t, 64> cell_start{};
  std::array<std::int8_t, 64> cell_len{};
  int ncells = 0;
};

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : n_(g.n()) {
    key_words_ = (n_ * (n_ - 1) / 2 + 63) / 64;
    for (int v = 0; v < n_; ++v) adj_[static_cast<std::size_t>(v)] = g.adjacency_bits(v);
  }

  void run() {
    Partition p;
    for (int v = 0; v < n_; ++v) p.order[static_cast<std::size_t>(v)] = static_cast<std::int8_t>(v);
    p.cell_start[0] = 0;
    p.cell_len[0] = static_cast<std::int8_t>(n_);
    p.ncells = 1;
    descend(p);
  }

  std::string key_as_graph6() const {
    Graph shell(n_);  // length prefix only; bits come from the key
    std::string out = to_graph6(shell);
    std::size_t header = out.size() - static_cast<std::size_t>((n_ * (n_ - 1) / 2 + 5) / 6);
    long bit_total = static_cast<long>(n_) * (n_ - 1) / 2;
    for (long k = 0; k < bit_total; ++k) {
      if ((best_key_[static_cast<std::size_t>(k >> 6)] >> (63 - (k & 63))) & 1) {
        out[header + static_cast<std::size_t>(k / 6)] =
            static_cast<char>(out[header + static_cast<std::size_t>(k / 6)] + (32 >> (k % 6)));
      }
    }
    return out;
  }

  std::vector<int> labelling() const {
    std::vector<int> image(static_cast<std::size_t>(n_));
    for (int pos = 0; pos < n_; ++pos) {
      image[static_cast<std::size_t>(best_order_[static_cast<std::size_t>(pos)])] = pos;
    }
    return image;
  }

 private:
  // Splits every cell by per-cell neighbor counts until the partition is
  // equitable. Subcells are ordered by ascending count signature, which keeps
  // the process independent of the input labelling.
  void refine(Partition& p) {
    while (p.ncells < n_) {
      std::array<std::uint64_t, 64> mask;
      for (int c = 0; c < p.ncells; ++c) {
        std::uint64_t m = 0;
        for (int i = 0; i < p.cell_len[static_cast<std::size_t>(c)]; ++i) {
          m |= std::uint64_t{1}
               << p.order[static_cast<std::size_t>(p.cell_start[static_cast<std::size_t>(c)] + i)];
        }
        mask[static_cast<std::size_t>(c)] = m;
      }
      std::array<std::array<std::int8_t, 64>, 64> sig;
      for (int v = 0; v < n_; ++v) {
        for (int c = 0; c < p.ncells; ++c) {
          sig[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] = static_cast<std::int8_t>(
              std::popcount(adj_[static_cast<std::size_t>(v)] & mask[static_cast<std::size_t>(c)]));
        }
      }
      auto sig_cmp = [&](std::int8_t a, std::int8_t b) {
        return std::memcmp(sig[static_cast<std::size_t>(a)].data(),
                           sig[static_cast<std::size_t>(b)].data(),
                           static_cast<std::size_t>(p.ncells)) < 0;
      };
      auto sig_eq = [&](std::int8_t a, std::int8_t b) {
        return std::memcmp(sig[static_cast<std::size_t>(a)].data(),
                           sig[static_cast<std::size_t>(b)].data(),
                           static_cast<std::size_t>(p.ncells)) == 0;
      };

      Partition q;
      int qpos = 0;
      bool split = false;
      for (int c = 0; c < p.ncells; ++c) {
        int s = p.cell_start[static_cast<std::size_t>(c)];
        int len = p.cell_len[static_cast<std::size_t>(c)];
        std::array<std::int8_t, 64> members;
        std::copy_n(p.order.begin() + s, len, members.begin());
        if (len > 1) std::sort(members.begin(), members.begin() + len, sig_cmp);
        int run = 0;
        for (int i = 1; i <= len; ++i) {
          if (i == len || !sig_eq(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(run)])) {
            q.cell_start[static_cast<std::size_t>(q.ncells)] = static_cast<std::int8_t>(qpos);
            q.cell_len[static_cast<std::size_t>(q.ncells)] = static_cast<std::int8_t>(i - run);
            ++q.ncells;
            for (int k = run; k < i; ++k) q.order[static_cast<std::size_t>(qpos++)] = members[static_cast<std::size_t>(k)];
            if (i - run != len) split = true;
            run = i;
          }
        }
      }
      p = q;
      if (!split) return;
    }
  }

  void descend(Partition p) {
    refine(p);
    if (p.ncells == n_) {
      leaf(p);
      return;
    }
    int target = 0;
    while (p.cell_len[static_cast<std::size_t>(target)] <= 1) ++target;
    int s = p.cell_start[static_cast<std::size_t>(target)];
    int len = p.cell_len[static_cast<std::size_t>(target)];
    std::array<std::int8_t, 64> cand;
    std::copy_n(p.order.begin() + s, len, cand.begin());

    std::array<std::int8_t, 64> tried;
    int tried_count = 0;
    for (int i = 0; i < len; ++i) {
      std::int8_t w = cand[static_cast<std::size_t>(i)];
      if (tried_count > 0 && in_tried_orbit(w, tried, tried_count)) continue;
      Partition child = p;
      split_cell(child, target, w);
      prefix_[static_cast<std::size_t>(prefix_len_++)] = w;
      descend(child);
      --prefix_len_;
      tried[static_cast<std::size_t>(tried_count++)] = w;
    }
  }

  static void split_cell(Partition& p, int cell, std::int8_t w) {
    int s = p.cell_start[static_cast<std::size_t>(cell)];
    int len = p.cell_len[static_cast<std::size_t>(cell)];
    // put w first, keep the others in relative order
    int at = s;
    while (p.order[static_cast<std::size_t>(at)] != w) ++at;
    for (int k = at; k > s; --k) p.order[static_cast<std::size_t>(k)] = p.order[static_cast<std::size_t>(k - 1)];
    p.order[static_cast<std::size_t>(s)] = w;
    for (int c = p.ncells; c > cell + 1; --c) {
      p.cell_start[static_cast<std::size_t>(c)] = p.cell_start[static_cast<std::size_t>(c - 1)];
      p.cell_len[static_cast<std::size_t>(c)] = p.cell_len[static_cast<std::size_t>(c - 1)];
    }
    p.cell_start[static_cast<std::size_t>(cell)] = static_cast<std::int8_t>(s);
    p.cell_len[static_cast<std::size_t>(cell)] = 1;
    p.cell_start[static_cast<std::size_t>(cell + 1)] = static_cast<std::int8_t>(s + 1);
    p.cell_len[static_cast<std::size_t>(cell + 1)] = static_cast<std::int8_t>(len - 1);
    ++p.ncells;
  }

  // True when a known automorphism that fixes every individualized vertex maps
  // w into the orbit of an already explored candidate; that subtree would
  // reproduce the explored one leaf for leaf.
  bool in_tried_orbit(std::int8_t w, const std::array<std::int8_t, 64>& tried, int tried_count) {
    if (gens_.empty()) return false;
    std::array<std::int8_t, 64> parent;
    for (int v = 0; v < n_; ++v) parent[static_cast<std::size_t>(v)] = static_cast<std::int8_t>(v);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    for (const auto& gen : gens_) {
      bool fixes_prefix = true;
      for (int i = 0; i < prefix_len_; ++i) {
        std::int8_t x = prefix_[static_cast<std::size_t>(i)];
        if (gen[static_cast<std::size_t>(x)] != x) {
          fixes_prefix = false;
          break;
        }
      }
      if (!fixes_prefix) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(v), b = find(gen[static_cast<std::size_t>(v)]);
        if (a != b) parent[static_cast<std::size_t>(a)] = static_cast<std::int8_t>(b);
      }
    }
    int rw = find(w);
    for (int t = 0; t < tried_count; ++t) {
      if (find(tried[static_cast<std::size_t>(t)]) == rw) return true;
    }
    return false;
  }

  void leaf(const Partition& p) {
    std::array<std::uint64_t, 32> key{};
    int bit = 0;
    for (int col = 1; col < n_; ++col) {
      std::uint64_t colbits = adj_[static_cast<std::size_t>(p.order[static_cast<std::size_t>(col)])];
      for (int row = 0; row < col; ++row, ++bit) {
        if ((colbits >> p.order[static_cast<std::size_t>(row)]) & 1) {
          key[static_cast<std::size_t>(bit >> 6)] |= std::uint64_t{1} << (63 - (bit & 63));
        }
      }
    }
    if (!have_best_) {
      best_key_ = key;
      best_order_ = p.order;
      have_best_ = true;
      return;
    }
    int cmp = 0;
    for (int w = 0; w < key_words_ && cmp == 0; ++w) {
      if (key[static_cast<std::size_t>(w)] != best_key_[static_cast<std::size_t>(w)]) {
        cmp = key[static_cast<std::size_t>(w)] < best_key_[static_cast<std::size_t>(w)] ? -1 : 1;
      }
    }
    if (cmp < 0) {
      best_key_ = key;
      best_order_ = p.order;
      return;
    }
    if (cmp == 0 && gens_.size() < kMaxGenerators) {
      // equal keys name the same adjacency matrix twice: composing the two
      // labellings is an automorphism
      std::array<std::int8_t, 64> gen{};
      bool identity = true;
      for (int pos = 0; pos < n_; ++pos) {
        std::int8_t from = best_order_[static_cast<std::size_t>(pos)];
        std::int8_t to = p.order[static_cast<std::size_t>(pos)];
        gen[static_cast<std::size_t>(from)] = to;
        identity = identity && from == to;
      }
      if (!identity) gens_.push_back(gen);
    }
  }

  static constexpr std::size_t kMaxGenerators = 256;

  int n_;
  int key_words_;
  std::array<std::uint64_t, 64> adj_{};
  bool have_best_ = false;
  std::array<std::uint64_t, 32> best_key_{};
  std::array<std::int8_t, 64> best_order_{};
  std::vector<std::array<std::int8_t, 64>> gens_;
  std::array<std::int8_t, 64> prefix_{};
  int prefix_len_ = 0;
};

}  // namespace

std::string canonical_form(const Graph& g) {
  if (g.n() == 0) return to_graph6(g);
  Canonicalizer canon(g);
  canon.run();
  return canon.key_as_graph6();
}

std::vector<int> canonical_labelling(const Graph& g) {
  if (g.n() == 0) return {};
  Canonicalizer canon(g);
  canon.run();
  return canon.labelling();
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace domcrit
