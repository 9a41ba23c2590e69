#include "blocklis/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace blocklis {

BlockLisResult exact_block_lis(const BlockSequence& z, bool want_certificate) {
  std::vector<Position> tails;  // tails[t]: smallest value ending a selection of length t+1

  struct Node {
    Position value;
    std::uint32_t block;
    std::int64_t pred;  // node index, -1 at length 1
  };
  std::vector<Node> nodes;
  std::vector<std::int64_t> tail_node;  // node currently sitting at each tails slot

  const std::size_t blocks = z.block_count();
  for (std::size_t i = 0; i < blocks; ++i) {
    auto blk = z.block(i);
    // Decreasing order within the block: an earlier (larger) value can never
    // serve as predecessor for a later (smaller) one, so each block
    // contributes at most one element to any chain.
    for (std::size_t r = blk.size(); r-- > 0;) {
      Position v = blk[r];
      if (r > 0 && blk[r - 1] >= v) {
        throw std::invalid_argument("block " + std::to_string(i) +
                                    " is not strictly increasing");
      }
      auto it = std::lower_bound(tails.begin(), tails.end(), v);
      std::size_t slot = static_cast<std::size_t>(it - tails.begin());
      if (it == tails.end()) {
        tails.push_back(v);
      } else if (v < *it) {
        *it = v;
      } else {
        continue;  // tails[slot] == v already
      }
      if (want_certificate) {
        std::int64_t pred = slot > 0 ? tail_node[slot - 1] : -1;
        nodes.push_back({v, static_cast<std::uint32_t>(i), pred});
        std::int64_t id = static_cast<std::int64_t>(nodes.size()) - 1;
        if (slot == tail_node.size()) {
          tail_node.push_back(id);
        } else {
          tail_node[slot] = id;
        }
      }
    }
  }

  BlockLisResult result;
  result.length = tails.size();
  if (want_certificate) {
    Certificate cert(tails.size());
    if (!tails.empty()) {
      std::int64_t at = tail_node[tails.size() - 1];
      for (std::size_t k = tails.size(); k-- > 0;) {
        cert[k] = {nodes[at].block, nodes[at].value};
        at = nodes[at].pred;
      }
    }
    for (std::size_t k = 1; k < cert.size(); ++k) {
      if (cert[k - 1].block >= cert[k].block || cert[k - 1].value >= cert[k].value) {
        throw std::logic_error("certificate reconstruction is not monotone");
      }
    }
    result.certificate = std::move(cert);
  }
  return result;
}

bool verify_certificate(const Sequence& x, const Sequence& y, const Certificate& cert,
                        std::uint64_t claimed_length) {
  if (cert.size() != claimed_length) return false;
  for (std::size_t k = 0; k < cert.size(); ++k) {
    const auto& [i, j] = cert[k];
    if (i >= x.size() || j >= y.size()) return false;
    if (x[i] != y[j]) return false;
    if (k > 0 && (cert[k - 1].block >= i || cert[k - 1].value >= j)) return false;
  }
  return true;
}

SolverSpec exact_solver_spec() {
  SolverSpec spec;
  spec.alpha = 1.0;
  spec.additive_budget = 0.0;
  spec.solve = [](const BlockSequence& z, double /*lambda*/) {
    return static_cast<double>(exact_block_lis(z).length);
  };
  return spec;
}

}  // namespace blocklis
