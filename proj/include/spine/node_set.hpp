#ifndef SPINE_NODE_SET_HPP
#define SPINE_NODE_SET_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace spine {

using NodeId = std::size_t;

/// Fixed-universe set of node indices backed by 64-bit words. All binary
/// operations require both operands to share the same universe size.
class NodeSet {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t bits_per_word = 64;

  NodeSet() = default;

  explicit NodeSet(std::size_t universe_size)
      : size_(universe_size), words_((universe_size + bits_per_word - 1) / bits_per_word, 0) {}

  NodeSet(std::size_t universe_size, std::initializer_list<NodeId> members) : NodeSet(universe_size) {
    for (auto v : members)
      insert(v);
  }

  static auto full(std::size_t universe_size) -> NodeSet {
    NodeSet s(universe_size);
    for (auto & w : s.words_)
      w = ~Word{0};
    s.trim();
    return s;
  }

  auto universe_size() const -> std::size_t { return size_; }

  auto contains(NodeId v) const -> bool {
    check(v);
    return (words_[v / bits_per_word] >> (v % bits_per_word)) & 1U;
  }

  auto insert(NodeId v) -> void {
    check(v);
    words_[v / bits_per_word] |= Word{1} << (v % bits_per_word);
  }

  auto erase(NodeId v) -> void {
    check(v);
    words_[v / bits_per_word] &= ~(Word{1} << (v % bits_per_word));
  }

  auto count() const -> std::size_t {
    std::size_t c = 0;
    for (auto w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  auto empty() const -> bool {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  auto is_subset_of(const NodeSet & other) const -> bool {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0)
        return false;
    return true;
  }

  auto intersects(const NodeSet & other) const -> bool {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & other.words_[i]) != 0)
        return true;
    return false;
  }

  auto operator|=(const NodeSet & other) -> NodeSet & {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] |= other.words_[i];
    return *this;
  }

  auto operator&=(const NodeSet & other) -> NodeSet & {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= other.words_[i];
    return *this;
  }

  auto operator-=(const NodeSet & other) -> NodeSet & {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= ~other.words_[i];
    return *this;
  }

  friend auto operator|(NodeSet a, const NodeSet & b) -> NodeSet { return a |= b; }
  friend auto operator&(NodeSet a, const NodeSet & b) -> NodeSet { return a &= b; }
  friend auto operator-(NodeSet a, const NodeSet & b) -> NodeSet { return a -= b; }

  friend auto operator==(const NodeSet &, const NodeSet &) -> bool = default;

  /// Smallest member >= from, or universe_size() when there is none.
  auto next(NodeId from) const -> NodeId {
    if (from >= size_)
      return size_;
    std::size_t wi = from / bits_per_word;
    Word w = words_[wi] & (~Word{0} << (from % bits_per_word));
    while (true) {
      if (w != 0)
        return wi * bits_per_word + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size())
        return size_;
      w = words_[wi];
    }
  }

  auto first() const -> NodeId { return next(0); }

  template <typename F>
  auto for_each(F && f) const -> void {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w != 0) {
        f(wi * bits_per_word + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  auto to_vector() const -> std::vector<NodeId> {
    std::vector<NodeId> out;
    out.reserve(count());
    for_each([&](NodeId v) { out.push_back(v); });
    return out;
  }

  auto words() const -> const std::vector<Word> & { return words_; }

private:
  auto check(NodeId v) const -> void {
    if (v >= size_)
      throw std::out_of_range("node " + std::to_string(v) + " outside universe of size " + std::to_string(size_));
  }

  auto same_universe(const NodeSet & other) const -> void {
    if (other.size_ != size_)
      throw std::invalid_argument("NodeSet universe mismatch");
  }

  auto trim() -> void {
    if (size_ % bits_per_word != 0 && !words_.empty())
      words_.back() &= (Word{1} << (size_ % bits_per_word)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

} // namespace spine

#endif
