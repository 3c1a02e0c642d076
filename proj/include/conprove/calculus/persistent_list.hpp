#pragma once

#include <cstddef>
#include <iterator>
#include <memory>
#include <utility>

namespace conprove {

// Immutable singly linked list with structural sharing. push/pop return new
// lists and never modify the receiver.
template <class T>
class PersistentList {
  struct Node {
    T value;
    std::shared_ptr<const Node> next;
    std::size_t size;
  };

 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = T;
    using difference_type = std::ptrdiff_t;
    using pointer = const T*;
    using reference = const T&;

    iterator() = default;
    explicit iterator(const Node* n) : node_(n) {}
    reference operator*() const { return node_->value; }
    pointer operator->() const { return &node_->value; }
    iterator& operator++() {
      node_ = node_->next.get();
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.node_ == b.node_; }

   private:
    const Node* node_ = nullptr;
  };

  PersistentList() = default;
  PersistentList(const PersistentList&) = default;
  PersistentList(PersistentList&&) noexcept = default;
  PersistentList& operator=(const PersistentList&) = default;
  PersistentList& operator=(PersistentList&&) noexcept = default;

  // Unlinks uniquely owned nodes iteratively so that long lists do not
  // recurse through shared_ptr destructors.
  ~PersistentList() {
    auto n = std::move(head_);
    while (n && n.use_count() == 1) {
      auto next = std::move(const_cast<Node&>(*n).next);
      n = std::move(next);
    }
  }

  bool empty() const { return head_ == nullptr; }
  std::size_t size() const { return head_ ? head_->size : 0; }
  const T& front() const { return head_->value; }

  PersistentList push(T value) const {
    return PersistentList(std::make_shared<const Node>(Node{std::move(value), head_, size() + 1}));
  }
  PersistentList pop() const { return PersistentList(head_->next); }

  // Address of the first node; equal lists share it.
  const void* identity() const { return head_.get(); }

  iterator begin() const { return iterator(head_.get()); }
  iterator end() const { return iterator(); }

 private:
  explicit PersistentList(std::shared_ptr<const Node> head) : head_(std::move(head)) {}
  std::shared_ptr<const Node> head_;
};

}  // namespace conprove
