#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace nilorb {

// A root is stored as its integer coefficient vector over the simple roots.
using Root = std::vector<int>;

// Type expression such as "E6", "F4", "A3" or a sum "A2+A1".
struct TypeSpec {
  std::vector<std::pair<char, int>> parts;  // (family letter, rank)
  std::string name() const;
  int rank() const;
};

// Parses a type expression; throws std::invalid_argument on bad input.
TypeSpec parse_type(std::string_view text);

// Connected component of a set of simple-root nodes, classified up to diagram
// isomorphism.  `nodes` lists ambient simple indices in the order matching the
// canonical Cartan matrix of (family, rank).
struct Component {
  char family = 'A';
  int rank = 0;
  bool short_in_ambient = false;  // all roots short inside a two-length system
  std::vector<int> nodes;
};

class RootSystem {
 public:
  explicit RootSystem(const TypeSpec& spec);

  const TypeSpec& type() const { return spec_; }
  const std::string& name() const { return name_; }
  int rank() const { return rank_; }
  int npos() const { return static_cast<int>(pos_.size()); }

  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  int d(int i) const { return d_[i]; }

  const Root& pos(int k) const { return pos_[k]; }
  const std::vector<Root>& positives() const { return pos_; }
  int height(int k) const { return height_[k]; }
  // Index of a positive root, or -1.
  int index_of(const Root& r) const;

  // Symmetric bilinear form, squared length and Cartan pairing <a, b-check>.
  long ip(const Root& a, const Root& b) const;
  long norm2(const Root& r) const;
  int cartan_int(const Root& a, const Root& b) const;

  bool two_lengths() const { return min_norm_ != max_norm_; }
  long max_norm() const { return max_norm_; }
  long min_norm() const { return min_norm_; }
  bool is_long(int k) const { return norm2(pos_[k]) == max_norm_; }

  // Published (reference) numbering of the positive roots, 1-based.  It agrees
  // with the internal breadth-first order except for a documented fixed
  // permutation per type.
  int published_index(int internal) const { return published_[internal]; }
  int internal_of_published(int published) const {
    return from_published_.at(published);
  }

  // Connected components of a subset of simple nodes, canonically classified.
  std::vector<Component> components(const std::vector<int>& nodes) const;

  // Simple-reflection descent of an ad-diagonal element given by coroot
  // coordinates c (h = sum c_j h_j).  Returns the dominant weight vector
  // (w_i = sum_j C[i][j] c_j after conjugation into the dominant chamber).
  template <typename Num>
  std::vector<Num> dominant_weights(std::vector<Num> c) const {
    std::vector<Num> w(rank_);
    for (bool moved = true; moved;) {
      moved = false;
      for (int i = 0; i < rank_; ++i) {
        Num acc = Num(0);
        for (int j = 0; j < rank_; ++j) {
          if (cartan_[i][j] != 0) acc += Num(cartan_[i][j]) * c[j];
        }
        w[i] = acc;
        if (acc < Num(0)) {
          c[i] -= acc;
          moved = true;
          break;
        }
      }
    }
    return w;
  }

 private:
  void build_roots();
  void build_published_order();

  TypeSpec spec_;
  std::string name_;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> d_;
  std::vector<Root> pos_;
  std::vector<int> height_;
  std::map<Root, int> index_;
  long min_norm_ = 0, max_norm_ = 0;
  std::vector<int> published_;        // internal (0-based) -> published (1-based)
  std::map<int, int> from_published_;  // published (1-based) -> internal
};

// Canonical Cartan matrix and symmetrizer for a simple family.
void canonical_cartan(char family, int rank, std::vector<std::vector<int>>& c,
                      std::vector<int>& d);

}  // namespace nilorb
