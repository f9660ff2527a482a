/*
 * Copyright 2026 The NetSpam Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef NETSPAM_MODEL_HPP_
#define NETSPAM_MODEL_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "netspam/date.hpp"

namespace netspam {

enum class Label : std::uint8_t { kSpam, kGenuine, kUnknown };

struct Review {
  std::string review_id;
  std::string user_id;
  std::string item_id;
  int rating = 0;  // stars, 1..5
  Day date = 0;
  std::string text;
  Label label = Label::kUnknown;

  bool operator==(const Review&) const = default;
};

/// The eight spam features. Enum order is also the column order of every
/// feature export.
enum class FeatureKind : std::uint8_t {
  kDev = 0,  // rate deviation from item average
  kNr,       // negative ratio of a user's ratings
  kEtf,      // early time frame relative to the item's first review
  kBst,      // burstiness of a user's review dates
  kRes,      // ratio of exclamation sentences
  kPp1,      // ratio of first-person pronouns
  kAcs,      // average pairwise content similarity of a user's reviews
  kMcs,      // maximum pairwise content similarity of a user's reviews
};

inline constexpr std::size_t kFeatureCount = 8;

inline constexpr std::array<FeatureKind, kFeatureCount> kAllFeatures = {
    FeatureKind::kDev, FeatureKind::kNr,  FeatureKind::kEtf,
    FeatureKind::kBst, FeatureKind::kRes, FeatureKind::kPp1,
    FeatureKind::kAcs, FeatureKind::kMcs};

/// Review-behavioral, user-behavioral, review-linguistic, user-linguistic.
enum class FeatureCategory : std::uint8_t { kRB, kUB, kRL, kUL };

FeatureCategory category_of(FeatureKind kind) noexcept;

/// True for NR, BST, ACS, MCS: computed once per user and broadcast to all of
/// the user's reviews.
bool is_user_feature(FeatureKind kind) noexcept;

const char* feature_name(FeatureKind kind) noexcept;
const char* category_name(FeatureCategory cat) noexcept;

/// Parses "DEV", "NR", ... Throws Error(kInvalidArgument) on unknown names.
FeatureKind feature_from_name(const std::string& name);

enum class DevFormula : std::uint8_t {
  kCorrected,     // |rating - item mean| / 4
  kPaperLiteral,  // clamp(1 - (rating - item mean) / 4, 0, 1)
};

/// Knobs for feature extraction. Defaults follow the framework's reference
/// settings (tau=28, delta=7, s=20).
struct FeatureParams {
  int tau_days = 28;
  int delta_days = 7;
  double beta1 = 0.5;
  int levels = 20;  // s, the number of spam-certainty levels
  DevFormula dev_formula = DevFormula::kCorrected;
  std::unordered_set<std::string> pronoun_lexicon = default_pronoun_lexicon();
  // ACS/MCS pairwise cost is quadratic per user; only the most recent reviews
  // enter the pairing. 0 disables the cap.
  std::size_t similarity_review_cap = 50;

  static std::unordered_set<std::string> default_pronoun_lexicon();

  void validate() const;  // throws Error(kInvalidArgument)
};

/// Immutable, indexed review collection. Reviews are stored sorted by
/// review_id, so a review's position doubles as its canonical rank; per-user
/// and per-item lists are sorted by (date, review_id).
class Dataset {
 public:
  Dataset() = default;

  const std::vector<Review>& reviews() const noexcept { return reviews_; }
  std::size_t size() const noexcept { return reviews_.size(); }
  const Review& review(std::size_t pos) const { return reviews_[pos]; }

  /// Position of a review_id, or throws Error(kUnknownReview).
  std::size_t position_of(const std::string& review_id) const;
  bool contains(const std::string& review_id) const noexcept;

  /// Review positions per user/item, sorted by (date, review_id).
  const std::vector<std::vector<std::size_t>>& reviews_by_user() const noexcept {
    return user_reviews_;
  }
  const std::vector<std::vector<std::size_t>>& reviews_by_item() const noexcept {
    return item_reviews_;
  }

  const std::vector<std::string>& user_ids() const noexcept { return user_ids_; }
  const std::vector<std::string>& item_ids() const noexcept { return item_ids_; }

  /// Index of the review's author/item in user_ids()/item_ids().
  std::size_t user_of(std::size_t pos) const { return review_user_[pos]; }
  std::size_t item_of(std::size_t pos) const { return review_item_[pos]; }

  std::size_t label_count(Label label) const noexcept;

  bool operator==(const Dataset& other) const {
    return reviews_ == other.reviews_;
  }

  friend Dataset validate_dataset(std::vector<Review> raw);

 private:
  std::vector<Review> reviews_;
  std::vector<std::string> user_ids_;
  std::vector<std::string> item_ids_;
  std::vector<std::size_t> review_user_;
  std::vector<std::size_t> review_item_;
  std::vector<std::vector<std::size_t>> user_reviews_;
  std::vector<std::vector<std::size_t>> item_reviews_;
  std::unordered_map<std::string, std::size_t> id_to_pos_;
};

/// Validates and indexes raw reviews. Throws Error(kDuplicateReviewId) or
/// Error(kRatingOutOfRange), naming the offending record.
Dataset validate_dataset(std::vector<Review> raw);

/// Dense per-review feature values, every cell in [0,1]. Rows follow dataset
/// positions, columns follow FeatureKind order.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  explicit FeatureMatrix(std::size_t n_reviews)
      : n_(n_reviews), values_(n_reviews * kFeatureCount, 0.0) {}

  std::size_t review_count() const noexcept { return n_; }

  double at(std::size_t pos, FeatureKind kind) const {
    return values_[pos * kFeatureCount + static_cast<std::size_t>(kind)];
  }
  void set(std::size_t pos, FeatureKind kind, double value) {
    values_[pos * kFeatureCount + static_cast<std::size_t>(kind)] = value;
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
};

}  // namespace netspam

#endif  // NETSPAM_MODEL_HPP_
