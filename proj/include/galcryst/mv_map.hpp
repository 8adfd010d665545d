#pragma once

// Galleries to MV cycle labels. An MV cycle in Z(lambda)_mu is named by its
// semistandard tableau of shape underline(lambda); no geometry is modelled.

#include <map>
#include <vector>

#include "galcryst/crystal_graph.hpp"
#include "galcryst/gallery.hpp"

namespace galcryst {

class MVLabel {
public:
    // Validates: tableau is a semistandard tableau whose columns sum to
    // lambda, and mu = weight(tableau) <= lambda. Throws InvalidLabel.
    MVLabel(DominantWeight lambda, Gallery tableau);

    const DominantWeight& lambda() const noexcept { return lambda_; }
    const Gallery& tableau() const noexcept { return tableau_; }
    const WeightVector& mu() const noexcept { return mu_; }

    bool operator==(const MVLabel&) const = default;

private:
    DominantWeight lambda_;
    Gallery tableau_;
    WeightVector mu_;
};

MVLabel mv_label(const Gallery& g);

// Galleries of shape d whose label is z, in canonical order.
std::vector<Gallery> fiber(const MVLabel& z, const Shape& shape);

// lambda -> n^lambda_d over X+_d.
std::map<DominantWeight, std::size_t> image_weights(const Shape& shape, int rank);

struct SurjectivityReport {
    std::size_t galleries = 0;
    std::size_t labels_expected = 0;
    std::size_t labels_hit = 0;
    std::vector<MVLabel> missed;

    bool ok() const { return missed.empty(); }
};

SurjectivityReport verify_surjectivity(const Shape& shape, int rank);

}  // namespace galcryst
