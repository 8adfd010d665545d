#include "galcryst/mv_map.hpp"

#include <set>

#include "galcryst/plactic.hpp"

namespace galcryst {

MVLabel::MVLabel(DominantWeight lambda, Gallery tableau)
    : lambda_(std::move(lambda)), tableau_(std::move(tableau)), mu_(weight(tableau_))
{
    if (lambda_.rank() != tableau_.rank())
        throw Error(ErrorCode::RankMismatch, "label weight and tableau have different ranks");
    if (!is_ssyt(tableau_))
        throw Error(ErrorCode::InvalidLabel,
                    "'" + format_gallery(tableau_) + "' is not a semistandard tableau");
    if (weight_of_shape(tableau_.shape(), tableau_.rank()) != lambda_)
        throw Error(ErrorCode::InvalidLabel, "tableau shape does not match lambda");
    if (!dominance_leq(mu_, lambda_.to_weight()))
        throw Error(ErrorCode::InvalidLabel, "tableau weight is not below lambda");
}

MVLabel mv_label(const Gallery& g)
{
    Gallery t = normal_form(g);
    DominantWeight lambda = weight_of_shape(t.shape(), t.rank());
    return MVLabel(std::move(lambda), std::move(t));
}

std::vector<Gallery> fiber(const MVLabel& z, const Shape& shape)
{
    std::vector<Gallery> out;
    for (auto& g : enumerate_galleries(shape, z.tableau().rank()))
        if (normal_form(g) == z.tableau())
            out.push_back(std::move(g));
    return out;
}

std::map<DominantWeight, std::size_t> image_weights(const Shape& shape, int rank)
{
    std::map<DominantWeight, std::size_t> out;
    for (const auto& entry : decompose(shape, rank).entries)
        out.emplace(entry.lambda, entry.multiplicity);
    return out;
}

SurjectivityReport verify_surjectivity(const Shape& shape, int rank)
{
    SurjectivityReport report;
    std::set<Gallery> hit;
    for (const auto& g : enumerate_galleries(shape, rank)) {
        ++report.galleries;
        hit.insert(normal_form(g));
    }
    report.labels_hit = hit.size();
    for (const auto& [lambda, mult] : image_weights(shape, rank)) {
        for (auto& t : enumerate_ssyt(lambda)) {
            ++report.labels_expected;
            if (!hit.contains(t))
                report.missed.emplace_back(lambda, std::move(t));
        }
    }
    return report;
}

}  // namespace galcryst
