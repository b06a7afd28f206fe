#pragma once

#include <vector>

#include "linrel/relation.hpp"

namespace testutil {

inline linrel::Matrix mat(const linrel::FieldSpec& k, std::size_t cols,
                          const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<linrel::Scalar>> scalar_rows;
    for (const auto& row : rows) {
        std::vector<linrel::Scalar> r;
        for (long v : row) r.push_back(linrel::Scalar::from_int(k, v));
        scalar_rows.push_back(std::move(r));
    }
    return linrel::Matrix::from_rows(k, cols, scalar_rows);
}

inline linrel::Subspace sp(const linrel::FieldSpec& k, std::size_t cols,
                           const std::vector<std::vector<long>>& rows) {
    return linrel::Subspace::span(mat(k, cols, rows));
}

inline std::vector<linrel::Scalar> vec(const linrel::FieldSpec& k, const std::vector<long>& v) {
    std::vector<linrel::Scalar> out;
    for (long x : v) out.push_back(linrel::Scalar::from_int(k, x));
    return out;
}

inline linrel::LinearRelation rel(const linrel::VectorSpaceObj& target,
                                  const linrel::VectorSpaceObj& source,
                                  const std::vector<std::vector<long>>& rows) {
    return linrel::LinearRelation(target, source,
                                  linrel::Subspace::span(mat(target.field, target.dim + source.dim, rows)));
}

}  // namespace testutil
