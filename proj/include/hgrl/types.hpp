#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace hgrl {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

using NodeId = int;  // dense internal id, 0..n-1

struct Edge {
    NodeId src = 0;
    NodeId dst = 0;
    int relation = 0;
};

// 17 significant digits: enough for exact double round-trips in text form.
std::string fmt17(double x);

// Comma-joined fmt17 values, the feature/embedding cell format.
std::string join_csv(const Eigen::Ref<const Vector>& v);

}  // namespace hgrl
