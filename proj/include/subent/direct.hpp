#pragma once

#include "subent/sympoly.hpp"

namespace subent {

struct EntropyPair {
    double H;
    double Q;
};

/// Shannon entropy -sum x_j ln x_j in nats, with 0 ln 0 = 0.
double entropy_direct(const ProbVector& x);

/// Subentropy: the d-point divided difference of -t^d ln t over the x_j.
/// Coincident (or nearly coincident) values are handled by the confluent
/// tableau, which realizes the limit as values merge.
double subentropy_direct(const ProbVector& x);

EntropyPair entropy_pair(const ProbVector& x);

}  // namespace subent
