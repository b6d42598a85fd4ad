#pragma once

// Minimal dense layers with hand-written backward passes. Batches are column-major:
// every activation matrix is (features x batch).

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "neuroimagen/common.hpp"

namespace neuroimagen::nn {

struct Parameter {
    std::string name;
    Mat value;
    Mat grad;

    Parameter() = default;
    Parameter(std::string n, Eigen::Index rows, Eigen::Index cols)
        : name(std::move(n)), value(Mat::Zero(rows, cols)), grad(Mat::Zero(rows, cols)) {}
    void zero_grad() { grad.setZero(); }
};

using ParameterRefs = std::vector<Parameter*>;

// Uniform(-1/sqrt(fan_in), 1/sqrt(fan_in)).
void init_uniform(Parameter& p, int fan_in, std::mt19937_64& rng);

class Linear {
public:
    Linear() = default;
    Linear(const std::string& name, int in, int out, std::mt19937_64& rng);

    int in_features() const { return static_cast<int>(weight.value.cols()); }
    int out_features() const { return static_cast<int>(weight.value.rows()); }

    Mat forward(const Mat& x) const;
    // Accumulates parameter gradients and returns dL/dx.
    Mat backward(const Mat& x, const Mat& grad_out);
    void parameters(ParameterRefs& out);

    Parameter weight;  // out x in
    Parameter bias;    // out x 1
};

Mat leaky_relu(const Mat& x, double slope = 0.2);
Mat leaky_relu_backward(const Mat& x, const Mat& grad_out, double slope = 0.2);
Mat sigmoid(const Mat& x);

// Single GRU layer:
//   z = sig(Wz x + Uz h + bz), r = sig(Wr x + Ur h + br)
//   n = tanh(Wn x + bn + r * (Un h + bhn)),  h' = (1 - z) * n + z * h
class GruLayer {
public:
    GruLayer() = default;
    GruLayer(const std::string& name, int input, int hidden, std::mt19937_64& rng);

    int input_size() const { return static_cast<int>(w_ih.value.cols()); }
    int hidden_size() const { return static_cast<int>(w_hh.value.cols()); }

    struct Trace {
        std::vector<Mat> inputs;  // x_t
        std::vector<Mat> hidden;  // h_0 .. h_T
        std::vector<Mat> z, r, n, hn;  // hn = Un h + bhn
    };

    // Runs over the whole sequence from h_0 = 0; returns the hidden states h_1..h_T.
    std::vector<Mat> forward(const std::vector<Mat>& inputs, Trace* trace) const;
    // grad_hidden[t] is dL/dh_{t+1}; returns dL/dx_t for every step.
    std::vector<Mat> backward(const Trace& trace, const std::vector<Mat>& grad_hidden);
    void parameters(ParameterRefs& out);

    // Gates stacked as [z; r; n].
    Parameter w_ih;  // 3H x I
    Parameter w_hh;  // 3H x H
    Parameter b_ih;  // 3H x 1
    Parameter b_hh;  // 3H x 1
};

class Adam {
public:
    struct Options {
        double lr = 1e-3;
        double beta1 = 0.9;
        double beta2 = 0.999;
        double eps = 1e-8;
    };

    Adam() = default;
    Adam(ParameterRefs params, Options options);

    void zero_grad();
    void step();
    std::int64_t steps() const { return t_; }
    void set_lr(double lr) { opt_.lr = lr; }

private:
    ParameterRefs params_;
    Options opt_;
    std::vector<Mat> m_, v_;
    std::int64_t t_ = 0;
};

}  // namespace neuroimagen::nn
