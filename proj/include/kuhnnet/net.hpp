#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace kuhnnet {

// One affine map: rows x cols weight matrix (row-major) plus a bias per row.
struct Layer {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> weights; // rows * cols, row-major
    std::vector<double> bias;    // rows

    Layer() = default;
    Layer(std::size_t r, std::size_t c)
        : rows(r), cols(c), weights(r * c, 0.0), bias(r, 0.0) {}

    double& w(std::size_t i, std::size_t j) { return weights[i * cols + j]; }
    double w(std::size_t i, std::size_t j) const { return weights[i * cols + j]; }
};

// Explicit feedforward ReLU network. ReLU is applied after every layer
// except the last, which stays affine. Immutable once built; evaluation is
// re-entrant.
struct ReluNet {
    std::vector<Layer> layers;

    std::size_t input_dim() const { return layers.empty() ? 0 : layers.front().cols; }
    std::size_t output_dim() const { return layers.empty() ? 0 : layers.back().rows; }

    // Throws input_error if layer dimensions are inconsistent or any entry
    // is non-finite.
    void validate() const;
};

std::vector<double> eval(const ReluNet& net, std::span<const double> x);
double eval_scalar(const ReluNet& net, std::span<const double> x);

// Batch scratch evaluator: reuses buffers across calls (single thread each).
class Evaluator {
public:
    explicit Evaluator(const ReluNet& net) : net_(&net) {}
    double scalar(std::span<const double> x);
    const std::vector<double>& operator()(std::span<const double> x);

private:
    const ReluNet* net_;
    std::vector<double> a_, b_;
};

// Hidden-layer count: a net with D affine layers has depth D-1.
std::size_t depth(const ReluNet& net);
// Largest hidden-layer row count; 0 for a single affine layer.
std::size_t width(const ReluNet& net);
std::vector<std::size_t> widthvec(const ReluNet& net);

std::size_t count_nonzero_params(const ReluNet& net, double tolerance = 0.0);
double param_max_norm(const ReluNet& net);

// g(f(x)): folds f's affine output layer into g's first layer.
ReluNet compose_sequential(const ReluNet& first, const ReluNet& second);

// Sparse row-by-row layer assembly used by the explicit constructions.
// A channel index refers to a row of the layer being built; values carried
// across layers are affine combinations of previous-layer channels.
struct LinComb {
    std::vector<std::pair<std::size_t, double>> terms; // (prev-layer channel, coefficient)
    double constant = 0.0;

    LinComb() = default;
    LinComb(std::size_t ch, double coef) : terms{{ch, coef}} {}
    LinComb& add(std::size_t ch, double coef) {
        terms.emplace_back(ch, coef);
        return *this;
    }
    LinComb& operator+=(const LinComb& o);
    LinComb scaled(double s) const;
};

class NetAssembler {
public:
    explicit NetAssembler(std::size_t input_dim) : prev_width_(input_dim), input_dim_(input_dim) {}

    // Adds a row sigma(pre-activation) to the layer under construction and
    // returns its channel index.
    std::size_t add_row(const LinComb& preact);
    // Seals the current hidden layer; subsequent rows start the next one.
    void close_layer();
    // Final affine layer from the given outputs; returns the finished net.
    ReluNet finish(const std::vector<LinComb>& outputs);

    std::size_t current_rows() const { return pending_.size(); }
    std::size_t layers_closed() const { return closed_.size(); }

private:
    struct Row {
        std::vector<std::pair<std::size_t, double>> terms;
        double bias;
    };
    Layer materialize(const std::vector<Row>& rows, std::size_t cols) const;

    std::vector<std::vector<Row>> closed_;
    std::vector<Row> pending_;
    std::size_t prev_width_;
    std::size_t input_dim_;
};

} // namespace kuhnnet
