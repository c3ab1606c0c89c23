#include "kuhnnet/net.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kuhnnet/errors.hpp"

namespace kuhnnet {

void ReluNet::validate() const {
    if (layers.empty()) throw input_error("network has no layers");
    std::size_t prev = layers.front().cols;
    for (std::size_t l = 0; l < layers.size(); ++l) {
        const Layer& layer = layers[l];
        if (layer.rows == 0 || layer.cols == 0)
            throw input_error("layer " + std::to_string(l) + " has zero dimension");
        if (layer.cols != prev)
            throw input_error("layer " + std::to_string(l) + " expects " + std::to_string(layer.cols) +
                              " inputs, previous layer provides " + std::to_string(prev));
        if (layer.weights.size() != layer.rows * layer.cols || layer.bias.size() != layer.rows)
            throw input_error("layer " + std::to_string(l) + " has inconsistent storage");
        for (double v : layer.weights)
            if (!std::isfinite(v)) throw input_error("non-finite weight in layer " + std::to_string(l));
        for (double v : layer.bias)
            if (!std::isfinite(v)) throw input_error("non-finite bias in layer " + std::to_string(l));
        prev = layer.rows;
    }
}

namespace {

void affine_into(const Layer& layer, std::span<const double> in, std::vector<double>& out) {
    out.assign(layer.rows, 0.0);
    const double* w = layer.weights.data();
    for (std::size_t i = 0; i < layer.rows; ++i) {
        double acc = layer.bias[i];
        const double* row = w + i * layer.cols;
        for (std::size_t j = 0; j < layer.cols; ++j) acc += row[j] * in[j];
        out[i] = acc;
    }
}

void relu_inplace(std::vector<double>& v) {
    for (double& x : v) x = x > 0.0 ? x : 0.0;
}

} // namespace

std::vector<double> eval(const ReluNet& net, std::span<const double> x) {
    if (net.layers.empty()) throw input_error("empty network");
    if (x.size() != net.input_dim())
        throw input_error("input has dimension " + std::to_string(x.size()) + ", expected " +
                          std::to_string(net.input_dim()));
    std::vector<double> cur, nxt;
    std::span<const double> in = x;
    for (std::size_t l = 0; l < net.layers.size(); ++l) {
        affine_into(net.layers[l], in, nxt);
        if (l + 1 < net.layers.size()) relu_inplace(nxt);
        std::swap(cur, nxt);
        in = cur;
    }
    return cur;
}

double eval_scalar(const ReluNet& net, std::span<const double> x) {
    std::vector<double> out = eval(net, x);
    if (out.size() != 1) throw input_error("network output is not scalar");
    return out[0];
}

const std::vector<double>& Evaluator::operator()(std::span<const double> x) {
    const ReluNet& net = *net_;
    if (x.size() != net.input_dim())
        throw input_error("input has dimension " + std::to_string(x.size()) + ", expected " +
                          std::to_string(net.input_dim()));
    std::span<const double> in = x;
    for (std::size_t l = 0; l < net.layers.size(); ++l) {
        affine_into(net.layers[l], in, b_);
        if (l + 1 < net.layers.size()) relu_inplace(b_);
        std::swap(a_, b_);
        in = a_;
    }
    return a_;
}

double Evaluator::scalar(std::span<const double> x) {
    const auto& out = (*this)(x);
    if (out.size() != 1) throw input_error("network output is not scalar");
    return out[0];
}

std::size_t depth(const ReluNet& net) { return net.layers.empty() ? 0 : net.layers.size() - 1; }

std::size_t width(const ReluNet& net) {
    std::size_t w = 0;
    for (std::size_t l = 0; l + 1 < net.layers.size(); ++l) w = std::max(w, net.layers[l].rows);
    return w;
}

std::vector<std::size_t> widthvec(const ReluNet& net) {
    std::vector<std::size_t> v;
    for (std::size_t l = 0; l + 1 < net.layers.size(); ++l) v.push_back(net.layers[l].rows);
    return v;
}

std::size_t count_nonzero_params(const ReluNet& net, double tolerance) {
    if (!(tolerance >= 0.0) || !std::isfinite(tolerance)) throw input_error("tolerance must be finite and >= 0");
    std::size_t n = 0;
    for (const Layer& layer : net.layers) {
        for (double v : layer.weights) n += std::abs(v) > tolerance ? 1 : 0;
        for (double v : layer.bias) n += std::abs(v) > tolerance ? 1 : 0;
    }
    return n;
}

double param_max_norm(const ReluNet& net) {
    double m = 0.0;
    for (const Layer& layer : net.layers) {
        for (double v : layer.weights) m = std::max(m, std::abs(v));
        for (double v : layer.bias) m = std::max(m, std::abs(v));
    }
    return m;
}

ReluNet compose_sequential(const ReluNet& first, const ReluNet& second) {
    first.validate();
    second.validate();
    if (second.input_dim() != first.output_dim())
        throw input_error("composition dimension mismatch");
    ReluNet out;
    out.layers.assign(first.layers.begin(), first.layers.end() - 1);
    const Layer& tail = first.layers.back();
    const Layer& head = second.layers.front();
    Layer fused(head.rows, tail.cols);
    for (std::size_t i = 0; i < head.rows; ++i) {
        double b = head.bias[i];
        for (std::size_t k = 0; k < head.cols; ++k) {
            const double c = head.w(i, k);
            if (c == 0.0) continue;
            b += c * tail.bias[k];
            for (std::size_t j = 0; j < tail.cols; ++j) fused.w(i, j) += c * tail.w(k, j);
        }
        fused.bias[i] = b;
    }
    out.layers.push_back(std::move(fused));
    out.layers.insert(out.layers.end(), second.layers.begin() + 1, second.layers.end());
    return out;
}

LinComb& LinComb::operator+=(const LinComb& o) {
    terms.insert(terms.end(), o.terms.begin(), o.terms.end());
    constant += o.constant;
    return *this;
}

LinComb LinComb::scaled(double s) const {
    LinComb r;
    r.constant = constant * s;
    r.terms.reserve(terms.size());
    for (auto [ch, c] : terms) r.terms.emplace_back(ch, c * s);
    return r;
}

std::size_t NetAssembler::add_row(const LinComb& preact) {
    Row row;
    row.bias = preact.constant;
    row.terms = preact.terms;
    pending_.push_back(std::move(row));
    return pending_.size() - 1;
}

void NetAssembler::close_layer() {
    if (pending_.empty()) throw input_error("cannot close an empty layer");
    closed_.push_back(std::move(pending_));
    pending_.clear();
    prev_width_ = closed_.back().size();
}

Layer NetAssembler::materialize(const std::vector<Row>& rows, std::size_t cols) const {
    Layer layer(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        layer.bias[i] = rows[i].bias;
        for (auto [ch, c] : rows[i].terms) {
            if (ch >= cols) throw input_error("assembler row references channel out of range");
            layer.w(i, ch) += c;
        }
    }
    return layer;
}

ReluNet NetAssembler::finish(const std::vector<LinComb>& outputs) {
    if (!pending_.empty()) throw input_error("unclosed layer in assembler");
    ReluNet net;
    std::size_t cols = input_dim_;
    for (const auto& rows : closed_) {
        net.layers.push_back(materialize(rows, cols));
        cols = rows.size();
    }
    std::vector<Row> out_rows;
    out_rows.reserve(outputs.size());
    for (const auto& o : outputs) out_rows.push_back(Row{o.terms, o.constant});
    net.layers.push_back(materialize(out_rows, cols));
    net.validate();
    return net;
}

} // namespace kuhnnet
