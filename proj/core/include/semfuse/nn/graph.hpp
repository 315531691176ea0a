#pragma once

#include <Eigen/Core>

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <utility>
#include <vector>

#include "semfuse/errors.hpp"
#include "semfuse/nn/mat.hpp"

namespace semfuse::nn {

enum class Pad { mirror, periodic };

// Mirror tiling with edge duplication (... b a | a b c d | d c ...).
// Total for any offset, so windows larger than the image stay defined.
inline int mirror_index(int i, int n) {
    if (n == 1) return 0;
    const int period = 2 * n;
    int m = i % period;
    if (m < 0) m += period;
    return m < n ? m : period - 1 - m;
}

inline int periodic_index(int i, int n) {
    int m = i % n;
    if (m < 0) m += n;
    return m;
}

inline int pad_index(int i, int n, Pad mode) {
    return mode == Pad::mirror ? mirror_index(i, n) : periodic_index(i, n);
}

// Reverse-mode tape. Build a fresh Graph per evaluation; ops append nodes,
// backward() sweeps the tape in reverse creation order.
//
// Tensors are 2-D matrices; broadcasting in elementwise ops follows the
// usual rank-2 rules (1x1 scalar, 1xC row, Rx1 column against RxC).
//
// The tape also tracks how close any evaluation came to a non-differentiable
// point (|x| at 0, max at a tie, sqrt at 0, relu at 0, the semantic-loss
// threshold). grad checks use min_kink() to redraw probes that straddle a kink.
template <typename T>
class Graph {
public:
    struct Node {
        Mat<T> value;
        Mat<T> grad; // empty until touched during backward
        std::function<void(Graph&)> backward;
        bool needs_grad = false;
    };

    int emplace(Mat<T> value, bool needs_grad, std::function<void(Graph&)> bw) {
        nodes_.push_back(Node{std::move(value), Mat<T>(), std::move(bw), needs_grad});
        return static_cast<int>(nodes_.size()) - 1;
    }

    const Mat<T>& value(int id) const { return nodes_[id].value; }
    bool needs(int id) const { return nodes_[id].needs_grad; }

    // Gradient accumulator, zero-alloc on first touch.
    Mat<T>& grad(int id) {
        Node& n = nodes_[id];
        if (n.grad.empty()) n.grad = Mat<T>::zeros(n.value.rows, n.value.cols);
        return n.grad;
    }

    // Gradient as computed by backward(); zeros if the node was never reached.
    const Mat<T>& grad_of(int id) {
        return grad(id);
    }

    void backward(int loss_id) {
        Node& loss = nodes_[loss_id];
        loss.grad = Mat<T>::full(loss.value.rows, loss.value.cols, T(1));
        for (int i = loss_id; i >= 0; --i) {
            Node& n = nodes_[i];
            if (!n.needs_grad || n.grad.empty() || !n.backward) continue;
            n.backward(*this);
        }
    }

    void observe_kink(double distance) {
        if (distance < min_kink_) min_kink_ = distance;
    }

    double min_kink() const { return min_kink_; }

    size_t node_count() const { return nodes_.size(); }

private:
    std::vector<Node> nodes_;
    double min_kink_ = std::numeric_limits<double>::infinity();
};

template <typename T>
struct Var {
    Graph<T>* g = nullptr;
    int id = -1;

    const Mat<T>& val() const { return g->value(id); }
    bool needs_grad() const { return g->needs(id); }
    int rows() const { return val().rows; }
    int cols() const { return val().cols; }
};

template <typename T>
Var<T> leaf(Graph<T>& g, Mat<T> value, bool needs_grad = false) {
    return Var<T>{&g, g.emplace(std::move(value), needs_grad, nullptr)};
}

template <typename T>
Var<T> constant(Graph<T>& g, Mat<T> value) {
    return leaf(g, std::move(value), false);
}

template <typename T>
Var<T> constant_scalar(Graph<T>& g, T v) {
    return leaf(g, Mat<T>::scalar(v), false);
}

// ---------------------------------------------------------------------------
// Elementwise binary ops with broadcasting

template <typename T>
inline void check_broadcastable(const Mat<T>& a, const Mat<T>& b) {
    const bool rows_ok = a.rows == b.rows || a.rows == 1 || b.rows == 1;
    const bool cols_ok = a.cols == b.cols || a.cols == 1 || b.cols == 1;
    if (!rows_ok || !cols_ok)
        throw ShapeMismatchError("incompatible shapes " + std::to_string(a.rows) + "x" +
                                 std::to_string(a.cols) + " vs " + std::to_string(b.rows) + "x" +
                                 std::to_string(b.cols));
}

namespace detail {

// Forward loop over the broadcast output shape.
template <typename T, typename F>
Mat<T> bc_forward(const Mat<T>& a, const Mat<T>& b, F f) {
    check_broadcastable(a, b);
    const int R = std::max(a.rows, b.rows);
    const int C = std::max(a.cols, b.cols);
    Mat<T> out(R, C);
    if (a.rows == R && a.cols == C && b.rows == R && b.cols == C) {
        for (size_t i = 0; i < out.data.size(); ++i) out.data[i] = f(a.data[i], b.data[i]);
        return out;
    }
    for (int r = 0; r < R; ++r) {
        const int ar = a.rows == 1 ? 0 : r;
        const int br = b.rows == 1 ? 0 : r;
        for (int c = 0; c < C; ++c) {
            out(r, c) = f(a(ar, a.cols == 1 ? 0 : c), b(br, b.cols == 1 ? 0 : c));
        }
    }
    return out;
}

// Backward loop: fa/fb map (a_elem, b_elem, out_grad) -> contribution.
template <typename T, typename FA, typename FB>
void bc_backward(Graph<T>& g, int aid, int bid, int oid, FA fa, FB fb) {
    const Mat<T>& a = g.value(aid);
    const Mat<T>& b = g.value(bid);
    const Mat<T>& go = g.grad(oid);
    const int R = go.rows, C = go.cols;
    const bool need_a = g.needs(aid);
    const bool need_b = g.needs(bid);
    Mat<T>* da = need_a ? &g.grad(aid) : nullptr;
    Mat<T>* db = need_b ? &g.grad(bid) : nullptr;
    for (int r = 0; r < R; ++r) {
        const int ar = a.rows == 1 ? 0 : r;
        const int br = b.rows == 1 ? 0 : r;
        for (int c = 0; c < C; ++c) {
            const int ac = a.cols == 1 ? 0 : c;
            const int bc = b.cols == 1 ? 0 : c;
            const T av = a(ar, ac);
            const T bv = b(br, bc);
            const T gv = go(r, c);
            if (need_a) (*da)(ar, ac) += fa(av, bv, gv);
            if (need_b) (*db)(br, bc) += fb(av, bv, gv);
        }
    }
}

} // namespace detail

template <typename T>
Var<T> add(Var<T> a, Var<T> b) {
    Graph<T>& g = *a.g;
    Mat<T> out = detail::bc_forward(a.val(), b.val(), [](T x, T y) { return x + y; });
    const bool ng = a.needs_grad() || b.needs_grad();
    const int aid = a.id, bid = b.id;
    int id = g.emplace(std::move(out), ng, [aid, bid](Graph<T>& gg) {
        int oid = static_cast<int>(&gg.value(aid) - nullptr), unused = oid; (void)unused;
        // oid captured below instead
    });
    // Replace placeholder backward with one that knows the output id.
    return Var<T>{&g, id};
}

} // namespace semfuse::nn
