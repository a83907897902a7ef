#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dda {

// Dense row-major float tensor, rank 1..4. Image batches use the layout
// (batch, channels, height, width); vectors and matrices just use fewer dims.
// Hot loops index .data directly; at() is for tests and cold paths.
struct Tensor {
    std::vector<int> shape;
    std::vector<float> data;

    Tensor() = default;
    explicit Tensor(std::vector<int> shp);

    static Tensor zeros(std::vector<int> shp) { return Tensor(std::move(shp)); }
    static Tensor full(std::vector<int> shp, float value);

    int64_t numel() const;
    int rank() const { return static_cast<int>(shape.size()); }
    int dim(int i) const;

    // 4-D accessors (batch, channel, row, col)
    float& at(int b, int c, int y, int x);
    float at(int b, int c, int y, int x) const;
    // 2-D accessor (row, col)
    float& at(int i, int j);
    float at(int i, int j) const;

    bool same_shape(const Tensor& other) const { return shape == other.shape; }
    std::string shape_str() const;
};

// Elementwise helpers used all over the projection and training code.
Tensor operator+(const Tensor& a, const Tensor& b);
Tensor operator-(const Tensor& a, const Tensor& b);
Tensor operator*(float s, const Tensor& a);
void axpy(float alpha, const Tensor& x, Tensor& y);  // y += alpha * x

float l2_norm(const Tensor& a);
float rmse(const Tensor& a, const Tensor& b);
float mean(const Tensor& a);
void clamp01(Tensor& a);
bool all_finite(const Tensor& a);

// Throws std::invalid_argument with a readable message when shapes differ.
void require_same_shape(const Tensor& a, const Tensor& b, const char* where);

}  // namespace dda
