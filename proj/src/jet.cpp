#include "multispin/jet.hpp"

#include <sstream>

namespace multispin {

JetScalar JetScalar::variable(const std::string& label, GaussianRational value, GaussianRational scale) {
  JetScalar j(std::move(value));
  if (!scale.is_zero()) j.gradient_[label] = std::move(scale);
  return j;
}

GaussianRational JetScalar::derivative(const std::string& label) const {
  auto it = gradient_.find(label);
  return it == gradient_.end() ? GaussianRational{} : it->second;
}

JetScalar JetScalar::conj() const {
  JetScalar out(value_.conj());
  for (const auto& [k, v] : gradient_) out.gradient_[k] = v.conj();
  return out;
}

JetScalar JetScalar::operator-() const {
  JetScalar out(-value_);
  for (const auto& [k, v] : gradient_) out.gradient_[k] = -v;
  return out;
}

void JetScalar::prune() {
  std::erase_if(gradient_, [](const auto& kv) { return kv.second.is_zero(); });
}

JetScalar& JetScalar::operator+=(const JetScalar& rhs) {
  value_ += rhs.value_;
  for (const auto& [k, v] : rhs.gradient_) gradient_[k] += v;
  prune();
  return *this;
}

JetScalar& JetScalar::operator-=(const JetScalar& rhs) {
  value_ -= rhs.value_;
  for (const auto& [k, v] : rhs.gradient_) gradient_[k] -= v;
  prune();
  return *this;
}

JetScalar& JetScalar::operator*=(const JetScalar& rhs) {
  // (a + da)(b + db) = ab + a db + b da, second order dropped.
  Gradient g;
  for (const auto& [k, v] : gradient_) g[k] += v * rhs.value_;
  for (const auto& [k, v] : rhs.gradient_) g[k] += value_ * v;
  value_ *= rhs.value_;
  gradient_ = std::move(g);
  prune();
  return *this;
}

JetScalar& JetScalar::operator*=(const GaussianRational& rhs) {
  value_ *= rhs;
  for (auto& [k, v] : gradient_) v *= rhs;
  prune();
  return *this;
}

std::string JetScalar::to_string() const {
  std::ostringstream os;
  os << value_;
  for (const auto& [k, v] : gradient_) os << " + (" << v << ")d" << k;
  return os.str();
}

}  // namespace multispin
