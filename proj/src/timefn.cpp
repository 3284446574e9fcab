#include "deltadg/timefn.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace deltadg {

struct TimeFunction::Node {
  Kind kind = Kind::kZero;
  double p0 = 0.0;  // constant value, omega, tau, or scale
  double p1 = 0.0;  // rate
  int order = 0;    // erf window derivative order
  std::vector<double> coeffs;
  std::vector<TimeFunction> children;
};

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Physicists' Hermite polynomial H_n(z).
double hermite(int n, double z) {
  if (n == 0) return 1.0;
  double h_prev = 1.0;
  double h = 2.0 * z;
  for (int m = 1; m < n; ++m) {
    double next = 2.0 * z * h - 2.0 * m * h_prev;
    h_prev = h;
    h = next;
  }
  return h;
}

}  // namespace

TimeFunction::TimeFunction() : node_(std::make_shared<Node>()) {}

TimeFunction::TimeFunction(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

TimeFunction TimeFunction::constant(double c) {
  if (c == 0.0) return zero();
  auto n = std::make_shared<Node>();
  n->kind = Kind::kConstant;
  n->p0 = c;
  return TimeFunction(std::move(n));
}

TimeFunction TimeFunction::cos(double omega) {
  if (omega == 0.0) return constant(1.0);
  auto n = std::make_shared<Node>();
  n->kind = Kind::kCos;
  n->p0 = omega;
  return TimeFunction(std::move(n));
}

TimeFunction TimeFunction::sin(double omega) {
  if (omega == 0.0) return zero();
  auto n = std::make_shared<Node>();
  n->kind = Kind::kSin;
  n->p0 = omega;
  return TimeFunction(std::move(n));
}

TimeFunction TimeFunction::polynomial(std::vector<double> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
  if (coeffs.empty()) return zero();
  if (coeffs.size() == 1) return constant(coeffs[0]);
  auto n = std::make_shared<Node>();
  n->kind = Kind::kPolynomial;
  n->coeffs = std::move(coeffs);
  return TimeFunction(std::move(n));
}

TimeFunction TimeFunction::erf_window(double tau, double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("erf_window: rate must be positive");
  auto n = std::make_shared<Node>();
  n->kind = Kind::kErfWindow;
  n->p0 = tau;
  n->p1 = rate;
  return TimeFunction(std::move(n));
}

TimeFunction TimeFunction::sum(std::vector<TimeFunction> terms) {
  std::vector<TimeFunction> flat;
  for (auto& term : terms) {
    if (term.is_zero()) continue;
    if (term.kind() == Kind::kSum) {
      for (const auto& c : term.children()) flat.push_back(c);
    } else {
      flat.push_back(std::move(term));
    }
  }
  if (flat.empty()) return zero();
  if (flat.size() == 1) return flat.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::kSum;
  n->children = std::move(flat);
  return TimeFunction(std::move(n));
}

TimeFunction TimeFunction::product(TimeFunction a, TimeFunction b) {
  if (a.is_zero() || b.is_zero()) return zero();
  if (a.kind() == Kind::kConstant) return scaled(a.constant_value(), std::move(b));
  if (b.kind() == Kind::kConstant) return scaled(b.constant_value(), std::move(a));
  auto n = std::make_shared<Node>();
  n->kind = Kind::kProduct;
  n->children = {std::move(a), std::move(b)};
  return TimeFunction(std::move(n));
}

TimeFunction TimeFunction::scaled(double c, TimeFunction inner) {
  if (c == 0.0 || inner.is_zero()) return zero();
  if (c == 1.0) return inner;
  if (inner.kind() == Kind::kConstant) return constant(c * inner.constant_value());
  if (inner.kind() == Kind::kScaled) return scaled(c * inner.scale(), inner.inner());
  auto n = std::make_shared<Node>();
  n->kind = Kind::kScaled;
  n->p0 = c;
  n->children = {std::move(inner)};
  return TimeFunction(std::move(n));
}

TimeFunction::Kind TimeFunction::kind() const { return node_->kind; }

double TimeFunction::omega() const {
  if (kind() != Kind::kCos && kind() != Kind::kSin)
    throw std::logic_error("TimeFunction::omega on non-trigonometric node");
  return node_->p0;
}

double TimeFunction::constant_value() const {
  if (kind() == Kind::kZero) return 0.0;
  if (kind() != Kind::kConstant) throw std::logic_error("TimeFunction::constant_value on non-constant");
  return node_->p0;
}

double TimeFunction::scale() const {
  if (kind() != Kind::kScaled) throw std::logic_error("TimeFunction::scale on non-scaled node");
  return node_->p0;
}

const TimeFunction& TimeFunction::inner() const {
  if (kind() != Kind::kScaled) throw std::logic_error("TimeFunction::inner on non-scaled node");
  return node_->children.front();
}

const std::vector<TimeFunction>& TimeFunction::children() const { return node_->children; }

double TimeFunction::eval(double t) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::kZero:
      return 0.0;
    case Kind::kConstant:
      return n.p0;
    case Kind::kCos:
      return std::cos(n.p0 * t);
    case Kind::kSin:
      return std::sin(n.p0 * t);
    case Kind::kPolynomial: {
      double r = 0.0;
      for (auto it = n.coeffs.rbegin(); it != n.coeffs.rend(); ++it) r = r * t + *it;
      return r;
    }
    case Kind::kErfWindow: {
      const double root = std::sqrt(n.p1);
      const double z = root * (t - 0.5 * n.p0);
      if (n.order == 0) return 0.5 * std::erfc(-z);
      // d^k/dt^k of the window = sqrt(rate/pi) (-sqrt(rate))^(k-1) H_{k-1}(z) exp(-z^2)
      const int m = n.order - 1;
      return std::sqrt(n.p1 / std::numbers::pi) * std::pow(-root, m) * hermite(m, z) *
             std::exp(-z * z);
    }
    case Kind::kSum: {
      double r = 0.0;
      for (const auto& c : n.children) r += c.eval(t);
      return r;
    }
    case Kind::kProduct:
      return n.children[0].eval(t) * n.children[1].eval(t);
    case Kind::kScaled:
      return n.p0 * n.children[0].eval(t);
  }
  return 0.0;
}

TimeFunction TimeFunction::derivative(int k) const {
  if (k < 0) throw std::invalid_argument("TimeFunction::derivative: negative order");
  if (k == 0) return *this;
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::kZero:
    case Kind::kConstant:
      return zero();
    case Kind::kCos:
    case Kind::kSin: {
      // d^k cos(wt) = w^k cos(wt + k pi/2); cycle through {cos, -sin, -cos, sin}.
      const double wk = std::pow(n.p0, k);
      const bool is_cos = n.kind == Kind::kCos;
      const int phase = k % 4;
      switch (phase) {
        case 0:
          return scaled(wk, *this);
        case 1:
          return is_cos ? scaled(-wk, sin(n.p0)) : scaled(wk, cos(n.p0));
        case 2:
          return scaled(-wk, *this);
        default:
          return is_cos ? scaled(wk, sin(n.p0)) : scaled(-wk, cos(n.p0));
      }
    }
    case Kind::kPolynomial: {
      if (static_cast<std::size_t>(k) >= n.coeffs.size()) return zero();
      std::vector<double> d(n.coeffs.size() - k);
      for (std::size_t i = 0; i < d.size(); ++i) {
        double f = 1.0;
        for (int j = 1; j <= k; ++j) f *= static_cast<double>(i + j);
        d[i] = f * n.coeffs[i + k];
      }
      return polynomial(std::move(d));
    }
    case Kind::kErfWindow: {
      auto d = std::make_shared<Node>(n);
      d->order += k;
      return TimeFunction(std::move(d));
    }
    case Kind::kSum: {
      std::vector<TimeFunction> terms;
      terms.reserve(n.children.size());
      for (const auto& c : n.children) terms.push_back(c.derivative(k));
      return sum(std::move(terms));
    }
    case Kind::kProduct: {
      // General Leibniz rule.
      std::vector<TimeFunction> terms;
      for (int j = 0; j <= k; ++j) {
        terms.push_back(scaled(binomial(k, j), product(n.children[0].derivative(j),
                                                        n.children[1].derivative(k - j))));
      }
      return sum(std::move(terms));
    }
    case Kind::kScaled:
      return scaled(n.p0, n.children[0].derivative(k));
  }
  return zero();
}

nlohmann::json TimeFunction::to_json() const {
  const Node& n = *node_;
  nlohmann::json j;
  switch (n.kind) {
    case Kind::kZero:
      j["kind"] = "zero";
      break;
    case Kind::kConstant:
      j["kind"] = "constant";
      j["c"] = n.p0;
      break;
    case Kind::kCos:
      j["kind"] = "cos";
      j["omega"] = n.p0;
      break;
    case Kind::kSin:
      j["kind"] = "sin";
      j["omega"] = n.p0;
      break;
    case Kind::kPolynomial:
      j["kind"] = "polynomial";
      j["coeffs"] = n.coeffs;
      break;
    case Kind::kErfWindow:
      j["kind"] = "erf_window";
      j["tau"] = n.p0;
      j["rate"] = n.p1;
      if (n.order != 0) j["order"] = n.order;
      break;
    case Kind::kSum: {
      j["kind"] = "sum";
      j["terms"] = nlohmann::json::array();
      for (const auto& c : n.children) j["terms"].push_back(c.to_json());
      break;
    }
    case Kind::kProduct:
      j["kind"] = "product";
      j["a"] = n.children[0].to_json();
      j["b"] = n.children[1].to_json();
      break;
    case Kind::kScaled:
      j["kind"] = "scaled";
      j["c"] = n.p0;
      j["inner"] = n.children[0].to_json();
      break;
  }
  return j;
}

TimeFunction TimeFunction::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("time function: expected an object with a \"kind\" field");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "zero") return zero();
  if (kind == "constant") return constant(j.at("c").get<double>());
  if (kind == "cos") return cos(j.value("omega", 1.0));
  if (kind == "sin") return sin(j.value("omega", 1.0));
  if (kind == "polynomial") return polynomial(j.at("coeffs").get<std::vector<double>>());
  if (kind == "erf_window") {
    TimeFunction w = erf_window(j.at("tau").get<double>(), j.at("rate").get<double>());
    return w.derivative(j.value("order", 0));
  }
  if (kind == "sum") {
    std::vector<TimeFunction> terms;
    for (const auto& t : j.at("terms")) terms.push_back(from_json(t));
    return sum(std::move(terms));
  }
  if (kind == "product") return product(from_json(j.at("a")), from_json(j.at("b")));
  if (kind == "scaled") return scaled(j.at("c").get<double>(), from_json(j.at("inner")));
  throw std::invalid_argument("time function: unknown kind \"" + kind + "\"");
}

TimeFunction operator+(const TimeFunction& a, const TimeFunction& b) {
  return TimeFunction::sum({a, b});
}

TimeFunction operator-(const TimeFunction& a, const TimeFunction& b) {
  return TimeFunction::sum({a, TimeFunction::scaled(-1.0, b)});
}

TimeFunction operator-(const TimeFunction& a) { return TimeFunction::scaled(-1.0, a); }

TimeFunction operator*(const TimeFunction& a, const TimeFunction& b) {
  return TimeFunction::product(a, b);
}

TimeFunction operator*(double c, const TimeFunction& a) { return TimeFunction::scaled(c, a); }

}  // namespace deltadg
