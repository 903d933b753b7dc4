#include "chromabound/families.hpp"

#include <numeric>
#include <string>

#include "chromabound/errors.hpp"

namespace chromabound {

namespace {

class EdgeList {
 public:
  explicit EdgeList(int vertices) : next_(vertices) {}

  int add_vertex() { return next_++; }
  void add_edge(int u, int v) { edges_.emplace_back(u, v); }

  /// Path of `length` edges from `from` to `to` through fresh vertices.
  void add_path(int from, int to, int length) {
    int prev = from;
    for (int i = 1; i < length; ++i) {
      const int w = add_vertex();
      add_edge(prev, w);
      prev = w;
    }
    add_edge(prev, to);
  }

  int vertices() const { return next_; }
  Graph build() const { return Graph(next_, edges_); }

 private:
  int next_;
  std::vector<Edge> edges_;
};

const Poly& x_poly() {
  static const Poly kX = Poly::x();
  return kX;
}

const Poly& x_minus_1() {
  static const Poly kXm1 = Poly::linear_factor(1);
  return kXm1;
}

Rational minus_one_power(long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

// (x-1)^s + (-1)^s (x-1)
Poly cycle_like(int s) { return pow(x_minus_1(), static_cast<unsigned>(s)) + minus_one_power(s) * x_minus_1(); }

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidSpec(message);
}

}  // namespace

void validate(const ThetaSpec& spec) {
  require(spec.s1 >= 1 && spec.s2 >= 1 && spec.s3 >= 1, "theta path sizes must be >= 1");
}

void validate(const SK4Spec& spec) {
  require(spec.s1 >= 1 && spec.s2 >= 1 && spec.s3 >= 1, "SK4 path sizes must be >= 1");
}

void validate(const K3tSpec& spec) {
  require(spec.t >= 1, "K3t needs t >= 1");
  const auto t = static_cast<std::size_t>(spec.t);
  require(spec.a.size() == t && spec.b.size() == t && spec.c.size() == t, "K3t size lists must all have length t");
  for (std::size_t i = 0; i < t; ++i) {
    require(spec.a[i] >= 1 && spec.b[i] >= 1 && spec.c[i] >= 1, "K3t path sizes must be >= 1");
  }
}

void validate(const CactusSpec& spec) {
  require(spec.bridges >= 0, "cactus bridge count must be >= 0");
  for (int len : spec.cycles) require(len >= 3, "cactus cycle lengths must be >= 3");
  const std::size_t blocks = spec.cycles.size() + static_cast<std::size_t>(spec.bridges);
  if (spec.attachment.empty()) return;
  require(blocks >= 1 && spec.attachment.size() == blocks - 1,
          "cactus attachment needs one entry per block after the first");
  int built = spec.cycles.empty() ? 2 : spec.cycles[0];
  for (std::size_t j = 1; j < blocks; ++j) {
    const int at = spec.attachment[j - 1];
    require(at >= 0 && at < built, "cactus attachment vertex " + std::to_string(at) + " not yet built");
    built += j < spec.cycles.size() ? spec.cycles[j] - 1 : 1;
  }
}

void validate(const CStarSpec& spec) {
  require(spec.k >= 1, "C* clique size must be >= 1");
  require(spec.n >= spec.k, "C* order must be >= clique size");
  if (spec.attachment.empty()) return;
  require(spec.attachment.size() == static_cast<std::size_t>(spec.n - spec.k),
          "C* attachment needs one parent per extra vertex");
  for (std::size_t i = 0; i < spec.attachment.size(); ++i) {
    const int parent = spec.attachment[i];
    require(parent >= 0 && parent < spec.k + static_cast<int>(i), "C* parent must precede its child");
  }
}

int cactus_order(const CactusSpec& spec) {
  const int p = static_cast<int>(spec.cycles.size());
  return spec.bridges - p + 1 + std::accumulate(spec.cycles.begin(), spec.cycles.end(), 0);
}

int k3t_order(const K3tSpec& spec) {
  int total = 0;
  for (int i = 0; i < spec.t; ++i) {
    total += spec.a[static_cast<std::size_t>(i)] + spec.b[static_cast<std::size_t>(i)] + spec.c[static_cast<std::size_t>(i)];
  }
  return total - 2 * spec.t + 3;
}

Graph build_cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  EdgeList g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g.build();
}

Graph build_complete(int k) {
  require(k >= 1, "complete graph needs k >= 1");
  EdgeList g(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
  }
  return g.build();
}

Graph build_path(int edges) {
  require(edges >= 0, "path length must be >= 0");
  EdgeList g(edges + 1);
  for (int i = 0; i < edges; ++i) g.add_edge(i, i + 1);
  return g.build();
}

Graph build_theta(const ThetaSpec& spec) {
  validate(spec);
  EdgeList g(2);
  for (int s : {spec.s1, spec.s2, spec.s3}) g.add_path(0, 1, s);
  return g.build();
}

Graph build_sk4(const SK4Spec& spec) {
  validate(spec);
  // Corner 0 reaches the triangle 1, 2, 3 through the subdivided paths.
  EdgeList g(4);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(1, 3);
  g.add_path(0, 1, spec.s1);
  g.add_path(0, 2, spec.s2);
  g.add_path(0, 3, spec.s3);
  return g.build();
}

Graph build_k3t(const K3tSpec& spec) {
  validate(spec);
  EdgeList g(3 + spec.t);
  for (int i = 0; i < spec.t; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    g.add_path(0, 3 + i, spec.a[idx]);
    g.add_path(1, 3 + i, spec.b[idx]);
    g.add_path(2, 3 + i, spec.c[idx]);
  }
  return g.build();
}

Graph build_cactus(const CactusSpec& spec) {
  validate(spec);
  EdgeList g(1);
  const std::size_t blocks = spec.cycles.size() + static_cast<std::size_t>(spec.bridges);
  int newest = 0;
  for (std::size_t j = 0; j < blocks; ++j) {
    const int at = (j == 0) ? 0 : (spec.attachment.empty() ? newest : spec.attachment[j - 1]);
    if (j < spec.cycles.size()) {
      int prev = at;
      for (int i = 1; i < spec.cycles[j]; ++i) {
        const int w = g.add_vertex();
        g.add_edge(prev, w);
        prev = w;
      }
      g.add_edge(prev, at);
      newest = prev;
    } else {
      const int w = g.add_vertex();
      g.add_edge(at, w);
      newest = w;
    }
  }
  return g.build();
}

Graph build_cstar(const CStarSpec& spec) {
  validate(spec);
  EdgeList g(spec.n);
  for (int i = 0; i < spec.k; ++i) {
    for (int j = i + 1; j < spec.k; ++j) g.add_edge(i, j);
  }
  for (int v = spec.k; v < spec.n; ++v) {
    const int parent = spec.attachment.empty() ? v - 1 : spec.attachment[static_cast<std::size_t>(v - spec.k)];
    g.add_edge(parent, v);
  }
  return g.build();
}

Graph build_wheel(int t) {
  require(t >= 3, "wheel needs t >= 3 spokes");
  EdgeList g(t + 1);
  for (int i = 1; i <= t; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i % t + 1);
  }
  return g.build();
}

Graph build_vt(int t) {
  require(t >= 3, "V_t needs t >= 3");
  auto u = [](int i) { return i - 1; };
  auto v = [t](int i) { return t + i - 2; };
  EdgeList g(2 * t - 2);
  for (int i = 1; i <= t - 1; ++i) g.add_edge(u(i), u(i + 1));
  for (int i = 2; i <= t - 2; ++i) g.add_edge(v(i), v(i + 1));
  for (int i = 2; i <= t - 1; ++i) g.add_edge(u(i), v(i));
  g.add_edge(u(1), v(2));
  g.add_edge(u(t), v(t - 1));
  g.add_edge(u(1), u(t));
  return g.build();
}

Poly theta_poly(const ThetaSpec& spec) {
  validate(spec);
  const int s[3] = {spec.s1, spec.s2, spec.s3};
  Poly outer = Poly::constant(1);
  Poly inner = Poly::constant(1);
  for (int si : s) {
    outer *= cycle_like(si + 1);
    inner *= cycle_like(si);
  }
  const Poly x_xm1 = x_poly() * x_minus_1();
  return exact_div(outer, x_xm1 * x_xm1) + exact_div(inner, x_poly() * x_poly());
}

Poly theta_poly_shifted(const ThetaSpec& spec) {
  validate(spec);
  const int s1 = spec.s1, s2 = spec.s2, s3 = spec.s3;
  const int total = s1 + s2 + s3;
  Poly bracket = Poly::monomial(1, static_cast<std::size_t>(total - 1));
  bracket += Poly::monomial(minus_one_power(s1 + s2), static_cast<std::size_t>(s3));
  bracket += Poly::monomial(minus_one_power(s1 + s3), static_cast<std::size_t>(s2));
  bracket += Poly::monomial(minus_one_power(s2 + s3), static_cast<std::size_t>(s1));
  bracket += minus_one_power(total) * x_minus_1();
  return exact_div(x_poly() * bracket, Poly::linear_factor(-1));
}

Poly sk4_poly(const SK4Spec& spec) {
  validate(spec);
  return theta_poly({spec.s1 + 1, spec.s2, spec.s3 + 1}) - theta_poly({spec.s1, spec.s2 + 1, spec.s3});
}

Poly k3t_poly(const K3tSpec& spec) {
  validate(spec);
  Poly pa = Poly::constant(1), pb = Poly::constant(1), pc = Poly::constant(1);
  Poly plain = Poly::constant(1), sk4 = Poly::constant(1);
  for (int i = 0; i < spec.t; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const int a = spec.a[idx], b = spec.b[idx], c = spec.c[idx];
    pa *= theta_poly({a + 1, b, c});
    pb *= theta_poly({a, b + 1, c});
    pc *= theta_poly({a, b, c + 1});
    plain *= theta_poly({a, b, c});
    sk4 *= sk4_poly({a, b, c});
  }
  const auto reps = static_cast<unsigned>(spec.t - 1);
  const Poly edge_clique = pow(falling_factorial(2), reps);
  return exact_div(pa, edge_clique) + exact_div(pb, edge_clique) + exact_div(pc, edge_clique) +
         exact_div(plain, pow(x_poly(), reps)) + exact_div(sk4, pow(falling_factorial(3), reps));
}

Poly cactus_poly(const CactusSpec& spec) {
  validate(spec);
  const int p = static_cast<int>(spec.cycles.size());
  Poly numerator = pow(x_minus_1(), static_cast<unsigned>(spec.bridges + p));
  for (int len : spec.cycles) {
    numerator *= pow(x_minus_1(), static_cast<unsigned>(len - 1)) + Poly::constant(minus_one_power(len));
  }
  if (p == 0) return numerator * x_poly();
  return exact_div(numerator, pow(x_poly(), static_cast<unsigned>(p - 1)));
}

Poly cstar_poly(const CStarSpec& spec) {
  validate(spec);
  return falling_factorial(static_cast<unsigned>(spec.k)) * pow(x_minus_1(), static_cast<unsigned>(spec.n - spec.k));
}

Poly wheel_poly(int t) {
  require(t >= 3, "wheel needs t >= 3 spokes");
  const Poly xm2 = Poly::linear_factor(2);
  return x_poly() * (pow(xm2, static_cast<unsigned>(t)) + minus_one_power(t) * xm2);
}

CactusWitness cactus_witness(CactusHost host, int t) {
  if (t < 4 || t % 2 != 0) throw UnsupportedHost("cactus witness needs an even t >= 4, got " + std::to_string(t));
  const int cycles = t / 2;
  CactusWitness w;
  if (host == CactusHost::Wheel) {
    // Triangles v0 v_{2i-1} v_{2i} sharing the hub; labels match W_t.
    w.spec.cycles.assign(static_cast<std::size_t>(cycles), 3);
    w.spec.attachment.assign(static_cast<std::size_t>(cycles - 1), 0);
    w.cactus = build_cactus(w.spec);
    w.embedding.resize(static_cast<std::size_t>(w.cactus.order()));
    std::iota(w.embedding.begin(), w.embedding.end(), 0);
    return w;
  }
  // End triangles, quadrilaterals u_i u_{i+1} v_{i+1} v_i for odd i in
  // 3..t-3, and bridges u_{2j} u_{2j+1}; labels match V_t.
  auto u = [](int i) { return i - 1; };
  auto v = [t](int i) { return t + i - 2; };
  std::vector<Edge> edges{{u(1), u(2)}, {u(2), v(2)}, {u(1), v(2)}};
  w.spec.cycles.push_back(3);
  for (int i = 3; i <= t - 3; i += 2) {
    edges.insert(edges.end(), {{u(i), u(i + 1)}, {u(i + 1), v(i + 1)}, {v(i), v(i + 1)}, {u(i), v(i)}});
    w.spec.cycles.push_back(4);
  }
  edges.insert(edges.end(), {{u(t - 1), u(t)}, {u(t - 1), v(t - 1)}, {u(t), v(t - 1)}});
  w.spec.cycles.push_back(3);
  for (int j = 1; j < cycles; ++j) edges.emplace_back(u(2 * j), u(2 * j + 1));
  w.spec.bridges = cycles - 1;
  w.cactus = Graph(2 * t - 2, edges);
  w.embedding.resize(static_cast<std::size_t>(w.cactus.order()));
  std::iota(w.embedding.begin(), w.embedding.end(), 0);
  return w;
}

}  // namespace chromabound
