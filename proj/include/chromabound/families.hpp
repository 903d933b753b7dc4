#pragma once

#include <vector>

#include "chromabound/graph.hpp"
#include "chromabound/poly.hpp"

namespace chromabound {

/// Two terminals joined by three internally disjoint paths with s1, s2, s3
/// edges. Two or more unit paths collapse to a single edge when built.
struct ThetaSpec {
  int s1 = 1, s2 = 1, s3 = 1;
};

/// K4 with the three edges at one corner replaced by paths of s1, s2, s3 edges.
struct SK4Spec {
  int s1 = 1, s2 = 1, s3 = 1;
};

/// K_{3,t} with parts {a,b,c} and {v_1..v_t}; the edges a v_i, b v_i, c v_i
/// become paths of a[i], b[i], c[i] edges.
struct K3tSpec {
  int t = 1;
  std::vector<int> a, b, c;
};

/// Cactus with the given cycle lengths and `bridges` bridge blocks. Blocks are
/// laid out cycles first, then bridges. `attachment`, when non-empty, has one
/// entry per block after the first naming the already-built vertex the block
/// hangs from; the default hangs each block from the newest vertex.
struct CactusSpec {
  std::vector<int> cycles;
  int bridges = 0;
  std::vector<int> attachment;
};

/// K_k on vertices 0..k-1 plus n-k tree vertices; `attachment[i]` is the
/// parent of vertex k+i and must be smaller than k+i. Default: a path hanging
/// from vertex k-1.
struct CStarSpec {
  int k = 4;
  int n = 4;
  std::vector<int> attachment;
};

enum class CactusHost { Wheel, Ladder };

/// Cactus subgraph of a host graph plus the vertex map certifying it.
struct CactusWitness {
  Graph cactus;
  std::vector<int> embedding;
  CactusSpec spec;
};

Graph build_cycle(int n);
Graph build_complete(int k);
Graph build_path(int edges);
Graph build_theta(const ThetaSpec& spec);
Graph build_sk4(const SK4Spec& spec);
Graph build_k3t(const K3tSpec& spec);
Graph build_cactus(const CactusSpec& spec);
Graph build_cstar(const CStarSpec& spec);
/// Hub 0, rim 1..t.
Graph build_wheel(int t);
/// The ladder-like V_t: u_1..u_t are 0..t-1 and v_2..v_{t-1} are t..2t-3.
Graph build_vt(int t);

void validate(const ThetaSpec& spec);
void validate(const SK4Spec& spec);
void validate(const K3tSpec& spec);
void validate(const CactusSpec& spec);
void validate(const CStarSpec& spec);

/// Order of the built cactus: bridges - p + 1 + sum(cycles).
int cactus_order(const CactusSpec& spec);
int k3t_order(const K3tSpec& spec);

Poly theta_poly(const ThetaSpec& spec);
/// pi(theta, x + 1) from its closed form, as a polynomial in x.
Poly theta_poly_shifted(const ThetaSpec& spec);
Poly sk4_poly(const SK4Spec& spec);
Poly k3t_poly(const K3tSpec& spec);
Poly cactus_poly(const CactusSpec& spec);
/// (x)_k (x-1)^(n-k), the polynomial shared by every C*_k(n) member.
Poly cstar_poly(const CStarSpec& spec);
/// x ((x-2)^t + (-1)^t (x-2)).
Poly wheel_poly(int t);

/// Cactus with t/2 cycles inside W_t or V_t for even t >= 4.
CactusWitness cactus_witness(CactusHost host, int t);

}  // namespace chromabound
