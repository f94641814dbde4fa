#pragma once

#include <string>
#include <vector>

#include "fock.hpp"
#include "words.hpp"

namespace paraq {

enum class SigmaSign : std::uint8_t { plus, minus };
const char* sigma_name(SigmaSign s);

// Signs chosen (or auto-selected) for the two twisted relation families.
struct SigmaChoice {
  SigmaSign eq_i{SigmaSign::plus};
  SigmaSign eq_istar{SigmaSign::plus};
};

// A named element expected to vanish in every representation of the
// algebra, instantiated at a concrete index tuple.
struct RelationInstance {
  std::string name;
  Family family{Family::parafermi};
  std::vector<int> indices;
  FreeElem element;
  std::string ref;
};

// eps_ij = +1 for i<j, 0 for i=j, -1 for i>j.
int epsilon_sign(int i, int j);
// Structure tensor theta_{i,j;k}: antisymmetric in i,j; supported on
// i<k<j (+1) and i>k>j (-1) only.
int theta_coeff(int i, int j, int k);
int sigma_coeff(int i, int j, SigmaSign s);

// The four classical trilinear families, all q-independent coefficients,
// enumerated exhaustively over 1 <= i,j,k <= n.
std::vector<RelationInstance> classical_relations(int n, Family f);

// Cartan sector, the mixed trilinear families with their theta/sigma
// twists, and the two homogeneous cubic families.
std::vector<RelationInstance> theorem1_relations(int n, Family f, SigmaChoice sc);
// The twisted families alone, used by the sign auto-selection scan.
std::vector<RelationInstance> relations_eq_i(int n, Family f, SigmaSign s);
std::vector<RelationInstance> relations_eq_istar(int n, Family f, SigmaSign s);

// Chevalley ladder generators expressed through the oscillator letters,
// and the oscillator letters recovered as nested q-commutators of those.
FreeElem chevalley_E(int n, Family f, int i, bool positive);
FreeElem a_from_chevalley(int n, Family f, int i, bool plus);
// Cartan word q^{e H_i} with H_i = h_i - h_{i+1} (i<n), H_n = h_n.
FreeElem chevalley_cartan(int n, Family f, int i, int e);
// Symmetrized Cartan matrix of the B_n / osp-type root system.
int cartan_pairing(int n, int i, int j);

std::vector<RelationInstance> chevalley_relations(int n, Family f);

// Triangular matrix of algebra elements whose entries generate the
// algebra; indices run 1..n+1, stored 0-based.
std::vector<std::vector<FreeElem>> lmatrix_plus(int n, Family f);
std::vector<std::vector<FreeElem>> lmatrix_minus(int n, Family f, StarConvention sc);

// Formal structure asserts on the two matrices (triangularity, diagonal,
// star-transpose relation); representation-independent.
std::vector<CheckResult> lmatrix_structure_checks(int n, Family f,
                                                  StarConvention sc);

}  // namespace paraq
