#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quiverrep/quiver.hpp"

namespace quiverrep {

/// Integer vector indexed by vertices.
using DimVector = std::vector<long long>;

DimVector unit_vector(int n, int i);
bool is_positive(const DimVector& x);   // x >= 0 and x != 0
bool is_zero_vector(const DimVector& x);
DimVector add(const DimVector& a, const DimVector& b);
DimVector sub(const DimVector& a, const DimVector& b);
DimVector negate(const DimVector& x);
std::string dim_to_string(const DimVector& x);

/// Euler matrix E with <x,y> = x^T E y, plus edge multiplicities of the
/// underlying graph (loops included).
struct FormData {
    int n = 0;
    std::vector<std::vector<long long>> euler;
    std::vector<std::vector<long long>> multiplicities; // d_ij, symmetric
};

FormData form_data(const Quiver& q);

long long euler_form(const FormData& f, const DimVector& x, const DimVector& y);
/// (x, y) = <x,y> + <y,x>.
long long sym_form(const FormData& f, const DimVector& x, const DimVector& y);
/// q(x) = (x,x)/2, always an integer.
long long quadratic(const FormData& f, const DimVector& x);

/// sigma_i(x) = x - (x, e_i) e_i; requires no loop at i.
DimVector reflection(const FormData& f, int i, const DimVector& x);

/// Composite of the reflections along the admissible ordering.
DimVector coxeter_transform(const Quiver& q, const DimVector& x);
DimVector coxeter_inverse_transform(const Quiver& q, const DimVector& x);

/// Least h > 0 with c^h = id on Z^n / rad q; Dynkin or Euclidean only.
int coxeter_order(const Quiver& q);

enum class GraphFamily { A, D, E, A_tilde, D_tilde, E_tilde, other };

struct GraphType {
    GraphFamily family = GraphFamily::other;
    int n = 0;                    // subscript: A_n, E_n, A~_m, ...
    std::optional<DimVector> delta;

    bool is_dynkin() const {
        return family == GraphFamily::A || family == GraphFamily::D || family == GraphFamily::E;
    }
    bool is_euclidean() const {
        return family == GraphFamily::A_tilde || family == GraphFamily::D_tilde ||
               family == GraphFamily::E_tilde;
    }
    std::string to_string() const;
};

/// Classifies the underlying graph of q.  Two independent routes must
/// agree: shape matching against the ADE tables, and definiteness of the
/// symmetric form (leading principal minors / radical computation).
/// Throws validation_error for disconnected graphs or on disagreement.
GraphType classify_graph(const Quiver& q);

/// <delta, x> for a Euclidean quiver.
long long defect(const Quiver& q, const DimVector& x);

struct RootSet {
    GraphType type;
    /// Dynkin: all positive roots (negatives are their mirrors).
    /// Euclidean: the finite set { x in Delta : -delta <= x <= delta,
    /// x != 0 }; every root is a delta-shift of one of these.
    std::vector<DimVector> roots;
};

RootSet enumerate_roots(const Quiver& q);

// The ADE catalogue with the vertex numbering used by the diagram tables.
// Dynkin: A_n a path 1..n; D_n has leaves 1, 2 on vertex 3 and the path
// 3..n; E_n is the path 1..n-1 with vertex n attached to vertex 3.
// Euclidean graphs carry delta on the same numbering; orientation of each
// returned quiver points every edge toward its smaller endpoint.
Quiver dynkin_graph(char family, int n);
/// family 'A': cycle on m+1 vertices (m = 0 gives the one-loop quiver);
/// 'D': m+1 vertices, leaves 1,2 on vertex 3, path 3..m-1, leaves m,m+1 on
/// m-1; 'E': m = 6,7,8 per the tables.
Quiver euclidean_graph(char family, int m);

} // namespace quiverrep
