//! Explicit representations of the bound quiver over the two-element field.
//!
//! Arrow `a` (0-based) runs from vertex `a` to vertex `a + 1`, wrapping for cyclic quivers.
//! Its matrix has shape `dims[target] x dims[source]` and acts on column vectors.

use crate::algebra::{Algebra, ModuleSum, Shape};
use crate::oracle::f2::F2Matrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatRep {
    pub dims: Vec<usize>,
    pub maps: Vec<F2Matrix>,
}

pub fn arrow_count(alg: &Algebra) -> usize {
    match alg.shape() {
        Shape::Linear => alg.n() - 1,
        Shape::Cyclic => alg.n(),
    }
}

/// 0-based target vertex of arrow `a`.
pub fn arrow_target(alg: &Algebra, a: usize) -> usize {
    (a + 1) % alg.n()
}

/// The paths that generate the admissible ideal: from each vertex `i`, the path of `c_i`
/// arrows when the quiver has one. Each path is a list of 0-based arrows in travel order.
pub fn relation_paths(alg: &Algebra) -> Vec<Vec<usize>> {
    let n = alg.n();
    (1..=n)
        .filter(|&i| alg.vertex_after(i, alg.c(i)).is_some())
        .map(|i| (0..alg.c(i)).map(|k| (i - 1 + k) % n).collect())
        .collect()
}

impl MatRep {
    pub fn zero(alg: &Algebra) -> Self {
        let maps = (0..arrow_count(alg))
            .map(|_| F2Matrix::zeros(0, 0))
            .collect();
        MatRep {
            dims: vec![0; alg.n()],
            maps,
        }
    }

    pub fn dimension(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Block-diagonal sum of the companion representations of the summands: the uniserial
    /// `(i, l)` has basis `e_0..e_(l-1)`, `e_k` at the `k`-th vertex after `i`, and arrows send
    /// `e_k` to `e_(k+1)`.
    pub fn from_module(alg: &Algebra, m: &ModuleSum) -> Self {
        let n = alg.n();
        let mut dims = vec![0usize; n];
        // positions[s][k] = (0-based vertex, index inside that vertex)
        let mut positions = Vec::new();
        for u in m.summands() {
            let mut pos = Vec::with_capacity(u.len);
            for k in 0..u.len {
                let v = alg.vertex_after(u.top, k).expect("summand fits the quiver") - 1;
                pos.push((v, dims[v]));
                dims[v] += 1;
            }
            positions.push(pos);
        }
        let mut maps: Vec<F2Matrix> = (0..arrow_count(alg))
            .map(|a| F2Matrix::zeros(dims[arrow_target(alg, a)], dims[a]))
            .collect();
        for pos in &positions {
            for w in pos.windows(2) {
                let ((v, from), (_, to)) = (w[0], w[1]);
                maps[v].set(to, from, true);
            }
        }
        MatRep { dims, maps }
    }

    /// The matrix of a path given as arrows in travel order.
    pub fn path_matrix(&self, path: &[usize]) -> F2Matrix {
        let start = path.first().copied().unwrap_or(0);
        let mut acc = F2Matrix::identity(self.dims[start]);
        for &a in path {
            debug_assert_eq!(acc.rows(), self.dims[a]);
            acc = self.maps[a].mul(&acc);
        }
        acc
    }

    pub fn satisfies_relations(&self, alg: &Algebra) -> bool {
        relation_paths(alg)
            .iter()
            .all(|p| self.path_matrix(p).is_zero())
    }
}

/// `dim Hom(X, Y)`: the nullity of `f_w X_a = Y_a f_v` over all arrows `a: v -> w`.
pub fn hom_space_dim(alg: &Algebra, x: &MatRep, y: &MatRep) -> usize {
    let n = alg.n();
    let mut offset = vec![0usize; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + y.dims[v] * x.dims[v];
    }
    let vars = offset[n];
    if vars == 0 {
        return 0;
    }
    let var = |v: usize, r: usize, c: usize| offset[v] + r * x.dims[v] + c;
    let mut system = F2Matrix::zeros(0, vars);
    for a in 0..arrow_count(alg) {
        let (v, w) = (a, arrow_target(alg, a));
        let (xa, ya) = (&x.maps[a], &y.maps[a]);
        for r in 0..y.dims[w] {
            for c in 0..x.dims[v] {
                let mut row = F2Matrix::zeros(1, vars);
                for k in 0..x.dims[w] {
                    if xa.get(k, c) {
                        row.flip(0, var(w, r, k));
                    }
                }
                for k in 0..y.dims[v] {
                    if ya.get(r, k) {
                        row.flip(0, var(v, k, c));
                    }
                }
                system.push_row(row.row(0));
            }
        }
    }
    vars - system.rank()
}
