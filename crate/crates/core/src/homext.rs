//! Hom and Ext¹ between uniserials, Sub/Fac closures, and the Auslander–Reiten quiver of `A_n`.

use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::algebra::{Algebra, ModuleSum, Uniserial};
use crate::error::Result;
use crate::indecset::IndecSet;

/// `dim Hom(X, Y)`: the number of lengths `k` for which the length-`k` quotient of `X`
/// coincides with the length-`k` submodule of `Y`. Over a linear quiver this is 0 or 1.
pub fn hom_dim(alg: &Algebra, x: &Uniserial, y: &Uniserial) -> usize {
    (1..=x.len.min(y.len))
        .filter(|&k| alg.vertex_after(y.top, y.len - k) == Some(x.top))
        .count()
}

/// Whether a non-split sequence `0 -> sub -> E -> quot -> 0` exists.
///
/// With `quot = M[i', j']` and `sub = M[i, j]` this happens exactly when
/// `i' < i <= j' + 1 <= j` and `M[i', j]` exists, i.e. `j <= i' + c_i' - 1`.
pub fn ext1_nonzero(alg: &Algebra, quot: &Uniserial, sub: &Uniserial) -> Result<bool> {
    alg.require_linear("ext1_nonzero")?;
    alg.check(quot)?;
    alg.check(sub)?;
    Ok(ext1_linear(alg, quot, sub))
}

fn ext1_linear(alg: &Algebra, quot: &Uniserial, sub: &Uniserial) -> bool {
    let (qi, qj) = quot.bounds();
    let (si, sj) = sub.bounds();
    let reach = qi + alg.c(qi) - 1;
    qi < si && si <= qj + 1 && qj < sj && sj <= reach
}

/// Middle term of the non-split extension of `quot` by `sub`: `M[i', j] ⊕ M[i, j']`,
/// the second summand vanishing when the two intervals are adjacent.
pub fn extension_middle(
    alg: &Algebra,
    quot: &Uniserial,
    sub: &Uniserial,
) -> Result<Option<ModuleSum>> {
    if !ext1_nonzero(alg, quot, sub)? {
        return Ok(None);
    }
    let (qi, qj) = quot.bounds();
    let (si, sj) = sub.bounds();
    let mut parts = vec![Uniserial::interval(qi, sj)];
    if si <= qj {
        parts.push(Uniserial::interval(si, qj));
    }
    Ok(Some(ModuleSum::new(parts)))
}

/// All uniserial submodules of members of `t`.
pub fn sub_closure(alg: &Algebra, t: IndecSet) -> IndecSet {
    let mut out = IndecSet::EMPTY;
    for u in t.uniserials(alg) {
        for r in 0..u.len {
            let v = Uniserial::new(
                alg.vertex_after(u.top, r).expect("submodule top"),
                u.len - r,
            );
            out.insert(alg.index_of(&v).expect("submodule is a module"));
        }
    }
    out
}

/// All uniserial quotients of members of `t`.
pub fn fac_closure(alg: &Algebra, t: IndecSet) -> IndecSet {
    let mut out = IndecSet::EMPTY;
    for u in t.uniserials(alg) {
        for len in 1..=u.len {
            out.insert(
                alg.index_of(&Uniserial::new(u.top, len))
                    .expect("quotient is a module"),
            );
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ArrowKind {
    /// `M[i,j] -> M[i-1,j]`, a monomorphism.
    Plus,
    /// `M[i,j] -> M[i,j-1]`, an epimorphism.
    Minus,
}

/// An irreducible map of `A_n`, named by its source interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArArrow {
    pub kind: ArrowKind,
    pub i: usize,
    pub j: usize,
}

impl ArArrow {
    pub fn source(&self) -> Uniserial {
        Uniserial::interval(self.i, self.j)
    }

    pub fn target(&self) -> Uniserial {
        match self.kind {
            ArrowKind::Plus => Uniserial::interval(self.i - 1, self.j),
            ArrowKind::Minus => Uniserial::interval(self.i, self.j - 1),
        }
    }
}

impl fmt::Display for ArArrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.kind {
            ArrowKind::Plus => '+',
            ArrowKind::Minus => '-',
        };
        write!(f, "f{sign}[{},{}]", self.i, self.j)
    }
}

impl Serialize for ArArrow {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn node_label(u: &Uniserial) -> String {
    let (i, j) = u.bounds();
    format!("M[{i},{j}]")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArQuiver {
    pub nodes: Vec<Uniserial>,
    pub arrows: Vec<ArArrow>,
}

impl ArQuiver {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph ar {\n");
        for u in &self.nodes {
            let _ = writeln!(out, "  \"{}\";", node_label(u));
        }
        for a in &self.arrows {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{a}\"];",
                node_label(&a.source()),
                node_label(&a.target())
            );
        }
        out.push_str("}\n");
        out
    }
}

/// The AR quiver of the hereditary linear algebra `A_n`.
pub fn ar_quiver(alg: &Algebra) -> Result<ArQuiver> {
    alg.require_hereditary("ar_quiver")?;
    let n = alg.n();
    let mut nodes = Vec::new();
    let mut arrows = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            nodes.push(Uniserial::interval(i, j));
            if i >= 2 {
                arrows.push(ArArrow {
                    kind: ArrowKind::Plus,
                    i,
                    j,
                });
            }
            if j > i {
                arrows.push(ArArrow {
                    kind: ArrowKind::Minus,
                    i,
                    j,
                });
            }
        }
    }
    nodes.sort_unstable();
    arrows.sort_unstable();
    Ok(ArQuiver { nodes, arrows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraDescriptor;

    fn iv(i: usize, j: usize) -> Uniserial {
        Uniserial::interval(i, j)
    }

    #[test]
    fn hom_examples() {
        let a = Algebra::linear(4).unwrap();
        assert_eq!(hom_dim(&a, &iv(2, 4), &iv(1, 3)), 1);
        assert_eq!(hom_dim(&a, &iv(1, 1), &iv(2, 2)), 0);
        assert_eq!(hom_dim(&a, &iv(1, 4), &iv(1, 1)), 1);
        assert_eq!(hom_dim(&a, &iv(1, 1), &iv(1, 4)), 0);
    }

    #[test]
    fn hom_winds_on_cycles() {
        let a = Algebra::new(AlgebraDescriptor::cyclic(2, 1, 4)).unwrap();
        // P(1) has composition factors 1,2,1,2; its endomorphisms are spanned by id and the
        // map killing the top two factors.
        let p1 = a.projective(1).unwrap();
        assert_eq!(p1.len, 4);
        assert_eq!(hom_dim(&a, &p1, &p1), 2);
    }

    #[test]
    fn ext_examples() {
        let a4 = Algebra::linear(4).unwrap();
        assert!(ext1_nonzero(&a4, &iv(1, 2), &iv(3, 4)).unwrap());
        assert_eq!(
            extension_middle(&a4, &iv(1, 2), &iv(3, 4))
                .unwrap()
                .unwrap()
                .to_string(),
            "1-4"
        );
        assert!(!ext1_nonzero(&a4, &iv(1, 1), &iv(3, 3)).unwrap());
        assert!(!ext1_nonzero(&a4, &iv(3, 4), &iv(1, 2)).unwrap());
        let ab = Algebra::new(AlgebraDescriptor::linear_with_relation(3, 1, 2)).unwrap();
        assert!(!ext1_nonzero(&ab, &iv(1, 1), &iv(2, 3)).unwrap());
        assert!(ext1_nonzero(&ab, &iv(1, 1), &iv(2, 2)).unwrap());
        let cyc = Algebra::new(AlgebraDescriptor::cyclic(4, 1, 20)).unwrap();
        assert!(ext1_nonzero(&cyc, &Uniserial::new(1, 1), &Uniserial::new(2, 1)).is_err());
    }

    #[test]
    fn overlapping_extension_has_two_summands() {
        let a3 = Algebra::linear(3).unwrap();
        let mid = extension_middle(&a3, &iv(1, 2), &iv(2, 3))
            .unwrap()
            .unwrap();
        assert_eq!(mid, ModuleSum::new(vec![iv(1, 3), iv(2, 2)]));
    }

    #[test]
    fn closures_of_projective() {
        let a = Algebra::linear(4).unwrap();
        let p1 = IndecSet::from_uniserials(&a, &[iv(1, 4)]).unwrap();
        let sub: Vec<_> = (1..=4).map(|k| iv(k, 4)).collect();
        let fac: Vec<_> = (1..=4).map(|k| iv(1, k)).collect();
        assert_eq!(
            sub_closure(&a, p1),
            IndecSet::from_uniserials(&a, &sub).unwrap()
        );
        assert_eq!(
            fac_closure(&a, p1),
            IndecSet::from_uniserials(&a, &fac).unwrap()
        );
        let s2 = IndecSet::from_uniserials(&a, &[iv(2, 2)]).unwrap();
        assert_eq!(sub_closure(&a, s2), s2);
    }

    #[test]
    fn ar_quiver_counts() {
        let q2 = ar_quiver(&Algebra::linear(2).unwrap()).unwrap();
        assert_eq!((q2.nodes.len(), q2.arrows.len()), (3, 2));
        let a4 = Algebra::linear(4).unwrap();
        let q4 = ar_quiver(&a4).unwrap();
        assert_eq!((q4.nodes.len(), q4.arrows.len()), (10, 12));
        let mut indec = a4.indecomposables();
        indec.sort_unstable();
        assert_eq!(q4.nodes, indec);
        for arrow in &q4.arrows {
            assert_eq!(hom_dim(&a4, &arrow.source(), &arrow.target()), 1);
        }
        let ab = Algebra::new(AlgebraDescriptor::linear_with_relation(3, 1, 2)).unwrap();
        assert!(ar_quiver(&ab).is_err());
    }

    #[test]
    fn dot_export() {
        let dot = ar_quiver(&Algebra::linear(2).unwrap()).unwrap().to_dot();
        assert_eq!(
            dot,
            "digraph ar {\n  \"M[1,1]\";\n  \"M[1,2]\";\n  \"M[2,2]\";\n  \
             \"M[2,2]\" -> \"M[1,2]\" [label=\"f+[2,2]\"];\n  \
             \"M[1,2]\" -> \"M[1,1]\" [label=\"f-[1,2]\"];\n}\n"
        );
    }
}
